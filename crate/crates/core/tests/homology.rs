use std::sync::Arc;

use homcalc::functor::{hom_functor, tensor_functor, Complex};
use homcalc::homology::{
    long_exact_cohomology_seq, long_exact_homology_seq, pullback, resolve_short_exact_seq, verify_exactness,
    ShortExactSeq,
};
use homcalc::{canonical_decomposition, presentations_equal, Functor, Mat, Morphism, Obj, Presentation, Ring};

fn z() -> Ring {
    Ring::integers()
}

fn cyclic(n: i64) -> Arc<Presentation> {
    Arc::new(Presentation::from_ints(&z(), 1, &[&[n]]))
}

fn free(n: usize) -> Arc<Presentation> {
    Arc::new(Presentation::free(&z(), n))
}

fn mor(s: &Arc<Presentation>, t: &Arc<Presentation>, rows: &[&[i64]]) -> Morphism {
    Morphism::new(s.clone(), t.clone(), Mat::from_ints(&z(), rows)).unwrap()
}

fn order(p: &Presentation) -> Option<i64> {
    canonical_decomposition(p).unwrap().order().map(|o| i64::try_from(o).unwrap())
}

fn tensor_with(n: i64) -> Functor {
    tensor_functor().fix(1, Obj::Module(cyclic(n))).unwrap()
}

fn z2_z4_z2() -> ShortExactSeq {
    ShortExactSeq::new(mor(&cyclic(2), &cyclic(4), &[&[2]]), mor(&cyclic(4), &cyclic(2), &[&[1]])).unwrap()
}

#[test]
fn pullbacks() {
    let z1 = free(1);
    let pb = pullback(&mor(&z1, &z1, &[&[2]]), &mor(&z1, &z1, &[&[3]])).unwrap();
    assert_eq!(canonical_decomposition(&pb.object).unwrap().rank, 1);
    // {(a, b) : 3a = 2b} = Z·(2, 3)
    let (a, b) = (pb.to_a.matrix().get(0, 0).clone(), pb.to_b_prime.matrix().get(0, 0).clone());
    let ints = |e: &homcalc::Elem| z().format_elem(e).parse::<i64>().unwrap();
    assert!(matches!((ints(&a), ints(&b)), (2, 3) | (-2, -3)));

    let z6 = cyclic(6);
    let phi = mor(&z1, &z6, &[&[2]]);
    let pb = pullback(&Morphism::identity(z6.clone()), &phi).unwrap();
    assert!(presentations_equal(&pb.object, &z1));
    let zero = Arc::new(Presentation::zero(&z()));
    let pb = pullback(&Morphism::zero(zero, z6.clone()), &mor(&cyclic(4), &z6, &[&[3]])).unwrap();
    assert_eq!(order(&pb.object), Some(2));
}

#[test]
fn short_exact_sequences_are_checked() {
    assert!(ShortExactSeq::new(mor(&cyclic(2), &cyclic(4), &[&[2]]), mor(&cyclic(4), &cyclic(4), &[&[1]])).is_err());
    assert!(ShortExactSeq::new(mor(&free(1), &free(1), &[&[2]]), mor(&free(1), &cyclic(4), &[&[1]])).is_err());
    let r = resolve_short_exact_seq(&z2_z4_z2(), 3).unwrap();
    for i in 0..3 {
        assert_eq!(r.middle_free(i).gens(), r.left_free(i).gens() + r.right_free(i).gens());
    }
    let split = ShortExactSeq::split(free(1), free(1)).unwrap();
    let r = resolve_short_exact_seq(&split, 2).unwrap();
    assert!(r.middle_d(1).unwrap().matrix().rows() == 0 || r.middle_d(1).unwrap().matrix().is_zero());
}

#[test]
fn tor_sequence_of_the_nonsplit_extension() {
    let les = long_exact_homology_seq(&tensor_with(2), &z2_z4_z2(), 1).unwrap();
    let orders: Vec<_> = les.terms.iter().map(|t| order(&t.module)).collect();
    assert_eq!(orders, vec![Some(2); 6].into_iter().chain([Some(1)]).collect::<Vec<_>>());
    assert_eq!(les.connecting_maps().len(), 1);
    assert!(!les.connecting_maps()[0].is_zero().unwrap());
}

#[test]
fn split_sequences_have_zero_connecting_maps() {
    for n in [2, 3, 4] {
        let s = ShortExactSeq::split(cyclic(4), cyclic(6)).unwrap();
        let les = long_exact_homology_seq(&tensor_with(n), &s, 2).unwrap();
        for d in les.connecting_maps() {
            assert!(d.is_zero().unwrap());
        }
    }
    let id = ShortExactSeq::new(Morphism::identity(cyclic(6)), Morphism::zero(cyclic(6), Arc::new(Presentation::zero(&z()))))
        .unwrap();
    let les = long_exact_homology_seq(&tensor_with(4), &id, 1).unwrap();
    for d in les.connecting_maps() {
        assert!(d.is_zero().unwrap());
    }
}

#[test]
fn ext_cohomology_sequence() {
    let dual = hom_functor().fix(1, Obj::Module(free(1))).unwrap();
    let les = long_exact_cohomology_seq(&dual, &z2_z4_z2(), 1).unwrap();
    // 0 -> Hom(Z/2,Z) -> … -> Ext^1(Z/2,Z) -> Ext^1(Z/4,Z) -> Ext^1(Z/2,Z)
    let orders: Vec<_> = les.terms.iter().map(|t| order(&t.module)).collect();
    assert_eq!(orders, vec![Some(1), Some(1), Some(1), Some(1), Some(2), Some(4), Some(2)]);
    assert!(long_exact_cohomology_seq(&tensor_with(2), &z2_z4_z2(), 1).is_err());
}

#[test]
fn exactness_reports() {
    let z1 = free(1);
    let c = Complex::new(vec![mor(&z1, &z1, &[&[4]]), mor(&z1, &cyclic(2), &[&[1]])]).unwrap();
    let report = verify_exactness(&c).unwrap();
    assert_eq!(report.len(), 1);
    assert_eq!(report[0].decomposition.as_ref().unwrap().factors.len(), 1);
    let zero = Arc::new(Presentation::zero(&z()));
    let c = Complex::new(vec![Morphism::zero(zero.clone(), zero.clone()), Morphism::zero(zero.clone(), zero)]).unwrap();
    assert!(verify_exactness(&c).unwrap().iter().all(|d| d.is_zero()));
}
