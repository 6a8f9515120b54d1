use std::sync::Arc;

use homcalc::functor::{
    cokernel_functor, defect_functor, ext, ext_ext, functor_on_complex, hom_functor, hom_hom, hom_r_functor,
    identity_functor, instantiate_standard, kernel_functor, left_derived, parse_functor, right_derived_cofunctor,
    tensor_functor, tor, Complex,
};
use homcalc::{
    canonical_decomposition, compose_functors, functor_map, functor_obj, morphisms_equal, presentations_equal, Functor,
    Mat, Morphism, Obj, ObjMap, Presentation, Ring,
};
use num_bigint::BigInt;

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

fn factors(p: &Presentation) -> (Vec<i64>, usize) {
    let d = canonical_decomposition(p).unwrap();
    (d.factors.iter().map(|f| i64::try_from(f.clone()).unwrap()).collect(), d.rank)
}

fn on2(f: &Functor, a: &Arc<Presentation>, b: &Arc<Presentation>) -> Presentation {
    functor_obj(f, &[Obj::Module(a.clone()), Obj::Module(b.clone())]).unwrap()
}

#[test]
fn derived_hom_and_tensor() {
    assert_eq!(factors(&on2(&ext(1), &cyclic(6), &free(1))), (vec![6], 0));
    assert_eq!(factors(&on2(&tor(1), &cyclic(4), &cyclic(6))), (vec![2], 0));
    let ext1 = right_derived_cofunctor(&hom_functor(), 0, 1).unwrap();
    assert_eq!(factors(&on2(&ext1, &cyclic(6), &free(1))), (vec![6], 0));
    for q in 1..3 {
        assert!(on2(&ext(q), &free(2), &cyclic(6)).is_zero_module().unwrap());
        assert!(on2(&tor(q), &free(2), &cyclic(6)).is_zero_module().unwrap());
    }
    // Ext^0 = Hom and Tor_0 = tensor
    assert_eq!(factors(&on2(&ext(0), &cyclic(4), &cyclic(6))), (vec![2], 0));
    assert_eq!(factors(&on2(&tor(0), &cyclic(4), &cyclic(6))), (vec![2], 0));
    assert_eq!(factors(&on2(&ext(0), &free(1), &cyclic(6))), (vec![6], 0));
}

#[test]
fn cheap_flavors_agree_with_general() {
    let mods = [cyclic(4), cyclic(6), free(1), Arc::new(Presentation::from_ints(&z(), 2, &[&[2, 4], &[0, 6]]))];
    for q in 0..3 {
        let s = instantiate_standard(q);
        for a in &mods {
            for b in &mods {
                assert_eq!(factors(&on2(&s.ext, a, b)), factors(&on2(&s.ext_cheap, a, b)), "Ext{q}");
                assert_eq!(factors(&on2(&s.tor, a, b)), factors(&on2(&s.tor_cheap, a, b)), "Tor{q}");
            }
        }
    }
}

#[test]
fn composed_functors() {
    let z5 = cyclic(5);
    let bidual = functor_obj(&hom_hom(), &[Obj::Module(z5.clone()), Obj::Module(z5.clone()), Obj::Module(z5.clone())]).unwrap();
    assert_eq!(factors(&bidual), (vec![5], 0));
    let ee = functor_obj(&ext_ext(1, 1), &[Obj::Module(cyclic(6)), Obj::Module(free(1)), Obj::Module(free(1))]).unwrap();
    assert_eq!(factors(&ee), (vec![6], 0));
    let with_id = compose_functors(&tensor_functor(), 1, &identity_functor()).unwrap();
    for (a, b) in [(cyclic(4), cyclic(6)), (free(2), cyclic(3))] {
        assert!(presentations_equal(&on2(&with_id, &a, &b), &on2(&tensor_functor(), &a, &b)));
    }
}

#[test]
fn basic_objects() {
    let (z1, z4) = (free(1), cyclic(4));
    let coker = functor_obj(&cokernel_functor(), &[Obj::Arrow(mor(&z1, &z1, &[&[2]]))]).unwrap();
    assert_eq!(factors(&coker), (vec![2], 0));
    let ker = functor_obj(&kernel_functor(), &[Obj::Arrow(mor(&z1, &z4, &[&[2]]))]).unwrap();
    assert_eq!(factors(&ker), (vec![], 1));
    let ker = functor_obj(&kernel_functor(), &[Obj::Arrow(mor(&z4, &z4, &[&[2]]))]).unwrap();
    assert_eq!(factors(&ker), (vec![2], 0));

    let z2 = cyclic(2);
    let defect = |a: i64| {
        let pair = Obj::Pair(mor(&z1, &z1, &[&[a]]), mor(&z1, &z2, &[&[1]]));
        factors(&functor_obj(&defect_functor(), &[pair]).unwrap())
    };
    assert_eq!(defect(2), (vec![], 0));
    assert_eq!(defect(4), (vec![2], 0));
    let z6 = cyclic(6);
    let zero = mor(&z6, &z6, &[&[0]]);
    let d = functor_obj(&defect_functor(), &[Obj::Pair(zero.clone(), zero)]).unwrap();
    assert_eq!(factors(&d), (vec![6], 0));

    let hr = |p: Arc<Presentation>| factors(&functor_obj(&hom_r_functor(), &[Obj::Module(p)]).unwrap());
    assert_eq!(hr(z4.clone()), (vec![], 0));
    assert_eq!(hr(free(2)), (vec![], 2));
    let q = Ring::qpoly(&["x", "y"]).unwrap();
    let k = Presentation::new(Mat::parse(&q, &[vec!["x".into()], vec!["y".into()]], 1).unwrap());
    assert!(functor_obj(&hom_r_functor(), &[Obj::module(k)]).unwrap().is_zero_module().unwrap());

    assert_eq!(factors(&on2(&tensor_functor(), &z4, &cyclic(6))), (vec![2], 0));
    assert_eq!(factors(&on2(&tensor_functor(), &z4, &z1)), (vec![4], 0));
    assert_eq!(factors(&on2(&tensor_functor(), &z2, &cyclic(3))), (vec![], 0));
    assert_eq!(factors(&on2(&hom_functor(), &z4, &cyclic(6))), (vec![2], 0));
    assert_eq!(factors(&on2(&hom_functor(), &z1, &cyclic(6))), (vec![6], 0));
    assert_eq!(factors(&on2(&hom_functor(), &z2, &z1)), (vec![], 0));
}

#[test]
fn morphism_parts() {
    let z1 = free(1);
    let dual = hom_functor().fix(1, Obj::Module(z1.clone())).unwrap();
    let m = dual.on_map(&mor(&z1, &z1, &[&[3]])).unwrap();
    assert_eq!(m.matrix(), &Mat::from_ints(&z(), &[&[3]]));

    // Ext^1(-, Z) of the projection Z/4 -> Z/2 is injective
    let e1 = ext(1).fix(1, Obj::Module(z1)).unwrap();
    let proj = mor(&cyclic(4), &cyclic(2), &[&[1]]);
    let induced = e1.on_map(&proj).unwrap();
    assert!(induced.is_valid().unwrap());
    assert_eq!(factors(induced.source()), (vec![2], 0));
    assert_eq!(factors(induced.target()), (vec![4], 0));
    let ker = functor_obj(&kernel_functor(), &[Obj::Arrow(induced)]).unwrap();
    assert!(ker.is_zero_module().unwrap());

    // identities go to identities
    let z6 = cyclic(6);
    for f in [ext(0), ext(1), tor(1), tensor_functor(), hom_functor()] {
        for slot in 0..2 {
            let fixed = [Obj::Module(cyclic(4))];
            let id = ObjMap::module(Morphism::identity(z6.clone()));
            let img = functor_map(&f, slot, &id, &fixed).unwrap();
            assert!(morphisms_equal(&img, &Morphism::identity(img.source_arc().clone())).unwrap(), "{}", f.name());
        }
    }
}

#[test]
fn left_derived_degree_zero_is_tensor() {
    let l0 = left_derived(&tensor_functor(), 0, 0).unwrap();
    let m = Arc::new(Presentation::from_ints(&z(), 2, &[&[2, 4], &[0, 6]]));
    let l = Arc::new(Presentation::from_ints(&z(), 2, &[&[4, 0]]));
    assert_eq!(factors(&on2(&l0, &m, &l)), factors(&on2(&tensor_functor(), &m, &l)));
}

#[test]
fn complexes() {
    let z1 = free(1);
    let c = Complex::new(vec![mor(&z1, &z1, &[&[2]]), mor(&z1, &cyclic(2), &[&[1]])]).unwrap();
    let same = functor_on_complex(&identity_functor(), &c).unwrap();
    assert_eq!(same.len(), c.len());
    for (a, b) in same.objects().iter().zip(c.objects()) {
        assert!(presentations_equal(a, b));
    }
    let two = Complex::new(vec![mor(&z1, &z1, &[&[2]])]).unwrap();
    let dual = functor_on_complex(&hom_functor().fix(1, Obj::Module(z1)).unwrap(), &two).unwrap();
    assert_eq!(dual.maps()[0].matrix(), &Mat::from_ints(&z(), &[&[2]]));
}

#[test]
fn parsed_functors_evaluate() {
    let f = parse_functor("RDerived(1, Hom)").unwrap();
    assert_eq!(factors(&on2(&f, &cyclic(6), &free(1))), (vec![6], 0));
    let order: BigInt = canonical_decomposition(&on2(&parse_functor("Tor(1)").unwrap(), &cyclic(12), &cyclic(8)))
        .unwrap()
        .order()
        .unwrap();
    assert_eq!(order, BigInt::from(4));
}
