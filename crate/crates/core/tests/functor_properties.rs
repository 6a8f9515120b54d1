use std::sync::Arc;

use homcalc::functor::{ext, hom_functor, hom_r_functor, hull_embedding, hull_map, tensor_functor, tor};
use homcalc::homology::{long_exact_homology_seq, resolve_short_exact_seq, verify_exactness, ShortExactSeq};
use homcalc::simplicial::SimplicialComplex;
use homcalc::{canonical_decomposition, functor_map, functor_obj, morphisms_equal, Mat, Morphism, Obj, ObjMap, Presentation, Ring};
use num_integer::Integer;
use proptest::prelude::*;

fn z() -> Ring {
    Ring::integers()
}

fn cyclic(n: i64) -> Arc<Presentation> {
    Arc::new(Presentation::from_ints(&z(), 1, &[&[n]]))
}

fn free(n: usize) -> Arc<Presentation> {
    Arc::new(Presentation::free(&z(), n))
}

/// `Z/a -> Z/b` sending the generator to `k` times the smallest admissible element.
/// Modulus 0 stands for `Z`.
fn cyclic_map(a: i64, b: i64, k: i64) -> Morphism {
    let step = if a == 0 || b == 0 { 1 } else { b / a.gcd(&b) };
    Morphism::new(cyclic(a), cyclic(b), Mat::from_ints(&z(), &[&[k * step]])).unwrap()
}

fn modulus() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![0i64, 2, 3, 4, 6, 12])
}

fn composable() -> impl Strategy<Value = (Morphism, Morphism)> {
    (modulus(), modulus(), modulus(), -3i64..=3, -3i64..=3).prop_filter_map("nonzero source map", |(a, b, c, k, l)| {
        // torsion has no nonzero maps into Z
        if (a != 0 && b == 0) || (b != 0 && c == 0) {
            return None;
        }
        Some((cyclic_map(a, b, k), cyclic_map(b, c, l)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_and_tensor_are_functorial((phi, psi) in composable(), fixed in modulus()) {
        let other = Obj::Module(cyclic(fixed));
        let both = phi.then(&psi)?;
        for f in [hom_r_functor()] {
            let a = functor_map(&f, 0, &ObjMap::module(both.clone()), &[])?;
            let b = functor_map(&f, 0, &ObjMap::module(psi.clone()), &[])?.then(&functor_map(&f, 0, &ObjMap::module(phi.clone()), &[])?)?;
            prop_assert!(morphisms_equal(&a, &b)?);
        }
        let t = tensor_functor();
        let a = functor_map(&t, 0, &ObjMap::module(both.clone()), &[other.clone()])?;
        let b = functor_map(&t, 0, &ObjMap::module(phi.clone()), &[other.clone()])?
            .then(&functor_map(&t, 0, &ObjMap::module(psi.clone()), &[other.clone()])?)?;
        prop_assert!(morphisms_equal(&a, &b)?);
        let h = hom_functor();
        let a = functor_map(&h, 1, &ObjMap::module(both), &[other.clone()])?;
        let b = functor_map(&h, 1, &ObjMap::module(phi.clone()), &[other.clone()])?
            .then(&functor_map(&h, 1, &ObjMap::module(psi.clone()), &[other])?)?;
        prop_assert!(morphisms_equal(&a, &b)?);
        let id = Morphism::identity(phi.source_arc().clone());
        let fid = functor_map(&tensor_functor(), 0, &ObjMap::module(id), &[Obj::Module(cyclic(fixed))])?;
        prop_assert!(morphisms_equal(&fid, &Morphism::identity(fid.source_arc().clone()))?);
    }

    #[test]
    fn hulls_are_natural((phi, _) in composable(), fixed in modulus()) {
        let t = tensor_functor();
        let other = Obj::Module(cyclic(fixed));
        let map = ObjMap::module(phi.clone());
        let src = [Obj::Module(phi.source_arc().clone()), other.clone()];
        let tgt = [Obj::Module(phi.target_arc().clone()), other.clone()];
        let left = functor_map(&t, 0, &map, &[other.clone()])?.then(&hull_embedding(&t, &tgt)?)?;
        let right = hull_embedding(&t, &src)?.then(&hull_map(&t, 0, &map, &[other])?)?;
        prop_assert!(morphisms_equal(&left, &right)?);
    }
}

#[test]
fn hom_tensor_adjunction() {
    let orders = [2, 3, 4, 6];
    for a in orders {
        for b in orders {
            for c in orders {
                let (a, b, c) = (cyclic(a), cyclic(b), cyclic(c));
                let ab = functor_obj(&tensor_functor(), &[Obj::Module(a.clone()), Obj::Module(b.clone())]).unwrap();
                let left = functor_obj(&hom_functor(), &[Obj::Module(Arc::new(ab)), Obj::Module(c.clone())]).unwrap();
                let bc = functor_obj(&hom_functor(), &[Obj::Module(b), Obj::Module(c)]).unwrap();
                let right = functor_obj(&hom_functor(), &[Obj::Module(a), Obj::Module(Arc::new(bc))]).unwrap();
                assert_eq!(canonical_decomposition(&left).unwrap(), canonical_decomposition(&right).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn derived_functors_vanish_on_free_modules(n in 1usize..=3, m in modulus(), q in 1usize..=3) {
        for f in [ext(q), tor(q)] {
            let x = functor_obj(&f, &[Obj::Module(free(n)), Obj::Module(cyclic(m))])?;
            prop_assert!(x.is_zero_module()?);
        }
        // and Tor vanishes with the free module in either slot
        let x = functor_obj(&tor(q), &[Obj::Module(cyclic(m)), Obj::Module(free(n))])?;
        prop_assert!(x.is_zero_module()?);
    }

    #[test]
    fn resolved_sequences_add_ranks(a in 1i64..=6, b in 1i64..=6, split in any::<bool>()) {
        let s = if split {
            ShortExactSeq::split(cyclic(a), cyclic(b))?
        } else {
            let mono = Morphism::new(cyclic(a), cyclic(a * b), Mat::from_ints(&z(), &[&[b]]))?;
            let epi = Morphism::new(cyclic(a * b), cyclic(b), Mat::from_ints(&z(), &[&[1]]))?;
            ShortExactSeq::new(mono, epi)?
        };
        let r = resolve_short_exact_seq(&s, 3)?;
        r.verify()?;
        for i in 0..r.len() {
            prop_assert_eq!(r.middle_free(i).gens(), r.left_free(i).gens() + r.right_free(i).gens());
        }
        let les = long_exact_homology_seq(&tensor_functor().fix(1, Obj::Module(cyclic(6)))?, &s, 2)?;
        prop_assert!(verify_exactness(&les.as_complex()?)?.iter().all(|d| d.is_zero()));
    }

    #[test]
    fn simplicial_invariants(facets in prop::collection::vec(prop::collection::btree_set(0u64..6, 1..=4), 1..=6)) {
        let facets: Vec<Vec<u64>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        let k = SimplicialComplex::from_facets(&facets)?;
        let n = k.dim().unwrap();
        for i in 2..=n {
            prop_assert!(k.boundary(i).mul(&k.boundary(i - 1))?.is_zero());
        }
        let mut chi = 0i64;
        for i in 0..=n {
            let r = k.homology(i)?.rank as i64;
            chi += if i % 2 == 0 { r } else { -r };
        }
        prop_assert_eq!(chi, k.euler_characteristic());
        prop_assert_eq!(k.cohomology(0)?.rank, k.homology(0)?.rank);
        prop_assert!(k.homology(0)?.factors.is_empty());
    }
}
