use std::sync::Arc;

use homcalc::procedures::{complete_im_sq, resolution_of_module, right_divide, subfactor_module};
use homcalc::ring::Involution;
use homcalc::{
    basis_of_module, better_generators, canonical_decomposition, decide_zero, eliminate_units, morphisms_equal,
    presentations_equal, smith_normal_form, syzygies_generators, Elem, Mat, Morphism, Presentation, Ring,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn z() -> Ring {
    Ring::integers()
}

fn ints(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), rows)
}

fn sized(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| ints(r, c, bound))
}

fn mat(ring: &Ring, rows: &[Vec<i64>], cols: usize) -> Mat {
    Mat::from_rows(ring, rows.iter().map(|r| r.iter().map(|&x| ring.from_int(x)).collect()).collect(), cols).unwrap()
}

fn width(rows: &[Vec<i64>]) -> usize {
    rows.first().map_or(1, Vec::len)
}

/// Small polynomials in `x, y` as literals.
fn poly_literal() -> impl Strategy<Value = String> {
    prop::collection::vec(-3i64..=3, 6).prop_map(|c| {
        let monos = ["1", "x", "y", "x*y", "x^2", "y^2"];
        let mut s = String::from("0");
        for (k, m) in c.iter().zip(monos) {
            s.push_str(&format!(" {} {}*{m}", if *k < 0 { '-' } else { '+' }, k.abs()));
        }
        s
    })
}

fn poly_mat(ring: &Ring, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    let ring = ring.clone();
    prop::collection::vec(prop::collection::vec(poly_literal(), cols), rows).prop_map(move |rs| {
        let text: Vec<Vec<String>> = rs;
        Mat::parse(&ring, &text, cols).unwrap()
    })
}

fn flip_ring() -> Ring {
    Ring::qpoly(&["x", "y"]).unwrap().with_involution(Involution::SignFlip(vec![true, false])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kronecker_mixed_product(dims in prop::array::uniform6(1usize..=3), seed in any::<u64>()) {
        let [p, q, r, s, t, u] = dims;
        let g = |k: u64, rows, cols| {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| ((seed >> ((i * 3 + j + k as usize) % 60)) & 7) as i64 - 3).collect()).collect();
            mat(&z(), &data, cols)
        };
        let (a, b, c, d) = (g(0, p, q), g(1, r, s), g(2, q, t), g(3, s, u));
        prop_assert_eq!(a.kronecker(&b)?.mul(&c.kronecker(&d)?)?, a.mul(&c)?.kronecker(&b.mul(&d)?)?);
    }

    #[test]
    fn theta_transpose_reverses_products(a in poly_mat(&flip_ring(), 2, 3), b in poly_mat(&flip_ring(), 3, 2)) {
        prop_assert_eq!(a.mul(&b)?.theta_transpose(), b.theta_transpose().mul(&a.theta_transpose())?);
        prop_assert_eq!(a.theta_transpose().theta_transpose(), a);
    }

    #[test]
    fn stacking_is_undone_by_slicing(a in ints(2, 3, 9), b in ints(3, 3, 9)) {
        let (a, b) = (mat(&z(), &a, 3), mat(&z(), &b, 3));
        let s = a.stack(&b)?;
        prop_assert_eq!(s.row_range(0, a.rows()), a.clone());
        prop_assert_eq!(s.row_range(a.rows(), s.rows()), b);
    }

    #[test]
    fn literals_round_trip(p in poly_literal(), n in -1000i64..1000, d in 1i64..50) {
        let q = Ring::qpoly(&["x", "y"]).unwrap();
        let e = q.parse_elem(&p)?;
        prop_assert_eq!(q.parse_elem(&q.format_elem(&e))?, e);
        let rat = Ring::rationals();
        let r = rat.parse_elem(&format!("{n}/{d}"))?;
        prop_assert_eq!(rat.parse_elem(&rat.format_elem(&r))?, r);
        let f = Ring::prime_field(7).unwrap();
        let e = f.from_int(n);
        prop_assert_eq!(f.parse_elem(&f.format_elem(&e))?, e);
        let qx = Ring::qpoly(&["x"]).unwrap();
        let res = Ring::residue_class_ring(&qx, &[qx.parse_elem("x^2 + 1")?]).unwrap();
        let e = res.parse_elem(&p.replace('y', "x"))?;
        prop_assert_eq!(res.parse_elem(&res.format_elem(&e))?, e);
    }

    #[test]
    fn reduction_certificates(m in sized(4, 4, 9), b in ints(3, 4, 9), field in any::<bool>()) {
        let ring = if field { Ring::rationals() } else { z() };
        let cols = width(&m);
        let m = mat(&ring, &m, cols);
        let b = mat(&ring, &b.iter().map(|r| r[..cols].to_vec()).collect::<Vec<_>>(), cols);
        let r = decide_zero(&b, &m, true)?;
        let c = r.transform.clone().unwrap();
        prop_assert_eq!(&r.reduced, &b.add(&c.mul(&r.basis)?)?);
        // the basis generates the same row module as m
        prop_assert!(decide_zero(&r.basis, &m, false)?.reduced.is_zero());
        prop_assert!(decide_zero(&m, &r.basis, false)?.reduced.is_zero());
    }

    #[test]
    fn basis_is_idempotent(m in sized(4, 3, 9)) {
        let m = mat(&z(), &m, width(&m));
        let b1 = basis_of_module(&m)?;
        prop_assert_eq!(b1.transform.mul(&m)?, b1.basis.clone());
        let b2 = basis_of_module(&b1.basis)?;
        prop_assert_eq!(b2.basis, b1.basis);
    }

    #[test]
    fn syzygies_are_complete(m in sized(3, 2, 4), modulo in ints(1, 2, 6)) {
        let cols = width(&m);
        let m = mat(&z(), &m, cols);
        let l = mat(&z(), &[modulo[0][..cols].to_vec()], cols);
        let s = syzygies_generators(&m, Some(&l))?;
        prop_assert!(decide_zero(&s.mul(&m)?, &l, false)?.reduced.is_zero());
        // every small syzygy is a combination of the generators
        let n = m.rows();
        let box_size = 7i64.pow(n as u32);
        for code in 0..box_size {
            let c: Vec<i64> = (0..n).map(|i| (code / 7i64.pow(i as u32)) % 7 - 3).collect();
            let row = mat(&z(), &[c], n);
            if decide_zero(&row.mul(&m)?, &l, false)?.reduced.is_zero() {
                prop_assert!(decide_zero(&row, &s, false)?.reduced.is_zero());
            }
        }
    }

    #[test]
    fn smith_form_certificates(m in sized(3, 3, 9)) {
        let m = mat(&z(), &m, width(&m));
        let s = smith_normal_form(&m)?;
        let d = s.left.mul(&m)?.mul(&s.right)?;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { z().zero() };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        let big = |e: &Elem| match e { Elem::Int(n) => n.clone(), _ => unreachable!() };
        for w in s.diag.windows(2) {
            prop_assert!(big(&w[1]).is_multiple_of(&big(&w[0])));
        }
        prop_assert!(s.diag.iter().all(|d| big(d) > BigInt::from(0)));
    }

    #[test]
    fn generator_changes_are_isomorphisms(rows in sized(3, 3, 5)) {
        let p = Arc::new(Presentation::new(mat(&z(), &rows, width(&rows))));
        for r in [eliminate_units(&p)?, better_generators(&p)?] {
            let there = r.iso_from(p.clone())?;
            let back = r.iso_to(p.clone())?;
            prop_assert!(there.is_valid()? && back.is_valid()?);
            prop_assert!(morphisms_equal(&there.then(&back)?, &Morphism::identity(p.clone()))?);
            prop_assert!(morphisms_equal(&back.then(&there)?, &Morphism::identity(r.module.clone()))?);
            prop_assert_eq!(canonical_decomposition(&r.module)?, canonical_decomposition(&p)?);
        }
    }

    #[test]
    fn presentation_equality_is_an_equivalence(a in ints(2, 2, 3), b in ints(2, 2, 3), c in ints(2, 2, 3)) {
        let ps: Vec<Presentation> = [a, b, c].iter().map(|r| Presentation::new(mat(&z(), r, 2))).collect();
        for x in &ps {
            prop_assert!(presentations_equal(x, x));
            for y in &ps {
                prop_assert_eq!(presentations_equal(x, y), presentations_equal(y, x));
                for w in &ps {
                    if presentations_equal(x, y) && presentations_equal(y, w) {
                        prop_assert!(presentations_equal(x, w));
                    }
                }
            }
        }
    }

    #[test]
    fn right_divide_certificates(a in ints(2, 2, 6), l in ints(1, 2, 6), x0 in ints(2, 2, 4), y0 in ints(2, 1, 4)) {
        let (a, l) = (mat(&z(), &a, 2), mat(&z(), &l, 2));
        let b = mat(&z(), &x0, 2).mul(&a)?.add(&mat(&z(), &y0, 1).mul(&l)?)?;
        let x = right_divide(&b, &a, Some(&l))?.expect("solvable by construction");
        prop_assert!(decide_zero(&b.sub(&x.mul(&a)?)?, &l, false)?.reduced.is_zero());
    }

    #[test]
    fn image_squares_complete(target in ints(2, 2, 5), phi in ints(2, 2, 5), alpha in ints(2, 2, 5)) {
        // α: Z^2 -> M free, φ: M -> N, β: the free cover of N
        let n = Arc::new(Presentation::new(mat(&z(), &target, 2)));
        let phi = mat(&z(), &phi, 2);
        let m = Arc::new(Presentation::new(syzygies_generators(&phi, Some(n.relations()))?));
        let phi = Morphism::new(m.clone(), n.clone(), phi)?;
        let alpha = Morphism::new(Presentation::free(&z(), 2), m, mat(&z(), &alpha, 2))?;
        let beta = Morphism::new(Presentation::free(&z(), 2), n, Mat::identity(&z(), 2))?;
        let psi = complete_im_sq(&alpha, &phi, &beta)?.expect("free source");
        prop_assert!(morphisms_equal(&psi.then(&beta)?, &alpha.then(&phi)?)?);
    }

    #[test]
    fn resolutions_are_exact_and_minimal(rows in sized(4, 3, 6)) {
        let p = Presentation::new(mat(&z(), &rows, width(&rows)));
        let r = resolution_of_module(&p, 3)?;
        let maps = r.maps();
        for w in maps.windows(2) {
            prop_assert!(w[1].mul(&w[0])?.is_zero());
        }
        for (i, m) in maps.iter().enumerate() {
            for a in 0..m.rows() {
                for b in 0..m.cols() {
                    prop_assert!(!z().is_unit(m.get(a, b)));
                }
            }
            let syz = syzygies_generators(m, None)?;
            match maps.get(i + 1) {
                Some(next) => prop_assert!(decide_zero(&syz, next, false)?.reduced.is_zero()),
                None => prop_assert!(!r.is_complete() || syz.rows() == 0),
            }
        }
    }

    #[test]
    fn subfactors(rows in sized(3, 3, 6)) {
        let m = mat(&z(), &rows, width(&rows));
        prop_assert!(subfactor_module(&m, &m)?.module.is_zero_module()?);
        // a submodule of a free abelian group is free of the rank of its generators
        let sub = subfactor_module(&m, &Mat::zero(&z(), 0, m.cols()))?;
        let d = canonical_decomposition(&sub.module)?;
        prop_assert!(d.factors.is_empty());
        prop_assert_eq!(d.rank, rational_rank(&rows));
    }
}

/// Rank over Q by fraction-free elimination.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            let (f, g) = (a[i][c], a[rank][c]);
            for j in 0..cols {
                a[i][j] = a[i][j] * g - a[rank][j] * f;
            }
        }
        rank += 1;
    }
    rank
}
