//! The two ring primitives (membership with certificate, syzygies) and the
//! basis computation behind them, for every backend.
//!
//! Fields and the integers use echelon forms, polynomial rings use Gröbner
//! bases. A residue class ring `R/I` hands its matrices to the base ring with
//! the block `I_n ⊗ ideal` appended, so its certificates hold modulo `I`.

mod echelon;
pub(crate) mod groebner;
mod smith;

use std::sync::Arc;

use crate::error::{dim, Error, Result};
use crate::matrix::Mat;
use crate::ring::{Backend, Elem, PolyRing, Ring};

use groebner::Vector;

/// `basis = transform · input`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisResult {
    pub basis: Mat,
    pub transform: Mat,
}

/// `reduced = b + transform · basis`, where `basis` is the basis of the
/// module that was reduced against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub reduced: Mat,
    pub transform: Option<Mat>,
    pub basis: Mat,
}

/// `left · m · right` is diagonal with entries `diag` followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithResult {
    pub diag: Vec<Elem>,
    pub left: Mat,
    pub right: Mat,
}

#[derive(Clone)]
enum Engine {
    Echelon { form: Mat, pivots: Vec<usize> },
    Groebner { ring: Arc<PolyRing>, basis: Vec<Vector> },
}

/// A computed basis of the row module of a matrix, able to reduce further
/// rows against it.
#[derive(Clone)]
pub struct Basis {
    ring: Ring,
    cols: usize,
    basis: Mat,
    transform: Mat,
    syzygies: Mat,
    /// For each row of `basis`, its row in the engine's basis.
    kept: Vec<usize>,
    engine: Engine,
}

fn to_vectors(m: &Mat) -> Vec<Vector> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| match e {
                    Elem::Poly(p) => p.clone(),
                    _ => unreachable!("polynomial backend holds polynomials"),
                })
                .collect()
        })
        .collect()
}

fn from_vectors(ring: &Ring, vs: &[Vector], cols: usize) -> Mat {
    let rows = vs.iter().map(|v| v.iter().cloned().map(Elem::Poly).collect()).collect();
    Mat::from_rows(ring, rows, cols).expect("vector width")
}

fn nonzero_rows(m: &Mat) -> Vec<usize> {
    (0..m.rows()).filter(|&i| !m.row_is_zero(i)).collect()
}

impl Basis {
    pub fn compute(m: &Mat) -> Result<Basis> {
        let ring = m.ring().clone();
        let k = m.rows();
        let (work_ring, input) = match ring.backend() {
            Backend::Residue(r) => {
                let base = r.base.clone();
                let lifted = m.reinterpret(&base);
                let block = Mat::identity(&base, m.cols()).kronecker(&r.ideal)?;
                (base, lifted.stack(&block)?)
            }
            _ => (ring.clone(), m.clone()),
        };
        let (engine, full_basis, full_transform, full_syz) = match work_ring.backend() {
            Backend::Poly(pr) => {
                let run = groebner::groebner(pr, &to_vectors(&input), input.cols());
                let basis = from_vectors(&work_ring, &run.basis, input.cols());
                let transform = from_vectors(&work_ring, &run.transform, input.rows());
                let syz = from_vectors(&work_ring, &run.syzygies, input.rows());
                (Engine::Groebner { ring: pr.clone(), basis: run.basis }, basis, transform, syz)
            }
            Backend::Integers | Backend::Rationals | Backend::PrimeField(_) => {
                let e = echelon::echelon(&input);
                let rank = e.rank();
                let form = e.form.row_range(0, rank);
                let transform = e.transform.row_range(0, rank);
                let syz = e.transform.row_range(rank, input.rows());
                (Engine::Echelon { form: form.clone(), pivots: e.pivots }, form, transform, syz)
            }
            Backend::Residue(_) => return Err(Error::Unsupported("nested residue class ring".into())),
        };
        // back to the caller's ring; rows that vanish there are dropped
        let basis_in_ring = full_basis.reinterpret(&ring);
        let kept = nonzero_rows(&basis_in_ring);
        let basis = basis_in_ring.select_rows(&kept);
        let transform = full_transform.select_rows(&kept).col_range(0, k).reinterpret(&ring);
        let syz = full_syz.col_range(0, k).reinterpret(&ring);
        let syzygies = syz.select_rows(&nonzero_rows(&syz));
        Ok(Basis { ring, cols: m.cols(), basis, transform, syzygies, kept, engine })
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// `basis = transform · input`
    pub fn transform(&self) -> &Mat {
        &self.transform
    }

    /// Generators of the syzygies of the input rows.
    pub fn syzygies(&self) -> &Mat {
        &self.syzygies
    }

    fn work_ring(&self) -> &Ring {
        match self.ring.backend() {
            Backend::Residue(r) => &r.base,
            _ => &self.ring,
        }
    }

    /// Reduces every row of `b`: returns `(n, c)` with `n = b + c · basis`.
    /// A row of `n` is zero iff the row of `b` lies in the module.
    pub fn reduce(&self, b: &Mat) -> Result<(Mat, Mat)> {
        if b.cols() != self.cols {
            return Err(dim(format!("reducing {} columns against {} columns", b.cols(), self.cols)));
        }
        if b.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", b.ring(), self.ring)));
        }
        let wr = self.work_ring().clone();
        let lifted = b.reinterpret(&wr);
        let (rem, cert) = match &self.engine {
            Engine::Echelon { form, pivots } => reduce_echelon(form, pivots, &lifted),
            Engine::Groebner { ring, basis } => {
                let mut rem_rows = Vec::new();
                let mut cert_rows = Vec::new();
                for v in to_vectors(&lifted) {
                    let (r, q) = groebner::reduce_dense(ring, basis, &v, true);
                    rem_rows.push(r);
                    cert_rows.push(q.iter().map(|p| ring.neg(p)).collect::<Vector>());
                }
                (from_vectors(&wr, &rem_rows, self.cols), from_vectors(&wr, &cert_rows, basis.len()))
            }
        };
        let reduced = rem.reinterpret(&self.ring);
        let cert = cert.select_cols(&self.kept).reinterpret(&self.ring);
        Ok((reduced, cert))
    }

    /// The remainder part of [`Basis::reduce`]; a normal form for the fixed basis.
    pub fn reduce_full(&self, b: &Mat) -> Mat {
        self.reduce(b).expect("shape checked by caller").0
    }

    pub fn contains(&self, b: &Mat) -> Result<bool> {
        Ok(self.reduce(b)?.0.is_zero())
    }
}

fn reduce_echelon(form: &Mat, pivots: &[usize], b: &Mat) -> (Mat, Mat) {
    let ring = b.ring();
    let mut rem = b.clone();
    let mut cert = Mat::zero(ring, b.rows(), form.rows());
    for i in 0..b.rows() {
        for (r, &c) in pivots.iter().enumerate() {
            if ring.is_zero(rem.get(i, c)) {
                continue;
            }
            let (q, _) = ring.div_rem(rem.get(i, c), form.get(r, c));
            if ring.is_zero(&q) {
                continue;
            }
            let nq = ring.neg(&q);
            for j in c..form.cols() {
                let v = ring.add(rem.get(i, j), &ring.mul(&nq, form.get(r, j)));
                rem.set(i, j, v);
            }
            cert.set(i, r, nq);
        }
    }
    (rem, cert)
}

pub fn basis_of_module(m: &Mat) -> Result<BasisResult> {
    let b = Basis::compute(m)?;
    Ok(BasisResult { basis: b.basis, transform: b.transform })
}

pub fn decide_zero(b: &Mat, m: &Mat, with_certificate: bool) -> Result<ReductionResult> {
    if b.cols() != m.cols() {
        return Err(dim(format!("decide_zero: {} columns vs {} columns", b.cols(), m.cols())));
    }
    let basis = Basis::compute(m)?;
    let (reduced, cert) = basis.reduce(b)?;
    Ok(ReductionResult { reduced, transform: with_certificate.then_some(cert), basis: basis.basis })
}

/// Generators of `{x : x·m ∈ ⟨modulo⟩}`.
pub fn syzygies_generators(m: &Mat, modulo: Option<&Mat>) -> Result<Mat> {
    match modulo {
        None => Ok(Basis::compute(m)?.syzygies),
        Some(l) => {
            if l.cols() != m.cols() {
                return Err(dim(format!("syzygies: {} columns modulo {} columns", m.cols(), l.cols())));
            }
            let s = Basis::compute(&m.stack(l)?)?.syzygies.col_range(0, m.rows());
            Ok(s.select_rows(&nonzero_rows(&s)))
        }
    }
}

pub fn smith_normal_form(m: &Mat) -> Result<SmithResult> {
    let r = m.ring();
    if !(r.is_field() || matches!(r.backend(), Backend::Integers)) {
        return Err(Error::Unsupported(format!("Smith normal form over {r}")));
    }
    Ok(smith::smith(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_basis_with_certificate() {
        let z = Ring::integers();
        let m = Mat::from_ints(&z, &[&[6], &[10]]);
        let b = basis_of_module(&m).unwrap();
        assert_eq!(b.basis, Mat::from_ints(&z, &[&[2]]));
        assert_eq!(b.transform.mul(&m).unwrap(), b.basis);
    }

    #[test]
    fn rational_basis_is_rref() {
        let q = Ring::rationals();
        let b = basis_of_module(&Mat::from_ints(&q, &[&[2, 4]])).unwrap();
        assert_eq!(b.basis, Mat::from_ints(&q, &[&[1, 2]]));
    }

    #[test]
    fn polynomial_basis_of_maximal_ideal() {
        let r = Ring::qpoly(&["x", "y"]).unwrap();
        let m = Mat::parse(&r, &[vec!["x".into()], vec!["y".into()]], 1).unwrap();
        let b = basis_of_module(&m).unwrap();
        assert_eq!(b.basis, m);
    }

    #[test]
    fn membership_examples() {
        let z = Ring::integers();
        let red = decide_zero(&Mat::from_ints(&z, &[&[4]]), &Mat::from_ints(&z, &[&[6], &[10]]), true).unwrap();
        assert!(red.reduced.is_zero());
        let c = red.transform.unwrap();
        assert_eq!(Mat::from_ints(&z, &[&[4]]).add(&c.mul(&red.basis).unwrap()).unwrap(), red.reduced);

        let r = Ring::qpoly(&["x", "y"]).unwrap();
        let m = Mat::parse(&r, &[vec!["x".into()], vec!["y".into()]], 1).unwrap();
        let b = Mat::parse(&r, &[vec!["x*y".into()]], 1).unwrap();
        assert!(decide_zero(&b, &m, false).unwrap().reduced.is_zero());
        assert!(decide_zero(&Mat::zero(&r, 2, 1), &m, false).unwrap().reduced.is_zero());
    }

    #[test]
    fn syzygy_examples() {
        let z = Ring::integers();
        let s = syzygies_generators(&Mat::from_ints(&z, &[&[2], &[3]]), None).unwrap();
        assert_eq!(s.rows(), 1);
        let (a, b) = (s.get(0, 0).clone(), s.get(0, 1).clone());
        assert!(a == z.from_int(3) && b == z.from_int(-2) || a == z.from_int(-3) && b == z.from_int(2));

        let s = syzygies_generators(&Mat::from_ints(&z, &[&[2]]), Some(&Mat::from_ints(&z, &[&[4]]))).unwrap();
        assert_eq!(basis_of_module(&s).unwrap().basis, Mat::from_ints(&z, &[&[2]]));
    }

    #[test]
    fn residue_reduction() {
        let z = Ring::integers();
        let z6 = Ring::residue_class_ring(&z, &[z.from_int(6)]).unwrap();
        let red = decide_zero(&Mat::from_ints(&z6, &[&[9]]), &Mat::zero(&z6, 0, 1), true).unwrap();
        assert_eq!(red.reduced, Mat::from_ints(&z6, &[&[3]]));
        let z5 = Ring::residue_class_ring(&z, &[z.from_int(5)]).unwrap();
        assert!(decide_zero(&Mat::from_ints(&z5, &[&[10]]), &Mat::zero(&z5, 0, 1), false).unwrap().reduced.is_zero());

        let qx = Ring::qpoly(&["x"]).unwrap();
        let r = Ring::residue_class_ring(&qx, &[qx.parse_elem("x^2").unwrap()]).unwrap();
        let b = Mat::parse(&r, &[vec!["x^3".into()]], 1).unwrap();
        assert!(b.is_zero());
        let b = Mat::parse(&r, &[vec!["x".into()]], 1).unwrap();
        assert!(!decide_zero(&b, &Mat::zero(&r, 0, 1), false).unwrap().reduced.is_zero());
    }

    #[test]
    fn residue_syzygies_hold_modulo_ideal() {
        let z = Ring::integers();
        let z4 = Ring::residue_class_ring(&z, &[z.from_int(4)]).unwrap();
        let m = Mat::from_ints(&z4, &[&[2]]);
        let s = syzygies_generators(&m, None).unwrap();
        assert!(s.mul(&m).unwrap().is_zero());
        // 2 kills 2 in Z/4
        assert!(decide_zero(&Mat::from_ints(&z4, &[&[2]]), &s, false).unwrap().reduced.is_zero());
    }
}
