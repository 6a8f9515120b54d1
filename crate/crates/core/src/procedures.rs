//! Procedures built on the two ring primitives: particular solutions of
//! linear systems, completion of image squares, free resolutions and
//! subfactor presentations.

use std::sync::Arc;

use crate::backend::{syzygies_generators, Basis};
use crate::error::{dim, Error, Result};
use crate::matrix::Mat;
use crate::presentation::{eliminate_units, Morphism, Presentation, Represented};

/// Solves `b = x·a + y·l`, returning `(x, y)`, or `None` when some row of `b`
/// is outside `⟨a⟩ + ⟨l⟩`.
pub fn right_divide_with_rest(b: &Mat, a: &Mat, l: Option<&Mat>) -> Result<Option<(Mat, Mat)>> {
    if b.cols() != a.cols() || l.is_some_and(|l| l.cols() != a.cols()) {
        return Err(dim(format!("right_divide: {} columns by {} columns", b.cols(), a.cols())));
    }
    let l = l.cloned().unwrap_or_else(|| Mat::zero(a.ring(), 0, a.cols()));
    let basis = Basis::compute(&a.stack(&l)?)?;
    let (n, cb) = basis.reduce(b)?;
    if !n.is_zero() {
        return Ok(None);
    }
    let xy = cb.mul(basis.transform())?.neg();
    Ok(Some((xy.col_range(0, a.rows()), xy.col_range(a.rows(), xy.cols()))))
}

/// A particular solution `x` of `b ≡ x·a` modulo `⟨l⟩`.
pub fn right_divide(b: &Mat, a: &Mat, l: Option<&Mat>) -> Result<Option<Mat>> {
    Ok(right_divide_with_rest(b, a, l)?.map(|(x, _)| x))
}

/// Completes the square `M' -α-> M -φ-> N <-β- N'` by `ψ: M' -> N'` with
/// `ψβ = αφ`. Needs `M'` given on a free basis or `β` injective; otherwise the
/// result may fail to be a morphism.
pub fn complete_im_sq(alpha: &Morphism, phi: &Morphism, beta: &Morphism) -> Result<Option<Morphism>> {
    let gamma = alpha.then(phi)?;
    if beta.target().gens() != phi.target().gens() {
        return Err(dim("complete_im_sq: β and φ have different targets"));
    }
    match right_divide(gamma.matrix(), beta.matrix(), Some(beta.target().relations()))? {
        Some(x) => Ok(Some(Morphism::unchecked(alpha.source_arc().clone(), beta.source_arc().clone(), x)?)),
        None => Ok(None),
    }
}

/// `ψ: N -> N'` with `ψβ = id_N` for `β: N' -> N`: a split of a surjection
/// onto a free module, or the inverse of an isomorphism.
pub fn leftinverse(beta: &Morphism) -> Result<Option<Morphism>> {
    let n = beta.target_arc();
    let id = Mat::identity(beta.ring(), n.gens());
    match right_divide(&id, beta.matrix(), Some(n.relations()))? {
        Some(x) => Ok(Some(Morphism::unchecked(n.clone(), beta.source_arc().clone(), x)?)),
        None => Ok(None),
    }
}

/// Rows `x` with `x·α ≡ b` modulo the relations of the target of `α`.
pub fn preimage(b: &Mat, alpha: &Morphism) -> Result<Option<Mat>> {
    if b.cols() != alpha.target().gens() {
        return Err(dim("preimage: row width differs from the target's generator count"));
    }
    right_divide(b, alpha.matrix(), Some(alpha.target().relations()))
}

/// A free resolution `… -> R^{l_2} -φ_2-> R^{l_1} -φ_1-> R^{l_0} -> M -> 0` of
/// `M`, computed on a unit-free presentation of `M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// The module as it was given.
    pub module: Arc<Presentation>,
    /// The unit-free presentation the resolution starts from; `φ_1` is its
    /// relation matrix.
    pub start: Represented,
    maps: Vec<Mat>,
    complete: bool,
}

impl Resolution {
    /// `φ_i: R^{l_i} -> R^{l_{i-1}}`, `i ≥ 1`; zero (possibly empty) beyond the
    /// computed range.
    pub fn map(&self, i: usize) -> Mat {
        assert!(i >= 1, "resolution maps start at 1");
        match self.maps.get(i - 1) {
            Some(m) => m.clone(),
            None => Mat::zero(self.start.module.ring(), self.rank(i), self.rank(i - 1)),
        }
    }

    /// `l_i`, the rank of the i-th free module.
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            self.start.module.gens()
        } else if i <= self.maps.len() {
            self.maps[i - 1].rows()
        } else {
            0
        }
    }

    /// The computed maps `φ_1, φ_2, …`.
    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// True when the resolution is known to be finite: the last syzygy module was zero.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// The free module `P_i`.
    pub fn free(&self, i: usize) -> Presentation {
        Presentation::free(self.start.module.ring(), self.rank(i))
    }
}

fn nonzero_rows(m: &Mat) -> Mat {
    let idx: Vec<usize> = (0..m.rows()).filter(|&i| !m.row_is_zero(i)).collect();
    m.select_rows(&idx)
}

fn unit_column(m: &Mat) -> Option<usize> {
    let ring = m.ring();
    (0..m.cols()).find(|&j| (0..m.rows()).any(|i| !ring.is_zero(m.get(i, j)) && ring.is_unit(m.get(i, j))))
}

/// Resolution with maps `φ_1 … φ_{length+1}`, stopping early when a syzygy
/// module vanishes.
pub fn resolution_of_module(p: &Presentation, length: usize) -> Result<Resolution> {
    let start = eliminate_units(p)?;
    let phi1 = nonzero_rows(start.module.relations());
    let mut maps = vec![phi1];
    let mut complete = false;
    while maps.len() < length + 1 {
        let last = maps.len() - 1;
        let mut syz;
        // each pass deletes a row of the previous map, so this terminates
        let mut budget = maps[last].rows() + 1;
        loop {
            syz = syzygies_generators(&maps[last], None)?;
            match unit_column(&syz) {
                Some(j) => {
                    let keep: Vec<usize> = (0..maps[last].rows()).filter(|&r| r != j).collect();
                    maps[last] = maps[last].select_rows(&keep);
                }
                None => break,
            }
            budget -= 1;
            if budget == 0 {
                return Err(Error::Internal("unit cleanup did not stabilize".into()));
            }
        }
        if syz.rows() == 0 {
            complete = true;
            break;
        }
        maps.push(syz);
    }
    if maps.len() == length + 1 && maps.last().is_some_and(|m| m.rows() == 0) {
        complete = true;
    }
    Ok(Resolution { module: Arc::new(p.clone()), start, maps, complete })
}

/// `(⟨m1⟩ + ⟨m2⟩) / ⟨m2⟩` presented on the surviving reduced rows of `m1`.
#[derive(Clone, Debug)]
pub struct Subfactor {
    pub module: Presentation,
    /// Generators of `module` written in the ambient coordinates.
    pub embedding: Mat,
}

pub fn subfactor_module(m1: &Mat, m2: &Mat) -> Result<Subfactor> {
    if m1.cols() != m2.cols() {
        return Err(dim("subfactor_module: column counts differ"));
    }
    let basis = Basis::compute(m2)?;
    let n = nonzero_rows(&basis.reduce(m1)?.0);
    let relations = syzygies_generators(&n, Some(basis.basis()))?;
    Ok(Subfactor { module: Presentation::new(relations), embedding: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{canonical_decomposition, morphisms_equal, Decomposition};
    use crate::ring::Ring;

    fn z() -> Ring {
        Ring::integers()
    }

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_ints(&z(), rows)
    }

    fn cyclic(n: i64) -> Arc<Presentation> {
        Arc::new(Presentation::from_ints(&z(), 1, &[&[n]]))
    }

    fn free(n: usize) -> Arc<Presentation> {
        Arc::new(Presentation::free(&z(), n))
    }

    #[test]
    fn right_divide_examples() {
        assert_eq!(right_divide(&m(&[&[4]]), &m(&[&[2]]), None).unwrap(), Some(m(&[&[2]])));
        assert_eq!(right_divide(&m(&[&[3]]), &m(&[&[2]]), None).unwrap(), None);
        let (x, y) = right_divide_with_rest(&m(&[&[3]]), &m(&[&[2]]), Some(&m(&[&[5]]))).unwrap().unwrap();
        assert_eq!(x.mul(&m(&[&[2]])).unwrap().add(&y.mul(&m(&[&[5]])).unwrap()).unwrap(), m(&[&[3]]));
        assert!(right_divide(&m(&[&[3, 1]]), &m(&[&[2]]), None).is_err());
    }

    #[test]
    fn complete_im_sq_examples() {
        // lifting Z -(2)-> Z/4 through the canonical surjection Z -> Z/4
        let gamma = Morphism::new(free(1), cyclic(4), m(&[&[2]])).unwrap();
        let beta = Morphism::new(free(1), cyclic(4), m(&[&[1]])).unwrap();
        let id = Morphism::identity(free(1));
        let psi = complete_im_sq(&id, &gamma, &beta).unwrap().unwrap();
        assert!(morphisms_equal(&psi.then(&beta).unwrap(), &gamma).unwrap());
        assert_eq!((x_int(psi.matrix().get(0, 0)) - 2).rem_euclid(4), 0);

        let ident = Morphism::identity(cyclic(6));
        let phi = Morphism::new(cyclic(6), cyclic(6), m(&[&[5]])).unwrap();
        let psi = complete_im_sq(&ident, &phi, &ident).unwrap().unwrap();
        assert!(morphisms_equal(&psi, &phi).unwrap());

        let zero = Morphism::zero(free(1), cyclic(4));
        let psi = complete_im_sq(&id, &zero, &beta).unwrap().unwrap();
        assert!(psi.then(&beta).unwrap().is_zero().unwrap());
    }

    fn x_int(e: &crate::ring::Elem) -> i64 {
        match e {
            crate::ring::Elem::Int(x) => x.try_into().unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn leftinverse_examples() {
        let id = Morphism::identity(free(1));
        assert_eq!(leftinverse(&id).unwrap().unwrap().matrix(), &m(&[&[1]]));
        // the projection Z^2 -> Z onto the first coordinate splits
        let proj = Morphism::new(free(2), free(1), m(&[&[1], &[0]])).unwrap();
        let psi = leftinverse(&proj).unwrap().unwrap();
        assert!(morphisms_equal(&psi.then(&proj).unwrap(), &Morphism::identity(free(1))).unwrap());
        let two = Morphism::new(free(1), free(1), m(&[&[2]])).unwrap();
        assert!(leftinverse(&two).unwrap().is_none());
    }

    #[test]
    fn preimage_examples() {
        let id = Morphism::identity(cyclic(6));
        assert_eq!(preimage(&m(&[&[5]]), &id).unwrap(), Some(m(&[&[5]])));
        let three = Morphism::new(free(1), free(1), m(&[&[3]])).unwrap();
        assert_eq!(preimage(&m(&[&[6]]), &three).unwrap(), Some(m(&[&[2]])));
        let proj = Morphism::new(free(1), cyclic(4), m(&[&[1]])).unwrap();
        let x = preimage(&m(&[&[3]]), &proj).unwrap().unwrap();
        assert!((x_int(x.get(0, 0)) - 3) % 4 == 0);
        assert!(preimage(&m(&[&[1]]), &three).unwrap().is_none());
    }

    #[test]
    fn resolution_examples() {
        let r = resolution_of_module(&cyclic(6), 3).unwrap();
        assert_eq!(r.maps().len(), 1);
        assert_eq!(r.map(1), m(&[&[6]]));
        assert_eq!(r.rank(2), 0);
        assert!(r.is_complete());

        let q = Ring::qpoly(&["x", "y"]).unwrap();
        let p = Presentation::new(Mat::parse(&q, &[vec!["x".into()], vec!["y".into()]], 1).unwrap());
        let r = resolution_of_module(&p, 3).unwrap();
        assert_eq!(r.maps().len(), 2);
        let phi2 = r.map(2);
        assert_eq!(phi2.rows(), 1);
        let koszul = Mat::parse(&q, &[vec!["y".into(), "-x".into()]], 2).unwrap();
        assert!(phi2 == koszul || phi2 == koszul.neg());
        assert!(r.is_complete());

        let r = resolution_of_module(&Presentation::free(&z(), 2), 2).unwrap();
        assert_eq!(r.map(1).rows(), 0);
        assert_eq!(r.rank(0), 2);
    }

    #[test]
    fn resolution_over_z4_is_infinite() {
        let z4 = Ring::residue_class_ring(&z(), &[z().from_int(4)]).unwrap();
        let r = resolution_of_module(&Presentation::from_ints(&z4, 1, &[&[2]]), 4).unwrap();
        assert_eq!(r.maps().len(), 5);
        for i in 1..=5 {
            assert_eq!(r.rank(i), 1);
        }
        for i in 1..5 {
            assert!(r.map(i + 1).mul(&r.map(i)).unwrap().is_zero());
        }
    }

    #[test]
    fn subfactor_examples() {
        let s = subfactor_module(&m(&[&[2]]), &m(&[&[4]])).unwrap();
        assert_eq!(canonical_decomposition(&s.module).unwrap(), Decomposition { factors: vec![2.into()], rank: 0 });
        let s = subfactor_module(&m(&[&[4], &[8]]), &m(&[&[2]])).unwrap();
        assert_eq!(s.module.gens(), 0);
        let s = subfactor_module(&m(&[&[2, 0], &[4, 0]]), &Mat::zero(&z(), 0, 2)).unwrap();
        assert_eq!(canonical_decomposition(&s.module).unwrap(), Decomposition { factors: vec![], rank: 1 });
    }
}
