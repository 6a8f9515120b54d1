//! Finitely presented modules and their morphisms.
//!
//! A [`Presentation`] with `gens = l0` and an `l1×l0` relation matrix `M`
//! stands for `R^{1×l0} / R^{1×l1}M`. A [`Morphism`] between two
//! presentations is an `l0×l0'` matrix carrying relations to relations.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::backend::{smith_normal_form, Basis};
use crate::error::{dim, Error, Result};
use crate::matrix::Mat;
use crate::ring::{Backend, Elem, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    relations: Mat,
}

impl Presentation {
    /// The module presented by `relations` on `relations.cols()` generators.
    pub fn new(relations: Mat) -> Presentation {
        Presentation { relations }
    }

    pub fn free(ring: &Ring, rank: usize) -> Presentation {
        Presentation::new(Mat::zero(ring, 0, rank))
    }

    pub fn zero(ring: &Ring) -> Presentation {
        Presentation::free(ring, 0)
    }

    /// `R^{1×gens}` modulo the given integer rows.
    pub fn from_ints(ring: &Ring, gens: usize, rows: &[&[i64]]) -> Presentation {
        let rel = if rows.is_empty() { Mat::zero(ring, 0, gens) } else { Mat::from_ints(ring, rows) };
        assert_eq!(rel.cols(), gens, "relation width");
        Presentation::new(rel)
    }

    /// `R/⟨a_1⟩ ⊕ … ⊕ R/⟨a_k⟩`.
    pub fn diagonal(ring: &Ring, entries: &[Elem]) -> Presentation {
        let mut rel = Mat::zero(ring, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            rel.set(i, i, ring.normalize(e.clone()));
        }
        Presentation::new(rel)
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn gens(&self) -> usize {
        self.relations.cols()
    }

    pub fn relations(&self) -> &Mat {
        &self.relations
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_zero()
    }

    /// True iff every generator is zero in the module.
    pub fn is_zero_module(&self) -> Result<bool> {
        Basis::compute(&self.relations)?.contains(&Mat::identity(self.ring(), self.gens()))
    }

    pub fn direct_sum(&self, other: &Presentation) -> Result<Presentation> {
        Ok(Presentation::new(self.relations.direct_sum(&other.relations)?))
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation<{}>(gens={}, relations={})", self.ring(), self.gens(), self.relations)
    }
}

/// A morphism `source -> target`, given by an `l0 × l0'` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    matrix: Mat,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?}, {})", self.source, self.target, self.matrix)
    }
}

fn check_shape(source: &Presentation, target: &Presentation, matrix: &Mat) -> Result<()> {
    if source.ring() != target.ring() || matrix.ring() != source.ring() {
        return Err(Error::RingMismatch(format!("morphism between {} and {}", source.ring(), target.ring())));
    }
    if matrix.rows() != source.gens() || matrix.cols() != target.gens() {
        return Err(dim(format!(
            "morphism matrix is {}x{} but source has {} and target {} generators",
            matrix.rows(),
            matrix.cols(),
            source.gens(),
            target.gens()
        )));
    }
    Ok(())
}

impl Morphism {
    /// Checked constructor: rejects matrices that do not respect relations.
    pub fn new(source: impl Into<Arc<Presentation>>, target: impl Into<Arc<Presentation>>, matrix: Mat) -> Result<Morphism> {
        let m = Morphism::unchecked(source, target, matrix)?;
        if !m.is_valid()? {
            return Err(Error::Invalid("matrix does not carry source relations into target relations".into()));
        }
        Ok(m)
    }

    /// Checks shapes only; validity is the caller's responsibility.
    pub fn unchecked(source: impl Into<Arc<Presentation>>, target: impl Into<Arc<Presentation>>, matrix: Mat) -> Result<Morphism> {
        let (source, target) = (source.into(), target.into());
        check_shape(&source, &target, &matrix)?;
        Ok(Morphism { source, target, matrix })
    }

    pub fn identity(p: impl Into<Arc<Presentation>>) -> Morphism {
        let p = p.into();
        let matrix = Mat::identity(p.ring(), p.gens());
        Morphism { source: p.clone(), target: p, matrix }
    }

    pub fn zero(source: impl Into<Arc<Presentation>>, target: impl Into<Arc<Presentation>>) -> Morphism {
        let (source, target) = (source.into(), target.into());
        let matrix = Mat::zero(source.ring(), source.gens(), target.gens());
        Morphism { source, target, matrix }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn is_valid(&self) -> Result<bool> {
        morphism_is_valid(self)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.target.gens() != next.source.gens() {
            return Err(dim("composing morphisms whose target and source differ"));
        }
        Ok(Morphism { source: self.source.clone(), target: next.target.clone(), matrix: self.matrix.mul(&next.matrix)? })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn neg(&self) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.neg() }
    }

    /// True iff this is the zero homomorphism.
    pub fn is_zero(&self) -> Result<bool> {
        Basis::compute(self.target.relations())?.contains(&self.matrix)
    }

    pub fn direct_sum(&self, other: &Morphism) -> Result<Morphism> {
        Ok(Morphism {
            source: Arc::new(self.source.direct_sum(&other.source)?),
            target: Arc::new(self.target.direct_sum(&other.target)?),
            matrix: self.matrix.direct_sum(&other.matrix)?,
        })
    }

    /// The same homomorphism read through new generators of source and target.
    pub fn transport(&self, source: &Represented, target: &Represented) -> Result<Morphism> {
        let m = source.change.new_to_old.mul(&self.matrix)?.mul(&target.change.old_to_new)?;
        Morphism::unchecked(source.module.clone(), target.module.clone(), m)
    }
}

/// Mutually inverse generator changes between two presentations of one module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChange {
    /// Old generators written in the new ones (`l0 × l0'`).
    pub old_to_new: Mat,
    /// New generators written in the old ones (`l0' × l0`).
    pub new_to_old: Mat,
}

impl BaseChange {
    pub fn identity(ring: &Ring, n: usize) -> BaseChange {
        BaseChange { old_to_new: Mat::identity(ring, n), new_to_old: Mat::identity(ring, n) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &BaseChange) -> Result<BaseChange> {
        Ok(BaseChange {
            old_to_new: self.old_to_new.mul(&next.old_to_new)?,
            new_to_old: next.new_to_old.mul(&self.new_to_old)?,
        })
    }
}


/// A new presentation of a module, with the change of generators from the old one.
#[derive(Clone, Debug)]
pub struct Represented {
    pub module: Arc<Presentation>,
    pub change: BaseChange,
}

impl Represented {
    pub fn unchanged(p: impl Into<Arc<Presentation>>) -> Represented {
        let module = p.into();
        let change = BaseChange::identity(module.ring(), module.gens());
        Represented { module, change }
    }

    /// The isomorphism from the old presentation to the new one.
    pub fn iso_from(&self, old: impl Into<Arc<Presentation>>) -> Result<Morphism> {
        Morphism::unchecked(old, self.module.clone(), self.change.old_to_new.clone())
    }

    /// The isomorphism from the new presentation back to the old one.
    pub fn iso_to(&self, old: impl Into<Arc<Presentation>>) -> Result<Morphism> {
        Morphism::unchecked(self.module.clone(), old, self.change.new_to_old.clone())
    }
}

pub fn morphism_is_valid(phi: &Morphism) -> Result<bool> {
    check_shape(&phi.source, &phi.target, &phi.matrix)?;
    let image = phi.source.relations().mul(&phi.matrix)?;
    Basis::compute(phi.target.relations())?.contains(&image)
}

pub fn morphisms_equal(a: &Morphism, b: &Morphism) -> Result<bool> {
    if a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols() {
        return Err(dim("comparing morphisms of different shapes"));
    }
    Basis::compute(a.target.relations())?.contains(&a.matrix.sub(&b.matrix)?)
}

pub fn presentations_equal(a: &Presentation, b: &Presentation) -> bool {
    if a.gens() != b.gens() || a.ring() != b.ring() {
        return false;
    }
    let within = |x: &Presentation, y: &Presentation| {
        Basis::compute(y.relations()).and_then(|basis| basis.contains(x.relations())).unwrap_or(false)
    };
    within(a, b) && within(b, a)
}

fn find_unit(m: &Mat) -> Option<(usize, usize, Elem)> {
    let ring = m.ring();
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let e = m.get(i, j);
            if ring.is_zero(e) {
                continue;
            }
            if let Some(inv) = ring.inverse(e) {
                return Some((i, j, inv));
            }
        }
    }
    None
}

/// Removes generators that some relation expresses through the others, until
/// the relation matrix has no unit entry.
pub fn eliminate_units(p: &Presentation) -> Result<Represented> {
    let ring = p.ring().clone();
    let mut rel = p.relations().clone();
    let mut change = BaseChange::identity(&ring, p.gens());
    while let Some((i, j, inv)) = find_unit(&rel) {
        let n = rel.cols();
        let others: Vec<usize> = (0..n).filter(|&k| k != j).collect();
        // g_j = -u^{-1} Σ_{k≠j} M[i][k] g_k
        let mut old_to_new = Mat::zero(&ring, n, n - 1);
        for (new, &old) in others.iter().enumerate() {
            old_to_new.set(old, new, ring.one());
            let c = ring.neg(&ring.mul(&inv, rel.get(i, old)));
            old_to_new.set(j, new, c);
        }
        let new_to_old = Mat::identity(&ring, n).select_rows(&others);
        let keep: Vec<usize> = (0..rel.rows()).filter(|&r| r != i).collect();
        rel = rel.select_rows(&keep).mul(&old_to_new)?;
        change = change.then(&BaseChange { old_to_new, new_to_old })?;
    }
    Ok(Represented { module: Arc::new(Presentation::new(rel)), change })
}

/// A smaller presentation of the same module: no unit entries, no zero or
/// repeated relations, relations replaced by the backend's reduced basis.
pub fn better_generators(p: &Presentation) -> Result<Represented> {
    let mut current = Represented::unchanged(p.clone());
    loop {
        let step = eliminate_units(&current.module)?;
        let change = current.change.then(&step.change)?;
        let rel = step.module.relations();
        let basis = Basis::compute(rel)?.basis().clone();
        let settled = find_unit(&basis).is_none();
        current = Represented { module: Arc::new(Presentation::new(basis)), change };
        if settled {
            return Ok(current);
        }
    }
}

/// Invariant factors (non-units, each dividing the next) and free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl Decomposition {
    pub fn is_zero(&self) -> bool {
        self.factors.is_empty() && self.rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.factors.iter().product())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("R".into()),
            r => parts.push(format!("R^{r}")),
        }
        parts.extend(self.factors.iter().map(|d| format!("R/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The isomorphism class of a module over the integers, a field, or a
/// residue class ring of one of those.
pub fn canonical_decomposition(p: &Presentation) -> Result<Decomposition> {
    let ring = p.ring();
    let rel = match ring.backend() {
        Backend::Residue(r) if r.base.is_pir() => {
            let lifted = p.relations().reinterpret(&r.base);
            let block = Mat::identity(&r.base, p.gens()).kronecker(&r.ideal)?;
            lifted.stack(&block)?
        }
        Backend::Integers | Backend::Rationals | Backend::PrimeField(_) => p.relations().clone(),
        _ => return Err(Error::Unsupported(format!("isomorphism classes over {ring}"))),
    };
    let snf = smith_normal_form(&rel)?;
    let over_z = matches!(rel.ring().backend(), Backend::Integers);
    let factors = snf
        .diag
        .iter()
        .filter_map(|d| match d {
            Elem::Int(x) if over_z && !x.is_one() => Some(x.clone()),
            _ => None,
        })
        .collect();
    Ok(Decomposition { factors, rank: p.gens() - snf.diag.len() })
}
