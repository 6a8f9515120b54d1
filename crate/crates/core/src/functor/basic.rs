//! Object parts, hulls and natural embeddings of the basic functors.

use std::sync::Arc;

use super::{splice, BasicKind, Obj, ObjMap, Variance};
use crate::backend::syzygies_generators;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::presentation::{better_generators, Morphism, Presentation, Represented};
use crate::procedures::{right_divide, subfactor_module};

/// A basic functor evaluated at some arguments.
pub(super) struct Evaluated {
    /// The returned presentation and its change of generators from `raw`.
    pub out: Represented,
    /// The hull object.
    pub hull: Arc<Presentation>,
    /// Generators of `raw` written in the hull; `None` when `raw` is the hull.
    pub iota: Option<Mat>,
}

impl Evaluated {
    fn own_hull(raw: Presentation) -> Result<Evaluated> {
        let out = better_generators(&raw)?;
        Ok(Evaluated { out, hull: Arc::new(raw), iota: None })
    }

    fn embedded(raw: Presentation, hull: Presentation, iota: Mat) -> Result<Evaluated> {
        let out = better_generators(&raw)?;
        Ok(Evaluated { out, hull: Arc::new(hull), iota: Some(iota) })
    }

    /// Generators of the returned presentation written in the hull.
    fn to_hull(&self) -> Result<Mat> {
        match &self.iota {
            None => Ok(self.out.change.new_to_old.clone()),
            Some(i) => self.out.change.new_to_old.mul(i),
        }
    }

    pub fn embedding(&self) -> Result<Morphism> {
        Morphism::unchecked(self.out.module.clone(), self.hull.clone(), self.to_hull()?)
    }
}

/// Kernel of `x ↦ x·alpha` from `coker(source)` to `coker(target_rel)`, as a
/// subfactor of the source plus its embedding.
fn kernel_parts(alpha: &Mat, source_rel: &Mat, target_rel: &Mat) -> Result<(Presentation, Mat)> {
    let gens = syzygies_generators(alpha, Some(target_rel))?;
    let sub = subfactor_module(&gens, source_rel)?;
    Ok((sub.module, sub.embedding))
}

fn module(args: &[Obj], i: usize) -> Result<&Arc<Presentation>> {
    args[i].as_module()
}

pub(super) fn evaluate(kind: BasicKind, args: &[Obj]) -> Result<Evaluated> {
    match kind {
        BasicKind::Identity => Evaluated::own_hull((**module(args, 0)?).clone()),
        BasicKind::Cokernel => {
            let Obj::Arrow(alpha) = &args[0] else { unreachable!("checked by caller") };
            let rel = alpha.matrix().stack(alpha.target().relations())?;
            Evaluated::own_hull(Presentation::new(rel))
        }
        BasicKind::Kernel => {
            let Obj::Arrow(alpha) = &args[0] else { unreachable!("checked by caller") };
            let a = alpha.source();
            let (raw, iota) = kernel_parts(alpha.matrix(), a.relations(), alpha.target().relations())?;
            Evaluated::embedded(raw, a.clone(), iota)
        }
        BasicKind::Defect => {
            let Obj::Pair(a1, a2) = &args[0] else { unreachable!("checked by caller") };
            let hull_rel = a1.matrix().stack(a1.target().relations())?;
            let (raw, iota) = kernel_parts(a2.matrix(), &hull_rel, a2.target().relations())?;
            Evaluated::embedded(raw, Presentation::new(hull_rel), iota)
        }
        BasicKind::HomR => {
            let m = module(args, 0)?;
            let ring = m.ring();
            let (l0, l1) = (m.gens(), m.relations().rows());
            let (raw, iota) = kernel_parts(&m.relations().theta_transpose(), &Mat::zero(ring, 0, l0), &Mat::zero(ring, 0, l1))?;
            Evaluated::embedded(raw, Presentation::free(ring, l0), iota)
        }
        BasicKind::Tensor => {
            let (m, l) = (module(args, 0)?, module(args, 1)?);
            let ring = m.ring();
            let left = m.relations().kronecker(&Mat::identity(ring, l.gens()))?;
            let right = Mat::identity(ring, m.gens()).kronecker(l.relations())?;
            Evaluated::own_hull(Presentation::new(left.stack(&right)?))
        }
        BasicKind::Hom => {
            let (m, l) = (module(args, 0)?, module(args, 1)?);
            let ring = m.ring();
            let (j, k, l1) = (m.gens(), l.gens(), m.relations().rows());
            let source_rel = Mat::identity(ring, j).kronecker(l.relations())?;
            let target_rel = Mat::identity(ring, l1).kronecker(l.relations())?;
            let kappa = m.relations().kronecker(&Mat::identity(ring, k))?.transpose();
            let (raw, iota) = kernel_parts(&kappa, &source_rel, &target_rel)?;
            Evaluated::embedded(raw, Presentation::new(source_rel), iota)
        }
    }
}

/// Matrix of the hull functor's morphism part.
fn hull_matrix(kind: BasicKind, slot: usize, phi: &ObjMap, fixed: &[Obj]) -> Result<Mat> {
    let c = |i: usize| phi.components[i].matrix().clone();
    Ok(match kind {
        BasicKind::Identity | BasicKind::Kernel => c(0),
        BasicKind::Cokernel | BasicKind::Defect => c(1),
        BasicKind::HomR => c(0).theta_transpose(),
        BasicKind::Tensor | BasicKind::Hom => {
            let other = fixed[0].as_module()?.gens();
            let ring = phi.components[0].ring();
            let m = c(0);
            match (kind, slot) {
                (BasicKind::Tensor, 0) => m.kronecker(&Mat::identity(ring, other))?,
                (BasicKind::Hom, 0) => m.kronecker(&Mat::identity(ring, other))?.transpose(),
                _ => Mat::identity(ring, other).kronecker(&m)?,
            }
        }
    })
}

pub(super) fn hull_morphism(kind: BasicKind, variance: Variance, slot: usize, phi: &ObjMap, fixed: &[Obj]) -> Result<Morphism> {
    let s = evaluate(kind, &splice(fixed, slot, phi.source.clone()))?;
    let t = evaluate(kind, &splice(fixed, slot, phi.target.clone()))?;
    let h = hull_matrix(kind, slot, phi, fixed)?;
    match variance {
        Variance::Co => Morphism::unchecked(s.hull, t.hull, h),
        Variance::Contra => Morphism::unchecked(t.hull, s.hull, h),
    }
}

/// `F(φ)` from the square `ι_from · H = F(φ) · ι_to`.
fn induced(from: &Evaluated, to: &Evaluated, h: &Mat) -> Result<Morphism> {
    let lhs = from.to_hull()?.mul(h)?;
    let x = match &to.iota {
        None => lhs.mul(&to.out.change.old_to_new)?,
        Some(_) => right_divide(&lhs, &to.to_hull()?, Some(to.hull.relations()))?
            .ok_or_else(|| Error::Internal("hull square is not completable".into()))?,
    };
    Morphism::unchecked(from.out.module.clone(), to.out.module.clone(), x)
}

pub(super) fn map(kind: BasicKind, variance: Variance, slot: usize, phi: &ObjMap, fixed: &[Obj]) -> Result<Morphism> {
    let s = evaluate(kind, &splice(fixed, slot, phi.source.clone()))?;
    let t = evaluate(kind, &splice(fixed, slot, phi.target.clone()))?;
    let h = hull_matrix(kind, slot, phi, fixed)?;
    match variance {
        Variance::Co => induced(&s, &t, &h),
        Variance::Contra => induced(&t, &s, &h),
    }
}
