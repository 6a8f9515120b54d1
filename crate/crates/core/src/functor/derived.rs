//! Derived functors. The functor is applied to a short piece of a free
//! resolution and the homology at the relevant spot is read off, either as a
//! defect of two consecutive maps or, for functors with the right exactness,
//! as a kernel or a cokernel of one map.

use std::sync::Arc;

use super::{functor_map, functor_obj, splice, Flavor, Functor, Obj, ObjMap, Variance};
use crate::error::{Error, Result};
use crate::presentation::{Morphism, Presentation};
use crate::procedures::{complete_im_sq, resolution_of_module, right_divide, Resolution};

/// A morphism `φ: M -> N` lifted to chain maps `φ_i: P_i(M) -> P_i(N)`.
#[derive(Clone, Debug)]
pub struct LiftedChainMap {
    pub source: Resolution,
    pub target: Resolution,
    /// `levels[i] = φ_i`, for `i = 0 ..= q+1`.
    pub levels: Vec<Morphism>,
}

impl LiftedChainMap {
    /// `φ_i` for `i ≥ -1`, where `φ_{-1}` is the zero map of zero modules.
    pub fn level(&self, i: isize) -> Morphism {
        if i < 0 {
            let z = Arc::new(Presentation::zero(self.source.start.module.ring()));
            Morphism::zero(z.clone(), z)
        } else {
            self.levels[i as usize].clone()
        }
    }
}

fn free(res: &Resolution, i: isize) -> Arc<Presentation> {
    let ring = res.start.module.ring();
    if i < 0 {
        Arc::new(Presentation::zero(ring))
    } else {
        Arc::new(res.free(i as usize))
    }
}

/// `d_i: P_i -> P_{i-1}`, with `P_{-1} = 0`.
fn boundary(res: &Resolution, i: usize) -> Result<Morphism> {
    if i == 0 {
        return Ok(Morphism::zero(free(res, 0), free(res, -1)));
    }
    Morphism::unchecked(free(res, i as isize), free(res, i as isize - 1), res.map(i))
}

/// `K_q = coker d_{q+1}` together with `κ_q: K_q -> P_{q-1}` given by `d_q`.
fn kappa(res: &Resolution, q: usize) -> Result<Morphism> {
    let k = Arc::new(Presentation::new(res.map(q + 1)));
    let d = boundary(res, q)?;
    Morphism::unchecked(k, d.target_arc().clone(), d.matrix().clone())
}

/// Lifts `φ` through free resolutions of its source and target, up to level `q+1`.
pub fn resolution_of_seq(phi: &Morphism, q: usize) -> Result<LiftedChainMap> {
    let source = resolution_of_module(phi.source(), q)?;
    let target = resolution_of_module(phi.target(), q)?;
    lift_with(phi, source, target, q)
}

fn lift_with(phi: &Morphism, source: Resolution, target: Resolution, q: usize) -> Result<LiftedChainMap> {
    let aug = |r: &Resolution, m: &Arc<Presentation>| Morphism::unchecked(free(r, 0), m.clone(), r.start.change.new_to_old.clone());
    let eps_s = aug(&source, phi.source_arc())?;
    let eps_t = aug(&target, phi.target_arc())?;
    let stuck = || Error::Internal("lifting a morphism through free resolutions failed".into());
    let phi0 = complete_im_sq(&eps_s, phi, &eps_t)?.ok_or_else(stuck)?;
    let mut levels = vec![phi0];
    for i in 1..=q + 1 {
        let ds = source.map(i);
        let dt = target.map(i);
        let lhs = ds.mul(levels[i - 1].matrix())?;
        let x = right_divide(&lhs, &dt, None)?.ok_or_else(stuck)?;
        levels.push(Morphism::unchecked(free(&source, i as isize), free(&target, i as isize), x)?);
    }
    Ok(LiftedChainMap { source, target, levels })
}

/// The maps of the resolution that the functor is applied to, in arrow order.
fn chain(res: &Resolution, q: usize, flavor: Flavor) -> Result<Vec<Morphism>> {
    match flavor {
        Flavor::General => Ok(vec![boundary(res, q + 1)?, boundary(res, q)?]),
        _ => Ok(vec![kappa(res, q)?]),
    }
}

fn reader(flavor: Flavor) -> Functor {
    match flavor {
        Flavor::General => super::defect_functor(),
        Flavor::RightExactCovariant => super::kernel_functor(),
        Flavor::LeftExactContravariant => super::cokernel_functor(),
    }
}

/// Applies `base` in `slot` to every map of `chain` and packs the result as
/// the argument of the reading functor.
fn apply_chain(base: &Functor, slot: usize, chain: &[Morphism], fixed: &[Obj]) -> Result<Obj> {
    let mut images = chain
        .iter()
        .map(|d| functor_map(base, slot, &ObjMap::module(d.clone()), fixed))
        .collect::<Result<Vec<_>>>()?;
    if base.variance(slot) == Variance::Contra {
        images.reverse();
    }
    Ok(match images.len() {
        1 => Obj::Arrow(images.pop().unwrap()),
        _ => {
            let second = images.pop().unwrap();
            Obj::Pair(images.pop().unwrap(), second)
        }
    })
}

fn check_flavor(base: &Functor, slot: usize, flavor: Flavor) -> Result<()> {
    let ok = match flavor {
        Flavor::General => true,
        Flavor::RightExactCovariant => base.variance(slot) == Variance::Co,
        Flavor::LeftExactContravariant => base.variance(slot) == Variance::Contra,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("flavor {flavor:?} does not fit the variance of {}", base.name())))
    }
}

fn derived_argument(base: &Functor, slot: usize, q: usize, flavor: Flavor, args: &[Obj]) -> Result<Obj> {
    check_flavor(base, slot, flavor)?;
    let m = args[slot].as_module()?;
    let res = resolution_of_module(m, q)?;
    let mut fixed = args.to_vec();
    fixed.remove(slot);
    apply_chain(base, slot, &chain(&res, q, flavor)?, &fixed)
}

pub(super) fn object(base: &Functor, slot: usize, q: usize, flavor: Flavor, args: &[Obj]) -> Result<Presentation> {
    let arg = derived_argument(base, slot, q, flavor, args)?;
    functor_obj(&reader(flavor), &[arg])
}

pub(super) fn map(
    base: &Functor,
    dslot: usize,
    q: usize,
    flavor: Flavor,
    slot: usize,
    phi: &ObjMap,
    fixed: &[Obj],
) -> Result<Morphism> {
    let src_args = splice(fixed, slot, phi.source.clone());
    let tgt_args = splice(fixed, slot, phi.target.clone());
    let src_obj = derived_argument(base, dslot, q, flavor, &src_args)?;
    let tgt_obj = derived_argument(base, dslot, q, flavor, &tgt_args)?;

    let mut images = if slot == dslot {
        let f = phi.components[0].clone();
        let lift = resolution_of_seq(&f, q)?;
        let mut level_maps = Vec::new();
        match flavor {
            Flavor::General => {
                for i in [q as isize + 1, q as isize, q as isize - 1] {
                    level_maps.push(lift.level(i));
                }
            }
            _ => {
                let ks = kappa(&lift.source, q)?;
                let kt = kappa(&lift.target, q)?;
                let bar = Morphism::unchecked(ks.source_arc().clone(), kt.source_arc().clone(), lift.level(q as isize).matrix().clone())?;
                level_maps.push(bar);
                level_maps.push(lift.level(q as isize - 1));
            }
        }
        let mut fixed_base = src_args.clone();
        fixed_base.remove(dslot);
        level_maps
            .into_iter()
            .map(|l| functor_map(base, dslot, &ObjMap::module(l), &fixed_base))
            .collect::<Result<Vec<_>>>()?
    } else {
        // passive slot: the resolution stays, the functor moves levelwise
        let m = src_args[dslot].as_module()?;
        let res = resolution_of_module(m, q)?;
        let ch = chain(&res, q, flavor)?;
        let mut levels: Vec<Arc<Presentation>> = ch.iter().map(|d| d.source_arc().clone()).collect();
        levels.push(ch.last().unwrap().target_arc().clone());
        levels
            .into_iter()
            .map(|p| {
                let mut f = src_args.clone();
                f[dslot] = Obj::Module(p);
                f.remove(slot);
                functor_map(base, slot, phi, &f)
            })
            .collect::<Result<Vec<_>>>()?
    };
    if base.variance(dslot) == Variance::Contra {
        images.reverse();
    }
    let objmap = match base.variance(slot) {
        Variance::Co => ObjMap::new(src_obj, tgt_obj, images)?,
        Variance::Contra => ObjMap::new(tgt_obj, src_obj, images)?,
    };
    functor_map(&reader(flavor), 0, &objmap, &[])
}
