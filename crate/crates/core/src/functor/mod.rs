//! Functors as values.
//!
//! A [`Functor`] is inspectable data: a basic functor from the catalogue, a
//! composite of two functors, a derived functor, or a functor with some slots
//! frozen to fixed objects. [`functor_obj`] and [`functor_map`] evaluate any of
//! them by structural dispatch.
//!
//! Basic functors induce maps through a hull: an auxiliary functor whose
//! morphism part is a plain matrix, together with a natural embedding of the
//! functor into it. The induced map is then a particular solution of a
//! linear system (an image square with injective bottom map).

mod basic;
mod catalogue;
mod complex;
mod derived;
mod expr;

use std::fmt;
use std::sync::Arc;

use crate::error::{dim, Error, Result};
use crate::presentation::{Morphism, Presentation};

pub use catalogue::{
    cokernel_functor, defect_functor, ext, ext_ext, hom_functor, hom_hom, hom_r_functor, identity_functor,
    instantiate_standard, kernel_functor, tensor_functor, tor, StandardFunctors,
};
pub use complex::{functor_on_complex, mor_slice, obj_slice, Complex};
pub use derived::{resolution_of_seq, LiftedChainMap};
pub use expr::parse_functor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Co,
    Contra,
}

impl Variance {
    pub fn compose(self, other: Variance) -> Variance {
        if self == other {
            Variance::Co
        } else {
            Variance::Contra
        }
    }
}

/// What a slot accepts: a module, a morphism viewed as an object, or a
/// composable pair of morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlotKind {
    Module,
    Arrow,
    Pair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub variance: Variance,
    pub kind: SlotKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicKind {
    Identity,
    Cokernel,
    Kernel,
    Defect,
    HomR,
    Tensor,
    Hom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Defect of the functor applied to a free resolution.
    General,
    /// Kernel route, valid for right exact covariant functors.
    RightExactCovariant,
    /// Cokernel route, valid for left exact contravariant functors.
    LeftExactContravariant,
}

#[derive(Clone, Debug)]
pub enum FunctorKind {
    Basic(BasicKind),
    Composed { outer: Arc<Functor>, slot: usize, inner: Arc<Functor> },
    Derived { base: Arc<Functor>, slot: usize, degree: usize, flavor: Flavor },
    Fixed { base: Arc<Functor>, slot: usize, value: Obj },
}

#[derive(Clone, Debug)]
pub struct Functor {
    name: String,
    slots: Vec<Slot>,
    kind: FunctorKind,
}

/// An argument of a functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obj {
    Module(Arc<Presentation>),
    Arrow(Morphism),
    /// Composable `α1: A' -> A`, `α2: A -> A''`.
    Pair(Morphism, Morphism),
}

impl Obj {
    pub fn module(p: impl Into<Arc<Presentation>>) -> Obj {
        Obj::Module(p.into())
    }

    pub fn kind(&self) -> SlotKind {
        match self {
            Obj::Module(_) => SlotKind::Module,
            Obj::Arrow(_) => SlotKind::Arrow,
            Obj::Pair(..) => SlotKind::Pair,
        }
    }

    /// The modules of the object in arrow order.
    pub fn modules(&self) -> Vec<Arc<Presentation>> {
        match self {
            Obj::Module(m) => vec![m.clone()],
            Obj::Arrow(a) => vec![a.source_arc().clone(), a.target_arc().clone()],
            Obj::Pair(a, b) => vec![a.source_arc().clone(), a.target_arc().clone(), b.target_arc().clone()],
        }
    }

    pub fn as_module(&self) -> Result<&Arc<Presentation>> {
        match self {
            Obj::Module(m) => Ok(m),
            _ => Err(Error::Invalid("expected a module argument".into())),
        }
    }

    pub fn identity_map(&self) -> ObjMap {
        ObjMap {
            source: self.clone(),
            target: self.clone(),
            components: self.modules().into_iter().map(Morphism::identity).collect(),
        }
    }
}

/// A morphism of functor arguments: one component per module of the
/// argument, in arrow order, making every square commute.
#[derive(Clone, Debug)]
pub struct ObjMap {
    pub source: Obj,
    pub target: Obj,
    pub components: Vec<Morphism>,
}

impl ObjMap {
    pub fn module(phi: Morphism) -> ObjMap {
        ObjMap {
            source: Obj::Module(phi.source_arc().clone()),
            target: Obj::Module(phi.target_arc().clone()),
            components: vec![phi],
        }
    }

    pub fn new(source: Obj, target: Obj, components: Vec<Morphism>) -> Result<ObjMap> {
        let (s, t) = (source.modules(), target.modules());
        if source.kind() != target.kind() || components.len() != s.len() {
            return Err(Error::Invalid("map components do not match the argument shape".into()));
        }
        for (c, (a, b)) in components.iter().zip(s.iter().zip(&t)) {
            if c.source().gens() != a.gens() || c.target().gens() != b.gens() {
                return Err(dim("map component does not match the argument modules"));
            }
        }
        Ok(ObjMap { source, target, components })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ObjMap) -> Result<ObjMap> {
        let components = self.components.iter().zip(&next.components).map(|(a, b)| a.then(b)).collect::<Result<_>>()?;
        Ok(ObjMap { source: self.source.clone(), target: next.target.clone(), components })
    }
}

impl Functor {
    pub(crate) fn basic(name: &str, kind: BasicKind, slots: Vec<Slot>) -> Functor {
        Functor { name: name.into(), slots, kind: FunctorKind::Basic(kind) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn variance(&self, slot: usize) -> Variance {
        self.slots[slot].variance
    }

    pub fn kind(&self) -> &FunctorKind {
        &self.kind
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Functor {
        self.name = name.into();
        self
    }

    /// Freezes `slot` to `value`, leaving a functor of the remaining slots.
    pub fn fix(&self, slot: usize, value: Obj) -> Result<Functor> {
        let s = self.slots.get(slot).ok_or_else(|| Error::Invalid(format!("{} has no slot {slot}", self.name)))?;
        if s.kind != value.kind() {
            return Err(Error::Invalid(format!("slot {slot} of {} takes a {:?}", self.name, s.kind)));
        }
        let mut slots = self.slots.clone();
        slots.remove(slot);
        Ok(Functor {
            name: format!("{}[{slot}]", self.name),
            slots,
            kind: FunctorKind::Fixed { base: Arc::new(self.clone()), slot, value },
        })
    }

    pub fn obj(&self, args: &[Obj]) -> Result<Presentation> {
        functor_obj(self, args)
    }

    /// Unary shorthand.
    pub fn on(&self, m: impl Into<Arc<Presentation>>) -> Result<Presentation> {
        functor_obj(self, &[Obj::Module(m.into())])
    }

    /// Unary shorthand for the morphism part.
    pub fn on_map(&self, phi: &Morphism) -> Result<Morphism> {
        functor_map(self, 0, &ObjMap::module(phi.clone()), &[])
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

pub fn compose_functors(outer: &Functor, slot: usize, inner: &Functor) -> Result<Functor> {
    let s = *outer.slots.get(slot).ok_or_else(|| Error::Invalid(format!("{} has no slot {slot}", outer.name)))?;
    if s.kind != SlotKind::Module {
        return Err(Error::Invalid(format!("slot {slot} of {} does not take modules", outer.name)));
    }
    let mut slots = outer.slots[..slot].to_vec();
    slots.extend(inner.slots.iter().map(|t| Slot { variance: s.variance.compose(t.variance), kind: t.kind }));
    slots.extend_from_slice(&outer.slots[slot + 1..]);
    Ok(Functor {
        name: format!("{}∘{}", outer.name, inner.name),
        slots,
        kind: FunctorKind::Composed { outer: Arc::new(outer.clone()), slot, inner: Arc::new(inner.clone()) },
    })
}

fn derive(g: &Functor, slot: usize, q: usize, flavor: Flavor, want: Variance, prefix: &str) -> Result<Functor> {
    let s = *g.slots.get(slot).ok_or_else(|| Error::Invalid(format!("{} has no slot {slot}", g.name)))?;
    if s.kind != SlotKind::Module {
        return Err(Error::Invalid(format!("cannot derive {} in a slot that does not take modules", g.name)));
    }
    if s.variance != want {
        return Err(Error::Invalid(format!("{} has the wrong variance in slot {slot} for {prefix}", g.name)));
    }
    Ok(Functor {
        name: format!("{prefix}{q}({})", g.name),
        slots: g.slots.clone(),
        kind: FunctorKind::Derived { base: Arc::new(g.clone()), slot, degree: q, flavor },
    })
}

/// `L_q G` in `slot`, through the defect of `G` on a free resolution.
pub fn left_derived(g: &Functor, slot: usize, q: usize) -> Result<Functor> {
    derive(g, slot, q, Flavor::General, Variance::Co, "L")
}

/// `R^q G` in `slot` for `G` contravariant there.
pub fn right_derived_cofunctor(g: &Functor, slot: usize, q: usize) -> Result<Functor> {
    derive(g, slot, q, Flavor::General, Variance::Contra, "R")
}

/// `L_q G` for a right exact `G`, computed as a kernel (the caller vouches for exactness).
pub fn left_derived_right_exact(g: &Functor, slot: usize, q: usize) -> Result<Functor> {
    derive(g, slot, q, Flavor::RightExactCovariant, Variance::Co, "L")
}

/// `R^q G` for a left exact contravariant `G`, computed as a cokernel.
pub fn right_derived_left_exact(g: &Functor, slot: usize, q: usize) -> Result<Functor> {
    derive(g, slot, q, Flavor::LeftExactContravariant, Variance::Contra, "R")
}

fn check_args(f: &Functor, args: &[Obj]) -> Result<()> {
    if args.len() != f.arity() {
        return Err(Error::Invalid(format!("{} takes {} arguments, got {}", f.name, f.arity(), args.len())));
    }
    let ring = args.iter().flat_map(|a| a.modules()).next().map(|m| m.ring().clone());
    for (i, (a, s)) in args.iter().zip(&f.slots).enumerate() {
        if a.kind() != s.kind {
            return Err(Error::Invalid(format!("argument {i} of {} must be a {:?}", f.name, s.kind)));
        }
        for m in a.modules() {
            if Some(m.ring()) != ring.as_ref() {
                return Err(Error::RingMismatch(format!("arguments of {} live over different rings", f.name)));
            }
        }
    }
    Ok(())
}

pub(crate) fn splice(fixed: &[Obj], slot: usize, value: Obj) -> Vec<Obj> {
    let mut v = fixed.to_vec();
    v.insert(slot, value);
    v
}

/// The object part of `f`.
pub fn functor_obj(f: &Functor, args: &[Obj]) -> Result<Presentation> {
    check_args(f, args)?;
    match &f.kind {
        FunctorKind::Basic(k) => Ok((*basic::evaluate(*k, args)?.out.module).clone()),
        FunctorKind::Composed { outer, slot, inner } => {
            let n = inner.arity();
            let inner_val = functor_obj(inner, &args[*slot..*slot + n])?;
            let mut outer_args = args[..*slot].to_vec();
            outer_args.push(Obj::module(inner_val));
            outer_args.extend_from_slice(&args[*slot + n..]);
            functor_obj(outer, &outer_args)
        }
        FunctorKind::Derived { base, slot, degree, flavor } => derived::object(base, *slot, *degree, *flavor, args),
        FunctorKind::Fixed { base, slot, value } => functor_obj(base, &splice(args, *slot, value.clone())),
    }
}

/// The morphism part of `f` in `slot`; `fixed` holds the arguments of the
/// other slots. Covariant slots give `F(source) -> F(target)`, contravariant
/// ones `F(target) -> F(source)`.
pub fn functor_map(f: &Functor, slot: usize, phi: &ObjMap, fixed: &[Obj]) -> Result<Morphism> {
    if slot >= f.arity() {
        return Err(Error::Invalid(format!("{} has no slot {slot}", f.name)));
    }
    check_args(f, &splice(fixed, slot, phi.source.clone()))?;
    check_args(f, &splice(fixed, slot, phi.target.clone()))?;
    let out = match &f.kind {
        FunctorKind::Basic(k) => basic::map(*k, f.variance(slot), slot, phi, fixed)?,
        FunctorKind::Composed { outer, slot: os, inner } => {
            let n = inner.arity();
            let all = splice(fixed, slot, phi.source.clone());
            if slot >= *os && slot < os + n {
                // inside the inner functor
                let inner_fixed: Vec<Obj> = {
                    let mut v = all[*os..os + n].to_vec();
                    v.remove(slot - os);
                    v
                };
                let inner_map = functor_map(inner, slot - os, phi, &inner_fixed)?;
                let mut outer_fixed = all[..*os].to_vec();
                outer_fixed.extend_from_slice(&all[os + n..]);
                functor_map(outer, *os, &ObjMap::module(inner_map), &outer_fixed)?
            } else {
                let inner_val = Obj::module(functor_obj(inner, &all[*os..os + n])?);
                let mut outer_fixed = all[..*os].to_vec();
                outer_fixed.push(inner_val);
                outer_fixed.extend_from_slice(&all[os + n..]);
                let outer_slot = if slot < *os { slot } else { slot - n + 1 };
                outer_fixed.remove(outer_slot);
                functor_map(outer, outer_slot, phi, &outer_fixed)?
            }
        }
        FunctorKind::Derived { base, slot: ds, degree, flavor } => {
            derived::map(base, *ds, *degree, *flavor, slot, phi, fixed)?
        }
        FunctorKind::Fixed { base, slot: fs, value } => {
            let all = splice(&splice(fixed, slot, phi.source.clone()), *fs, value.clone());
            let base_slot = if slot < *fs { slot } else { slot + 1 };
            let mut base_fixed = all;
            base_fixed.remove(base_slot);
            functor_map(base, base_slot, phi, &base_fixed)?
        }
    };
    debug_assert!(out.is_valid().unwrap_or(false), "{} produced an invalid morphism", f.name);
    Ok(out)
}

/// The natural embedding of a basic functor's value into its hull.
pub fn hull_embedding(f: &Functor, args: &[Obj]) -> Result<Morphism> {
    check_args(f, args)?;
    match &f.kind {
        FunctorKind::Basic(k) => basic::evaluate(*k, args)?.embedding(),
        _ => Err(Error::Unsupported(format!("{} is not a basic functor", f.name))),
    }
}

/// The hull functor's morphism part for a basic functor.
pub fn hull_map(f: &Functor, slot: usize, phi: &ObjMap, fixed: &[Obj]) -> Result<Morphism> {
    match &f.kind {
        FunctorKind::Basic(k) => basic::hull_morphism(*k, f.variance(slot), slot, phi, fixed),
        _ => Err(Error::Unsupported(format!("{} is not a basic functor", f.name))),
    }
}
