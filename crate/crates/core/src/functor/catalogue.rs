//! The standard functors.

use super::{
    compose_functors, left_derived, left_derived_right_exact, right_derived_cofunctor, right_derived_left_exact,
    BasicKind, Functor, Slot, SlotKind, Variance,
};

fn slot(variance: Variance, kind: SlotKind) -> Slot {
    Slot { variance, kind }
}

const CO_MODULE: Slot = Slot { variance: Variance::Co, kind: SlotKind::Module };
const CONTRA_MODULE: Slot = Slot { variance: Variance::Contra, kind: SlotKind::Module };

pub fn identity_functor() -> Functor {
    Functor::basic("Identity", BasicKind::Identity, vec![CO_MODULE])
}

/// `(α: A' -> A) ↦ coker α`
pub fn cokernel_functor() -> Functor {
    Functor::basic("Cokernel", BasicKind::Cokernel, vec![slot(Variance::Co, SlotKind::Arrow)])
}

/// `(α: A -> A'') ↦ ker α`
pub fn kernel_functor() -> Functor {
    Functor::basic("Kernel", BasicKind::Kernel, vec![slot(Variance::Co, SlotKind::Arrow)])
}

/// `(α1, α2) ↦ ker α2 / im α1`
pub fn defect_functor() -> Functor {
    Functor::basic("DefectOfHoms", BasicKind::Defect, vec![slot(Variance::Co, SlotKind::Pair)])
}

/// `M ↦ Hom_R(M, R)`, turned into a left module by the ring's involution.
pub fn hom_r_functor() -> Functor {
    Functor::basic("HomR", BasicKind::HomR, vec![CONTRA_MODULE])
}

pub fn tensor_functor() -> Functor {
    Functor::basic("Tensor", BasicKind::Tensor, vec![CO_MODULE, CO_MODULE])
}

/// `(M, L) ↦ Hom(M, L)`, contravariant in `M`.
pub fn hom_functor() -> Functor {
    Functor::basic("Hom", BasicKind::Hom, vec![CONTRA_MODULE, CO_MODULE])
}

/// `Ext^q(M, L)`, derived in `M`.
pub fn ext(q: usize) -> Functor {
    right_derived_cofunctor(&hom_functor(), 0, q).expect("Hom is contravariant in slot 0").with_name(format!("Ext{q}"))
}

/// `Tor_q(M, L)`, derived in `M`.
pub fn tor(q: usize) -> Functor {
    left_derived(&tensor_functor(), 0, q).expect("Tensor is covariant in slot 0").with_name(format!("Tor{q}"))
}

/// `(M, L, L') ↦ Hom(Hom(M, L), L')`
pub fn hom_hom() -> Functor {
    compose_functors(&hom_functor(), 0, &hom_functor()).expect("Hom takes modules").with_name("HomHom")
}

/// `(M, L, L') ↦ Ext^j(Ext^k(M, L), L')`
pub fn ext_ext(j: usize, k: usize) -> Functor {
    compose_functors(&ext(j), 0, &ext(k)).expect("Ext takes modules").with_name(format!("Ext{j}Ext{k}"))
}

/// The standard derived and composed functors of one degree.
#[derive(Clone, Debug)]
pub struct StandardFunctors {
    pub ext: Functor,
    /// `Ext^q` through the cokernel route for left exact functors.
    pub ext_cheap: Functor,
    pub tor: Functor,
    /// `Tor_q` through the kernel route for right exact functors.
    pub tor_cheap: Functor,
    pub hom_hom: Functor,
    /// `L_q` of `HomHom`, derived in its first (covariant) slot.
    pub lhom_hom: Functor,
    pub ext_ext: Functor,
}

pub fn instantiate_standard(q: usize) -> StandardFunctors {
    let hh = hom_hom();
    StandardFunctors {
        ext: ext(q),
        ext_cheap: right_derived_left_exact(&hom_functor(), 0, q).expect("contravariant").with_name(format!("Ext{q}")),
        tor: tor(q),
        tor_cheap: left_derived_right_exact(&tensor_functor(), 0, q).expect("covariant").with_name(format!("Tor{q}")),
        lhom_hom: left_derived(&hh, 0, q).expect("covariant").with_name(format!("L{q}HomHom")),
        hom_hom: hh,
        ext_ext: ext_ext(q, q),
    }
}
