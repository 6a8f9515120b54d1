//! Homological algebra over computable rings.
//!
//! Everything is built on two primitives a ring backend must provide:
//! deciding whether a row lies in a row module (with a certificate) and
//! generating syzygies. From those the crate computes with finitely presented
//! modules, functors and their derived functors, free resolutions and long
//! exact sequences.
//!
//! Module elements are rows; a morphism `M -> N` is a matrix that multiplies
//! rows on the right.

pub mod backend;
pub mod error;
pub mod functor;
pub mod homology;
pub mod matrix;
pub mod pipeline;
pub mod presentation;
pub mod procedures;
pub mod ring;
pub mod selftest;
pub mod simplicial;

pub use backend::{basis_of_module, decide_zero, smith_normal_form, syzygies_generators, Basis};
pub use error::{Error, Result};
pub use matrix::Mat;
pub use ring::{Elem, Ring};
pub use presentation::{
    better_generators, canonical_decomposition, eliminate_units, morphism_is_valid, morphisms_equal,
    presentations_equal, BaseChange, Decomposition, Morphism, Presentation, Represented,
};
pub use functor::{
    compose_functors, functor_map, functor_obj, left_derived, left_derived_right_exact, right_derived_cofunctor,
    right_derived_left_exact, Functor, Obj, ObjMap, Variance,
};
