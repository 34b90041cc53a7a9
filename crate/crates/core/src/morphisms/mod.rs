//! Arrows between hypertables and pairs, Noether-style quotient maps,
//! isomorphism search and functor checks.

mod arrow;
mod functor;
mod iso;
mod noether;

pub use arrow::{
    is_preceq_morphism, is_subset_morphism, is_weak_morphism, is_weak_pair_morphism, null_containment,
    powerset_extension, MapArrow, PairArrow,
};
pub use functor::{functor_laws, powerset_fixtures, powerset_functor_laws, residue_fixture, FunctorKind, MonoidArrow};
pub use iso::{invert, is_isomorphism, iso_search, IsoResult, ISO_BOUND};
pub use noether::{
    hyper_quotient, induced_image_verdict, induced_residue_morphism, third_isomorphism, third_isomorphism_monoid,
    InducedMorphism, ThirdIso,
};
