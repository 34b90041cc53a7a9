//! Quotient hyperstructures: Krasner quotients, quotient hypermodules,
//! coset hypermonoids, m-hyperrings and sampled quotients of infinite rings.

mod coset;
mod ee;
mod krasner;
mod mhyper;
mod module;
mod sampled;

pub use coset::{coset_hypermonoid, translates, CosetMode, Translates};
pub use ee::{check_ee_identity, e_element, EeReport};
pub use krasner::{coset_space, krasner_quotient, krasner_quotient_with_space, CosetSpace};
pub use mhyper::{
    m_hyper_from_additive_subgroup, m_hyperring, zero_second_column, AdditiveCosets, MHyperJson, MHyperRing,
    SubgroupHyperMul,
};
pub use module::{quotient_hypermodule, FinModule, QuotientModule};
pub use sampled::{
    sampled_quotient, Membership, RationalQuotient, RationalSubgroup, SampledEntry, SampledQuotient, SampledRing,
};
