//! Finite base algebras and the semifield kernel machinery.

mod field;
mod monoid;
mod ring;
mod semifield;
mod subgroup;

pub use field::{make_finite_field, make_finite_field_bounded, FieldSpec};
pub use monoid::{FinMonoid, MonoidJson};
pub use ring::{FinRing, FinSemiring, RingJson};
pub use semifield::{
    congruence_from_kernel, is_kernel, is_semiring_kernel, kernel_from_congruence, Congruence,
    KernelVerdict, KernelWitness, MaxPlus, Semifield, SubgroupPredicate, TableSemifield,
};
pub use subgroup::{
    is_normal_submonoid, residue_monoid, unit_subgroups, Residue, Subgroup, SubgroupKind,
};

#[allow(unused_imports)]
pub(crate) use monoid::gcd;
pub(crate) use crate::util::{flatten_table, schema_tag, unflatten_table};
pub(crate) use crate::SCHEMA;
