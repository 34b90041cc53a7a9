//! `T`-pairs, surpassing relations, Property N and negation maps.

mod negation;
mod pair;
mod surpass;

pub use negation::{check_property_n, is_uniquely_negated, negation_map, NegationMap, PropertyN};
pub use pair::{
    check_pair_axioms, infinity_pair, infinity_pair_idempotent, mhyper_powerset_pair, powerset_pair,
    supertropical_pair, Pair, PairJson,
};
pub use surpass::{check_preceq_distributive, check_surpassing, RelationComparison, SurpassKind, SurpassRel};
