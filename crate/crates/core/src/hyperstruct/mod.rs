//! Finite hyperoperation tables and exhaustive axiom checkers.

mod checks;
mod report;
mod table;

pub use checks::{
    check_hyperfield, check_hypergroup, check_hyperring, check_powerset_weak_distributivity, replay,
    weak_neutral_elements, Axiom, POWERSET_EXHAUSTIVE_MAX,
};
pub use report::{AxiomReport, Verdict, Witness};
pub use table::{HyperTable, HyperTableJson};
