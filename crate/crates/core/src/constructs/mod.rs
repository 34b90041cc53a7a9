//! Products, sums, polynomial and matrix pairs, free `T`-magmas, and
//! depth-truncated tensor products.

mod magma;
mod pairs;
mod tensor;

pub use magma::{
    congruence_closure, free_t_magma, term_count, ClassListing, CongRel, Term, TermUniverse, DEFAULT_TERM_BUDGET,
};
pub use pairs::{
    boolean_pair, direct_sum_pair, matrix_pair, polynomial_pair, product_pair, semiring_pair, TuplePair,
};
pub use tensor::{tensor_product, TensorJson, TensorProduct};
