use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Axiom failures are not errors: they are reported through
/// [`AxiomReport`](crate::hyperstruct::AxiomReport) with a witness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("carrier of size {0} exceeds the 64-element limit")]
    CarrierTooLarge(usize),
    #[error("subset is not closed under the operation: {0}")]
    NotClosed(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not normal: {0}")]
    NotNormal(String),
    #[error("not a left ideal: {0}")]
    NotLeftIdeal(String),
    #[error("empty set argument")]
    EmptySet,
    #[error("hypertable has no zero")]
    MissingZero,
    #[error("hypernegative of {0} does not exist")]
    MissingNegative(String),
    #[error("elements from different symbolic fields: {0}")]
    MixedField(String),
    #[error("sample budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("term outside the universe: {0}")]
    OutsideUniverse(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("map is not a subset-morphism: {0}")]
    NotSubsetMorphism(String),
    #[error("{0} is not contained in {1}")]
    NotContained(String, String),
    #[error("monoids differ: {0}")]
    MismatchedMonoid(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("twists differ: {0} vs {1}")]
    MismatchedTwist(u32, u32),
    #[error("sampled hypersum hit a coset outside the expected table: {0}")]
    ExpectedMismatch(String),
    #[error("kernel check failed: {0}")]
    NotKernel(String),
    #[error("relation is not a congruence: {0}")]
    NotCongruence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown catalog entry: {0}")]
    UnknownName(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
