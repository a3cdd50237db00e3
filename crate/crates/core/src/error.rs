//! Crate-wide error type.

use crate::group::GroupElem;
use crate::polytope::MembershipFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} columns, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coordinate must be nonnegative: column {column}, element {element}")]
    NegativeCoordinate { column: usize, element: GroupElem },

    #[error("group elements must sum to zero, got {sum}")]
    NotAFlow { sum: GroupElem },

    #[error("subset cardinality must be odd, got {cardinality}")]
    EvenSubset { cardinality: usize },

    #[error("facet element must be one of a, b, g")]
    ZeroFacetElement,

    #[error("multiset sums differ: {left} vs {right}")]
    UnequalSums { left: i64, right: i64 },

    #[error("point is not in the vertex lattice")]
    NotInLattice,

    #[error("expected common column sum {expected}, found {found}")]
    WrongColumnSum { expected: i64, found: i64 },

    #[error("point is not in the {k}-th dilation: {failure}")]
    NotAMember { k: i64, failure: MembershipFailure },

    #[error("coordinate at column {column}, element {element} equals the degree")]
    SaturatedCoordinate { column: usize, element: GroupElem },

    #[error("degree must be at least {min}, got {got}")]
    InvalidDegree { min: i64, got: i64 },

    #[error("column count {n} exceeds the facet-scan cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("enumeration budget exceeded: needs about {required}, budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("invalid permutation image {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    /// A constructive step landed outside the guaranteed region. This must
    /// never fire; if it does, it is a bug, not a recoverable state.
    #[error("proof violation: {0}")]
    ProofViolation(String),
}
