use thiserror::Error;

/// Structural errors: malformed groups, subsets, matrices or arguments.
///
/// Verification outcomes are not errors; they are reported through the
/// rejection types of the individual verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("group order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("subset belongs to a group of order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("subset contains the identity")]
    ContainsIdentity,
    #[error("subsets overlap at element {0}")]
    Overlap(usize),
    #[error("element must not be the identity")]
    IdentityElement,
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("operation requires an abelian group")]
    NonAbelian,
    #[error("operation requires a group of odd order")]
    EvenOrder,
    #[error("identity coefficient must be zero")]
    IdentityCoefficient,
    #[error("coefficient table has length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("invalid Seidel matrix: {0}")]
    NotSeidel(String),
    #[error("switching scalar at position {0} is not unimodular")]
    NotUnimodular(usize),
    #[error("invalid permutation")]
    InvalidPermutation,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown group descriptor `{0}`")]
    Descriptor(String),
    #[error("unknown element label `{label}` in group {group}")]
    Label { group: String, label: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search bound exceeded: order {order} > {bound} for this kind (use force to override)")]
    SearchBound { order: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
