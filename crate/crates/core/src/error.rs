use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("enumeration too large: group of order {order}, bound is {bound}")]
    EnumerationTooLarge { order: usize, bound: usize },

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subgroup does not belong to this group")]
    ParentMismatch,

    #[error("invalid cochain: {0}")]
    InvalidCochain(String),

    #[error("not a cocycle: coboundary is nonzero at {witness:?}")]
    NotCocycle { witness: Vec<usize> },

    #[error("compatibility violated: d(psi) differs from omega restricted to the subgroup at {witness:?}")]
    Incompatible { witness: Vec<usize> },

    #[error("no solution")]
    NoSolution,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("numerical breakdown: {0}; try another seed or tolerance")]
    Numerical(String),

    #[error("field extension cap exceeded: {0}")]
    FieldCap(String),

    #[error("randomized search made no progress after {attempts} attempts; try another seed")]
    NoProgress { attempts: usize },

    /// A proved identity failed to hold. Always a bug (or corrupted input
    /// that slipped past validation).
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for violations of proved identities, as opposed to bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
