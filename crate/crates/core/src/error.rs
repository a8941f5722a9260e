use thiserror::Error;

/// Every failure the toolkit reports. The CLI maps variants onto exit codes,
/// see [`Error::is_limit`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("covers induce a cycle: `{0}` <= `{1}` <= `{0}`")]
    CycleDetected(String, String),
    #[error("posets must have at least one element")]
    EmptyPoset,
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("element set is hosted by a different poset")]
    HostMismatch,
    #[error("element index {0} is out of range")]
    UnknownElement(usize),
    #[error("product needs {cells} relation cells, cap is {cap}")]
    SizeOverflow { cells: usize, cap: usize },
    #[error("{what} of size {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("search budget of {0} nodes exhausted before the search completed")]
    BudgetExceeded(u64),
    #[error("not a pregap: `{0}` is not below `{1}`")]
    Unordered(String, String),
    #[error("the pair is not a gap")]
    NotAGap,
    #[error("map is not order-preserving: `{0}` <= `{1}` but their images are not ordered")]
    MonotonicityViolation(String, String),
    #[error("points are not strictly increasing at position {0}")]
    NotStrictlyIncreasing(usize),
    #[error("well order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("input list is empty")]
    EmptyInput,
    #[error("set is not a member of the generated lattice")]
    NotAMember,
    #[error("not a pregap: left #{left} minus right #{right} is the infinite set {difference}")]
    NotAPregap {
        left: usize,
        right: usize,
        difference: String,
    },
    #[error("branches are equal")]
    EqualBranches,
    #[error("branch {0} occurs in both families")]
    FamiliesIntersect(String),
    #[error("family is empty")]
    EmptyFamily,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures caused by a configured bound or budget rather than by bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeOverflow { .. } | Error::BoundExceeded { .. } | Error::BudgetExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
