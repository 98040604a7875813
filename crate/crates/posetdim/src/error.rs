//! Crate-wide error type.

use thiserror::Error;

use crate::solver::SearchCertificate;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),

    #[error("unknown element id `{0}`")]
    UnknownId(String),

    #[error("cycle detected: closure would make `{0}` and `{1}` mutually comparable")]
    CycleDetected(String, String),

    #[error("linear order domain does not match the poset's element set")]
    DomainMismatch,

    #[error("partial order conflicts with the poset: `{0}` must come before `{1}`")]
    InconsistentPartial(String, String),

    #[error("linear orders have overlapping domains (`{0}` appears more than once)")]
    OverlappingDomains(String),

    #[error("parts overlap on element `{0}`")]
    PartsOverlap(String),

    #[error("part {0} is empty")]
    EmptyPart(usize),

    #[error("backward relation `{0}` -> `{1}`: from part {2} down to part {3}")]
    BackwardRelation(String, String, usize, usize),

    #[error("relation `{0}` -> `{1}` inside part {2}, which must be an antichain")]
    IntraPartRelation(String, String, usize),

    #[error("part index {0} out of range for {1} parts")]
    IndexOutOfRange(usize, usize),

    #[error("part indices must satisfy i < j, got i={0}, j={1}")]
    NotStrictlyOrdered(usize, usize),

    #[error("poset has a single height level, no multipartite structure to derive")]
    SingleLevel,

    #[error("operation undefined on the empty poset")]
    EmptyPoset,

    #[error("no realizer with at most {max_d} orders exists")]
    CapExceeded {
        max_d: usize,
        certificate: SearchCertificate,
    },

    #[error("the given linear orders do not realize the poset")]
    NotARealizer,

    #[error("parameter too small: {0}")]
    TooSmall(String),

    #[error("invalid matching: {0}")]
    BadMatching(String),

    #[error("invalid parameters: {0}")]
    BadParameters(String),

    #[error("orders for part pair ({i}, {j}) do not realize its bipartite sub-poset")]
    NotABipartiteRealizer { i: usize, j: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("input lacks the `parts` field required for multipartite operations")]
    MissingParts,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
