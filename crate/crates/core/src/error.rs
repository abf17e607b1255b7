use thiserror::Error;

use crate::dsl::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset would have {0} elements, the limit is 64")]
    TooLarge(usize),
    #[error("relation contains a cycle through element {0}")]
    Cyclic(usize),
    #[error("element {index} out of range for poset of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("wedge operand {0} has no minimum element")]
    WedgeNoBottom(usize),
    #[error("operand {0} has no large interval")]
    NoLargeInterval(usize),
    #[error("operand {operand} has {count} large intervals with different gluing endpoints; specify one explicitly")]
    LargeIntervalAmbiguous { operand: usize, count: usize },
    #[error("interval endpoints {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("invalid argument for {builder}: {reason}")]
    InvalidArgument { builder: &'static str, reason: String },
    #[error("ground set of size {n} exceeds the limit {limit} for this operation")]
    GroundSetTooLarge { n: usize, limit: usize },
    #[error("set {set:#x} is not a subset of [{n}]")]
    SetOutOfRange { set: u64, n: usize },
    #[error("level window n={n}, s={s}, k={k} is invalid")]
    InvalidWindow { n: usize, s: usize, k: usize },
    #[error("search window [{lo}, {hi}] is invalid for n={n}")]
    InvalidSearchWindow { n: usize, lo: usize, hi: usize },
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("search budget exhausted before the bound was decided")]
    Inconclusive,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
