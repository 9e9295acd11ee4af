use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation needs a nonempty word")]
    EmptyWord,
    #[error("invalid symbol {0:?}: words are strings of 0 and 1")]
    InvalidSymbol(char),
    #[error("malformed sequence {0:?}: expected PRE(PER)")]
    MalformedSeq(String),
    #[error("malformed rational {0:?}: expected m/n")]
    MalformedRational(String),
    #[error("{value} is outside {range}")]
    OutOfRange {
        value: Rational,
        range: &'static str,
    },
    #[error("{0} is not primitive (its least period is shorter than its length)")]
    NotPrimitive(String),
    #[error("no rotation of {code} begins with the height word for q = {height}")]
    DecorationNotFound { code: String, height: Rational },
    #[error("height denominator exceeds the search bound {0}")]
    DenominatorBound(u64),
    #[error("orbit point lies on the boundary of disk {0}")]
    OnDiskBoundary(char),
    #[error("orbit {0} is one of the four orbits of height q and decoration w")]
    FamilyMember(String),
    #[error("denominator {den} of q must exceed twice the period {period}")]
    DenominatorTooSmall { den: i64, period: usize },
    #[error("no sign change of the polynomial in the search bracket")]
    NoSignChange,
    #[error("members of group {0} disagree on their invariants")]
    GroupDisagreement(String),
    #[error("the lone catalog only covers decorations of length at most 5")]
    CatalogExhausted,
    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
