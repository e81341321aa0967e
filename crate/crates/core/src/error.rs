use thiserror::Error;

use crate::freegroup::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants split into two groups: malformed input (`Syntax`, `ZeroLetter`)
/// and domain errors, where the input parsed but violates a mathematical
/// precondition. The CLI maps the first group to exit code 2 and the second
/// to exit code 1.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: String, msg: String },

    #[error("letter 0 is not a generator")]
    ZeroLetter,

    #[error("no image given for generator x{0}")]
    UndefinedGenerator(u32),

    #[error("generator x{index} is out of range for {n} generators")]
    GeneratorOutOfRange { index: u32, n: usize },

    #[error("expected {expected} relators, found {found}")]
    RelatorCount { expected: usize, found: usize },

    #[error("size mismatch: {left} vs {right} generators")]
    SizeMismatch { left: usize, right: usize },

    #[error("not an Artin presentation (defect {0})")]
    NotArtin(Word),

    #[error("braid letter s{letter} is out of range for {strands} strands")]
    BraidLetterOutOfRange { letter: i32, strands: usize },

    #[error("braid is not pure: strand permutation is {0:?}")]
    NotPure(Vec<u32>),

    #[error("expected {expected} framings, found {found}")]
    FramingCount { expected: usize, found: usize },

    #[error("presentation is not of the form r(a,b,c): expected {expected}")]
    NotCanonical { expected: String },

    #[error("triangle parameters must all be at least 2, got ({0},{1},{2})")]
    TriangleParams(u64, u64, u64),

    #[error("triangle group ({0},{1},{2}) is not spherical")]
    NotSpherical(u64, u64, u64),

    #[error("flipc needs |c| = 1, got c = {0}")]
    FlipPrecondition(i64),

    #[error("tuple ({0}) is not in the list of trivial-group presentations")]
    NotInList(String),

    #[error("no normalizing move path from ({0})")]
    NoMovePath(String),

    #[error("max_cosets must be at least 1")]
    ZeroBudget,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(pos: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Syntax { pos: pos.into(), msg: msg.into() }
    }

    /// True for malformed-input errors, false for domain errors.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::ZeroLetter)
    }
}
