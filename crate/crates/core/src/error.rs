use thiserror::Error;

/// Errors raised by the invariant machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: `{0}` vs `{1}`")]
    VariableMismatch(char, char),

    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("generator index 0 is not allowed")]
    IndexZero,
    #[error("generator index {index} needs at least {} strands, braid has {n}", index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("braids live in different groups: B_{0} vs B_{1}")]
    StrandMismatch(usize, usize),
    #[error("singular letter not allowed here")]
    SingularLetter,
    #[error("closure is not a knot (cycle type {cycle_type:?})")]
    NotAKnot { cycle_type: Vec<usize> },
    #[error("move not applicable: {0}")]
    PatternNotPresent(String),
    #[error("position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),
    #[error("cycles share no digits")]
    EmptyIntersection,
    #[error("cycle union is not {{1..{0}}}")]
    IncompleteUnion(usize),
    #[error("product is not a full cycle")]
    NotFullCycle,

    #[error("winding number {m} out of range 1..{}", n - 1)]
    WindingOutOfRange { m: usize, n: usize },
    #[error("invalid Temperley-Lieb state: {0}")]
    InvalidState(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by unparseable input rather than by the mathematics.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedToken(_)
                | Error::IndexZero
                | Error::IndexOutOfRange { .. }
                | Error::NoStrands
                | Error::MalformedCycle(_)
        )
    }
}
