use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coefficient sequence had fewer entries than the operation needs.
    SequenceTooShort { needed: usize, got: usize },
    /// A parameter that must be nonzero was zero.
    ZeroParameter(&'static str),
    /// A recurrence table has no entry at the given index.
    MissingEntry { table: &'static str, index: usize },
    /// A recurrence table entry violates its nonzero condition.
    InvalidSpec { table: &'static str, index: usize },
    /// The operation requires a monic recurrence.
    NotMonic,
    /// The operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// A polynomial that must be real-rooted is not.
    NotRealRooted(&'static str),
    /// A polynomial that must have distinct roots has a repeated one.
    RepeatedRoot(&'static str),
    /// Degrees do not satisfy the operation's precondition.
    DegreeMismatch { expected: usize, got: usize },
    /// A real parameter was required but a non-real one was given.
    NotReal(&'static str),
    /// A parameter that must be positive was not.
    NotPositive(&'static str),
    /// Text could not be parsed as a scalar.
    Parse,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SequenceTooShort { needed, got } => {
                write!(f, "sequence too short: need {needed} entries, got {got}")
            }
            Error::ZeroParameter(name) => write!(f, "parameter {name} must be nonzero"),
            Error::MissingEntry { table, index } => {
                write!(f, "recurrence table {table} has no entry at n = {index}")
            }
            Error::InvalidSpec { table, index } => {
                write!(f, "recurrence table {table} is zero at n = {index}")
            }
            Error::NotMonic => f.write_str("a monic three-term recurrence is required"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::NotRealRooted(what) => write!(f, "{what} is not real-rooted"),
            Error::RepeatedRoot(what) => write!(f, "{what} has a repeated root"),
            Error::DegreeMismatch { expected, got } => {
                write!(f, "expected degree {expected}, got {got}")
            }
            Error::NotReal(what) => write!(f, "{what} must be real"),
            Error::NotPositive(what) => write!(f, "{what} must be positive"),
            Error::Parse => f.write_str("invalid scalar literal"),
        }
    }
}

impl core::error::Error for Error {}
