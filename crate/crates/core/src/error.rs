use alloc::string::String;
use core::fmt;

/// What went wrong while reading cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    /// A cycle with a single point, such as `(3)`.
    ShortCycle,
    /// The integer `0`, or one that does not fit a `usize`.
    BadPoint,
    RepeatedPoint(usize),
    DegreeTooSmall {
        degree: usize,
        point: usize,
    },
}

/// A cycle-notation syntax error at a 1-based column of a single-line input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    /// Shifts the column by `offset`, for inputs embedded in a longer string.
    pub fn offset(mut self, offset: usize) -> Self {
        self.column += offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1:{}: ", self.column)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::ShortCycle => f.write_str("a cycle needs at least two points"),
            ParseErrorKind::BadPoint => f.write_str("points must be integers >= 1"),
            ParseErrorKind::RepeatedPoint(p) => write!(f, "point {p} appears more than once"),
            ParseErrorKind::DegreeTooSmall { degree, point } => {
                write!(f, "point {point} exceeds degree {degree}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Parse(ParseError),
    /// An image list that is not a bijection of `1..=n`.
    InvalidImages,
    DegreeMismatch {
        left: usize,
        right: usize,
    },
    EmptyGenerators,
    OrderCapExceeded {
        cap: usize,
    },
    UnknownGroup(String),
    /// A catalog name whose size parameter is outside `min..=max`.
    ParameterOutOfRange {
        name: String,
        min: usize,
        max: usize,
    },
    NotInGroup,
    /// A coset that is not a left coset of the subgroup it was used with.
    ForeignCoset,
    NotNormal,
    /// The fixpoint set of the block chain failed to be a subgroup.
    NotASubgroup,
}

impl Error {
    /// True for the resource-limit error, which callers often report separately.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::OrderCapExceeded { .. })
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => e.fmt(f),
            Error::InvalidImages => f.write_str("image list is not a permutation"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::EmptyGenerators => f.write_str("at least one generator is required"),
            Error::OrderCapExceeded { cap } => write!(f, "group order exceeds the cap of {cap}"),
            Error::UnknownGroup(name) => write!(f, "unknown group {name:?}"),
            Error::ParameterOutOfRange { name, min, max } => {
                write!(f, "{name}: size must lie in {min}..={max}")
            }
            Error::NotInGroup => f.write_str("permutation is not an element of the group"),
            Error::ForeignCoset => f.write_str("coset does not belong to this subgroup"),
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::NotASubgroup => f.write_str("S is not a subgroup"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Parse(e) => Some(e),
            _ => None,
        }
    }
}
