use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Coordinates are 1-based `(row, col)` with row 1 at the top.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid is not rectangular: row {row} has {len} boxes, expected {expected}")]
    NonRectangular { row: usize, len: usize, expected: usize },

    #[error("content must be a positive integer (found 0 at ({row}, {col}))")]
    ZeroContent { row: usize, col: usize },

    #[error("row order violated at ({row}, {col}): content decreases along the row")]
    RowOrderViolation { row: usize, col: usize },

    #[error("column strictness violated at ({row}, {col}): content does not increase down the column")]
    ColumnStrictnessViolation { row: usize, col: usize },

    #[error("strip order violated at ({row}, {col}): a cell sits weakly left of and above a cell with smaller or equal content")]
    StripOrderViolation { row: usize, col: usize },

    #[error("grid uses {width} columns but the content only needs {minimal}")]
    NotMinimal { width: usize, minimal: usize },

    #[error("row index {index} out of range (ptableau has {n_rows} rows)")]
    RowOutOfRange { index: usize, n_rows: usize },

    #[error("operator index {index} out of range (valid indices are 1..{bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("letter {letter} is outside the alphabet [1, {n}]")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("appending {content} to row {row} does not give a standard-form extension")]
    InvalidExtension { content: usize, row: usize },

    #[error("content {content} exceeds the alphabet bound {m}")]
    ContentExceedsAlphabet { content: usize, m: usize },

    #[error("biword rows have different lengths ({top} vs {bottom})")]
    BiwordLengthMismatch { top: usize, bottom: usize },

    #[error("biword is not in standard form at column {column}")]
    StandardFormBroken { column: usize },

    #[error("crystal operator {op} at step {step} is undefined (NULL)")]
    NullStep { step: usize, op: String },

    #[error("ptableau does not satisfy the word condition")]
    WordConditionPrecondition,

    #[error("ptableau is not highest weight")]
    NotHighestWeight,

    #[error("shapes of PT and Tmax do not match")]
    ShapeMismatch,

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("matrix entry ({row}, {col}) lies outside the {m}x{n} bounds")]
    MatrixBounds { row: usize, col: usize, m: usize, n: usize },

    #[error("the two Lusztig involution methods disagree")]
    MethodDisagreement,

    #[error("exploration stopped after {limit} nodes")]
    LimitExceeded { limit: usize, partial: Vec<crate::Ptableau> },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }

    /// True for errors caused by malformed text rather than by the mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
