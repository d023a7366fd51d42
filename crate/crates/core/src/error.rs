use thiserror::Error;

use crate::tableau::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    InnerNotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} should hold {expected} entries, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry at {0} is zero; letters start at 1")]
    ZeroEntry(Cell),
    #[error("row does not weakly increase at {0}")]
    RowNotWeak(Cell),
    #[error("column does not strictly increase at {0}")]
    ColumnNotStrict(Cell),
    #[error("row {row} out of range for a tableau with {rows} rows")]
    RowOutOfRange { row: usize, rows: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnuthError {
    #[error("Knuth class exceeds the cap of {cap} words")]
    CapExceeded { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("row {row} is not an inner corner (available: {available:?})")]
    NotInnerCorner { row: usize, available: Vec<usize> },
    #[error("step {step} of the order word: {source}")]
    OrderWord {
        step: usize,
        #[source]
        source: Box<InsertionError>,
    },
    #[error(
        "extended insertion at row {row} needs a nonempty row {prev} in the Yamanouchi factor"
    )]
    ExtendedRow { row: usize, prev: usize },
    #[error("inner borders differ: {left:?} vs {right:?}")]
    BorderMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("reverse bump from {cell} is malformed")]
    MalformedReverse { cell: Cell },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommutorError {
    #[error("not an LR pair: {0}")]
    NotLrPair(String),
    #[error("switch at {0} and {1} is not admissible")]
    InadmissibleSwitch(Cell, Cell),
    #[error("outer tableau does not extend the inner one: {0}")]
    NotExtending(String),
    #[error("appending {letter} to row {row} breaks semistandardness")]
    AppendInvalid { row: usize, letter: u32 },
    #[error("staged decomposition precondition failed: {0}")]
    Staged(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Insertion(#[from] InsertionError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error("invalid word {0:?}")]
    Word(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}
