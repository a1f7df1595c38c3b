use core::fmt;

use crate::partition::Partition;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The parts given do not form a partition (not weakly decreasing).
    NotAPartition,
    /// Rows and columns of a Grassmann context must both be positive.
    InvalidContext { l: usize, k: usize },
    /// A partition that had to fit the `l×k` rectangle does not.
    NotInRectangle { partition: Partition, l: usize, k: usize },
    /// A rim walk was requested from a column outside `1..=λ_1`.
    ColumnOutOfRange { column: usize, first_part: usize },
    /// A hook width outside `1..=k`.
    WidthOutOfRange { width: usize, k: usize },
    /// A content entry exceeds the allowed bound.
    ContentTooLarge { entry: usize, bound: usize },
    /// A Pieri index outside its allowed range.
    PieriOutOfRange { p: usize, bound: usize },
    /// Two ring elements from different contexts were combined.
    ContextMismatch,
    /// Checked integer arithmetic overflowed.
    Overflow,
    /// An internal consistency check failed.
    Invariant(&'static str),
    /// Text could not be parsed as a partition.
    Parse(alloc::string::String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition => write!(f, "parts are not weakly decreasing"),
            Error::InvalidContext { l, k } => {
                write!(f, "invalid context l={l}, k={k}: both must be positive")
            }
            Error::NotInRectangle { partition, l, k } => {
                write!(f, "partition {partition} does not fit in the {l}x{k} rectangle")
            }
            Error::ColumnOutOfRange { column, first_part } => {
                write!(f, "column {column} outside 1..={first_part}")
            }
            Error::WidthOutOfRange { width, k } => {
                write!(f, "hook width {width} outside 1..={k}")
            }
            Error::ContentTooLarge { entry, bound } => {
                write!(f, "content entry {entry} exceeds {bound}")
            }
            Error::PieriOutOfRange { p, bound } => write!(f, "index {p} outside 1..={bound}"),
            Error::ContextMismatch => write!(f, "classes belong to different Grassmannians"),
            Error::Overflow => write!(f, "integer overflow"),
            Error::Invariant(what) => write!(f, "internal invariant violated: {what}"),
            Error::Parse(text) => write!(f, "cannot parse partition from {text:?}"),
        }
    }
}

impl core::error::Error for Error {}
