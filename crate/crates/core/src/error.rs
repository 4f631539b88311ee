use crate::rational::ExtRational;
use thiserror::Error;

/// Errors shared across the crate.
///
/// Everything here is a *domain* error: the inputs were well-formed Rust
/// values but violated a precondition (non-adjacent vertices, undersized
/// windows, grids that are not unimodular, and so on). Exact arithmetic
/// means there are no tolerance or rounding failures to report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid vertex: numerator and denominator are both zero")]
    InvalidVertex,

    #[error("vertices {0} and {1} are not adjacent in the Farey graph")]
    NotAdjacent(Box<ExtRational>, Box<ExtRational>),

    #[error("consecutive vertices at index {index} are not adjacent in the Farey graph")]
    PathStep { index: i64 },

    #[error("vertices must be pairwise distinct: {0} repeats")]
    RepeatedVertex(ExtRational),

    #[error("path is not closed: first and last vertices differ")]
    NotClosed,

    #[error("path window is too short: need at least {need} vertices, got {got}")]
    PathTooShort { need: usize, got: usize },

    #[error("index {index} is outside the path window [{lo}, {hi}]")]
    IndexOutOfWindow { index: i64, lo: i64, hi: i64 },

    #[error("{0} has no Farey parents (denominator must be at least 2)")]
    NoParents(ExtRational),

    #[error("empty period word")]
    EmptyPeriod,

    #[error("itinerary has no {side} period but the requested window extends {side}")]
    MissingPeriod { side: &'static str },

    #[error("window must span at least {need} rows and columns, got {rows}x{cols}")]
    WindowTooSmall {
        need: usize,
        rows: usize,
        cols: usize,
    },

    #[error("window rows are ragged: row {row} has {got} entries, expected {expected}")]
    RaggedWindow {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("window is not an SL2 grid: the 2x2 block at ({i}, {j}) has determinant {det}")]
    NotSl2 { i: i64, j: i64, det: String },

    #[error("window is not tame: the 3x3 block at ({i}, {j}) has nonzero determinant")]
    NotTame { i: i64, j: i64 },

    #[error("row {i} of the window vanishes on two consecutive columns, so no recurrence coefficient exists")]
    NoRecurrenceCoeff { i: i64 },

    #[error("recurrence coefficient at index {index} is inconsistent across the window")]
    InconsistentCoeff { index: i64 },

    #[error("recurrence coefficients do not cover index {index}; pass periodic coefficients or a wider set")]
    CoeffOutOfRange { index: i64 },

    #[error("window does not contain rows 0 and 1 and columns 0 and 1")]
    MissingCentralBlock,

    #[error("window is empty")]
    EmptyWindow,

    #[error("window is not a frieze: {reason}")]
    NotFrieze { reason: String },

    #[error("word is not a quiddity cycle of a closed path: {reason}")]
    NotQuiddityCycle { reason: String },

    #[error("polygon is invalid: {0}")]
    BadPolygon(String),

    #[error("paths are not disjoint: both visit {0}")]
    PathsIntersect(ExtRational),

    #[error("no edge of one path separates it from the other")]
    NotSeparable,

    #[error("path window is not in clockwise order")]
    NotClockwise,

    #[error("dual vertices {0} and {1} are consecutive but not adjacent; widen the input window")]
    DualGap(Box<ExtRational>, Box<ExtRational>),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
