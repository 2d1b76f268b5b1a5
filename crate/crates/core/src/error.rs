//! Error types shared across the crate.

use thiserror::Error;

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while building chains, curves and fits.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point chain needs at least {needed} points, got {got}")]
    ChainTooShort { got: usize, needed: usize },

    #[error("inconsistent dimension: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires dimension >= {needed}, chain has dimension {got}")]
    DimensionTooLow { got: usize, needed: usize },

    #[error("axis index {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("coordinate is not finite")]
    NonFinite,

    #[error("parameter {value} outside [{min}, {max}]")]
    ParameterOutOfRange { value: f64, min: f64, max: f64 },

    #[error("need at least {order} control points for order {order}, got {got}")]
    TooFewControls { got: usize, order: usize },

    #[error("knot vector must be non-decreasing")]
    KnotsNotSorted,

    #[error("knot count {knots} does not match controls {controls} + order {order}")]
    KnotCountMismatch {
        knots: usize,
        controls: usize,
        order: usize,
    },

    #[error("piecewise junction mismatch between segments {0} and {1}")]
    JunctionMismatch(usize, usize),

    #[error("plane curves have differing segment counts")]
    SegmentCountMismatch,

    #[error("independent coordinates of segment {segment} endpoint controls differ across planes by {delta}")]
    IndependentMismatch { segment: usize, delta: f64 },

    #[error("coincident consecutive points; turn angle is undefined")]
    ZeroLengthLeg,

    #[error("dominant points coincide; chord projection is undefined")]
    CoincidentChord,

    #[error("invalid dominant selection: {0}")]
    InvalidSelection(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
