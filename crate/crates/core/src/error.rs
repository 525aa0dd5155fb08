use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Index fields are 0-based; rendered messages use 1-based indices.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero element has no multiplicative inverse")]
    InversionOfZero,

    #[error("value {0} is not an element of the semifield")]
    NotInCarrier(String),

    #[error("result left the semifield carrier (overflow)")]
    Overflow,

    #[error("{op}: shape mismatch between {left:?} and {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrices and vectors need at least one row and one column, got {rows}x{cols}")]
    EmptyShape { rows: usize, cols: usize },

    #[error("ragged input: row {} has {len} entries, expected {expected}", row + 1)]
    Ragged { row: usize, len: usize, expected: usize },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what} has a zero entry at row {}, column {}", row + 1, col + 1)]
    ZeroEntry { what: &'static str, row: usize, col: usize },

    #[error("{what} is not regular: component {} is zero", index + 1)]
    NotRegular { what: &'static str, index: usize },

    #[error("right-hand side of the equation must be nonzero")]
    ZeroRightHandSide,

    #[error("matrix is reducible (its nonzero pattern is not strongly connected)")]
    NotIrreducible,

    #[error("Tr(C) = {tr} exceeds the unit; the constraint Cx <= x has no regular solution")]
    TrConditionViolated { tr: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("grid has {size} points, above the cap of {cap}")]
    GridTooLarge { size: u128, cap: u128 },

    #[error("oracle needs integer data: {0}")]
    NonInteger(String),
}

impl Error {
    /// True for errors meaning "the constraints admit no solution", as opposed
    /// to malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::TrConditionViolated { .. })
    }
}
