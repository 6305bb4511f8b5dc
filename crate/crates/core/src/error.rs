use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width must be between 1 and 64, got {0}")]
    WidthOutOfRange(usize),

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: u8, right: u8 },

    #[error("coordinate {coordinate} is out of range for width {width}")]
    CoordinateOutOfRange { coordinate: usize, width: u8 },

    #[error("T-set and F-set overlap at coordinate {coordinate}")]
    OverlappingPair { coordinate: usize },

    #[error("invalid element literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },

    #[error("line {line}: {message}")]
    FileFormat { line: usize, message: String },

    #[error("universe is missing the constant {0}")]
    MissingConstant(String),

    #[error("universe is not closed: {op}({args}) = {result} is missing")]
    NotClosed {
        op: &'static str,
        args: String,
        result: String,
    },

    #[error("{what} width {width} exceeds the supported bound {bound}")]
    WidthBound {
        what: &'static str,
        width: u8,
        bound: u8,
    },

    #[error("the subset must contain the constant F")]
    MissingBottom,

    #[error("element {0} is not in the algebra")]
    NotInAlgebra(String),

    #[error("element {0} is not an atom of the full power")]
    NotAnAtom(String),

    #[error("F has no atom below it")]
    BottomHasNoAtom,

    #[error("universe is not closed under down: down({element}) = {image} is missing")]
    NotDownClosed { element: String, image: String },

    #[error("the given set is not a Boolean subalgebra: {0}")]
    NotBoolean(String),

    #[error("a pointed map must fix the base point")]
    BasePointNotFixed,

    #[error("term parse error at byte {pos}: {message}")]
    TermParse { pos: usize, message: String },

    #[error("the down operator is not allowed in C-algebra mode")]
    DownInCAlgebraMode,

    #[error("valuation does not cover variable {0}")]
    UnboundVariable(usize),

    #[error("too many variables: {vars} (limit {limit})")]
    TooManyVariables { vars: usize, limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
