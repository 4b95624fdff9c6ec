use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor or preset rejected its parameters; the string names the
    /// violated constraint.
    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("tabulated function queried at {at} outside [{lo}, {hi}]")]
    Extrapolation { at: f64, lo: f64, hi: f64 },

    #[error("conjugate supremum at v = {0} is not bracketed by the table")]
    UnresolvedSupremum(f64),

    #[error("integral diverges: {0}")]
    Divergence(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("empty intersection between integration ball and indicator ball")]
    EmptyIntersection,

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub(crate) fn constraint(msg: impl Into<String>) -> Error {
    Error::Constraint(msg.into())
}
