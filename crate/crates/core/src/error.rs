use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse `{0}` as a decimal number")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("order caps differ: {0} vs {1}")]
    OrderCapMismatch(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),
    #[error("`{0}` has no published coefficients")]
    Unavailable(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("fit rejected: {0}")]
    FitRejected(String),
    #[error("no crossing of the error curves in the sampled range")]
    NoCrossing,
}

pub type Result<T> = core::result::Result<T, Error>;
