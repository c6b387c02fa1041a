use core::fmt;

/// Errors reported by the representation and operation layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands (or a component and its container) disagree on dimensions.
    DimensionMismatch { context: &'static str },
    /// A factor value lies outside the interval allowed by the representation.
    AlphaOutOfRange,
    /// An operation that needs at least one point received none.
    EmptyInput,
    /// The operation is only defined for chain-form M-representations.
    NotChainForm,
    /// An enumeration would exceed the configured cap (see `Caps`).
    CapExceeded { cap: usize, needed: usize },
    /// An argument violates the operation's contract.
    InvalidArgument { context: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { context } => write!(f, "dimension mismatch: {context}"),
            Error::AlphaOutOfRange => write!(f, "factor value outside the allowed interval"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::NotChainForm => write!(f, "representation is not in chain form"),
            Error::CapExceeded { cap, needed } => {
                write!(f, "enumeration cap exceeded (cap {cap}, needed {needed})")
            }
            Error::InvalidArgument { context } => write!(f, "invalid argument: {context}"),
        }
    }
}

impl core::error::Error for Error {}
