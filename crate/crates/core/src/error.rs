use core::fmt;

/// Errors surfaced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    Input(alloc::string::String),
    /// An exact routine was called on an input above its hard size guard.
    SizeGuard { what: &'static str, limit: usize, got: usize },
    /// A structural promise of the input class was violated (theory mode).
    ContractViolation(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<alloc::string::String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn guard(what: &'static str, limit: usize, got: usize) -> Self {
        Error::SizeGuard { what, limit, got }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::SizeGuard { what, limit, got } => {
                write!(f, "{what}: size {got} exceeds the limit of {limit}")
            }
            Error::ContractViolation(msg) => write!(f, "contract violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
