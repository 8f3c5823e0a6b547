use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {what} at {at}")]
    Pole { what: String, at: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("accuracy check failed for {what}: achieved {achieved:e}, required {required:e}")]
    Accuracy {
        what: String,
        achieved: f64,
        required: f64,
    },

    #[error("resource limit: {what} needs {required_bytes} bytes, limit is {limit_bytes}")]
    Resource {
        what: String,
        required_bytes: u64,
        limit_bytes: u64,
    },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("missing Hecke eigenvalue for prime {0}")]
    MissingPrime(u64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("io: {0}")]
    Io(String),

    #[error("format: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn pole(what: impl Into<String>, at: impl std::fmt::Display) -> Self {
        Error::Pole {
            what: what.into(),
            at: at.to_string(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures the CLI maps to exit code 3.
    pub fn is_resource_or_accuracy(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::Accuracy { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
