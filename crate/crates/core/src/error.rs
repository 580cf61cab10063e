use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid torus knot T({p},{q}): {reason}")]
    InvalidKnot { p: i64, q: i64, reason: String },

    #[error("T({p},{q}) is not in normal form 0 < p < q")]
    NotNormalized { p: i64, q: i64 },

    #[error("unsupported twisting step: {0}")]
    UnsupportedStep(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("braid closure has {components} components, expected a knot")]
    MultiComponent { components: usize },

    #[error("signs undecided at the precision cap of {cap_bits} bits: {detail}")]
    Undecided { cap_bits: u32, detail: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 3,
            Error::Undecided { .. } => 4,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
