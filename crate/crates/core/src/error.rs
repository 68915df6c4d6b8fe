use thiserror::Error;

/// Errors raised by the library and mapped onto process exit codes by the CLI.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A time or parameter outside the domain where a quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A malformed argument (counts, grid specs, unknown names).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Operation does not accept the given photon state variant.
    #[error("unsupported photon state: {0}")]
    UnsupportedState(&'static str),

    /// Recoherence quantities requested for a state with no window.
    #[error("degenerate recoherence window: {0}")]
    DegenerateWindow(String),

    #[error("quadrature did not converge after {panels} panels (last two values {previous:e}, {last:e})")]
    NonConvergence {
        panels: usize,
        previous: f64,
        last: f64,
    },

    /// Config file or flag parse failure, with location when known.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable process exit code: 2 config, 3 domain, 4 convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Argument(_) | Error::Io(_) => 2,
            Error::Domain(_) | Error::UnsupportedState(_) | Error::DegenerateWindow(_) => 3,
            Error::NonConvergence { .. } => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
