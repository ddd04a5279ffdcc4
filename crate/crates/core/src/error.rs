use thiserror::Error;

/// Errors produced by graph construction, spectral computation and the
/// family/bound evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected: vertex {0} cannot reach vertex {1}")]
    Disconnected(usize, usize),

    #[error("operation requires at least one edge: {0}")]
    Edgeless(&'static str),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("matrix is not square: row {row} has {len} entries, expected {order}")]
    NotSquare {
        order: usize,
        row: usize,
        len: usize,
    },

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("root finding did not reach residual {tol:e} within {iterations} iterations (residual {residual:e})")]
    RootFinding {
        iterations: usize,
        residual: f64,
        tol: f64,
    },

    #[error("eigenvalue {re} has imaginary part {im:e}; partition is not equitable")]
    NonRealEigenvalue { re: f64, im: f64 },

    #[error("hypothesis not met: {}", .0.join("; "))]
    Hypothesis(Vec<String>),
}

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(vec![msg.into()])
    }

    /// True for failures of the numerical kernels rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::RootFinding { .. }
                | Error::NonRealEigenvalue { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
