use thiserror::Error;

/// Errors produced by the emission computations.
#[derive(Debug, Error)]
pub enum DceError {
    /// A physical parameter is outside its valid domain.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A numerical procedure failed to converge to the requested tolerance.
    #[error("numerical error: {context} (achieved {achieved:.3e}, requested {requested:.3e})")]
    Numerical {
        context: String,
        achieved: f64,
        requested: f64,
    },

    /// A brute-force oracle was asked for a problem size beyond its budget.
    #[error("resource error: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, DceError>;
