use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("degenerate curve: transvection along the zero vector")]
    DegenerateCurve,

    #[error("matrix does not preserve the intersection form")]
    NotSymplectic,

    #[error("unsupported genus: {0} (needs g >= 3)")]
    UnsupportedGenus(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("solver failed: {context}; unsatisfied: {unsatisfied:?}")]
    SolverFailure {
        context: String,
        unsatisfied: Vec<String>,
    },

    #[error("evaluation error: unbound symbol {0}")]
    UnboundSymbol(String),

    #[error("import error: {0}")]
    Import(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
