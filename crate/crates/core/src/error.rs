use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {n} outside supported range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeMissing(usize, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("edge switch rejected: {0}")]
    SwitchPrecondition(&'static str),
    #[error("connectivity is undefined for a single vertex")]
    SingleVertex,
    #[error("alpha = {0} outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("alpha = {0} outside the verified range [0.5, 1)")]
    AlphaOutsideExtremalRange(f64),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("column sums disagree at vertex {vertex}: matrix {matrix} vs formula {formula}")]
    CertificateMismatch { vertex: usize, matrix: f64, formula: f64 },
    #[error("invalid graph family: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 byte offset {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("canonical labeling supports at most {max} vertices, got {n}")]
    CanonicalTooLarge { n: usize, max: usize },
    #[error("built-in generation supports n <= {max}, got n = {n}; ingest a graph6 file of the class instead")]
    GenerationTooLarge { n: usize, max: usize },
    #[error("{0}")]
    Hypothesis(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
