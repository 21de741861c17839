use thiserror::Error as ThisError;

/// Crate-wide error type.
///
/// `Regime` is kept distinct from plain input errors on purpose: it marks a
/// request that contradicts the problem's regime (asking a pure-conduction
/// solution for its front, mapping it to an imposed-temperature problem),
/// and the CLI maps it to its own exit code.
#[derive(Debug, ThisError)]
pub enum Error {
    /// material constants violate positivity/finiteness
    #[error("invalid material: {0}")]
    Material(String),
    /// problem data inconsistent (temperatures out of order, bad boundary data)
    #[error("invalid problem spec: {0}")]
    Spec(String),
    /// argument outside an operation's domain (x < 0, t <= 0, non-finite)
    #[error("domain error: {0}")]
    Domain(String),
    /// operation requires the other regime
    #[error("regime mismatch: {0}")]
    Regime(String),
    /// root bracketing or convergence failure
    #[error("solver failure: {0}")]
    Solver(String),
    /// verification grid unusable (degenerate step, front under-resolved, unstable)
    #[error("grid error: {0}")]
    Grid(String),
    /// valid data the requested operation has no solution path for
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// spec file did not parse or failed field validation
    #[error("spec parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
