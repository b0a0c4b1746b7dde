use thiserror::Error;

/// Errors raised by the expression layer and numeric evaluation.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EvalError {
    /// A negative-power atom vanishes at the evaluation point.
    #[error("singular evaluation: {0}")]
    EvalSingular(String),
    /// A parameter-scalar denominator vanishes at the given bindings.
    #[error("parameter denominator vanishes: {0}")]
    ParamSingular(String),
    /// A parameter appears that has no binding.
    #[error("unbound parameter: {0}")]
    UnboundParam(String),
    /// The value is not exactly representable (exponential at a nonzero abscissa).
    #[error("value is not exactly representable: {0}")]
    NotExact(String),
}

#[derive(Debug, Clone, Error)]
pub enum GeometryError {
    #[error("jet not evaluable at base point: {0}")]
    JetSingular(String),
    #[error("numeric oracle evaluation failed: {0}")]
    OracleSingular(String),
    #[error("generators do not close under the Lie bracket: {0}")]
    NotClosed(String),
}

#[derive(Debug, Clone, Error)]
pub enum SolverError {
    #[error("generator uses an atom outside the ansatz profile: {0}")]
    ProfileUnsupported(String),
    #[error("expansion left the closed expression class: {0}")]
    ClosureError(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
}

#[derive(Debug, Clone, Error)]
pub enum FiberError {
    #[error("action is not transitive at the base point")]
    NotTransitive,
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Error)]
pub enum CatalogError {
    #[error("unknown case: {0}")]
    UnknownCase(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at byte {at}: {msg}")]
pub struct ParseError {
    pub at: usize,
    pub msg: String,
}
