use thiserror::Error;

/// Failure modes of the exact computations. Variants that "must never occur"
/// signal either a bug or a counterexample and carry enough witness data to
/// reproduce the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("curve constant coefficient is not 1: {0}")]
    BadConstant(String),
    #[error("curve orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("lifting oracle failed: {0}")]
    OracleFailure(String),
    #[error("not group-like: {0}")]
    NotGrouplike(String),
    #[error("not primitive: {0}")]
    NotPrimitive(String),
    #[error("no integral solution in degree {0}")]
    NoIntegralSolution(String),
    #[error("degree bound {0} exceeded")]
    DegreeOverflow(usize),
    #[error("non-integer exponent for necklace class {0}")]
    NonIntegerExponent(String),
    #[error("odd lattice: diagonal entry {0} is odd")]
    OddLattice(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("grading {0} lies outside the configured window")]
    OutOfWindow(String),
    #[error("integral closure did not stabilize; still growing: {0}")]
    NotStabilized(String),
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),
    #[error("window overflow: {0}")]
    WindowOverflow(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("representation is not faithful on the window: {0}")]
    SingularRepresentation(String),
    #[error("empty window: {0}")]
    EmptyWindow(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("index is not finite: {0}")]
    NotFinite(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
