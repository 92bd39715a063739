use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A quantity that must be an integer carries a nontrivial denominator.
    #[error("{what} is not an integer (n = {n}, p = {p})")]
    IntegralityViolation { what: &'static str, n: u32, p: u64 },

    /// Two constructions of the same object disagree. Always a bug.
    #[error("representations disagree for ({n}, {m}): {detail}")]
    RepresentationMismatch { n: u32, m: u32, detail: String },

    #[error("polynomial is not squarefree (gcd with derivative has degree {0})")]
    NotSquarefree(usize),

    #[error("polynomial vanishes at the endpoint {0} of the counting interval")]
    RootOnEndpoint(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("independent enclosures are disjoint: {0}")]
    DisjointEnclosures(String),

    /// The enclosure straddles zero although it is narrow and the sign is known.
    #[error("enclosure contains zero: {0}")]
    EnclosureContainsZero(String),

    #[error("evaluation mismatch: {0}")]
    EvaluationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
