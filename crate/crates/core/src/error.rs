use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    NoGenerators,

    #[error("element index {0} out of range")]
    BadIndex(usize),

    #[error("closure exceeded the element limit of {0}")]
    TooLarge(usize),

    #[error("group axioms violated: {0}")]
    AxiomViolation(String),

    #[error("not a homomorphism: edge check fails at element {element} with generator {generator}")]
    NotAHomomorphism { element: usize, generator: usize },

    #[error("expected {expected} generator images, got {got}")]
    GeneratorCount { expected: usize, got: usize },

    #[error("normal subgroup lattice exceeded the guard of {0} nodes")]
    GuardExceeded(usize),

    #[error("search budget exhausted after {tried} candidates")]
    SearchBudgetExceeded { tried: u64 },

    #[error("unsupported parameters: SL({dim}, {q})")]
    UnsupportedParameters { dim: usize, q: usize },

    #[error("unsupported builtin factor name {0:?}")]
    UnsupportedName(String),

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("invalid amalgamation: {0}")]
    InvalidAmalgamation(String),

    #[error("group is not semisimple: {0}")]
    NotSemisimple(String),

    #[error("group is not quasisimple: {0}")]
    NotQuasisimple(String),

    #[error("component {0} lies in the exceptional list and admits no center-inverting automorphism")]
    ComponentInL(String),

    #[error("unknown simple group name {0:?}")]
    UnknownName(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid counts: need 0 <= l <= n and n >= 1, got n = {n}, l = {l}")]
    InvalidCounts { n: usize, l: usize },

    #[error("conjugator is ill-defined at element {element}: factorizations disagree")]
    IllDefined { element: usize },

    #[error("conjugation by {conjugator} sends the regular subgroup for {subset} outside the family")]
    ActionLeavesFamily { conjugator: String, subset: String },

    #[error("bad catalog data: {0}")]
    Catalog(String),
}
