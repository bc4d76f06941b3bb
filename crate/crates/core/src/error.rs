use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("simple index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("weight is not minuscule")]
    NotMinuscule,

    #[error("permutation is not a minimal coset representative for r = {r}")]
    NotGrassmannian { r: usize },

    #[error("invalid a-sequence {a:?} for n = {n}, r = {r}")]
    InvalidASequence { n: usize, r: usize, a: Vec<usize> },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("cell not stable under s_{0}")]
    NotInStabilizer(usize),

    #[error("re-expression failed: {0}")]
    ReexpressionFailed(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("generator s_{k} is outside the cases with closed forms (m = {m}, n = {n})")]
    NoClosedForm { k: usize, m: usize, n: usize },

    #[error("root {0} is not below alpha_1")]
    RootAboveAlphaOne(String),

    #[error("permutation is not of the form s_1 s_2 ... s_n tau")]
    NotNegativeForm,

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
