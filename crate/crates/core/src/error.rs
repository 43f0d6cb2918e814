use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter token `{0}`")]
    InvalidLetter(String),

    #[error("invalid Laurent polynomial `{0}`")]
    InvalidPolynomial(String),

    #[error("`{num}` is not divisible by `{den}`")]
    NotDivisible { num: String, den: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("invalid column: {0}")]
    InvalidColumn(String),

    #[error("column {0} is not admissible")]
    NotAdmissible(String),

    #[error("invalid tabloid: {0}")]
    InvalidTabloid(String),

    #[error("not a tableau of type G2: {0}")]
    InvalidTableau(String),

    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillatingTableau(String),

    #[error("word `{0}` is not a highest weight vertex")]
    NotHighestWeight(String),

    #[error("weight mismatch: {source_hw} has weight {source_weight}, target {target} has weight {target_weight}")]
    WeightMismatch {
        source_hw: String,
        source_weight: String,
        target: String,
        target_weight: String,
    },

    #[error("lowering operator f{node} killed `{word}` while replaying a crystal isomorphism")]
    LoweringDied { word: String, node: u8 },

    #[error("word `{0}` is outside the domain of the bijection")]
    OutOfDomain(String),

    #[error("no word maps to the given (P, Q) pair: {0}")]
    NoPreimage(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Raised when a property guaranteed by the theory fails; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
