use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid term identifier `{0}`")]
    InvalidTerm(String),

    #[error("`{0}` is a reserved copula keyword and cannot name a term")]
    ReservedTerm(String),

    #[error("no binding for metavariable `{0}`")]
    MissingBinding(String),

    #[error("metavariable `{0}` does not occur in the schema formula")]
    UnusedMetavariable(String),

    #[error("schemas range over different metavariables: {first:?} vs {second:?}")]
    MetavariableMismatch {
        first: Vec<String>,
        second: Vec<String>,
    },

    #[error("copula `{copula}` cannot be evaluated under {semantics} semantics")]
    WrongCopulaFamily {
        copula: &'static str,
        semantics: &'static str,
    },

    #[error("term `{0}` has no interpretation in the model")]
    UnknownTerm(String),

    #[error("unknown individual `{0}`")]
    UnknownIndividual(String),

    #[error("empty universe is not allowed by the evaluation options")]
    EmptyUniverse,

    #[error("model kind does not match the {0} reading")]
    ReadingMismatch(&'static str),

    #[error("bound {bound} exceeds the maximum {max} for {what}")]
    BoundExceeded {
        what: &'static str,
        bound: usize,
        max: usize,
    },

    #[error("formula has {atoms} distinct atoms; at most {max} are supported")]
    AtomBudget { atoms: usize, max: usize },

    #[error("algebra atom count {0} outside the supported range 1..=4")]
    AtomCount(usize),

    #[error("elements belong to different algebras ({0} vs {1} atoms)")]
    AlgebraMismatch(usize, usize),

    #[error("element {element:#b} is out of range for a {atoms}-atom algebra")]
    ElementOutOfRange { element: u32, atoms: usize },

    #[error("exception list has {0} entries; at most 16 are allowed")]
    TooManyExceptions(usize),

    #[error("atom `{0}` has no value in the valuation")]
    UnboundAtom(String),

    #[error("atom `{0}` cannot be interpreted in this bridge model")]
    Uninterpretable(String),

    #[error("model file: {0}")]
    ModelFile(String),

    #[error("proof script line {line}: {message}")]
    ProofScript { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
