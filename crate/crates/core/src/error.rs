use thiserror::Error;

/// Errors raised while building or querying semitopologies and semiframes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point id `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point id `{0}`")]
    UnknownPoint(String),
    #[error("too many points: {count} (at most {max} are supported)")]
    TooManyPoints { count: usize, max: usize },
    #[error("point set over a universe of {found} points used with a space of {expected} points")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("opens family exceeds the configured cap of {cap} sets")]
    OpensCapExceeded { cap: usize },
    #[error("opens family is missing the empty set")]
    MissingEmptyOpen,
    #[error("opens family is missing the full point set")]
    MissingFullOpen,
    #[error("opens family is not closed under unions: {left} \u{222a} {right} = {union} is missing")]
    MissingUnion {
        left: String,
        right: String,
        union: String,
    },
    #[error("opens family does not match the union closure of the generators")]
    OpensGeneratorMismatch,

    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("unknown element id `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: {a} \u{2291} {b} and {b} \u{2291} {a}")]
    NotAntisymmetric { a: String, b: String },
    #[error("elements {a} and {b} have no join")]
    NoJoin { a: String, b: String },
    #[error("semiframe has no least element")]
    NoBottom,
    #[error("semiframe has no elements")]
    NoElements,
    #[error("compatibility is not properly reflexive: {x} is not compatible with itself")]
    NotProperlyReflexive { x: String },
    #[error("compatibility relates {x} to the bottom element")]
    CompatibleWithBottom { x: String },
    #[error("compatibility does not distribute over the join {a} \u{2228} {b} at {x}")]
    NotDistributive { x: String, a: String, b: String },

    #[error("not a semifilter: {0}")]
    NotSemifilter(String),
    #[error("not an abstract point: {0}")]
    NotAbstractPoint(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("map is not total: no image for `{0}`")]
    MissingImage(String),
    #[error("value assignment is missing a value for point `{0}`")]
    MissingValue(String),
    #[error("a splitting needs at least two distinct values")]
    TooFewValues,
    #[error("malformed document at `{path}`: {message}")]
    Document { path: String, message: String },
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error("unknown graph node `{0}`")]
    UnknownNode(String),
    #[error("graph has {count} nodes, isomorphism search is capped at {max}")]
    GraphTooLarge { count: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Errors caused by a size limit rather than by malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::OpensCapExceeded { .. } | Error::TooManyPoints { .. } | Error::GraphTooLarge { .. }
        )
    }
}
