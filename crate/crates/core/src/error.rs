use crate::structure::ValidationError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid structure: {}", render_validation(.0))]
    Invalid(Vec<ValidationError>),

    #[error("{what}: size {n} exceeds the supported bound {max}")]
    SizeBound {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("structure is not idempotent ordered: {element} is not below its square")]
    NotIdempotentOrdered { element: usize },

    /// A relation that must be an equivalence on this input was not one.
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),

    #[error("theorem hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("subset is not closed under the product: {a} * {b} = {product} lies outside it")]
    NotProductClosed { a: usize, b: usize, product: usize },

    #[error("partition is not a semilattice congruence ({law} fails at {tuple:?})")]
    NotSemilatticeCongruence {
        law: &'static str,
        tuple: Vec<usize>,
    },

    #[error("class {class} is not closed under the product")]
    ClassNotClosed { class: usize },

    #[error("map is not a homomorphism: f({a} * {b}) != f({a}) * f({b})")]
    NotAHomomorphism { a: usize, b: usize },

    #[error("no least upper bound exists for the image of {subset:?}")]
    JoinMissing { subset: Vec<usize> },

    #[error("unknown template `{0}`")]
    UnknownTemplate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_size_bound(&self) -> bool {
        matches!(self, Error::SizeBound { .. })
    }
}

fn render_validation(errors: &[ValidationError]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
