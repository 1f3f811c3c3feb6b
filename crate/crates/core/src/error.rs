use thiserror::Error;

/// Errors raised by constructions in this crate.
///
/// Report-valued checks (identity validation, fixed-point commutation,
/// naturality) return their findings as data and never use this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a monotone map: {0}")]
    NotMonotone(String),

    #[error("truncation cutoff {cutoff} is too small: level {needed} is required")]
    CutoffTooSmall { needed: usize, cutoff: usize },

    #[error("cutoff mismatch: {0} vs {1}")]
    CutoffMismatch(usize, usize),

    #[error("malformed simplicial set: {0}")]
    MalformedSimplicialSet(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("not a semigroupoid: {0}")]
    NotSemigroupoid(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid barycentric coordinates: {0}")]
    InvalidCoordinates(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("ill-defined restriction: {0}")]
    IllDefinedRestriction(String),
}

impl Error {
    /// True for failures caused by a truncation budget that is too small.
    pub fn is_truncation(&self) -> bool {
        matches!(self, Error::CutoffTooSmall { .. } | Error::CutoffMismatch(..))
    }

    /// The variant name in snake case, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::NotMonotone(_) => "not_monotone",
            Error::CutoffTooSmall { .. } => "cutoff_too_small",
            Error::CutoffMismatch(..) => "cutoff_mismatch",
            Error::MalformedSimplicialSet(_) => "malformed_simplicial_set",
            Error::InvalidMonoid(_) => "invalid_monoid",
            Error::InvalidCategory(_) => "invalid_category",
            Error::NotSemigroupoid(_) => "not_semigroupoid",
            Error::InvalidAction(_) => "invalid_action",
            Error::NotAGroup(_) => "not_a_group",
            Error::NotASubgroup(_) => "not_a_subgroup",
            Error::NotAHomomorphism(_) => "not_a_homomorphism",
            Error::InvalidComplex(_) => "invalid_complex",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidCoordinates(_) => "invalid_coordinates",
            Error::UnknownName(_) => "unknown_name",
            Error::IllDefinedRestriction(_) => "ill_defined_restriction",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, bound })
    }
}
