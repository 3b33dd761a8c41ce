use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: valid types are A n>=1, B n>=2, C n>=2, D n>=3, E n in {{6,7,8}}, F n=4, G n=2")]
    InvalidType { family: Family, rank: usize },

    #[error("unknown root system family '{0}'")]
    UnknownFamily(String),

    #[error("zero vector cannot be used as a root")]
    ZeroRoot,

    #[error("vector has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("highest weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("expected {expected} Dynkin labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("representation has dimension {dim}, above the bound {bound}")]
    DimensionBound { dim: u64, bound: u64 },

    #[error("dimension does not fit in 64 bits")]
    DimensionOverflow,

    #[error("non-integral multiplicity {value} at weight {weight}")]
    NonIntegralMultiplicity { weight: String, value: String },

    #[error("weight {0} is not extremal")]
    NotExtremal(String),

    #[error("representation is not faithful: some root has empty omega_alpha")]
    NotFaithful,

    #[error("omega_alpha pattern matches no known class (max size {max})")]
    UnrecognizedPattern { max: usize },

    #[error("empty weight set")]
    EmptyWeightSet,

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),

    #[error("catalog error: {0}")]
    Catalog(String),

    #[error("unsupported construction: {0}")]
    Unsupported(String),

    #[error("module has no non-degenerate invariant bilinear form")]
    NoInvariantForm,

    #[error("invalid matrix representation: {0}")]
    InvalidRep(String),

    #[error("solver bound exceeded: dim_V = {dim_v}, unknowns = {unknowns} (bounds {max_dim_v}, {max_unknowns})")]
    SolverBound {
        dim_v: usize,
        unknowns: usize,
        max_dim_v: usize,
        max_unknowns: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
