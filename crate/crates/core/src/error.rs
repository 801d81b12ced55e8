use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxError {
    #[error("cannot parse type spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },

    #[error("infinite or unsupported Coxeter system: {0}")]
    InfiniteOrUnsupported(String),

    #[error(
        "group order {order} exceeds the enumeration cap {cap}; raise --cap or use fixture mode"
    )]
    CapExceeded { order: u128, cap: u64 },

    #[error("elements belong to different Coxeter systems")]
    MixedSystems,

    #[error(
        "element {0} is not a minimal double coset representative for the given pair of subsets"
    )]
    NotADoubleCosetRep(u32),

    #[error("group algebra vector is not idempotent")]
    NotIdempotent,

    #[error("matrix A is singular")]
    SingularA,

    #[error("Coxeter type of conjugacy class {class} is ambiguous: {first} vs {second}")]
    TypeAssignmentAmbiguous {
        class: usize,
        first: String,
        second: String,
    },

    #[error("cross-check mismatch in {what}: {detail}")]
    CrossCheckMismatch { what: String, detail: String },

    #[error("invalid element store: {0}")]
    InvalidStore(String),
}

pub type Result<T, E = CoxError> = std::result::Result<T, E>;
