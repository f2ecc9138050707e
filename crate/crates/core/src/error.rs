//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by validation and by operations whose preconditions fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a number field needs at least one archimedean place (r1 = r2 = 0)")]
    EmptyField,

    #[error("embedding id {id} out of range for degree {degree}")]
    EmbeddingOutOfRange { id: usize, degree: usize },

    #[error("galois_perms entry is not a permutation of the embedding ids")]
    InvalidPermutation,

    #[error("weight component at embedding {embedding} is not weakly decreasing")]
    NotDominant { embedding: usize },

    #[error("expected {expected} components of rank {rank}, got {got}")]
    BadComponents {
        expected: usize,
        got: usize,
        rank: usize,
    },

    #[error("rank mismatch: expected GL({expected}), got GL({got})")]
    RankMismatch { expected: usize, got: usize },

    #[error("weights live over different field signatures")]
    SignatureMismatch,

    #[error("weight is not pure: {0}")]
    NotPure(String),

    #[error("weight fails strong purity")]
    NotStronglyPure,

    #[error("a sign is required for an odd-rank parameter at a real place")]
    MissingSign,

    #[error("purity weight {0} must be even here")]
    OddPurityWeight(i64),

    #[error("signatures of Hecke characters are only defined when r1 > 0")]
    NoRealPlaces,

    #[error("compatibility set is empty; the closed-form hypothesis fails")]
    EmptyCompatSet,

    #[error(
        "criticality scan produced a non-interval set; this indicates an implementation fault"
    )]
    NonIntervalScan,

    #[error("cannot tensor parameters of different place kinds")]
    MixedPlaceKinds,

    #[error("character label `{0}` is not bound in the rule set")]
    UnboundCharacter(String),

    #[error("invalid Hodge data: {0}")]
    InvalidHodge(String),

    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
