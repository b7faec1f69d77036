//! Error types shared across the crate.

use serde::Serialize;
use thiserror::Error;

use crate::rat::Rat;

/// Location and values of a violated identity, reported by validators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis indices at which the identity was evaluated.
    pub indices: Vec<usize>,
    pub lhs: Vec<(usize, Rat)>,
    pub rhs: Vec<(usize, Rat)>,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at indices {:?}: lhs {:?} != rhs {:?}", self.indices, self.lhs, self.rhs)
    }
}

#[derive(Error, Debug)]
pub enum HopfError {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("invalid group table: {reason}")]
    InvalidGroup { reason: String },

    #[error("algebra axiom violated ({axiom}): {witness}")]
    AlgebraAxiom { axiom: String, witness: Witness },

    #[error("coalgebra/Hopf axiom violated ({axiom}): {witness}")]
    HopfAxiom { axiom: String, witness: Witness },

    #[error("invalid embedding: {reason}")]
    InvalidEmbedding { reason: String },

    #[error("factorization octagon violated: {witness}")]
    OctagonViolation { witness: Witness },

    #[error("module-algebra axiom violated ({axiom}): {witness}")]
    ModuleAlgebraAxiom { axiom: String, witness: Witness },

    #[error("matched-pair compatibility violated ({axiom}): {witness}")]
    MatchedPairAxiom { axiom: String, witness: Witness },

    #[error("pairing axiom violated ({axiom}): {witness}")]
    PairingAxiom { axiom: String, witness: Witness },

    #[error("multiplication map is not bijective (rank {rank} of {expected})")]
    NotAFactorization { rank: usize, expected: usize },

    #[error("not semisimple: {context}; similarity engine unsupported here")]
    NotSemisimple { context: String },

    #[error("unknown builtin: {spec}")]
    UnknownBuiltin { spec: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl HopfError {
    /// Exit code contract: 1 for validation problems, 2 when a computation
    /// is unsupported (non-semisimple similarity).
    pub fn exit_code(&self) -> i32 {
        match self {
            HopfError::NotSemisimple { .. } => 2,
            _ => 1,
        }
    }
}
