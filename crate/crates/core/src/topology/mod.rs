//! Outerplanarity, planarity, genus and crosscap bounds, and embedding
//! certificates.

mod formulas;
mod rotation;
mod search;
mod surface;

use thiserror::Error;

use crate::graph::GraphError;

pub use formulas::{formula_crosscap_kmn, formula_crosscap_kn, formula_genus_kmn, formula_genus_kn};
pub use rotation::{EmbeddingCheck, RotationSystem, Surface};
pub use search::{search_embedding, SearchOutcome, DEFAULT_BUDGET, MAX_SEARCH_VERTICES};
pub use surface::{
    certificate, classify_surface, classify_surface_with_budget, genus_crosscap_lower_bounds,
    is_outerplanar, is_planar, multipartite_parts, CertificateKind, FoundObstruction, LowerBounds,
    Obstruction, PlanarityCheck, SurfaceVerdict, CERT_DIR_ENV, OBSTRUCTION_MENU,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("face tracing is inconsistent: {0}")]
    TracingInconsistent(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported search: {0}")]
    Unsupported(String),
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExhausted { nodes: u64 },
    #[error("certificate line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, TopologyError>;

/// Verifies a certificate and reports the surface it realises.
pub fn verify_embedding(cert: &RotationSystem) -> Result<EmbeddingCheck> {
    cert.verify()
}
