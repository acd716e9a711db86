use thiserror::Error;

use crate::realization::PeriodDiagnostics;
use crate::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid facet list: {0}")]
    InvalidFacetList(String),

    /// The intersection closure of a facet list is not the face lattice of
    /// any polytope (ungraded, missing vertices, or failing Euler's relation).
    #[error("not a polytope lattice: {0}")]
    NotAPolytopeLattice(String),

    #[error("vertex {vertex} out of range for {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{num_vertices} vertices exceeds the search limit of {max}")]
    TooLarge { num_vertices: usize, max: usize },

    /// Edge pattern at the ends of the vertex array does not define a characteristic.
    #[error("characteristic pattern violated: {0}")]
    PatternViolation(String),

    #[error("input is not Gale and braxial: {0}")]
    NotGaleBraxial(String),

    #[error("edges at the last vertex are not a suffix interval: {0}")]
    EdgePatternViolation(String),

    #[error("degenerate point configuration: {0}")]
    DegenerateInput(String),

    #[error("precision ambiguous: {0}")]
    PrecisionAmbiguous(String),

    #[error("points {0:?} are not vertices of the hull")]
    NonVertices(Vec<usize>),

    #[error("{0} is not a facet")]
    NotAFacet(VertexSet),

    #[error("hull is not Gale under the index order")]
    NotGale,

    #[error("not periodically-cyclic: {0}")]
    NotPeriodicallyCyclic(Box<PeriodDiagnostics>),

    #[error("self-consistency check failed: {0}")]
    SelfConsistency(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
