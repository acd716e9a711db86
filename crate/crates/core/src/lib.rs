//! Generators and verifiers for cyclic polytopes and their generalizations:
//! multiplexes, braxtopes, ordinary, braxial, periodically-cyclic and
//! bi-cyclic polytopes.
//!
//! Polytopes are handled combinatorially as [`FacetList`]s (vertex sets of
//! facets relative to a fixed vertex array) and turned into [`FaceLattice`]s
//! for invariants. The [`realization`] module places points on the classical
//! curves and recovers facet lists by a brute-force convex hull in exact or
//! high-precision arithmetic, which serves as the independent oracle for
//! every combinatorial construction.

pub mod cli;
pub mod error;
pub mod families;
pub mod gale;
pub mod lattice;
pub mod realization;
pub mod repro;
mod vertex_set;

pub use error::{Error, Result};
pub use lattice::{FaceLattice, FacetList};
pub use vertex_set::VertexSet;
