//! Face-lattice algebra over vertex-facet incidences.

mod face_lattice;
mod facet_list;
mod flag;
mod iso;

pub use face_lattice::{
    build_lattice, dual_lattice, f_vector, is_neighbourly, universal_edges, vertex_figure,
    FVector, FaceLattice,
};
pub use facet_list::{polygon, pyramid, simplex, FacetList};
pub use flag::{flag_vector, FlagVector};
pub use iso::{is_isomorphic, is_isomorphism, is_self_dual, self_duality, Isomorphism};
