//! Exact maximal toric ball packings of Delzant polytopes.

pub mod delzant;
pub mod error;
pub mod exact;
pub mod packing;
pub mod perturb;
pub mod polytope;

pub use delzant::{validate_delzant, DelzantPolytope, Fan, VertexFrame};
pub use error::{DelzantError, ExactError, PackingError, PerturbError, PolytopeError};
pub use exact::{IntVector, RatMatrix, RatVector, Rational};
pub use packing::{
    build_packing_polytope, density, disjointness_oracle, maximize, realize, AdmissibleSimplex,
    MaximalPackings, Packing, PackingPolytope,
};
pub use perturb::{is_admissible, is_homothetic, perturb, scan_segment, ScanResult};
pub use polytope::{HPolytope, HalfSpace, VertexData};
