//! Surface classification for signed ribbon graphs.
//!
//! A GOS is a connected graph with a cyclic order of stubs at each vertex and a
//! `±1` signature on each edge. Fattening vertices to discs and edges to
//! strips (flipped on `-` edges) gives a compact surface with boundary; this
//! crate computes its orientability, number of boundary circles and genus by
//! three independent methods and cross-checks them.

pub mod boundary;
pub mod builder;
pub mod census;
pub mod classify;
pub mod family;
pub mod format;
pub mod gos;
pub mod orientability;
pub mod perm;
pub mod random;
pub mod svg;
mod util;

pub use boundary::{boundary_components, boundary_count, Counter, Side};
pub use builder::{build, build_traced, BuildError, BuildState, CaseLabel};
pub use gos::{Edge, Gos, GosData, GosError, GosErrors, LabelMap, Sign, Stub, VertexId};
pub use orientability::{is_orientable, normalize_all_plus, spanning_tree};
pub use perm::Permutation;
pub use census::{census, flip_orbit_key, CensusOptions, CensusTable, Skeleton};
pub use classify::{classify, cross_validate, homology, SurfaceClass};
pub use family::generate_family;
