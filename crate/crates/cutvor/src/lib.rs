//! Exact computations on graphs with integer edge lengths: G-admissible
//! divisors and chip-firing on subdivisions, the Voronoi cell of the cut
//! lattice and its face poset, and the mixed and twisted Voronoi tilings of
//! the hyperplane of zero-sum vertex functions.

#[cfg(feature = "cli")]
pub mod cli;
pub mod cochain;
pub mod divisor;
pub mod error;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod rational;
pub mod tiling;
pub mod voronoi;

pub use cochain::{adjoint, coboundary, laplacian_apply, Cochain0, Cochain1};
pub use error::{Error, Result};
pub use graph::{Arrow, Multigraph};
pub use lattice::{is_in_cut_space, quadratic_form_q, spanning_tree_count, LengthFunction};
pub use rational::Rational;
