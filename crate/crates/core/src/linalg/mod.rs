//! Exact integer vectors, matrices and kernel lattices.

mod kernel;
mod matrix;
mod vector;

pub use kernel::{hermite_rows, kernel_lattice, lattice_rank, LatticeBasis};
pub use matrix::IntMat;
pub use vector::{is_conformal_sum, is_semiconformal_sum, project_out, IntVec};
