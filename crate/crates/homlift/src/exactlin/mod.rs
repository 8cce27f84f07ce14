//! Exact scalar arithmetic and dense linear algebra over `F_p` and `Q`.
//!
//! Everything downstream (homology, pushouts, lifting decisions) reduces to
//! the routines here: rank, affine solving with kernel bases, and quotient
//! projections. All bases are chosen by one deterministic pivot rule (first
//! nonzero entry, scanning columns left to right and rows top to bottom), so
//! every derived construction is bit-reproducible.

mod elim;
mod field;
mod matrix;

pub use elim::{image_basis, kernel_basis, quotient_basis, rank, solve_affine, solve_matrix, AffineOutcome};
pub(crate) use elim::{LinSystem, SparseRow, SysOutcome};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
