//! Exact-arithmetic lifting obstructions for bounded chain complexes over a field.
//!
//! The ambient category is bounded chain complexes of finite-dimensional vector
//! spaces over `F_p` or `Q`, with the model structure in which weak equivalences
//! are quasi-isomorphisms, fibrations are degreewise surjections, and
//! cofibrations are degreewise injections. Every object is fibrant and
//! cofibrant, the category is stable and right proper, and every lifting
//! question reduces to an affine linear system that can be solved exactly.
//!
//! The crate decides three lifting relations:
//!
//! * strict lifting in a commutative square ([`solver::solve_square`]),
//! * lifting up to homotopy in the HELP diagram ([`solver::solve_help`]),
//! * extension of a chain map along a degreewise injection
//!   ([`solver::solve_extension`]),
//!
//! and computes a single complete obstruction: a chain map `chi` from the
//! double mapping cylinder `N(i)` to the homotopy pushout `M(alpha, alpha)`
//! whose extendability over `Cyl(B)` is equivalent to solvability of the HELP
//! problem ([`obstruction`]). Witnesses are extracted constructively, either
//! directly from the linear system or by walking the obstruction-theoretic
//! proof through the cartesian gap map and a cocylinder ([`obstruction::extract_lift_from_trivial_chi`],
//! [`solver::solve_help_via_cocylinder`]).
//!
//! An independent oracle enumerates all candidate witnesses on tiny `F_2`
//! instances ([`oracle`]), and a randomized harness checks the
//! trivial-iff-liftable biconditional on seeded instances
//! ([`oracle::verify_theorem`]).
//!
//! Run the examples (`cargo run --example solve_lifting_problem`) for guided
//! tours, or the `homlift` binary for the JSON file interface.

pub mod chain;
pub mod cli;
pub mod constructions;
pub mod exactlin;
pub mod obstruction;
pub mod oracle;
pub mod solver;

mod error;

pub use chain::{AlgebraicHomotopy, ChainComplex, ChainMap};
pub use error::Error;
pub use exactlin::{Field, Matrix, Scalar};
pub use solver::{HelpSolution, LiftingProblem, Selection};
