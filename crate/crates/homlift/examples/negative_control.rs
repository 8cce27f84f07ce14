//! A genuinely obstructed instance, double-checked by brute force.
//!
//! Take `B = Y = S^0`, `A = X = 0`, and `f` the identity. A lift would be a
//! nullhomotopy of the identity of the sphere, which does not exist: `chi`
//! lands on two distinct homology classes of `M(alpha, alpha)` and cannot
//! extend over the cylinder. The enumeration oracle confirms by scanning
//! every candidate witness.
//!
//! ```text
//! cargo run --example negative_control
//! ```

use homlift::constructions::cylinder;
use homlift::obstruction::{build_chi, is_chi_trivial};
use homlift::oracle::{enumerate_extension, enumerate_help};
use homlift::solver::solve_help;
use homlift::{ChainComplex, ChainMap, Field, LiftingProblem};

fn main() {
    let field = Field::f2();
    let zero = ChainComplex::zero(field);
    let sphere = ChainComplex::sphere(field, 0);
    let problem = LiftingProblem::new(
        ChainMap::zero(zero.clone(), sphere.clone()),
        ChainMap::zero(zero.clone(), sphere.clone()),
        ChainMap::identity(&sphere),
        ChainMap::zero(zero.clone(), zero.clone()),
        ChainMap::zero(cylinder(&zero).object, sphere.clone()),
    )
    .expect("solid arrows commute");

    let verdict = solve_help(&problem).expect("solver runs");
    println!("solver: {}", if verdict.is_some() { "lift" } else { "no lift" });

    let pkg = build_chi(&problem).expect("chi builds");
    let trivial = is_chi_trivial(&pkg).expect("extension solver runs");
    println!("chi: {}", if trivial.is_some() { "trivial" } else { "nontrivial" });

    // The two ends of N(i) land in different homology classes, which is the
    // whole obstruction here.
    let end0 = pkg.chi.compose(&pkg.n_cylinder.end0).unwrap();
    let end1 = pkg.chi.compose(&pkg.n_cylinder.end1).unwrap();
    println!(
        "chi separates the ends on H_0: {}",
        end0.induced_on_homology(0) != end1.induced_on_homology(0)
    );

    let help_census = enumerate_help(&problem, 24).expect("tiny instance");
    println!(
        "exhaustive scan: {} HELP witnesses among 2^{} candidates",
        help_census.count, help_census.bits
    );
    let ext_census = enumerate_extension(pkg.inclusion(), &pkg.chi, 24).expect("tiny instance");
    println!(
        "exhaustive scan: {} extensions among 2^{} candidates",
        ext_census.count, ext_census.bits
    );
}
