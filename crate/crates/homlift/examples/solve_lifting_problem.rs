//! Build a lifting problem by hand and decide it.
//!
//! The setup: `i : S^0 -> D^1` includes the boundary generator into the
//! disk, and we ask whether the identity of the disk lifts (up to homotopy)
//! through itself. It does, and the solver returns an explicit witness
//! `(K, g)` satisfying all four defining equations exactly.
//!
//! ```text
//! cargo run --example solve_lifting_problem
//! ```

use std::collections::BTreeMap;

use homlift::constructions::{cylinder, cylinder_map};
use homlift::solver::solve_help;
use homlift::{ChainComplex, ChainMap, Field, LiftingProblem, Matrix};

fn main() {
    let field = Field::f2();
    let s0 = ChainComplex::sphere(field, 0);
    let d1 = ChainComplex::disk(field, 1);

    let mut comps = BTreeMap::new();
    comps.insert(0, Matrix::identity(field, 1));
    let i = ChainMap::new(s0, d1.clone(), comps).expect("boundary inclusion is a chain map");
    println!("i is a cofibration: {}", i.is_cofibration());

    // A strictly commuting square (alpha = f = id, h = i) determines the
    // degenerate connecting homotopy.
    let alpha = ChainMap::identity(&d1);
    let problem = LiftingProblem::from_strict_square(
        i.clone(),
        alpha.clone(),
        ChainMap::identity(&d1),
        i.clone(),
    )
    .expect("square commutes");

    let solution = solve_help(&problem)
        .expect("solver runs")
        .expect("the identity always lifts");
    solution.validate_for(&problem).expect("witness satisfies all four equations");

    println!("lift found:");
    println!("  g : B -> X   components on {} degrees", solution.g.comps().len());
    println!("  K : Cyl(B) -> Y components on {} degrees", solution.k.comps().len());

    // Spell the four equations out once.
    let cyl_b = cylinder(problem.b());
    assert_eq!(solution.k.compose(&cyl_b.i0).unwrap(), problem.f);
    assert_eq!(solution.k.compose(&cylinder_map(&problem.i)).unwrap(), problem.homotopy);
    assert_eq!(
        solution.k.compose(&cyl_b.i1).unwrap(),
        problem.alpha.compose(&solution.g).unwrap()
    );
    assert_eq!(solution.g.compose(&problem.i).unwrap(), problem.h);
    println!("all four HELP equations re-checked exactly");
}
