//! Emitting and independently re-checking certificates.
//!
//! Every verdict ships with a witness a third party can re-check without
//! running any solver: lifting witnesses and extensions are verified by
//! matrix identities, and nonexistence is certified by a Farkas row `y` with
//! `y^T A = 0` and `y^T b != 0` against the deterministically re-assembled
//! system. Certificates pin the exact problem via a hash of its canonical
//! serialization.
//!
//! ```text
//! cargo run --example certificates
//! ```

use homlift::cli::files::{
    help_solution_certificate, nonexistence_certificate, verify_certificate, Metadata,
    NonexistenceTarget, ProblemFile,
};
use homlift::constructions::cylinder;
use homlift::oracle::{random_instance, InstanceParams};
use homlift::solver::{help_system, solve_help, Selection, SolveOutcome};
use homlift::{ChainComplex, ChainMap, Field, LiftingProblem};

fn main() {
    // A solvable instance: the witness matrices are the certificate.
    let params = InstanceParams::new(Field::f2(), 3, 2, 134).planted(true);
    let problem = random_instance(&params).expect("generation succeeds").problem;
    let meta = Metadata { description: Some("planted demo".into()), seed: Some(134) };
    let file = ProblemFile::from_problem(&problem, meta.clone());
    let witness = solve_help(&problem).unwrap().expect("planted instance solves");
    let cert = help_solution_certificate(&problem, &meta, &witness);
    verify_certificate(&file, &cert).expect("fresh certificate verifies");
    println!("help-solution certificate verifies");

    // An unsolvable instance: the certificate is a Farkas refutation.
    let field = Field::f2();
    let zero = ChainComplex::zero(field);
    let sphere = ChainComplex::sphere(field, 0);
    let hard = LiftingProblem::new(
        ChainMap::zero(zero.clone(), sphere.clone()),
        ChainMap::zero(zero.clone(), sphere.clone()),
        ChainMap::identity(&sphere),
        ChainMap::zero(zero.clone(), zero.clone()),
        ChainMap::zero(cylinder(&zero).object, sphere.clone()),
    )
    .unwrap();
    let meta = Metadata { description: Some("obstructed demo".into()), seed: None };
    let hard_file = ProblemFile::from_problem(&hard, meta.clone());
    let (system, _, _) = help_system(&hard);
    let farkas = match system.solve(Selection::Canonical, true) {
        SolveOutcome::Infeasible { farkas: Some(y) } => y,
        _ => unreachable!("the sphere instance is infeasible"),
    };
    let cert = nonexistence_certificate(&hard, &meta, NonexistenceTarget::Help, None, &farkas);
    verify_certificate(&hard_file, &cert).expect("refutation verifies");
    println!("nonexistence certificate (Farkas row of {} entries) verifies", farkas.len());

    // Certificates are bound to their problem: a different file is rejected.
    let err = verify_certificate(&file, &cert).unwrap_err();
    println!("cross-checking against the wrong problem fails: {err}");
}
