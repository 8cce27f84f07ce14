use std::fs;
use std::path::Path;

use super::files::{
    chi_extension_certificate, help_solution_certificate, nonexistence_certificate,
    verify_certificate, CertificateFile, NonexistenceTarget, ProblemFile,
};
use crate::chain::ChainComplex;
use crate::error::Error;
use crate::exactlin::{Field, Scalar};
use crate::obstruction::{build_chi, is_chi_trivial};
use crate::oracle::{enumerate_help, verify_theorem, InstanceParams};
use crate::solver::{
    extension_system, help_system, solve_help, LiftingProblem, Selection, SolveOutcome,
    SystemBuilder,
};

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<(ProblemFile, LiftingProblem), Error> {
    let file = ProblemFile::from_json(&read(path)?)?;
    let problem = file.resolve()?;
    Ok((file, problem))
}

fn write_certificate(path: Option<&Path>, cert: &CertificateFile) -> Result<(), Error> {
    if let Some(path) = path {
        fs::write(path, cert.to_pretty_json() + "\n")
            .map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
        println!("certificate written to {}", path.display());
    }
    Ok(())
}

fn dims_string(c: &ChainComplex) -> String {
    if c.is_zero_complex() {
        return "0".into();
    }
    let parts: Vec<String> = c.dims().iter().map(|(n, d)| format!("{n}: {d}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn farkas_row(builder: &SystemBuilder) -> Result<Vec<Scalar>, Error> {
    match builder.solve(Selection::Canonical, true) {
        SolveOutcome::Infeasible { farkas: Some(y) } => Ok(y),
        SolveOutcome::Infeasible { farkas: None } => {
            Err(Error::internal("farkas tracking was requested but missing"))
        }
        SolveOutcome::Solved(_) => {
            Err(Error::internal("system flipped between infeasible and solvable"))
        }
    }
}

pub fn validate(path: &Path) -> Result<i32, Error> {
    let (_, problem) = load_problem(path)?;
    println!(
        "OK: A = {}, B = {}, X = {}, Y = {} over {:?}",
        dims_string(problem.a()),
        dims_string(problem.b()),
        dims_string(problem.x()),
        dims_string(problem.y()),
        problem.field()
    );
    Ok(0)
}

pub fn chi(path: &Path, out: Option<&Path>) -> Result<i32, Error> {
    let (file, problem) = load_problem(path)?;
    let pkg = build_chi(&problem)?;
    println!("N(i): {}", dims_string(pkg.n_object()));
    println!("M(alpha, alpha): {}", dims_string(pkg.m_object()));
    match is_chi_trivial(&pkg)? {
        Some(extension) => {
            println!("chi: TRIVIAL (a lift up to homotopy exists)");
            let cert = chi_extension_certificate(&pkg, &file.metadata, &extension);
            write_certificate(out, &cert)?;
        }
        None => {
            println!("chi: NONTRIVIAL (no lift up to homotopy exists)");
            let (builder, _) = extension_system(pkg.inclusion(), &pkg.chi);
            let farkas = farkas_row(&builder)?;
            let cert = nonexistence_certificate(
                &problem,
                &file.metadata,
                NonexistenceTarget::ChiExtension,
                Some(&pkg),
                &farkas,
            );
            write_certificate(out, &cert)?;
        }
    }
    Ok(0)
}

pub fn decide(path: &Path, out: Option<&Path>) -> Result<i32, Error> {
    let (file, problem) = load_problem(path)?;
    match solve_help(&problem)? {
        Some(sol) => {
            println!("LIFT EXISTS");
            println!("g: B -> X with components on {} degrees", sol.g.comps().len());
            let cert = help_solution_certificate(&problem, &file.metadata, &sol);
            write_certificate(out, &cert)?;
        }
        None => {
            println!("NO LIFT");
            let (builder, _, _) = help_system(&problem);
            let farkas = farkas_row(&builder)?;
            let cert = nonexistence_certificate(
                &problem,
                &file.metadata,
                NonexistenceTarget::Help,
                None,
                &farkas,
            );
            write_certificate(out, &cert)?;
        }
    }
    Ok(0)
}

pub fn oracle(path: &Path, cap_bits: u32) -> Result<i32, Error> {
    let (_, problem) = load_problem(path)?;
    let census = enumerate_help(&problem, cap_bits)?;
    if census.exists {
        println!("LIFT EXISTS ({} witnesses among 2^{} candidates)", census.count, census.bits);
    } else {
        println!("NO LIFT (0 witnesses among 2^{} candidates)", census.bits);
    }
    Ok(0)
}

pub fn harness(
    seed: u64,
    count: usize,
    width: usize,
    dim: usize,
    field: &str,
    plant: bool,
    quasi_iso: bool,
) -> Result<i32, Error> {
    let field = match field {
        "rational" | "Q" | "q" => Field::Rational,
        p => Field::prime(
            p.parse::<u64>()
                .map_err(|_| Error::invalid(format!("--field must be a prime or \"rational\", got {p:?}")))?,
        )?,
    };
    if width == 0 || dim == 0 {
        return Err(Error::invalid("--width and --dim must be positive"));
    }
    let params = InstanceParams::new(field, width, dim, seed)
        .planted(plant)
        .quasi_iso_alpha(quasi_iso);
    let report = verify_theorem(&params, count);
    println!("{}", report.summary());
    for ce in &report.counterexamples {
        eprintln!("counterexample at instance {} (seed {}): {}", ce.index, ce.seed, ce.reason);
        let file = ProblemFile::from_problem(
            &ce.problem,
            super::files::Metadata { description: Some(ce.reason.clone()), seed: Some(ce.seed) },
        );
        eprintln!("{}", file.to_pretty_json());
    }
    if report.is_clean() {
        println!("0 counterexamples");
        Ok(0)
    } else {
        Ok(2)
    }
}

pub fn verify(problem_path: &Path, certificate_path: &Path) -> Result<i32, Error> {
    let file = ProblemFile::from_json(&read(problem_path)?)?;
    let cert = CertificateFile::from_json(&read(certificate_path)?)?;
    verify_certificate(&file, &cert)?;
    println!("certificate OK");
    Ok(0)
}
