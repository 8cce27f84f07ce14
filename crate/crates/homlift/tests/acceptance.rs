//! The acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. All checks are exact (the arithmetic is exact), and the randomized
//! runs are fully seeded.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homlift::chain::direct_sum;
use homlift::cli::files::{
    chi_extension_certificate, help_solution_certificate, strict_lift_certificate,
    verify_certificate, CertificateFile, Metadata, ProblemFile,
};
use homlift::constructions::{
    cocylinder, cylinder, factor_acof_fib, factor_cof_afib, gap_map, mapping_cylinder_side, End,
};
use homlift::obstruction::{
    build_chi, forward_direction, is_chi_trivial,
    section_strict_lift, SectionOutcome,
};
use homlift::oracle::{
    enumerate_extension, enumerate_help, instance_seed, random_chain_map, random_cofibration,
    random_complex, random_instance, verify_theorem, InstanceParams, TheoremReport,
};
use homlift::solver::{extension_unknowns, solve_help, solve_help_via_cocylinder};
use homlift::{Field, LiftingProblem, Scalar};

fn criterion(n: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {n:2}] {verdict} - {detail}");
    assert!(ok, "criterion {n} failed: {detail}");
}

fn f2() -> Field {
    Field::f2()
}

/// Criteria 1 and 3 share one 500-instance harness run.
fn shared_harness() -> &'static (TheoremReport, Duration) {
    static SHARED: OnceLock<(TheoremReport, Duration)> = OnceLock::new();
    SHARED.get_or_init(|| {
        let params = InstanceParams::new(f2(), 4, 3, 7);
        let start = Instant::now();
        let report = verify_theorem(&params, 500);
        (report, start.elapsed())
    })
}

#[test]
fn criterion_01_theorem_biconditional() {
    let (report, elapsed) = shared_harness();
    let ok = report.instances == 500 && report.is_clean() && *elapsed < Duration::from_secs(60);
    criterion(
        1,
        ok,
        &format!(
            "500 seeded F_2 instances (window <= 4, dims <= 3, i a cofibration): {}; {:.2?} elapsed (limit 60s)",
            report.summary(),
            elapsed
        ),
    );
}

#[test]
fn criterion_02_forward_direction_planted() {
    let mut checked = 0;
    for (field, base_seed, width, dim) in [(f2(), 1001u64, 3, 2), (Field::Rational, 2002, 2, 2)] {
        for idx in 0..50 {
            let params = InstanceParams::new(field, width, dim, instance_seed(base_seed, idx))
                .planted(true);
            let g = random_instance(&params).expect("planted generation succeeds");
            let p = g.problem;
            let witness = solve_help(&p)
                .expect("solver runs")
                .expect("planted instance is solvable");
            let (pkg, ext) = forward_direction(&p, &witness).expect("forward direction");
            // The proof-built extension restricts to chi exactly.
            assert_eq!(
                ext.compose(pkg.inclusion()).unwrap(),
                pkg.chi,
                "field {field:?}, instance {idx}"
            );
            checked += 1;
        }
    }
    criterion(
        2,
        checked == 100,
        &format!("{checked}/100 planted instances (50 F_2, 50 Q) yield trivial chi with the proof-built extension validating exactly"),
    );
}

#[test]
fn criterion_03_constructive_converse() {
    let (report, _) = shared_harness();
    // verify_theorem validates all four HELP equations of every extracted
    // witness exactly; a failure would be a counterexample.
    let ok = report.is_clean()
        && report.chi_trivial == report.witnesses_extracted
        && report.chi_trivial > 100;
    criterion(
        3,
        ok,
        &format!(
            "{} trivial-chi instances, {} extracted witnesses satisfying all four HELP equations exactly",
            report.chi_trivial, report.witnesses_extracted
        ),
    );
}

#[test]
fn criterion_04_oracle_equivalence() {
    let cap: u32 = 20;
    let mut compared = 0;
    let mut attempt = 0usize;
    let mut agree = 0;
    while compared < 50 {
        attempt += 1;
        assert!(attempt < 4000, "could not collect 50 tiny instances");
        let params = InstanceParams::new(f2(), 2, 1, instance_seed(404, attempt))
            .planted(attempt % 3 == 0);
        let Ok(g) = random_instance(&params) else { continue };
        let p = g.problem;
        if p.help_unknowns() > cap as usize {
            continue;
        }
        let pkg = build_chi(&p).expect("chi builds");
        if extension_unknowns(pkg.inclusion(), &pkg.chi) > cap as usize {
            continue;
        }
        let help_census = enumerate_help(&p, cap).expect("under cap");
        let solver_help = solve_help(&p).expect("solver runs");
        let ext_census = enumerate_extension(pkg.inclusion(), &pkg.chi, cap).expect("under cap");
        let solver_ext = is_chi_trivial(&pkg).expect("extension solver runs");
        if help_census.exists == solver_help.is_some() && ext_census.exists == solver_ext.is_some()
        {
            agree += 1;
        }
        compared += 1;
    }
    criterion(
        4,
        agree == 50,
        &format!("{agree}/50 tiny F_2 instances: exhaustive enumeration matches solve_help and the extension solver"),
    );
}

#[test]
fn criterion_05_stable_gap_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut ok = 0;
    for _ in 0..200 {
        let x = random_complex(&mut rng, f2(), 3, 2);
        let y = random_complex(&mut rng, f2(), 3, 2);
        let z = random_complex(&mut rng, f2(), 3, 2);
        let alpha = random_chain_map(&mut rng, &x, &y);
        let beta = random_chain_map(&mut rng, &x, &z);
        let gm = gap_map(&alpha, &beta).expect("gap map builds");
        if gm.gap.is_quasi_iso() {
            ok += 1;
        }
    }
    criterion(
        5,
        ok == 200,
        &format!("{ok}/200 random cospans have a cartesian gap map that is a weak equivalence"),
    );
}

#[test]
fn criterion_06_cocylinder_route() {
    let mut ok = 0;
    for idx in 0..100 {
        let params = InstanceParams::new(f2(), 2, 2, instance_seed(606, idx))
            .quasi_iso_alpha(true);
        let g = random_instance(&params).expect("generation succeeds");
        let p = g.problem;
        let routed = solve_help_via_cocylinder(&p).expect("cocylinder route succeeds");
        routed.validate_for(&p).expect("routed witness validates");
        let direct = solve_help(&p).expect("solver runs");
        if direct.is_some() {
            ok += 1;
        }
    }
    criterion(
        6,
        ok == 100,
        &format!("{ok}/100 planted quasi-iso instances: cocylinder route succeeds, validates, and agrees with the direct solver"),
    );
}

#[test]
fn criterion_07_negative_control() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/s0_into_empty.json"
    ))
    .expect("fixture exists");
    let p = ProblemFile::from_json(&text).unwrap().resolve().unwrap();
    let help = solve_help(&p).unwrap();
    let pkg = build_chi(&p).unwrap();
    let trivial = is_chi_trivial(&pkg).unwrap();
    let help_census = enumerate_help(&p, 24).unwrap();
    let ext_census = enumerate_extension(pkg.inclusion(), &pkg.chi, 24).unwrap();
    let ok = help.is_none() && trivial.is_none() && help_census.count == 0 && ext_census.count == 0;
    criterion(
        7,
        ok,
        &format!(
            "shipped sphere instance: chi NONTRIVIAL (enumeration: {} extensions), no HELP solution (enumeration: {} witnesses)",
            ext_census.count, help_census.count
        ),
    );
}

#[test]
fn criterion_08_section_corollary() {
    let mut ok = 0;
    for idx in 0..50 {
        let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(808, idx));
        let i = random_cofibration(&mut rng, f2(), 3, 2).expect("cofibration samples");
        let x = random_complex(&mut rng, f2(), 3, 2);
        let y = random_complex(&mut rng, f2(), 3, 2);
        let alpha = random_chain_map(&mut rng, &x, &y);
        let theta0 = random_chain_map(&mut rng, i.target(), &x);
        let h = theta0.compose(&i).unwrap();
        let f = alpha.compose(&theta0).unwrap();
        match section_strict_lift(&i, &h, &alpha, &f).expect("section pipeline runs") {
            SectionOutcome::Lift { theta, .. } => {
                assert_eq!(theta.compose(&i).unwrap(), h, "instance {idx}");
                assert_eq!(alpha.compose(&theta).unwrap(), f, "instance {idx}");
                ok += 1;
            }
            SectionOutcome::NontrivialChi => panic!("planted section {idx} reported obstructed"),
            SectionOutcome::TrivialChiNoStrictLift => {
                panic!("planted section {idx} lost its strict lift")
            }
        }
    }
    criterion(
        8,
        ok == 50,
        &format!("{ok}/50 planted strict sections recovered with theta . i = h and alpha . theta = f exactly"),
    );
}

#[test]
fn criterion_09_structural_suite() {
    let mut packages = 0;
    for (field, count, seed) in [(f2(), 150u64, 909u64), (Field::Rational, 50, 910)] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let c = random_complex(&mut rng, field, 3, 2);
            cylinder(&c).validate().expect("cylinder invariants");
            cocylinder(&c).validate().expect("cocylinder invariants");
            let d = random_complex(&mut rng, field, 3, 2);
            let map = random_chain_map(&mut rng, &c, &d);
            // The factorizations re-check composition and predicate classes
            // internally.
            factor_cof_afib(&map).expect("cof/afib factorization invariants");
            factor_acof_fib(&map).expect("acof/fib factorization invariants");
            packages += 1;
        }
    }
    let mut cofibs = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(911);
    for _ in 0..100 {
        let i = random_cofibration(&mut rng, f2(), 3, 2).expect("cofibration samples");
        let n0 = mapping_cylinder_side(&i, End::Zero).unwrap();
        let n1 = mapping_cylinder_side(&i, End::One).unwrap();
        assert!(n0.to_cylinder.is_acyclic_cofibration());
        assert!(n1.to_cylinder.is_acyclic_cofibration());
        cofibs += 1;
    }
    criterion(
        9,
        packages == 200 && cofibs == 100,
        &format!("{packages}/200 cylinder/cocylinder/factorization packages validated; {cofibs}/100 cofibrations have acyclic-cofibration comparison maps on both ends"),
    );
}

#[test]
fn criterion_10_certificate_integrity() {
    // Emit certificates across all kinds and re-verify each.
    let mut emitted: Vec<(ProblemFile, CertificateFile)> = Vec::new();
    for idx in 0..8 {
        let params = InstanceParams::new(f2(), 3, 2, instance_seed(1010, idx))
            .planted(idx % 2 == 0);
        let g = random_instance(&params).expect("generation succeeds");
        let p = g.problem;
        let meta = Metadata { description: None, seed: Some(params.seed) };
        let file = ProblemFile::from_problem(&p, meta.clone());
        if let Some(sol) = solve_help(&p).unwrap() {
            emitted.push((file.clone(), help_solution_certificate(&p, &meta, &sol)));
        }
        let pkg = build_chi(&p).unwrap();
        if let Some(ext) = is_chi_trivial(&pkg).unwrap() {
            emitted.push((file.clone(), chi_extension_certificate(&pkg, &meta, &ext)));
        }
    }
    // A strict-lift certificate from a planted section.
    {
        let mut rng = ChaCha8Rng::seed_from_u64(3030);
        let i = random_cofibration(&mut rng, f2(), 3, 2).unwrap();
        let x = random_complex(&mut rng, f2(), 3, 2);
        let sum = direct_sum(&x, i.target());
        let alpha = sum.proj_second.clone();
        let theta0 = sum.incl_second.compose(&homlift::ChainMap::identity(i.target())).unwrap();
        let h = theta0.compose(&i).unwrap();
        let f = alpha.compose(&theta0).unwrap();
        if let SectionOutcome::Lift { theta, .. } = section_strict_lift(&i, &h, &alpha, &f).unwrap()
        {
            let p = LiftingProblem::from_strict_square(
                i.clone(),
                alpha.clone(),
                f.clone(),
                h.clone(),
            )
            .unwrap();
            let meta = Metadata { description: Some("strict section".into()), seed: None };
            let file = ProblemFile::from_problem(&p, meta.clone());
            emitted.push((file, strict_lift_certificate(&p, &meta, &theta)));
        }
    }
    assert!(emitted.len() >= 10, "expected a spread of certificates, got {}", emitted.len());
    for (file, cert) in &emitted {
        verify_certificate(file, cert).expect("emitted certificate re-verifies");
    }

    // 100 seeded single-entry mutations, drawn from coordinates that the
    // defining equations pin exactly (the end blocks of maps out of Cyl(B),
    // and entries of theta), must all be rejected.
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(4040);
    let mut rejected = 0;
    let mut applied = 0;
    let mut round = 0;
    while applied < 100 {
        round += 1;
        assert!(round < 10_000, "mutation budget exhausted");
        let (file, cert) = &emitted[rng.gen_range(0..emitted.len())];
        let mut value = serde_json::to_value(cert).unwrap();
        let Some(target) = mutation_target(&mut rng, file, &mut value) else { continue };
        let mutated: CertificateFile = serde_json::from_value(value).unwrap();
        applied += 1;
        if verify_certificate(file, &mutated).is_err() {
            rejected += 1;
        } else {
            println!("mutation accepted: {target}");
        }
    }
    criterion(
        10,
        rejected == 100,
        &format!(
            "{}/{} emitted certificates re-verify; {rejected}/100 single-entry mutations rejected",
            emitted.len(),
            emitted.len()
        ),
    );
}

/// Toggles one pinned witness entry inside the certificate JSON; returns a
/// description, or `None` when the chosen certificate has no pinned entries.
fn mutation_target(
    rng: &mut ChaCha8Rng,
    file: &ProblemFile,
    value: &mut serde_json::Value,
) -> Option<String> {
    use rand::Rng;
    let p = file.resolve().ok()?;
    // End-block columns of a matrix with source Cyl(B): the first
    // 2 * dim B_n columns are read off exactly by the two end inclusions.
    let field_names: &[(&str, bool)] = match value.get("kind")?.as_str()? {
        "help_solution" => &[("k", true)],
        "chi_extension" => &[("extension", true)],
        "strict_lift" => &[("theta", false)],
        _ => return None,
    };
    let (name, cyl_source) = field_names[rng.gen_range(0..field_names.len())];
    let comps = value.get_mut(name)?.get_mut("components")?.as_object_mut()?;
    let keys: Vec<String> = comps.keys().cloned().collect();
    if keys.is_empty() {
        return None;
    }
    for _ in 0..32 {
        let key = &keys[rng.gen_range(0..keys.len())];
        let degree: i64 = key.parse().ok()?;
        let rows = comps.get(key)?.as_array()?.len();
        if rows == 0 {
            continue;
        }
        let cols = comps.get(key)?.as_array()?[0].as_array()?.len();
        if cols == 0 {
            continue;
        }
        let pinned_cols = if cyl_source {
            // theta has no cylinder source; for K and the extension, only
            // the two end blocks are pinned for every instance.
            2 * p.b().dim(degree)
        } else {
            cols
        };
        if pinned_cols == 0 {
            continue;
        }
        let r = rng.gen_range(0..rows);
        let c = rng.gen_range(0..pinned_cols.min(cols));
        let entry = &mut comps.get_mut(key)?.as_array_mut()?[r].as_array_mut()?[c];
        let old = entry.as_u64()?;
        *entry = serde_json::Value::from((old + 1) % 2);
        return Some(format!("{name}.components.{key}[{r}][{c}]"));
    }
    None
}

#[test]
fn round_trip_is_canonical() {
    // Supporting check for the file format: parse -> serialize is idempotent.
    for fixture in ["identity.json", "s0_into_empty.json", "planted.json"] {
        let path = format!("{}/fixtures/{fixture}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = ProblemFile::from_json(&text).unwrap();
        let p = parsed.resolve().unwrap();
        let canon = ProblemFile::from_problem(&p, parsed.metadata.clone()).to_canonical_json();
        let reparsed = ProblemFile::from_json(&canon).unwrap();
        let p2 = reparsed.resolve().unwrap();
        let canon2 = ProblemFile::from_problem(&p2, reparsed.metadata.clone()).to_canonical_json();
        assert_eq!(canon, canon2, "{fixture}");
        assert_eq!(p, p2, "{fixture}");
    }
    // Rational entries survive the trip too.
    let dq = homlift::ChainComplex::disk(Field::Rational, 1);
    let mut comps = std::collections::BTreeMap::new();
    comps.insert(1, homlift::Matrix::from_fn(Field::Rational, 1, 1, |_, _| Scalar::rational(2, 3)));
    comps.insert(0, homlift::Matrix::from_fn(Field::Rational, 1, 1, |_, _| Scalar::rational(2, 3)));
    let alpha = homlift::ChainMap::new(dq.clone(), dq.clone(), comps).unwrap();
    let p = LiftingProblem::from_strict_square(
        homlift::ChainMap::identity(&dq),
        alpha.clone(),
        alpha.clone(),
        homlift::ChainMap::identity(&dq),
    )
    .unwrap();
    let file = ProblemFile::from_problem(&p, Metadata::default());
    let text = file.to_canonical_json();
    let p2 = ProblemFile::from_json(&text).unwrap().resolve().unwrap();
    assert_eq!(p, p2);
}
