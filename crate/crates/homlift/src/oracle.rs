//! Independent ground truth and randomized verification: exhaustive
//! enumeration of HELP witnesses and extensions on tiny `F_2` instances, a
//! seeded instance generator (with optional planted lifts, forced
//! cofibrations, and planted quasi-isomorphisms), and the harness that checks
//! the trivial-iff-liftable biconditional instance by instance.
//!
//! The enumeration deliberately shares nothing with the solver's elimination:
//! it fills candidate matrices bit by bit and re-checks the defining
//! equations by multiplication.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{direct_sum, ChainComplex, ChainMap};
use crate::constructions::{cylinder, cylinder_map, gap_map};
use crate::error::Error;
use crate::exactlin::{Field, Matrix, Scalar};
use crate::obstruction::{
    build_chi, extract_lift_from_trivial_chi, forward_direction, is_chi_trivial,
};
use crate::solver::{
    solve_help, solve_help_via_cocylinder, HelpSolution, LiftingProblem, Selection,
    SystemBuilder, Term,
};

/// Shape and flag bounds for the instance generator. The seed fully
/// determines the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceParams {
    pub field: Field,
    /// Degrees are drawn from `0..max_width`.
    pub max_width: usize,
    /// Dimensions per degree are drawn from `0..=max_dim`.
    pub max_dim: usize,
    pub plant_lift: bool,
    pub force_cofibration_i: bool,
    pub force_quasi_iso_alpha: bool,
    pub seed: u64,
}

impl InstanceParams {
    pub fn new(field: Field, max_width: usize, max_dim: usize, seed: u64) -> InstanceParams {
        assert!(max_width > 0 && max_dim > 0, "bounds must be positive");
        InstanceParams {
            field,
            max_width,
            max_dim,
            plant_lift: false,
            force_cofibration_i: true,
            force_quasi_iso_alpha: false,
            seed,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> InstanceParams {
        self.seed = seed;
        self
    }

    pub fn planted(mut self, plant: bool) -> InstanceParams {
        self.plant_lift = plant;
        self
    }

    pub fn quasi_iso_alpha(mut self, force: bool) -> InstanceParams {
        self.force_quasi_iso_alpha = force;
        self
    }
}

/// A generated problem, with the planted witness when one was built in.
pub struct GeneratedInstance {
    pub problem: LiftingProblem,
    pub planted: Option<HelpSolution>,
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    match field {
        Field::Prime(p) => Scalar::Prime(rng.gen_range(0..p)),
        Field::Rational => field.from_i64(rng.gen_range(-2i64..=2)),
    }
}

/// A random valid complex: random dimensions on `0..width`, differentials
/// drawn column by column inside the kernel of the previous one.
pub fn random_complex(rng: &mut ChaCha8Rng, field: Field, max_width: usize, max_dim: usize) -> ChainComplex {
    let width = rng.gen_range(1..=max_width);
    let dims: BTreeMap<i64, usize> =
        (0..width as i64).map(|n| (n, rng.gen_range(0..=max_dim))).collect();
    random_complex_with_dims(rng, field, &dims)
}

fn random_complex_with_dims(
    rng: &mut ChaCha8Rng,
    field: Field,
    dims: &BTreeMap<i64, usize>,
) -> ChainComplex {
    let dims: BTreeMap<i64, usize> = dims.iter().filter(|(_, d)| **d > 0).map(|(n, d)| (*n, *d)).collect();
    let mut diffs = BTreeMap::new();
    let mut prev_d: Option<Matrix> = None;
    let lo = dims.keys().next().copied().unwrap_or(0);
    let hi = dims.keys().next_back().copied().unwrap_or(-1);
    for n in lo..=hi {
        let rows = dims.get(&(n - 1)).copied().unwrap_or(0);
        let cols = dims.get(&n).copied().unwrap_or(0);
        let d = if rows == 0 || cols == 0 {
            Matrix::zeros(field, rows, cols)
        } else {
            // Columns must be cycles of the previous differential.
            let kernel = match &prev_d {
                Some(p) => crate::exactlin::kernel_basis(p),
                None => Matrix::identity(field, rows),
            };
            let coeffs =
                Matrix::from_fn(field, kernel.cols(), cols, |_, _| random_scalar(rng, field));
            kernel.mul(&coeffs)
        };
        if !d.is_zero() {
            diffs.insert(n, d.clone());
        }
        prev_d = Some(d);
    }
    ChainComplex::new(field, dims, diffs).expect("generated differentials square to zero")
}

/// A uniformly seeded point of the vector space of chain maps `src -> tgt`.
pub fn random_chain_map(rng: &mut ChaCha8Rng, src: &ChainComplex, tgt: &ChainComplex) -> ChainMap {
    let mut sys = SystemBuilder::new(src.field());
    let v = sys.unknown_map(src, tgt);
    match sys.solve(Selection::Seeded(rng.gen()), false) {
        crate::solver::SolveOutcome::Solved(asg) => {
            asg.chain_map(v, src, tgt).expect("chain-map space point")
        }
        crate::solver::SolveOutcome::Infeasible { .. } => unreachable!("homogeneous system"),
    }
}

/// Rejection-samples a cofibration `i : A -> B`, redrawing the complexes on
/// each attempt. `A` is the zero complex a quarter of the time.
pub fn random_cofibration(
    rng: &mut ChaCha8Rng,
    field: Field,
    max_width: usize,
    max_dim: usize,
) -> Result<ChainMap, Error> {
    for _ in 0..64 {
        let a = if rng.gen_ratio(1, 4) {
            ChainComplex::zero(field)
        } else {
            random_complex(rng, field, max_width, max_dim)
        };
        // B dominates A degreewise so injections exist.
        let width = rng.gen_range(1..=max_width) as i64;
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        for n in 0..width {
            dims.insert(n, rng.gen_range(0..=max_dim));
        }
        for (n, d) in a.dims() {
            let e = dims.entry(*n).or_insert(0);
            *e = (*e).max(*d);
        }
        let b = random_complex_with_dims(rng, field, &dims);
        if a.is_zero_complex() {
            return Ok(ChainMap::zero(a, b));
        }
        let i = random_chain_map(rng, &a, &b);
        if i.is_cofibration() {
            return Ok(i);
        }
    }
    Err(Error::invalid(
        "random_instance: failed to sample a cofibration in 64 attempts; loosen the bounds",
    ))
}

/// Mapping cone of the identity: a contractible complex with the same
/// flavor of random differentials.
fn contractible(rng: &mut ChaCha8Rng, field: Field, max_width: usize, max_dim: usize) -> ChainComplex {
    let v = random_complex(rng, field, max_width, max_dim);
    let (lo, hi) = match v.window() {
        Some(w) => w,
        None => return ChainComplex::zero(field),
    };
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for n in lo..=hi + 1 {
        let d = v.dim(n) + v.dim(n - 1);
        if d > 0 {
            dims.insert(n, d);
        }
    }
    for n in lo..=hi + 1 {
        let rows = v.dim(n - 1) + v.dim(n - 2);
        let cols = v.dim(n) + v.dim(n - 1);
        if rows == 0 || cols == 0 {
            continue;
        }
        let dn = v.d(n);
        let id = Matrix::identity(field, v.dim(n - 1));
        let z = Matrix::zeros(field, v.dim(n - 2), v.dim(n));
        let dneg = v.d(n - 1).neg();
        let block = Matrix::from_blocks(field, &[vec![&dn, &id], vec![&z, &dneg]]);
        if !block.is_zero() {
            diffs.insert(n, block);
        }
    }
    ChainComplex::new(field, dims, diffs).expect("cone of the identity is a complex")
}

/// A planted quasi-isomorphism `X -> Y`: identity on a shared core, junk
/// summands are contractible, with random off-diagonal blocks and a shear to
/// hide the splitting. Generally neither injective nor surjective.
fn random_quasi_iso(
    rng: &mut ChaCha8Rng,
    field: Field,
    max_width: usize,
    max_dim: usize,
) -> Result<ChainMap, Error> {
    let core = random_complex(rng, field, max_width, max_dim);
    let small_dim = max_dim.min(2).max(1);
    let d1 = contractible(rng, field, max_width, small_dim);
    let d2 = contractible(rng, field, max_width, small_dim);
    let xsum = direct_sum(&core, &d1);
    let ysum = direct_sum(&core, &d2);
    let u = random_chain_map(rng, &d1, &core);
    let v = random_chain_map(rng, &d1, &d2);
    let w = random_chain_map(rng, &core, &d2);
    // [[id, u], [0, v]] followed by the shear [[id, 0], [w, id]].
    let from_core = ysum.incl_first.clone();
    let from_d1 = ysum.incl_first.compose(&u)?.add(&ysum.incl_second.compose(&v)?)?;
    let base = crate::chain::coproduct_map(&xsum, &from_core, &from_d1)?;
    let shear = ChainMap::identity(&ysum.object)
        .add(&ysum.incl_second.compose(&w)?.compose(&ysum.proj_first)?)?;
    let alpha = shear.compose(&base)?;
    if !alpha.is_quasi_iso() {
        return Err(Error::internal("planted quasi-isomorphism fails its predicate"));
    }
    Ok(alpha)
}

/// Generates a valid lifting problem. The solid arrows always commute by
/// construction: either a witness is planted, or `(h, H)` (and in the last
/// resort `f`) are drawn from the solution space of the compatibility
/// system.
pub fn random_instance(params: &InstanceParams) -> Result<GeneratedInstance, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let field = params.field;
    let i = if params.force_cofibration_i {
        random_cofibration(&mut rng, field, params.max_width, params.max_dim)?
    } else {
        let a = random_complex(&mut rng, field, params.max_width, params.max_dim);
        let b = random_complex(&mut rng, field, params.max_width, params.max_dim);
        random_chain_map(&mut rng, &a, &b)
    };
    let alpha = if params.force_quasi_iso_alpha {
        random_quasi_iso(&mut rng, field, params.max_width, params.max_dim)?
    } else {
        let x = random_complex(&mut rng, field, params.max_width, params.max_dim);
        let y = random_complex(&mut rng, field, params.max_width, params.max_dim);
        random_chain_map(&mut rng, &x, &y)
    };
    let a = i.source().clone();
    let b = i.target().clone();
    let x = alpha.source().clone();
    let y = alpha.target().clone();
    let cyl_a = cylinder(&a);
    let cyl_b = cylinder(&b);
    let cyl_i = cylinder_map(&i);

    if params.plant_lift {
        // Draw g freely and a homotopy K ending at alpha . g; read the rest
        // of the solid data off (K, g).
        let g = random_chain_map(&mut rng, &b, &x);
        let ag = alpha.compose(&g)?;
        let mut sys = SystemBuilder::new(field);
        let kv = sys.unknown_map(&cyl_b.object, &y);
        for n in degree_range(&cyl_b.object, &y) {
            let i1 = cyl_b.i1.comp(n);
            sys.equation(
                y.dim(n),
                b.dim(n),
                &[Term::new(kv, n).right(&i1)],
                Some(&ag.comp(n)),
            );
        }
        let k = match sys.solve(Selection::Seeded(rng.gen()), false) {
            crate::solver::SolveOutcome::Solved(asg) => asg.chain_map(kv, &cyl_b.object, &y)?,
            crate::solver::SolveOutcome::Infeasible { .. } => {
                return Err(Error::internal("planted homotopy system is always consistent"))
            }
        };
        let f = k.compose(&cyl_b.i0)?;
        let homotopy = k.compose(&cyl_i)?;
        let h = g.compose(&i)?;
        let problem = LiftingProblem::new(i, alpha, f, h, homotopy)?;
        let planted = HelpSolution { k, g };
        planted
            .validate_for(&problem)
            .map_err(|e| Error::internal(format!("planted witness invalid: {e}")))?;
        return Ok(GeneratedInstance { problem, planted: Some(planted) });
    }

    let f = random_chain_map(&mut rng, &b, &y);
    // Try to complete (h, H) for this f.
    let attempt = |h_fixed_zero: bool, rng: &mut ChaCha8Rng| -> Option<(ChainMap, ChainMap)> {
        let mut sys = SystemBuilder::new(field);
        let hv = if h_fixed_zero { None } else { Some(sys.unknown_map(&a, &x)) };
        let sv = sys.unknown_map(&cyl_a.object, &y);
        let fi = f.compose(&i).ok()?;
        for n in degree_range(&cyl_a.object, &y) {
            let i0 = cyl_a.i0.comp(n);
            sys.equation(y.dim(n), a.dim(n), &[Term::new(sv, n).right(&i0)], Some(&fi.comp(n)));
            let i1 = cyl_a.i1.comp(n);
            match hv {
                Some(h) => {
                    let al = alpha.comp(n);
                    sys.equation(
                        y.dim(n),
                        a.dim(n),
                        &[Term::new(sv, n).right(&i1), Term::new(h, n).left(&al).negated()],
                        None,
                    );
                }
                None => {
                    sys.equation(y.dim(n), a.dim(n), &[Term::new(sv, n).right(&i1)], None);
                }
            }
        }
        match sys.solve(Selection::Seeded(rng.gen()), false) {
            crate::solver::SolveOutcome::Solved(asg) => {
                let h = match hv {
                    Some(h) => asg.chain_map(h, &a, &x).ok()?,
                    None => ChainMap::zero(a.clone(), x.clone()),
                };
                let hom = asg.chain_map(sv, &cyl_a.object, &y).ok()?;
                Some((h, hom))
            }
            crate::solver::SolveOutcome::Infeasible { .. } => None,
        }
    };
    if let Some((h, homotopy)) = attempt(false, &mut rng).or_else(|| attempt(true, &mut rng)) {
        let problem = LiftingProblem::new(i, alpha, f, h, homotopy)?;
        return Ok(GeneratedInstance { problem, planted: None });
    }
    // Last resort: redraw f inside { f : f . i = 0 }, where h = H = 0 works.
    let mut sys = SystemBuilder::new(field);
    let fv = sys.unknown_map(&b, &y);
    for n in degree_range(&b, &y) {
        let ic = i.comp(n);
        sys.equation(y.dim(n), a.dim(n), &[Term::new(fv, n).right(&ic)], None);
    }
    let f = match sys.solve(Selection::Seeded(rng.gen()), false) {
        crate::solver::SolveOutcome::Solved(asg) => asg.chain_map(fv, &b, &y)?,
        crate::solver::SolveOutcome::Infeasible { .. } => {
            return Err(Error::internal("homogeneous fallback is always consistent"))
        }
    };
    let h = ChainMap::zero(a.clone(), x.clone());
    let homotopy = ChainMap::zero(cyl_a.object.clone(), y.clone());
    let problem = LiftingProblem::new(i, alpha, f, h, homotopy)?;
    Ok(GeneratedInstance { problem, planted: None })
}

fn degree_range(a: &ChainComplex, b: &ChainComplex) -> std::ops::RangeInclusive<i64> {
    match crate::chain::joint_window(a, b) {
        Some((lo, hi)) => lo - 1..=hi + 1,
        None => 0..=-1,
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration over F_2.
// ---------------------------------------------------------------------------

/// The verdict and census of an exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub exists: bool,
    pub count: u64,
    /// Total number of unknown bits that were enumerated.
    pub bits: u32,
}

/// Degreewise shapes of one unknown map, with a flat bit layout.
struct CandidateLayout {
    shapes: Vec<(i64, usize, usize)>,
    bits: u32,
}

impl CandidateLayout {
    fn for_map(src: &ChainComplex, tgt: &ChainComplex) -> CandidateLayout {
        let mut shapes = Vec::new();
        let mut bits = 0u32;
        for (n, &cols) in src.dims() {
            let rows = tgt.dim(*n);
            if rows > 0 && cols > 0 {
                shapes.push((*n, rows, cols));
                bits += (rows * cols) as u32;
            }
        }
        CandidateLayout { shapes, bits }
    }

    fn fill(&self, field: Field, counter: u64) -> BTreeMap<i64, Matrix> {
        let mut out = BTreeMap::new();
        let mut bit = 0;
        for (n, rows, cols) in &self.shapes {
            let mut m = Matrix::zeros(field, *rows, *cols);
            for r in 0..*rows {
                for c in 0..*cols {
                    if counter >> bit & 1 == 1 {
                        m.set(r, c, field.one());
                    }
                    bit += 1;
                }
            }
            out.insert(*n, m);
        }
        out
    }
}

fn comp_of(comps: &BTreeMap<i64, Matrix>, field: Field, src: &ChainComplex, tgt: &ChainComplex, n: i64) -> Matrix {
    comps
        .get(&n)
        .cloned()
        .unwrap_or_else(|| Matrix::zeros(field, tgt.dim(n), src.dim(n)))
}

/// `candidate` is a chain map `src -> tgt`.
fn is_chain_map(comps: &BTreeMap<i64, Matrix>, src: &ChainComplex, tgt: &ChainComplex) -> bool {
    let field = src.field();
    for n in degree_range(src, tgt) {
        let lhs = tgt.d(n).mul(&comp_of(comps, field, src, tgt, n));
        let rhs = comp_of(comps, field, src, tgt, n - 1).mul(&src.d(n));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `candidate . inner == expected`, where `inner : W -> src`.
fn composes_to(
    comps: &BTreeMap<i64, Matrix>,
    src: &ChainComplex,
    tgt: &ChainComplex,
    inner: &ChainMap,
    expected: &ChainMap,
) -> bool {
    let field = src.field();
    for n in degree_range(inner.source(), tgt) {
        let lhs = comp_of(comps, field, src, tgt, n).mul(&inner.comp(n));
        if lhs != expected.comp(n) {
            return false;
        }
    }
    true
}

/// Exhaustively enumerates all candidate `(K, g)` fillings over `F_2` and
/// counts the solutions of the HELP problem.
pub fn enumerate_help(p: &LiftingProblem, cap_bits: u32) -> Result<Census, Error> {
    if p.field() != Field::Prime(2) {
        return Err(Error::invalid("enumeration requires F_2"));
    }
    let field = p.field();
    let cyl_b = p.cyl_b();
    let cyl_i = cylinder_map(&p.i);
    let k_layout = CandidateLayout::for_map(&cyl_b.object, p.y());
    let g_layout = CandidateLayout::for_map(p.b(), p.x());
    let bits = k_layout.bits + g_layout.bits;
    if bits > cap_bits {
        return Err(Error::CapExceeded(format!(
            "{bits} unknown bits exceed the cap of {cap_bits}"
        )));
    }
    let alpha_g_target = p.y();
    let mut count = 0u64;
    for g_counter in 0u64..1 << g_layout.bits {
        let g = g_layout.fill(field, g_counter);
        if !is_chain_map(&g, p.b(), p.x()) {
            continue;
        }
        if !composes_to(&g, p.b(), p.x(), &p.i, &p.h) {
            continue;
        }
        // alpha . g, assembled once per g candidate.
        let mut ag = BTreeMap::new();
        for n in degree_range(p.b(), alpha_g_target) {
            ag.insert(n, p.alpha.comp(n).mul(&comp_of(&g, field, p.b(), p.x(), n)));
        }
        for k_counter in 0u64..1 << k_layout.bits {
            let k = k_layout.fill(field, k_counter);
            if !is_chain_map(&k, &cyl_b.object, p.y()) {
                continue;
            }
            if !composes_to(&k, &cyl_b.object, p.y(), &cyl_b.i0, &p.f) {
                continue;
            }
            if !composes_to(&k, &cyl_b.object, p.y(), &cyl_i, &p.homotopy) {
                continue;
            }
            // K . i_1 = alpha . g.
            let ok = degree_range(p.b(), p.y()).all(|n| {
                comp_of(&k, field, &cyl_b.object, p.y(), n).mul(&cyl_b.i1.comp(n)) == ag[&n]
            });
            if ok {
                count += 1;
            }
        }
    }
    Ok(Census { exists: count > 0, count, bits })
}

/// Exhaustively enumerates all candidate extensions of `target_map` along
/// `inclusion` over `F_2`.
pub fn enumerate_extension(
    inclusion: &ChainMap,
    target_map: &ChainMap,
    cap_bits: u32,
) -> Result<Census, Error> {
    if inclusion.field() != Field::Prime(2) {
        return Err(Error::invalid("enumeration requires F_2"));
    }
    let field = inclusion.field();
    let src = inclusion.target();
    let tgt = target_map.target();
    let layout = CandidateLayout::for_map(src, tgt);
    if layout.bits > cap_bits {
        return Err(Error::CapExceeded(format!(
            "{} unknown bits exceed the cap of {cap_bits}",
            layout.bits
        )));
    }
    let mut count = 0u64;
    for counter in 0u64..1 << layout.bits {
        let e = layout.fill(field, counter);
        if !is_chain_map(&e, src, tgt) {
            continue;
        }
        if composes_to(&e, src, tgt, inclusion, target_map) {
            count += 1;
        }
    }
    Ok(Census { exists: count > 0, count, bits: layout.bits })
}

// ---------------------------------------------------------------------------
// The theorem harness.
// ---------------------------------------------------------------------------

/// One instance on which the pipeline contradicted itself, kept replayable.
pub struct Counterexample {
    pub index: usize,
    pub seed: u64,
    pub reason: String,
    pub problem: LiftingProblem,
}

/// Aggregated results of a harness run.
pub struct TheoremReport {
    pub instances: usize,
    pub planted: usize,
    pub help_solvable: usize,
    pub chi_trivial: usize,
    pub witnesses_extracted: usize,
    pub gap_maps_checked: usize,
    pub cocylinder_route_ok: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} instances ({} planted): {} HELP-solvable, {} chi-trivial, {} witnesses extracted, {} gap maps checked, {} cocylinder routes; {} counterexamples",
            self.instances,
            self.planted,
            self.help_solvable,
            self.chi_trivial,
            self.witnesses_extracted,
            self.gap_maps_checked,
            self.cocylinder_route_ok,
            self.counterexamples.len()
        )
    }
}

pub fn instance_seed(base: u64, index: usize) -> u64 {
    base ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs the biconditional check on `count` seeded instances: chi is trivial
/// exactly when the HELP problem is solvable, the forward extension
/// validates, every trivial instance yields an extracted witness satisfying
/// all four equations, and the gap map of `(alpha, alpha)` is a weak
/// equivalence. Every fourth instance plants a lift so both directions stay
/// exercised.
pub fn verify_theorem(params: &InstanceParams, count: usize) -> TheoremReport {
    let mut report = TheoremReport {
        instances: 0,
        planted: 0,
        help_solvable: 0,
        chi_trivial: 0,
        witnesses_extracted: 0,
        gap_maps_checked: 0,
        cocylinder_route_ok: 0,
        counterexamples: Vec::new(),
    };
    for index in 0..count {
        let seed = instance_seed(params.seed, index);
        let mut inst_params = params.with_seed(seed);
        if params.plant_lift || index % 4 == 0 {
            inst_params.plant_lift = true;
        }
        let generated = match random_instance(&inst_params) {
            Ok(g) => g,
            Err(e) => {
                // Generation failures are reported against a degenerate
                // problem so the run never silently shrinks.
                let zero = ChainComplex::zero(params.field);
                let p = LiftingProblem::new(
                    ChainMap::zero(zero.clone(), zero.clone()),
                    ChainMap::zero(zero.clone(), zero.clone()),
                    ChainMap::zero(zero.clone(), zero.clone()),
                    ChainMap::zero(zero.clone(), zero.clone()),
                    ChainMap::zero(cylinder(&zero).object, zero.clone()),
                )
                .expect("zero problem");
                report.counterexamples.push(Counterexample {
                    index,
                    seed,
                    reason: format!("instance generation failed: {e}"),
                    problem: p,
                });
                continue;
            }
        };
        report.instances += 1;
        if inst_params.plant_lift {
            report.planted += 1;
        }
        let p = generated.problem;
        let fail = |report: &mut TheoremReport, reason: String| {
            report.counterexamples.push(Counterexample {
                index,
                seed,
                reason,
                problem: p.clone(),
            });
        };
        let outcome = check_instance(&p, &generated.planted, &inst_params);
        match outcome {
            Ok(stats) => {
                report.help_solvable += stats.help as usize;
                report.chi_trivial += stats.trivial as usize;
                report.witnesses_extracted += stats.extracted as usize;
                report.gap_maps_checked += 1;
                report.cocylinder_route_ok += stats.cocylinder as usize;
            }
            Err(reason) => fail(&mut report, reason),
        }
    }
    report
}

struct InstanceStats {
    help: bool,
    trivial: bool,
    extracted: bool,
    cocylinder: bool,
}

fn check_instance(
    p: &LiftingProblem,
    planted: &Option<HelpSolution>,
    params: &InstanceParams,
) -> Result<InstanceStats, String> {
    let help = solve_help(p).map_err(|e| format!("solve_help errored: {e}"))?;
    if planted.is_some() && help.is_none() {
        return Err("planted instance reported unsolvable".into());
    }
    let pkg = build_chi(p).map_err(|e| format!("build_chi errored: {e}"))?;
    let ext = is_chi_trivial(&pkg).map_err(|e| format!("is_chi_trivial errored: {e}"))?;
    if help.is_some() != ext.is_some() {
        return Err(format!(
            "biconditional violated: HELP solvable = {}, chi trivial = {}",
            help.is_some(),
            ext.is_some()
        ));
    }
    if let Some(w) = &help {
        let (fpkg, fext) =
            forward_direction(p, w).map_err(|e| format!("forward_direction failed: {e}"))?;
        if fext.compose(fpkg.inclusion()).map_err(|e| e.to_string())? != fpkg.chi {
            return Err("forward extension does not restrict to chi".into());
        }
    }
    let mut extracted = false;
    if let Some(e) = &ext {
        let w = extract_lift_from_trivial_chi(&pkg, e)
            .map_err(|e| format!("extraction failed: {e}"))?;
        w.validate_for(p).map_err(|e| format!("extracted witness invalid: {e}"))?;
        extracted = true;
    }
    let gm = gap_map(&p.alpha, &p.alpha).map_err(|e| format!("gap_map errored: {e}"))?;
    if !gm.gap.is_quasi_iso() {
        return Err("cartesian gap map is not a weak equivalence".into());
    }
    let mut cocylinder = false;
    if params.force_quasi_iso_alpha {
        let w = solve_help_via_cocylinder(p)
            .map_err(|e| format!("cocylinder route failed: {e}"))?;
        w.validate_for(p).map_err(|e| format!("cocylinder witness invalid: {e}"))?;
        if help.is_none() {
            return Err("cocylinder route succeeded but the direct solver disagreed".into());
        }
        cocylinder = true;
    }
    Ok(InstanceStats { help: help.is_some(), trivial: ext.is_some(), extracted, cocylinder })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::f2()
    }

    fn tiny(seed: u64) -> InstanceParams {
        InstanceParams::new(f2(), 2, 1, seed)
    }

    #[test]
    fn generation_is_deterministic() {
        let params = InstanceParams::new(f2(), 4, 3, 11);
        let a = random_instance(&params).unwrap();
        let b = random_instance(&params).unwrap();
        assert_eq!(a.problem, b.problem);
    }

    #[test]
    fn generated_instances_are_valid() {
        // Constructor re-validation is the invariant suite here; planted
        // witnesses must also re-check.
        for idx in 0..200 {
            let params = InstanceParams::new(f2(), 4, 3, instance_seed(3, idx))
                .planted(idx % 3 == 0);
            let g = random_instance(&params).unwrap();
            g.problem.i.validate().unwrap();
            g.problem.homotopy.validate().unwrap();
            if let Some(w) = g.planted {
                w.validate_for(&g.problem).unwrap();
            }
        }
    }

    #[test]
    fn planted_instances_solve() {
        for idx in 0..20 {
            let params = tiny(instance_seed(7, idx)).planted(true);
            let g = random_instance(&params).unwrap();
            assert!(solve_help(&g.problem).unwrap().is_some());
        }
    }

    #[test]
    fn enumeration_agrees_on_identity_instance() {
        // alpha = id on S^0 with i : 0 -> S^0.
        let zero = ChainComplex::zero(f2());
        let b = ChainComplex::sphere(f2(), 0);
        let p = LiftingProblem::new(
            ChainMap::zero(zero.clone(), b.clone()),
            ChainMap::identity(&b),
            ChainMap::identity(&b),
            ChainMap::zero(zero.clone(), b.clone()),
            ChainMap::zero(cylinder(&zero).object, b.clone()),
        )
        .unwrap();
        let census = enumerate_help(&p, 24).unwrap();
        assert!(census.exists && census.count >= 1);
        assert!(solve_help(&p).unwrap().is_some());
    }

    #[test]
    fn enumeration_finds_no_witness_for_the_sphere() {
        let zero = ChainComplex::zero(f2());
        let b = ChainComplex::sphere(f2(), 0);
        let p = LiftingProblem::new(
            ChainMap::zero(zero.clone(), b.clone()),
            ChainMap::zero(zero.clone(), b.clone()),
            ChainMap::identity(&b),
            ChainMap::zero(zero.clone(), zero.clone()),
            ChainMap::zero(cylinder(&zero).object, b.clone()),
        )
        .unwrap();
        let census = enumerate_help(&p, 24).unwrap();
        assert_eq!(census.count, 0);
        // The extension oracle agrees with the obstruction verdict.
        let pkg = build_chi(&p).unwrap();
        let ext_census = enumerate_extension(pkg.inclusion(), &pkg.chi, 24).unwrap();
        assert_eq!(ext_census.count, 0);
        assert!(is_chi_trivial(&pkg).unwrap().is_none());
    }

    #[test]
    fn census_is_reproducible_and_caps_apply() {
        let params = tiny(99);
        let g = random_instance(&params).unwrap();
        if g.problem.help_unknowns() <= 20 {
            let a = enumerate_help(&g.problem, 20).unwrap();
            let b = enumerate_help(&g.problem, 20).unwrap();
            assert_eq!(a, b);
        }
        assert!(matches!(
            enumerate_help(&g.problem, 0),
            Err(Error::CapExceeded(_)) | Ok(Census { bits: 0, .. })
        ));
    }

    #[test]
    fn enumeration_matches_solver_on_tiny_instances() {
        let mut compared = 0;
        let mut attempt = 0u64;
        while compared < 10 && attempt < 200 {
            attempt += 1;
            let params = tiny(instance_seed(13, attempt as usize));
            let g = match random_instance(&params) {
                Ok(g) => g,
                Err(_) => continue,
            };
            if g.problem.help_unknowns() > 14 {
                continue;
            }
            let census = enumerate_help(&g.problem, 14).unwrap();
            let solved = solve_help(&g.problem).unwrap();
            assert_eq!(census.exists, solved.is_some(), "seed {}", params.seed);
            compared += 1;
        }
        assert!(compared >= 5, "not enough tiny instances compared");
    }

    #[test]
    fn harness_small_run_is_clean() {
        let params = InstanceParams::new(f2(), 3, 2, 5);
        let report = verify_theorem(&params, 24);
        assert_eq!(report.instances, 24);
        assert!(report.is_clean(), "{}", report.summary());
        assert!(report.planted >= 6);
        assert!(report.help_solvable >= report.planted);
    }

    #[test]
    fn harness_quasi_iso_run_is_clean() {
        let params = InstanceParams::new(f2(), 2, 2, 21).quasi_iso_alpha(true);
        let report = verify_theorem(&params, 8);
        assert!(report.is_clean(), "{}", report.summary());
        assert_eq!(report.cocylinder_route_ok, report.instances);
        // A quasi-iso alpha makes every instance liftable.
        assert_eq!(report.help_solvable, report.instances);
    }
}
