//! Bounded chain complexes of finite-dimensional vector spaces, chain maps,
//! and algebraic homotopies, together with the predicates of the concrete
//! model structure: weak equivalences are quasi-isomorphisms, fibrations are
//! degreewise surjections, cofibrations are degreewise injections. Homological
//! indexing, differentials of degree -1.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exactlin::{self, Field, Matrix};

/// A bounded chain complex. Only nonzero degrees and nonzero differentials
/// are stored, so structural equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    field: Field,
    dims: BTreeMap<i64, usize>,
    diffs: BTreeMap<i64, Matrix>,
}

impl ChainComplex {
    /// Builds and validates a complex. Differentials may be omitted where
    /// they are zero; supplied ones must have shape `dim(n-1) x dim(n)` and
    /// satisfy `d . d = 0`.
    pub fn new(
        field: Field,
        dims: BTreeMap<i64, usize>,
        diffs: BTreeMap<i64, Matrix>,
    ) -> Result<ChainComplex, Error> {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|(_, d)| *d > 0).collect();
        let mut kept = BTreeMap::new();
        for (n, m) in diffs {
            let rows = dims.get(&(n - 1)).copied().unwrap_or(0);
            let cols = dims.get(&n).copied().unwrap_or(0);
            if m.field() != field {
                return Err(Error::invalid(format!("differential at degree {n}: field mismatch")));
            }
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::invalid(format!(
                    "differential at degree {n} has shape {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_zero() {
                kept.insert(n, m);
            }
        }
        let c = ChainComplex { field, dims, diffs: kept };
        c.validate()?;
        Ok(c)
    }

    /// Re-checks both invariants (shapes and `d . d = 0`), naming the failing
    /// degree.
    pub fn validate(&self) -> Result<(), Error> {
        for (n, m) in &self.diffs {
            let rows = self.dim(n - 1);
            let cols = self.dim(*n);
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::invalid(format!(
                    "differential at degree {n} has shape {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some((lo, hi)) = self.window() {
            for n in lo..=hi {
                let dd = self.d(n).mul(&self.d(n + 1));
                if !dd.is_zero() {
                    return Err(Error::invalid(format!("d_{n} . d_{} is nonzero", n + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn zero(field: Field) -> ChainComplex {
        ChainComplex { field, dims: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// `dim` copies of the field concentrated in one degree.
    pub fn concentrated(field: Field, degree: i64, dim: usize) -> ChainComplex {
        let mut dims = BTreeMap::new();
        if dim > 0 {
            dims.insert(degree, dim);
        }
        ChainComplex { field, dims, diffs: BTreeMap::new() }
    }

    /// The sphere `S^n`: one copy of the field in degree `n`.
    pub fn sphere(field: Field, n: i64) -> ChainComplex {
        ChainComplex::concentrated(field, n, 1)
    }

    /// The disk `D^n`: the identity differential from degree `n` to `n - 1`.
    pub fn disk(field: Field, n: i64) -> ChainComplex {
        let mut dims = BTreeMap::new();
        dims.insert(n, 1);
        dims.insert(n - 1, 1);
        let mut diffs = BTreeMap::new();
        diffs.insert(n, Matrix::identity(field, 1));
        ChainComplex { field, dims, diffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero_complex(&self) -> bool {
        self.dims.is_empty()
    }

    /// Support window `(lo, hi)`, or `None` for the zero complex.
    pub fn window(&self) -> Option<(i64, i64)> {
        let lo = self.dims.keys().next()?;
        let hi = self.dims.keys().next_back()?;
        Some((*lo, *hi))
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn diffs(&self) -> &BTreeMap<i64, Matrix> {
        &self.diffs
    }

    /// The differential leaving degree `n`, materialized as a zero matrix
    /// outside the stored support.
    pub fn d(&self, n: i64) -> Matrix {
        match self.diffs.get(&n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.field, self.dim(n - 1), self.dim(n)),
        }
    }

    /// Translation by `k`: `(C[k])_n = C_{n-k}` with differential scaled by
    /// `(-1)^k`.
    pub fn shift(&self, k: i64) -> ChainComplex {
        let dims = self.dims.iter().map(|(n, d)| (n + k, *d)).collect();
        let sign = self.field.from_i64(if k.rem_euclid(2) == 0 { 1 } else { -1 });
        let diffs = self
            .diffs
            .iter()
            .map(|(n, m)| (n + k, m.scale(&sign)))
            .collect();
        ChainComplex { field: self.field, dims, diffs }
    }

    /// Dimension of `H_n` together with a chosen basis.
    pub fn homology(&self, n: i64) -> Homology {
        let cycles = exactlin::kernel_basis(&self.d(n));
        let boundaries = exactlin::image_basis(&self.d(n + 1));
        let in_cycle_coords = exactlin::solve_matrix(&cycles, &boundaries)
            .expect("boundaries are cycles in a valid complex");
        let (proj, sect) = exactlin::quotient_basis(cycles.cols(), &in_cycle_coords)
            .expect("shapes agree by construction");
        let basis = cycles.mul(&sect);
        Homology { dim: proj.rows(), cycles, class_projection: proj, basis }
    }
}

/// Homology of one degree: dimension, a basis of all cycles, the projection
/// onto homology classes in cycle coordinates, and chosen class
/// representatives (columns in the degree-n coordinates).
pub struct Homology {
    pub dim: usize,
    pub cycles: Matrix,
    pub class_projection: Matrix,
    pub basis: Matrix,
}

/// A degree-0 chain map. Components are stored exactly on the degrees where
/// both endpoints are nonzero, so equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    comps: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        comps: BTreeMap<i64, Matrix>,
    ) -> Result<ChainMap, Error> {
        let f = ChainMap::new_unvalidated(source, target, comps)?;
        f.validate()?;
        Ok(f)
    }

    /// Shape checks and canonicalization only; the chain-map squares are the
    /// caller's responsibility (used by constructions that are chain maps for
    /// structural reasons).
    pub(crate) fn new_unvalidated(
        source: ChainComplex,
        target: ChainComplex,
        comps: BTreeMap<i64, Matrix>,
    ) -> Result<ChainMap, Error> {
        if source.field() != target.field() {
            return Err(Error::invalid("chain map endpoints over different fields"));
        }
        let mut stored = BTreeMap::new();
        for (n, m) in comps {
            let rows = target.dim(n);
            let cols = source.dim(n);
            if m.field() != source.field() {
                return Err(Error::invalid(format!("component at degree {n}: field mismatch")));
            }
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::invalid(format!(
                    "component at degree {n} has shape {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
            if rows > 0 && cols > 0 {
                stored.insert(n, m);
            }
        }
        // Materialize zero components so equal maps store equal data.
        for (n, &cols) in source.dims() {
            if cols > 0 && target.dim(*n) > 0 {
                stored
                    .entry(*n)
                    .or_insert_with(|| Matrix::zeros(source.field(), target.dim(*n), cols));
            }
        }
        Ok(ChainMap { source, target, comps: stored })
    }

    /// Checks the chain-map squares `d . f = f . d` in every degree.
    pub fn validate(&self) -> Result<(), Error> {
        let (lo, hi) = match joint_window(&self.source, &self.target) {
            Some(w) => w,
            None => return Ok(()),
        };
        for n in lo..=hi + 1 {
            let lhs = self.target.d(n).mul(&self.comp(n));
            let rhs = self.comp(n - 1).mul(&self.source.d(n));
            if lhs != rhs {
                return Err(Error::invalid(format!("chain-map square fails at degree {n}")));
            }
        }
        Ok(())
    }

    pub fn zero(source: ChainComplex, target: ChainComplex) -> ChainMap {
        assert_eq!(source.field(), target.field(), "field mismatch");
        let mut comps = BTreeMap::new();
        for (n, &cols) in source.dims() {
            if target.dim(*n) > 0 {
                comps.insert(*n, Matrix::zeros(source.field(), target.dim(*n), cols));
            }
        }
        ChainMap { source, target, comps }
    }

    pub fn identity(c: &ChainComplex) -> ChainMap {
        let comps = c
            .dims()
            .iter()
            .map(|(n, &d)| (*n, Matrix::identity(c.field(), d)))
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), comps }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn comp(&self, n: i64) -> Matrix {
        match self.comps.get(&n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.field(), self.target.dim(n), self.source.dim(n)),
        }
    }

    pub fn comps(&self) -> &BTreeMap<i64, Matrix> {
        &self.comps
    }

    /// `self . first` (apply `first`, then `self`).
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap, Error> {
        if first.target != self.source {
            return Err(Error::invalid("compose: inner target differs from outer source"));
        }
        let mut comps = BTreeMap::new();
        for (n, m) in &first.comps {
            if self.target.dim(*n) > 0 {
                comps.insert(*n, self.comp(*n).mul(m));
            }
        }
        ChainMap::new_unvalidated(first.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap, Error> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::invalid("add: endpoint mismatch"));
        }
        let mut comps = BTreeMap::new();
        for n in self.comps.keys().chain(other.comps.keys()) {
            comps.entry(*n).or_insert_with(|| self.comp(*n).add(&other.comp(*n)));
        }
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChainMap {
        let comps = self.comps.iter().map(|(n, m)| (*n, m.neg())).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn is_zero_map(&self) -> bool {
        self.comps.values().all(|m| m.is_zero())
    }

    /// Degreewise injective (a cofibration in this model structure).
    pub fn is_cofibration(&self) -> bool {
        self.each_degree(|n| {
            let m = self.comp(n);
            exactlin::rank(&m) == m.cols()
        })
    }

    /// Degreewise surjective (a fibration in this model structure).
    pub fn is_fibration(&self) -> bool {
        self.each_degree(|n| {
            let m = self.comp(n);
            exactlin::rank(&m) == m.rows()
        })
    }

    /// Isomorphism on homology in every degree (a weak equivalence).
    pub fn is_quasi_iso(&self) -> bool {
        let (lo, hi) = match joint_window(&self.source, &self.target) {
            Some(w) => w,
            None => return true,
        };
        for n in lo - 1..=hi + 1 {
            let hs = self.source.homology(n);
            let ht = self.target.homology(n);
            if hs.dim != ht.dim {
                return false;
            }
            let induced = self.induced_on_homology_with(n, &hs, &ht);
            if exactlin::rank(&induced) != hs.dim {
                return false;
            }
        }
        true
    }

    pub fn is_acyclic_cofibration(&self) -> bool {
        self.is_cofibration() && self.is_quasi_iso()
    }

    pub fn is_acyclic_fibration(&self) -> bool {
        self.is_fibration() && self.is_quasi_iso()
    }

    /// The induced map `H_n(source) -> H_n(target)` in the chosen bases.
    pub fn induced_on_homology(&self, n: i64) -> Matrix {
        let hs = self.source.homology(n);
        let ht = self.target.homology(n);
        self.induced_on_homology_with(n, &hs, &ht)
    }

    fn induced_on_homology_with(&self, n: i64, hs: &Homology, ht: &Homology) -> Matrix {
        let image = self.comp(n).mul(&hs.basis);
        let coords = exactlin::solve_matrix(&ht.cycles, &image)
            .expect("a chain map sends cycles to cycles");
        ht.class_projection.mul(&coords)
    }

    fn each_degree(&self, mut pred: impl FnMut(i64) -> bool) -> bool {
        match joint_window(&self.source, &self.target) {
            Some((lo, hi)) => (lo..=hi).all(|n| pred(n)),
            None => true,
        }
    }
}

pub(crate) fn joint_window(a: &ChainComplex, b: &ChainComplex) -> Option<(i64, i64)> {
    match (a.window(), b.window()) {
        (Some((al, ah)), Some((bl, bh))) => Some((al.min(bl), ah.max(bh))),
        (Some(w), None) | (None, Some(w)) => Some(w),
        (None, None) => None,
    }
}

/// The biproduct of two complexes with its structure maps.
pub struct Biproduct {
    pub object: ChainComplex,
    pub incl_first: ChainMap,
    pub incl_second: ChainMap,
    pub proj_first: ChainMap,
    pub proj_second: ChainMap,
}

/// Degreewise direct sum; the differential is block diagonal.
pub fn direct_sum(a: &ChainComplex, b: &ChainComplex) -> Biproduct {
    assert_eq!(a.field(), b.field(), "field mismatch");
    let field = a.field();
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for n in a.dims().keys().chain(b.dims().keys()) {
        let d = a.dim(*n) + b.dim(*n);
        if d > 0 {
            dims.insert(*n, d);
        }
    }
    if let Some((lo, hi)) = joint_window(a, b) {
        for n in lo..=hi + 1 {
            if a.dim(n) + b.dim(n) == 0 || a.dim(n - 1) + b.dim(n - 1) == 0 {
                continue;
            }
            let da = a.d(n);
            let db = b.d(n);
            let z1 = Matrix::zeros(field, a.dim(n - 1), b.dim(n));
            let z2 = Matrix::zeros(field, b.dim(n - 1), a.dim(n));
            let block = Matrix::from_blocks(field, &[vec![&da, &z1], vec![&z2, &db]]);
            if !block.is_zero() {
                diffs.insert(n, block);
            }
        }
    }
    let object = ChainComplex { field, dims, diffs };
    debug_assert!(object.validate().is_ok());
    let part = |rows: &dyn Fn(i64) -> Matrix, source: &ChainComplex, target: &ChainComplex| {
        let comps = source
            .dims()
            .keys()
            .filter(|n| target.dim(**n) > 0)
            .map(|n| (*n, rows(*n)))
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), comps }
    };
    let incl_first = part(
        &|n| {
            let id = Matrix::identity(field, a.dim(n));
            let z = Matrix::zeros(field, b.dim(n), a.dim(n));
            Matrix::vstack(field, &[&id, &z])
        },
        a,
        &object,
    );
    let incl_second = part(
        &|n| {
            let z = Matrix::zeros(field, a.dim(n), b.dim(n));
            let id = Matrix::identity(field, b.dim(n));
            Matrix::vstack(field, &[&z, &id])
        },
        b,
        &object,
    );
    let proj_first = part(
        &|n| {
            let id = Matrix::identity(field, a.dim(n));
            let z = Matrix::zeros(field, a.dim(n), b.dim(n));
            Matrix::hstack(field, &[&id, &z])
        },
        &object,
        a,
    );
    let proj_second = part(
        &|n| {
            let z = Matrix::zeros(field, b.dim(n), a.dim(n));
            let id = Matrix::identity(field, b.dim(n));
            Matrix::hstack(field, &[&z, &id])
        },
        &object,
        b,
    );
    Biproduct { object, incl_first, incl_second, proj_first, proj_second }
}

/// The map `A (+) B -> T` assembled from maps on the two summands.
pub fn coproduct_map(bi: &Biproduct, f: &ChainMap, g: &ChainMap) -> Result<ChainMap, Error> {
    if f.source() != bi.incl_first.source() || g.source() != bi.incl_second.source() {
        return Err(Error::invalid("coproduct_map: sources do not match the biproduct"));
    }
    if f.target() != g.target() {
        return Err(Error::invalid("coproduct_map: targets differ"));
    }
    let field = f.field();
    let mut comps = BTreeMap::new();
    for n in bi.object.dims().keys() {
        if f.target().dim(*n) == 0 {
            continue;
        }
        let fa = f.comp(*n);
        let gb = g.comp(*n);
        comps.insert(*n, Matrix::hstack(field, &[&fa, &gb]));
    }
    ChainMap::new_unvalidated(bi.object.clone(), f.target().clone(), comps)
}

/// The map `T -> A (+) B` assembled from maps into the two summands.
pub fn product_map(bi: &Biproduct, f: &ChainMap, g: &ChainMap) -> Result<ChainMap, Error> {
    if f.target() != bi.incl_first.source() || g.target() != bi.incl_second.source() {
        return Err(Error::invalid("product_map: targets do not match the biproduct"));
    }
    if f.source() != g.source() {
        return Err(Error::invalid("product_map: sources differ"));
    }
    let field = f.field();
    let mut comps = BTreeMap::new();
    for n in bi.object.dims().keys() {
        if f.source().dim(*n) == 0 {
            continue;
        }
        let fa = f.comp(*n);
        let gb = g.comp(*n);
        comps.insert(*n, Matrix::vstack(field, &[&fa, &gb]));
    }
    ChainMap::new_unvalidated(f.source().clone(), bi.object.clone(), comps)
}

/// A homotopy `s` between parallel chain maps, in the normal form
/// `d s + s d = to - from` with components of degree `+1`.
#[derive(Debug, Clone)]
pub struct AlgebraicHomotopy {
    pub from: ChainMap,
    pub to: ChainMap,
    comps: BTreeMap<i64, Matrix>,
}

impl AlgebraicHomotopy {
    pub fn new(
        from: ChainMap,
        to: ChainMap,
        comps: BTreeMap<i64, Matrix>,
    ) -> Result<AlgebraicHomotopy, Error> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::invalid("homotopy endpoints disagree"));
        }
        let source = from.source().clone();
        let target = from.target().clone();
        let mut stored = BTreeMap::new();
        for (n, m) in comps {
            let rows = target.dim(n + 1);
            let cols = source.dim(n);
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::invalid(format!(
                    "homotopy component at degree {n} has shape {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
            if rows > 0 && cols > 0 {
                stored.insert(n, m);
            }
        }
        let s = AlgebraicHomotopy { from, to, comps: stored };
        s.validate()?;
        Ok(s)
    }

    pub fn comp(&self, n: i64) -> Matrix {
        match self.comps.get(&n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(
                self.from.field(),
                self.from.target().dim(n + 1),
                self.from.source().dim(n),
            ),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let source = self.from.source();
        let target = self.from.target();
        let (lo, hi) = match joint_window(source, target) {
            Some(w) => w,
            None => return Ok(()),
        };
        for n in lo..=hi {
            let ds = target.d(n + 1).mul(&self.comp(n));
            let sd = self.comp(n - 1).mul(&source.d(n));
            let want = self.to.comp(n).sub(&self.from.comp(n));
            if ds.add(&sd) != want {
                return Err(Error::invalid(format!("homotopy identity fails at degree {n}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::f2()
    }

    #[test]
    fn validation_examples() {
        let s0 = ChainComplex::sphere(f2(), 0);
        assert!(s0.validate().is_ok());
        let d1 = ChainComplex::disk(f2(), 1);
        assert!(d1.validate().is_ok());

        // d_1 = d_2 = identity violates d . d = 0.
        let mut dims = BTreeMap::new();
        dims.insert(0, 1);
        dims.insert(1, 1);
        dims.insert(2, 1);
        let mut diffs = BTreeMap::new();
        diffs.insert(1, Matrix::identity(f2(), 1));
        diffs.insert(2, Matrix::identity(f2(), 1));
        let err = ChainComplex::new(f2(), dims, diffs).unwrap_err();
        assert!(err.to_string().contains("d_1 . d_2"), "{err}");
    }

    #[test]
    fn homology_examples() {
        let s0 = ChainComplex::sphere(f2(), 0);
        assert_eq!(s0.homology(0).dim, 1);
        let d1 = ChainComplex::disk(f2(), 1);
        for n in -1..=2 {
            assert_eq!(d1.homology(n).dim, 0);
        }
    }

    #[test]
    fn homology_matches_rank_count() {
        // dim H_n = dim ker d_n - rank d_{n+1}, computed independently.
        let field = Field::Rational;
        let mut dims = BTreeMap::new();
        dims.insert(0, 2);
        dims.insert(1, 3);
        dims.insert(2, 1);
        let mut diffs = BTreeMap::new();
        diffs.insert(1, Matrix::from_i64s(field, &[vec![1, 0, 2], vec![-1, 0, -2]]));
        diffs.insert(2, Matrix::from_i64s(field, &[vec![0], vec![2], vec![0]]));
        let c = ChainComplex::new(field, dims, diffs).unwrap();
        for n in 0..=2 {
            let ker = exactlin::kernel_basis(&c.d(n)).cols();
            let img = exactlin::rank(&c.d(n + 1));
            assert_eq!(c.homology(n).dim, ker - img, "degree {n}");
        }
    }

    #[test]
    fn quasi_iso_examples() {
        let s0 = ChainComplex::sphere(f2(), 0);
        assert!(ChainMap::identity(&s0).is_quasi_iso());
        let from_zero = ChainMap::zero(ChainComplex::zero(f2()), s0.clone());
        assert!(!from_zero.is_quasi_iso());
    }

    #[test]
    fn predicate_examples() {
        let s0 = ChainComplex::sphere(f2(), 0);
        let d1 = ChainComplex::disk(f2(), 1);
        // Degree-0 generator into the disk boundary: injective everywhere,
        // but H_0 = k dies in the disk.
        let mut comps = BTreeMap::new();
        comps.insert(0, Matrix::identity(f2(), 1));
        let incl = ChainMap::new(s0.clone(), d1.clone(), comps).unwrap();
        assert!(incl.is_cofibration());
        assert!(!incl.is_quasi_iso());
        assert!(!incl.is_acyclic_cofibration());

        let to_zero = ChainMap::zero(d1.clone(), ChainComplex::zero(f2()));
        assert!(to_zero.is_fibration());
        assert!(to_zero.is_acyclic_fibration());

        let id = ChainMap::identity(&d1);
        assert!(id.is_cofibration() && id.is_fibration());
        assert!(id.is_acyclic_cofibration() && id.is_acyclic_fibration());
    }

    #[test]
    fn every_object_is_bifibrant() {
        for c in [
            ChainComplex::zero(f2()),
            ChainComplex::sphere(f2(), 0),
            ChainComplex::disk(f2(), 1),
        ] {
            assert!(ChainMap::zero(c.clone(), ChainComplex::zero(f2())).is_fibration());
            assert!(ChainMap::zero(ChainComplex::zero(f2()), c).is_cofibration());
        }
    }

    #[test]
    fn compose_and_sum_and_shift() {
        let s0 = ChainComplex::sphere(f2(), 0);
        let d1 = ChainComplex::disk(f2(), 1);
        let mut comps = BTreeMap::new();
        comps.insert(0, Matrix::identity(f2(), 1));
        let f = ChainMap::new(s0.clone(), d1.clone(), comps).unwrap();
        let id = ChainMap::identity(&d1);
        assert_eq!(id.compose(&f).unwrap(), f);

        let s1 = ChainComplex::sphere(f2(), 1);
        let sum = direct_sum(&s0, &s1);
        assert_eq!(sum.object.dim(0), 1);
        assert_eq!(sum.object.dim(1), 1);
        assert_eq!(
            sum.proj_first.compose(&sum.incl_first).unwrap(),
            ChainMap::identity(&s0)
        );

        assert_eq!(s0.shift(1), s1);
        // Odd shifts flip the differential sign; visible over Q.
        let dq = ChainComplex::disk(Field::Rational, 1);
        let shifted = dq.shift(1);
        assert_eq!(shifted.d(2), Matrix::from_i64s(Field::Rational, &[vec![-1]]));
        assert_eq!(dq.shift(2).d(3), Matrix::identity(Field::Rational, 1));
    }

    #[test]
    fn homotopic_maps_agree_on_homology() {
        // On the disk, the identity and zero maps are homotopic.
        let d1 = ChainComplex::disk(f2(), 1);
        let id = ChainMap::identity(&d1);
        let zero = ChainMap::zero(d1.clone(), d1.clone());
        let mut comps = BTreeMap::new();
        comps.insert(0, Matrix::identity(f2(), 1));
        let s = AlgebraicHomotopy::new(zero.clone(), id.clone(), comps).unwrap();
        s.validate().unwrap();
        for n in 0..=1 {
            assert_eq!(id.induced_on_homology(n), zero.induced_on_homology(n));
        }
    }

    #[test]
    fn homotopy_identity_is_checked() {
        let s0 = ChainComplex::sphere(f2(), 0);
        let id = ChainMap::identity(&s0);
        let zero = ChainMap::zero(s0.clone(), s0.clone());
        // No homotopy exists between 0 and id on S^0.
        let err = AlgebraicHomotopy::new(zero, id, BTreeMap::new()).unwrap_err();
        assert!(err.to_string().contains("degree 0"), "{err}");
    }
}
