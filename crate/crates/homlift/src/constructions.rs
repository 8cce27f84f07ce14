//! The categorical constructions the lifting machinery is built from:
//! cylinders and cocylinders, pushouts and pullbacks with their universal
//! properties, the two factorizations (cofibration followed by acyclic
//! fibration, acyclic cofibration followed by fibration), mapping cylinders,
//! homotopy pushouts `M(alpha, beta)`, and the cartesian gap map.
//!
//! Conventions: `Cyl(B)_n = B_n (+) B_n (+) B_{n-1}` is the tensor with the
//! interval complex, with the Koszul sign `d(b (x) e) = db (x) e +
//! (-1)^{|b|} (b (x) [1] - b (x) [0])`; the cocylinder is the dual mapping
//! object with `d(y0, y1, z) = (dy0, dy1, dz + (-1)^n (y1 - y0))`. Blocks are
//! always ordered `([0], [1], e)` and `(y0, y1, z)`. Pushout and pullback
//! bases come from the deterministic pivot rule in [`crate::exactlin`], so
//! every induced map is reproducible.

use std::collections::BTreeMap;

use crate::chain::{
    coproduct_map, direct_sum, joint_window, product_map, AlgebraicHomotopy, Biproduct,
    ChainComplex, ChainMap,
};
use crate::error::Error;
use crate::exactlin::{self, Matrix};

/// Which end of a cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Zero,
    One,
}

/// `Cyl(B)` with its structure maps: the end inclusions and the fold
/// projection.
pub struct CylinderPackage {
    pub object: ChainComplex,
    pub i0: ChainMap,
    pub i1: ChainMap,
    pub projection: ChainMap,
}

impl CylinderPackage {
    pub fn end(&self, e: End) -> &ChainMap {
        match e {
            End::Zero => &self.i0,
            End::One => &self.i1,
        }
    }

    /// The package invariants: both ends section the projection, the ends
    /// jointly form a cofibration, and the projection is an acyclic
    /// fibration.
    pub fn validate(&self) -> Result<(), Error> {
        let b = self.i0.source();
        let id = ChainMap::identity(b);
        if self.projection.compose(&self.i0)? != id || self.projection.compose(&self.i1)? != id {
            return Err(Error::internal("cylinder: projection does not retract the ends"));
        }
        let bb = direct_sum(b, b);
        let ends = coproduct_map(&bb, &self.i0, &self.i1)?;
        if !ends.is_cofibration() {
            return Err(Error::internal("cylinder: end inclusions are not a cofibration"));
        }
        if !self.projection.is_acyclic_fibration() {
            return Err(Error::internal("cylinder: projection is not an acyclic fibration"));
        }
        Ok(())
    }
}

/// The functorial cylinder.
pub fn cylinder(b: &ChainComplex) -> CylinderPackage {
    let field = b.field();
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    if let Some((lo, hi)) = b.window() {
        for n in lo..=hi + 1 {
            let d = 2 * b.dim(n) + b.dim(n - 1);
            if d > 0 {
                dims.insert(n, d);
            }
        }
        for n in lo..=hi + 1 {
            let rows = 2 * b.dim(n - 1) + b.dim(n - 2);
            let cols = 2 * b.dim(n) + b.dim(n - 1);
            if rows == 0 || cols == 0 {
                continue;
            }
            let dn = b.d(n);
            let dprev = b.d(n - 1);
            let eps = field.from_i64(if (n - 1).rem_euclid(2) == 0 { 1 } else { -1 });
            let pos = Matrix::identity(field, b.dim(n - 1)).scale(&eps);
            let neg = pos.neg();
            let z_mid = Matrix::zeros(field, b.dim(n - 1), b.dim(n));
            let z_bot = Matrix::zeros(field, b.dim(n - 2), b.dim(n));
            let block = Matrix::from_blocks(
                field,
                &[
                    vec![&dn, &z_mid, &neg],
                    vec![&z_mid, &dn, &pos],
                    vec![&z_bot, &z_bot, &dprev],
                ],
            );
            if !block.is_zero() {
                diffs.insert(n, block);
            }
        }
    }
    let object =
        ChainComplex::new(field, dims, diffs).expect("cylinder differential squares to zero");
    let end = |which: usize| {
        let comps: BTreeMap<i64, Matrix> = b
            .dims()
            .iter()
            .map(|(n, &d)| {
                let mut m = Matrix::zeros(field, object.dim(*n), d);
                let off = which * d;
                for j in 0..d {
                    m.set(off + j, j, field.one());
                }
                (*n, m)
            })
            .collect();
        ChainMap::new_unvalidated(b.clone(), object.clone(), comps).expect("end inclusion shapes")
    };
    let i0 = end(0);
    let i1 = end(1);
    let proj_comps: BTreeMap<i64, Matrix> = b
        .dims()
        .iter()
        .map(|(n, &d)| {
            let id = Matrix::identity(field, d);
            let z = Matrix::zeros(field, d, b.dim(n - 1));
            (*n, Matrix::hstack(field, &[&id, &id, &z]))
        })
        .collect();
    let projection =
        ChainMap::new_unvalidated(object.clone(), b.clone(), proj_comps).expect("projection shapes");
    CylinderPackage { object, i0, i1, projection }
}

/// `Cyl(f) : Cyl(A) -> Cyl(B)` for `f : A -> B`; blockwise `f (+) f (+) f`.
pub fn cylinder_map(f: &ChainMap) -> ChainMap {
    let field = f.field();
    let src = cylinder(f.source());
    let tgt = cylinder(f.target());
    let mut comps = BTreeMap::new();
    for n in src.object.dims().keys() {
        if tgt.object.dim(*n) == 0 {
            continue;
        }
        let fn_ = f.comp(*n);
        let fprev = f.comp(*n - 1);
        let z1 = Matrix::zeros(field, f.target().dim(*n), f.source().dim(*n));
        let z2 = Matrix::zeros(field, f.target().dim(*n), f.source().dim(*n - 1));
        let z3 = Matrix::zeros(field, f.target().dim(*n - 1), f.source().dim(*n));
        let block = Matrix::from_blocks(
            field,
            &[
                vec![&fn_, &z1, &z2],
                vec![&z1, &fn_, &z2],
                vec![&z3, &z3, &fprev],
            ],
        );
        comps.insert(*n, block);
    }
    ChainMap::new_unvalidated(src.object, tgt.object, comps).expect("cylinder functor shapes")
}

/// `Cocyl(Y)` with its structure maps: the constant-path inclusion and the
/// two evaluations.
pub struct CocylinderPackage {
    pub object: ChainComplex,
    pub inclusion: ChainMap,
    pub ev0: ChainMap,
    pub ev1: ChainMap,
}

impl CocylinderPackage {
    /// Both evaluations retract the inclusion, the evaluations jointly form a
    /// fibration, and the inclusion is an acyclic cofibration.
    pub fn validate(&self) -> Result<(), Error> {
        let y = self.inclusion.source();
        let id = ChainMap::identity(y);
        if self.ev0.compose(&self.inclusion)? != id || self.ev1.compose(&self.inclusion)? != id {
            return Err(Error::internal("cocylinder: evaluations do not retract the inclusion"));
        }
        let yy = direct_sum(y, y);
        let evs = product_map(&yy, &self.ev0, &self.ev1)?;
        if !evs.is_fibration() {
            return Err(Error::internal("cocylinder: joint evaluation is not a fibration"));
        }
        if !self.inclusion.is_acyclic_cofibration() {
            return Err(Error::internal("cocylinder: inclusion is not an acyclic cofibration"));
        }
        Ok(())
    }
}

/// The good cocylinder (path object).
pub fn cocylinder(y: &ChainComplex) -> CocylinderPackage {
    let field = y.field();
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    if let Some((lo, hi)) = y.window() {
        for n in lo - 1..=hi {
            let d = 2 * y.dim(n) + y.dim(n + 1);
            if d > 0 {
                dims.insert(n, d);
            }
        }
        for n in lo - 1..=hi {
            let rows = 2 * y.dim(n - 1) + y.dim(n);
            let cols = 2 * y.dim(n) + y.dim(n + 1);
            if rows == 0 || cols == 0 {
                continue;
            }
            let dn = y.d(n);
            let dnext = y.d(n + 1);
            let delta = field.from_i64(if n.rem_euclid(2) == 0 { 1 } else { -1 });
            let pos = Matrix::identity(field, y.dim(n)).scale(&delta);
            let neg = pos.neg();
            let z_mid = Matrix::zeros(field, y.dim(n - 1), y.dim(n));
            let z_top = Matrix::zeros(field, y.dim(n - 1), y.dim(n + 1));
            let block = Matrix::from_blocks(
                field,
                &[
                    vec![&dn, &z_mid, &z_top],
                    vec![&z_mid, &dn, &z_top],
                    vec![&neg, &pos, &dnext],
                ],
            );
            if !block.is_zero() {
                diffs.insert(n, block);
            }
        }
    }
    let object =
        ChainComplex::new(field, dims, diffs).expect("cocylinder differential squares to zero");
    let inclusion_comps: BTreeMap<i64, Matrix> = y
        .dims()
        .iter()
        .map(|(n, &d)| {
            let id = Matrix::identity(field, d);
            let z = Matrix::zeros(field, y.dim(n + 1), d);
            (*n, Matrix::vstack(field, &[&id, &id, &z]))
        })
        .collect();
    let inclusion =
        ChainMap::new_unvalidated(y.clone(), object.clone(), inclusion_comps).expect("inclusion shapes");
    let ev = |which: usize| {
        let comps: BTreeMap<i64, Matrix> = y
            .dims()
            .iter()
            .map(|(n, &d)| {
                let mut m = Matrix::zeros(field, d, object.dim(*n));
                let off = which * d;
                for j in 0..d {
                    m.set(j, off + j, field.one());
                }
                (*n, m)
            })
            .collect();
        ChainMap::new_unvalidated(object.clone(), y.clone(), comps).expect("evaluation shapes")
    };
    let ev0 = ev(0);
    let ev1 = ev(1);
    CocylinderPackage { object, inclusion, ev0, ev1 }
}

/// A pushout square with its universal property. `into_first` comes from the
/// target of the first leg of the span, `into_second` from the second.
pub struct Pushout {
    pub object: ChainComplex,
    pub into_first: ChainMap,
    pub into_second: ChainMap,
    u: ChainMap,
    v: ChainMap,
    bi: Biproduct,
    sections: BTreeMap<i64, Matrix>,
}

/// Pushout of `B <-u- A -v-> C`: the degreewise quotient of `B (+) C` by the
/// span of `(u a, -v a)`.
pub fn pushout(u: &ChainMap, v: &ChainMap) -> Result<Pushout, Error> {
    if u.source() != v.source() {
        return Err(Error::invalid("pushout: legs have different sources"));
    }
    let field = u.field();
    let b = u.target();
    let c = v.target();
    let bi = direct_sum(b, c);
    let mut projections = BTreeMap::new();
    let mut sections = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for (n, &ambient) in bi.object.dims() {
        let un = u.comp(*n);
        let vn = v.comp(*n).neg();
        let gens = Matrix::vstack(field, &[&un, &vn]);
        let (proj, sect) = exactlin::quotient_basis(ambient, &gens)?;
        if proj.rows() > 0 {
            dims.insert(*n, proj.rows());
        }
        projections.insert(*n, proj);
        sections.insert(*n, sect);
    }
    let mut diffs = BTreeMap::new();
    for n in dims.keys() {
        let prev = projections
            .get(&(n - 1))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(field, 0, bi.object.dim(n - 1)));
        let d = prev.mul(&bi.object.d(*n)).mul(&sections[n]);
        if !d.is_zero() {
            diffs.insert(*n, d);
        }
    }
    let object = ChainComplex::new(field, dims, diffs)
        .map_err(|e| Error::internal(format!("pushout differential: {e}")))?;
    let proj_comps: BTreeMap<i64, Matrix> = projections
        .iter()
        .filter(|(n, p)| p.rows() > 0 && bi.object.dim(**n) > 0)
        .map(|(n, p)| (*n, p.clone()))
        .collect();
    let projection = ChainMap::new_unvalidated(bi.object.clone(), object.clone(), proj_comps)?;
    projection
        .validate()
        .map_err(|e| Error::internal(format!("pushout projection: {e}")))?;
    let into_first = projection.compose(&bi.incl_first)?;
    let into_second = projection.compose(&bi.incl_second)?;
    Ok(Pushout { object, into_first, into_second, u: u.clone(), v: v.clone(), bi, sections })
}

impl Pushout {
    /// The unique map out of the pushout determined by a commuting cocone
    /// `(p, q)` with `p . u = q . v`.
    pub fn induced(&self, p: &ChainMap, q: &ChainMap) -> Result<ChainMap, Error> {
        if p.source() != self.u.target() || q.source() != self.v.target() {
            return Err(Error::invalid("pushout cocone: wrong sources"));
        }
        if p.target() != q.target() {
            return Err(Error::invalid("pushout cocone: targets differ"));
        }
        if p.compose(&self.u)? != q.compose(&self.v)? {
            return Err(Error::invalid("pushout cocone does not commute"));
        }
        let glued = coproduct_map(&self.bi, p, q)?;
        let mut comps = BTreeMap::new();
        for n in self.object.dims().keys() {
            if p.target().dim(*n) == 0 {
                continue;
            }
            comps.insert(*n, glued.comp(*n).mul(&self.sections[n]));
        }
        ChainMap::new_unvalidated(self.object.clone(), p.target().clone(), comps)
    }
}

/// A pullback square with its universal property. `onto_first` lands in the
/// source of the first leg of the cospan, `onto_second` in the second.
pub struct Pullback {
    pub object: ChainComplex,
    pub onto_first: ChainMap,
    pub onto_second: ChainMap,
    f: ChainMap,
    g: ChainMap,
    inclusions: BTreeMap<i64, Matrix>,
}

/// Pullback of `X -f-> Y <-g- Z`: the degreewise kernel of
/// `(f, -g) : X (+) Z -> Y`.
pub fn pullback(f: &ChainMap, g: &ChainMap) -> Result<Pullback, Error> {
    if f.target() != g.target() {
        return Err(Error::invalid("pullback: legs have different targets"));
    }
    let field = f.field();
    let x = f.source();
    let z = g.source();
    let bi = direct_sum(x, z);
    let mut inclusions = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for n in bi.object.dims().keys() {
        let fn_ = f.comp(*n);
        let gn = g.comp(*n).neg();
        let assembled = Matrix::hstack(field, &[&fn_, &gn]);
        let incl = exactlin::kernel_basis(&assembled);
        if incl.cols() > 0 {
            dims.insert(*n, incl.cols());
        }
        inclusions.insert(*n, incl);
    }
    let mut diffs = BTreeMap::new();
    for n in dims.keys() {
        let prev = inclusions
            .get(&(n - 1))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(field, bi.object.dim(n - 1), 0));
        let image = bi.object.d(*n).mul(&inclusions[n]);
        let d = exactlin::solve_matrix(&prev, &image)
            .ok_or_else(|| Error::internal("pullback: kernel is not a subcomplex"))?;
        if !d.is_zero() {
            diffs.insert(*n, d);
        }
    }
    let object = ChainComplex::new(field, dims, diffs)
        .map_err(|e| Error::internal(format!("pullback differential: {e}")))?;
    let incl_comps: BTreeMap<i64, Matrix> = inclusions
        .iter()
        .filter(|(n, m)| m.cols() > 0 && bi.object.dim(**n) > 0)
        .map(|(n, m)| (*n, m.clone()))
        .collect();
    let inclusion = ChainMap::new_unvalidated(object.clone(), bi.object.clone(), incl_comps)?;
    inclusion
        .validate()
        .map_err(|e| Error::internal(format!("pullback inclusion: {e}")))?;
    let onto_first = bi.proj_first.compose(&inclusion)?;
    let onto_second = bi.proj_second.compose(&inclusion)?;
    Ok(Pullback { object, onto_first, onto_second, f: f.clone(), g: g.clone(), inclusions })
}

impl Pullback {
    /// The unique map into the pullback determined by a commuting cone
    /// `(p, q)` with `f . p = g . q`.
    pub fn induced(&self, p: &ChainMap, q: &ChainMap) -> Result<ChainMap, Error> {
        if p.target() != self.f.source() || q.target() != self.g.source() {
            return Err(Error::invalid("pullback cone: wrong targets"));
        }
        if p.source() != q.source() {
            return Err(Error::invalid("pullback cone: sources differ"));
        }
        if self.f.compose(p)? != self.g.compose(q)? {
            return Err(Error::invalid("pullback cone does not commute"));
        }
        let field = p.field();
        let mut comps = BTreeMap::new();
        for n in p.source().dims().keys() {
            if self.object.dim(*n) == 0 {
                continue;
            }
            let stacked = Matrix::vstack(field, &[&p.comp(*n), &q.comp(*n)]);
            let w = exactlin::solve_matrix(&self.inclusions[n], &stacked)
                .ok_or_else(|| Error::internal("pullback cone misses the kernel"))?;
            comps.insert(*n, w);
        }
        ChainMap::new_unvalidated(p.source().clone(), self.object.clone(), comps)
    }
}

/// Factorization `X -cof-> F(alpha) -afib-> Y` of `alpha` as a cofibration
/// followed by an acyclic fibration, through the mapping cylinder glued along
/// the 1-end (so `cof` enters at the 0-end).
pub struct FactorizationCofAFib {
    pub mid: ChainComplex,
    pub cof: ChainMap,
    pub afib: ChainMap,
}

pub fn factor_cof_afib(alpha: &ChainMap) -> Result<FactorizationCofAFib, Error> {
    let cyl = cylinder(alpha.source());
    let po = pushout(&cyl.i1, alpha)?;
    let cof = po.into_first.compose(&cyl.i0)?;
    let through_cyl = alpha.compose(&cyl.projection)?;
    let afib = po.induced(&through_cyl, &ChainMap::identity(alpha.target()))?;
    if afib.compose(&cof)? != *alpha {
        return Err(Error::internal("factor_cof_afib does not compose back"));
    }
    if !cof.is_cofibration() {
        return Err(Error::internal("factor_cof_afib: first map is not a cofibration"));
    }
    if !afib.is_acyclic_fibration() {
        return Err(Error::internal("factor_cof_afib: second map is not an acyclic fibration"));
    }
    Ok(FactorizationCofAFib { mid: po.object, cof, afib })
}

/// Factorization `X -acof-> C(alpha) -fib-> Y` of `alpha` as an acyclic
/// cofibration followed by a fibration, through the cocylinder of the target.
pub struct FactorizationACofFib {
    pub mid: ChainComplex,
    pub acof: ChainMap,
    pub fib: ChainMap,
}

pub fn factor_acof_fib(alpha: &ChainMap) -> Result<FactorizationACofFib, Error> {
    let cocyl = cocylinder(alpha.target());
    let pb = pullback(alpha, &cocyl.ev0)?;
    let constant = cocyl.inclusion.compose(alpha)?;
    let acof = pb.induced(&ChainMap::identity(alpha.source()), &constant)?;
    let fib = cocyl.ev1.compose(&pb.onto_second)?;
    if fib.compose(&acof)? != *alpha {
        return Err(Error::internal("factor_acof_fib does not compose back"));
    }
    if !acof.is_acyclic_cofibration() {
        return Err(Error::internal("factor_acof_fib: first map is not an acyclic cofibration"));
    }
    if !fib.is_fibration() {
        return Err(Error::internal("factor_acof_fib: second map is not a fibration"));
    }
    Ok(FactorizationACofFib { mid: pb.object, acof, fib })
}

/// The one-sided mapping cylinder `N_j(i)` with its comparison map into
/// `Cyl(B)`.
pub struct MappingCylinder {
    pub pushout: Pushout,
    /// `iota_j : N_j(i) -> Cyl(B)`.
    pub to_cylinder: ChainMap,
}

impl MappingCylinder {
    pub fn object(&self) -> &ChainComplex {
        &self.pushout.object
    }

    /// `Cyl(A) -> N_j(i)`.
    pub fn from_cyl(&self) -> &ChainMap {
        &self.pushout.into_first
    }

    /// `B -> N_j(i)`.
    pub fn from_end(&self) -> &ChainMap {
        &self.pushout.into_second
    }
}

/// `N_j(i) = Pushout(Cyl(A) <-i_j- A -i-> B)` and the induced
/// `iota_j : N_j(i) -> Cyl(B)`.
pub fn mapping_cylinder_side(i: &ChainMap, end: End) -> Result<MappingCylinder, Error> {
    let cyl_a = cylinder(i.source());
    let cyl_b = cylinder(i.target());
    let po = pushout(cyl_a.end(end), i)?;
    let to_cylinder = po.induced(&cylinder_map(i), cyl_b.end(end))?;
    Ok(MappingCylinder { pushout: po, to_cylinder })
}

/// The double mapping cylinder `N(i)` with its comparison map into `Cyl(B)`
/// and the two end inclusions of `B`.
pub struct DoubleMappingCylinder {
    pub pushout: Pushout,
    /// `iota : N(i) -> Cyl(B)`, restricting to `i_{j,B}` on the ends.
    pub to_cylinder: ChainMap,
    pub end0: ChainMap,
    pub end1: ChainMap,
    /// The biproduct `B (+) B` glued along the ends (handy for cocones).
    pub ends: Biproduct,
}

impl DoubleMappingCylinder {
    pub fn object(&self) -> &ChainComplex {
        &self.pushout.object
    }

    /// `Cyl(A) -> N(i)`.
    pub fn from_cyl(&self) -> &ChainMap {
        &self.pushout.into_first
    }

    /// The map out of `N(i)` glued from a map on `Cyl(A)` and maps on the two
    /// ends of `B`.
    pub fn induced(
        &self,
        on_cyl: &ChainMap,
        on_end0: &ChainMap,
        on_end1: &ChainMap,
    ) -> Result<ChainMap, Error> {
        let on_ends = coproduct_map(&self.ends, on_end0, on_end1)?;
        self.pushout.induced(on_cyl, &on_ends)
    }
}

/// `N(i) = Pushout(Cyl(A) <- A (+) A -> B (+) B)`.
pub fn double_mapping_cylinder(i: &ChainMap) -> Result<DoubleMappingCylinder, Error> {
    let a = i.source();
    let b = i.target();
    let cyl_a = cylinder(a);
    let cyl_b = cylinder(b);
    let aa = direct_sum(a, a);
    let bb = direct_sum(b, b);
    let ends_a = coproduct_map(&aa, &cyl_a.i0, &cyl_a.i1)?;
    let i_plus_i =
        coproduct_map(&aa, &bb.incl_first.compose(i)?, &bb.incl_second.compose(i)?)?;
    let po = pushout(&ends_a, &i_plus_i)?;
    let ends_b = coproduct_map(&bb, &cyl_b.i0, &cyl_b.i1)?;
    let to_cylinder = po.induced(&cylinder_map(i), &ends_b)?;
    let end0 = po.into_second.compose(&bb.incl_first)?;
    let end1 = po.into_second.compose(&bb.incl_second)?;
    Ok(DoubleMappingCylinder { pushout: po, to_cylinder, end0, end1, ends: bb })
}

/// Everything the cartesian gap map construction produces for a cospan
/// `(alpha : X -> Y, beta : X -> Z)`.
pub struct GapMap {
    /// The (cofibration, acyclic fibration) factorization of `alpha`.
    pub factorization: FactorizationCofAFib,
    /// `M(alpha, beta)`: pushout of `F(alpha) <-cof- X -beta-> Z`, with legs
    /// `j = into_first` and `j' = into_second`.
    pub pushout_m: Pushout,
    /// The (acyclic cofibration, fibration) factorization of `j`.
    pub j_factorization: FactorizationACofFib,
    /// `P(alpha, beta)`: pullback of `C(j) -f(j)-> M <-j'- Z`, with legs
    /// `k = onto_first` and `k' = onto_second`.
    pub pullback_p: Pullback,
    /// The cartesian gap map `X -> P(alpha, beta)`.
    pub gap: ChainMap,
}

/// Builds `M(alpha, beta)`, `P(alpha, beta)`, and the cartesian gap map.
pub fn gap_map(alpha: &ChainMap, beta: &ChainMap) -> Result<GapMap, Error> {
    if alpha.source() != beta.source() {
        return Err(Error::invalid("gap_map: cospan legs have different sources"));
    }
    let factorization = factor_cof_afib(alpha)?;
    let pushout_m = pushout(&factorization.cof, beta)?;
    let j_factorization = factor_acof_fib(&pushout_m.into_first)?;
    let pullback_p = pullback(&j_factorization.fib, &pushout_m.into_second)?;
    let into_cj = j_factorization.acof.compose(&factorization.cof)?;
    let gap = pullback_p.induced(&into_cj, beta)?;
    if pullback_p.onto_first.compose(&gap)? != into_cj
        || pullback_p.onto_second.compose(&gap)? != *beta
    {
        return Err(Error::internal("gap map does not satisfy its defining equations"));
    }
    Ok(GapMap { factorization, pushout_m, j_factorization, pullback_p, gap })
}

/// Presents an algebraic homotopy as a chain map out of the cylinder:
/// `K . i_0 = from`, `K . i_1 = to`, with the e-block carrying
/// `(-1)^{n-1} s`.
pub fn homotopy_to_cylinder_map(s: &AlgebraicHomotopy) -> ChainMap {
    let source = s.from.source();
    let target = s.from.target();
    let field = s.from.field();
    let cyl = cylinder(source);
    let mut comps = BTreeMap::new();
    if let Some((lo, hi)) = joint_window(&cyl.object, target) {
        for n in lo..=hi {
            if cyl.object.dim(n) == 0 || target.dim(n) == 0 {
                continue;
            }
            let sign = field.from_i64(if (n - 1).rem_euclid(2) == 0 { 1 } else { -1 });
            let e_block = s.comp(n - 1).scale(&sign);
            let block = Matrix::hstack(field, &[&s.from.comp(n), &s.to.comp(n), &e_block]);
            comps.insert(n, block);
        }
    }
    ChainMap::new_unvalidated(cyl.object, target.clone(), comps)
        .expect("homotopy cylinder-map shapes")
}

/// Inverse of [`homotopy_to_cylinder_map`]: reads a homotopy off a chain map
/// `K : Cyl(X) -> Y`. The endpoints are `K . i_0` and `K . i_1`.
pub fn cylinder_map_to_homotopy(
    x: &ChainComplex,
    k: &ChainMap,
) -> Result<AlgebraicHomotopy, Error> {
    let cyl = cylinder(x);
    if k.source() != &cyl.object {
        return Err(Error::invalid("cylinder_map_to_homotopy: source is not Cyl(X)"));
    }
    let field = k.field();
    let from = k.compose(&cyl.i0)?;
    let to = k.compose(&cyl.i1)?;
    let mut comps = BTreeMap::new();
    for (m, &cols) in x.dims() {
        let rows = k.target().dim(m + 1);
        if rows == 0 || cols == 0 {
            continue;
        }
        let full = k.comp(m + 1);
        let offset = 2 * x.dim(m + 1);
        let mut e_block = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                e_block.set(r, c, full.get(r, offset + c).clone());
            }
        }
        let sign = field.from_i64(if m.rem_euclid(2) == 0 { 1 } else { -1 });
        comps.insert(*m, e_block.scale(&sign));
    }
    AlgebraicHomotopy::new(from, to, comps)
}
