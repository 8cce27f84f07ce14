//! The JSON interchange format: problem files (field, the four complexes,
//! the five maps) and certificate files (witness matrices plus the hash of
//! the problem they certify). Output is canonical: sorted degree keys, fixed
//! field order, prime-field entries as numbers, rationals as strings, and
//! only nonzero differentials. Certificates re-check by matrix identities
//! alone; nonexistence certificates carry a Farkas row for the assembled
//! system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::chain::{ChainComplex, ChainMap};
use crate::constructions::cylinder;
use crate::error::Error;
use crate::exactlin::{Field, Matrix, Scalar};
use crate::obstruction::{build_chi_from_witness, ChiPackage};
use crate::solver::{extension_system, help_system, HelpSolution, LiftingProblem};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDesc {
    Prime(u64),
    Named(String),
}

impl FieldDesc {
    pub fn to_field(&self) -> Result<Field, Error> {
        match self {
            FieldDesc::Prime(p) => Field::prime(*p),
            FieldDesc::Named(s) => match s.as_str() {
                "rational" | "Q" | "q" => Ok(Field::Rational),
                other => Err(Error::invalid(format!(
                    "unknown field {other:?}; use a prime number or \"rational\""
                ))),
            },
        }
    }

    pub fn from_field(field: Field) -> FieldDesc {
        match field {
            Field::Prime(p) => FieldDesc::Prime(p),
            Field::Rational => FieldDesc::Named("rational".into()),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub d: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub components: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexesJson {
    #[serde(rename = "A")]
    pub a: ComplexJson,
    #[serde(rename = "B")]
    pub b: ComplexJson,
    #[serde(rename = "X")]
    pub x: ComplexJson,
    #[serde(rename = "Y")]
    pub y: ComplexJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapsJson {
    pub i: MapJson,
    pub alpha: MapJson,
    pub f: MapJson,
    pub h: MapJson,
    /// Optional; defaults to the degenerate homotopy `f . i . pi`, which
    /// requires the strict square to commute.
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub homotopy: Option<MapJson>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Metadata {
    fn is_empty(&self) -> bool {
        self.description.is_none() && self.seed.is_none()
    }
}

/// A lifting problem on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile {
    pub field: FieldDesc,
    pub complexes: ComplexesJson,
    pub maps: MapsJson,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

fn parse_degree(key: &str, ctx: &str) -> Result<i64, Error> {
    key.parse::<i64>()
        .map_err(|_| Error::invalid(format!("{ctx}: degree key {key:?} is not an integer")))
}

fn parse_entry(v: &Value, field: Field, ctx: &str) -> Result<Scalar, Error> {
    match (field, v) {
        (Field::Prime(p), Value::Number(n)) => {
            if let Some(u) = n.as_u64() {
                Ok(Scalar::Prime(u % p))
            } else if let Some(i) = n.as_i64() {
                Ok(field.from_i64(i))
            } else {
                Err(Error::invalid(format!("{ctx}: {n} is not an integer")))
            }
        }
        (Field::Prime(_), other) => Err(Error::invalid(format!(
            "{ctx}: prime-field entries must be integers, got {other}"
        ))),
        (Field::Rational, Value::Number(n)) => n
            .as_i64()
            .map(|i| field.from_i64(i))
            .ok_or_else(|| Error::invalid(format!("{ctx}: {n} is not an integer"))),
        (Field::Rational, Value::String(s)) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s.as_str(), "1"),
            };
            let num: i64 = num
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{ctx}: bad numerator in {s:?}")))?;
            let den: i64 = den
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{ctx}: bad denominator in {s:?}")))?;
            if den == 0 {
                return Err(Error::invalid(format!("{ctx}: zero denominator in {s:?}")));
            }
            Ok(Scalar::rational(num, den))
        }
        (Field::Rational, other) => Err(Error::invalid(format!(
            "{ctx}: rational entries must be integers or \"a/b\" strings, got {other}"
        ))),
    }
}

fn entry_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Prime(v) => Value::from(*v),
        Scalar::Rational(_) => Value::String(s.display()),
    }
}

fn parse_matrix(
    rows: usize,
    cols: usize,
    data: &[Vec<Value>],
    field: Field,
    ctx: &str,
) -> Result<Matrix, Error> {
    if data.len() != rows {
        return Err(Error::invalid(format!(
            "{ctx}: expected {rows} rows, found {}",
            data.len()
        )));
    }
    let mut m = Matrix::zeros(field, rows, cols);
    for (r, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::invalid(format!(
                "{ctx}: row {r} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (c, v) in row.iter().enumerate() {
            m.set(r, c, parse_entry(v, field, &format!("{ctx}[{r}][{c}]"))?);
        }
    }
    Ok(m)
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| entry_to_value(m.get(r, c))).collect())
        .collect()
}

fn resolve_complex(json: &ComplexJson, field: Field, name: &str) -> Result<ChainComplex, Error> {
    let mut dims = BTreeMap::new();
    for (k, &d) in &json.dims {
        dims.insert(parse_degree(k, &format!("complexes.{name}.dims"))?, d);
    }
    let mut diffs = BTreeMap::new();
    for (k, rows) in &json.d {
        let ctx = format!("complexes.{name}.d.{k}");
        let n = parse_degree(k, &ctx)?;
        let r = dims.get(&(n - 1)).copied().unwrap_or(0);
        let c = dims.get(&n).copied().unwrap_or(0);
        diffs.insert(n, parse_matrix(r, c, rows, field, &ctx)?);
    }
    ChainComplex::new(field, dims, diffs)
        .map_err(|e| Error::invalid(format!("complexes.{name}: {e}")))
}

fn resolve_components(
    json: &MapJson,
    source: &ChainComplex,
    target: &ChainComplex,
    field: Field,
    name: &str,
) -> Result<ChainMap, Error> {
    let mut comps = BTreeMap::new();
    for (k, rows) in &json.components {
        let ctx = format!("maps.{name}.components.{k}");
        let n = parse_degree(k, &ctx)?;
        comps.insert(n, parse_matrix(target.dim(n), source.dim(n), rows, field, &ctx)?);
    }
    ChainMap::new(source.clone(), target.clone(), comps)
        .map_err(|e| Error::invalid(format!("maps.{name}: {e}")))
}

fn expect_endpoints(json: &MapJson, name: &str, from: &str, to: &str) -> Result<(), Error> {
    if json.from != from || json.to != to {
        return Err(Error::invalid(format!(
            "maps.{name} must go from {from:?} to {to:?}, found {:?} -> {:?}",
            json.from, json.to
        )));
    }
    Ok(())
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile, Error> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("problem file: {e}")))
    }

    /// Parses, shape-checks, and validates into a live lifting problem.
    pub fn resolve(&self) -> Result<LiftingProblem, Error> {
        let field = self.field.to_field()?;
        let a = resolve_complex(&self.complexes.a, field, "A")?;
        let b = resolve_complex(&self.complexes.b, field, "B")?;
        let x = resolve_complex(&self.complexes.x, field, "X")?;
        let y = resolve_complex(&self.complexes.y, field, "Y")?;
        expect_endpoints(&self.maps.i, "i", "A", "B")?;
        expect_endpoints(&self.maps.alpha, "alpha", "X", "Y")?;
        expect_endpoints(&self.maps.f, "f", "B", "Y")?;
        expect_endpoints(&self.maps.h, "h", "A", "X")?;
        let i = resolve_components(&self.maps.i, &a, &b, field, "i")?;
        let alpha = resolve_components(&self.maps.alpha, &x, &y, field, "alpha")?;
        let f = resolve_components(&self.maps.f, &b, &y, field, "f")?;
        let h = resolve_components(&self.maps.h, &a, &x, field, "h")?;
        match &self.maps.homotopy {
            Some(hj) => {
                expect_endpoints(hj, "H", "Cyl(A)", "Y")?;
                let cyl_a = cylinder(&a);
                let homotopy = resolve_components(hj, &cyl_a.object, &y, field, "H")?;
                LiftingProblem::new(i, alpha, f, h, homotopy)
            }
            None => LiftingProblem::from_strict_square(i, alpha, f, h),
        }
    }

    /// Canonical serialization of a resolved problem.
    pub fn from_problem(p: &LiftingProblem, metadata: Metadata) -> ProblemFile {
        let complex_json = |c: &ChainComplex| ComplexJson {
            dims: c.dims().iter().map(|(n, d)| (n.to_string(), *d)).collect(),
            d: c
                .diffs()
                .iter()
                .map(|(n, m)| (n.to_string(), matrix_to_rows(m)))
                .collect(),
        };
        let map_json = |f: &ChainMap, from: &str, to: &str| MapJson {
            from: from.into(),
            to: to.into(),
            components: f
                .comps()
                .iter()
                .map(|(n, m)| (n.to_string(), matrix_to_rows(m)))
                .collect(),
        };
        ProblemFile {
            field: FieldDesc::from_field(p.field()),
            complexes: ComplexesJson {
                a: complex_json(p.a()),
                b: complex_json(p.b()),
                x: complex_json(p.x()),
                y: complex_json(p.y()),
            },
            maps: MapsJson {
                i: map_json(&p.i, "A", "B"),
                alpha: map_json(&p.alpha, "X", "Y"),
                f: map_json(&p.f, "B", "Y"),
                h: map_json(&p.h, "A", "X"),
                homotopy: Some(map_json(&p.homotopy, "Cyl(A)", "Y")),
            },
            metadata,
        }
    }

    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("problem files serialize")
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialize")
    }
}

/// Hex SHA-256 of the canonical serialization of the resolved problem, so
/// formatting and field order in the source file do not matter.
pub fn problem_hash(p: &LiftingProblem, metadata: &Metadata) -> String {
    let canonical = ProblemFile::from_problem(p, metadata.clone()).to_canonical_json();
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Bare component matrices keyed by degree; endpoints are rebuilt by the
/// verifier.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ComponentsJson {
    pub components: BTreeMap<String, Vec<Vec<Value>>>,
}

impl ComponentsJson {
    fn from_map(f: &ChainMap) -> ComponentsJson {
        ComponentsJson {
            components: f
                .comps()
                .iter()
                .map(|(n, m)| (n.to_string(), matrix_to_rows(m)))
                .collect(),
        }
    }

    fn resolve(
        &self,
        source: &ChainComplex,
        target: &ChainComplex,
        field: Field,
        name: &str,
    ) -> Result<ChainMap, Error> {
        let mut comps = BTreeMap::new();
        for (k, rows) in &self.components {
            let ctx = format!("{name}.components.{k}");
            let n = parse_degree(k, &ctx)?;
            comps.insert(n, parse_matrix(target.dim(n), source.dim(n), rows, field, &ctx)?);
        }
        ChainMap::new(source.clone(), target.clone(), comps)
            .map_err(|e| Error::invalid(format!("{name}: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonexistenceTarget {
    /// The HELP system for `(K, g)`.
    Help,
    /// The extension system for `chi` over `Cyl(B)`.
    ChiExtension,
}

/// A re-checkable witness: a solution's matrices, or a Farkas row proving a
/// system inconsistent.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateFile {
    HelpSolution {
        problem_hash: String,
        k: ComponentsJson,
        g: ComponentsJson,
    },
    ChiExtension {
        problem_hash: String,
        /// The auxiliary witness `(J, h_hat)` that pins down `chi`.
        j: ComponentsJson,
        h_hat: ComponentsJson,
        extension: ComponentsJson,
    },
    StrictLift {
        problem_hash: String,
        theta: ComponentsJson,
    },
    Nonexistence {
        problem_hash: String,
        target: NonexistenceTarget,
        /// Present when `target` is the extension system: `chi` is rebuilt
        /// from this witness before re-assembling the system.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        j: Option<ComponentsJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h_hat: Option<ComponentsJson>,
        farkas: Vec<Value>,
    },
}

impl CertificateFile {
    pub fn from_json(text: &str) -> Result<CertificateFile, Error> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("certificate file: {e}")))
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn problem_hash(&self) -> &str {
        match self {
            CertificateFile::HelpSolution { problem_hash, .. }
            | CertificateFile::ChiExtension { problem_hash, .. }
            | CertificateFile::StrictLift { problem_hash, .. }
            | CertificateFile::Nonexistence { problem_hash, .. } => problem_hash,
        }
    }
}

pub fn help_solution_certificate(
    p: &LiftingProblem,
    metadata: &Metadata,
    sol: &HelpSolution,
) -> CertificateFile {
    CertificateFile::HelpSolution {
        problem_hash: problem_hash(p, metadata),
        k: ComponentsJson::from_map(&sol.k),
        g: ComponentsJson::from_map(&sol.g),
    }
}

pub fn chi_extension_certificate(
    pkg: &ChiPackage,
    metadata: &Metadata,
    extension: &ChainMap,
) -> CertificateFile {
    CertificateFile::ChiExtension {
        problem_hash: problem_hash(&pkg.problem, metadata),
        j: ComponentsJson::from_map(&pkg.j_homotopy),
        h_hat: ComponentsJson::from_map(&pkg.h_hat),
        extension: ComponentsJson::from_map(extension),
    }
}

pub fn strict_lift_certificate(
    p: &LiftingProblem,
    metadata: &Metadata,
    theta: &ChainMap,
) -> CertificateFile {
    CertificateFile::StrictLift {
        problem_hash: problem_hash(p, metadata),
        theta: ComponentsJson::from_map(theta),
    }
}

pub fn nonexistence_certificate(
    p: &LiftingProblem,
    metadata: &Metadata,
    target: NonexistenceTarget,
    witness: Option<&ChiPackage>,
    farkas: &[Scalar],
) -> CertificateFile {
    CertificateFile::Nonexistence {
        problem_hash: problem_hash(p, metadata),
        target,
        j: witness.map(|pkg| ComponentsJson::from_map(&pkg.j_homotopy)),
        h_hat: witness.map(|pkg| ComponentsJson::from_map(&pkg.h_hat)),
        farkas: farkas.iter().map(entry_to_value).collect(),
    }
}

/// Re-checks a certificate against a problem file purely by matrix
/// identities (and, for nonexistence, one dot product against the
/// re-assembled system). The solver is never invoked.
pub fn verify_certificate(problem: &ProblemFile, cert: &CertificateFile) -> Result<(), Error> {
    let p = problem.resolve()?;
    let field = p.field();
    let expected = problem_hash(&p, &problem.metadata);
    if cert.problem_hash() != expected {
        return Err(Error::invalid(format!(
            "certificate hash {} does not match problem hash {expected}",
            cert.problem_hash()
        )));
    }
    match cert {
        CertificateFile::HelpSolution { k, g, .. } => {
            let cyl_b = p.cyl_b();
            let k = k.resolve(&cyl_b.object, p.y(), field, "k")?;
            let g = g.resolve(p.b(), p.x(), field, "g")?;
            HelpSolution { k, g }
                .validate_for(&p)
                .map_err(|e| Error::invalid(format!("help witness rejected: {e}")))
        }
        CertificateFile::ChiExtension { j, h_hat, extension, .. } => {
            let pkg = rebuild_chi(&p, j, h_hat)?;
            let ext = extension.resolve(
                &p.cyl_b().object,
                pkg.m_object(),
                field,
                "extension",
            )?;
            if ext.compose(pkg.inclusion())? != pkg.chi {
                return Err(Error::invalid("extension does not restrict to chi"));
            }
            Ok(())
        }
        CertificateFile::StrictLift { theta, .. } => {
            let theta = theta.resolve(p.b(), p.x(), field, "theta")?;
            if theta.compose(&p.i)? != p.h {
                return Err(Error::invalid("strict lift: theta . i != h"));
            }
            if p.alpha.compose(&theta)? != p.f {
                return Err(Error::invalid("strict lift: alpha . theta != f"));
            }
            Ok(())
        }
        CertificateFile::Nonexistence { target, j, h_hat, farkas, .. } => {
            let y: Vec<Scalar> = farkas
                .iter()
                .enumerate()
                .map(|(idx, v)| parse_entry(v, field, &format!("farkas[{idx}]")))
                .collect::<Result<_, _>>()?;
            let builder = match target {
                NonexistenceTarget::Help => help_system(&p).0,
                NonexistenceTarget::ChiExtension => {
                    let (j, h_hat) = match (j, h_hat) {
                        (Some(j), Some(h)) => (j, h),
                        _ => {
                            return Err(Error::invalid(
                                "extension nonexistence requires the (J, h_hat) witness",
                            ))
                        }
                    };
                    let pkg = rebuild_chi(&p, j, h_hat)?;
                    extension_system(pkg.inclusion(), &pkg.chi).0
                }
            };
            if builder.check_farkas(&y) {
                Ok(())
            } else {
                Err(Error::invalid("farkas row does not refute the system"))
            }
        }
    }
}

fn rebuild_chi(
    p: &LiftingProblem,
    j: &ComponentsJson,
    h_hat: &ComponentsJson,
) -> Result<ChiPackage, Error> {
    let field = p.field();
    let cyl_b = p.cyl_b();
    let j = j.resolve(&cyl_b.object, p.y(), field, "j")?;
    // h_hat lands in F(alpha), which is rebuilt deterministically.
    let fac = crate::constructions::factor_cof_afib(&p.alpha)?;
    let h_hat = h_hat.resolve(p.b(), &fac.mid, field, "h_hat")?;
    build_chi_from_witness(p, j, h_hat)
}
