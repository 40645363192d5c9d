//! JSON file formats.
//!
//! Rationals are written as strings `"p"` or `"p/q"`; integers are also
//! accepted on input. A series literal is the list of its coefficients from
//! `t^0` up; it is read as an exact polynomial and zero-padded or truncated
//! to the working cap.
//!
//! * vector: `{"cap": N, "components": [literal, ...]}`
//! * algebra: `{"dim": n, "kind": "lie" | "assoc", "basis": [names],
//!   "table": [{"i", "j", "out": [{"k", "c"}]}], "torus": [indices]}`;
//!   lie tables list `i < j` only
//! * poisson: `{"dim": n, "kind": "poisson", "assoc_table": [...], "bracket_table": [...]}`
//! * deformation: `{"base": algebra or path, "cap": N, "terms": [{"coeff": literal, "cochain": [entry]}]}`
//!   where an entry is `{"args": [i, j], "out": [{"k", "c"}]}` or `{"i", "j", "out"}`
//! * gauge: `{"cap": N, "h": [[literal, ...], ...]}` for `f = Id + h`, `h[row][col]`

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, AlgebraStructure, Cochain, CochainTarget};
use crate::deformation::{Deformation, DeformationTerm, Gauge};
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::rational::{format_rational, int, parse_rational, Rational};
use crate::rigidity::TorusData;
use crate::series::{SeriesVector, TruncSeries};

/// Cap used when neither the file nor the caller fixes one.
pub const DEFAULT_CAP: usize = 8;

/// A rational as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalLit {
    Int(i64),
    Str(String),
}

impl RationalLit {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            RationalLit::Int(n) => Ok(int(*n)),
            RationalLit::Str(s) => parse_rational(s),
        }
    }
}

impl From<&Rational> for RationalLit {
    fn from(r: &Rational) -> Self {
        RationalLit::Str(format_rational(r))
    }
}

pub type SeriesLit = Vec<RationalLit>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutEntry {
    pub k: usize,
    pub c: RationalLit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub out: Vec<OutEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc_table: Option<Vec<TableEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_table: Option<Vec<TableEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    pub components: Vec<SeriesLit>,
}

/// One value of a cochain on an increasing argument tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub args: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    /// Adjoint values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<Vec<OutEntry>>,
    /// Trivial (scalar) value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<RationalLit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coeff: SeriesLit,
    pub cochain: Vec<CochainEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    Path(String),
    Inline(AlgebraFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
    pub base: BaseRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default)]
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    pub h: Vec<Vec<SeriesLit>>,
}

/// An algebra file after validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedAlgebra {
    Plain {
        algebra: AlgebraStructure,
        torus: Option<TorusData>,
    },
    Poisson(PoissonStructure),
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// The cap a command works at: the requested cap, else the file cap, else
/// [`DEFAULT_CAP`]. Asking for more precision than the file declares is an
/// error, since the higher coefficients are unknown.
pub fn effective_cap(requested: Option<usize>, file: Option<usize>) -> Result<usize> {
    match (requested, file) {
        (Some(a), Some(b)) if a > b => Err(Error::PrecisionExhausted(format!(
            "requested cap {a} exceeds the input's cap {b}"
        ))),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Ok(DEFAULT_CAP),
    }
}

pub fn parse_series(lit: &[RationalLit], cap: usize) -> Result<TruncSeries> {
    let coeffs: Vec<Rational> = lit.iter().map(RationalLit::parse).collect::<Result<_>>()?;
    Ok(TruncSeries::from_poly(&coeffs, cap))
}

pub fn series_lit(s: &TruncSeries) -> SeriesLit {
    s.coeffs().iter().map(RationalLit::from).collect()
}

pub fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_vector(text: &str, requested_cap: Option<usize>) -> Result<SeriesVector> {
    let file: VectorFile = parse_json(text)?;
    if file.components.is_empty() {
        return Err(Error::Parse("a vector needs at least one component".into()));
    }
    let cap = effective_cap(requested_cap, file.cap)?;
    let comps = file
        .components
        .iter()
        .map(|c| parse_series(c, cap))
        .collect::<Result<_>>()?;
    Ok(SeriesVector::new(comps))
}

pub fn vector_to_file(v: &SeriesVector) -> VectorFile {
    VectorFile {
        cap: Some(v.cap()),
        components: v.components().iter().map(series_lit).collect(),
    }
}

fn table_entries(table: &[TableEntry], dim: usize) -> Result<Vec<(usize, usize, usize, Rational)>> {
    let mut out = Vec::new();
    for e in table {
        for o in &e.out {
            if o.k >= dim {
                return Err(Error::IndexOutOfRange { index: o.k, dim });
            }
            out.push((e.i, e.j, o.k, o.c.parse()?));
        }
    }
    Ok(out)
}

fn entries_to_table(a: &AlgebraStructure) -> Vec<TableEntry> {
    a.entries()
        .into_iter()
        .map(|(i, j, out)| TableEntry {
            i,
            j,
            out: out
                .iter()
                .map(|(k, c)| OutEntry { k: *k, c: c.into() })
                .collect(),
        })
        .collect()
}

fn parse_kind(kind: &str) -> Result<AlgebraKind> {
    match kind {
        "lie" => Ok(AlgebraKind::Lie),
        "assoc" => Ok(AlgebraKind::Assoc),
        other => Err(Error::Parse(format!(
            "unknown algebra kind {other:?} (expected lie, assoc or poisson)"
        ))),
    }
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<LoadedAlgebra> {
    let n = file.dim;
    if file.kind == "poisson" {
        if file.table.is_some() || file.torus.is_some() {
            return Err(Error::Parse(
                "poisson files use assoc_table and bracket_table only".into(),
            ));
        }
        let need = |t: &Option<Vec<TableEntry>>, name: &str| {
            t.clone()
                .ok_or_else(|| Error::Parse(format!("poisson file is missing {name}")))
        };
        let assoc = AlgebraStructure::new(
            AlgebraKind::Assoc,
            n,
            table_entries(&need(&file.assoc_table, "assoc_table")?, n)?,
        )?;
        let bracket = AlgebraStructure::new(
            AlgebraKind::Lie,
            n,
            table_entries(&need(&file.bracket_table, "bracket_table")?, n)?,
        )?;
        return Ok(LoadedAlgebra::Poisson(PoissonStructure::new(
            assoc, bracket,
        )?));
    }
    if file.assoc_table.is_some() || file.bracket_table.is_some() {
        return Err(Error::Parse(
            "assoc_table and bracket_table belong to poisson files".into(),
        ));
    }
    let kind = parse_kind(&file.kind)?;
    let table = file.table.as_deref().unwrap_or_default();
    let mut algebra = AlgebraStructure::new(kind, n, table_entries(table, n)?)?;
    if let Some(basis) = &file.basis {
        algebra = algebra.with_labels(basis.clone())?;
    }
    let torus = file
        .torus
        .clone()
        .map(|t| TorusData::new(n, t))
        .transpose()?;
    Ok(LoadedAlgebra::Plain { algebra, torus })
}

pub fn parse_algebra(text: &str) -> Result<LoadedAlgebra> {
    algebra_from_file(&parse_json(text)?)
}

/// Loads a lie or assoc algebra, rejecting poisson files.
pub fn parse_plain_algebra(text: &str) -> Result<(AlgebraStructure, Option<TorusData>)> {
    match parse_algebra(text)? {
        LoadedAlgebra::Plain { algebra, torus } => Ok((algebra, torus)),
        LoadedAlgebra::Poisson(_) => Err(Error::Parse(
            "expected a lie or assoc algebra, got a poisson file".into(),
        )),
    }
}

pub fn parse_poisson(text: &str) -> Result<PoissonStructure> {
    match parse_algebra(text)? {
        LoadedAlgebra::Poisson(p) => Ok(p),
        LoadedAlgebra::Plain { .. } => Err(Error::Parse("expected a poisson file".into())),
    }
}

pub fn algebra_to_file(a: &AlgebraStructure, torus: Option<&TorusData>) -> AlgebraFile {
    AlgebraFile {
        dim: a.dim(),
        kind: a.kind().name().to_string(),
        basis: a.labels().map(<[String]>::to_vec),
        table: Some(entries_to_table(a)),
        torus: torus.map(|t| t.torus().to_vec()),
        assoc_table: None,
        bracket_table: None,
    }
}

pub fn poisson_to_file(p: &PoissonStructure) -> AlgebraFile {
    AlgebraFile {
        dim: p.dim(),
        kind: "poisson".to_string(),
        basis: None,
        table: None,
        torus: None,
        assoc_table: Some(entries_to_table(p.assoc())),
        bracket_table: Some(entries_to_table(p.bracket())),
    }
}

/// Builds a cochain of the given degree and target from file entries.
pub fn cochain_from_entries(
    entries: &[CochainEntry],
    dim: usize,
    degree: usize,
    target: CochainTarget,
) -> Result<Cochain> {
    let mut c = Cochain::zero(dim, degree, target);
    for e in entries {
        let args = match (&e.args, e.i, e.j) {
            (Some(a), None, None) => a.clone(),
            (None, Some(i), Some(j)) => vec![i, j],
            _ => {
                return Err(Error::Parse(
                    "cochain entry needs either \"args\" or both \"i\" and \"j\"".into(),
                ))
            }
        };
        let value = match (target, &e.out, &e.c) {
            (CochainTarget::Adjoint, Some(out), None) => {
                let mut value = crate::rational::zeros(dim);
                for o in out {
                    if o.k >= dim {
                        return Err(Error::IndexOutOfRange { index: o.k, dim });
                    }
                    value[o.k] += o.c.parse()?;
                }
                value
            }
            (CochainTarget::Trivial, None, Some(c)) => vec![c.parse()?],
            (CochainTarget::Adjoint, ..) => {
                return Err(Error::Parse("adjoint cochain entries take \"out\"".into()))
            }
            (CochainTarget::Trivial, ..) => {
                return Err(Error::Parse("trivial cochain entries take \"c\"".into()))
            }
        };
        let mut current = Cochain::zero(dim, degree, target);
        current.set(&args, &value)?;
        c = c.add(&current);
    }
    Ok(c)
}

/// A standalone cochain: `{"degree": p, "target": "adjoint" | "trivial", "values": [entry]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub degree: usize,
    pub target: String,
    #[serde(default)]
    pub values: Vec<CochainEntry>,
}

pub fn parse_target(name: &str) -> Result<CochainTarget> {
    match name {
        "adjoint" => Ok(CochainTarget::Adjoint),
        "trivial" => Ok(CochainTarget::Trivial),
        other => Err(Error::Parse(format!(
            "unknown cochain target {other:?} (expected adjoint or trivial)"
        ))),
    }
}

pub fn parse_cochain(text: &str, dim: usize) -> Result<Cochain> {
    let file: CochainFile = parse_json(text)?;
    cochain_from_entries(&file.values, dim, file.degree, parse_target(&file.target)?)
}

pub fn cochain_to_file(c: &Cochain) -> CochainFile {
    CochainFile {
        degree: c.degree(),
        target: c.target().name().to_string(),
        values: cochain_to_entries(c),
    }
}

pub fn cochain_to_entries(c: &Cochain) -> Vec<CochainEntry> {
    c.nonzero_values()
        .into_iter()
        .map(|(args, v)| {
            let (out, c) = match c.target() {
                CochainTarget::Adjoint => (
                    Some(
                        v.iter()
                            .enumerate()
                            .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                            .map(|(k, x)| OutEntry { k, c: x.into() })
                            .collect(),
                    ),
                    None,
                ),
                CochainTarget::Trivial => (None, Some((&v[0]).into())),
            };
            CochainEntry {
                args: Some(args),
                i: None,
                j: None,
                out,
                c,
            }
        })
        .collect()
}

/// Loads a deformation; a string `base` is a path relative to `dir`.
pub fn parse_deformation(
    text: &str,
    dir: Option<&Path>,
    requested_cap: Option<usize>,
) -> Result<Deformation> {
    let file: DeformationFile = parse_json(text)?;
    let base_file: AlgebraFile = match &file.base {
        BaseRef::Inline(a) => a.clone(),
        BaseRef::Path(p) => {
            let path: PathBuf = match dir {
                Some(d) => d.join(p),
                None => PathBuf::from(p),
            };
            parse_json(&read_text(&path)?)?
        }
    };
    let base = match algebra_from_file(&base_file)? {
        LoadedAlgebra::Plain { algebra, .. } => algebra,
        LoadedAlgebra::Poisson(_) => {
            return Err(Error::Parse(
                "deformation base must be a lie algebra".into(),
            ))
        }
    };
    let cap = effective_cap(requested_cap, file.cap)?;
    let n = base.dim();
    let terms = file
        .terms
        .iter()
        .map(|t| {
            Ok(DeformationTerm {
                coeff: parse_series(&t.coeff, cap)?,
                phi: cochain_from_entries(&t.cochain, n, 2, CochainTarget::Adjoint)?,
            })
        })
        .collect::<Result<_>>()?;
    Deformation::new(base, cap, terms)
}

pub fn deformation_to_file(d: &Deformation) -> DeformationFile {
    DeformationFile {
        base: BaseRef::Inline(algebra_to_file(d.base(), None)),
        cap: Some(d.cap()),
        terms: d
            .terms()
            .iter()
            .map(|t| TermFile {
                coeff: series_lit(&t.coeff),
                cochain: cochain_to_entries(&t.phi),
            })
            .collect(),
    }
}

pub fn parse_gauge(text: &str, requested_cap: Option<usize>) -> Result<Gauge> {
    let file: GaugeFile = parse_json(text)?;
    let cap = effective_cap(requested_cap, file.cap)?;
    let h = file
        .h
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_series(s, cap))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Gauge::new(h)
}

pub fn gauge_to_file(g: &Gauge) -> GaugeFile {
    GaugeFile {
        cap: Some(g.cap()),
        h: g.h()
            .iter()
            .map(|row| row.iter().map(series_lit).collect())
            .collect(),
    }
}

/// Parses `"1,1/2,-3"` into polynomial coefficients.
pub fn parse_poly(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("file types serialize")
}
