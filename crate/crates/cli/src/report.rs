//! JSON renderings of library results.

use serde_json::{json, Value};

use valdef::decomp::{flag_of, FlagDecomposition};
use valdef::deformation::{Deformation, GradedSystem, MaxRankReport};
use valdef::io::{cochain_to_entries, deformation_to_file, rational_strings, series_lit};
use valdef::nonassoc::IdentityCheck;
use valdef::poisson::PoissonWitness;
use valdef::rational::{format_rational, Rational};
use valdef::rigidity::{RigidityReport, ZeroRootReport};
use valdef::series::TruncSeries;
use valdef::{Cochain, Error};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals(v: &[Rational]) -> Value {
    json!(rational_strings(v))
}

pub fn series(s: &TruncSeries) -> Value {
    json!(series_lit(s))
}

pub fn cochain(c: &Cochain) -> Value {
    json!(cochain_to_entries(c))
}

pub fn decomposition(d: &FlagDecomposition) -> Value {
    let cumulative = d.cumulative_coefficients();
    let steps: Vec<Value> = d
        .steps()
        .iter()
        .zip(&cumulative)
        .map(|(s, c)| {
            json!({
                "coeff": series(&s.coeff),
                "cumulative": series(c),
                "vector": rationals(&s.vector),
                "pivot": s.pivot,
            })
        })
        .collect();
    let flag: Vec<Value> = flag_of(d)
        .chain()
        .iter()
        .map(|e| {
            json!({
                "dim": e.rank(),
                "basis": e.rows.iter().map(|r| rationals(r)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "h": d.len(), "cap": d.cap(), "steps": steps, "flag": flag })
}

pub fn deformation(d: &Deformation) -> Value {
    json!(deformation_to_file(d))
}

/// Nonzero residual orders, with the first nonzero value of the lowest one.
pub fn residuals<'a>(
    res: impl IntoIterator<Item = (&'a usize, &'a Cochain)>,
) -> (Vec<usize>, Option<Value>) {
    let mut orders = Vec::new();
    let mut witness = None;
    for (&order, c) in res {
        if witness.is_none() {
            if let Some((args, value)) = c.nonzero_values().into_iter().next() {
                witness = Some(json!({ "order": order, "args": args, "value": rationals(&value) }));
            }
        }
        orders.push(order);
    }
    (orders, witness)
}

pub fn graded(sys: &GradedSystem) -> Value {
    let (orders, witness) = residuals(&sys.residuals);
    let relations: Vec<Value> = sys
        .relations
        .iter()
        .map(|r| {
            json!({
                "term": r.term,
                "delta_in_span": r.delta_in_span,
                "coefficients": r.coefficients.as_ref().map(|cs| cs
                    .iter()
                    .map(|c| json!({ "i": c.i, "j": c.j, "value": rational(&c.value) }))
                    .collect::<Vec<_>>()),
                "brackets": r.brackets.iter()
                    .map(|b| json!({ "i": b.i, "in_span": b.in_span, "determined": b.determined }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "valid": sys.valid(),
        "holds": sys.holds(),
        "normalized": sys.normalized,
        "residual_orders": orders,
        "residual_witness": witness,
        "terms": sys.terms.iter()
            .map(|t| json!({ "coeff": series(&t.coeff), "cochain": cochain(&t.phi) }))
            .collect::<Vec<_>>(),
        "relations": relations,
    })
}

pub fn max_rank(r: &MaxRankReport) -> Value {
    json!({
        "terms": r.terms,
        "dim": r.dim,
        "bound": r.bound,
        "is_maximal": r.is_maximal,
        "coboundaries_in_span": r.coboundaries_in_span,
        "first_outside": r.first_outside,
    })
}

pub fn zero_root(z: &ZeroRootReport) -> Value {
    json!({
        "roots": rationals(&z.roots.roots),
        "zero_is_root": z.roots.zero_is_root,
        "dim_H2_trivial": z.dim_h2_trivial,
        "consistent": z.consistent,
        "certificate": z.certificate.as_ref().map(|c| json!({
            "torus_index": c.torus_index,
            "zero_root_index": c.zero_root_index,
            "theta": cochain(&c.theta),
            "closed": c.closed,
            "exact": c.exact,
        })),
    })
}

pub fn rigidity(r: &RigidityReport) -> Value {
    json!({
        "verdict": r.verdict.describe(),
        "rule": r.rule.name(),
        "rank": r.rank,
        "roots": r.roots.as_ref().map(|x| rationals(&x.roots)),
        "dim_H2_trivial": r.dim_h2_trivial,
        "note": r.note,
    })
}

pub fn identity(c: &IdentityCheck) -> Value {
    json!({
        "holds": c.holds(),
        "witness": c.witness.as_ref().map(|w| json!({ "triple": w.triple, "identity": w.identity })),
    })
}

pub fn poisson_witness(w: &Option<PoissonWitness>) -> Value {
    json!({
        "holds": w.is_none(),
        "witness": w.as_ref().map(|w| json!({ "axiom": w.axiom, "args": w.args })),
    })
}

/// Stable snake-case name of an error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotAUnit => "not_a_unit",
        Error::NotDivisible { .. } => "not_divisible",
        Error::ZeroDivisor => "zero_divisor",
        Error::PrecisionExhausted(_) => "precision_exhausted",
        Error::NotInMaximalIdeal(_) => "not_in_maximal_ideal",
        Error::ZeroVector => "zero_vector",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::NonIncreasingLieKey { .. } => "non_increasing_lie_key",
        Error::NotAntisymmetric { .. } => "not_antisymmetric",
        Error::NonIncreasingArgs(_) => "non_increasing_args",
        Error::WrongKind { .. } => "wrong_kind",
        Error::UnsupportedDegree(_) => "unsupported_degree",
        Error::InvalidDeformation(_) => "invalid_deformation",
        Error::NotAdapted { .. } => "not_adapted",
        Error::NotRankOne(_) => "not_rank_one",
        Error::InvalidTorus(_) => "invalid_torus",
        Error::InvalidPoisson(_) => "invalid_poisson",
        Error::LinearlyDependent => "linearly_dependent",
        Error::Singular => "singular",
        Error::InvalidPolynomial(_) => "invalid_polynomial",
        Error::Parse(_) => "parse",
    }
}
