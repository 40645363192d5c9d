//! Valued deformations of a Lie algebra over the capped ring `Q[[t]]`.
//!
//! A deformation is the base bracket `mu` plus a perturbation in `g ⊗ m`,
//! written as a list of terms `c_i phi_i` with scalar series `c_i` and
//! adjoint 2-cochains `phi_i`. The law is valid at cap `N` when
//! `mu_t o mu_t` vanishes modulo `t^(N+1)`.
//!
//! In *decomposed form* the `phi_i` are linearly independent and the
//! valuations of the `c_i` strictly increase; this is what
//! [`decompose_deformation`] produces (the `c_i` are cumulative products
//! `b_1 ... b_i` of the flag decomposition of the flattened perturbation).
//! In that form validity forces `d phi_1 = 0` and
//! `d phi_k ∈ span{[phi_a, phi_b] : a <= b < k}`, which is what
//! [`first_term_is_cocycle`], [`graded_system`] and [`max_rank_check`] verify.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{binomial, AlgebraKind, AlgebraStructure, Cochain, CochainTarget};
use crate::decomp::decompose;
use crate::error::{Error, Result};
use crate::gerstenhaber::{circle, coboundary, super_bracket};
use crate::linalg::{self, Matrix};
use crate::rational::{vec_is_zero, zeros, Rational};
use crate::series::{SeriesVector, TruncSeries};

/// One summand `coeff * phi` of the perturbation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationTerm {
    pub coeff: TruncSeries,
    pub phi: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    base: AlgebraStructure,
    cap: usize,
    terms: Vec<DeformationTerm>,
}

fn check_two_cochain(phi: &Cochain, dim: usize) -> Result<()> {
    if phi.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: phi.dim(),
        });
    }
    if phi.degree() != 2 {
        return Err(Error::UnsupportedDegree(phi.degree()));
    }
    if phi.target() != CochainTarget::Adjoint {
        return Err(Error::WrongKind {
            expected: "an adjoint-valued cochain",
        });
    }
    Ok(())
}

impl Deformation {
    /// Checks the base is Lie, every `phi` is an adjoint 2-cochain and every
    /// coefficient lies in `m`. Coefficients are truncated to `cap`.
    pub fn new(
        base: AlgebraStructure,
        cap: usize,
        mut terms: Vec<DeformationTerm>,
    ) -> Result<Self> {
        if base.kind() != AlgebraKind::Lie {
            return Err(Error::WrongKind {
                expected: "a lie algebra",
            });
        }
        for (i, term) in terms.iter_mut().enumerate() {
            check_two_cochain(&term.phi, base.dim())?;
            if term.coeff.cap() < cap {
                return Err(Error::PrecisionExhausted(format!(
                    "term {i} coefficient is known to t^{} but the deformation cap is {cap}",
                    term.coeff.cap()
                )));
            }
            term.coeff = term.coeff.truncate(cap);
            if !term.coeff.in_maximal_ideal() {
                return Err(Error::NotInMaximalIdeal(i));
            }
        }
        Ok(Self { base, cap, terms })
    }

    /// The base algebra itself, with no perturbation.
    pub fn trivial(base: AlgebraStructure, cap: usize) -> Result<Self> {
        Self::new(base, cap, Vec::new())
    }

    pub fn base(&self) -> &AlgebraStructure {
        &self.base
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &[DeformationTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same deformation known only to `t^cap` (clamped to the current cap).
    pub fn truncate(&self, cap: usize) -> Self {
        let cap = cap.min(self.cap);
        let terms = self
            .terms
            .iter()
            .map(|t| DeformationTerm {
                coeff: t.coeff.truncate(cap),
                phi: t.phi.clone(),
            })
            .collect();
        Self {
            base: self.base.clone(),
            cap,
            terms,
        }
    }

    /// Independent cochains and strictly increasing, determined valuations.
    pub fn is_decomposed(&self) -> bool {
        let mut last = None;
        for t in &self.terms {
            match t.coeff.valuation() {
                Some(v) if last.is_none_or(|l| v > l) => last = Some(v),
                _ => return false,
            }
        }
        let flats: Vec<Vec<Rational>> = self.terms.iter().map(|t| t.phi.flat().to_vec()).collect();
        linalg::rank(&flats) == self.terms.len()
    }

    /// `sum c_i phi_i` by powers of `t`.
    pub fn perturbation(&self) -> Perturbation {
        let n = self.base.dim();
        let mut orders = vec![Cochain::zero(n, 2, CochainTarget::Adjoint); self.cap + 1];
        for t in &self.terms {
            for (r, c) in t.coeff.coeffs().iter().enumerate() {
                orders[r].add_scaled(c, &t.phi);
            }
        }
        Perturbation { dim: n, orders }
    }

    /// Coefficients `M_0 = mu, M_1, ..., M_cap` of the deformed bracket.
    pub fn law_orders(&self) -> Vec<Cochain> {
        let mut orders = self.perturbation().orders;
        orders[0] = orders[0].add(&Cochain::from_algebra(&self.base));
        orders
    }

    /// Decomposed form of the same law.
    pub fn decomposed(&self) -> Result<Deformation> {
        decompose_deformation(&self.base, &self.perturbation())
    }

    fn normal_form(&self) -> Result<Deformation> {
        if self.is_decomposed() {
            Ok(self.clone())
        } else {
            self.decomposed()
        }
    }
}

/// A series-valued 2-cochain in `C^2(g, g) ⊗ Q[[t]]`, stored by powers of `t`.
///
/// Flattened, it is a vector of `N = n^2 (n-1) / 2` series ordered by
/// increasing pair `(i < j)` and then output index `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    dim: usize,
    orders: Vec<Cochain>,
}

impl Perturbation {
    pub fn zero(dim: usize, cap: usize) -> Self {
        Self {
            dim,
            orders: vec![Cochain::zero(dim, 2, CochainTarget::Adjoint); cap + 1],
        }
    }

    /// `orders[r]` is the coefficient of `t^r`; the cap is `orders.len() - 1`.
    pub fn from_orders(dim: usize, orders: Vec<Cochain>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::PrecisionExhausted(
                "a perturbation needs at least the t^0 coefficient".into(),
            ));
        }
        for c in &orders {
            check_two_cochain(c, dim)?;
        }
        Ok(Self { dim, orders })
    }

    /// Inverse of [`Perturbation::to_series`].
    pub fn from_series(dim: usize, series: &SeriesVector) -> Result<Self> {
        let len = binomial(dim, 2) * dim;
        if series.dim() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                got: series.dim(),
            });
        }
        let orders = (0..=series.cap())
            .map(|r| {
                Cochain::from_flat(dim, 2, CochainTarget::Adjoint, series.coefficient_vector(r))
            })
            .collect::<Result<_>>()?;
        Ok(Self { dim, orders })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cap(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn order(&self, r: usize) -> &Cochain {
        &self.orders[r]
    }

    pub fn orders(&self) -> &[Cochain] {
        &self.orders
    }

    pub fn is_zero(&self) -> bool {
        self.orders.iter().all(Cochain::is_zero)
    }

    /// The flattened vector of `N` series.
    pub fn to_series(&self) -> Vec<TruncSeries> {
        let len = binomial(self.dim, 2) * self.dim;
        (0..len)
            .map(|c| TruncSeries::new(self.orders.iter().map(|o| o.flat()[c].clone()).collect()))
            .collect()
    }
}

/// `[x, y]_t = [x, y] + sum c_i phi_i(x, y)` as a vector of series.
pub fn deformed_bracket(d: &Deformation, x: &[Rational], y: &[Rational]) -> Result<SeriesVector> {
    let n = d.base.dim();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    let values: Vec<Vec<Rational>> = d
        .law_orders()
        .iter()
        .map(|m| m.eval(&[x.to_vec(), y.to_vec()]))
        .collect::<Result<_>>()?;
    let components = (0..n)
        .map(|k| TruncSeries::new(values.iter().map(|v| v[k].clone()).collect()))
        .collect();
    Ok(SeriesVector::new(components))
}

/// Nonzero coefficients of `mu_t o mu_t`, keyed by power of `t`, up to the cap.
///
/// Empty exactly when the deformation is a Lie algebra over the capped ring.
pub fn jacobi_residual(d: &Deformation) -> BTreeMap<usize, Cochain> {
    law_residual(&d.law_orders())
}

fn law_residual(m: &[Cochain]) -> BTreeMap<usize, Cochain> {
    let n = m[0].dim();
    let mut out = BTreeMap::new();
    for s in 0..m.len() {
        let mut acc = Cochain::zero(n, 3, CochainTarget::Adjoint);
        for a in 0..=s {
            if m[a].is_zero() || m[s - a].is_zero() {
                continue;
            }
            acc = acc
                .add(&circle(&m[a], &m[s - a]).expect("law coefficients are adjoint 2-cochains"));
        }
        if !acc.is_zero() {
            out.insert(s, acc);
        }
    }
    out
}

fn require_valid(d: &Deformation) -> Result<()> {
    match jacobi_residual(d).keys().next() {
        Some(&order) => Err(Error::InvalidDeformation(order)),
        None => Ok(()),
    }
}

/// Decomposes a raw perturbation into decomposed form.
///
/// Term `i` has coefficient `b_1 ... b_i` and cochain `V_i` from the flag
/// decomposition of the flattened perturbation.
pub fn decompose_deformation(base: &AlgebraStructure, raw: &Perturbation) -> Result<Deformation> {
    let n = base.dim();
    if raw.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: raw.dim(),
        });
    }
    if raw.is_zero() {
        return Deformation::trivial(base.clone(), raw.cap());
    }
    let fd = decompose(&SeriesVector::new(raw.to_series()))?;
    let terms = fd
        .cumulative_coefficients()
        .into_iter()
        .zip(fd.vectors())
        .map(|(coeff, v)| {
            Ok(DeformationTerm {
                coeff,
                phi: Cochain::from_flat(n, 2, CochainTarget::Adjoint, v)?,
            })
        })
        .collect::<Result<_>>()?;
    Deformation::new(base.clone(), fd.cap(), terms)
}

/// Whether the leading cochain of a valid deformation is a 2-cocycle.
///
/// Inputs not in decomposed form are decomposed first; a zero perturbation
/// has no first term and passes vacuously.
pub fn first_term_is_cocycle(d: &Deformation) -> Result<bool> {
    require_valid(d)?;
    let nf = d.normal_form()?;
    match nf.terms.first() {
        None => Ok(true),
        Some(t) => Ok(coboundary(&nf.base, &t.phi)?.is_zero()),
    }
}

/// Coefficient `a_ij` of `[phi_i, phi_j]` in a span relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCoefficient {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
}

/// Whether `[phi_i, phi_k]` lies in the span of the earlier brackets.
///
/// `determined` is false when `val(c_i) + val(c_k)` exceeds the cap, so the
/// order at which the bracket enters the Jacobi equation is not visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketMembership {
    pub i: usize,
    pub in_span: bool,
    pub determined: bool,
}

/// Relations for term `k` (0-based, `k >= 1`) against
/// `S_k = span{[phi_a, phi_b] : a <= b < k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRelation {
    pub term: usize,
    pub delta_in_span: bool,
    /// One solution of `d phi_k = sum a_ab [phi_a, phi_b]`, when it exists.
    pub coefficients: Option<Vec<SpanCoefficient>>,
    pub brackets: Vec<BracketMembership>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSystem {
    pub cap: usize,
    /// Nonzero coefficients of `mu_t o mu_t`.
    pub residuals: BTreeMap<usize, Cochain>,
    /// True when the input had to be brought to decomposed form first.
    pub normalized: bool,
    pub terms: Vec<DeformationTerm>,
    pub relations: Vec<GradedRelation>,
}

impl GradedSystem {
    pub fn valid(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Valid, and every `d phi_k` lies in its span.
    pub fn holds(&self) -> bool {
        self.valid() && self.relations.iter().all(|r| r.delta_in_span)
    }
}

fn bracket_table(phis: &[&Cochain]) -> Result<BTreeMap<(usize, usize), Cochain>> {
    let mut out = BTreeMap::new();
    for a in 0..phis.len() {
        for b in a..phis.len() {
            out.insert((a, b), super_bracket(phis[a], phis[b])?);
        }
    }
    Ok(out)
}

/// Span memberships of the graded deformation equations.
///
/// The verdicts are computed for any input; invalid inputs are reported
/// through [`GradedSystem::residuals`] rather than rejected, so a broken
/// deformation shows which relation fails.
pub fn graded_system(d: &Deformation) -> Result<GradedSystem> {
    let normalized = !d.is_decomposed();
    let nf = if normalized {
        d.decomposed()?
    } else {
        d.clone()
    };
    let phis: Vec<&Cochain> = nf.terms.iter().map(|t| &t.phi).collect();
    let vals: Vec<usize> = nf.terms.iter().map(|t| t.coeff.valuation_bound()).collect();
    let brackets = bracket_table(&phis)?;
    let mut relations = Vec::new();
    for k in 1..phis.len() {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        let gens: Vec<Vec<Rational>> = pairs.iter().map(|p| brackets[p].flat().to_vec()).collect();
        let delta = coboundary(&nf.base, phis[k])?;
        let coefficients = linalg::solve_in_span(&gens, delta.flat()).map(|c| {
            pairs
                .iter()
                .zip(c)
                .filter(|(_, v)| !v.is_zero())
                .map(|(&(i, j), value)| SpanCoefficient { i, j, value })
                .collect::<Vec<_>>()
        });
        let brackets = (0..k)
            .map(|i| BracketMembership {
                i,
                in_span: linalg::in_span(&gens, brackets[&(i, k)].flat()),
                determined: vals[i] + vals[k] <= nf.cap,
            })
            .collect();
        relations.push(GradedRelation {
            term: k,
            delta_in_span: coefficients.is_some(),
            coefficients,
            brackets,
        });
    }
    Ok(GradedSystem {
        cap: nf.cap,
        residuals: jacobi_residual(&nf),
        normalized,
        terms: nf.terms,
        relations,
    })
}

/// Dimension of `V = span{[phi_i, phi_j], [mu, phi_i] : i, j < k-1}` for `k` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxRankReport {
    pub terms: usize,
    pub dim: usize,
    /// `k (k-1) / 2`.
    pub bound: usize,
    pub is_maximal: bool,
    /// Every `[mu, phi_i]`, including the last, lies in `span{[phi_a, phi_b] : a, b < k-1}`.
    pub coboundaries_in_span: bool,
    /// First term whose coboundary is outside that span.
    pub first_outside: Option<usize>,
}

/// Rank bound of the graded system; inputs are brought to decomposed form.
pub fn max_rank_check(d: &Deformation) -> Result<MaxRankReport> {
    let nf = d.normal_form()?;
    let k = nf.terms.len();
    let bound = k * k.saturating_sub(1) / 2;
    let phis: Vec<&Cochain> = nf.terms.iter().map(|t| &t.phi).collect();
    let early = k.saturating_sub(1);
    let brackets = bracket_table(&phis[..early])?;
    let bracket_rows: Vec<Vec<Rational>> = brackets.values().map(|c| c.flat().to_vec()).collect();
    let deltas: Vec<Vec<Rational>> = phis
        .iter()
        .map(|p| coboundary(&nf.base, p).map(Cochain::into_flat))
        .collect::<Result<_>>()?;
    let mut rows = bracket_rows.clone();
    rows.extend(deltas[..early].iter().cloned());
    let dim = linalg::rank(&rows);
    let first_outside = deltas
        .iter()
        .position(|dl| !linalg::in_span(&bracket_rows, dl));
    Ok(MaxRankReport {
        terms: k,
        dim,
        bound,
        is_maximal: dim == bound,
        coboundaries_in_span: first_outside.is_none(),
        first_outside,
    })
}

/// A change of basis `f = Id + h` over the capped ring, `h` with entries in `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauge {
    /// `h[row][col]`.
    h: Vec<Vec<TruncSeries>>,
}

impl Gauge {
    /// Entries are truncated to the smallest cap among them.
    pub fn new(h: Vec<Vec<TruncSeries>>) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        for row in &h {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for (idx, s) in h.iter().flatten().enumerate() {
            if !s.in_maximal_ideal() {
                return Err(Error::NotInMaximalIdeal(idx));
            }
        }
        let cap = h.iter().flatten().map(TruncSeries::cap).min().unwrap();
        let h = h
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.truncate(cap)).collect())
            .collect();
        Ok(Self { h })
    }

    pub fn identity(dim: usize, cap: usize) -> Self {
        Self {
            h: vec![vec![TruncSeries::zero(cap); dim]; dim],
        }
    }

    /// `f = Id + t N` for a rational matrix `N`.
    pub fn linear(n: &Matrix, cap: usize) -> Result<Self> {
        let h = n
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| TruncSeries::monomial(c.clone(), 1, cap))
                    .collect()
            })
            .collect();
        Self::new(h)
    }

    fn from_orders(orders: &[Matrix]) -> Self {
        let n = orders[0].len();
        let h = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| TruncSeries::new(orders.iter().map(|m| m[i][j].clone()).collect()))
                    .collect()
            })
            .collect();
        Self { h }
    }

    pub fn dim(&self) -> usize {
        self.h.len()
    }

    pub fn cap(&self) -> usize {
        self.h[0][0].cap()
    }

    pub fn h(&self) -> &[Vec<TruncSeries>] {
        &self.h
    }

    /// Coefficient matrices of `h`: `H_0 = 0, H_1, ..., H_cap`.
    pub fn h_orders(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..=self.cap())
            .map(|r| {
                (0..n)
                    .map(|i| (0..n).map(|j| self.h[i][j].coeff(r).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// `f^-1 = Id + h'` with `h' = sum_{j >= 1} (-h)^j`.
    pub fn inverse(&self) -> Gauge {
        let hs = self.h_orders();
        let n = self.dim();
        let mut g: Vec<Matrix> = vec![linalg::identity(n)];
        for r in 1..hs.len() {
            let mut acc = vec![zeros(n); n];
            for s in 1..=r {
                let prod = linalg::mat_mul(&hs[s], &g[r - s]);
                for (a, p) in acc.iter_mut().zip(prod) {
                    for (x, y) in a.iter_mut().zip(p) {
                        *x -= y;
                    }
                }
            }
            g.push(acc);
        }
        g[0] = vec![zeros(n); n];
        Gauge::from_orders(&g)
    }
}

/// Coefficients of `f` itself: `Id, H_1, ..., H_cap`.
fn full_orders(f: &Gauge, cap: usize) -> Vec<Matrix> {
    let mut orders = f.h_orders();
    orders.truncate(cap + 1);
    orders[0] = linalg::identity(f.dim());
    orders
}

/// Perturbation of the transported law `(x, y) -> f^-1 mu_t(f x, f y)`.
///
/// The cap is the smaller of the two caps.
pub fn transported_perturbation(d: &Deformation, f: &Gauge) -> Result<Perturbation> {
    let n = d.base.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.dim(),
        });
    }
    let cap = d.cap.min(f.cap());
    let m = d.law_orders();
    let fo = full_orders(f, cap);
    let go = full_orders(&f.inverse(), cap);
    let mu = Cochain::from_algebra(&d.base);
    let mut orders = vec![Cochain::zero(n, 2, CochainTarget::Adjoint); cap + 1];
    for (idx, t) in crate::algebra::increasing_tuples(n, 2).iter().enumerate() {
        // column vectors f e_i and f e_j by order
        let x: Vec<Vec<Rational>> = fo
            .iter()
            .map(|mat| mat.iter().map(|row| row[t[0]].clone()).collect())
            .collect();
        let y: Vec<Vec<Rational>> = fo
            .iter()
            .map(|mat| mat.iter().map(|row| row[t[1]].clone()).collect())
            .collect();
        let mut inner = vec![zeros(n); cap + 1];
        for b in 0..=cap {
            if m[b].is_zero() {
                continue;
            }
            for c in 0..=cap - b {
                if vec_is_zero(&x[c]) {
                    continue;
                }
                for e in 0..=cap - b - c {
                    if vec_is_zero(&y[e]) {
                        continue;
                    }
                    let v = m[b].eval(&[x[c].clone(), y[e].clone()])?;
                    for (acc, val) in inner[b + c + e].iter_mut().zip(v) {
                        *acc += val;
                    }
                }
            }
        }
        for r in 0..=cap {
            let mut out = zeros(n);
            for a in 0..=r {
                for (o, val) in out.iter_mut().zip(linalg::mat_vec(&go[a], &inner[r - a])) {
                    *o += val;
                }
            }
            if r == 0 {
                for (o, val) in out.iter_mut().zip(mu.values(idx)) {
                    *o -= val;
                }
            }
            orders[r].values_mut(idx).clone_from_slice(&out);
        }
    }
    Perturbation::from_orders(n, orders)
}

/// Transport of `d` by the gauge `f`, re-expressed in decomposed form.
pub fn transport(d: &Deformation, f: &Gauge) -> Result<Deformation> {
    decompose_deformation(&d.base, &transported_perturbation(d, f)?)
}

fn check_gauge_polynomial(poly: &[Rational], k: usize) -> Result<Vec<Rational>> {
    let mut p = poly.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::InvalidPolynomial("P(0) must be 1".into()));
    }
    if p.len() - 1 > k {
        return Err(Error::InvalidPolynomial(format!(
            "degree {} exceeds k = {k}",
            p.len() - 1
        )));
    }
    Ok(p)
}

/// Coefficients of `P(t) mu_t`, the law transported by the scalar gauge `f = P(t) Id`.
fn scaled_law(m: &[Cochain], p: &[Rational]) -> Vec<Cochain> {
    (0..m.len())
        .map(|r| {
            let mut acc = Cochain::zero(m[0].dim(), 2, CochainTarget::Adjoint);
            for (a, c) in p.iter().enumerate().take(r + 1) {
                acc.add_scaled(c, &m[r - a]);
            }
            acc
        })
        .collect()
}

/// Whether `f = P(t) Id` brings `d` to the polynomial form
/// `mu + sum_{i=1..k} t^i psi_i` at the working cap.
///
/// Requires `P(0) = 1` and `deg P <= k`.
pub fn polynomial_form_check(d: &Deformation, poly: &[Rational], k: usize) -> Result<bool> {
    let p = check_gauge_polynomial(poly, k)?;
    let law = scaled_law(&d.law_orders(), &p);
    Ok(law.iter().skip(k + 1).all(Cochain::is_zero))
}

/// Solves for `P` with `P(0) = 1`, `deg P <= k` passing
/// [`polynomial_form_check`], by linear algebra on orders `k+1..=cap`.
pub fn find_polynomial_gauge(d: &Deformation, k: usize) -> Option<Vec<Rational>> {
    let m = d.law_orders();
    let cap = d.cap;
    if k >= cap {
        return Some(vec![Rational::one()]);
    }
    let stack = |shift: usize| -> Vec<Rational> {
        (k + 1..=cap)
            .flat_map(|r| m[r - shift].flat().to_vec())
            .collect()
    };
    let target: Vec<Rational> = stack(0).into_iter().map(|x| -x).collect();
    if k == 0 {
        return vec_is_zero(&target).then(|| vec![Rational::one()]);
    }
    let gens: Vec<Vec<Rational>> = (1..=k).map(stack).collect();
    let sol = linalg::solve_in_span(&gens, &target)?;
    let mut p = vec![Rational::one()];
    p.extend(sol);
    Some(p)
}
