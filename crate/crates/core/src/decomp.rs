//! Finite flag decomposition of vectors over the maximal ideal.
//!
//! Every `w` in `m^k` can be written `b1 V1 + b1 b2 V2 + ... + b1..bh Vh` with
//! `b_i` in `m`, `V_i` linearly independent rational vectors and `h <= k`.
//! The `V_i` depend on normalization choices; the flag
//! `span(V1) ⊂ span(V1, V2) ⊂ ...` does not.
//!
//! The construction peels off one direction per step: the lowest-order
//! coefficient vector of the current residual gives `V`, its pivot component
//! gives `b`, and the remainder divided by `b` is again in `m^k` with the
//! pivot coordinate permanently zero.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, RowEchelon};
use crate::rational::Rational;
use crate::series::{SeriesVector, TruncSeries};

/// Which coordinate with a nonzero leading coefficient becomes the pivot.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotOrder {
    #[default]
    Lowest,
    Highest,
}

/// One step `(b_i, V_i)`; `vector` has its pivot entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagStep {
    pub coeff: TruncSeries,
    pub vector: Vec<Rational>,
    pub pivot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagDecomposition {
    steps: Vec<FlagStep>,
    ambient_dim: usize,
    cap: usize,
}

impl FlagDecomposition {
    pub fn steps(&self) -> &[FlagStep] {
        &self.steps
    }

    /// Length `h` of the decomposition.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Working cap: recomposition reproduces the input up to here.
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.steps.iter().map(|s| s.vector.clone()).collect()
    }

    /// Cumulative products `b1`, `b1 b2`, ..., each at the working cap.
    pub fn cumulative_coefficients(&self) -> Vec<TruncSeries> {
        let mut out: Vec<TruncSeries> = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let next = match out.last() {
                None => step.coeff.clone(),
                Some(prev) => prev.mul_tracked(&step.coeff),
            };
            out.push(next.truncate(self.cap));
        }
        out
    }

    /// Builds a decomposition from explicit parts, checking the invariants:
    /// coefficients in `m` and nonzero, vectors of length `k`, linearly independent.
    pub fn from_parts(
        steps: Vec<(TruncSeries, Vec<Rational>)>,
        ambient_dim: usize,
        cap: usize,
    ) -> Result<Self> {
        let mut out = Vec::with_capacity(steps.len());
        for (coeff, vector) in steps {
            if vector.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: vector.len(),
                });
            }
            if !coeff.in_maximal_ideal() {
                return Err(Error::NotInMaximalIdeal(out.len()));
            }
            if coeff.is_zero() {
                return Err(Error::ZeroVector);
            }
            let pivot = vector
                .iter()
                .position(|x| !x.is_zero())
                .ok_or(Error::ZeroVector)?;
            out.push(FlagStep {
                coeff,
                vector,
                pivot,
            });
        }
        let d = Self {
            steps: out,
            ambient_dim,
            cap,
        };
        if linalg::rank(&d.vectors()) != d.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(d)
    }
}

/// Decomposes `w` with the default (lowest-index) pivot rule.
pub fn decompose(w: &SeriesVector) -> Result<FlagDecomposition> {
    decompose_with(w, PivotOrder::Lowest)
}

pub fn decompose_with(w: &SeriesVector, order: PivotOrder) -> Result<FlagDecomposition> {
    if let Some(i) = w.components().iter().position(|c| !c.in_maximal_ideal()) {
        return Err(Error::NotInMaximalIdeal(i));
    }
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let k = w.dim();
    let mut steps = Vec::new();
    let mut residual = w.clone();
    loop {
        let v = residual.valuation().expect("residual is nonzero here");
        let lead = residual.coefficient_vector(v);
        let pivot = match order {
            PivotOrder::Lowest => lead.iter().position(|x| !x.is_zero()),
            PivotOrder::Highest => lead.iter().rposition(|x| !x.is_zero()),
        }
        .expect("leading coefficient vector is nonzero");
        let scale = lead[pivot].recip();
        let vector: Vec<Rational> = lead.iter().map(|x| x * &scale).collect();
        let b = residual.component(pivot).clone();

        let rest = residual.sub(&SeriesVector::from_series_times(&b, &vector));
        steps.push(FlagStep {
            coeff: b.clone(),
            vector,
            pivot,
        });
        if rest.is_zero() {
            break;
        }
        // Terminates within k steps: each pivot coordinate is zero from here on.
        debug_assert!(steps.len() < k);
        let quotient: Vec<TruncSeries> = rest
            .components()
            .iter()
            .map(|c| c.div_exact(&b))
            .collect::<Result<_>>()?;
        let next = SeriesVector::new(quotient);
        if next.cap() < 1 {
            return Err(Error::PrecisionExhausted(format!(
                "residual still nonzero after {} steps but only cap {} remains",
                steps.len(),
                next.cap()
            )));
        }
        residual = next;
    }
    Ok(FlagDecomposition {
        steps,
        ambient_dim: k,
        cap: w.cap(),
    })
}

/// Evaluates `sum (b1..bi) V_i` at `cap` (clamped to the working cap).
pub fn recompose(d: &FlagDecomposition, cap: usize) -> SeriesVector {
    let cap = cap.min(d.cap);
    let mut acc = SeriesVector::zero(d.ambient_dim, cap);
    for (c, step) in d.cumulative_coefficients().iter().zip(&d.steps) {
        acc = acc.add(&SeriesVector::from_series_times(
            &c.truncate(cap),
            &step.vector,
        ));
    }
    acc
}

/// The flag: RREF bases of `span(V1..Vi)` for `i = 1..h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    chain: Vec<RowEchelon>,
}

impl Flag {
    pub fn chain(&self) -> &[RowEchelon] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Maps every subspace through the linear map `x -> P x`.
    pub fn map(&self, p: &linalg::Matrix) -> Flag {
        let chain = self
            .chain
            .iter()
            .map(|e| {
                let rows: Vec<Vec<Rational>> =
                    e.rows.iter().map(|r| linalg::mat_vec(p, r)).collect();
                linalg::rref(&rows, p.len())
            })
            .collect();
        Flag { chain }
    }
}

pub fn flag_of(d: &FlagDecomposition) -> Flag {
    flag_from_vectors(&d.vectors(), d.ambient_dim)
}

pub fn flag_from_vectors(vectors: &[Vec<Rational>], dim: usize) -> Flag {
    let chain = (1..=vectors.len())
        .map(|i| linalg::rref(&vectors[..i], dim))
        .collect();
    Flag { chain }
}

/// Equal length and equal subspaces at every index.
pub fn flags_equal(a: &Flag, b: &Flag) -> bool {
    a.chain.len() == b.chain.len()
        && a.chain
            .iter()
            .zip(&b.chain)
            .all(|(x, y)| x.ncols == y.ncols && x.rows == y.rows)
}
