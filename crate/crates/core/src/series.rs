//! Truncated power series over the rationals with tracked precision.
//!
//! A [`TruncSeries`] is an element of `Q[[t]]` known modulo `t^(cap+1)`.
//! Binary operations contract to the smaller cap; exact division additionally
//! loses as many terms as the divisor's valuation. A series whose known
//! coefficients all vanish is "zero at this precision", not proven zero, and
//! its valuation is undetermined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Builds a series from its coefficients `t^0..t^cap`; the cap is `len - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the t^0 coefficient"
        );
        Self { coeffs }
    }

    /// Exact polynomial `sum c_i t^i`, truncated or zero-padded to `cap`.
    pub fn from_poly(poly: &[Rational], cap: usize) -> Self {
        let coeffs = (0..=cap)
            .map(|i| poly.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Self { coeffs }
    }

    pub fn zero(cap: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = c;
        s
    }

    /// `c t^k`; the zero series when `k > cap`.
    pub fn monomial(c: Rational, k: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if k <= cap {
            s.coeffs[k] = c;
        }
        s
    }

    /// The uniformizer `t`.
    pub fn t(cap: usize) -> Self {
        Self::monomial(Rational::one(), 1, cap)
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`. Panics if `k > cap`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient, `None` when zero at the cap.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lower bound on the true valuation: the valuation if determined,
    /// otherwise `cap + 1`.
    pub fn valuation_bound(&self) -> usize {
        self.valuation().unwrap_or(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn in_maximal_ideal(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Forgets everything above `t^cap`. A larger `cap` than the current one
    /// is clamped: precision cannot be invented.
    pub fn truncate(&self, cap: usize) -> Self {
        let cap = cap.min(self.cap());
        Self {
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }

    /// Equality of the coefficients both series know.
    pub fn eq_up_to_cap(&self, other: &Self) -> bool {
        let cap = self.cap().min(other.cap());
        self.coeffs[..=cap] == other.coeffs[..=cap]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller cap.
    pub fn mul_capped(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        self.product_to(other, cap)
    }

    /// Product keeping every coefficient that is actually determined by the
    /// inputs: `min(a.cap + val(b), b.cap + val(a))`.
    ///
    /// This is the capped-relative rule; the result of multiplying a series
    /// with large valuation by a less precise one keeps the larger cap.
    pub fn mul_tracked(&self, other: &Self) -> Self {
        let cap = (self.cap() + other.valuation_bound()).min(other.cap() + self.valuation_bound());
        self.product_to(other, cap)
    }

    fn product_to(&self, other: &Self, cap: usize) -> Self {
        let mut out = vec![Rational::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse of a unit, at the same cap.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let cap = self.cap();
        let inv0 = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(cap + 1);
        out.push(inv0.clone());
        for k in 1..=cap {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// Divides by `t^k`; the cap drops by `k`. Requires `valuation >= k`.
    fn shift_down(&self, k: usize) -> Self {
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Exact quotient `self / divisor` inside `Q[[t]]`.
    ///
    /// The result cap is `min(caps) - val(divisor)`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let v = divisor.valuation().ok_or(Error::ZeroDivisor)?;
        let cap = self.cap().min(divisor.cap());
        if cap < v {
            return Err(Error::PrecisionExhausted(format!(
                "dividing by a series of valuation {v} leaves no coefficients at cap {cap}"
            )));
        }
        let new_cap = cap - v;
        match self.valuation() {
            Some(va) if va < v => Err(Error::NotDivisible {
                numerator: va,
                denominator: v,
            }),
            None => Ok(Self::zero(new_cap)),
            Some(_) => {
                let num = self.truncate(cap).shift_down(v);
                let den = divisor.truncate(cap).shift_down(v);
                Ok(num.mul_capped(&den.invert()?))
            }
        }
    }

    /// Evaluates the polynomial `sum p_i x^i` at `x = self`.
    pub fn compose_poly(&self, poly: &[Rational]) -> Self {
        let cap = self.cap();
        let mut acc = Self::zero(cap);
        for c in poly.iter().rev() {
            acc = acc.mul_capped(self);
            acc.coeffs[0] += c;
        }
        acc
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.cap() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let cap = self.cap().min(rhs.cap());
        TruncSeries {
            coeffs: (0..=cap)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let cap = self.cap().min(rhs.cap());
        TruncSeries {
            coeffs: (0..=cap)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.mul_capped(rhs)
    }
}

/// A point of `A^k`: `k` series sharing one cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesVector {
    components: Vec<TruncSeries>,
}

impl SeriesVector {
    /// Builds a vector, truncating every component to the smallest cap.
    ///
    /// Panics on an empty component list.
    pub fn new(components: Vec<TruncSeries>) -> Self {
        assert!(
            !components.is_empty(),
            "a series vector needs at least one component"
        );
        let cap = components.iter().map(TruncSeries::cap).min().unwrap();
        let components = components.into_iter().map(|c| c.truncate(cap)).collect();
        Self { components }
    }

    pub fn zero(dim: usize, cap: usize) -> Self {
        Self::new(vec![TruncSeries::zero(cap); dim])
    }

    /// `sum_i s_i v_i`-style embedding of a constant vector at `t^0`.
    pub fn constant(v: &[Rational], cap: usize) -> Self {
        Self::new(
            v.iter()
                .map(|c| TruncSeries::constant(c.clone(), cap))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn cap(&self) -> usize {
        self.components[0].cap()
    }

    pub fn components(&self) -> &[TruncSeries] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &TruncSeries {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<TruncSeries> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(TruncSeries::is_zero)
    }

    pub fn truncate(&self, cap: usize) -> Self {
        Self::new(self.components.iter().map(|c| c.truncate(cap)).collect())
    }

    /// Vector of `t^k` coefficients.
    pub fn coefficient_vector(&self, k: usize) -> Vec<Rational> {
        self.components.iter().map(|c| c.coeff(k).clone()).collect()
    }

    /// Smallest determined valuation over the components.
    pub fn valuation(&self) -> Option<usize> {
        self.components
            .iter()
            .filter_map(TruncSeries::valuation)
            .min()
    }

    pub fn eq_up_to_cap(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.eq_up_to_cap(b))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `s * v` for a scalar series `s` and a constant vector `v`.
    pub fn from_series_times(s: &TruncSeries, v: &[Rational]) -> Self {
        Self::new(v.iter().map(|c| s.scale(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn s(v: &[i64]) -> TruncSeries {
        TruncSeries::new(ints(v))
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1, 1, 0, 0]) + &s(&[0, 1, 0, 0]), s(&[1, 2, 0, 0]));
        let a = s(&[3, 0, 5]);
        assert_eq!(&a + &TruncSeries::zero(2), a);
        let sum = &s(&[0, 0, 1, 0, 0]) + &s(&[0, 0, -1]);
        assert_eq!(sum, TruncSeries::zero(2));
        assert_eq!(sum.valuation(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1, 1, 0, 0]) * &s(&[1, -1, 0, 0]), s(&[1, 0, -1, 0]));
        assert_eq!(&TruncSeries::t(4) * &TruncSeries::t(4), s(&[0, 0, 1, 0, 0]));
        assert!((&s(&[0, 2, 1]) * &TruncSeries::zero(2)).is_zero());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, 1, 0, 0]).invert().unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(
            s(&[2, 0, 0]).invert().unwrap(),
            TruncSeries::constant(frac(1, 2), 2)
        );
        assert_eq!(TruncSeries::t(3).invert(), Err(Error::NotAUnit));
    }

    #[test]
    fn div_exact_examples() {
        let q = s(&[0, 2, 1, 0, 0]).div_exact(&TruncSeries::t(4)).unwrap();
        assert_eq!(q, s(&[2, 1, 0, 0]));
        let t2 = TruncSeries::monomial(int(1), 2, 5);
        assert_eq!(t2.div_exact(&t2).unwrap(), TruncSeries::one(3));
        let err = TruncSeries::t(4).div_exact(&TruncSeries::monomial(int(1), 2, 4));
        assert_eq!(
            err,
            Err(Error::NotDivisible {
                numerator: 1,
                denominator: 2
            })
        );
        assert_eq!(
            TruncSeries::t(3).div_exact(&TruncSeries::zero(3)),
            Err(Error::ZeroDivisor)
        );
        assert!(matches!(
            TruncSeries::zero(1).div_exact(&TruncSeries::monomial(int(1), 2, 5)),
            Err(Error::PrecisionExhausted(_))
        ));
        assert_eq!(
            TruncSeries::zero(4).div_exact(&TruncSeries::t(4)).unwrap(),
            TruncSeries::zero(3)
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(s(&[0, 0, 1, 2]).valuation(), Some(2));
        assert_eq!(s(&[1, 1]).valuation(), Some(0));
        assert_eq!(TruncSeries::zero(4).valuation(), None);
    }

    #[test]
    fn tracked_product_keeps_determined_terms() {
        // t^2 known to cap 6 times (1 + t) known to cap 2: t^2 + t^3 is known to cap 4.
        let a = TruncSeries::monomial(int(1), 2, 6);
        let b = s(&[1, 1, 0]);
        let p = a.mul_tracked(&b);
        assert_eq!(p.cap(), 4);
        assert_eq!(p, s(&[0, 0, 1, 1, 0]));
    }

    #[test]
    fn compose_poly_evaluates() {
        // 1 + x + x^2 at x = t, cap 3
        let p = TruncSeries::t(3).compose_poly(&ints(&[1, 1, 1]));
        assert_eq!(p, s(&[1, 1, 1, 0]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(&[0, 2, 1]).to_string(), "(2)t + (1)t^2 + O(t^3)");
        assert_eq!(TruncSeries::zero(1).to_string(), "0 + O(t^2)");
    }

    #[test]
    fn vector_truncates_to_common_cap() {
        let v = SeriesVector::new(vec![s(&[0, 1, 2, 3]), s(&[0, 1])]);
        assert_eq!(v.cap(), 1);
        assert_eq!(v.valuation(), Some(1));
        assert_eq!(v.coefficient_vector(1), ints(&[1, 1]));
    }
}
