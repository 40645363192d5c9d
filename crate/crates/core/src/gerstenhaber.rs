//! Circle product, Gerstenhaber super-bracket and Chevalley-Eilenberg cohomology.
//!
//! Sign conventions: the circle product of `g` (degree `q`) and `f` (degree
//! `p`) is the alternating cochain of degree `p + q - 1`
//!
//! ```text
//! (g o f)(x_1..x_{p+q-1}) = sum over (p, q-1)-shuffles s of
//!     sign(s) g(f(x_s(1)..x_s(p)), x_s(p+1)..x_s(p+q-1))
//! ```
//!
//! and the super-bracket is `[f, g] = f o g - (-1)^((p-1)(q-1)) g o f`, so two
//! 2-cochains give `f o g + g o f`. For the bracket `mu` of a Lie algebra,
//! `mu o mu` is the Jacobiator. The adjoint coboundary is `d f = [mu, f]`
//! (and `d x = [x, .]` in degree 0); with trivial coefficients it is
//! `d w(x_0..x_p) = sum_{a<b} (-1)^(a+b) w([x_a, x_b], x_0..^a..^b..x_p)`.
//! Both square to zero.

use serde::Serialize;

use crate::algebra::{
    increasing_tuples, tuple_index, AlgebraKind, AlgebraStructure, Cochain, CochainTarget,
};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;

/// Dimensions of `Z^p`, `B^p` and `H^p = Z^p / B^p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub coeff: &'static str,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
}

fn check_adjoint(c: &Cochain) -> Result<()> {
    if c.target() != CochainTarget::Adjoint {
        return Err(Error::WrongKind {
            expected: "an adjoint-valued cochain",
        });
    }
    Ok(())
}

/// `g o f`; both adjoint-valued, `g` of degree at least 1.
pub fn circle(g: &Cochain, f: &Cochain) -> Result<Cochain> {
    check_adjoint(g)?;
    check_adjoint(f)?;
    if g.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: f.dim(),
        });
    }
    let q = g.degree();
    if q == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let p = f.degree();
    let n = g.dim();
    let m = p + q - 1;
    let mut out = Cochain::zero(n, m, CochainTarget::Adjoint);
    let shuffles = shuffles(m, p);
    let mut inner = Vec::with_capacity(p);
    let mut outer = Vec::with_capacity(q - 1);
    for (idx, t) in increasing_tuples(n, m).iter().enumerate() {
        let mut acc = vec![num_traits::Zero::zero(); n];
        for (positions, rest, sign) in &shuffles {
            inner.clear();
            inner.extend(positions.iter().map(|&i| t[i]));
            outer.clear();
            outer.extend(rest.iter().map(|&i| t[i]));
            let fv = f.values(tuple_index(n, &inner));
            let gv = g.eval_first(fv, &outer);
            for (a, b) in acc.iter_mut().zip(gv) {
                if *sign > 0 {
                    *a += b;
                } else {
                    *a -= b;
                }
            }
        }
        out.values_mut(idx).clone_from_slice(&acc);
    }
    Ok(out)
}

/// All `(p, m-p)`-shuffles of positions `0..m`, with their signs.
fn shuffles(m: usize, p: usize) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    increasing_tuples(m, p)
        .into_iter()
        .map(|s| {
            let rest: Vec<usize> = (0..m).filter(|i| !s.contains(i)).collect();
            let inversions: usize = s
                .iter()
                .map(|&x| rest.iter().filter(|&&r| r < x).count())
                .sum();
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            (s, rest, sign)
        })
        .collect()
}

/// Gerstenhaber bracket; for two 2-cochains this is `f o g + g o f`.
pub fn super_bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let (p, q) = (f.degree(), g.degree());
    if p == 0 || q == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let fg = circle(f, g)?;
    let gf = circle(g, f)?;
    if ((p - 1) * (q - 1)) % 2 == 0 {
        Ok(fg.sub(&gf))
    } else {
        Ok(fg.add(&gf))
    }
}

fn check_lie(g: &AlgebraStructure) -> Result<()> {
    if g.kind() != AlgebraKind::Lie {
        return Err(Error::WrongKind {
            expected: "a lie algebra",
        });
    }
    Ok(())
}

/// Chevalley-Eilenberg coboundary of `f` for the Lie algebra `g`.
///
/// Supported degrees are `0..=dim g`.
pub fn coboundary(g: &AlgebraStructure, f: &Cochain) -> Result<Cochain> {
    check_lie(g)?;
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: f.dim(),
        });
    }
    if f.degree() > g.dim() {
        return Err(Error::UnsupportedDegree(f.degree()));
    }
    let mu = Cochain::from_algebra(g);
    match (f.target(), f.degree()) {
        (CochainTarget::Adjoint, 0) => circle(&mu, f),
        (CochainTarget::Adjoint, _) => super_bracket(&mu, f),
        (CochainTarget::Trivial, _) => Ok(trivial_coboundary(g, f)),
    }
}

fn trivial_coboundary(g: &AlgebraStructure, w: &Cochain) -> Cochain {
    let n = g.dim();
    let p = w.degree();
    let mut out = Cochain::zero(n, p + 1, CochainTarget::Trivial);
    let mut rest = Vec::with_capacity(p.saturating_sub(1));
    for (idx, t) in increasing_tuples(n, p + 1).iter().enumerate() {
        let mut acc = Rational::from_integer(0.into());
        for a in 0..t.len() {
            for b in a + 1..t.len() {
                rest.clear();
                rest.extend(
                    t.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != a && i != b)
                        .map(|(_, &x)| x),
                );
                let bracket = g.product(t[a], t[b]);
                let v = if p == 0 {
                    Rational::from_integer(0.into())
                } else {
                    w.eval_first(bracket, &rest).swap_remove(0)
                };
                if (a + b) % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
        }
        out.values_mut(idx)[0] = acc;
    }
    out
}

/// Rows are the images of the basis cochains of `C^p` under the coboundary.
pub fn coboundary_rows(
    g: &AlgebraStructure,
    degree: usize,
    target: CochainTarget,
) -> Result<Vec<Vec<Rational>>> {
    let size = Cochain::zero(g.dim(), degree, target).flat().len();
    (0..size)
        .map(|i| {
            coboundary(g, &Cochain::basis_element(g.dim(), degree, target, i))
                .map(Cochain::into_flat)
        })
        .collect()
}

fn coboundary_rank(g: &AlgebraStructure, degree: usize, target: CochainTarget) -> Result<usize> {
    if degree == g.dim() {
        // the next cochain space is zero
        return Ok(0);
    }
    Ok(linalg::rank(&coboundary_rows(g, degree, target)?))
}

/// Exact dimensions of cocycles, coboundaries and cohomology in one degree.
pub fn cohomology_dim(
    g: &AlgebraStructure,
    degree: usize,
    target: CochainTarget,
) -> Result<CohomologyReport> {
    check_lie(g)?;
    if degree > g.dim() {
        return Err(Error::UnsupportedDegree(degree));
    }
    let dim_cochains = Cochain::zero(g.dim(), degree, target).flat().len();
    let dim_cocycles = dim_cochains - coboundary_rank(g, degree, target)?;
    let dim_coboundaries = if degree == 0 {
        0
    } else {
        coboundary_rank(g, degree - 1, target)?
    };
    Ok(CohomologyReport {
        degree,
        coeff: target.name(),
        dim_cochains,
        dim_cocycles,
        dim_coboundaries,
        dim_h: dim_cocycles - dim_coboundaries,
    })
}

/// Whether `c` is a coboundary, i.e. lies in the image of `d` from one degree below.
pub fn is_coboundary(g: &AlgebraStructure, c: &Cochain) -> Result<bool> {
    if c.degree() == 0 {
        return Ok(c.is_zero());
    }
    let rows = coboundary_rows(g, c.degree() - 1, c.target())?;
    Ok(linalg::in_span(&rows, c.flat()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ints};

    fn sl2() -> AlgebraStructure {
        AlgebraStructure::lie_from_ints(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]).unwrap()
    }

    fn r2() -> AlgebraStructure {
        AlgebraStructure::lie_from_ints(2, &[(0, 1, 1, 1)]).unwrap()
    }

    fn non_lie() -> AlgebraStructure {
        AlgebraStructure::lie_from_ints(3, &[(0, 1, 0, 1), (0, 2, 1, 1)]).unwrap()
    }

    #[test]
    fn mu_circle_mu_is_the_jacobiator() {
        let mu = Cochain::from_algebra(&sl2());
        assert!(circle(&mu, &mu).unwrap().is_zero());
        let g = non_lie();
        let mu = Cochain::from_algebra(&g);
        let mm = circle(&mu, &mu).unwrap();
        assert!(!mm.is_zero());
        assert_eq!(mm, g.jacobiator().unwrap());
        let zero = Cochain::from_algebra(&AlgebraStructure::abelian(3));
        assert!(circle(&mm_like(3), &zero).unwrap().is_zero());
    }

    fn mm_like(n: usize) -> Cochain {
        let mut c = Cochain::zero(n, 2, CochainTarget::Adjoint);
        c.set(&[0, 1], &ints(&[1, 1, 1])).unwrap();
        c
    }

    #[test]
    fn super_bracket_symmetry() {
        let f = mm_like(3);
        let mut g = Cochain::zero(3, 2, CochainTarget::Adjoint);
        g.set(&[1, 2], &ints(&[2, 0, -1])).unwrap();
        g.set(&[0, 2], &ints(&[0, 3, 0])).unwrap();
        assert_eq!(
            super_bracket(&f, &g).unwrap(),
            super_bracket(&g, &f).unwrap()
        );
        assert_eq!(
            super_bracket(&g, &g).unwrap(),
            circle(&g, &g).unwrap().scale(&int(2))
        );
    }

    #[test]
    fn abelian_coboundary_vanishes() {
        let g = AlgebraStructure::abelian(3);
        let f = mm_like(3);
        assert!(coboundary(&g, &f).unwrap().is_zero());
    }

    #[test]
    fn r2_trivial_one_form() {
        // d w1 (X, Y) = -w1([X, Y]) = -w1(Y) = -1
        let g = r2();
        let mut w1 = Cochain::zero(2, 1, CochainTarget::Trivial);
        w1.set(&[1], &[int(1)]).unwrap();
        let d = coboundary(&g, &w1).unwrap();
        assert_eq!(d.eval_basis(&[0, 1]), vec![int(-1)]);
    }

    #[test]
    fn trivial_degree_two_matches_cyclic_formula() {
        // d theta(X, Y, Z) = theta(X, [Y, Z]) + theta(Y, [Z, X]) + theta(Z, [X, Y])
        let g = sl2();
        let mut theta = Cochain::zero(3, 2, CochainTarget::Trivial);
        theta.set(&[0, 1], &[int(3)]).unwrap();
        theta.set(&[0, 2], &[int(-1)]).unwrap();
        theta.set(&[1, 2], &[int(2)]).unwrap();
        let d = coboundary(&g, &theta).unwrap();
        let e = |i: usize| crate::rational::unit_vector(3, i);
        let th = |x: &[Rational], y: &[Rational]| {
            theta.eval(&[x.to_vec(), y.to_vec()]).unwrap()[0].clone()
        };
        let br = |x: &[Rational], y: &[Rational]| g.mul(x, y).unwrap();
        let (x, y, z) = (e(0), e(1), e(2));
        let expected = th(&x, &br(&y, &z)) + th(&y, &br(&z, &x)) + th(&z, &br(&x, &y));
        assert_eq!(d.eval_basis(&[0, 1, 2]), vec![expected]);
    }

    #[test]
    fn degree_one_adjoint_matches_derivation_defect() {
        // [mu, f](x, y) = [f x, y] + [x, f y] - f [x, y]
        let g = sl2();
        let mut f = Cochain::zero(3, 1, CochainTarget::Adjoint);
        f.set(&[0], &ints(&[1, 2, 0])).unwrap();
        f.set(&[1], &ints(&[0, 1, -1])).unwrap();
        f.set(&[2], &ints(&[3, 0, 1])).unwrap();
        let d = coboundary(&g, &f).unwrap();
        let fx = |i: usize| f.values(i).to_vec();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let ea = crate::rational::unit_vector(3, a);
            let eb = crate::rational::unit_vector(3, b);
            let t1 = g.mul(&fx(a), &eb).unwrap();
            let t2 = g.mul(&ea, &fx(b)).unwrap();
            let t3 = f.eval(&[g.mul(&ea, &eb).unwrap()]).unwrap();
            let expected: Vec<Rational> = (0..3).map(|k| &t1[k] + &t2[k] - &t3[k]).collect();
            assert_eq!(d.eval_basis(&[a, b]), expected);
        }
    }

    #[test]
    fn fixed_cohomology_values() {
        let ab = AlgebraStructure::abelian(2);
        assert_eq!(
            cohomology_dim(&ab, 2, CochainTarget::Adjoint)
                .unwrap()
                .dim_h,
            2
        );
        assert_eq!(
            cohomology_dim(&sl2(), 2, CochainTarget::Adjoint)
                .unwrap()
                .dim_h,
            0
        );
        assert_eq!(
            cohomology_dim(&sl2(), 1, CochainTarget::Adjoint)
                .unwrap()
                .dim_h,
            0
        );
        let r = cohomology_dim(&r2(), 2, CochainTarget::Trivial).unwrap();
        assert_eq!((r.dim_cocycles, r.dim_coboundaries, r.dim_h), (1, 1, 0));
        assert_eq!(
            cohomology_dim(&r2(), 3, CochainTarget::Trivial),
            Err(Error::UnsupportedDegree(3))
        );
    }

    #[test]
    fn heisenberg_cohomology() {
        // h3: H^1(h3, K) = 2, H^2(h3, K) = 2
        let h3 = AlgebraStructure::lie_from_ints(3, &[(0, 1, 2, 1)]).unwrap();
        assert_eq!(
            cohomology_dim(&h3, 1, CochainTarget::Trivial)
                .unwrap()
                .dim_h,
            2
        );
        assert_eq!(
            cohomology_dim(&h3, 2, CochainTarget::Trivial)
                .unwrap()
                .dim_h,
            2
        );
    }
}
