//! Exact row reduction over the rationals.
//!
//! Matrices are plain `Vec<Vec<Rational>>` in row-major order. Everything
//! here is fraction-exact; sizes at desk scale stay in the low hundreds.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    /// Nonzero rows only, each with a leading 1 at its pivot column.
    pub rows: Matrix,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduces the given rows to RREF. Rows must all have length `ncols`.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> RowEchelon {
    let mut m: Matrix = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &m {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        if !inv.is_one() {
            for x in m[row].iter_mut().skip(col) {
                *x *= &inv;
            }
        }
        let (before, rest) = m.split_at_mut(row);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for other in before.iter_mut().chain(after.iter_mut()) {
            let factor = other[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in other.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    RowEchelon {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => rref(rows, r.len()).rank(),
    }
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Matrix {
    let e = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in e.pivots.iter().enumerate() {
                x[p] = -e.rows[r][f].clone();
            }
            x
        })
        .collect()
}

/// Coefficients `c` with `sum c_i generators[i] = target`, if any.
///
/// When the generators are dependent one particular solution is returned
/// (free coefficients set to zero).
pub fn solve_in_span(generators: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = generators.len();
    let len = target.len();
    // Columns are the generators; augmented column is the target.
    let rows: Matrix = (0..len)
        .map(|i| {
            let mut row: Vec<Rational> = generators.iter().map(|g| g[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let e = rref(&rows, n + 1);
    if e.pivots.contains(&n) {
        return None;
    }
    let mut c = vec![Rational::zero(); n];
    for (r, &p) in e.pivots.iter().enumerate() {
        c[p] = e.rows[r][n].clone();
    }
    Some(c)
}

pub fn in_span(generators: &[Vec<Rational>], target: &[Rational]) -> bool {
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    if generators.is_empty() {
        return false;
    }
    solve_in_span(generators, target).is_some()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            acc += &a[i][l] * &b[l][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        })
        .collect()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let rows: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let e = rref(&rows, 2 * n);
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, ints};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = rref(&a, 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], ints(&[1, 0, 1]));
        assert_eq!(e.rows[1], ints(&[0, 1, 1]));
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn span_membership() {
        let g = vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])];
        assert_eq!(solve_in_span(&g, &ints(&[2, 3, 5])), Some(ints(&[2, 3])));
        assert_eq!(solve_in_span(&g, &ints(&[1, 1, 1])), None);
        assert!(in_span(&[], &ints(&[0, 0])));
        assert!(!in_span(&[], &ints(&[0, 1])));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), None);
        let b = vec![vec![frac(1, 2), frac(0, 1)], vec![frac(0, 1), frac(3, 1)]];
        assert_eq!(inverse(&b).unwrap()[0][0], frac(2, 1));
    }
}
