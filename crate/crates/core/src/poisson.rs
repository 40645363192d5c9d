//! Poisson algebras: a commutative associative product together with a Lie
//! bracket satisfying the Leibniz rule `[a, bc] = b[a, c] + [a, b]c`.

use num_traits::Zero;

use crate::algebra::{AlgebraKind, AlgebraStructure};
use crate::error::{Error, Result};
use crate::nonassoc::{kronecker_product, tensor_product};
use crate::rational::{vec_is_zero, zeros, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    assoc: AlgebraStructure,
    bracket: AlgebraStructure,
}

/// The first axiom instance that fails, with its basis arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonWitness {
    pub axiom: &'static str,
    pub args: Vec<usize>,
}

impl PoissonStructure {
    /// `assoc` must be an assoc-kind table and `bracket` a lie-kind
    /// (antisymmetric) table of the same dimension. The axioms are checked by
    /// [`poisson_verify`], not here.
    pub fn new(assoc: AlgebraStructure, bracket: AlgebraStructure) -> Result<Self> {
        if assoc.kind() != AlgebraKind::Assoc {
            return Err(Error::WrongKind {
                expected: "an assoc-kind product table",
            });
        }
        if bracket.kind() != AlgebraKind::Lie {
            return Err(Error::WrongKind {
                expected: "a lie-kind bracket table",
            });
        }
        if assoc.dim() != bracket.dim() {
            return Err(Error::DimensionMismatch {
                expected: assoc.dim(),
                got: bracket.dim(),
            });
        }
        Ok(Self { assoc, bracket })
    }

    /// A commutative associative algebra with the zero bracket.
    pub fn natural(assoc: AlgebraStructure) -> Result<Self> {
        let bracket = AlgebraStructure::abelian(assoc.dim());
        Self::new(assoc, bracket)
    }

    pub fn dim(&self) -> usize {
        self.assoc.dim()
    }

    pub fn assoc(&self) -> &AlgebraStructure {
        &self.assoc
    }

    pub fn bracket(&self) -> &AlgebraStructure {
        &self.bracket
    }
}

fn lin_comb(
    alg: &AlgebraStructure,
    coeffs: &[Rational],
    right: usize,
    left_first: bool,
) -> Vec<Rational> {
    // sum_l coeffs[l] * (e_l . e_right) or (e_right . e_l)
    let mut out = zeros(alg.dim());
    for (l, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let p = if left_first {
            alg.product(l, right)
        } else {
            alg.product(right, l)
        };
        for (o, d) in out.iter_mut().zip(p) {
            *o += c * d;
        }
    }
    out
}

/// Checks, in order and each over lexicographic basis arguments:
/// commutativity, associativity, the Jacobi identity, the Leibniz rule.
pub fn poisson_verify(p: &PoissonStructure) -> Option<PoissonWitness> {
    let n = p.dim();
    let a = &p.assoc;
    let b = &p.bracket;
    for i in 0..n {
        for j in i + 1..n {
            if a.product(i, j) != a.product(j, i) {
                return Some(PoissonWitness {
                    axiom: "commutativity",
                    args: vec![i, j],
                });
            }
        }
    }
    if let Some([i, j, k]) = a.first_nonassociative_triple() {
        return Some(PoissonWitness {
            axiom: "associativity",
            args: vec![i, j, k],
        });
    }
    if let (false, Some([i, j, k])) = b.is_lie().expect("bracket is lie-kind") {
        return Some(PoissonWitness {
            axiom: "jacobi",
            args: vec![i, j, k],
        });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // [x, yz] - y[x, z] - [x, y]z
                let mut v = lin_comb(b, a.product(y, z), x, false);
                for (o, d) in v.iter_mut().zip(lin_comb(a, b.product(x, z), y, false)) {
                    *o -= d;
                }
                for (o, d) in v.iter_mut().zip(lin_comb(a, b.product(x, y), z, true)) {
                    *o -= d;
                }
                if !vec_is_zero(&v) {
                    return Some(PoissonWitness {
                        axiom: "leibniz",
                        args: vec![x, y, z],
                    });
                }
            }
        }
    }
    None
}

fn require_poisson(p: &PoissonStructure, which: &str) -> Result<()> {
    match poisson_verify(p) {
        None => Ok(()),
        Some(w) => Err(Error::InvalidPoisson(format!(
            "{which} fails {} on {:?}",
            w.axiom, w.args
        ))),
    }
}

/// `P ⊗ Q` with the componentwise product and
/// `[a1 ⊗ a2, b1 ⊗ b2] = [a1, b1] ⊗ a2 b2 + a1 b1 ⊗ [a2, b2]`.
pub fn poisson_tensor(p: &PoissonStructure, q: &PoissonStructure) -> Result<PoissonStructure> {
    require_poisson(p, "left factor")?;
    require_poisson(q, "right factor")?;
    let assoc = tensor_product(&p.assoc, &q.assoc)?;
    let m = q.dim();
    let bracket = AlgebraStructure::from_products(AlgebraKind::Lie, p.dim() * m, |x, y| {
        let (x1, x2, y1, y2) = (x / m, x % m, y / m, y % m);
        let left = kronecker_product(p.bracket.product(x1, y1), q.assoc.product(x2, y2));
        let right = kronecker_product(p.assoc.product(x1, y1), q.bracket.product(x2, y2));
        left.iter().zip(&right).map(|(u, v)| u + v).collect()
    })?;
    PoissonStructure::new(assoc, bracket)
}

/// Opposite product `a ._op b = b a` and negated bracket.
pub fn opposite_poisson(p: &PoissonStructure) -> Result<PoissonStructure> {
    require_poisson(p, "input")?;
    let n = p.dim();
    let assoc = AlgebraStructure::from_products(AlgebraKind::Assoc, n, |i, j| {
        p.assoc.product(j, i).to_vec()
    })?;
    let bracket = AlgebraStructure::from_products(AlgebraKind::Lie, n, |i, j| {
        p.bracket.product(i, j).iter().map(|c| -c).collect()
    })?;
    PoissonStructure::new(assoc, bracket)
}
