//! G-associative algebras for the subgroups `G` of the symmetric group on
//! three letters, the matching permutation identities for associative
//! algebras, and the tensor product that combines the two.
//!
//! For `G` the signed identity is `sum_{s in G} sign(s) a(x_s(1), x_s(2), x_s(3)) = 0`
//! with `a` the associator; `{Id}` is associativity, `<(12)>` the Vinberg
//! (left-symmetric) identity, `<(23)>` the pre-Lie identity and the full group
//! gives Lie-admissibility. An associative algebra `B` whose triple products
//! are invariant under `G` makes `A ⊗ B` G-associative whenever `A` is.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{AlgebraKind, AlgebraStructure};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{vec_is_zero, zeros, Rational};

/// The six subgroups of the symmetric group on three letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupTag {
    Id,
    T12,
    T23,
    T13,
    A3,
    S3,
}

/// Argument order `(x_p[0], x_p[1], x_p[2])` with the permutation sign.
pub type SignedPerm = ([usize; 3], i8);

const ID: SignedPerm = ([0, 1, 2], 1);
const T12: SignedPerm = ([1, 0, 2], -1);
const T23: SignedPerm = ([0, 2, 1], -1);
const T13: SignedPerm = ([2, 1, 0], -1);
const C1: SignedPerm = ([2, 0, 1], 1);
const C2: SignedPerm = ([1, 2, 0], 1);

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 6] = [
        SubgroupTag::Id,
        SubgroupTag::T12,
        SubgroupTag::T23,
        SubgroupTag::T13,
        SubgroupTag::A3,
        SubgroupTag::S3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupTag::Id => "Id",
            SubgroupTag::T12 => "T12",
            SubgroupTag::T23 => "T23",
            SubgroupTag::T13 => "T13",
            SubgroupTag::A3 => "A3",
            SubgroupTag::S3 => "S3",
        }
    }

    /// The group elements as argument permutations.
    pub fn permutations(self) -> &'static [SignedPerm] {
        match self {
            SubgroupTag::Id => &[ID],
            SubgroupTag::T12 => &[ID, T12],
            SubgroupTag::T23 => &[ID, T23],
            SubgroupTag::T13 => &[ID, T13],
            SubgroupTag::A3 => &[ID, C1, C2],
            SubgroupTag::S3 => &[ID, T12, T23, T13, C1, C2],
        }
    }

    /// Permutations `p` with `x_p[0] x_p[1] x_p[2] = x_0 x_1 x_2` required of
    /// the associative partner in a tensor product.
    ///
    /// Each is the argument permutation of a group element (for `A3` the
    /// listed transposition and cycle together force full invariance).
    pub fn dual_permutations(self) -> &'static [[usize; 3]] {
        match self {
            SubgroupTag::Id => &[],
            SubgroupTag::T12 => &[[1, 0, 2]],
            SubgroupTag::T23 => &[[0, 2, 1]],
            SubgroupTag::T13 => &[[2, 1, 0]],
            SubgroupTag::A3 => &[[1, 0, 2], [2, 0, 1]],
            SubgroupTag::S3 => &[[1, 0, 2], [0, 2, 1], [2, 1, 0], [2, 0, 1], [1, 2, 0]],
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubgroupTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown subgroup tag {s:?} (expected Id, T12, T23, T13, A3 or S3)"
                ))
            })
    }
}

/// First failing basis triple and the identity it breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub triple: [usize; 3],
    pub identity: &'static str,
}

/// Outcome of an exhaustive check over basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub witness: Option<Witness>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    fn pass() -> Self {
        Self { witness: None }
    }

    fn fail(triple: [usize; 3], identity: &'static str) -> Self {
        Self {
            witness: Some(Witness { triple, identity }),
        }
    }
}

fn check_assoc_kind(a: &AlgebraStructure) -> Result<()> {
    if a.kind() != AlgebraKind::Assoc {
        return Err(Error::WrongKind {
            expected: "an assoc-kind product table",
        });
    }
    Ok(())
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
}

/// Checks `sum_{s in G} sign(s) a(s-permuted args) = 0` on all basis triples.
///
/// `signed = false` drops the signs. The witness is the lexicographically
/// smallest failing triple.
pub fn g_associative_check(
    a: &AlgebraStructure,
    g: SubgroupTag,
    signed: bool,
) -> Result<IdentityCheck> {
    check_assoc_kind(a)?;
    let n = a.dim();
    let assoc: Vec<Vec<Rational>> = triples(n)
        .map(|[i, j, k]| a.basis_associator(i, j, k))
        .collect();
    let at = |t: [usize; 3]| &assoc[(t[0] * n + t[1]) * n + t[2]];
    for x in triples(n) {
        let mut acc = zeros(n);
        for &(p, sign) in g.permutations() {
            let v = at([x[p[0]], x[p[1]], x[p[2]]]);
            for (o, c) in acc.iter_mut().zip(v) {
                if signed && sign < 0 {
                    *o -= c;
                } else {
                    *o += c;
                }
            }
        }
        if !vec_is_zero(&acc) {
            return Ok(IdentityCheck::fail(x, g.name()));
        }
    }
    Ok(IdentityCheck::pass())
}

/// `(e_i e_j) e_k`.
fn triple_product(b: &AlgebraStructure, t: [usize; 3]) -> Vec<Rational> {
    let mut out = zeros(b.dim());
    for (l, c) in b
        .product(t[0], t[1])
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
    {
        for (o, d) in out.iter_mut().zip(b.product(l, t[2])) {
            *o += c * d;
        }
    }
    out
}

/// Associativity plus the permutation identity matching `G`: none for `Id`,
/// `abc = bac` for `T12`, `abc = acb` for `T23`, `abc = cba` for `T13`,
/// `abc = bac = cab` for `A3`, full invariance for `S3`.
pub fn dual_identity_check(b: &AlgebraStructure, g: SubgroupTag) -> Result<IdentityCheck> {
    check_assoc_kind(b)?;
    if let Some([i, j, k]) = b.first_nonassociative_triple() {
        return Ok(IdentityCheck::fail([i, j, k], "associativity"));
    }
    let n = b.dim();
    let products: Vec<Vec<Rational>> = triples(n).map(|t| triple_product(b, t)).collect();
    let at = |t: [usize; 3]| &products[(t[0] * n + t[1]) * n + t[2]];
    for x in triples(n) {
        for p in g.dual_permutations() {
            if at(x) != at([x[p[0]], x[p[1]], x[p[2]]]) {
                return Ok(IdentityCheck::fail(x, g.name()));
            }
        }
    }
    Ok(IdentityCheck::pass())
}

/// `A ⊗ B` on the Kronecker basis `e_i ⊗ f_j -> i * dim(B) + j`, with
/// `(a1 ⊗ a2)(b1 ⊗ b2) = a1 b1 ⊗ a2 b2`.
pub fn tensor_product(a: &AlgebraStructure, b: &AlgebraStructure) -> Result<AlgebraStructure> {
    check_assoc_kind(a)?;
    check_assoc_kind(b)?;
    AlgebraStructure::from_products(AlgebraKind::Assoc, a.dim() * b.dim(), |x, y| {
        kronecker_product(
            a.product(x / b.dim(), y / b.dim()),
            b.product(x % b.dim(), y % b.dim()),
        )
    })
}

/// `u ⊗ v` in Kronecker coordinates.
pub fn kronecker_product(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    u.iter()
        .flat_map(|x| v.iter().map(move |y| x * y))
        .collect()
}

/// Two-sided identity element, if the algebra has one.
pub fn unit_element(a: &AlgebraStructure) -> Option<Vec<Rational>> {
    let n = a.dim();
    // u e_j = e_j and e_j u = e_j, linear in the coordinates of u
    let gens: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .flat_map(|j| {
                    a.product(i, j)
                        .iter()
                        .chain(a.product(j, i))
                        .cloned()
                        .collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    let target: Vec<Rational> = (0..n)
        .flat_map(|j| {
            let e = crate::rational::unit_vector(n, j);
            e.iter().chain(&e).cloned().collect::<Vec<_>>()
        })
        .collect();
    if gens.is_empty() {
        return None;
    }
    linalg::solve_in_span(&gens, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ints};

    /// Upper-triangular 2x2 matrices on e11, e12, e22.
    fn upper_triangular() -> AlgebraStructure {
        AlgebraStructure::assoc_from_ints(
            3,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        )
        .unwrap()
    }

    /// K[x]/(x^2) on 1, x.
    fn dual_numbers() -> AlgebraStructure {
        AlgebraStructure::assoc_from_ints(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]).unwrap()
    }

    /// First 2-dim table with entries in {-1, 0, 1} satisfying `G` but not associativity.
    fn search_non_associative(g: SubgroupTag) -> AlgebraStructure {
        for code in 0..3usize.pow(8) {
            let mut c = code;
            let mut entries = Vec::new();
            for slot in 0..8 {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                if v != 0 {
                    entries.push((slot / 4, (slot / 2) % 2, slot % 2, v));
                }
            }
            let a = AlgebraStructure::assoc_from_ints(2, &entries).unwrap();
            if !a.is_associative() && g_associative_check(&a, g, true).unwrap().holds() {
                return a;
            }
        }
        panic!("no instance for {g}");
    }

    #[test]
    fn tags_parse() {
        for t in SubgroupTag::ALL {
            assert_eq!(t.name().parse::<SubgroupTag>(), Ok(t));
        }
        assert_eq!("s3".parse::<SubgroupTag>(), Ok(SubgroupTag::S3));
        assert!("T14".parse::<SubgroupTag>().is_err());
    }

    #[test]
    fn associative_tables_pass_everything() {
        for a in [upper_triangular(), dual_numbers()] {
            for g in SubgroupTag::ALL {
                assert!(g_associative_check(&a, g, true).unwrap().holds());
                assert!(g_associative_check(&a, g, false).unwrap().holds());
            }
        }
    }

    #[test]
    fn vinberg_instance() {
        let a = search_non_associative(SubgroupTag::T12);
        // oracle: left-symmetry (xy)z - x(yz) = (yx)z - y(xz) on all triples
        for [x, y, z] in triples(2) {
            assert_eq!(a.basis_associator(x, y, z), a.basis_associator(y, x, z));
        }
        assert!(!g_associative_check(&a, SubgroupTag::Id, true)
            .unwrap()
            .holds());
        assert!(g_associative_check(&a, SubgroupTag::S3, true)
            .unwrap()
            .holds());
    }

    #[test]
    fn dual_identity_examples() {
        for g in SubgroupTag::ALL {
            assert!(dual_identity_check(&dual_numbers(), g).unwrap().holds());
        }
        let ut = upper_triangular();
        assert!(dual_identity_check(&ut, SubgroupTag::Id).unwrap().holds());
        let t12 = dual_identity_check(&ut, SubgroupTag::T12).unwrap();
        assert!(!t12.holds());
        let w = t12.witness.unwrap().triple;
        assert_ne!(
            triple_product(&ut, w),
            triple_product(&ut, [w[1], w[0], w[2]])
        );

        let vinberg = search_non_associative(SubgroupTag::T12);
        for g in SubgroupTag::ALL {
            let c = dual_identity_check(&vinberg, g).unwrap();
            assert_eq!(c.witness.unwrap().identity, "associativity");
        }
    }

    #[test]
    fn tensor_construction() {
        let a = dual_numbers();
        let b = upper_triangular();
        let ab = tensor_product(&a, &b).unwrap();
        assert_eq!(ab.dim(), 6);
        // (x ⊗ e11)(1 ⊗ e12) = x ⊗ e12: index 1*3+0 times 0*3+1 gives 1*3+1
        assert_eq!(ab.constant(3, 1, 4), &int(1));
        let ua = unit_element(&a).unwrap();
        let ub = unit_element(&b).unwrap();
        assert_eq!(ua, ints(&[1, 0]));
        assert_eq!(ub, ints(&[1, 0, 1]));
        assert_eq!(unit_element(&ab), Some(kronecker_product(&ua, &ub)));
    }

    #[test]
    fn vinberg_tensor_dual() {
        let a = search_non_associative(SubgroupTag::T12);
        let b = dual_numbers();
        let ab = tensor_product(&a, &b).unwrap();
        assert!(g_associative_check(&ab, SubgroupTag::T12, true)
            .unwrap()
            .holds());
        assert!(!g_associative_check(&ab, SubgroupTag::Id, true)
            .unwrap()
            .holds());
    }

    #[test]
    fn t13_needs_the_reversal_identity() {
        let a = search_non_associative(SubgroupTag::T13);
        // upper-triangular matrices violate abc = cba and break the tensor product
        let mut found_break = false;
        for b in [upper_triangular(), dual_numbers()] {
            let ok = dual_identity_check(&b, SubgroupTag::T13).unwrap().holds();
            let t = g_associative_check(&tensor_product(&a, &b).unwrap(), SubgroupTag::T13, true)
                .unwrap()
                .holds();
            if ok {
                assert!(t);
            } else if !t {
                found_break = true;
            }
        }
        assert!(found_break);
    }
}
