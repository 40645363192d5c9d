//! Seeded generators shared by the property and acceptance tests.
#![allow(dead_code)]

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use valdef::algebra::{AlgebraKind, AlgebraStructure, Cochain, CochainTarget};
use valdef::deformation::{decompose_deformation, transport, Deformation, Gauge, Perturbation};
use valdef::linalg::{self, Matrix};
use valdef::nonassoc::{dual_identity_check, g_associative_check, SubgroupTag};
use valdef::poisson::{poisson_verify, PoissonStructure};
use valdef::rational::{int, zeros, Rational};
use valdef::series::{SeriesVector, TruncSeries};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p / q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(
        rng.gen_range(-bound..=bound).into(),
        rng.gen_range(1..=bound).into(),
    )
}

/// Small integer, zero about half of the time.
pub fn small(rng: &mut impl Rng) -> Rational {
    if rng.gen_bool(0.5) {
        int(0)
    } else {
        int(rng.gen_range(-2..=2))
    }
}

fn series_in_m(rng: &mut impl Rng, cap: usize, min_val: usize, bound: i64) -> TruncSeries {
    let mut c = zeros(cap + 1);
    for x in c.iter_mut().skip(min_val.max(1)) {
        if rng.gen_bool(0.6) {
            *x = rational(rng, bound);
        }
    }
    TruncSeries::new(c)
}

/// A nonzero vector of `k` series in the maximal ideal.
///
/// Half of the samples are built as `sum_i s_i v_i` over fewer than `k`
/// constant directions, so short flags are exercised too.
pub fn vector_in_m(rng: &mut impl Rng, k: usize, cap: usize, bound: i64) -> SeriesVector {
    loop {
        let v = if rng.gen_bool(0.5) {
            let comps = (0..k)
                .map(|_| {
                    let v = rng.gen_range(1..=2);
                    series_in_m(rng, cap, v, bound)
                })
                .collect();
            SeriesVector::new(comps)
        } else {
            let r = rng.gen_range(1..=k);
            let mut acc = SeriesVector::zero(k, cap);
            for _ in 0..r {
                let v = rng.gen_range(1..=3);
                let s = series_in_m(rng, cap, v, bound);
                let dir: Vec<Rational> = (0..k).map(|_| rational(rng, bound)).collect();
                acc = acc.add(&SeriesVector::from_series_times(&s, &dir));
            }
            acc
        };
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j && rng.gen_bool(0.7) {
                            int(1)
                        } else {
                            small(rng)
                        }
                    })
                    .collect()
            })
            .collect();
        if linalg::inverse(&m).is_some() {
            return m;
        }
    }
}

/// `[e0, e_j] = sum_i d[i][j] e_i` on an abelian ideal `span(e1..)`.
#[allow(clippy::needless_range_loop)]
pub fn semidirect(d: &Matrix) -> AlgebraStructure {
    let m = d.len();
    let mut entries = Vec::new();
    for j in 0..m {
        for i in 0..m {
            entries.push((0, j + 1, i + 1, d[i][j].clone()));
        }
    }
    AlgebraStructure::new(AlgebraKind::Lie, m + 1, entries).unwrap()
}

/// Brackets of the first `n - z` generators land in the last `z` (central) ones.
pub fn two_step(
    n: usize,
    z: usize,
    c: &dyn Fn(usize, usize, usize) -> Rational,
) -> AlgebraStructure {
    let g = n - z;
    let mut entries = Vec::new();
    for a in 0..g {
        for b in a + 1..g {
            for k in g..n {
                entries.push((a, b, k, c(a, b, k)));
            }
        }
    }
    AlgebraStructure::new(AlgebraKind::Lie, n, entries).unwrap()
}

fn random_matrix(rng: &mut impl Rng, m: usize) -> Matrix {
    (0..m)
        .map(|_| (0..m).map(|_| small(rng)).collect())
        .collect()
}

/// A Lie algebra of dimension `n` from one of several families, in a random basis.
pub fn lie_algebra(rng: &mut impl Rng, n: usize) -> AlgebraStructure {
    let g = match rng.gen_range(0..4) {
        0 if n >= 2 => semidirect(&random_matrix(rng, n - 1)),
        1 if n >= 3 => {
            let z = rng.gen_range(1..=n - 2);
            let consts: Vec<Rational> = (0..n * n * n).map(|_| small(rng)).collect();
            two_step(n, z, &|a, b, k| consts[(a * n + b) * n + k].clone())
        }
        2 if n >= 3 => {
            // sl2 plus an abelian summand
            let entries = [(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))];
            AlgebraStructure::new(AlgebraKind::Lie, n, entries).unwrap()
        }
        _ => AlgebraStructure::abelian(n),
    };
    g.change_basis(&invertible(rng, n)).unwrap()
}

pub fn cochain(rng: &mut impl Rng, n: usize, degree: usize, target: CochainTarget) -> Cochain {
    let len = Cochain::zero(n, degree, target).flat().len();
    Cochain::from_flat(n, degree, target, (0..len).map(|_| small(rng)).collect()).unwrap()
}

/// Law `mu + sum_r t^r orders[r-1]` written at `cap`, in decomposed form.
pub fn from_law(base: &AlgebraStructure, higher: &[Cochain], cap: usize) -> Deformation {
    let n = base.dim();
    let mut orders = vec![Cochain::zero(n, 2, CochainTarget::Adjoint); cap + 1];
    for (r, c) in higher.iter().enumerate().take(cap) {
        orders[r + 1] = c.clone();
    }
    decompose_deformation(base, &Perturbation::from_orders(n, orders).unwrap()).unwrap()
}

fn bracket_cochain(g: &AlgebraStructure, base: &AlgebraStructure) -> Cochain {
    Cochain::from_algebra(g).sub(&Cochain::from_algebra(base))
}

/// A deformation valid at `cap`, with `n <= max_dim`.
///
/// Families: semidirect products whose derivation is a polynomial in `t`,
/// two-step nilpotent laws with polynomial constants, multiples `s(t) phi`
/// of a Lie bracket over an abelian base, and gauge transforms of these or
/// of trivial deformations.
pub fn valid_deformation(rng: &mut impl Rng, max_dim: usize, cap: usize) -> Deformation {
    let family = rng.gen_range(0..5);
    let d = match family {
        0 => {
            let n = rng.gen_range(2..=max_dim);
            let deg = rng.gen_range(1..=cap.min(3));
            let ds: Vec<Matrix> = (0..=deg).map(|_| random_matrix(rng, n - 1)).collect();
            let base = semidirect(&ds[0]);
            let zero = semidirect(&vec![zeros(n - 1); n - 1]);
            let higher: Vec<Cochain> = ds[1..]
                .iter()
                .map(|m| bracket_cochain(&semidirect(m), &zero))
                .collect();
            from_law(&base, &higher, cap)
        }
        1 if max_dim >= 3 => {
            let n = rng.gen_range(3..=max_dim);
            let z = rng.gen_range(1..=n - 2);
            let deg = rng.gen_range(1..=cap.min(3));
            let consts: Vec<Vec<Rational>> = (0..=deg)
                .map(|_| (0..n * n * n).map(|_| small(rng)).collect())
                .collect();
            let law = |r: usize| two_step(n, z, &|a, b, k| consts[r][(a * n + b) * n + k].clone());
            let base = law(0);
            let zero = AlgebraStructure::abelian(n);
            let higher: Vec<Cochain> = (1..=deg).map(|r| bracket_cochain(&law(r), &zero)).collect();
            from_law(&base, &higher, cap)
        }
        2 => {
            let n = rng.gen_range(2..=max_dim);
            let phi = Cochain::from_algebra(&lie_algebra(rng, n));
            let s = series_in_m(rng, cap, 1, 3);
            let higher: Vec<Cochain> = (1..=cap).map(|r| phi.scale(s.coeff(r))).collect();
            from_law(&AlgebraStructure::abelian(n), &higher, cap)
        }
        _ => {
            let inner = if rng.gen_bool(0.5) {
                let n = rng.gen_range(2..=max_dim);
                Deformation::trivial(lie_algebra(rng, n), cap).unwrap()
            } else {
                valid_deformation(rng, max_dim, cap)
            };
            transport(&inner, &linear_gauge(rng, inner.base().dim(), cap)).unwrap()
        }
    };
    if d.is_empty() {
        valid_deformation(rng, max_dim, cap)
    } else {
        d
    }
}

/// `f = Id + t N` with a nonzero random `N`.
pub fn linear_gauge(rng: &mut impl Rng, n: usize, cap: usize) -> Gauge {
    loop {
        let m = random_matrix(rng, n);
        if m.iter().flatten().any(|x| *x != int(0)) {
            return Gauge::linear(&m, cap).unwrap();
        }
    }
}

fn direct_sum(a: &AlgebraStructure, b: &AlgebraStructure) -> AlgebraStructure {
    let n = a.dim();
    let mut entries = Vec::new();
    for (i, j, out) in a.entries() {
        entries.extend(out.into_iter().map(|(k, c)| (i, j, k, c)));
    }
    for (i, j, out) in b.entries() {
        entries.extend(out.into_iter().map(|(k, c)| (i + n, j + n, k + n, c)));
    }
    AlgebraStructure::new(a.kind(), n + b.dim(), entries).unwrap()
}

fn one_dim(unit: bool) -> AlgebraStructure {
    AlgebraStructure::assoc_from_ints(1, if unit { &[(0, 0, 0, 1)] } else { &[] }).unwrap()
}

/// All 2-dimensional tables with constants in `{-1, 0, 1}`.
fn tables2() -> impl Iterator<Item = AlgebraStructure> {
    (0..3usize.pow(8)).map(|code| {
        let mut c = code;
        let mut entries = Vec::new();
        for slot in 0..8 {
            let v = (c % 3) as i64 - 1;
            c /= 3;
            if v != 0 {
                entries.push((slot / 4, (slot / 2) % 2, slot % 2, v));
            }
        }
        AlgebraStructure::assoc_from_ints(2, &entries).unwrap()
    })
}

/// Algebras of dimension <= 3 for the closure test, found by exhaustive
/// search over small 2-dimensional tables and closed under adding a
/// one-dimensional summand.
pub struct MatchedPool {
    pub g: SubgroupTag,
    pub left: Vec<AlgebraStructure>,
    pub right: Vec<AlgebraStructure>,
}

impl MatchedPool {
    pub fn new(g: SubgroupTag) -> Self {
        let mut left: Vec<AlgebraStructure> = tables2()
            .filter(|a| g_associative_check(a, g, true).unwrap().holds())
            .collect();
        let mut right: Vec<AlgebraStructure> = tables2()
            .filter(|b| dual_identity_check(b, g).unwrap().holds())
            .collect();
        for pool in [&mut left, &mut right] {
            let base = pool.clone();
            pool.extend([one_dim(true), one_dim(false)]);
            for a in base.iter().step_by(7) {
                pool.push(direct_sum(a, &one_dim(true)));
                pool.push(direct_sum(a, &one_dim(false)));
            }
        }
        Self { g, left, right }
    }

    /// The pool for `g`, built once per test binary.
    pub fn cached(g: SubgroupTag) -> &'static MatchedPool {
        static POOLS: OnceLock<Vec<MatchedPool>> = OnceLock::new();
        let pools = POOLS.get_or_init(|| {
            SubgroupTag::ALL
                .iter()
                .map(|&g| MatchedPool::new(g))
                .collect()
        });
        pools.iter().find(|p| p.g == g).unwrap()
    }

    /// A random pair in random bases.
    pub fn sample(&self, rng: &mut impl Rng) -> (AlgebraStructure, AlgebraStructure) {
        let a = self.left.choose(rng).unwrap();
        let b = self.right.choose(rng).unwrap();
        let a = a.change_basis(&invertible(rng, a.dim())).unwrap();
        let b = b.change_basis(&invertible(rng, b.dim())).unwrap();
        (a, b)
    }
}

/// Non-associative tables satisfying `g`, from the same search.
pub fn non_associative(g: SubgroupTag) -> Vec<AlgebraStructure> {
    tables2()
        .filter(|a| !a.is_associative() && g_associative_check(a, g, true).unwrap().holds())
        .collect()
}

fn relabel(p: &PoissonStructure, m: &Matrix) -> PoissonStructure {
    PoissonStructure::new(
        p.assoc().change_basis(m).unwrap(),
        p.bracket().change_basis(m).unwrap(),
    )
    .unwrap()
}

/// A verified Poisson structure of dimension <= 3 in a random basis.
///
/// Families: commutative algebras with zero bracket, zero product with any
/// Lie bracket, and the unital `span{1, x, y}` with `x, y` squaring to zero
/// and `[x, y] = a x + b y`.
pub fn poisson(rng: &mut impl Rng) -> PoissonStructure {
    let p = match rng.gen_range(0..3) {
        0 => {
            let choices = [
                AlgebraStructure::assoc_from_ints(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
                    .unwrap(),
                AlgebraStructure::assoc_from_ints(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]).unwrap(),
                AlgebraStructure::assoc_from_ints(
                    3,
                    &[
                        (0, 0, 0, 1),
                        (0, 1, 1, 1),
                        (1, 0, 1, 1),
                        (0, 2, 2, 1),
                        (2, 0, 2, 1),
                        (1, 1, 2, 1),
                    ],
                )
                .unwrap(),
                one_dim(true),
            ];
            PoissonStructure::natural(choices.choose(rng).unwrap().clone()).unwrap()
        }
        1 => {
            let n = rng.gen_range(1..=3);
            PoissonStructure::new(
                AlgebraStructure::assoc_from_ints(n, &[]).unwrap(),
                lie_algebra(rng, n),
            )
            .unwrap()
        }
        _ => {
            let assoc = AlgebraStructure::assoc_from_ints(
                3,
                &[
                    (0, 0, 0, 1),
                    (0, 1, 1, 1),
                    (1, 0, 1, 1),
                    (0, 2, 2, 1),
                    (2, 0, 2, 1),
                ],
            )
            .unwrap();
            let bracket = AlgebraStructure::new(
                AlgebraKind::Lie,
                3,
                [(1, 2, 1, small(rng)), (1, 2, 2, small(rng))],
            )
            .unwrap();
            PoissonStructure::new(assoc, bracket).unwrap()
        }
    };
    let p = relabel(&p, &invertible(rng, p.dim()));
    assert_eq!(
        poisson_verify(&p),
        None,
        "generator produced a non-Poisson structure"
    );
    p
}
