//! Roots of solvable Lie algebras `g = t ⊕ n` and the obstructions they give.
//!
//! For rank one the torus is spanned by a single `X`, and in an adapted basis
//! `[X, Y_i] = lambda_i Y_i` on the nilradical. The roots decide whether
//! `H^2(g, K)` can vanish: a zero root `Y_0` yields the closed, non-exact
//! 2-form `w_X ∧ w_{Y_0}`. Rigidity of `g` itself is never decided here; it
//! is an input supplied by the caller.

use num_traits::Zero;

use crate::algebra::{AlgebraKind, AlgebraStructure, Cochain, CochainTarget};
use crate::error::{Error, Result};
use crate::gerstenhaber::{coboundary, cohomology_dim, is_coboundary};
use crate::rational::Rational;

/// Informational note attached to rank-one reports.
pub const ZERO_ROOT_NOTE: &str =
    "a rigid rank-one algebra is conjectured to have no zero root; this is reported, never assumed";

/// Declared splitting of the basis into torus and nilradical indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusData {
    torus: Vec<usize>,
    nil: Vec<usize>,
}

impl TorusData {
    /// The nilradical indices are the complement of `torus` in `0..dim`.
    pub fn new(dim: usize, torus: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; dim];
        for &i in &torus {
            if i >= dim {
                return Err(Error::InvalidTorus(format!(
                    "index {i} out of range for dimension {dim}"
                )));
            }
            if seen[i] {
                return Err(Error::InvalidTorus(format!("index {i} listed twice")));
            }
            seen[i] = true;
        }
        let nil = (0..dim).filter(|&i| !seen[i]).collect();
        Ok(Self { torus, nil })
    }

    pub fn torus(&self) -> &[usize] {
        &self.torus
    }

    pub fn nil(&self) -> &[usize] {
        &self.nil
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// `lambda_i` in the order of the nilradical indices.
    pub roots: Vec<Rational>,
    pub zero_is_root: bool,
    pub rank: usize,
}

fn check_lie(g: &AlgebraStructure) -> Result<()> {
    if g.kind() != AlgebraKind::Lie {
        return Err(Error::WrongKind {
            expected: "a lie algebra",
        });
    }
    Ok(())
}

/// Eigenvalues of `ad X` on the nilradical, read off an adapted basis.
pub fn roots(g: &AlgebraStructure, t: &TorusData) -> Result<RootReport> {
    check_lie(g)?;
    if t.rank() != 1 {
        return Err(Error::NotRankOne(t.rank()));
    }
    if t.torus.len() + t.nil.len() != g.dim() {
        return Err(Error::InvalidTorus(format!(
            "torus data covers {} indices, algebra has dimension {}",
            t.torus.len() + t.nil.len(),
            g.dim()
        )));
    }
    let x = t.torus[0];
    let mut roots = Vec::with_capacity(t.nil.len());
    for &i in &t.nil {
        let v = g.product(x, i);
        if v.iter().enumerate().any(|(k, c)| k != i && !c.is_zero()) {
            return Err(Error::NotAdapted { torus: x, nil: i });
        }
        roots.push(v[i].clone());
    }
    let zero_is_root = roots.iter().any(Zero::is_zero);
    Ok(RootReport {
        roots,
        zero_is_root,
        rank: 1,
    })
}

/// `theta = w_X ∧ w_{Y_0}` for a zero root `Y_0`, with both exact checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroRootCertificate {
    pub torus_index: usize,
    pub zero_root_index: usize,
    pub theta: Cochain,
    pub closed: bool,
    pub exact: bool,
}

impl ZeroRootCertificate {
    /// Closed and not exact, so `H^2(g, K) != 0`.
    pub fn certifies(&self) -> bool {
        self.closed && !self.exact
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroRootReport {
    pub roots: RootReport,
    pub dim_h2_trivial: usize,
    /// `dim H^2(g, K) = 0` exactly when zero is not a root.
    pub consistent: bool,
    pub certificate: Option<ZeroRootCertificate>,
}

/// Computes both sides of the zero-root criterion for a rank-one algebra.
///
/// The caller asserts rigidity; the report only states whether the
/// computed cohomology and the roots agree with the criterion.
pub fn zero_root_criterion(g: &AlgebraStructure, t: &TorusData) -> Result<ZeroRootReport> {
    let roots = roots(g, t)?;
    let dim_h2_trivial = cohomology_dim(g, 2, CochainTarget::Trivial)?.dim_h;
    let certificate = match roots.roots.iter().position(Zero::is_zero) {
        None => None,
        Some(pos) => {
            let x = t.torus[0];
            let y0 = t.nil[pos];
            let theta = Cochain::dual_wedge(g.dim(), &[x, y0])?;
            let closed = coboundary(g, &theta)?.is_zero();
            let exact = is_coboundary(g, &theta)?;
            Some(ZeroRootCertificate {
                torus_index: x,
                zero_root_index: y0,
                theta,
                closed,
                exact,
            })
        }
    };
    let consistent = (dim_h2_trivial == 0) == !roots.zero_is_root;
    Ok(ZeroRootReport {
        roots,
        dim_h2_trivial,
        consistent,
        certificate,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The enveloping algebra is not rigid.
    NotRigid,
    /// `H^2(g, K) = 0`: the cohomological argument gives nothing.
    NoObstruction,
}

impl Verdict {
    pub fn describe(self) -> &'static str {
        match self {
            Verdict::NotRigid => "U(g) not rigid",
            Verdict::NoObstruction => "no obstruction from H2(g, K)",
        }
    }
}

/// Which rule produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `g` is not rigid, so neither is `U(g)`.
    BaseNotRigid,
    /// Rigid of rank at least two.
    RankTwoOrMore,
    /// Rigid of rank one with `H^2(g, K) != 0`.
    NonzeroTrivialH2,
    /// Rigid of rank one with `H^2(g, K) = 0`.
    TrivialH2Vanishes,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::BaseNotRigid => "base_not_rigid",
            Rule::RankTwoOrMore => "rank_two_or_more",
            Rule::NonzeroTrivialH2 => "nonzero_trivial_h2",
            Rule::TrivialH2Vanishes => "trivial_h2_vanishes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub verdict: Verdict,
    pub rule: Rule,
    pub rank: usize,
    /// Present for rank-one rigid inputs.
    pub roots: Option<RootReport>,
    pub dim_h2_trivial: Option<usize>,
    pub note: Option<&'static str>,
}

/// Rigidity verdict for the enveloping algebra `U(g)`.
pub fn enveloping_rigidity_report(
    g: &AlgebraStructure,
    t: &TorusData,
    asserted_rigid: bool,
) -> Result<RigidityReport> {
    check_lie(g)?;
    let rank = t.rank();
    let h2 = |g| cohomology_dim(g, 2, CochainTarget::Trivial).map(|r| r.dim_h);
    let report = |verdict, rule, roots, dim, note| RigidityReport {
        verdict,
        rule,
        rank,
        roots,
        dim_h2_trivial: dim,
        note,
    };
    if !asserted_rigid {
        return Ok(report(
            Verdict::NotRigid,
            Rule::BaseNotRigid,
            None,
            None,
            None,
        ));
    }
    if rank >= 2 {
        return Ok(report(
            Verdict::NotRigid,
            Rule::RankTwoOrMore,
            None,
            Some(h2(g)?),
            None,
        ));
    }
    let r = roots(g, t)?;
    let dim = h2(g)?;
    if dim > 0 {
        Ok(report(
            Verdict::NotRigid,
            Rule::NonzeroTrivialH2,
            Some(r),
            Some(dim),
            Some(ZERO_ROOT_NOTE),
        ))
    } else {
        Ok(report(
            Verdict::NoObstruction,
            Rule::TrivialH2Vanishes,
            Some(r),
            Some(dim),
            Some(ZERO_ROOT_NOTE),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ints};

    fn r2() -> (AlgebraStructure, TorusData) {
        (
            AlgebraStructure::lie_from_ints(2, &[(0, 1, 1, 1)]).unwrap(),
            TorusData::new(2, vec![0]).unwrap(),
        )
    }

    fn roots123() -> (AlgebraStructure, TorusData) {
        let g = AlgebraStructure::lie_from_ints(
            4,
            &[(0, 1, 1, 1), (0, 2, 2, 2), (0, 3, 3, 3), (1, 2, 3, 1)],
        )
        .unwrap();
        (g, TorusData::new(4, vec![0]).unwrap())
    }

    fn zero_root() -> (AlgebraStructure, TorusData) {
        (
            AlgebraStructure::lie_from_ints(3, &[(0, 1, 1, 1)]).unwrap(),
            TorusData::new(3, vec![0]).unwrap(),
        )
    }

    #[test]
    fn root_examples() {
        let (g, t) = r2();
        let r = roots(&g, &t).unwrap();
        assert_eq!((r.roots, r.zero_is_root), (ints(&[1]), false));
        let (g, t) = zero_root();
        let r = roots(&g, &t).unwrap();
        assert_eq!((r.roots, r.zero_is_root), (ints(&[1, 0]), true));
        let (g, t) = roots123();
        assert_eq!(roots(&g, &t).unwrap().roots, ints(&[1, 2, 3]));
    }

    #[test]
    fn root_errors() {
        let (g, _) = roots123();
        assert_eq!(
            roots(&g, &TorusData::new(4, vec![0, 1]).unwrap()),
            Err(Error::NotRankOne(2))
        );
        // [X, Y1] = Y1 + Y2 is not diagonal
        let g = AlgebraStructure::lie_from_ints(3, &[(0, 1, 1, 1), (0, 1, 2, 1)]).unwrap();
        assert_eq!(
            roots(&g, &TorusData::new(3, vec![0]).unwrap()),
            Err(Error::NotAdapted { torus: 0, nil: 1 })
        );
        assert!(matches!(
            TorusData::new(3, vec![3]),
            Err(Error::InvalidTorus(_))
        ));
        assert!(matches!(
            TorusData::new(3, vec![1, 1]),
            Err(Error::InvalidTorus(_))
        ));
    }

    #[test]
    fn zero_root_criterion_catalog() {
        let (g, t) = r2();
        let z = zero_root_criterion(&g, &t).unwrap();
        assert_eq!(
            (z.dim_h2_trivial, z.roots.zero_is_root, z.consistent),
            (0, false, true)
        );
        assert!(z.certificate.is_none());
        let (g, t) = roots123();
        let z = zero_root_criterion(&g, &t).unwrap();
        assert_eq!(
            (z.dim_h2_trivial, z.roots.zero_is_root, z.consistent),
            (0, false, true)
        );
        let (g, t) = zero_root();
        let z = zero_root_criterion(&g, &t).unwrap();
        assert!(z.dim_h2_trivial >= 1 && z.roots.zero_is_root && z.consistent);
        let cert = z.certificate.unwrap();
        assert_eq!((cert.torus_index, cert.zero_root_index), (0, 2));
        assert!(cert.certifies());
    }

    #[test]
    fn enveloping_reports() {
        let (g, t) = r2();
        let r = enveloping_rigidity_report(&g, &t, false).unwrap();
        assert_eq!((r.verdict, r.rule), (Verdict::NotRigid, Rule::BaseNotRigid));
        let r = enveloping_rigidity_report(&g, &t, true).unwrap();
        assert_eq!(
            (r.verdict, r.rule, r.dim_h2_trivial),
            (Verdict::NoObstruction, Rule::TrivialH2Vanishes, Some(0))
        );
        let (g, _) = roots123();
        let r =
            enveloping_rigidity_report(&g, &TorusData::new(4, vec![0, 3]).unwrap(), true).unwrap();
        assert_eq!(
            (r.verdict, r.rule, r.rank),
            (Verdict::NotRigid, Rule::RankTwoOrMore, 2)
        );
        let (g, t) = zero_root();
        let r = enveloping_rigidity_report(&g, &t, true).unwrap();
        assert_eq!(
            (r.verdict, r.rule),
            (Verdict::NotRigid, Rule::NonzeroTrivialH2)
        );
    }

    #[test]
    fn scaling_the_torus_scales_roots() {
        let (g, t) = roots123();
        let mut p = crate::linalg::identity(4);
        p[0][0] = int(3);
        let scaled = g.change_basis(&p).unwrap();
        assert_eq!(roots(&scaled, &t).unwrap().roots, ints(&[3, 6, 9]));
    }
}
