//! Exact-arithmetic workbench for valued deformations of finite-dimensional
//! algebras.
//!
//! Scalars are exact rationals. The valuation ring is `Q[[t]]`, realized by
//! [`TruncSeries`]: power series known modulo `t^(cap+1)`, where every
//! operation tracks how much precision survives. On top of that sit
//!
//! * [`decomp`]: the finite flag form `b1 V1 + b1 b2 V2 + ... + b1..bh Vh` of a
//!   vector over the maximal ideal, and the flag it generates;
//! * [`algebra`]: algebras by structure constants and alternating cochains;
//! * [`gerstenhaber`]: circle product, super-bracket, Chevalley-Eilenberg
//!   coboundary and cohomology dimensions;
//! * [`deformation`]: deformations over the capped ring, their Jacobi
//!   residuals, decomposition, graded system, gauge transport;
//! * [`rigidity`]: root analysis of rank-one solvable algebras and the
//!   enveloping-algebra non-rigidity report;
//! * [`nonassoc`] and [`poisson`]: G-associative identities for the subgroups
//!   of the symmetric group on three letters, tensor closure, Poisson algebras.
//!
//! [`io`] holds the JSON file formats shared with the command-line tool.

pub mod algebra;
pub mod catalog;
pub mod decomp;
pub mod deformation;
pub mod error;
pub mod gerstenhaber;
pub mod io;
pub mod linalg;
pub mod nonassoc;
pub mod poisson;
pub mod rational;
pub mod rigidity;
pub mod series;

pub use algebra::{AlgebraKind, AlgebraStructure, Cochain, CochainTarget};
pub use decomp::{decompose, flag_of, flags_equal, recompose, Flag, FlagDecomposition, PivotOrder};
pub use deformation::{decompose_deformation, Deformation, DeformationTerm, Gauge, Perturbation};
pub use error::{Error, Result};
pub use gerstenhaber::{circle, coboundary, cohomology_dim, super_bracket, CohomologyReport};
pub use nonassoc::SubgroupTag;
pub use poisson::PoissonStructure;
pub use rational::Rational;
pub use rigidity::TorusData;
pub use series::{SeriesVector, TruncSeries};
