//! Bundled example algebras, stored as JSON data files.
//!
//! The rank-one entries carry their torus: `r2` (roots `[1]`), `roots123`
//! (roots `[1, 2, 3]`) and `zero_root`, where `0` is a root and the trivial
//! second cohomology is nonzero.

use crate::algebra::AlgebraStructure;
use crate::io::{parse_algebra, LoadedAlgebra};
use crate::poisson::PoissonStructure;
use crate::rigidity::TorusData;

/// `(name, file contents)` for every bundled file.
pub const FILES: &[(&str, &str)] = &[
    ("r2", include_str!("../data/r2.json")),
    ("roots123", include_str!("../data/roots123.json")),
    ("zero_root", include_str!("../data/zero_root.json")),
    ("rank2", include_str!("../data/rank2.json")),
    ("sl2", include_str!("../data/sl2.json")),
    ("heisenberg3", include_str!("../data/heisenberg3.json")),
    ("abelian2", include_str!("../data/abelian2.json")),
    ("non_lie", include_str!("../data/non_lie.json")),
    (
        "upper_triangular",
        include_str!("../data/upper_triangular.json"),
    ),
    ("dual_numbers", include_str!("../data/dual_numbers.json")),
    (
        "left_symmetric2",
        include_str!("../data/left_symmetric2.json"),
    ),
    ("poisson3", include_str!("../data/poisson3.json")),
];

/// Names of the rank-one algebras used for the zero-root criterion.
pub const RANK_ONE: &[&str] = &["r2", "roots123", "zero_root"];

pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

fn load(name: &str) -> LoadedAlgebra {
    let text = source(name).unwrap_or_else(|| panic!("no catalog entry {name}"));
    parse_algebra(text).unwrap_or_else(|e| panic!("catalog entry {name} is invalid: {e}"))
}

/// A lie or assoc entry with its torus, if any. Panics on unknown names.
pub fn algebra(name: &str) -> (AlgebraStructure, Option<TorusData>) {
    match load(name) {
        LoadedAlgebra::Plain { algebra, torus } => (algebra, torus),
        LoadedAlgebra::Poisson(_) => panic!("catalog entry {name} is a poisson structure"),
    }
}

/// A poisson entry. Panics on unknown names.
pub fn poisson(name: &str) -> PoissonStructure {
    match load(name) {
        LoadedAlgebra::Poisson(p) => p,
        LoadedAlgebra::Plain { .. } => panic!("catalog entry {name} is not a poisson structure"),
    }
}
