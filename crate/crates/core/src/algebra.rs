//! Finite-dimensional algebras by structure constants, and alternating cochains.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{vec_is_zero, zeros, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// Antisymmetric bracket; tables list only `i < j`.
    Lie,
    /// Arbitrary (not necessarily associative) product; any `(i, j)`.
    Assoc,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Lie => "lie",
            AlgebraKind::Assoc => "assoc",
        }
    }
}

/// An algebra of dimension `n` with product `e_i e_j = sum_k c_ij^k e_k`.
/// One row of a sparse multiplication table: `e_i * e_j = sum c e_k` as `(i, j, [(k, c)])`.
pub type TableRow = (usize, usize, Vec<(usize, Rational)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStructure {
    dim: usize,
    kind: AlgebraKind,
    // dense c_ij^k at (i * n + j) * n + k
    consts: Vec<Rational>,
    labels: Option<Vec<String>>,
}

impl AlgebraStructure {
    /// Builds an algebra from `(i, j, k, c)` entries; repeated entries add up.
    ///
    /// Lie tables only accept `i < j` and are extended antisymmetrically.
    pub fn new(
        kind: AlgebraKind,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut consts = zeros(dim * dim * dim);
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            match kind {
                AlgebraKind::Lie => {
                    if i >= j {
                        return Err(Error::NonIncreasingLieKey { i, j });
                    }
                    consts[(j * dim + i) * dim + k] -= &c;
                    consts[(i * dim + j) * dim + k] += c;
                }
                AlgebraKind::Assoc => consts[(i * dim + j) * dim + k] += c,
            }
        }
        Ok(Self {
            dim,
            kind,
            consts,
            labels: None,
        })
    }

    /// Lie algebra with integer structure constants, for tests and catalogs.
    pub fn lie_from_ints(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::new(
            AlgebraKind::Lie,
            dim,
            entries
                .iter()
                .map(|&(i, j, k, c)| (i, j, k, crate::rational::int(c))),
        )
    }

    pub fn assoc_from_ints(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::new(
            AlgebraKind::Assoc,
            dim,
            entries
                .iter()
                .map(|&(i, j, k, c)| (i, j, k, crate::rational::int(c))),
        )
    }

    /// Builds from a full product function on basis pairs. For `Lie` the
    /// function must be antisymmetric.
    pub fn from_products(
        kind: AlgebraKind,
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let mut consts = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: v.len(),
                    });
                }
                consts.extend(v);
            }
        }
        let a = Self {
            dim,
            kind,
            consts,
            labels: None,
        };
        if kind == AlgebraKind::Lie {
            for i in 0..dim {
                for j in i..dim {
                    let sym: Vec<Rational> = a
                        .product(i, j)
                        .iter()
                        .zip(a.product(j, i))
                        .map(|(x, y)| x + y)
                        .collect();
                    if !vec_is_zero(&sym) {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            kind: AlgebraKind::Lie,
            consts: zeros(dim * dim * dim),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `e_i e_j` as a coefficient vector.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.consts[start..start + self.dim]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero table entries in file order; for Lie algebras only `i < j`.
    pub fn entries(&self) -> Vec<TableRow> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.kind == AlgebraKind::Lie && i >= j {
                    continue;
                }
                let outs: Vec<(usize, Rational)> = self
                    .product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !outs.is_empty() {
                    out.push((i, j, outs));
                }
            }
        }
        out
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two coordinate vectors.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zeros(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[x, y]` for a Lie algebra.
    pub fn bracket_eval(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if self.kind != AlgebraKind::Lie {
            return Err(Error::WrongKind {
                expected: "a lie algebra",
            });
        }
        self.mul(x, y)
    }

    /// `(x y) z - x (y z)`.
    pub fn associator(
        &self,
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
    ) -> Result<Vec<Rational>> {
        let left = self.mul(&self.mul(x, y)?, z)?;
        let right = self.mul(x, &self.mul(y, z)?)?;
        Ok(left.iter().zip(&right).map(|(a, b)| a - b).collect())
    }

    /// Associator on basis elements.
    pub fn basis_associator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let mut out = zeros(n);
        for (l, c) in self
            .product(i, j)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            for (o, d) in out.iter_mut().zip(self.product(l, k)) {
                *o += c * d;
            }
        }
        for (l, c) in self
            .product(j, k)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
        {
            for (o, d) in out.iter_mut().zip(self.product(i, l)) {
                *o -= c * d;
            }
        }
        out
    }

    /// First basis triple (lexicographic) with a nonzero associator.
    pub fn first_nonassociative_triple(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
            .find(|&[i, j, k]| !vec_is_zero(&self.basis_associator(i, j, k)))
    }

    pub fn is_associative(&self) -> bool {
        self.first_nonassociative_triple().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// The Jacobiator `(x,y,z) -> [[x,y],z] + [[y,z],x] + [[z,x],y]` as a 3-cochain.
    pub fn jacobiator(&self) -> Result<Cochain> {
        if self.kind != AlgebraKind::Lie {
            return Err(Error::WrongKind {
                expected: "a lie algebra",
            });
        }
        let n = self.dim;
        let mut out = Cochain::zero(n, 3, CochainTarget::Adjoint);
        for (idx, t) in increasing_tuples(n, 3).into_iter().enumerate() {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut v = zeros(n);
            for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                for (l, coef) in self
                    .product(a, b)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                {
                    for (o, d) in v.iter_mut().zip(self.product(l, c)) {
                        *o += coef * d;
                    }
                }
            }
            out.values_mut(idx).clone_from_slice(&v);
        }
        Ok(out)
    }

    /// Whether the Jacobi identity holds, with the first failing increasing triple.
    pub fn is_lie(&self) -> Result<(bool, Option<[usize; 3]>)> {
        let j = self.jacobiator()?;
        let tuples = increasing_tuples(self.dim, 3);
        let failing = (0..tuples.len()).find(|&idx| !vec_is_zero(j.values(idx)));
        Ok(match failing {
            None => (true, None),
            Some(idx) => (
                false,
                Some([tuples[idx][0], tuples[idx][1], tuples[idx][2]]),
            ),
        })
    }

    /// Change of basis: the new product is `P^-1 mu(P x, P y)` where the
    /// columns of `P` are the new basis vectors in old coordinates.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        let p_inv = linalg::inverse(p).ok_or(Error::Singular)?;
        let col = |j: usize| -> Vec<Rational> { p.iter().map(|r| r[j].clone()).collect() };
        let cols: Vec<Vec<Rational>> = (0..n).map(col).collect();
        let mut consts = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&cols[i], &cols[j])?;
                consts.extend(linalg::mat_vec(&p_inv, &prod));
            }
        }
        Ok(Self {
            dim: n,
            kind: self.kind,
            consts,
            labels: None,
        })
    }
}

/// Strictly increasing `p`-tuples of `0..n` in lexicographic order.
pub fn increasing_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < p - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, p, cur, out);
            cur.pop();
        }
    }
    rec(0, n, p, &mut cur, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a strictly increasing tuple in [`increasing_tuples`] order.
pub fn tuple_index(n: usize, tuple: &[usize]) -> usize {
    let p = tuple.len();
    let mut idx = 0;
    let mut start = 0;
    for (pos, &x) in tuple.iter().enumerate() {
        for skipped in start..x {
            idx += binomial(n - skipped - 1, p - pos - 1);
        }
        start = x + 1;
    }
    idx
}

/// Sorts `args` in place and returns the permutation sign, or `None` when two
/// arguments coincide.
pub fn sort_with_sign(args: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..args.len() {
        let mut j = i;
        while j > 0 && args[j - 1] > args[j] {
            args.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if args.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CochainTarget {
    /// Values in the algebra itself.
    Adjoint,
    /// Scalar values (trivial one-dimensional module).
    Trivial,
}

impl CochainTarget {
    pub fn name(self) -> &'static str {
        match self {
            CochainTarget::Adjoint => "adjoint",
            CochainTarget::Trivial => "trivial",
        }
    }
}

/// Alternating `p`-linear map on an `n`-dimensional algebra, stored densely
/// over strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    degree: usize,
    target: CochainTarget,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize, target: CochainTarget) -> Self {
        let width = match target {
            CochainTarget::Adjoint => dim,
            CochainTarget::Trivial => 1,
        };
        Self {
            dim,
            degree,
            target,
            values: zeros(binomial(dim, degree) * width),
        }
    }

    /// Builds from a flat coefficient vector (tuple-major, then output index).
    pub fn from_flat(
        dim: usize,
        degree: usize,
        target: CochainTarget,
        values: Vec<Rational>,
    ) -> Result<Self> {
        let z = Self::zero(dim, degree, target);
        if values.len() != z.values.len() {
            return Err(Error::DimensionMismatch {
                expected: z.values.len(),
                got: values.len(),
            });
        }
        Ok(Self { values, ..z })
    }

    /// The `index`-th standard basis cochain of the flat coordinate space.
    pub fn basis_element(dim: usize, degree: usize, target: CochainTarget, index: usize) -> Self {
        let mut c = Self::zero(dim, degree, target);
        c.values[index] = Rational::one();
        c
    }

    /// The product of a Lie algebra as its own 2-cochain.
    pub fn from_algebra(g: &AlgebraStructure) -> Self {
        let n = g.dim();
        let mut c = Self::zero(n, 2, CochainTarget::Adjoint);
        for (idx, t) in increasing_tuples(n, 2).iter().enumerate() {
            c.values_mut(idx).clone_from_slice(g.product(t[0], t[1]));
        }
        c
    }

    /// The Lie algebra whose bracket is this adjoint 2-cochain.
    pub fn to_lie_algebra(&self) -> Result<AlgebraStructure> {
        if self.degree != 2 || self.target != CochainTarget::Adjoint {
            return Err(Error::UnsupportedDegree(self.degree));
        }
        let n = self.dim;
        let mut entries = Vec::new();
        for (idx, t) in increasing_tuples(n, 2).iter().enumerate() {
            for (k, c) in self.values(idx).iter().enumerate() {
                if !c.is_zero() {
                    entries.push((t[0], t[1], k, c.clone()));
                }
            }
        }
        AlgebraStructure::new(AlgebraKind::Lie, n, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn target(&self) -> CochainTarget {
        self.target
    }

    pub fn width(&self) -> usize {
        match self.target {
            CochainTarget::Adjoint => self.dim,
            CochainTarget::Trivial => 1,
        }
    }

    pub fn num_tuples(&self) -> usize {
        binomial(self.dim, self.degree)
    }

    pub fn flat(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_flat(self) -> Vec<Rational> {
        self.values
    }

    /// Value on the `idx`-th increasing tuple.
    pub fn values(&self, idx: usize) -> &[Rational] {
        let w = self.width();
        &self.values[idx * w..(idx + 1) * w]
    }

    pub fn values_mut(&mut self, idx: usize) -> &mut [Rational] {
        let w = self.width();
        &mut self.values[idx * w..(idx + 1) * w]
    }

    /// Sets the value on a strictly increasing tuple.
    pub fn set(&mut self, args: &[usize], value: &[Rational]) -> Result<()> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        if let Some(&index) = args.iter().find(|&&a| a >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim,
            });
        }
        if args.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingArgs(args.to_vec()));
        }
        if value.len() != self.width() {
            return Err(Error::DimensionMismatch {
                expected: self.width(),
                got: value.len(),
            });
        }
        let idx = tuple_index(self.dim, args);
        self.values_mut(idx).clone_from_slice(value);
        Ok(())
    }

    /// Value on basis arguments in any order, by alternation.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<Rational> {
        let mut sorted = args.to_vec();
        match sort_with_sign(&mut sorted) {
            None => zeros(self.width()),
            Some(sign) => {
                let v = self.values(tuple_index(self.dim, &sorted));
                if sign > 0 {
                    v.to_vec()
                } else {
                    v.iter().map(|x| -x).collect()
                }
            }
        }
    }

    /// `f(v, e_rest...)` with a coordinate vector in the first slot and
    /// basis elements in the others.
    pub fn eval_first(&self, v: &[Rational], rest: &[usize]) -> Vec<Rational> {
        let mut out = zeros(self.width());
        let mut args = Vec::with_capacity(rest.len() + 1);
        for (l, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            args.clear();
            args.push(l);
            args.extend_from_slice(rest);
            let val = self.eval_basis(&args);
            for (o, x) in out.iter_mut().zip(&val) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Full multilinear evaluation on coordinate vectors.
    pub fn eval(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: a.len(),
                });
            }
        }
        let mut out = zeros(self.width());
        let mut idx = vec![0usize; self.degree];
        fn rec(
            c: &Cochain,
            args: &[Vec<Rational>],
            pos: usize,
            coef: Rational,
            idx: &mut Vec<usize>,
            out: &mut [Rational],
        ) {
            if pos == args.len() {
                for (o, x) in out.iter_mut().zip(c.eval_basis(idx)) {
                    *o += &coef * x;
                }
                return;
            }
            for (l, a) in args[pos].iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                idx[pos] = l;
                rec(c, args, pos + 1, &coef * a, idx, out);
            }
        }
        rec(self, args, 0, Rational::one(), &mut idx, &mut out);
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.values)
    }

    fn same_space(&self, other: &Self) {
        assert_eq!(
            (self.dim, self.degree, self.target),
            (other.dim, other.degree, other.target),
            "cochains live in different spaces"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_space(other);
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_space(other);
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            values: self.values.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        self.same_space(other);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Nonzero values keyed by increasing tuple.
    pub fn nonzero_values(&self) -> Vec<(Vec<usize>, Vec<Rational>)> {
        increasing_tuples(self.dim, self.degree)
            .into_iter()
            .enumerate()
            .filter(|(idx, _)| !vec_is_zero(self.values(*idx)))
            .map(|(idx, t)| (t, self.values(idx).to_vec()))
            .collect()
    }

    /// Wedge product `w_a ^ w_b ^ ...` of dual basis forms (trivial target).
    pub fn dual_wedge(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut sorted = indices.to_vec();
        let mut c = Self::zero(dim, indices.len(), CochainTarget::Trivial);
        if let Some(&index) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        if let Some(sign) = sort_with_sign(&mut sorted) {
            let idx = tuple_index(dim, &sorted);
            c.values[idx] = Rational::from_integer(sign.into());
        }
        Ok(c)
    }
}
