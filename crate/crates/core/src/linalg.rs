//! Exact linear algebra over the Gaussian rationals.
//!
//! Vectors and matrices are stored sparsely (sorted coordinate lists) so that
//! the quotient and Takeuchi constructions stay tractable on tensor-power
//! ambient spaces, while all bases remain canonical: every subspace is kept
//! in fully reduced echelon form with a deterministic pivot order, so equal
//! subspaces have identical representations.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

// ---------------------------------------------------------------------------
// Sparse vectors
// ---------------------------------------------------------------------------

/// A sparse vector: strictly increasing coordinate indices, nonzero entries.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SVec {
    entries: Vec<(usize, Scalar)>,
}

impl SVec {
    pub fn zero() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SVec { entries: vec![(i, Scalar::one())] }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SVec::zero()
        } else {
            SVec { entries: vec![(i, c)] }
        }
    }

    /// Builds from possibly unsorted, possibly repeated terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&i) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(i, c);
                }
            }
        }
        SVec { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Index and value of the first nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::zero();
        }
        SVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn conj(&self) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, v)| (*i, v.conj())).collect() }
    }

    /// `self + c · other`.
    pub fn axpy(&self, c: &Scalar, other: &SVec) -> SVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => {
                    out.push(a.next().unwrap().clone());
                }
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, v * c));
                }
                (Some(_), Some(_)) => {
                    let (i, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let s = va + &(vb * c);
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, v * c));
                }
                (None, None) => break,
            }
        }
        SVec { entries: out }
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.axpy(&Scalar::from_int(-1), other)
    }

    /// Hermitian dot product `sum_i conj(self_i) · other_i`.
    pub fn dot_conj(&self, other: &SVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((ia, _)), Some((ib, _))) = (a.peek(), b.peek()) {
            if ia < ib {
                a.next();
            } else if ia > ib {
                b.next();
            } else {
                let (_, va) = a.next().unwrap();
                let (_, vb) = b.next().unwrap();
                acc += &(&va.conj() * vb);
            }
        }
        acc
    }

    /// Plain bilinear dot product.
    pub fn dot(&self, other: &SVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((ia, _)), Some((ib, _))) = (a.peek(), b.peek()) {
            if ia < ib {
                a.next();
            } else if ia > ib {
                b.next();
            } else {
                let (_, va) = a.next().unwrap();
                let (_, vb) = b.next().unwrap();
                acc += &(va * vb);
            }
        }
        acc
    }

    /// Kronecker product: index `(i, j) -> i * right_dim + j`.
    pub fn tensor(&self, other: &SVec, right_dim: usize) -> SVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * right_dim + j, a * b));
            }
        }
        // Entries are produced in increasing order already.
        SVec { entries }
    }

    /// Re-indexes coordinates through `f`; `f` must be strictly monotone.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect() }
    }
}

impl fmt::Debug for SVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.entries.iter().map(|(i, c)| format!("({c})e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Renders a vector in terms of basis labels, for witnesses in reports.
pub fn render_vector(v: &SVec, labels: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = v
        .iter()
        .map(|(i, c)| {
            let l = labels.get(*i).cloned().unwrap_or_else(|| format!("e{i}"));
            if c.is_one() {
                l
            } else {
                format!("({c})·{l}")
            }
        })
        .collect();
    parts.join(" + ")
}

// ---------------------------------------------------------------------------
// Sparse matrices
// ---------------------------------------------------------------------------

/// Row-major sparse matrix; row `i` holds the coefficients of output
/// coordinate `i`, so `y = M x` with `y_i = sum_j M[i][j] x_j`.
#[derive(Clone, PartialEq)]
pub struct SMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<SVec>,
}

impl SMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SMat { rows, cols, data: vec![SVec::zero(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SMat { rows: n, cols: n, data: (0..n).map(SVec::unit).collect() }
    }

    pub fn from_rows(rows: Vec<SVec>, cols: usize) -> Self {
        SMat { rows: rows.len(), cols, data: rows }
    }

    /// Builds from columns: column `j` is the image of basis vector `e_j`.
    pub fn from_cols(cols: Vec<SVec>, rows: usize) -> Self {
        let ncols = cols.len();
        let mut data = vec![Vec::new(); rows];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                data[*i].push((j, c.clone()));
            }
        }
        SMat {
            rows,
            cols: ncols,
            data: data.into_iter().map(|mut v| {
                v.sort_by_key(|e| e.0);
                SVec { entries: v }
            }).collect(),
        }
    }

    pub fn from_dense(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        SMat {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SVec::from_dense(r)).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.data[i]
    }

    pub fn set_row(&mut self, i: usize, v: SVec) {
        self.data[i] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j)
    }

    pub fn col(&self, j: usize) -> SVec {
        SVec::from_terms(
            (0..self.rows).filter_map(|i| {
                let v = self.data[i].get(j);
                if v.is_zero() { None } else { Some((i, v)) }
            }),
        )
    }

    pub fn columns(&self) -> Vec<SVec> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, c) in row.iter() {
                cols[*j].push((i, c.clone()));
            }
        }
        cols.into_iter().map(|entries| SVec { entries }).collect()
    }

    pub fn transpose(&self) -> SMat {
        SMat::from_rows(self.columns(), self.rows)
    }

    pub fn conj(&self) -> SMat {
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.conj()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn apply(&self, x: &SVec) -> SVec {
        let mut entries = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let v = row.dot(x);
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        SVec { entries }
    }

    pub fn add(&self, other: &SMat) -> SMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SMat) -> SMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SMat {
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &SMat) -> SMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row.iter() {
                    for (j, b) in other.data[*k].iter() {
                        let term = a * b;
                        match acc.get_mut(j) {
                            Some(v) => *v += &term,
                            None => {
                                acc.insert(*j, term);
                            }
                        }
                    }
                }
                SVec { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
            })
            .collect();
        SMat { rows: self.rows, cols: other.cols, data }
    }

    /// Kronecker product (row and column indices composed as `i·d + j`).
    pub fn kron(&self, other: &SMat) -> SMat {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![SVec::zero(); rows];
        for (i1, r1) in self.data.iter().enumerate() {
            if r1.is_zero() {
                continue;
            }
            for (i2, r2) in other.data.iter().enumerate() {
                if r2.is_zero() {
                    continue;
                }
                data[i1 * other.rows + i2] = r1.tensor(r2, other.cols);
            }
        }
        SMat { rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        let mut r = Rref::new();
        for row in &self.data {
            r.add_row(row.clone());
        }
        r.rank()
    }

    /// Exact inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Result<SMat> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        // Row-reduce [M | I]; the augmented block indices are n..2n.
        let mut r = Rref::new();
        for i in 0..n {
            let mut row = self.data[i].clone();
            row.entries.push((n + i, Scalar::one()));
            r.add_row(row);
        }
        let rows = r.into_canonical();
        if rows.len() != n || rows.iter().enumerate().any(|(k, row)| row.leading().map(|(c, _)| c) != Some(k)) {
            return Err(Error::NotInvertible);
        }
        let inv_rows = rows
            .into_iter()
            .map(|row| SVec {
                entries: row
                    .entries
                    .into_iter()
                    .filter(|(j, _)| *j >= n)
                    .map(|(j, c)| (j - n, c))
                    .collect(),
            })
            .collect();
        Ok(SMat::from_rows(inv_rows, n))
    }
}

impl fmt::Debug for SMat {
    fmt_debug_mat!();
}

macro_rules! fmt_debug_mat {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(f, "SMat {}x{} [", self.rows, self.cols)?;
            for row in &self.data {
                writeln!(f, "  {:?}", row)?;
            }
            write!(f, "]")
        }
    };
}
use fmt_debug_mat;

// ---------------------------------------------------------------------------
// Echelon machinery
// ---------------------------------------------------------------------------

/// Incremental reduced-echelon accumulator. Rows are reduced against the
/// current pivots on insertion; `into_canonical` back-eliminates so the
/// result is the unique reduced echelon basis of the row span.
pub struct Rref {
    pivots: BTreeMap<usize, SVec>,
}

impl Default for Rref {
    fn default() -> Self {
        Self::new()
    }
}

impl Rref {
    pub fn new() -> Self {
        Rref { pivots: BTreeMap::new() }
    }

    /// Reduces `v` against the current pivot rows (forward elimination only).
    pub fn reduce(&self, mut v: SVec) -> SVec {
        loop {
            let Some((lead, coeff)) = v.leading().map(|(i, c)| (i, c.clone())) else {
                return v;
            };
            match self.pivots.get(&lead) {
                Some(p) => v = v.axpy(&-coeff, p),
                None => {
                    // Reduce later coordinates that hit pivot columns too, so
                    // membership tests terminate with a fully reduced vector.
                    let hit = v
                        .iter()
                        .skip(1)
                        .find(|(i, _)| self.pivots.contains_key(i))
                        .map(|(i, c)| (*i, c.clone()));
                    match hit {
                        Some((i, c)) => v = v.axpy(&-c, &self.pivots[&i]),
                        None => return v,
                    }
                }
            }
        }
    }

    /// Adds a row to the span. Returns true if the rank grew.
    pub fn add_row(&mut self, v: SVec) -> bool {
        let mut v = v;
        loop {
            let Some((lead, coeff)) = v.leading().map(|(i, c)| (i, c.clone())) else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => v = v.axpy(&-coeff, p),
                None => {
                    let inv = coeff.inv().expect("nonzero leading coefficient");
                    self.pivots.insert(lead, v.scale(&inv));
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Finishes the reduction: returns the canonical reduced echelon rows in
    /// pivot order, with every pivot column cleared from the other rows.
    pub fn into_canonical(mut self) -> Vec<SVec> {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for &c in cols.iter().rev() {
            let prow = self.pivots[&c].clone();
            for (&c2, row) in self.pivots.iter_mut() {
                if c2 >= c {
                    break;
                }
                let coeff = row.get(c);
                if !coeff.is_zero() {
                    *row = row.axpy(&-coeff, &prow);
                }
            }
        }
        self.pivots.into_values().collect()
    }
}

// ---------------------------------------------------------------------------
// Finite-dimensional spaces, subspaces, quotients, linear maps
// ---------------------------------------------------------------------------

/// A finite-dimensional space with labelled basis.
#[derive(Clone, PartialEq, Eq)]
pub struct FinSpace {
    pub labels: Vec<String>,
}

impl FinSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::Invalid(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(FinSpace { labels })
    }

    pub fn indexed(prefix: &str, dim: usize) -> Self {
        FinSpace { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Tensor-product space with `a⊗b` labels.
    pub fn tensor(&self, other: &FinSpace) -> FinSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        FinSpace { labels }
    }
}

impl fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSpace(dim {})", self.dim())
    }
}

/// A linear or antilinear map between labelled spaces.
///
/// An antilinear map conjugates its input first: `f(v) = M · conj(v)`, so
/// `f(λv) = conj(λ) f(v)`.
#[derive(Clone, PartialEq)]
pub struct LinMap {
    pub domain: FinSpace,
    pub codomain: FinSpace,
    pub mat: SMat,
    pub antilinear: bool,
}

impl LinMap {
    pub fn new(domain: FinSpace, codomain: FinSpace, mat: SMat, antilinear: bool) -> Result<Self> {
        if mat.rows != codomain.dim() || mat.cols != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{} but spaces are {} -> {}",
                mat.rows,
                mat.cols,
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(LinMap { domain, codomain, mat, antilinear })
    }

    pub fn linear(domain: FinSpace, codomain: FinSpace, mat: SMat) -> Result<Self> {
        Self::new(domain, codomain, mat, false)
    }

    pub fn identity(space: FinSpace) -> Self {
        let n = space.dim();
        LinMap { domain: space.clone(), codomain: space, mat: SMat::identity(n), antilinear: false }
    }

    pub fn zero(domain: FinSpace, codomain: FinSpace) -> Self {
        let m = SMat::zero(codomain.dim(), domain.dim());
        LinMap { domain, codomain, mat: m, antilinear: false }
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        if self.antilinear {
            self.mat.apply(&v.conj())
        } else {
            self.mat.apply(v)
        }
    }

    /// `self ∘ other`. Antilinearity flags compose by parity.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(
            other.codomain.dim(),
            self.domain.dim(),
            "composition shape mismatch"
        );
        let inner = if self.antilinear { other.mat.conj() } else { other.mat.clone() };
        LinMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.mul(&inner),
            antilinear: self.antilinear ^ other.antilinear,
        }
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.antilinear, other.antilinear, "cannot add maps of mixed linearity");
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.add(&other.mat),
            antilinear: self.antilinear,
        }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.antilinear, other.antilinear, "cannot subtract maps of mixed linearity");
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mat: self.mat.sub(&other.mat),
            antilinear: self.antilinear,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn inverse(&self) -> Result<LinMap> {
        let inv = if self.antilinear {
            // f(v) = M conj(v); f^{-1}(w) = conj(M^{-1} w), matrix conj(M^{-1}).
            self.mat.inverse()?.conj()
        } else {
            self.mat.inverse()?
        };
        Ok(LinMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            mat: inv,
            antilinear: self.antilinear,
        })
    }

    /// Kernel as a canonical subspace of the domain.
    pub fn kernel(&self) -> Subspace {
        // For antilinear f: f(v) = M conj(v) = 0 iff conj(v) in ker M.
        let k = kernel_of_rows(self.mat.data.clone(), self.domain.dim());
        if self.antilinear {
            Subspace::from_spanning(
                self.domain.dim(),
                k.basis.iter().map(|b| b.conj()).collect(),
            )
        } else {
            k
        }
    }

    /// Image as a canonical subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.codomain.dim(), self.mat.columns())
    }

    /// Deterministic particular preimage (free coordinates set to zero),
    /// or `None` when the target is not in the image.
    pub fn solve(&self, target: &SVec) -> Option<SVec> {
        let n = self.domain.dim();
        let mut r = Rref::new();
        for i in 0..self.mat.rows {
            let mut row = self.mat.row(i).clone();
            let t = target.get(i);
            if !t.is_zero() {
                row.entries.push((n, t));
            }
            r.add_row(row);
        }
        let rows = r.into_canonical();
        let mut sol = Vec::new();
        for row in &rows {
            let (lead, _) = row.leading().expect("canonical rows are nonzero");
            if lead == n {
                return None; // inconsistent system
            }
            let v = row.get(n);
            if !v.is_zero() {
                sol.push((lead, v));
            }
        }
        let x = SVec { entries: sol };
        if self.antilinear {
            Some(x.conj())
        } else {
            Some(x)
        }
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinMap({} -> {}, {})",
            self.domain.dim(),
            self.codomain.dim(),
            if self.antilinear { "antilinear" } else { "linear" }
        )
    }
}

/// Kernel of the linear system given by equation rows.
pub fn kernel_of_rows(rows: Vec<SVec>, unknowns: usize) -> Subspace {
    let mut r = Rref::new();
    for row in rows {
        r.add_row(row);
    }
    let canonical = r.into_canonical();
    let pivot_cols: Vec<usize> = canonical
        .iter()
        .map(|row| row.leading().expect("nonzero").0)
        .collect();
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for f in 0..unknowns {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut terms = vec![(f, Scalar::one())];
        for (row, &c) in canonical.iter().zip(&pivot_cols) {
            let v = row.get(f);
            if !v.is_zero() {
                terms.push((c, -v));
            }
        }
        basis.push(SVec::from_terms(terms));
    }
    Subspace::from_spanning(unknowns, basis)
}

/// A subspace in canonical reduced echelon form.
#[derive(Clone, PartialEq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// Canonical RREF rows, sorted by pivot column.
    pub basis: Vec<SVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(SVec::unit).collect() }
    }

    pub fn from_spanning(ambient_dim: usize, vectors: Vec<SVec>) -> Self {
        let mut r = Rref::new();
        for v in vectors {
            r.add_row(v);
        }
        Subspace { ambient_dim, basis: r.into_canonical() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.leading().expect("nonzero").0).collect()
    }

    fn as_rref(&self) -> Rref {
        let mut r = Rref::new();
        for b in &self.basis {
            r.pivots.insert(b.leading().expect("nonzero").0, b.clone());
        }
        r
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Subtracts the subspace component, leaving the canonical complement
    /// representative (zero on all pivot columns).
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut v = v.clone();
        for b in &self.basis {
            let (c, _) = b.leading().expect("nonzero");
            let coeff = v.get(c);
            if !coeff.is_zero() {
                v = v.axpy(&-coeff, b);
            }
        }
        v
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        let coords: Vec<(usize, Scalar)> = self
            .basis
            .iter()
            .enumerate()
            .filter_map(|(k, b)| {
                let (c, _) = b.leading().expect("nonzero");
                let x = v.get(c);
                if x.is_zero() { None } else { Some((k, x)) }
            })
            .collect();
        let coords = SVec { entries: coords };
        let mut rec = SVec::zero();
        for (k, c) in coords.iter() {
            rec = rec.axpy(c, &self.basis[*k]);
        }
        if rec == *v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient_dim, vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Zassenhaus: row-reduce [b | b] for our basis and [c | 0] for the
        // other; rows with zero left block have right block in the intersection.
        let n = self.ambient_dim;
        let mut r = Rref::new();
        for b in &self.basis {
            let mut row = b.clone();
            row.entries.extend(b.iter().map(|(i, c)| (i + n, c.clone())).collect::<Vec<_>>());
            r.add_row(row);
        }
        for c in &other.basis {
            r.add_row(c.clone());
        }
        let rows = r.into_canonical();
        let mut inter = Vec::new();
        for row in rows {
            if row.leading().map(|(i, _)| i >= n).unwrap_or(false) {
                inter.push(SVec {
                    entries: row.entries.into_iter().map(|(i, c)| (i - n, c)).collect(),
                });
            }
        }
        Subspace::from_spanning(n, inter)
    }

    /// Image under a map, as a subspace of the codomain.
    pub fn map_through(&self, f: &LinMap) -> Subspace {
        Subspace::from_spanning(
            f.codomain.dim(),
            self.basis.iter().map(|b| f.apply(b)).collect(),
        )
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient_dim)
    }
}

/// A quotient of a labelled space by a subspace, with canonical projection
/// and section. Quotient basis vectors are the classes of the ambient basis
/// vectors at the non-pivot coordinates of the subspace.
#[derive(Clone)]
pub struct Quotient {
    pub ambient: FinSpace,
    pub space: FinSpace,
    pub sub: Subspace,
    nonpivot: Vec<usize>,
}

impl Quotient {
    pub fn new(ambient: FinSpace, sub: Subspace) -> Result<Self> {
        if sub.ambient_dim != ambient.dim() {
            return Err(Error::NotContained(format!(
                "subspace ambient dim {} vs space dim {}",
                sub.ambient_dim,
                ambient.dim()
            )));
        }
        let pivot: std::collections::BTreeSet<usize> = sub.pivot_cols().into_iter().collect();
        let nonpivot: Vec<usize> =
            (0..ambient.dim()).filter(|i| !pivot.contains(i)).collect();
        let labels = nonpivot.iter().map(|&i| format!("[{}]", ambient.labels[i])).collect();
        Ok(Quotient { ambient, space: FinSpace { labels }, sub, nonpivot })
    }

    pub fn dim(&self) -> usize {
        self.nonpivot.len()
    }

    pub fn project(&self, v: &SVec) -> SVec {
        let reduced = self.sub.reduce(v);
        SVec::from_terms(reduced.iter().map(|(i, c)| {
            let k = self
                .nonpivot
                .binary_search(i)
                .expect("reduced vector is supported on non-pivot columns");
            (k, c.clone())
        }))
    }

    /// Canonical section: class `k` lifts to the ambient basis vector at the
    /// k-th non-pivot coordinate.
    pub fn section(&self, q: &SVec) -> SVec {
        SVec::from_terms(q.iter().map(|(k, c)| (self.nonpivot[*k], c.clone())))
    }

    pub fn projection_map(&self) -> LinMap {
        let cols: Vec<SVec> = (0..self.ambient.dim())
            .map(|j| self.project(&SVec::unit(j)))
            .collect();
        LinMap {
            domain: self.ambient.clone(),
            codomain: self.space.clone(),
            mat: SMat::from_cols(cols, self.dim()),
            antilinear: false,
        }
    }

    pub fn section_map(&self) -> LinMap {
        let cols: Vec<SVec> = (0..self.dim()).map(|k| SVec::unit(self.nonpivot[k])).collect();
        LinMap {
            domain: self.space.clone(),
            codomain: self.ambient.clone(),
            mat: SMat::from_cols(cols, self.ambient.dim()),
            antilinear: false,
        }
    }
}

/// Quotient of `ambient` by `sub`, as the spec operation: the new space and
/// the canonical surjection.
pub fn quotient(ambient: &FinSpace, sub: &Subspace) -> Result<(FinSpace, LinMap)> {
    let q = Quotient::new(ambient.clone(), sub.clone())?;
    let proj = q.projection_map();
    Ok((q.space, proj))
}

// ---------------------------------------------------------------------------
// Hermitian positivity
// ---------------------------------------------------------------------------

/// Exact positive-definiteness for a conjugate-symmetric matrix, by recursive
/// LDL with conjugation: all pivots must be positive rationals.
pub fn psd_check(gram: &SMat) -> Result<bool> {
    if gram.rows != gram.cols {
        return Err(Error::DimensionMismatch(format!(
            "gram matrix is {}x{}",
            gram.rows, gram.cols
        )));
    }
    let n = gram.rows;
    for i in 0..n {
        for j in i..n {
            if gram.get(i, j) != gram.get(j, i).conj() {
                return Err(Error::NotHermitian(i, j));
            }
        }
    }
    let mut m: Vec<Vec<Scalar>> = (0..n).map(|i| gram.row(i).to_dense(n)).collect();
    for k in 0..n {
        let pivot = m[k][k].clone();
        if !pivot.is_positive_real() {
            return Ok(false);
        }
        let inv = pivot.inv().expect("positive pivot");
        for i in (k + 1)..n {
            let f = &m[i][k] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in (k + 1)..n {
                let delta = &f * &m[k][j];
                let v = &m[i][j] - &delta;
                m[i][j] = v;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn kernel_examples() {
        let sp = FinSpace::indexed("e", 3);
        let zero = LinMap::zero(sp.clone(), sp.clone());
        assert_eq!(zero.kernel().dim(), 3);
        let id = LinMap::identity(sp);
        assert_eq!(id.kernel().dim(), 0);

        let sp2 = FinSpace::indexed("e", 2);
        let m = SMat::from_dense(vec![vec![s(1), s(1)], vec![s(1), s(1)]], 2);
        let f = LinMap::linear(sp2.clone(), sp2, m).unwrap();
        let k = f.kernel();
        assert_eq!(k.dim(), 1);
        // Canonical echelon basis: leading 1 at the first coordinate.
        assert_eq!(k.basis[0], SVec::from_terms(vec![(0, s(1)), (1, s(-1))]));
    }

    #[test]
    fn rank_nullity_holds() {
        let sp = FinSpace::indexed("e", 4);
        let m = SMat::from_dense(
            vec![
                vec![s(1), s(2), s(3), s(4)],
                vec![s(2), s(4), s(6), s(8)],
                vec![s(0), s(1), s(1), s(0)],
                vec![s(1), s(3), s(4), s(4)],
            ],
            4,
        );
        let f = LinMap::linear(sp.clone(), sp, m).unwrap();
        assert_eq!(f.kernel().dim() + f.image().dim(), 4);
    }

    #[test]
    fn quotient_dims_and_kernel() {
        let ambient = FinSpace::indexed("e", 5);
        let sub = Subspace::from_spanning(
            5,
            vec![
                SVec::from_terms(vec![(0, s(1)), (2, s(1))]),
                SVec::from_terms(vec![(1, s(1)), (4, s(-1))]),
            ],
        );
        let (q, proj) = quotient(&ambient, &sub).unwrap();
        assert_eq!(q.dim(), 3);
        // The surjection kills exactly the subspace.
        assert_eq!(proj.kernel().basis, sub.basis);

        let full = Subspace::full(5);
        let (q2, p2) = quotient(&ambient, &full).unwrap();
        assert_eq!(q2.dim(), 0);
        assert!(p2.is_zero());

        let (q3, p3) = quotient(&ambient, &Subspace::zero(5)).unwrap();
        assert_eq!(q3.dim(), 5);
        assert_eq!(p3.mat, SMat::identity(5));
    }

    #[test]
    fn solve_minimal_pivot() {
        let sp = FinSpace::indexed("e", 2);
        let m = SMat::from_dense(vec![vec![s(1), s(1)], vec![s(1), s(1)]], 2);
        let f = LinMap::linear(sp.clone(), sp.clone(), m).unwrap();
        let target = SVec::from_terms(vec![(0, s(2)), (1, s(2))]);
        let sol = f.solve(&target).unwrap();
        assert_eq!(sol, SVec::from_terms(vec![(0, s(2))]));
        assert_eq!(f.apply(&sol), target);

        let zero = LinMap::zero(sp.clone(), sp.clone());
        assert!(zero.solve(&SVec::unit(0)).is_none());
        let id = LinMap::identity(sp);
        assert_eq!(id.solve(&target).unwrap(), target);
    }

    #[test]
    fn psd_examples() {
        assert!(psd_check(&SMat::identity(3)).unwrap());
        assert!(!psd_check(&SMat::zero(1, 1)).unwrap());
        // [[2, i], [-i, 2]] has pivots 2 and 3/2.
        let m = SMat::from_dense(
            vec![vec![s(2), Scalar::i()], vec![-Scalar::i(), s(2)]],
            2,
        );
        assert!(psd_check(&m).unwrap());
        // Non-Hermitian input is a structural error.
        let bad = SMat::from_dense(vec![vec![s(1), s(1)], vec![s(0), s(1)]], 2);
        assert!(psd_check(&bad).is_err());
    }

    #[test]
    fn antilinear_composition_flags() {
        let sp = FinSpace::indexed("e", 1);
        let conj = LinMap::new(sp.clone(), sp.clone(), SMat::identity(1), true).unwrap();
        let v = SVec::single(0, Scalar::i());
        assert_eq!(conj.apply(&v), SVec::single(0, -Scalar::i()));
        let twice = conj.compose(&conj);
        assert!(!twice.antilinear);
        assert_eq!(twice.apply(&v), v);
    }

    #[test]
    fn inverse_round_trip() {
        let m = SMat::from_dense(
            vec![vec![s(1), s(2)], vec![s(3), Scalar::gaussian(1, 1, 1, 1)]],
            2,
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), SMat::identity(2));
        assert_eq!(inv.mul(&m), SMat::identity(2));
    }

    #[test]
    fn intersect_and_sum() {
        let a = Subspace::from_spanning(
            3,
            vec![SVec::unit(0), SVec::from_terms(vec![(1, s(1)), (2, s(1))])],
        );
        let b = Subspace::from_spanning(
            3,
            vec![SVec::from_terms(vec![(0, s(1)), (1, s(1)), (2, s(1))])],
        );
        let inter = a.intersect(&b);
        assert_eq!(inter.dim(), 1);
        assert!(a.contains_subspace(&inter) && b.contains_subspace(&inter));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
