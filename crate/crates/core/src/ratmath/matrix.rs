use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn filled(dim: usize, value: Rational) -> Self {
        RatVector(vec![value; dim])
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        values.iter().map(|&v| Rational::from_integer(v)).collect()
    }

    /// Unit vector `e_index` of the given dimension.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &RatVector) -> Result<Rational> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!(
                "dot of length {} with length {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(dot_unchecked(&self.0, &other.0))
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    /// Convex combination `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &RatVector, t: &Rational) -> RatVector {
        let s = Rational::one() - t;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| &s * a + t * b)
            .collect()
    }

    /// Coordinates rendered as `p/q` strings.
    pub fn to_pq_strings(&self) -> Vec<String> {
        self.0.iter().map(Rational::to_pq).collect()
    }
}

/// Sparse-aware dot product; zero coefficients are skipped.
pub(crate) fn dot_unchecked(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        if x.is_one() {
            acc += y;
        } else {
            acc += x * y;
        }
    }
    acc
}

impl FromIterator<Rational> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl<'a> IntoIterator for &'a RatVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors of equal length. An empty row list
    /// yields a `0 x cols` matrix.
    pub fn from_rows(rows: &[RatVector], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    r.dim()
                )));
            }
            entries.extend(r.iter().cloned());
        }
        Ok(RatMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<RatVector> = rows.iter().map(|r| RatVector::from_i64s(r)).collect();
        Self::from_rows(&vecs, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> RatVector {
        RatVector::new(self.row(i).to_vec())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Submatrix on the given row and column index lists, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let mut m = RatMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &RatVector) -> Result<RatVector> {
        if self.cols != v.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot_unchecked(self.row(i), v.entries()))
            .collect())
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.row_reduce(self.cols).len()
    }

    /// Forward elimination restricted to the first `pivot_cols` columns,
    /// pivoting on the first nonzero entry in column order. Returns the pivot
    /// columns; the matrix is left in row-echelon form.
    fn row_reduce(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip().expect("nonzero pivot");
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let factor = &self[(i, c)] * &inv;
                self.sub_row_multiple(i, r, &factor, c);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= factor * row[source]`, touching columns `from..`.
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational, from: usize) {
        for j in from..self.cols {
            let s = &self.entries[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            self.entries[target * self.cols + j] -= delta;
        }
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !work[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                work.swap_rows(p, c);
                det = -det;
            }
            let pivot = work[(c, c)].clone();
            let inv = pivot.recip().expect("nonzero pivot");
            for i in c + 1..n {
                if work[(i, c)].is_zero() {
                    continue;
                }
                let factor = &work[(i, c)] * &inv;
                work.sub_row_multiple(i, c, &factor, c);
            }
            det *= &pivot;
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan on `[M | I]`; `Ok(None)` when singular.
    pub fn inverse(&self) -> Result<Option<RatMatrix>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        if !aug.gauss_jordan(n) {
            return Ok(None);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(Some(aug.select(&rows, &cols)))
    }

    /// Unique solution of `A x = b` for square `A`; `Ok(None)` when singular.
    pub fn solve(&self, b: &RatVector) -> Result<Option<RatVector>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "solve with non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if b.dim() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.dim(),
                self.rows
            )));
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        if !aug.gauss_jordan(n) {
            return Ok(None);
        }
        Ok(Some((0..n).map(|i| aug[(i, n)].clone()).collect()))
    }

    /// Reduces the leading `n x n` block to the identity. Returns false if it
    /// is singular.
    fn gauss_jordan(&mut self, n: usize) -> bool {
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !self[(i, c)].is_zero()) else {
                return false;
            };
            self.swap_rows(p, c);
            let inv = self[(c, c)].recip().expect("nonzero pivot");
            for j in c..self.cols {
                let v = &self[(c, j)] * &inv;
                self[(c, j)] = v;
            }
            for i in 0..n {
                if i == c || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                self.sub_row_multiple(i, c, &factor, c);
            }
        }
        true
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incremental rank tracker: keeps an echelon basis of the rows accepted so
/// far and reports whether a new row is independent of them.
#[derive(Clone, Debug)]
pub struct RowSpan {
    dim: usize,
    // (pivot column, normalised row with 1 at the pivot)
    basis: Vec<(usize, Vec<Rational>)>,
}

impl RowSpan {
    pub fn new(dim: usize) -> Self {
        RowSpan {
            dim,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, row: &[Rational]) -> Vec<Rational> {
        let mut r = row.to_vec();
        for (p, b) in &self.basis {
            if r[*p].is_zero() {
                continue;
            }
            let factor = r[*p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r
    }

    /// True if `row` lies outside the current span.
    pub fn is_independent(&self, row: &[Rational]) -> bool {
        self.reduce(row).iter().any(|x| !x.is_zero())
    }

    /// Adds `row` if it is independent; returns whether it was added.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        debug_assert_eq!(row.len(), self.dim);
        let mut r = self.reduce(row);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // keep the basis fully reduced so `reduce` is a single pass
        for (_, b) in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let factor = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        self.basis.push((p, r));
        true
    }
}
