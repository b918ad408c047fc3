//! Dense matrices over exact scalars, with reduced row echelon form,
//! kernels, exact solving and eigenspaces. No pivoting strategy is needed
//! for correctness; everything here is exact.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: matrix has {rows} rows but vector has length {len}")]
    DimensionMismatch { rows: usize, len: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of row reduction: the unique RREF, its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "need at least one row");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<Scalar>>) -> Self {
        Matrix::from_rows(cols).transpose()
    }

    /// Diagonal square matrix.
    pub fn diagonal(d: &[Scalar]) -> Self {
        Matrix::from_fn(d.len(), d.len(), |i, j| {
            if i == j { d[i].clone() } else { Scalar::zero() }
        })
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

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for t in 0..self.cols {
                let a = self.at(i, t);
                if a.is_zero() {
                    continue;
                }
                acc = acc + a * other.at(t, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "inner dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (t, x) in v.iter().enumerate() {
                    let a = self.at(i, t);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = acc + a * x;
                }
                acc
            })
            .collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self.at(i, j).is_one() } else { self.at(i, j).is_zero() }
                })
            })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.at(rows[i], cols[j]).clone())
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Scalar {
        assert_eq!(rows.len(), cols.len(), "minors are square");
        self.submatrix(rows, cols).det()
    }

    pub fn hstack(left: &Matrix, right: &Matrix) -> Matrix {
        assert_eq!(left.rows, right.rows, "row count mismatch");
        Matrix::from_fn(left.rows, left.cols + right.cols, |i, j| {
            if j < left.cols { left.at(i, j).clone() } else { right.at(i, j - left.cols).clone() }
        })
    }

    pub fn vstack(top: &Matrix, bottom: &Matrix) -> Matrix {
        assert_eq!(top.cols, bottom.cols, "column count mismatch");
        Matrix::from_fn(top.rows + bottom.rows, top.cols, |i, j| {
            if i < top.rows { top.at(i, j).clone() } else { bottom.at(i - top.rows, j).clone() }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.at(r, j) * c;
            self.set(r, j, v);
        }
    }

    /// row_i -= factor * row_r
    fn row_axpy(&mut self, i: usize, r: usize, factor: &Scalar) {
        for j in 0..self.cols {
            if self.at(r, j).is_zero() {
                continue;
            }
            let v = self.at(i, j) - factor * self.at(r, j);
            self.set(i, j, v);
        }
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).invert().expect("nonzero pivot");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    m.row_axpy(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.matrix.at(i, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self * x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { rows: self.rows, len: b.len() });
        }
        let aug = Matrix::hstack(self, &Matrix::from_cols(vec![b.to_vec()]));
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None); // pivot in the constant column
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in e.pivots.iter().enumerate() {
            x[p] = e.matrix.at(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Basis of `ker(self - lambda*I)`; empty when `lambda` is not an eigenvalue.
    pub fn eigenspace(&self, lambda: &Scalar) -> Vec<Vec<Scalar>> {
        assert!(self.is_square(), "eigenspace of a non-square matrix");
        let shifted = self.sub(&Matrix::identity(self.rows).scale(lambda));
        shifted.kernel_basis()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det = det * &pivot;
            let pinv = pivot.invert().expect("nonzero pivot");
            for i in (c + 1)..n {
                if !m.at(i, c).is_zero() {
                    let factor = m.at(i, c) * &pinv;
                    m.row_axpy(i, c, &factor);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Matrix::hstack(self, &Matrix::identity(n));
        let e = aug.rref();
        if e.rank < n || e.pivots.iter().take(n).enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| e.matrix.at(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// An incrementally built reduced echelon basis for a subspace of row
/// vectors. The stored rows are the unique RREF of the span, so two spans
/// are equal exactly when their `EchelonBasis` rows are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(width: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut b = EchelonBasis::new(width);
        for v in vectors {
            b.insert(v.clone());
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduce `v` modulo the current rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in 0..self.width {
                if !row[j].is_zero() {
                    v[j] = &v[j] - &(&factor * &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Add a vector to the span. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].invert().expect("nonzero leading entry");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Back-eliminate the new pivot from existing rows.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.width {
                if !v[j].is_zero() {
                    row[j] = &row[j] - &(&factor * &v[j]);
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Do two vector families span the same subspace of `F^width`?
pub fn same_span(width: usize, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    EchelonBasis::from_vectors(width, a) == EchelonBasis::from_vectors(width, b)
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The ratio `c` with `u = c * v`, for `v != 0`; `None` when `u` is not
/// proportional to `v`.
pub fn proportionality_ratio(u: &[Scalar], v: &[Scalar]) -> Option<Scalar> {
    assert_eq!(u.len(), v.len());
    let p = v.iter().position(|x| !x.is_zero())?;
    let c = &u[p] * &v[p].invert().expect("nonzero entry");
    for j in 0..u.len() {
        if &u[j] - &(&c * &v[j]) != Scalar::zero() {
            return None;
        }
    }
    Some(c)
}
