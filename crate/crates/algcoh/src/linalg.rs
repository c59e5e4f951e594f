//! Dense exact-rational matrices, reduced row echelon form, and subspace computations.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::Error;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from its dimensions and a row-major entry list.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    /// Builds the zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    /// Builds a matrix from a list of rows, each of length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length must equal cols");
            entries.extend_from_slice(row);
        }
        Matrix { rows: rows.len(), cols, entries }
    }

    /// Builds a matrix from a list of columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length must equal rows");
            for (i, v) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    /// Returns the identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// Returns a reference to the entry at `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    /// Returns a mutable reference to the entry at `(r, c)`.
    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    /// Returns row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Swaps two rows in place.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Returns the transpose.
    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.entry(r, c).clone();
            }
        }
        t
    }

    /// Applies the matrix to a coordinate vector of length `cols`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must equal cols");
        let mut out = vec![Scalar::zero(); self.rows];
        for r in 0..self.rows {
            let row = self.row(r);
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v.iter()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            out[r] = acc;
        }
        out
    }

    /// Returns the rank, i.e. the number of pivots in the reduced row echelon form.
    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

/// Returns the zero vector of the given length.
pub fn vec_zero(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

/// Returns true when every component is zero.
pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Adds `coef * src` into `dst` componentwise.
pub fn vec_add_scaled(dst: &mut [Scalar], coef: &Scalar, src: &[Scalar]) {
    if coef.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d += coef * s;
        }
    }
}

/// Returns the componentwise sum of two vectors.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector lengths must match");
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

/// Returns the componentwise difference of two vectors.
pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector lengths must match");
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

/// Computes the reduced row echelon form and the pivot column indices.
///
/// Pivots are chosen as the first nonzero entry in column order, so the output
/// is deterministic and `rref(rref(m)) = rref(m)`.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(pivot_row) = (row..a.rows).find(|&r| !a.entry(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, pivot_row);
        let lead = a.entry(row, col).clone();
        if !lead.is_one() {
            for c in col..a.cols {
                if !a.entry(row, c).is_zero() {
                    let v = a.entry(row, c) / &lead;
                    *a.entry_mut(row, c) = v;
                }
            }
        }
        for r in 0..a.rows {
            if r == row || a.entry(r, col).is_zero() {
                continue;
            }
            let factor = a.entry(r, col).clone();
            for c in col..a.cols {
                if !a.entry(row, c).is_zero() {
                    let v = a.entry(r, c) - &factor * a.entry(row, c);
                    *a.entry_mut(r, c) = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Canonical basis of a linear subspace, stored in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    /// Returns the zero subspace of the given ambient dimension.
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new() }
    }

    /// Builds the canonical basis of the span of the given vectors.
    pub fn from_spanning(ambient_dim: usize, spanning: &[Vec<Scalar>]) -> Self {
        let m = Matrix::from_rows(ambient_dim, spanning);
        let (r, pivots) = rref(&m);
        let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        SubspaceBasis { ambient_dim, vectors }
    }

    /// Returns the dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Reduces `v` against the stored echelon rows, returning the residual.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector length must equal ambient_dim");
        let mut w = v.to_vec();
        for row in &self.vectors {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("stored rows are nonzero");
            if !w[pivot].is_zero() {
                let coef = -w[pivot].clone();
                vec_add_scaled(&mut w, &coef, row);
            }
        }
        w
    }

    /// Returns true when `v` lies in the subspace.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }
}

/// Canonical basis of the kernel `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let mut spanning = Vec::new();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for col in 0..m.cols {
        if is_pivot[col] {
            continue;
        }
        let mut v = vec_zero(m.cols);
        v[col] = Scalar::one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            if !r.entry(prow, col).is_zero() {
                v[pcol] = -r.entry(prow, col).clone();
            }
        }
        spanning.push(v);
    }
    SubspaceBasis::from_spanning(m.cols, &spanning)
}

/// Canonical basis of the column space of `m`.
pub fn image_basis(m: &Matrix) -> SubspaceBasis {
    let columns: Vec<Vec<Scalar>> =
        (0..m.cols).map(|c| (0..m.rows).map(|r| m.entry(r, c).clone()).collect()).collect();
    SubspaceBasis::from_spanning(m.rows, &columns)
}

/// Dimension of the quotient of `sup` by `sub`; errors when `sub` is not contained in `sup`.
pub fn quotient_dim(sup: &SubspaceBasis, sub: &SubspaceBasis) -> Result<usize, Error> {
    if sup.ambient_dim != sub.ambient_dim {
        return Err(Error::ShapeMismatch);
    }
    for v in &sub.vectors {
        if !sup.contains(v) {
            return Err(Error::SubspaceNotContained);
        }
    }
    Ok(sup.dim() - sub.dim())
}

/// Returns one exact solution of `m·v = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(rhs.len(), m.rows, "rhs length must equal rows");
    let mut aug = Matrix::zero(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            *aug.entry_mut(r, c) = m.entry(r, c).clone();
        }
        *aug.entry_mut(r, m.cols) = rhs[r].clone();
    }
    let (r, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut v = vec_zero(m.cols);
    for (prow, &pcol) in pivots.iter().enumerate() {
        v[pcol] = r.entry(prow, m.cols).clone();
    }
    Some(v)
}

/// Incremental echelon form used to accumulate the rank of a stream of vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<Scalar>>,
}

impl Echelon {
    /// Creates an empty accumulator over vectors of the given length.
    pub fn new(cols: usize) -> Self {
        Echelon { cols, pivots: Vec::new(), rows: Vec::new() }
    }

    /// Inserts a vector; returns true when it was independent of the rows seen so far.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length must equal cols");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !w[p].is_zero() {
                let coef = -w[p].clone();
                vec_add_scaled(&mut w, &coef, row);
            }
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[pivot].clone();
        if !lead.is_one() {
            for x in w.iter_mut().skip(pivot) {
                if !x.is_zero() {
                    *x = &*x / &lead;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, w);
        true
    }

    /// Returns the rank of all vectors inserted so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
