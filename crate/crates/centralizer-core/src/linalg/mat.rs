use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{FieldSpec, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspaces live in different ambient spaces: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix entries belong to different fields")]
    FieldMismatch,
    #[error("linear system has no solution")]
    NoSolution,
}

/// Dense matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Mat {
        let mut m = Mat::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                entries.push(s);
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], field: FieldSpec) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Mat::from_fn(r, c, field, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Mat {
        let r = rows.len();
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        assert_eq!(entries.len(), r * cols);
        Mat {
            rows: r,
            cols,
            field,
            entries,
        }
    }

    /// Row vector (1 x n) from a slice.
    pub fn row_vec(v: &[Scalar], field: FieldSpec) -> Mat {
        Mat {
            rows: 1,
            cols: v.len(),
            field,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_cloned(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).add_unchecked(other.get(i, j))
        }))
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "sub {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).sub_unchecked(other.get(i, j))
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).mul_unchecked(c)
        })
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j).neg())
    }

    /// Matrix product; panics on inner-dimension mismatch (validated at API
    /// boundaries).
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul inner dimension");
        let zero = self.field.zero();
        let mut out = Mat::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let v = if cur.is_zero() {
                        a.mul_unchecked(b)
                    } else {
                        cur.add_unchecked(&a.mul_unchecked(b))
                    };
                    out.set(i, j, v);
                }
            }
        }
        let _ = zero;
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply dimension");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add_unchecked(&a.mul_unchecked(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product: (A ⊗ B)(u ⊗ v) = Au ⊗ Bv in the standard basis
    /// ordering (index = i_A * rows_B + i_B).
    pub fn kron(&self, other: &Mat) -> Mat {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Mat::from_fn(rows, cols, self.field, |i, j| {
            let (ia, ib) = (i / other.rows, i % other.rows);
            let (ja, jb) = (j / other.cols, j % other.cols);
            self.get(ia, ja).mul_unchecked(other.get(ib, jb))
        })
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::ShapeMismatch("hstack row counts".into()));
        }
        Ok(Mat::from_fn(
            self.rows,
            self.cols + other.cols,
            self.field,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch("vstack col counts".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    /// Rows flattened into one long row-major vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Inverse of the row-major flattening.
    pub fn from_flat(rows: usize, cols: usize, field: FieldSpec, flat: Vec<Scalar>) -> Mat {
        assert_eq!(flat.len(), rows * cols);
        Mat {
            rows,
            cols,
            field,
            entries: flat,
        }
    }

    pub fn submatrix_rows(&self, which: &[usize]) -> Mat {
        Mat::from_fn(which.len(), self.cols, self.field, |i, j| {
            self.get(which[i], j).clone()
        })
    }

    /// Reduced row echelon form together with pivot columns and rank.
    /// The result is canonical: two matrices have the same row space iff
    /// their RREFs coincide (after dropping zero rows).
    pub fn rref(&self) -> (Mat, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let mut piv = None;
            for i in r..m.rows {
                if !m.get(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            m.swap_rows(r, piv);
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.axpy_rows(i, r, &factor.neg(), c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, r)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        if c.is_one() {
            return;
        }
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = self.entries[idx].mul_unchecked(c);
            }
        }
    }

    /// row_i += c * row_src, starting from column `from` (earlier columns are
    /// known to stay zero).
    fn axpy_rows(&mut self, i: usize, src: usize, c: &Scalar, from: usize) {
        for j in from..self.cols {
            let s = self.entries[src * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let idx = i * self.cols + j;
            let add = s.mul_unchecked(c);
            self.entries[idx] = if self.entries[idx].is_zero() {
                add
            } else {
                self.entries[idx].add_unchecked(&add)
            };
        }
    }

    /// Solves M x = b. Returns a particular solution or None.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let bcol = Mat::from_fn(self.rows, 1, self.field, |i, _| b[i].clone());
        let aug = self.hstack(&bcol)?;
        let (r, pivots, _) = aug.rref();
        // inconsistent iff a pivot lands in the last column
        if pivots.iter().any(|&c| c == self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}
