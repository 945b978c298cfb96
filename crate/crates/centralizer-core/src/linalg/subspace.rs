use serde::{Deserialize, Serialize};

use crate::linalg::mat::{LinalgError, Mat};
use crate::scalar::{FieldSpec, Scalar};

/// A subspace of K^n, carried by the canonical RREF basis of its row space.
/// Equal subspaces have identical basis matrices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    /// RREF, no zero rows.
    basis: Mat,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat) -> Subspace {
        let (r, pivots, rank) = m.rref();
        let basis = r.submatrix_rows(&(0..rank).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Mat::zero(0, ambient, field),
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace::from_rows(&Mat::identity(ambient, field))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Reduces `v` against the basis: the result has zeros in all pivot
    /// columns, and is zero iff `v` lies in the subspace.
    pub fn reduce_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in p..self.ambient {
                let b = self.basis.get(row, j);
                if !b.is_zero() {
                    w[j] = w[j].sub_unchecked(&c.mul_unchecked(b));
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.reduce_vec(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_rows(&stacked))
    }

    /// Zassenhaus: row reduce [[U U],[W 0]]; rows supported only on the right
    /// half give a basis of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let f = self.field;
        let k = self.dim();
        let l = other.dim();
        let m = Mat::from_fn(k + l, 2 * n, f, |i, j| {
            if i < k {
                self.basis.get(i, j % n).clone()
            } else if j < n {
                other.basis.get(i - k, j).clone()
            } else {
                f.zero()
            }
        });
        let (r, _, rank) = m.rref();
        let mut rows = Vec::new();
        for i in 0..rank {
            let left_zero = (0..n).all(|j| r.get(i, j).is_zero());
            if left_zero {
                rows.push((0..n).map(|j| r.get(i, n + j).clone()).collect::<Vec<_>>());
            }
        }
        let int = Mat::from_rows(rows, n, f);
        Ok(Subspace::from_rows(&int))
    }

    /// Coordinates of `v` in the basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut w = v.to_vec();
        let mut coords = vec![self.field.zero(); self.dim()];
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in p..self.ambient {
                let b = self.basis.get(row, j);
                if !b.is_zero() {
                    w[j] = w[j].sub_unchecked(&c.mul_unchecked(b));
                }
            }
            coords[row] = c;
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

/// A span that remembers how to express members as combinations of the
/// ORIGINAL spanning rows (not the canonical RREF basis). Built by row
/// reducing [rows | identity].
#[derive(Clone, Debug)]
pub struct SpannedSpace {
    ambient: usize,
    nrows: usize,
    field: FieldSpec,
    /// RREF of the spanning rows together with the recorded transform:
    /// rref_rows = transform * original_rows.
    rref_rows: Mat,
    transform: Mat,
    pivots: Vec<usize>,
}

impl SpannedSpace {
    pub fn new(rows: &Mat) -> SpannedSpace {
        let n = rows.cols();
        let k = rows.rows();
        let f = rows.field();
        let aug = rows
            .hstack(&Mat::identity(k, f))
            .expect("same row count");
        let (r, pivots_aug, _) = aug.rref();
        let pivots: Vec<usize> = pivots_aug.iter().cloned().filter(|&p| p < n).collect();
        let rank = pivots.len();
        let idx: Vec<usize> = (0..rank).collect();
        let top = r.submatrix_rows(&idx);
        let rref_rows = Mat::from_fn(rank, n, f, |i, j| top.get(i, j).clone());
        let transform = Mat::from_fn(rank, k, f, |i, j| top.get(i, n + j).clone());
        SpannedSpace {
            ambient: n,
            nrows: k,
            field: f,
            rref_rows,
            transform,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients c with v = c * original_rows, when v lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        let mut d = vec![self.field.zero(); self.dim()];
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ambient {
                let b = self.rref_rows.get(row, j);
                if !b.is_zero() {
                    w[j] = w[j].sub_unchecked(&c.mul_unchecked(b));
                }
            }
            d[row] = c;
        }
        if !w.iter().all(|x| x.is_zero()) {
            return None;
        }
        // v = d * rref_rows = (d * transform) * original_rows
        let mut out = vec![self.field.zero(); self.nrows];
        for (i, di) in d.iter().enumerate() {
            if di.is_zero() {
                continue;
            }
            for j in 0..self.nrows {
                let t = self.transform.get(i, j);
                if !t.is_zero() {
                    out[j] = out[j].add_unchecked(&di.mul_unchecked(t));
                }
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }
}

/// Kernel of M (solutions of M x = 0) as a canonical subspace of K^cols.
pub fn kernel(m: &Mat) -> Subspace {
    let (r, pivots, rank) = m.rref();
    let f = m.field();
    let n = m.cols();
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = Some(i);
        }
        v
    };
    let mut rows = Vec::new();
    for free in 0..n {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            let c = r.get(i, free);
            if !c.is_zero() {
                v[p] = c.neg();
            }
        }
        rows.push(v);
    }
    Subspace::from_rows(&Mat::from_rows(rows, n, f))
}

/// Column space of M as a subspace of K^rows.
pub fn image(m: &Mat) -> Subspace {
    Subspace::from_rows(&m.transpose())
}

/// A quotient K^n / U presented by the complement coordinates (the non-pivot
/// columns of U's basis). `project . section = id` on the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    sub: Subspace,
    /// Ambient coordinate indices forming the complement basis.
    section: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(sub: Subspace) -> QuotientSpace {
        let section: Vec<usize> = (0..sub.ambient_dim())
            .filter(|c| !sub.pivots().contains(c))
            .collect();
        QuotientSpace { sub, section }
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.sub.field()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.sub.reduce_vec(v);
        self.section.iter().map(|&c| r[c].clone()).collect()
    }

    /// The canonical lift: quotient coordinates placed on the complement
    /// coordinates, zero elsewhere.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.section.len());
        let mut v = vec![self.field().zero(); self.ambient_dim()];
        for (k, &c) in self.section.iter().enumerate() {
            v[c] = q[k].clone();
        }
        v
    }

    /// Matrix of the map induced on the quotient by an ambient endomorphism
    /// `g` (columns = images of lifted complement basis vectors), provided
    /// g preserves the subspace. Returns None when it does not.
    pub fn induced_map(&self, g: &Mat) -> Option<Mat> {
        let n = self.ambient_dim();
        assert_eq!(g.rows(), n);
        assert_eq!(g.cols(), n);
        // stability check: g(U) ⊆ U
        for i in 0..self.sub.dim() {
            let gv = g.apply(self.sub.basis().row(i));
            if !self.sub.contains_vec(&gv) {
                return None;
            }
        }
        let d = self.dim();
        let mut out = Mat::zero(d, d, self.field());
        for (k, &c) in self.section.iter().enumerate() {
            let mut e = vec![self.field().zero(); n];
            e[c] = self.field().one();
            let img = self.project(&g.apply(&e));
            for (i, val) in img.into_iter().enumerate() {
                out.set(i, k, val);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: &[Vec<i64>]) -> Mat {
        Mat::from_i64_rows(rows, FieldSpec::Rationals)
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = Mat::identity(3, FieldSpec::Rationals);
        assert!(kernel(&id).is_zero());
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let m = qmat(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        for i in 0..k.dim() {
            let img = m.apply(k.basis().row(i));
            assert!(img.iter().all(|x| x.is_zero()));
        }
        // rank-nullity
        assert_eq!(k.dim() + image(&m).dim(), m.cols());
    }

    #[test]
    fn e1_action_matrix_has_rank_one_image() {
        // 4x4 matrix of the cup-cap generator acting on the two-fold tensor
        // square of a 2-dimensional symplectic space, derived by hand from
        // the epsilon-symbol formula; frozen here as an oracle.
        let e1 = qmat(&[
            vec![0, 0, 0, 0],
            vec![0, -1, 1, 0],
            vec![0, 1, -1, 0],
            vec![0, 0, 0, 0],
        ]);
        let im = image(&e1);
        assert_eq!(im.dim(), 1);
        let ker = kernel(&e1);
        assert_eq!(ker.dim(), 3);
        // the image vector w satisfies w * e1 = -2 w (delta = -2m = -2)
        let w = im.basis().row(0);
        let we1 = e1.transpose().apply(w);
        let minus2w: Vec<Scalar> = w
            .iter()
            .map(|x| x.mul_unchecked(&FieldSpec::Rationals.from_i64(-2)))
            .collect();
        assert_eq!(we1, minus2w);
        // image and kernel intersect trivially over Q
        assert!(im.intersect(&ker).unwrap().is_zero());
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let u = Subspace::from_rows(&qmat(&[vec![1, 0, 0], vec![0, 1, 0]]));
        let w = Subspace::from_rows(&qmat(&[vec![0, 1, 0], vec![0, 0, 1]]));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vec(&[
            FieldSpec::Rationals.zero(),
            FieldSpec::Rationals.one(),
            FieldSpec::Rationals.zero()
        ]));
        // U ∩ U = U and U + 0 = U
        assert_eq!(u.intersect(&u).unwrap(), u);
        let z = Subspace::zero(3, FieldSpec::Rationals);
        assert_eq!(u.sum(&z).unwrap(), u);
    }

    #[test]
    fn subspace_equality_is_basis_equality() {
        let a = Subspace::from_rows(&qmat(&[vec![1, 1], vec![1, -1]]));
        let b = Subspace::from_rows(&qmat(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_projection_section_identity() {
        let u = Subspace::from_rows(&qmat(&[vec![1, 2, 0, -1]]));
        let q = QuotientSpace::new(u);
        assert_eq!(q.dim(), 3);
        let f = FieldSpec::Rationals;
        let coords = vec![f.from_i64(3), f.from_i64(-2), f.from_i64(7)];
        assert_eq!(q.project(&q.lift(&coords)), coords);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2, FieldSpec::Rationals);
        let w = Subspace::full(3, FieldSpec::Rationals);
        assert!(matches!(u.sum(&w), Err(LinalgError::AmbientMismatch(2, 3))));
    }
}
