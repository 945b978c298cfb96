//! Finite-dimensional associative algebras by structure constants, their
//! left modules by action matrices, homomorphism spaces, centralizers and
//! the double-centralizer machinery.
//!
//! Conventions: elements are coordinate vectors over the algebra basis;
//! left multiplication by e_i is stored as a matrix acting on column
//! vectors, so the structure constants are c[i][j][k] = L_i[k][j]. Module
//! action matrices likewise act on column vectors.

pub mod dcp;
pub mod ff;
pub mod hom;
pub mod radical;

use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{kernel, Mat, QuotientSpace, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FdalgError {
    #[error("modules belong to different algebras")]
    AlgebraMismatch,
    #[error("multiplication table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided identity")]
    BadUnit,
    #[error("action matrices do not define a module: relation ({0}, {1})")]
    BadAction(usize, usize),
    #[error("map does not intertwine the action at basis element {0}")]
    NotIntertwining(usize),
    #[error("element {0} is not an idempotent")]
    BadIdempotent(usize),
    #[error("the anti-involution does not fix idempotent {0}")]
    StarNotFixing(usize),
    #[error("matrix is not an anti-involution: {0}")]
    BadStar(String),
    #[error("subspace is not stable under the action")]
    NotStable,
    #[error("module does not embed: common kernel of all maps to the target is nonzero")]
    NotEmbeddable,
    #[error("algebra is not split over the ground field (End of a simple exceeds one dimension)")]
    NotSplit,
    #[error("radical computation needs char 0 or char > dim; have {0}")]
    CharTooSmallForRadical(u64),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}

/// A finite-dimensional associative unital algebra over an exact field,
/// by structure constants.
#[derive(Debug)]
pub struct Algebra {
    pub dim: usize,
    pub field: FieldSpec,
    /// left_mult[i] = matrix of x -> e_i x on coordinates.
    left_mult: Vec<Mat>,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Builds and validates an algebra from structure constants:
    /// mult[i][j] is the coordinate vector of e_i e_j.
    pub fn new(
        field: FieldSpec,
        mult: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
    ) -> Result<Arc<Algebra>, FdalgError> {
        let dim = mult.len();
        let left_mult: Vec<Mat> = (0..dim)
            .map(|i| Mat::from_fn(dim, dim, field, |k, j| mult[i][j][k].clone()))
            .collect();
        let alg = Algebra {
            dim,
            field,
            left_mult,
            unit,
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    /// For multiplication tables that are associative by construction
    /// (e.g. composition in an endomorphism algebra).
    pub fn new_unchecked(
        field: FieldSpec,
        mult: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
    ) -> Arc<Algebra> {
        let dim = mult.len();
        let left_mult: Vec<Mat> = (0..dim)
            .map(|i| Mat::from_fn(dim, dim, field, |k, j| mult[i][j][k].clone()))
            .collect();
        Arc::new(Algebra {
            dim,
            field,
            left_mult,
            unit,
        })
    }

    pub fn new_from_i64(
        field: FieldSpec,
        mult: &[Vec<Vec<i64>>],
        unit: &[i64],
    ) -> Result<Arc<Algebra>, FdalgError> {
        let conv: Vec<Vec<Vec<Scalar>>> = mult
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|&x| field.from_i64(x)).collect())
                    .collect()
            })
            .collect();
        Algebra::new(field, &conv, unit.iter().map(|&x| field.from_i64(x)).collect())
    }

    fn validate(&self) -> Result<(), FdalgError> {
        let d = self.dim;
        // unit is a two-sided identity
        let lu = self.left_mult_of(&self.unit);
        if lu != Mat::identity(d, self.field) {
            return Err(FdalgError::BadUnit);
        }
        for i in 0..d {
            let ei: Vec<Scalar> = (0..d)
                .map(|k| {
                    if k == i {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                })
                .collect();
            if self.mul(&ei, &self.unit) != ei {
                return Err(FdalgError::BadUnit);
            }
        }
        // associativity: L_i L_j = L_{e_i e_j}
        for i in 0..d {
            for j in 0..d {
                let prod = self.left_mult[i].matmul(&self.left_mult[j]);
                let eiej = self.left_mult[i].row_cloned(0); // placeholder to keep shape
                let _ = eiej;
                let coords: Vec<Scalar> = (0..d).map(|k| self.left_mult[i].get(k, j).clone()).collect();
                let expected = self.left_mult_of(&coords);
                if prod != expected {
                    return Err(FdalgError::NotAssociative(i, j, 0));
                }
            }
        }
        Ok(())
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn left_mult_matrix(&self, i: usize) -> &Mat {
        &self.left_mult[i]
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_of(&self, a: &[Scalar]) -> Mat {
        let mut acc = Mat::zero(self.dim, self.dim, self.field);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.left_mult[i].scale(c)).expect("same shape");
            }
        }
        acc
    }

    /// Matrix of right multiplication x -> x a.
    pub fn right_mult_of(&self, a: &[Scalar]) -> Mat {
        // (x a)_k = sum_j x_j (e_j a)_k
        Mat::from_fn(self.dim, self.dim, self.field, |k, j| {
            let ej_a = self.left_mult[j].apply(a);
            ej_a[k].clone()
        })
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.left_mult_of(a).apply(b)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| {
                if k == i {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            })
            .collect()
    }

    /// The opposite algebra (multiplication reversed).
    pub fn opposite(self: &Arc<Algebra>) -> Arc<Algebra> {
        let d = self.dim;
        // L^op_i[k][j] = c^op[i][j][k] = c[j][i][k]
        let left_mult: Vec<Mat> = (0..d)
            .map(|i| {
                Mat::from_fn(d, d, self.field, |k, j| self.left_mult[j].get(k, i).clone())
            })
            .collect();
        Arc::new(Algebra {
            dim: d,
            field: self.field,
            left_mult,
            unit: self.unit.clone(),
        })
    }
}

/// A finitely generated left module, by action matrices over the algebra
/// basis. Cheap to clone.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub algebra: Arc<Algebra>,
    pub dim: usize,
    action: Arc<Vec<Mat>>,
}

impl LeftModule {
    pub fn new(algebra: Arc<Algebra>, action: Vec<Mat>) -> Result<LeftModule, FdalgError> {
        let m = LeftModule::new_unchecked(algebra, action);
        m.validate()?;
        Ok(m)
    }

    /// For module structures that hold by construction.
    pub fn new_unchecked(algebra: Arc<Algebra>, action: Vec<Mat>) -> LeftModule {
        let dim = action.first().map_or(0, |m| m.rows());
        LeftModule {
            algebra,
            dim,
            action: Arc::new(action),
        }
    }

    pub fn validate(&self) -> Result<(), FdalgError> {
        let a = &self.algebra;
        let id = Mat::identity(self.dim, a.field);
        if self.act_by(a.unit()) != id {
            return Err(FdalgError::BadAction(usize::MAX, 0));
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let lhs = self.action[i].matmul(&self.action[j]);
                let coords: Vec<Scalar> =
                    (0..a.dim).map(|k| a.left_mult[i].get(k, j).clone()).collect();
                let rhs = self.act_by(&coords);
                if lhs != rhs {
                    return Err(FdalgError::BadAction(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn action_matrices(&self) -> &[Mat] {
        &self.action
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    /// Action matrix of an arbitrary element.
    pub fn act_by(&self, a: &[Scalar]) -> Mat {
        let mut acc = Mat::zero(self.dim, self.dim, self.field());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.action[i].scale(c)).expect("same shape");
            }
        }
        acc
    }

    /// The left regular module.
    pub fn regular(algebra: &Arc<Algebra>) -> LeftModule {
        let action = (0..algebra.dim)
            .map(|i| algebra.left_mult[i].clone())
            .collect();
        LeftModule::new_unchecked(algebra.clone(), action)
    }

    /// The zero module.
    pub fn zero(algebra: &Arc<Algebra>) -> LeftModule {
        let action = (0..algebra.dim)
            .map(|_| Mat::zero(0, 0, algebra.field))
            .collect();
        LeftModule {
            algebra: algebra.clone(),
            dim: 0,
            action: Arc::new(action),
        }
    }

    pub fn same_algebra(&self, other: &LeftModule) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    /// Submodule carried by a stable subspace (rows of `sub` are the basis).
    pub fn submodule(&self, sub: &Subspace) -> Result<LeftModule, FdalgError> {
        let d = sub.dim();
        let mut action = Vec::with_capacity(self.action.len());
        for rho in self.action.iter() {
            let mut m = Mat::zero(d, d, self.field());
            for b in 0..d {
                let v = rho.apply(sub.basis().row(b));
                let coords = sub.coordinates(&v).ok_or(FdalgError::NotStable)?;
                for (k, c) in coords.into_iter().enumerate() {
                    m.set(k, b, c);
                }
            }
            action.push(m);
        }
        Ok(LeftModule::new_unchecked(self.algebra.clone(), action))
    }

    /// Quotient module by a stable subspace.
    pub fn quotient(&self, sub: &Subspace) -> Result<(LeftModule, QuotientSpace), FdalgError> {
        let q = QuotientSpace::new(sub.clone());
        let mut action = Vec::with_capacity(self.action.len());
        for rho in self.action.iter() {
            let m = q.induced_map(rho).ok_or(FdalgError::NotStable)?;
            action.push(m);
        }
        Ok((LeftModule::new_unchecked(self.algebra.clone(), action), q))
    }

    /// Direct sum with multiplicities: parts[i] repeated mults[i] times.
    pub fn direct_sum(parts: &[&LeftModule], mults: &[usize]) -> LeftModule {
        assert_eq!(parts.len(), mults.len());
        assert!(!parts.is_empty());
        let algebra = parts[0].algebra.clone();
        let field = algebra.field;
        let total: usize = parts
            .iter()
            .zip(mults)
            .map(|(p, &k)| p.dim * k)
            .sum();
        let n_act = parts[0].action.len();
        let mut action = Vec::with_capacity(n_act);
        for i in 0..n_act {
            let mut m = Mat::zero(total, total, field);
            let mut off = 0;
            for (p, &k) in parts.iter().zip(mults) {
                for _ in 0..k {
                    for r in 0..p.dim {
                        for c in 0..p.dim {
                            let v = p.action[i].get(r, c);
                            if !v.is_zero() {
                                m.set(off + r, off + c, v.clone());
                            }
                        }
                    }
                    off += p.dim;
                }
            }
            action.push(m);
        }
        LeftModule::new_unchecked(algebra, action)
    }

    /// The kernel of the representation map; zero iff the module is faithful.
    pub fn annihilator_in_algebra(&self) -> Subspace {
        let a = &self.algebra;
        let rows: Vec<Vec<Scalar>> = (0..a.dim)
            .map(|i| self.action[i].flatten())
            .collect();
        let m = Mat::from_rows(rows, self.dim * self.dim, a.field);
        kernel(&m.transpose())
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator_in_algebra().is_zero()
    }

    /// The dual module twisted by an anti-involution: action of e_i is the
    /// transpose of the action of star(e_i).
    pub fn dual_twisted(&self, star: &AntiInvolution) -> LeftModule {
        let a = &self.algebra;
        let action = (0..a.dim)
            .map(|i| {
                let si: Vec<Scalar> = (0..a.dim).map(|k| star.matrix.get(k, i).clone()).collect();
                self.act_by(&si).transpose()
            })
            .collect();
        LeftModule::new_unchecked(self.algebra.clone(), action)
    }
}

/// A homomorphism of left modules, as a matrix from source coordinates to
/// target coordinates.
#[derive(Clone, Debug)]
pub struct ModMap {
    pub source: LeftModule,
    pub target: LeftModule,
    pub matrix: Mat,
}

impl ModMap {
    pub fn new(source: LeftModule, target: LeftModule, matrix: Mat) -> Result<ModMap, FdalgError> {
        if !source.same_algebra(&target) {
            return Err(FdalgError::AlgebraMismatch);
        }
        let m = ModMap {
            source,
            target,
            matrix,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn verify(&self) -> Result<(), FdalgError> {
        for i in 0..self.source.algebra.dim {
            let lhs = self.matrix.matmul(self.source.action(i));
            let rhs = self.target.action(i).matmul(&self.matrix);
            if lhs != rhs {
                return Err(FdalgError::NotIntertwining(i));
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        kernel(&self.matrix).is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim
    }

    pub fn image(&self) -> Subspace {
        crate::linalg::image(&self.matrix)
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.matrix)
    }
}

/// An anti-involution * of the algebra: linear, (xy)* = y* x*, involutive.
#[derive(Clone, Debug)]
pub struct AntiInvolution {
    pub algebra: Arc<Algebra>,
    pub matrix: Mat,
}

impl AntiInvolution {
    pub fn new(algebra: Arc<Algebra>, matrix: Mat) -> Result<AntiInvolution, FdalgError> {
        let s = AntiInvolution { algebra, matrix };
        s.verify()?;
        Ok(s)
    }

    pub fn apply(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(a)
    }

    fn verify(&self) -> Result<(), FdalgError> {
        let a = &self.algebra;
        let d = a.dim;
        if self.matrix.matmul(&self.matrix) != Mat::identity(d, a.field) {
            return Err(FdalgError::BadStar("not involutive".into()));
        }
        if self.apply(a.unit()) != a.unit() {
            return Err(FdalgError::BadStar("does not fix the unit".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let eiej: Vec<Scalar> = (0..d).map(|k| a.left_mult[i].get(k, j).clone()).collect();
                let lhs = self.apply(&eiej);
                let rhs = a.mul(&self.apply(&a.basis_vec(j)), &self.apply(&a.basis_vec(i)));
                if lhs != rhs {
                    return Err(FdalgError::BadStar(format!(
                        "multiplicativity fails at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// An algebra map A -> B recorded by its matrix on coordinates, with the
/// exactness flags of the double-centralizer check.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    pub matrix: Mat,
    pub injective: bool,
    pub surjective: bool,
}

impl AlgebraHom {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn ground_field_as_algebra() {
        let k = corpus::ground_field(FieldSpec::Rationals);
        assert_eq!(k.dim, 1);
        let reg = LeftModule::regular(&k);
        assert!(reg.is_faithful());
        assert!(reg.validate().is_ok());
    }

    #[test]
    fn upper_triangular_2x2_is_associative() {
        let a = corpus::upper_triangular_2(FieldSpec::Rationals);
        assert_eq!(a.dim, 3);
        let reg = LeftModule::regular(&a);
        reg.validate().unwrap();
        assert!(reg.is_faithful());
        assert!(!LeftModule::zero(&a).is_faithful());
    }

    #[test]
    fn bad_multiplication_table_is_rejected() {
        // e0 e0 = e1, e1 anything = 0, unit missing: not a unital algebra
        let f = FieldSpec::Rationals;
        let mult = vec![
            vec![vec![0i64, 1], vec![0, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ];
        let err = Algebra::new_from_i64(f, &mult, &[1, 0]);
        assert!(err.is_err());
    }

    #[test]
    fn matrix_algebra_2x2_regular_module() {
        let a = corpus::full_matrix_2(FieldSpec::Rationals);
        assert_eq!(a.dim, 4);
        let reg = LeftModule::regular(&a);
        reg.validate().unwrap();
        // the natural column module: action of E_ij on K^2
        let nat = corpus::full_matrix_2_natural(&a);
        nat.validate().unwrap();
        assert!(nat.is_faithful());
    }

    #[test]
    fn transpose_is_an_anti_involution_of_m2() {
        let a = corpus::full_matrix_2(FieldSpec::Rationals);
        let star = corpus::full_matrix_2_transpose(&a);
        assert!(star.verify().is_ok());
    }

    #[test]
    fn direct_sum_dims_and_validation() {
        let a = corpus::upper_triangular_2(FieldSpec::Rationals);
        let reg = LeftModule::regular(&a);
        let s = LeftModule::direct_sum(&[&reg, &reg], &[2, 1]);
        assert_eq!(s.dim, 9);
        s.validate().unwrap();
    }

    #[test]
    fn opposite_of_opposite_is_identity() {
        let a = corpus::upper_triangular_2(FieldSpec::Rationals);
        let opop = a.opposite().opposite();
        for i in 0..a.dim {
            assert_eq!(a.left_mult_matrix(i), opop.left_mult_matrix(i));
        }
    }
}
