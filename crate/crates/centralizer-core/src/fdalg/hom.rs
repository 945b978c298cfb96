//! Homomorphism spaces between modules, solved as intertwiner systems, and
//! endomorphism algebras with structure constants read off from
//! composition.

use std::sync::Arc;

use crate::fdalg::{Algebra, FdalgError, LeftModule, ModMap};
use crate::linalg::sparse::intertwiner_rows;
use crate::linalg::subspace::SpannedSpace;
use crate::linalg::{sparse_kernel, Mat};
use crate::scalar::Scalar;

/// Basis matrices of Hom_A(M, N) (maps are target_dim x source_dim).
pub fn hom_basis(m: &LeftModule, n: &LeftModule) -> Result<Vec<Mat>, FdalgError> {
    if !m.same_algebra(n) {
        return Err(FdalgError::AlgebraMismatch);
    }
    let field = m.field();
    if m.dim == 0 || n.dim == 0 {
        return Ok(vec![]);
    }
    let mut rows = Vec::new();
    for i in 0..m.algebra.dim {
        rows.extend(intertwiner_rows(n.action(i), m.action(i)));
    }
    Ok(sparse_kernel(rows, n.dim * m.dim, field)
        .into_iter()
        .map(|flat| Mat::from_flat(n.dim, m.dim, field, flat))
        .collect())
}

pub fn hom_space(m: &LeftModule, n: &LeftModule) -> Result<Vec<ModMap>, FdalgError> {
    Ok(hom_basis(m, n)?
        .into_iter()
        .map(|matrix| ModMap {
            source: m.clone(),
            target: n.clone(),
            matrix,
        })
        .collect())
}

pub fn hom_dim(m: &LeftModule, n: &LeftModule) -> Result<usize, FdalgError> {
    Ok(hom_basis(m, n)?.len())
}

/// The endomorphism algebra of a module: the commutant basis together with
/// structure constants from composition (associativity holds by
/// construction, so the table is not re-validated). The module becomes a
/// left module over the result, each basis endomorphism acting as itself.
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub basis: Vec<Mat>,
    pub module_over_end: LeftModule,
    span: SpannedSpace,
}

impl EndAlgebra {
    /// Coordinates of an endomorphism in the chosen basis, if it lies in
    /// the algebra.
    pub fn coords(&self, endo: &Mat) -> Option<Vec<Scalar>> {
        self.span.coords(&endo.flatten())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Builds an abstract algebra from a multiplication-closed space of
/// matrices containing the identity.
pub fn algebra_from_matrix_span(
    basis: Vec<Mat>,
    space_dim: usize,
) -> Result<EndAlgebra, FdalgError> {
    assert!(!basis.is_empty());
    let field = basis[0].field();
    let d = basis.len();
    let flat = Mat::from_rows(basis.iter().map(|b| b.flatten()).collect(), space_dim * space_dim, field);
    let span = SpannedSpace::new(&flat);
    assert_eq!(span.dim(), d, "basis matrices must be independent");
    let unit = span
        .coords(&Mat::identity(space_dim, field).flatten())
        .expect("identity must lie in the span");
    let mut mult: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let prod = basis[i].matmul(&basis[j]);
            let coords = span
                .coords(&prod.flatten())
                .expect("span must be closed under multiplication");
            row.push(coords);
        }
        mult.push(row);
    }
    let algebra = Algebra::new_unchecked(field, &mult, unit);
    let module_over_end = LeftModule::new_unchecked(algebra.clone(), basis.clone());
    Ok(EndAlgebra {
        algebra,
        basis,
        module_over_end,
        span,
    })
}

pub fn endomorphism_algebra(m: &LeftModule) -> Result<EndAlgebra, FdalgError> {
    let basis = hom_basis(m, m)?;
    algebra_from_matrix_span(basis, m.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn hom_of_regular_to_module_has_module_dimension() {
        let a = corpus::upper_triangular_2(q());
        let reg = LeftModule::regular(&a);
        let m = corpus::full_matrix_2_natural(&corpus::full_matrix_2(q()));
        // same-algebra check
        assert!(hom_basis(&reg, &m).is_err());
        // Hom(A, M) = M by evaluation at 1
        assert_eq!(hom_dim(&reg, &reg).unwrap(), reg.dim);
    }

    #[test]
    fn end_of_regular_field_is_one_dimensional() {
        let k = corpus::ground_field(q());
        let reg = LeftModule::regular(&k);
        assert_eq!(hom_dim(&reg, &reg).unwrap(), 1);
    }

    #[test]
    fn homs_between_distinct_simples_vanish() {
        // the two simples of the triangular algebra live at the vertices
        let a = corpus::upper_triangular_2(q());
        let f = q();
        // 1-dim modules: x acts by its (vertex) coefficient
        let s1 = LeftModule::new(
            a.clone(),
            vec![
                Mat::identity(1, f),
                Mat::zero(1, 1, f),
                Mat::zero(1, 1, f),
            ],
        )
        .unwrap();
        let s2 = LeftModule::new(
            a.clone(),
            vec![
                Mat::zero(1, 1, f),
                Mat::identity(1, f),
                Mat::zero(1, 1, f),
            ],
        )
        .unwrap();
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
    }

    #[test]
    fn end_of_regular_module_is_the_opposite_algebra() {
        // End_A(A) consists of the right multiplications; in that basis the
        // structure constants are exactly those of A^op
        for a in [
            corpus::upper_triangular_2(q()),
            corpus::zigzag_5(q()),
            corpus::full_matrix_2(q()),
        ] {
            let reg = LeftModule::regular(&a);
            let end = endomorphism_algebra(&reg).unwrap();
            assert_eq!(end.dim(), a.dim);
            let op = a.opposite();
            // right multiplications R_i lie in End and satisfy the op table
            for i in 0..a.dim {
                let ri = a.right_mult_of(&a.basis_vec(i));
                assert!(end.coords(&ri).is_some());
                for j in 0..a.dim {
                    let rj = a.right_mult_of(&a.basis_vec(j));
                    let prod = ri.matmul(&rj);
                    // R_i R_j = R_{e_j e_i}; coefficients of e_j e_i are the
                    // op structure constants c^op[i][j]
                    let coords: Vec<_> = (0..a.dim)
                        .map(|k| op.left_mult_matrix(i).get(k, j).clone())
                        .collect();
                    let expected = a.right_mult_of(&coords);
                    assert_eq!(prod, expected);
                }
            }
        }
    }

    #[test]
    fn end_of_natural_matrix_module_is_scalar() {
        let a = corpus::full_matrix_2(q());
        let nat = corpus::full_matrix_2_natural(&a);
        assert_eq!(hom_dim(&nat, &nat).unwrap(), 1);
    }
}
