//! The symplectic Schur algebra as the commutant of the Brauer action on
//! tensor space, and the injectivity test for the diagram-to-endomorphism
//! map when m >= n.

use crate::brauer::{dimension, enumerate_diagrams, Gen};
use crate::linalg::sparse::{commutant_rows, SparseVec};
use crate::linalg::{sparse_kernel, Mat, Subspace};
use crate::scalar::FieldSpec;
use crate::spsw::action::{all_generator_matrices, diagram_action_matrix, generator_action_matrix};
use crate::spsw::{SpswError, TensorSpace};

/// The commutant S^sy(m, n) = End over the Brauer action of V^{(x)n},
/// presented by a basis of endomorphism matrices (column convention).
pub struct SchurAlgebraRep {
    pub tensor: TensorSpace,
    pub field: FieldSpec,
    /// Right-action matrices of s_1..s_{n-1}, e_1..e_{n-1} (row convention).
    pub gen_mats: Vec<Mat>,
    /// Basis of the commutant, deterministic order.
    pub basis: Vec<Mat>,
}

impl SchurAlgebraRep {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Constraint matrices whose commutant is the Schur algebra: transposed
/// action matrices of an algebra generating set (all s_i together with e_1;
/// the remaining e's are words in these).
pub fn commutant_constraints(t: &TensorSpace, field: FieldSpec) -> Result<Vec<Mat>, SpswError> {
    let mut gens = Vec::new();
    for i in 1..t.n {
        gens.push(generator_action_matrix(Gen::S(i), t, field)?.transpose());
    }
    if t.n >= 2 {
        gens.push(generator_action_matrix(Gen::E(1), t, field)?.transpose());
    }
    Ok(gens)
}

pub fn schur_algebra(
    m: usize,
    n: usize,
    field: FieldSpec,
    cap: Option<usize>,
) -> Result<SchurAlgebraRep, SpswError> {
    let t = TensorSpace::new(m, n, cap)?;
    let dim = t.dim();
    let constraints = commutant_constraints(&t, field)?;
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in &constraints {
        rows.extend(commutant_rows(g));
    }
    let basis = sparse_kernel(rows, dim * dim, field)
        .into_iter()
        .map(|flat| Mat::from_flat(dim, dim, field, flat))
        .collect();
    Ok(SchurAlgebraRep {
        tensor: t,
        field,
        gen_mats: all_generator_matrices(&t, field)?,
        basis,
    })
}

/// Rank of the linear map sending each Brauer diagram to its action matrix.
/// The map is injective exactly when the rank is (2n-1)!!.
pub struct PhiInjectivity {
    pub rank: usize,
    pub algebra_dim: u128,
    pub injective: bool,
}

pub fn phi_injectivity_check(
    m: usize,
    n: usize,
    field: FieldSpec,
    cap: Option<usize>,
) -> Result<PhiInjectivity, SpswError> {
    let t = TensorSpace::new(m, n, cap)?;
    let d = t.dim();
    let diagrams = enumerate_diagrams(n);
    let rows: Vec<Vec<_>> = diagrams
        .iter()
        .map(|dia| Ok(diagram_action_matrix(dia, &t, field)?.flatten()))
        .collect::<Result<_, SpswError>>()?;
    let flat = Mat::from_rows(rows, d * d, field);
    let rank = Subspace::from_rows(&flat).dim();
    let algebra_dim = dimension(n);
    Ok(PhiInjectivity {
        rank,
        algebra_dim,
        injective: rank as u128 == algebra_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn schur_dim_m1_n1_is_full_end() {
        let s = schur_algebra(1, 1, q(), None).unwrap();
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn schur_dim_m1_n2_is_ten() {
        let s = schur_algebra(1, 2, q(), None).unwrap();
        assert_eq!(s.dim(), 10);
        // every basis element commutes with every generator action
        for x in &s.basis {
            for g in &s.gen_mats {
                let gt = g.transpose();
                assert_eq!(x.matmul(&gt), gt.matmul(x));
            }
        }
    }

    #[test]
    fn schur_dim_is_field_independent_at_m1_n2() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        assert_eq!(schur_algebra(1, 2, f7, None).unwrap().dim(), 10);
    }

    #[test]
    fn phi_injective_at_m2_n2_and_not_at_m1_n3() {
        let r = phi_injectivity_check(2, 2, q(), None).unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.injective);
        let r = phi_injectivity_check(1, 3, q(), None).unwrap();
        assert!(r.rank < 15);
        assert!(!r.injective);
    }
}
