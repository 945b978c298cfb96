//! Full faithfulness of Hom(M, -) on projectives, checked against the
//! double-centralizer property for M a direct sum of star-fixed idempotent
//! projectives. The two booleans must agree.

use std::sync::Arc;

use crate::fdalg::dcp::{commutant_of_span, double_centralizer_map};
use crate::fdalg::hom::hom_basis;
use crate::fdalg::{Algebra, AntiInvolution, FdalgError, LeftModule};
use crate::linalg::subspace::SpannedSpace;
use crate::linalg::{image, Mat, Subspace};
use crate::scalar::Scalar;

pub struct FullyFaithfulReport {
    pub dcp_surjective: bool,
    pub fully_faithful: bool,
    pub module_faithful: bool,
}

impl FullyFaithfulReport {
    pub fn agree(&self) -> bool {
        self.dcp_surjective == self.fully_faithful
    }
}

fn is_idempotent(a: &Algebra, e: &[Scalar]) -> bool {
    a.mul(e, e) == e
}

/// Checks the equivalence on M = (+)_i A e_i. It is enough to test the
/// natural map on the pair of regular modules: theta is an isomorphism for
/// all projectives iff it is for (A, A), since every projective is a
/// summand of a free module.
pub fn fully_faithful_on_projectives(
    a: &Arc<Algebra>,
    star: &AntiInvolution,
    idempotents: &[Vec<Scalar>],
) -> Result<FullyFaithfulReport, FdalgError> {
    for (i, e) in idempotents.iter().enumerate() {
        if !is_idempotent(a, e) {
            return Err(FdalgError::BadIdempotent(i));
        }
        if star.apply(e) != *e {
            return Err(FdalgError::StarNotFixing(i));
        }
    }
    let field = a.field;
    let reg = LeftModule::regular(a);
    // M = (+) A e_i as a submodule of the regular module
    let mut span = Subspace::zero(a.dim, field);
    for e in idempotents {
        span = span.sum(&image(&a.right_mult_of(e))).expect("same ambient");
    }
    let summands: Vec<LeftModule> = idempotents
        .iter()
        .map(|e| reg.submodule(&image(&a.right_mult_of(e))))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&LeftModule> = summands.iter().collect();
    let m = LeftModule::direct_sum(&refs, &vec![1; refs.len()]);
    let module_faithful = m.is_faithful();

    let dcp = double_centralizer_map(&m)?;
    let dcp_surjective = dcp.hom.surjective;

    // theta on the pair (A, A): Hom_A(A, A) -> Hom_{A'}(H, H) with
    // H = Hom_A(M, A) as a right End_A(M)-module by precomposition
    let h_basis = hom_basis(&m, &reg)?;
    let a_prime = hom_basis(&m, &m)?;
    let fully_faithful = if h_basis.is_empty() {
        // Hom(M, A) = 0 forces the target to be trivial; theta is then an
        // isomorphism iff A itself is trivial
        a.dim == 0
    } else {
        let hdim = h_basis.len();
        let flat_h = Mat::from_rows(
            h_basis.iter().map(|x| x.flatten()).collect(),
            a.dim * m.dim,
            field,
        );
        let h_span = SpannedSpace::new(&flat_h);
        // right action of each A'-basis element on H-coordinates
        let right_actions: Vec<Mat> = a_prime
            .iter()
            .map(|psi| {
                Mat::from_fn(hdim, hdim, field, |r, c| {
                    let composed = h_basis[c].matmul(psi);
                    h_span.coords(&composed.flatten()).expect("closed")[r].clone()
                })
            })
            .collect();
        // Hom_{A'}(H, H) = commutant of the (transposed) right actions on
        // column coordinates: Phi(h psi) = Phi(h) psi
        let transposed: Vec<Mat> = right_actions.iter().map(|x| x.transpose()).collect();
        let target = commutant_of_span(&transposed, hdim, field);
        // theta_f for f = right multiplication by b on A: h -> f o h
        let theta: Vec<Mat> = (0..a.dim)
            .map(|b| {
                let f_mat = a.right_mult_of(&a.basis_vec(b));
                Mat::from_fn(hdim, hdim, field, |r, c| {
                    let composed = f_mat.matmul(&h_basis[c]);
                    h_span.coords(&composed.flatten()).expect("closed")[r].clone()
                })
            })
            .collect();
        let theta_flat = Mat::from_rows(theta.iter().map(|x| x.flatten()).collect(), hdim * hdim, field);
        let theta_rank = theta_flat.rank();
        // isomorphism: injective (rank = dim A) and surjective onto the
        // commutant (rank = its dimension); each theta image intertwines,
        // so the span inclusion is automatic
        theta_rank == a.dim && theta_rank == target.len()
    };
    Ok(FullyFaithfulReport {
        dcp_surjective,
        fully_faithful,
        module_faithful,
    })
}
