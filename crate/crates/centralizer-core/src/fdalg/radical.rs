//! The Jacobson radical through the trace form of the regular
//! representation, valid in characteristic zero or above the algebra
//! dimension; module radicals, socles and the local-endomorphism test
//! built on it.

use crate::fdalg::{Algebra, FdalgError, LeftModule};
use crate::linalg::{kernel, Mat, Subspace};
use crate::scalar::Scalar;

fn trace(m: &Mat) -> Scalar {
    let mut acc = m.field().zero();
    for i in 0..m.rows() {
        acc = acc.add_unchecked(m.get(i, i));
    }
    acc
}

/// rad A = kernel of the bilinear form (x, y) -> tr(L_x L_y).
pub fn radical(a: &Algebra) -> Result<Subspace, FdalgError> {
    if !a.field.char_exceeds(a.dim as u64) {
        return Err(FdalgError::CharTooSmallForRadical(a.field.characteristic()));
    }
    let d = a.dim;
    let gram = Mat::from_fn(d, d, a.field, |i, j| {
        trace(&a.left_mult_matrix(i).matmul(a.left_mult_matrix(j)))
    });
    Ok(kernel(&gram))
}

/// rad M = (rad A) M, as a subspace of M.
pub fn module_radical(m: &LeftModule, rad_a: &Subspace) -> Subspace {
    let field = m.field();
    let mut acc = Subspace::zero(m.dim, field);
    for i in 0..rad_a.dim() {
        let act = m.act_by(rad_a.basis().row(i));
        acc = acc
            .sum(&crate::linalg::image(&act))
            .expect("same ambient");
    }
    acc
}

/// soc M = the annihilator of rad A in M (the largest semisimple
/// submodule).
pub fn module_socle(m: &LeftModule, rad_a: &Subspace) -> Subspace {
    let field = m.field();
    if rad_a.dim() == 0 {
        return Subspace::full(m.dim, field);
    }
    let mut stacked: Option<Mat> = None;
    for i in 0..rad_a.dim() {
        let act = m.act_by(rad_a.basis().row(i));
        stacked = Some(match stacked {
            None => act,
            Some(s) => s.vstack(&act).expect("same width"),
        });
    }
    kernel(&stacked.expect("nonempty"))
}

/// The head M / rad M as a module.
pub fn module_top(m: &LeftModule, rad_a: &Subspace) -> Result<LeftModule, FdalgError> {
    let radm = module_radical(m, rad_a);
    Ok(m.quotient(&radm)?.0)
}

/// End(M) is local iff End(M)/rad is one-dimensional; with the split
/// assumption this is the indecomposability test.
pub fn end_is_local(m: &LeftModule) -> Result<bool, FdalgError> {
    let end = super::hom::endomorphism_algebra(m)?;
    let rad = radical(&end.algebra)?;
    Ok(end.dim() - rad.dim() == 1)
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
    fn semisimple_algebras_have_zero_radical() {
        for a in [
            corpus::ground_field(q()),
            corpus::product_of_fields(q(), 3),
            corpus::full_matrix_2(q()),
        ] {
            assert!(radical(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_numbers_radical_is_x() {
        let a = corpus::dual_numbers(q());
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains_vec(&[q().zero(), q().one()]));
    }

    #[test]
    fn triangular_radical_is_the_arrow_span() {
        let a = corpus::upper_triangular_2(q());
        let r = radical(&a).unwrap();
        assert_eq!(r.dim(), 1);
        let z = corpus::zigzag_5(q());
        assert_eq!(radical(&z).unwrap().dim(), 3);
    }

    #[test]
    fn radical_rejects_small_characteristic() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let a = corpus::upper_triangular_2(f2);
        assert!(matches!(
            radical(&a),
            Err(FdalgError::CharTooSmallForRadical(2))
        ));
        // char > dim is fine
        let f7 = FieldSpec::prime_field(7).unwrap();
        let a = corpus::upper_triangular_2(f7);
        assert_eq!(radical(&a).unwrap().dim(), 1);
    }

    #[test]
    fn socle_and_radical_of_zigzag_projective() {
        let inst = corpus::strat_zigzag_5(q());
        let a = &inst.algebra;
        let rad_a = radical(a).unwrap();
        let reg = LeftModule::regular(a);
        let p1 = reg
            .submodule(&crate::linalg::image(&a.right_mult_of(&inst.idempotents[0])))
            .unwrap();
        // P(1) is uniserial of length 3: top L1, middle L2, socle L1
        assert_eq!(module_radical(&p1, &rad_a).dim(), 2);
        assert_eq!(module_socle(&p1, &rad_a).dim(), 1);
        assert!(end_is_local(&p1).unwrap());
        // the regular module of the zigzag splits as P(1) + P(2)
        assert!(!end_is_local(&reg).unwrap());
    }
}
