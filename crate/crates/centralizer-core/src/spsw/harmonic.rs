//! Partially harmonic subquotients of tensor space: the image W_f of the
//! f-th Brauer ideal, the quotient Q_f = V^{(x)n}/W_f carrying the induced
//! action, and the annihilator H_f^* identified with the dual of Q_f.

use crate::brauer::ideal::{ideal_bf, ideal_generator_diagram};
use crate::linalg::{kernel, Mat, QuotientSpace, Subspace};
use crate::scalar::FieldSpec;
use crate::spsw::action::{all_generator_matrices, diagram_action_matrix};
use crate::spsw::{SpswError, TensorSpace};

pub struct SubquotientSpaces {
    pub tensor: TensorSpace,
    pub f: usize,
    pub field: FieldSpec,
    /// W_f = V^{(x)n} B^(f), as row vectors.
    pub w_f: Subspace,
    /// Q_f = V^{(x)n} / W_f with the complement-coordinate section.
    pub q_f: QuotientSpace,
    /// H_f^* = {x : x B^(f) = 0}.
    pub h_star: Subspace,
    /// HT_f = W_f intersected with the annihilator of B^(f+1).
    pub harmonic: Subspace,
}

/// Saturates the row space of the ideal generator's action under right
/// multiplication by the presentation generators.
fn ideal_image(t: &TensorSpace, f: usize, field: FieldSpec) -> Result<Subspace, SpswError> {
    let n = t.n;
    if f > n / 2 {
        return Ok(Subspace::zero(t.dim(), field));
    }
    let gen_diag = ideal_generator_diagram(n, f);
    let m_gen = diagram_action_matrix(&gen_diag, t, field)?;
    let mut span = Subspace::from_rows(&m_gen);
    let right_mats = all_generator_matrices(t, field)?;
    loop {
        let mut grew = false;
        for g in &right_mats {
            let mapped = span.basis().matmul(g);
            let bigger = span.sum(&Subspace::from_rows(&mapped)).expect("same ambient");
            if bigger.dim() > span.dim() {
                span = bigger;
                grew = true;
            }
        }
        if !grew {
            return Ok(span);
        }
    }
}

/// The common annihilator {x : x D = 0 for every diagram D in B^(f)}.
fn ideal_annihilator(
    t: &TensorSpace,
    f: usize,
    m: usize,
    field: FieldSpec,
) -> Result<Subspace, SpswError> {
    let n = t.n;
    if f > n / 2 {
        return Ok(Subspace::full(t.dim(), field));
    }
    let ideal = ideal_bf(n, f, m as u32, field)
        .map_err(|e| SpswError::SizeMismatch(e.to_string()))?;
    let mut stacked: Option<Mat> = None;
    for d in &ideal.diagrams {
        let mt = diagram_action_matrix(d, t, field)?.transpose();
        stacked = Some(match stacked {
            None => mt,
            Some(s) => s.vstack(&mt).expect("same width"),
        });
    }
    Ok(match stacked {
        None => Subspace::full(t.dim(), field),
        Some(s) => kernel(&s),
    })
}

pub fn subquotient_spaces(
    m: usize,
    n: usize,
    f: usize,
    field: FieldSpec,
    cap: Option<usize>,
) -> Result<SubquotientSpaces, SpswError> {
    let t = TensorSpace::new(m, n, cap)?;
    let w_f = ideal_image(&t, f, field)?;
    let h_star = ideal_annihilator(&t, f, m, field)?;
    let ann_next = ideal_annihilator(&t, f + 1, m, field)?;
    let harmonic = w_f.intersect(&ann_next).expect("same ambient");
    let q_f = QuotientSpace::new(w_f.clone());
    Ok(SubquotientSpaces {
        tensor: t,
        f,
        field,
        w_f,
        q_f,
        h_star,
        harmonic,
    })
}

/// Dimensions of the layers V B^(f) / V B^(f+1) for f = 0..n/2.
pub fn harmonic_layer_dims(
    m: usize,
    n: usize,
    field: FieldSpec,
    cap: Option<usize>,
) -> Result<Vec<usize>, SpswError> {
    let t = TensorSpace::new(m, n, cap)?;
    let mut dims = Vec::new();
    let mut prev = ideal_image(&t, 0, field)?.dim();
    for f in 1..=n / 2 + 1 {
        let cur = ideal_image(&t, f, field)?.dim();
        dims.push(prev - cur);
        prev = cur;
    }
    Ok(dims)
}

/// The direct-sum statement V^{(x)n} = W_f (+) H_f^* under the
/// characteristic hypothesis char K > min(n - f + m, n).
pub fn check_keylem4(
    m: usize,
    n: usize,
    f: usize,
    field: FieldSpec,
    cap: Option<usize>,
) -> Result<bool, SpswError> {
    let bound = (n - f + m).min(n) as u64;
    if !field.char_exceeds(bound) {
        return Err(SpswError::CharTooSmall {
            ch: field.characteristic(),
            bound,
        });
    }
    let s = subquotient_spaces(m, n, f, field, cap)?;
    let meet = s.w_f.intersect(&s.h_star).expect("same ambient");
    Ok(meet.is_zero() && s.w_f.dim() + s.h_star.dim() == s.tensor.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn f0_gives_everything_and_trivial_quotient() {
        let s = subquotient_spaces(1, 2, 0, q(), None).unwrap();
        assert_eq!(s.w_f.dim(), 4);
        assert_eq!(s.q_f.dim(), 0);
        assert_eq!(s.h_star.dim(), 0);
    }

    #[test]
    fn m1_n2_f1_dimensions() {
        let s = subquotient_spaces(1, 2, 1, q(), None).unwrap();
        assert_eq!(s.w_f.dim(), 1);
        assert_eq!(s.q_f.dim(), 3);
        assert_eq!(s.h_star.dim(), 3);
    }

    #[test]
    fn keylem4_small_instances() {
        assert!(check_keylem4(1, 2, 1, q(), None).unwrap());
        assert!(check_keylem4(1, 3, 1, q(), None).unwrap());
        // trivially true at f = 0
        assert!(check_keylem4(2, 2, 0, q(), None).unwrap());
    }

    #[test]
    fn keylem4_rejects_small_characteristic() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        assert!(matches!(
            check_keylem4(1, 2, 1, f2, None),
            Err(SpswError::CharTooSmall { .. })
        ));
    }

    #[test]
    fn layer_dims_char_independent_m1_n2() {
        let layers_q = harmonic_layer_dims(1, 2, q(), None).unwrap();
        let layers_7 = harmonic_layer_dims(1, 2, FieldSpec::prime_field(7).unwrap(), None).unwrap();
        assert_eq!(layers_q, layers_7);
        // V^(x)2 = span(e1 image) + complement: layers (3, 1)
        assert_eq!(layers_q, vec![3, 1]);
    }

    #[test]
    fn harmonic_space_sits_inside_w() {
        let s = subquotient_spaces(1, 3, 1, q(), None).unwrap();
        assert!(s.w_f.contains(&s.harmonic));
    }
}
