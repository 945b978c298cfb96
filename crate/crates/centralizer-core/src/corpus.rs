//! Named small algebras used across the test suites and the CLI examples:
//! fields and products of fields, matrix and triangular algebras, local
//! non-semisimple algebras, and the 5-dimensional quasi-hereditary algebra
//! with a simple preserving duality built from the two-vertex quiver with
//! one zero relation.
//!
//! Path conventions: the product p * q means "q, then p", so the projective
//! left module at vertex i is spanned by the paths with source i, and the
//! weight of a path under the left action is its target vertex.

use std::sync::Arc;

use crate::fdalg::{Algebra, AntiInvolution, LeftModule};
use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};

/// An algebra bundled with the labelling data the stratified machinery
/// consumes: one idempotent per label, the strict order pairs
/// (smaller, larger), and an optional anti-involution matrix.
#[derive(Clone)]
pub struct StratInstance {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub labels: Vec<String>,
    pub order: Vec<(usize, usize)>,
    pub idempotents: Vec<Vec<Scalar>>,
    pub star: Option<Mat>,
}

impl StratInstance {
    pub fn star_involution(&self) -> Option<AntiInvolution> {
        self.star
            .clone()
            .map(|m| AntiInvolution::new(self.algebra.clone(), m).expect("valid star"))
    }
}

pub fn ground_field(field: FieldSpec) -> Arc<Algebra> {
    Algebra::new_from_i64(field, &[vec![vec![1]]], &[1]).unwrap()
}

pub fn product_of_fields(field: FieldSpec, k: usize) -> Arc<Algebra> {
    let mut mult = vec![vec![vec![0i64; k]; k]; k];
    for i in 0..k {
        mult[i][i][i] = 1;
    }
    Algebra::new_from_i64(field, &mult, &vec![1; k]).unwrap()
}

/// M_2(K) on the basis E11, E12, E21, E22.
pub fn full_matrix_2(field: FieldSpec) -> Arc<Algebra> {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut mult = vec![vec![vec![0i64; 4]; 4]; 4];
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            if b == c {
                let k = units.iter().position(|&u| u == (a, d)).unwrap();
                mult[i][j][k] = 1;
            }
        }
    }
    Algebra::new_from_i64(field, &mult, &[1, 0, 0, 1]).unwrap()
}

/// The natural 2-dimensional column module of M_2(K).
pub fn full_matrix_2_natural(a: &Arc<Algebra>) -> LeftModule {
    let f = a.field;
    let action = vec![
        Mat::from_i64_rows(&[vec![1, 0], vec![0, 0]], f),
        Mat::from_i64_rows(&[vec![0, 1], vec![0, 0]], f),
        Mat::from_i64_rows(&[vec![0, 0], vec![1, 0]], f),
        Mat::from_i64_rows(&[vec![0, 0], vec![0, 1]], f),
    ];
    LeftModule::new(a.clone(), action).unwrap()
}

/// Transpose anti-involution of M_2(K): E_ab -> E_ba.
pub fn full_matrix_2_transpose(a: &Arc<Algebra>) -> AntiInvolution {
    let f = a.field;
    let m = Mat::from_i64_rows(
        &[
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
        ],
        f,
    );
    AntiInvolution::new(a.clone(), m).unwrap()
}

/// Generic path-algebra style builder: basis elements carry (source,
/// target); `compose(i, j)` returns the basis index of b_i * b_j when the
/// product is a nonzero basis element.
fn path_algebra(
    field: FieldSpec,
    st: &[(usize, usize)],
    vertices: usize,
    compose: impl Fn(usize, usize) -> Option<usize>,
) -> Arc<Algebra> {
    let d = st.len();
    let mut mult = vec![vec![vec![0i64; d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            // products only compose when target(j) = source(i)
            if st[j].1 == st[i].0 {
                if let Some(k) = compose(i, j) {
                    mult[i][j][k] = 1;
                }
            }
        }
    }
    let mut unit = vec![0i64; d];
    for v in 0..vertices {
        unit[v] = 1; // trivial paths come first by convention
    }
    Algebra::new_from_i64(field, &mult, &unit).unwrap()
}

/// Upper triangular 2x2 matrices: the path algebra of one arrow 1 <- 2.
/// Basis: e1, e2, a with a: 2 -> 1.
pub fn upper_triangular_2(field: FieldSpec) -> Arc<Algebra> {
    // (source, target): e1, e2 at vertices, arrow a: source 2, target 1
    let st = [(0, 0), (1, 1), (1, 0)];
    path_algebra(field, &st, 2, |i, j| match (i, j) {
        (0, 0) => Some(0),
        (1, 1) => Some(1),
        (0, 2) => Some(2), // e1 a = a
        (2, 1) => Some(2), // a e2 = a
        _ => None,
    })
}

/// Upper triangular 3x3 matrices: path algebra of 3 -> 2 -> 1.
/// Basis: e1, e2, e3, a (2->1), b (3->2), ab (3->1).
pub fn upper_triangular_3(field: FieldSpec) -> Arc<Algebra> {
    let st = [(0, 0), (1, 1), (2, 2), (1, 0), (2, 1), (2, 0)];
    path_algebra(field, &st, 3, |i, j| match (i, j) {
        (0, 0) => Some(0),
        (1, 1) => Some(1),
        (2, 2) => Some(2),
        (0, 3) | (3, 1) => Some(3),
        (1, 4) | (4, 2) => Some(4),
        (0, 5) | (5, 2) | (3, 4) => Some(5), // a b = ab
        _ => None,
    })
}

/// The dual numbers K[x]/(x^2).
pub fn dual_numbers(field: FieldSpec) -> Arc<Algebra> {
    Algebra::new_from_i64(
        field,
        &[
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
        ],
        &[1, 0],
    )
    .unwrap()
}

/// K[x]/(x^3).
pub fn truncated_polynomials_3(field: FieldSpec) -> Arc<Algebra> {
    let mut mult = vec![vec![vec![0i64; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                mult[i][j][i + j] = 1;
            }
        }
    }
    Algebra::new_from_i64(field, &mult, &[1, 0, 0]).unwrap()
}

/// The 5-dimensional algebra of the quiver 1 <=> 2 (arrows a: 1 -> 2 and
/// b: 2 -> 1) with the relation a b = 0. Quasi-hereditary for 1 < 2, with
/// the simple preserving duality swapping a and b. Basis:
/// e1, e2, a, b, c = b a.
pub fn zigzag_5(field: FieldSpec) -> Arc<Algebra> {
    let st = [(0, 0), (1, 1), (0, 1), (1, 0), (0, 0)];
    path_algebra(field, &st, 2, |i, j| match (i, j) {
        (0, 0) => Some(0),
        (1, 1) => Some(1),
        (1, 2) | (2, 0) => Some(2),  // e2 a = a, a e1 = a
        (0, 3) | (3, 1) => Some(3),  // e1 b = b, b e2 = b
        (3, 2) => Some(4),           // b a = c
        (0, 4) | (4, 0) => Some(4),  // e1 c = c e1 = c
        // a b = 0, c composed with anything nontrivial dies
        _ => None,
    })
}

fn zigzag_5_star(field: FieldSpec) -> Mat {
    Mat::from_i64_rows(
        &[
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 1],
        ],
        field,
    )
}

fn basis_idem(algebra: &Arc<Algebra>, which: &[usize]) -> Vec<Vec<Scalar>> {
    which.iter().map(|&i| algebra.basis_vec(i)).collect()
}

/// Direct product of two algebras, with unit (1, 1).
pub fn product_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Arc<Algebra> {
    let field = a.field;
    let d = a.dim + b.dim;
    let mut mult = vec![vec![vec![field.zero(); d]; d]; d];
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in 0..a.dim {
                mult[i][j][k] = a.left_mult_matrix(i).get(k, j).clone();
            }
        }
    }
    for i in 0..b.dim {
        for j in 0..b.dim {
            for k in 0..b.dim {
                mult[a.dim + i][a.dim + j][a.dim + k] = b.left_mult_matrix(i).get(k, j).clone();
            }
        }
    }
    let mut unit = a.unit().to_vec();
    unit.extend_from_slice(b.unit());
    Algebra::new(field, &mult, unit).unwrap()
}

/// The quasi-hereditary instances with verified labels and idempotents.
pub fn strat_zigzag_5(field: FieldSpec) -> StratInstance {
    let algebra = zigzag_5(field);
    StratInstance {
        name: "zigzag5".into(),
        labels: vec!["1".into(), "2".into()],
        order: vec![(0, 1)],
        idempotents: basis_idem(&algebra, &[0, 1]),
        star: Some(zigzag_5_star(field)),
        algebra,
    }
}

pub fn strat_upper_triangular_2(field: FieldSpec, flipped: bool) -> StratInstance {
    let algebra = upper_triangular_2(field);
    StratInstance {
        name: if flipped { "ut2-flipped".into() } else { "ut2".into() },
        labels: vec!["1".into(), "2".into()],
        order: if flipped { vec![(1, 0)] } else { vec![(0, 1)] },
        idempotents: basis_idem(&algebra, &[0, 1]),
        star: None,
        algebra,
    }
}

pub fn strat_upper_triangular_3(field: FieldSpec) -> StratInstance {
    let algebra = upper_triangular_3(field);
    StratInstance {
        name: "ut3".into(),
        labels: vec!["1".into(), "2".into(), "3".into()],
        order: vec![(0, 1), (1, 2), (0, 2)],
        idempotents: basis_idem(&algebra, &[0, 1, 2]),
        star: None,
        algebra,
    }
}

pub fn strat_semisimple(field: FieldSpec, k: usize) -> StratInstance {
    let algebra = product_of_fields(field, k);
    StratInstance {
        name: format!("fields-{k}"),
        labels: (1..=k).map(|i| i.to_string()).collect(),
        order: vec![],
        idempotents: (0..k).map(|i| algebra.basis_vec(i)).collect(),
        star: Some(Mat::identity(k, field)),
        algebra,
    }
}

pub fn strat_full_matrix_2(field: FieldSpec) -> StratInstance {
    let algebra = full_matrix_2(field);
    let star = full_matrix_2_transpose(&algebra).matrix;
    StratInstance {
        name: "m2".into(),
        labels: vec!["1".into()],
        order: vec![],
        idempotents: basis_idem(&algebra, &[0]),
        star: Some(star),
        algebra,
    }
}

/// zigzag5 x K: three labels, duality, quasi-hereditary.
pub fn strat_zigzag_5_times_field(field: FieldSpec) -> StratInstance {
    let z = zigzag_5(field);
    let k = ground_field(field);
    let algebra = product_algebra(&z, &k);
    let mut star = Mat::identity(6, field);
    let zs = zigzag_5_star(field);
    for i in 0..5 {
        for j in 0..5 {
            star.set(i, j, zs.get(i, j).clone());
        }
    }
    StratInstance {
        name: "zigzag5xK".into(),
        labels: vec!["1".into(), "2".into(), "3".into()],
        order: vec![(0, 1)],
        idempotents: basis_idem(&algebra, &[0, 1, 5]),
        star: Some(star),
        algebra,
    }
}

/// zigzag5 x zigzag5: four labels, duality.
pub fn strat_zigzag_5_squared(field: FieldSpec) -> StratInstance {
    let z = zigzag_5(field);
    let algebra = product_algebra(&z, &z);
    let mut star = Mat::zero(10, field);
    let zs = zigzag_5_star(field);
    for blk in 0..2 {
        for i in 0..5 {
            for j in 0..5 {
                star.set(5 * blk + i, 5 * blk + j, zs.get(i, j).clone());
            }
        }
    }
    StratInstance {
        name: "zigzag5sq".into(),
        labels: vec!["1a".into(), "2a".into(), "1b".into(), "2b".into()],
        order: vec![(0, 1), (2, 3)],
        idempotents: basis_idem(&algebra, &[0, 1, 5, 6]),
        star: Some(star),
        algebra,
    }
}

/// The structure-constant corpus for the regular-module double-centralizer
/// reproduction: at least ten algebras, semisimple and not.
pub fn dcp_corpus(field: FieldSpec) -> Vec<(String, Arc<Algebra>)> {
    let z = zigzag_5(field);
    let m2 = full_matrix_2(field);
    let k = ground_field(field);
    vec![
        ("K".into(), ground_field(field)),
        ("KxK".into(), product_of_fields(field, 2)),
        ("KxKxK".into(), product_of_fields(field, 3)),
        ("M2".into(), m2.clone()),
        ("UT2".into(), upper_triangular_2(field)),
        ("UT3".into(), upper_triangular_3(field)),
        ("dual-numbers".into(), dual_numbers(field)),
        ("K[x]/x^3".into(), truncated_polynomials_3(field)),
        ("zigzag5".into(), z.clone()),
        ("zigzag5xK".into(), product_algebra(&z, &k)),
        ("M2xK".into(), product_algebra(&m2, &k)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_corpus_algebras_validate() {
        // Algebra::new validates associativity and the unit, so building
        // the corpus is itself the test
        let corpus = dcp_corpus(FieldSpec::Rationals);
        assert!(corpus.len() >= 10);
        for (name, a) in &corpus {
            assert!(a.dim >= 1, "{name}");
        }
    }

    #[test]
    fn zigzag_projectives_have_expected_dims() {
        let inst = strat_zigzag_5(FieldSpec::Rationals);
        let a = &inst.algebra;
        // P(i) = A e_i: spanned by the columns of right multiplication
        let p1 = crate::linalg::image(&a.right_mult_of(&inst.idempotents[0]));
        let p2 = crate::linalg::image(&a.right_mult_of(&inst.idempotents[1]));
        assert_eq!(p1.dim(), 3);
        assert_eq!(p2.dim(), 2);
    }

    #[test]
    fn zigzag_star_is_an_anti_involution() {
        let inst = strat_zigzag_5(FieldSpec::Rationals);
        assert!(inst.star_involution().is_some());
    }

    #[test]
    fn product_algebra_unit_and_dims() {
        let f = FieldSpec::Rationals;
        let p = product_algebra(&upper_triangular_2(f), &ground_field(f));
        assert_eq!(p.dim, 4);
    }
}
