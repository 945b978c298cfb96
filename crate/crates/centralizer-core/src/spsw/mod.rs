//! The 2m-dimensional symplectic space, its n-fold tensor power with the
//! right Brauer-algebra action, the symplectic Schur algebra as a commutant,
//! partially harmonic subquotients, and the weight combinatorics of type C.

pub mod action;
pub mod harmonic;
pub mod schur;
pub mod weights;

use thiserror::Error;

use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpswError {
    #[error("tensor space dimension {dim} exceeds the cap {cap} (override with a larger cap)")]
    CapExceeded { dim: usize, cap: usize },
    #[error("field characteristic {ch} is too small; need char 0 or > {bound}")]
    CharTooSmall { ch: u64, bound: u64 },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
}

/// Default cap on (2m)^n; exact elimination above this is hours, not minutes.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// The symplectic space of dimension 2m with the standard skew form and
/// dual basis. Basis vectors are 0-indexed internally; the formulas below
/// follow the 1-indexed conventions i' = 2m + 1 - i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    pub m: usize,
}

impl SymplecticSpace {
    pub fn new(m: usize) -> SymplecticSpace {
        assert!(m >= 1);
        SymplecticSpace { m }
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    /// 0-based index of i': 2m - 1 - i.
    pub fn dual_index(&self, i: usize) -> usize {
        2 * self.m - 1 - i
    }

    /// Sign of v_i^* = (sign) v_{i'}: +1 for the first m basis vectors,
    /// -1 for the rest.
    pub fn dual_sign(&self, i: usize) -> i64 {
        if i < self.m {
            1
        } else {
            -1
        }
    }

    /// epsilon(i, j): +1 if j = i' and i < j, -1 if j = i' and i > j, else 0.
    pub fn epsilon(&self, i: usize, j: usize) -> i64 {
        if j != self.dual_index(i) {
            0
        } else if i < j {
            1
        } else {
            -1
        }
    }

    /// Gram matrix of the skew form, <v_i, v_j>.
    pub fn form(&self, field: FieldSpec) -> Mat {
        let d = self.dim();
        Mat::from_fn(d, d, field, |i, j| {
            if j == self.dual_index(i) {
                if i < j {
                    field.one()
                } else {
                    field.from_i64(-1)
                }
            } else {
                field.zero()
            }
        })
    }
}

/// V^{\otimes n} with basis indexed by words over the 2m letters, first
/// letter most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub space: SymplecticSpace,
    pub n: usize,
}

impl TensorSpace {
    pub fn new(m: usize, n: usize, cap: Option<usize>) -> Result<TensorSpace, SpswError> {
        let space = SymplecticSpace::new(m);
        let cap = cap.unwrap_or(DEFAULT_DIM_CAP);
        let dim = space.dim().checked_pow(n as u32).unwrap_or(usize::MAX);
        if dim > cap {
            return Err(SpswError::CapExceeded { dim, cap });
        }
        Ok(TensorSpace { space, n })
    }

    pub fn dim(&self) -> usize {
        self.space.dim().pow(self.n as u32)
    }

    pub fn index_of_word(&self, w: &[usize]) -> usize {
        let d = self.space.dim();
        w.iter().fold(0, |acc, &c| acc * d + c)
    }

    pub fn word_of_index(&self, mut idx: usize) -> Vec<usize> {
        let d = self.space.dim();
        let mut w = vec![0; self.n];
        for k in (0..self.n).rev() {
            w[k] = idx % d;
            idx /= d;
        }
        w
    }
}

/// Scaled basis vector sum helper: accumulates c * e_idx into a row.
pub(crate) fn add_at(row: &mut [Scalar], idx: usize, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    row[idx] = if row[idx].is_zero() {
        c.clone()
    } else {
        row[idx].add_unchecked(c)
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_table_m2() {
        let v = SymplecticSpace::new(2);
        // 1-based: eps(1,4) = 1, eps(4,1) = -1, eps(1,2) = 0
        assert_eq!(v.epsilon(0, 3), 1);
        assert_eq!(v.epsilon(3, 0), -1);
        assert_eq!(v.epsilon(0, 1), 0);
    }

    #[test]
    fn dual_basis_pairs_to_delta() {
        for m in 1..=3 {
            let v = SymplecticSpace::new(m);
            let f = FieldSpec::Rationals;
            let gram = v.form(f);
            for i in 0..v.dim() {
                for j in 0..v.dim() {
                    // <v_i, v_j^*> = dual_sign(j) <v_i, v_{j'}> = delta_ij
                    let val = gram
                        .get(i, v.dual_index(j))
                        .mul_unchecked(&f.from_i64(v.dual_sign(j)));
                    if i == j {
                        assert!(val.is_one());
                    } else {
                        assert!(val.is_zero());
                    }
                }
            }
            // skew symmetry
            assert_eq!(gram.transpose().neg(), gram);
        }
    }

    #[test]
    fn word_index_bijection() {
        let t = TensorSpace::new(2, 3, None).unwrap();
        assert_eq!(t.dim(), 64);
        for idx in 0..t.dim() {
            let w = t.word_of_index(idx);
            assert_eq!(t.index_of_word(&w), idx);
        }
        // lexicographic: word (0,0,1) is index 1
        assert_eq!(t.index_of_word(&[0, 0, 1]), 1);
    }

    #[test]
    fn cap_is_enforced() {
        // the default cap is inclusive: (2m)^n <= 4096
        assert!(TensorSpace::new(2, 6, None).is_ok());
        assert!(matches!(
            TensorSpace::new(2, 7, None),
            Err(SpswError::CapExceeded { .. })
        ));
        assert!(TensorSpace::new(2, 7, Some(20000)).is_ok());
        assert!(matches!(
            TensorSpace::new(2, 4, Some(100)),
            Err(SpswError::CapExceeded { .. })
        ));
    }
}
