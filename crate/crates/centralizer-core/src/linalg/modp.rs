//! Fast dense elimination modulo a machine-word prime.
//!
//! Used in two ways: as the plain linear algebra backend when the session
//! field is F_p, and as a rank certificate for rational systems. For an
//! integer matrix, rank over F_p never exceeds rank over Q, so a mod-p
//! elimination gives an exact lower bound on the rational rank (and hence
//! an exact upper bound on a rational kernel dimension). Combined with a
//! structural inclusion in the other direction this pins rational
//! dimensions without rational elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::mat::Mat;
use crate::linalg::sparse::SparseVec;
use crate::scalar::Scalar;

/// Dense matrix over F_p with p < 2^31 (products fit in u64).
pub struct ModMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl ModMat {
    pub fn zero(rows: usize, cols: usize, p: u64) -> ModMat {
        ModMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Reduction of a rational matrix: each row is scaled by the lcm of its
    /// denominators (invertible scaling, rank-preserving), then reduced
    /// mod p. Fails if p divides one of the denominators.
    pub fn from_mat(m: &Mat, p: u64) -> Option<ModMat> {
        let mut out = ModMat::zero(m.rows(), m.cols(), p);
        for i in 0..m.rows() {
            let red = reduce_row_mod_p(m.row(i), p)?;
            out.data[i * m.cols()..(i + 1) * m.cols()].copy_from_slice(&red);
        }
        Some(out)
    }

    pub fn from_sparse_rows(rows: &[SparseVec], ncols: usize, p: u64) -> Option<ModMat> {
        let mut out = ModMat::zero(rows.len(), ncols, p);
        for (i, row) in rows.iter().enumerate() {
            let mut lcm = BigInt::one();
            for (_, s) in row {
                if let Some(r) = s.as_rational() {
                    lcm = lcm.lcm(r.denom());
                }
            }
            for (c, s) in row {
                let v = scalar_mod_p(s, &lcm, p)?;
                out.data[i * ncols + *c as usize] = v;
            }
        }
        Some(out)
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place elimination; returns the rank.
    pub fn rank(&mut self) -> usize {
        let p = self.p;
        let mut rank = 0usize;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let mut piv = None;
            for i in rank..self.rows {
                if self.data[i * self.cols + col] != 0 {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in col..self.cols {
                    self.data.swap(rank * self.cols + j, piv * self.cols + j);
                }
            }
            let inv = mod_pow(self.data[rank * self.cols + col], p - 2, p);
            for j in col..self.cols {
                let idx = rank * self.cols + j;
                self.data[idx] = self.data[idx] * inv % p;
            }
            let (before, rest) = self.data.split_at_mut((rank + 1) * self.cols);
            let prow = &before[rank * self.cols..];
            for i in 0..self.rows - rank - 1 {
                let row = &mut rest[i * self.cols..(i + 1) * self.cols];
                let f = row[col];
                if f == 0 {
                    continue;
                }
                let f = p - f;
                for j in col..self.cols {
                    row[j] = (row[j] + f * prow[j]) % p;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn kernel_dim(&mut self) -> usize {
        self.cols - self.rank()
    }
}

fn reduce_row_mod_p(row: &[Scalar], p: u64) -> Option<Vec<u64>> {
    let mut lcm = BigInt::one();
    for s in row {
        if let Some(r) = s.as_rational() {
            lcm = lcm.lcm(r.denom());
        }
    }
    row.iter().map(|s| scalar_mod_p(s, &lcm, p)).collect()
}

/// (lcm * s) mod p, requiring p coprime to the denominator of s.
fn scalar_mod_p(s: &Scalar, lcm: &BigInt, p: u64) -> Option<u64> {
    match s {
        Scalar::Mod { value, p: q } => (*q == p).then_some(*value),
        Scalar::Rational(r) => {
            let pb = BigInt::from(p);
            let den = r.denom();
            if (den % &pb).is_zero() {
                return None;
            }
            let scaled = lcm * r.numer() / den;
            let m = ((scaled % &pb) + &pb) % &pb;
            m.to_u64()
        }
    }
}

/// Exact lower bound on the rational rank of a sparse integer/rational
/// system, from one mod-p elimination. None if p collides with a
/// denominator.
pub fn rank_lower_bound(rows: &[SparseVec], ncols: usize, p: u64) -> Option<usize> {
    let mut m = ModMat::from_sparse_rows(rows, ncols, p)?;
    Some(m.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    #[test]
    fn modp_rank_matches_exact_rank() {
        let m = Mat::from_i64_rows(
            &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
            FieldSpec::Rationals,
        );
        assert_eq!(m.rank(), 2);
        let mut mm = ModMat::from_mat(&m, 101).unwrap();
        assert_eq!(mm.rank(), 2);
    }

    #[test]
    fn rank_can_drop_mod_p_but_never_rises() {
        // [[1,0],[0,7]] has rank 2 over Q, rank 1 over F_7
        let m = Mat::from_i64_rows(&[vec![1, 0], vec![0, 7]], FieldSpec::Rationals);
        assert_eq!(m.rank(), 2);
        let mut m7 = ModMat::from_mat(&m, 7).unwrap();
        assert_eq!(m7.rank(), 1);
        let mut m11 = ModMat::from_mat(&m, 11).unwrap();
        assert_eq!(m11.rank(), 2);
    }

    #[test]
    fn denominators_are_cleared_per_row() {
        let f = FieldSpec::Rationals;
        let half = f.from_ratio(1, 2).unwrap();
        let third = f.from_ratio(1, 3).unwrap();
        let m = Mat::from_rows(vec![vec![half, third]], 2, f);
        // row scaled by 6 -> (3, 2); over F_5 that is (3, 2)
        let mm = ModMat::from_mat(&m, 5).unwrap();
        assert_eq!(&mm.data, &[3, 2]);
        // p dividing a denominator is rejected
        assert!(ModMat::from_mat(&m, 3).is_none());
    }
}
