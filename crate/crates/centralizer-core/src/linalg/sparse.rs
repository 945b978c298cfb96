//! Sparse exact elimination for the large, very sparse linear systems that
//! arise from commutant conditions (a few nonzeros per row across thousands
//! of columns). Rows are kept as sorted coordinate lists.

use std::collections::BTreeMap;

use crate::linalg::mat::Mat;
use crate::scalar::{FieldSpec, Scalar};

/// Sorted (column, coefficient) list with no zero coefficients.
pub type SparseVec = Vec<(u32, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(c, s)| (c as u32, s.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, ncols: usize, field: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); ncols];
    for (c, s) in v {
        out[*c as usize] = s.clone();
    }
    out
}

/// dst += c * src (merge of sorted lists).
fn axpy(dst: &SparseVec, src: &SparseVec, c: &Scalar) -> SparseVec {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() && j < src.len() {
        let (dc, sc) = (dst[i].0, src[j].0);
        if dc < sc {
            out.push(dst[i].clone());
            i += 1;
        } else if sc < dc {
            let v = src[j].1.mul_unchecked(c);
            if !v.is_zero() {
                out.push((sc, v));
            }
            j += 1;
        } else {
            let v = dst[i].1.add_unchecked(&src[j].1.mul_unchecked(c));
            if !v.is_zero() {
                out.push((dc, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&dst[i..]);
    for (sc, sv) in &src[j..] {
        let v = sv.mul_unchecked(c);
        if !v.is_zero() {
            out.push((*sc, v));
        }
    }
    out
}

fn scale(v: &mut SparseVec, c: &Scalar) {
    if c.is_one() {
        return;
    }
    for (_, s) in v.iter_mut() {
        *s = s.mul_unchecked(c);
    }
}

/// Row echelon basis of the row space of a sparse system, fully reduced
/// (each pivot column appears in exactly one row). Deterministic.
pub struct SparseRref {
    pub ncols: usize,
    pub field: FieldSpec,
    /// pivot column -> reduced row with leading coefficient 1 at that column
    pub rows: BTreeMap<u32, SparseVec>,
}

impl SparseRref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a row against the current pivot rows (leading terms only).
    fn echelon_reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let Some((lead, coeff)) = row.first().cloned() else {
                return row;
            };
            let Some(piv) = self.rows.get(&lead) else {
                return row;
            };
            row = axpy(&row, piv, &coeff.neg());
        }
    }
}

/// Builds the fully reduced sparse RREF of the given rows.
pub fn sparse_rref(rows: Vec<SparseVec>, ncols: usize, field: FieldSpec) -> SparseRref {
    let mut st = SparseRref {
        ncols,
        field,
        rows: BTreeMap::new(),
    };
    // shortest rows first keeps fill-in low on commutant-style systems
    let mut rows = rows;
    rows.sort_by_key(|r| (r.len(), r.first().map(|x| x.0).unwrap_or(0)));
    for row in rows {
        let mut row = st.echelon_reduce(row);
        if row.is_empty() {
            continue;
        }
        let inv = row[0].1.inv().expect("nonzero leading coefficient");
        scale(&mut row, &inv);
        let col = row[0].0;
        st.rows.insert(col, row);
    }
    // full reduction: clear pivot columns from the tails, working upwards
    let cols: Vec<u32> = st.rows.keys().cloned().collect();
    for &c in cols.iter().rev() {
        let row = st.rows.remove(&c).unwrap();
        let mut reduced = row;
        loop {
            // find a tail entry at some pivot column
            let hit = reduced
                .iter()
                .skip(1)
                .find(|(cc, _)| st.rows.contains_key(cc))
                .cloned();
            let Some((cc, coeff)) = hit else { break };
            let piv = st.rows.get(&cc).unwrap();
            reduced = axpy(&reduced, piv, &coeff.neg());
        }
        st.rows.insert(c, reduced);
    }
    st
}

/// Kernel basis of the sparse system (solutions x with R x = 0 for every
/// row R). One basis vector per free column, in increasing column order;
/// the vector for free column f has 1 at f, is supported elsewhere only on
/// pivot columns, and vanishes at the other free columns.
pub fn sparse_kernel(rows: Vec<SparseVec>, ncols: usize, field: FieldSpec) -> Vec<Vec<Scalar>> {
    let st = sparse_rref(rows, ncols, field);
    let mut free_index: BTreeMap<u32, usize> = BTreeMap::new();
    for c in 0..ncols as u32 {
        if !st.rows.contains_key(&c) {
            let k = free_index.len();
            free_index.insert(c, k);
        }
    }
    let mut basis = vec![vec![field.zero(); ncols]; free_index.len()];
    for (&f, &k) in &free_index {
        basis[k][f as usize] = field.one();
    }
    for (&p, row) in &st.rows {
        for (c, coeff) in row.iter().skip(1) {
            let k = free_index[c]; // fully reduced: tails only hit free columns
            basis[k][p as usize] = coeff.neg();
        }
    }
    basis
}

/// Rank of a sparse system without keeping the reduced rows.
pub fn sparse_rank(rows: Vec<SparseVec>, ncols: usize, field: FieldSpec) -> usize {
    sparse_rref(rows, ncols, field).rank()
}

/// Constraint rows of the intertwiner system X b = a X for an unknown
/// X: K^sc -> K^tr (a acts on the target, b on the source); unknown
/// X[r][c] has index r * sc + c.
pub fn intertwiner_rows(a_target: &Mat, b_source: &Mat) -> Vec<SparseVec> {
    let tr = a_target.rows();
    let sc = b_source.rows();
    assert_eq!(a_target.cols(), tr);
    assert_eq!(b_source.cols(), sc);
    let field = a_target.field();
    let mut rows = Vec::with_capacity(tr * sc);
    for r in 0..tr {
        for c in 0..sc {
            // (X b - a X)[r][c] = sum_k X[r][k] b[k][c] - a[r][k] X[k][c]
            let mut row: BTreeMap<u32, Scalar> = BTreeMap::new();
            for k in 0..sc {
                let bkc = b_source.get(k, c);
                if !bkc.is_zero() {
                    let idx = (r * sc + k) as u32;
                    let e = row.entry(idx).or_insert_with(|| field.zero());
                    *e = e.add_unchecked(bkc);
                }
            }
            for k in 0..tr {
                let ark = a_target.get(r, k);
                if !ark.is_zero() {
                    let idx = (k * sc + c) as u32;
                    let e = row.entry(idx).or_insert_with(|| field.zero());
                    *e = e.sub_unchecked(ark);
                }
            }
            let row: SparseVec = row.into_iter().filter(|(_, s)| !s.is_zero()).collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

/// The commutant constraint rows for one square matrix g: X g = g X.
pub fn commutant_rows(g: &Mat) -> Vec<SparseVec> {
    intertwiner_rows(g, g)
}

/// Basis of the joint commutant {X : X g = g X for all g}, as matrices.
pub fn commutant_basis(gens: &[Mat], n: usize, field: FieldSpec) -> Vec<Mat> {
    let mut rows = Vec::new();
    for g in gens {
        rows.extend(commutant_rows(g));
    }
    sparse_kernel(rows, n * n, field)
        .into_iter()
        .map(|flat| Mat::from_flat(n, n, field, flat))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::subspace::kernel;

    #[test]
    fn sparse_kernel_matches_dense() {
        let m = Mat::from_i64_rows(
            &[vec![1, 2, 3, 0], vec![0, 1, 1, -1], vec![1, 3, 4, -1]],
            FieldSpec::Rationals,
        );
        let rows: Vec<SparseVec> = (0..m.rows()).map(|i| sparse_from_dense(m.row(i))).collect();
        let sk = sparse_kernel(rows, m.cols(), m.field());
        let dk = kernel(&m);
        assert_eq!(sk.len(), dk.dim());
        for v in &sk {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
            assert!(dk.contains_vec(v));
        }
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let f = FieldSpec::Rationals;
        let id = Mat::identity(3, f);
        let basis = commutant_basis(&[id], 3, f);
        assert_eq!(basis.len(), 9);
    }

    #[test]
    fn commutant_of_distinct_diagonal_is_diagonal() {
        let f = FieldSpec::Rationals;
        let d = Mat::from_i64_rows(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]], f);
        let basis = commutant_basis(&[d], 3, f);
        assert_eq!(basis.len(), 3);
        for m in &basis {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert!(m.get(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn commutant_of_permutation_pair() {
        // the full cycle and a transposition generate S_3; the commutant of
        // the regular-ish permutation action on K^3 is 2-dimensional only
        // for the cycle alone, 1 + 1 for the pair (identity + all-ones).
        let f = FieldSpec::Rationals;
        let cycle = Mat::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], f);
        let swap = Mat::from_i64_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]], f);
        let basis = commutant_basis(&[cycle.clone(), swap], 3, f);
        assert_eq!(basis.len(), 2);
        for m in &basis {
            assert_eq!(m.matmul(&cycle), cycle.matmul(m));
        }
    }
}
