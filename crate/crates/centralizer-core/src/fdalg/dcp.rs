//! The double-centralizer machinery: commutants of matrix spans, the
//! canonical map into the double commutant, embeddings into add(T),
//! left approximations, and the two-stage dominant-dimension witness
//! 0 -> A -> T^r -> T^s.

use crate::fdalg::{AlgebraHom, FdalgError, LeftModule, ModMap};
use crate::linalg::sparse::{commutant_rows, SparseVec};
use crate::linalg::subspace::SpannedSpace;
use crate::linalg::{kernel, sparse_kernel, Mat, Subspace};
use crate::scalar::{FieldSpec, Scalar};

/// Commutant of a span of matrices inside End(K^d). Constraints are
/// imposed for a prefix of the spanning set first and the candidate is
/// verified against the rest; failing elements join the constraint set.
/// Exact, deterministic, and fast when a few elements already cut the
/// commutant down.
pub fn commutant_of_span(span: &[Mat], d: usize, field: FieldSpec) -> Vec<Mat> {
    if span.is_empty() {
        return (0..d * d)
            .map(|k| {
                let mut m = Mat::zero(d, d, field);
                m.set(k / d, k % d, field.one());
                m
            })
            .collect();
    }
    let mut active: Vec<usize> = (0..span.len().min(4)).collect();
    loop {
        let mut rows: Vec<SparseVec> = Vec::new();
        for &i in &active {
            rows.extend(commutant_rows(&span[i]));
        }
        let basis: Vec<Mat> = sparse_kernel(rows, d * d, field)
            .into_iter()
            .map(|flat| Mat::from_flat(d, d, field, flat))
            .collect();
        let mut failed = None;
        'outer: for (i, g) in span.iter().enumerate() {
            if active.contains(&i) {
                continue;
            }
            for x in &basis {
                if x.matmul(g) != g.matmul(x) {
                    failed = Some(i);
                    break 'outer;
                }
            }
        }
        match failed {
            None => return basis,
            Some(i) => active.push(i),
        }
    }
}

/// Report of the canonical map A -> End_{End_A(T)}(T).
pub struct DcpReport {
    pub hom: AlgebraHom,
    pub a_prime_dim: usize,
    pub a_second_dim: usize,
    /// Basis of A'' as endomorphisms of T.
    pub a_second_basis: Vec<Mat>,
}

impl DcpReport {
    pub fn bijective(&self) -> bool {
        self.hom.bijective()
    }
}

/// The double-centralizer check for an algebra given by structure constants
/// acting on a module: A' = End_A(T), A'' = commutant of A', and the map
/// a -> rho_T(a) expressed in an A''-basis. Injectivity is faithfulness of
/// T; surjectivity compares the image span with A''.
pub fn double_centralizer_map(t: &LeftModule) -> Result<DcpReport, FdalgError> {
    let field = t.field();
    let a_prime = super::hom::hom_basis(t, t)?;
    let a_second = commutant_of_span(&a_prime, t.dim, field);
    dcp_from_image(t.action_matrices(), &a_second, a_prime.len(), t.dim, field)
}

/// Same check with the image of A given directly as matrices (used when A
/// is itself presented as a matrix algebra; the representation sending a
/// basis matrix to itself is injective by definition).
pub fn double_centralizer_map_of_span(span: &[Mat], d: usize, field: FieldSpec) -> Result<DcpReport, FdalgError> {
    let a_prime = commutant_of_span(span, d, field);
    let rep = dcp_from_image(span, &commutant_of_span(&a_prime, d, field), a_prime.len(), d, field)?;
    Ok(rep)
}

fn dcp_from_image(
    image: &[Mat],
    a_second: &[Mat],
    a_prime_dim: usize,
    d: usize,
    field: FieldSpec,
) -> Result<DcpReport, FdalgError> {
    let flat_second = Mat::from_rows(
        a_second.iter().map(|m| m.flatten()).collect(),
        d * d,
        field,
    );
    let span2 = SpannedSpace::new(&flat_second);
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(image.len());
    for rho in image {
        let coords = span2
            .coords(&rho.flatten())
            .expect("the image always lies in the double commutant");
        cols.push(coords);
    }
    let n = image.len();
    let matrix = Mat::from_fn(a_second.len(), n, field, |i, j| cols[j][i].clone());
    let injective = kernel(&matrix).is_zero();
    let surjective = matrix.rank() == a_second.len();
    Ok(DcpReport {
        hom: AlgebraHom {
            matrix,
            injective,
            surjective,
        },
        a_prime_dim,
        a_second_dim: a_second.len(),
        a_second_basis: a_second.to_vec(),
    })
}

/// Whether f: M -> C is a left add(T)-approximation: the restriction map
/// Hom(C, T) -> Hom(M, T), g -> g o f, must be surjective.
pub fn is_left_approximation(f: &ModMap, t: &LeftModule) -> Result<bool, FdalgError> {
    let hom_ct = super::hom::hom_basis(&f.target, t)?;
    let hom_mt = super::hom::hom_basis(&f.source, t)?;
    if hom_mt.is_empty() {
        return Ok(true);
    }
    let target_flat = Mat::from_rows(
        hom_mt.iter().map(|m| m.flatten()).collect(),
        t.dim * f.source.dim,
        t.field(),
    );
    let restricted = Mat::from_rows(
        hom_ct.iter().map(|g| g.matmul(&f.matrix).flatten()).collect(),
        t.dim * f.source.dim,
        t.field(),
    );
    let full = Subspace::from_rows(&target_flat);
    let image = Subspace::from_rows(&restricted);
    Ok(image == full)
}

/// The universal evaluation M -> T^{dim Hom(M, T)} restricted to a greedily
/// minimized set of components that stays injective. Fails when the common
/// kernel of all homomorphisms M -> T is nonzero.
pub fn embed_into_add(m: &LeftModule, t: &LeftModule) -> Result<(usize, ModMap), FdalgError> {
    let homs = super::hom::hom_basis(m, t)?;
    let field = m.field();
    let mut selected: Vec<&Mat> = Vec::new();
    let mut common = Subspace::full(m.dim, field);
    for h in &homs {
        if common.is_zero() {
            break;
        }
        let restricted = if common.dim() == m.dim {
            kernel(h)
        } else {
            let mapped = common.basis().matmul(&h.transpose());
            let coeff_kernel = kernel(&mapped.transpose());
            let rows = coeff_kernel.basis().matmul(common.basis());
            Subspace::from_rows(&rows)
        };
        if restricted.dim() < common.dim() {
            selected.push(h);
            common = restricted;
        }
    }
    if !common.is_zero() {
        return Err(FdalgError::NotEmbeddable);
    }
    let r = selected.len();
    let target = LeftModule::direct_sum(&[t], &[r]);
    let mut matrix = Mat::zero(r * t.dim, m.dim, field);
    for (i, h) in selected.iter().enumerate() {
        for rr in 0..t.dim {
            for cc in 0..m.dim {
                let v = h.get(rr, cc);
                if !v.is_zero() {
                    matrix.set(i * t.dim + rr, cc, v.clone());
                }
            }
        }
    }
    let map = ModMap::new(m.clone(), target, matrix)?;
    Ok((r, map))
}

/// Outcome of the two-stage dominant-dimension test.
pub enum DomDim2 {
    /// T is not faithful: the universal evaluation of A is not injective.
    NotFaithful,
    /// The cokernel of the embedding does not embed into add(T).
    CokernelObstruction { r: usize },
    /// Witness 0 -> A -> T^r -> T^s with eps delta = 0 and ker eps = im delta,
    /// all verified by exact rank.
    AtLeastTwo { r: usize, s: usize, delta: Mat, eps: Mat },
}

impl DomDim2 {
    pub fn holds(&self) -> bool {
        matches!(self, DomDim2::AtLeastTwo { .. })
    }
}

/// Dominant dimension >= 2 for a matrix algebra span acting tautologically
/// on K^d. Stage 1 embeds the algebra by evaluation at a greedily minimized
/// set of coordinate vectors (a left approximation over a field); stage 2
/// decides whether the cokernel embeds into add(T) through the solution
/// space of h o delta = 0 inside Hom(T^r, T) = (A')^r, avoiding an explicit
/// cokernel module.
pub fn dominant_dimension_at_least_2_span(
    span: &[Mat],
    d: usize,
    field: FieldSpec,
) -> Result<DomDim2, FdalgError> {
    let n = span.len();
    // stage 1: greedy column selection keeping a -> (a e_c)_{c in cols} injective
    let full: Vec<usize> = (0..d).collect();
    let eval_rank = |cols: &[usize]| -> usize {
        let rows: Vec<Vec<Scalar>> = span
            .iter()
            .map(|a| {
                let mut row = Vec::with_capacity(cols.len() * d);
                for &c in cols {
                    for rr in 0..d {
                        row.push(a.get(rr, c).clone());
                    }
                }
                row
            })
            .collect();
        Mat::from_rows(rows, cols.len() * d, field).rank()
    };
    if eval_rank(&full) < n {
        return Ok(DomDim2::NotFaithful);
    }
    let mut cols = full;
    let mut i = 0;
    while i < cols.len() {
        let mut reduced = cols.clone();
        reduced.remove(i);
        if !reduced.is_empty() && eval_rank(&reduced) == n {
            cols = reduced;
        } else {
            i += 1;
        }
    }
    let r = cols.len();
    // delta: A -> T^r, basis a_j -> stacked chosen columns of a_j
    let delta = Mat::from_fn(r * d, n, field, |row, j| {
        let (i, rr) = (row / d, row % d);
        span[j].get(rr, cols[i]).clone()
    });
    // stage 2: A' and the solution space of h o delta = 0
    let a_prime = commutant_of_span(span, d, field);
    let k = a_prime.len();
    // unknowns y[i][kk] for h_i = sum_kk y[i][kk] A'_kk; equations indexed by
    // (basis a_j, output coordinate)
    let mut eq_rows: Vec<Vec<Scalar>> = vec![vec![field.zero(); r * k]; n * d];
    for (j, a) in span.iter().enumerate() {
        for (i, &c) in cols.iter().enumerate() {
            // w = a e_c; column of A'_kk applied to w
            let w: Vec<Scalar> = (0..d).map(|rr| a.get(rr, c).clone()).collect();
            for (kk, phi) in a_prime.iter().enumerate() {
                let img = phi.apply(&w);
                for (rr, v) in img.into_iter().enumerate() {
                    if !v.is_zero() {
                        eq_rows[j * d + rr][i * k + kk] = v;
                    }
                }
            }
        }
    }
    let eq = Mat::from_rows(eq_rows, r * k, field);
    let sols = kernel(&eq);
    let s = sols.dim();
    let mut eps = Mat::zero(s * d, r * d, field);
    for l in 0..s {
        let y = sols.basis().row(l);
        for i in 0..r {
            let mut h = Mat::zero(d, d, field);
            for (kk, phi) in a_prime.iter().enumerate() {
                let c = &y[i * k + kk];
                if !c.is_zero() {
                    h = h.add(&phi.scale(c)).expect("same shape");
                }
            }
            for rr in 0..d {
                for cc in 0..d {
                    let v = h.get(rr, cc);
                    if !v.is_zero() {
                        eps.set(l * d + rr, i * d + cc, v.clone());
                    }
                }
            }
        }
    }
    // exactness check: eps delta = 0 and ker eps = im delta, by rank
    assert!(eps.matmul(&delta).is_zero(), "eps o delta must vanish");
    let ker_eps_dim = if s == 0 {
        r * d
    } else {
        r * d - eps.rank()
    };
    if ker_eps_dim == n {
        Ok(DomDim2::AtLeastTwo { r, s, delta, eps })
    } else {
        Ok(DomDim2::CokernelObstruction { r })
    }
}

/// Dominant dimension >= 2 of an algebra relative to a module T. Fails at
/// stage 1 when T is not faithful; otherwise runs on the image of A in
/// End(T).
pub fn dominant_dimension_at_least_2(t: &LeftModule) -> Result<DomDim2, FdalgError> {
    if !t.is_faithful() {
        return Ok(DomDim2::NotFaithful);
    }
    // the action matrices are independent exactly because T is faithful
    let span: Vec<Mat> = t.action_matrices().to_vec();
    dominant_dimension_at_least_2_span(&span, t.dim, t.field())
}

/// The cokernel of an injective map, as a module (for cross-checking the
/// stage-2 shortcut on small instances).
pub fn cokernel_module(f: &ModMap) -> Result<LeftModule, FdalgError> {
    let im = f.image();
    let (q, _) = f.target.quotient(&im)?;
    Ok(q)
}
