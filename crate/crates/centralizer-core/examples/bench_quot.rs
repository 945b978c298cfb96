use centralizer_core::linalg::sparse::{commutant_rows, SparseVec};
use centralizer_core::linalg::sparse_kernel;
use centralizer_core::scalar::FieldSpec;
use centralizer_core::spsw::harmonic::subquotient_spaces;
use centralizer_core::spsw::action::all_generator_matrices;
use std::time::Instant;

fn main() {
    let q = FieldSpec::Rationals;
    let t0 = Instant::now();
    let s = subquotient_spaces(2, 3, 1, q, None).unwrap();
    println!("(2,3,1): dim W={} Q={} H*={} in {:?}", s.w_f.dim(), s.q_f.dim(), s.h_star.dim(), t0.elapsed());

    // induced generator matrices on the quotient (column convention)
    let t0 = Instant::now();
    let gens = all_generator_matrices(&s.tensor, q).unwrap();
    let induced: Vec<_> = gens.iter().take(2).map(|g| s.q_f.induced_map(&g.transpose()).unwrap()).collect();
    println!("induced s1,s2 built in {:?}", t0.elapsed());

    let t0 = Instant::now();
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in &induced {
        rows.extend(commutant_rows(g));
    }
    let d = s.q_f.dim();
    println!("constraint rows: {} over {} cols", rows.len(), d * d);
    let basis = sparse_kernel(rows, d * d, q);
    println!("E = End_B(Q_1): dim {} in {:?}", basis.len(), t0.elapsed());
}
