use centralizer_core::scalar::FieldSpec;
use centralizer_core::spsw::schur::schur_algebra;
use std::time::Instant;

fn main() {
    for (m, n) in [(1usize, 2usize), (1, 3), (2, 2), (2, 3)] {
        let t0 = Instant::now();
        let s = schur_algebra(m, n, FieldSpec::Rationals, Some(100000)).unwrap();
        println!("S^sy({m},{n}) over Q: dim {} in {:?}", s.dim(), t0.elapsed());
    }
    let f7 = FieldSpec::prime_field(7).unwrap();
    let t0 = Instant::now();
    let s = schur_algebra(2, 3, f7, Some(100000)).unwrap();
    println!("S^sy(2,3) over F7: dim {} in {:?}", s.dim(), t0.elapsed());
}
