//! Exact dense and sparse linear algebra over Q and F_p: reduced row
//! echelon form, kernels, images, subspace arithmetic, quotient spaces,
//! Kronecker products, and mod-p rank certificates.

pub mod mat;
pub mod modp;
pub mod sparse;
pub mod subspace;

pub use mat::{LinalgError, Mat};
pub use sparse::{commutant_basis, commutant_rows, sparse_from_dense, sparse_kernel, SparseVec};
pub use subspace::{image, kernel, QuotientSpace, Subspace};
