//! Exact computational toolkit for double-centralizer verification on
//! finite-dimensional algebras: rational and prime-field linear algebra,
//! algebras given by structure constants, standardly stratified structure
//! and tilting theory, Brauer diagram algebras, and the symplectic
//! tensor-space action.

pub mod brauer;
pub mod corpus;
pub mod fdalg;
pub mod linalg;
pub mod scalar;
pub mod spsw;
