//! Exact dense linear algebra over [`Field`](crate::field::Field) scalars.

mod matrix;
pub mod poly;
pub mod powers;
mod subspace;

pub use matrix::Matrix;
pub use poly::{rational_roots, Polynomial};
pub use powers::binomial;
pub use subspace::Subspace;
