//! Exact computations on Z/m-graded semisimple Lie algebras.
//!
//! The crate builds Chevalley bases from Cartan matrices, gradings from Kac coordinates, and on
//! top of those: Cartan subspaces of the degree-one component, little Weyl groups, the
//! stratification of a Cartan subspace by stabilizer type, and first Galois cohomology of finite
//! groups with a twist. All arithmetic is exact over cyclotomic fields.

pub mod exactnum;
pub mod liealg;
pub mod grading;
pub mod cartan;
pub mod weights;
pub mod weyl;
pub mod galois;
pub mod job;
