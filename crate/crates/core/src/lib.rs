//! Descent statistics, character formulas and fine sets for the symmetric
//! groups `S_n` and the hyperoctahedral groups `B_n`.
//!
//! The linear algebra, Schur vectors and polynomial evaluator are generic
//! over a [`Scalar`](scalar::Scalar); the aliases below fix the exact types
//! that every check in this crate uses.

pub mod character;
pub mod distribution;
pub mod error;
pub mod families;
pub mod linalg;
pub mod perm;
pub mod rsk;
pub mod scalar;
pub mod shapes;
pub mod suites;
pub mod symfunc;
pub mod tableau;
pub mod weight_matrix;

pub use distribution::{DescentDistributionA, DescentDistributionB};
pub use error::{Error, Result};
pub use perm::SignedPerm;
pub use shapes::{Bipartition, Composition, Partition, Sign, SignedComposition, SignedSet};
pub use suites::{run_suite, verify_theorem, FineSetReport, SuiteReport};
pub use symfunc::{dist_to_schur_a, dist_to_schur_b, FineVerdict, SchurVec};
pub use tableau::{Bitableau, Tableau};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub type SchurVecA = SchurVec<Partition, Rational>;
pub type SchurVecB = SchurVec<Bipartition, Rational>;
pub type ClassFunctionA = character::ClassFunction<Partition, Rational>;
pub type ClassFunctionB = character::ClassFunction<Bipartition, Rational>;
pub type Polynomial = symfunc::Poly<Integer>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub use weight_matrix::WeightMatrix;
