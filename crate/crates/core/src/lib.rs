//! Exact counting and enumeration of `x³ + y³ + z³ = n` at a prescribed
//! height `t = x + y + z`.
//!
//! The shift `x = A + t` turns a representation into an ordered triple with
//! `ABC = (n − t³)/3` and `A + B + C = −2t`; [`product_sum`] solves that
//! problem over the divisors of the product. Everything integral is generic
//! over [`Integral`] (`i64`, `i128`, `BigInt`); the transcendental
//! diagnostics are generic over [`Real`] (`f64`, MPFR-backed [`Mp`]).

pub mod abc;
pub mod arith;
pub mod cubes;
pub mod error;
pub mod product_sum;
pub mod records;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Integral, Interval, Mp, Real, WORKING_BITS};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

pub type Factorization = arith::Factorization<Int>;
pub type ProductSumInstance = product_sum::ProductSumInstance<Int>;
pub type ProductSumTriple = product_sum::ProductSumTriple<Int>;
pub type RepQuery = cubes::RepQuery<Int>;
pub type CubeTriple = cubes::CubeTriple<Int>;
pub type RepResult = cubes::RepResult<Int>;
pub type SymmetricProfile = cubes::SymmetricProfile<Int>;
pub type AbcTriple = abc::AbcTriple<Int>;
pub type AbcReport = abc::AbcReport<Int>;
