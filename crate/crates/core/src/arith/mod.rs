//! Exact arithmetic kernel: factorization, divisors, multiplicative
//! functions, square detection and Robin's inequality.

pub mod divisors;
pub mod factor;
pub mod robin;

pub use divisors::{
    exact_square_root, for_each_signed_divisor, is_square, rad, sigma, signed_divisors, tau,
    total_product_triples, DivisorIter, MATERIALIZE_LIMIT,
};
pub use factor::{factor, is_prime, primes_below, small_primes, Factorization};
pub use robin::{robin_check, robin_scan, robin_side, RobinScan, RobinSide};
