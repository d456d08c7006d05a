//! Robin's inequality `σ₁(n) < e^γ · n · log log n`.
//!
//! The bound is evaluated as an outward-rounded MPFR interval. A comparison
//! that lands inside the interval is retried at doubled precision; only
//! after [`MAX_BITS`] does it give up with [`Error::Undecided`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::factor::factor;
use crate::error::{Error, Result};
use crate::scalar::{big_to_rug, ops, Integral, Interval};

/// First precision tried, in bits.
pub const START_BITS: u32 = 64;
/// Precision ceiling before reporting an undecided comparison.
pub const MAX_BITS: u32 = 1 << 14;
/// Largest `n` for which the inequality is known to fail.
pub const ROBIN_THRESHOLD: u64 = 5040;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RobinSide {
    Holds,
    Violated,
}

/// Interval enclosing `e^γ · n · log log n` for `n ≥ 3`.
pub fn robin_bound(n: &BigInt, bits: u32) -> Interval {
    let loglog = Interval::exact_int(n, bits).ln().ln();
    let eg = Interval::euler_gamma(bits).exp();
    eg.mul_positive(&Interval::exact_int(n, bits))
        .mul_positive(&loglog)
}

/// Decides which side of Robin's inequality `n` falls on, given `σ₁(n)`.
pub fn robin_side(n: &BigInt, sigma1: &BigInt) -> Result<RobinSide> {
    if *n < BigInt::from(3) {
        return Err(Error::Domain(format!(
            "Robin's inequality needs n ≥ 3, got {n}"
        )));
    }
    let mut bits = START_BITS.max(n.bits() as u32 + 16);
    let s = big_to_rug(sigma1);
    while bits <= MAX_BITS {
        let bound = robin_bound(n, bits);
        let sf = rug::Float::with_val(bits.max(sigma1.bits() as u32 + 2), &s);
        match bound.locate(&sf) {
            Some(Ordering::Less) => return Ok(RobinSide::Holds),
            Some(_) => return Ok(RobinSide::Violated),
            None => bits *= 2,
        }
    }
    Err(Error::Undecided(MAX_BITS))
}

/// Evaluates Robin's inequality at `n ≥ 3`.
pub fn robin_check<T: Integral>(n: &T) -> Result<RobinSide> {
    if *n < ops::lit(3) {
        return Err(Error::Domain(format!(
            "Robin's inequality needs n ≥ 3, got {n}"
        )));
    }
    let sigma1 = factor(n)?.sigma(1)?;
    robin_side(&n.to_big(), &sigma1.to_big())
}

/// Summary of a Robin scan over an integer range.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RobinScan {
    pub checked: u64,
    /// Violations with `n > 5040`, where the inequality is claimed.
    pub violations: Vec<(u64, u64)>,
    /// Violations with `n ≤ 5040`, outside the claimed range.
    pub out_of_claim: Vec<(u64, u64)>,
}

/// Checks every `n` in `from..=to` (`from ≥ 3`), in parallel.
pub fn robin_scan(from: u64, to: u64) -> Result<RobinScan> {
    if from < 3 {
        return Err(Error::Domain(format!(
            "Robin's inequality needs n ≥ 3, got {from}"
        )));
    }
    if to < from {
        return Ok(RobinScan::default());
    }
    let failures: Vec<(u64, u64)> = (from..=to)
        .into_par_iter()
        .map(|n| -> Result<Option<(u64, u64)>> {
            let sigma1 = factor(&(n as i128))?.sigma(1)?;
            let side = robin_side(&BigInt::from(n), &BigInt::from(sigma1))?;
            Ok((side == RobinSide::Violated).then_some((n, sigma1 as u64)))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<Vec<_>>>()?;
    let (out_of_claim, violations) = failures
        .into_iter()
        .partition(|(n, _)| *n <= ROBIN_THRESHOLD);
    Ok(RobinScan {
        checked: to - from + 1,
        violations,
        out_of_claim,
    })
}
