//! Height zero: `x³ + y³ + z³ = n` with `x + y + z = 0`.
//!
//! At height zero the cube sum collapses to `3xyz`, so `R(0, n)` counts
//! ordered `(x, y, z)` with `xyz = n/3` and zero sum. Such triples need
//! `6 | n`. The record scan walks the multiples of 6 and marks every new
//! running maximum of `R(0, n)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use rayon::prelude::*;
use rug::float::Round;

use crate::arith::{exact_square_root, factor, for_each_signed_divisor, robin::robin_bound};
use crate::error::{Error, Result};
use crate::product_sum::ProductSumInstance;
use crate::scalar::{ops, Integral, Interval, Mp, Real, WORKING_BITS};

/// Largest limit accepted by [`record_scan`].
pub const MAX_RECORD_LIMIT: u64 = 10_000_000;

/// `R(0, n)`.
pub fn zero_height_count<T: Integral>(n: &T) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let three = ops::lit::<T>(3);
    if !n.is_multiple_of(&three) {
        return Ok(0);
    }
    let product = n.clone() / three;
    if product.is_odd() {
        return Ok(0);
    }
    ProductSumInstance::new(product, T::zero())?.count_formula()
}

/// Whether `6 | n` and some signed divisor `d` of `n/3` makes
/// `n²/(9d²) − 4d` a perfect square.
pub fn corollary1_check<T: Integral>(n: &T) -> Result<bool> {
    divisor_criterion(n, true)
}

/// The same criterion restricted to positive `d`.
pub fn corollary1_positive_only<T: Integral>(n: &T) -> Result<bool> {
    divisor_criterion(n, false)
}

fn divisor_criterion<T: Integral>(n: &T, signed: bool) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if ops::residue(n, 6) != 0 {
        return Ok(false);
    }
    let m = n.clone() / ops::lit::<T>(3);
    let four = ops::lit::<T>(4);
    let mut hit = false;
    for_each_signed_divisor(&factor(&m)?, |d| {
        if hit || (!signed && d.is_negative()) {
            return Ok(());
        }
        let q = ops::div(&m, &d)?;
        let disc = ops::sub(&ops::square(&q)?, &ops::mul(&four, &d)?)?;
        hit = exact_square_root(&disc).is_some();
        Ok(())
    })?;
    Ok(hit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordEntry {
    pub n: u64,
    pub count: u64,
    pub is_new_max: bool,
}

/// A step between consecutive new maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordJump {
    pub n: u64,
    pub count: u64,
    pub jump: u64,
}

impl RecordJump {
    pub fn is_six(&self) -> bool {
        self.jump == 6
    }
}

/// Every `n ≤ limit` with `R(0, n) > 0`, ascending, with new-maximum flags.
///
/// Chunks of `n` are processed on the current rayon pool; the flags are set
/// in a sequential pass afterwards so the result does not depend on the
/// number of threads.
pub fn record_scan(limit: u64) -> Result<Vec<RecordEntry>> {
    if limit > MAX_RECORD_LIMIT {
        return Err(Error::LimitTooLarge(limit));
    }
    let mut entries: Vec<RecordEntry> = (1..=limit / 6)
        .into_par_iter()
        .map(|k| {
            let n = 6 * k;
            zero_height_count(&(n as i64)).map(|count| RecordEntry {
                n,
                count,
                is_new_max: false,
            })
        })
        .filter(|r| !matches!(r, Ok(e) if e.count == 0))
        .collect::<Result<Vec<_>>>()?;
    let mut best = 0;
    for e in &mut entries {
        if e.count > best {
            best = e.count;
            e.is_new_max = true;
        }
    }
    Ok(entries)
}

/// Increments between consecutive new maxima.
pub fn record_jumps(entries: &[RecordEntry]) -> Vec<RecordJump> {
    let mut prev = 0;
    entries
        .iter()
        .filter(|e| e.is_new_max)
        .map(|e| {
            let j = RecordJump {
                n: e.n,
                count: e.count,
                jump: e.count - prev,
            };
            prev = e.count;
            j
        })
        .collect()
}

/// `σ₁(n) / (e^γ · n · log log n)` and membership in the band `(0.85, 1)`.
#[derive(Clone, Debug)]
pub struct SigmaRatioReport {
    pub n: BigInt,
    pub sigma1: BigInt,
    pub ratio: Mp,
    /// The ratio correctly rounded to [`RATIO_DIGITS`] significant digits.
    pub ratio_decimal: String,
    pub in_s: bool,
}

pub const RATIO_DIGITS: usize = 32;

/// Ratio report for `n > 5040`.
pub fn sigma_ratio<T: Integral>(n: &T) -> Result<SigmaRatioReport> {
    if *n <= ops::lit(5040) {
        return Err(Error::Domain(format!(
            "sigma ratio needs n > 5040, got {n}"
        )));
    }
    let sigma1 = factor(n)?.sigma(1)?.to_big();
    let nb = n.to_big();
    let mut bits = WORKING_BITS;
    while bits <= crate::arith::robin::MAX_BITS {
        let bound = robin_bound(&nb, bits);
        let s = Interval::exact_int(&sigma1, bits);
        let ratio = s.div_positive(&bound);
        let lo = Mp(ratio.lo.clone()).to_decimal(RATIO_DIGITS);
        let hi = Mp(ratio.hi.clone()).to_decimal(RATIO_DIGITS);
        let in_s = band_membership(&ratio);
        if let (true, Some(in_s)) = (lo == hi, in_s) {
            let mid = rug::Float::with_val(bits, &ratio.lo + &ratio.hi) / 2u32;
            return Ok(SigmaRatioReport {
                n: nb,
                sigma1,
                ratio: Mp(mid),
                ratio_decimal: lo,
                in_s,
            });
        }
        bits *= 2;
    }
    Err(Error::Undecided(crate::arith::robin::MAX_BITS))
}

/// `Some(17/20 < ratio < 1)` when the interval decides it.
fn band_membership(ratio: &Interval) -> Option<bool> {
    let bits = ratio.lo.prec();
    let scaled = Interval {
        lo: rug::Float::with_val_round(bits, &ratio.lo * 20u32, Round::Down).0,
        hi: rug::Float::with_val_round(bits, &ratio.hi * 20u32, Round::Up).0,
    };
    let above = scaled.locate(&rug::Float::with_val(bits, 17))?;
    let below = ratio.locate(&rug::Float::with_val(bits, 1))?;
    Some(above == Ordering::Less && below == Ordering::Greater)
}
