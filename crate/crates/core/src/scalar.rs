//! Scalar abstractions.
//!
//! Integer algorithms are written once against [`Integral`] and run on `i64`,
//! `i128` or [`BigInt`]. Fixed-width scalars never wrap: every operation that
//! can grow goes through the checked helpers in [`ops`] and surfaces
//! [`Error::Overflow`] instead of a wrong answer.
//!
//! Real-valued diagnostics are written against [`Real`], implemented for `f64`
//! (fast, approximate) and [`Mp`] (MPFR-backed, arbitrary precision).

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{
    CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive,
};
use rug::float::{Constant, Round};
use rug::Float;

use crate::error::{Error, Result};

/// Exact signed integer scalar.
pub trait Integral:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn to_big(&self) -> BigInt;
    fn from_big(v: &BigInt) -> Option<Self>;
}

macro_rules! impl_integral_prim {
    ($t:ty) => {
        impl Integral for $t {
            fn to_big(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_big(v: &BigInt) -> Option<Self> {
                <$t>::try_from(v).ok()
            }
        }
    };
}

impl_integral_prim!(i64);
impl_integral_prim!(i128);

impl Integral for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Checked arithmetic on [`Integral`] scalars.
pub mod ops {
    use super::*;

    #[inline]
    pub fn lit<T: Integral>(v: i64) -> T {
        T::from_i64(v).expect("every scalar holds an i64 literal")
    }

    #[inline]
    pub fn add<T: Integral>(a: &T, b: &T) -> Result<T> {
        a.checked_add(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn sub<T: Integral>(a: &T, b: &T) -> Result<T> {
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn mul<T: Integral>(a: &T, b: &T) -> Result<T> {
        a.checked_mul(b).ok_or(Error::Overflow)
    }

    /// Truncating division; exact whenever `b | a`.
    #[inline]
    pub fn div<T: Integral>(a: &T, b: &T) -> Result<T> {
        a.checked_div(b).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn neg<T: Integral>(a: &T) -> Result<T> {
        T::zero().checked_sub(a).ok_or(Error::Overflow)
    }

    #[inline]
    pub fn abs<T: Integral>(a: &T) -> Result<T> {
        if a.is_negative() {
            neg(a)
        } else {
            Ok(a.clone())
        }
    }

    #[inline]
    pub fn square<T: Integral>(a: &T) -> Result<T> {
        mul(a, a)
    }

    #[inline]
    pub fn cube<T: Integral>(a: &T) -> Result<T> {
        mul(&mul(a, a)?, a)
    }

    /// `a mod m` in `0..m` for positive `m`.
    #[inline]
    pub fn residue<T: Integral>(a: &T, m: i64) -> i64 {
        a.mod_floor(&lit(m))
            .to_i64()
            .expect("residue is below the modulus")
    }

    /// Converts between scalar types, failing when the value does not fit.
    pub fn convert<S: Integral, T: Integral>(v: &S) -> Result<T> {
        T::from_big(&v.to_big()).ok_or(Error::Overflow)
    }
}

/// Default MPFR working precision in bits (about 77 decimal digits).
pub const WORKING_BITS: u32 = 256;

/// Real scalar used by the transcendental diagnostics.
pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Precision context carried by values (`()` for machine floats).
    type Context: Copy + Debug;

    fn context(&self) -> Self::Context;
    fn from_big(v: &BigInt, ctx: Self::Context) -> Self;
    fn from_decimal(s: &str, ctx: Self::Context) -> Option<Self>;
    fn euler_gamma(ctx: Self::Context) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// Scientific notation with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn from_int<T: Integral>(v: &T, ctx: Self::Context) -> Self {
        Self::from_big(&v.to_big(), ctx)
    }

    fn powr(&self, e: &Self) -> Self {
        (e.clone() * self.ln()).exp()
    }
}

impl Real for f64 {
    type Context = ();

    fn context(&self) {}
    fn from_big(v: &BigInt, _: ()) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
    fn from_decimal(s: &str, _: ()) -> Option<Self> {
        s.trim().parse().ok()
    }
    fn euler_gamma(_: ()) -> Self {
        0.577_215_664_901_532_9
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1), self)
    }
}

/// MPFR float with round-to-nearest arithmetic.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Mp(pub Float);

impl Mp {
    pub fn with_bits(v: f64, bits: u32) -> Self {
        Mp(Float::with_val(bits, v))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    /// Number of leading decimal digits on which `self` and `other` agree,
    /// measured by their relative difference.
    pub fn agreeing_digits(&self, other: &Mp) -> f64 {
        let bits = self.prec().max(other.prec());
        if self.0 == other.0 {
            return f64::from(bits) * std::f64::consts::LOG10_2;
        }
        let diff = Float::with_val(bits, &self.0 - &other.0).abs();
        let scale = Float::with_val(bits, self.0.abs_ref());
        let rel = Float::with_val(bits, diff / scale);
        -rel.log10().to_f64()
    }
}

impl Add for Mp {
    type Output = Mp;
    fn add(self, rhs: Mp) -> Mp {
        Mp(self.0 + rhs.0)
    }
}

impl Sub for Mp {
    type Output = Mp;
    fn sub(self, rhs: Mp) -> Mp {
        Mp(self.0 - rhs.0)
    }
}

impl Mul for Mp {
    type Output = Mp;
    fn mul(self, rhs: Mp) -> Mp {
        Mp(self.0 * rhs.0)
    }
}

impl Div for Mp {
    type Output = Mp;
    fn div(self, rhs: Mp) -> Mp {
        Mp(self.0 / rhs.0)
    }
}

impl Neg for Mp {
    type Output = Mp;
    fn neg(self) -> Mp {
        Mp(-self.0)
    }
}

impl Real for Mp {
    type Context = u32;

    fn context(&self) -> u32 {
        self.prec()
    }
    fn from_big(v: &BigInt, bits: u32) -> Self {
        Mp(Float::with_val(bits, big_to_rug(v)))
    }
    fn from_decimal(s: &str, bits: u32) -> Option<Self> {
        Float::parse(s.trim())
            .ok()
            .map(|p| Mp(Float::with_val(bits, p)))
    }
    fn euler_gamma(bits: u32) -> Self {
        Mp(Float::with_val(bits, Constant::Euler))
    }
    fn ln(&self) -> Self {
        Mp(self.0.clone().ln())
    }
    fn exp(&self) -> Self {
        Mp(self.0.clone().exp())
    }
    fn sqrt(&self) -> Self {
        Mp(self.0.clone().sqrt())
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn to_decimal(&self, digits: usize) -> String {
        if !self.0.is_normal() {
            return self.0.to_string();
        }
        // digits d₁d₂… with value 0.d₁d₂… × 10^exp
        let (negative, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits.max(1)));
        let exp = exp.unwrap_or(0) - 1;
        let sign = if negative { "-" } else { "" };
        let (head, tail) = mantissa.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }
}

pub(crate) fn big_to_rug(v: &BigInt) -> rug::Integer {
    rug::Integer::from_str_radix(&v.to_str_radix(16), 16).expect("hex digits round-trip")
}

/// Closed real interval with outward-rounded MPFR endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Float,
    pub hi: Float,
}

impl Interval {
    pub fn exact_int(v: &BigInt, bits: u32) -> Self {
        let v = big_to_rug(v);
        Interval {
            lo: Float::with_val_round(bits, &v, Round::Down).0,
            hi: Float::with_val_round(bits, &v, Round::Up).0,
        }
    }

    pub fn euler_gamma(bits: u32) -> Self {
        Interval {
            lo: Float::with_val_round(bits, Constant::Euler, Round::Down).0,
            hi: Float::with_val_round(bits, Constant::Euler, Round::Up).0,
        }
    }

    /// Monotone increasing map applied endpoint-wise with outward rounding.
    fn map_increasing(&self, f: impl Fn(&mut Float, Round)) -> Self {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        f(&mut lo, Round::Down);
        f(&mut hi, Round::Up);
        Interval { lo, hi }
    }

    pub fn ln(&self) -> Self {
        self.map_increasing(|x, r| {
            x.ln_round(r);
        })
    }

    pub fn exp(&self) -> Self {
        self.map_increasing(|x, r| {
            x.exp_round(r);
        })
    }

    /// Product of two intervals whose endpoints are all positive.
    pub fn mul_positive(&self, rhs: &Interval) -> Self {
        debug_assert!(self.lo.is_sign_positive() && rhs.lo.is_sign_positive());
        let bits = self.lo.prec().max(rhs.lo.prec());
        Interval {
            lo: Float::with_val_round(bits, &self.lo * &rhs.lo, Round::Down).0,
            hi: Float::with_val_round(bits, &self.hi * &rhs.hi, Round::Up).0,
        }
    }

    /// Quotient of two intervals whose endpoints are all positive.
    pub fn div_positive(&self, rhs: &Interval) -> Self {
        let bits = self.lo.prec().max(rhs.lo.prec());
        Interval {
            lo: Float::with_val_round(bits, &self.lo / &rhs.hi, Round::Down).0,
            hi: Float::with_val_round(bits, &self.hi / &rhs.lo, Round::Up).0,
        }
    }

    /// Where `v` sits relative to the interval: `Some(Less)` when strictly
    /// below, `Some(Greater)` when strictly above, `None` when inside.
    pub fn locate(&self, v: &Float) -> Option<Ordering> {
        if *v < self.lo {
            Some(Ordering::Less)
        } else if *v > self.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}
