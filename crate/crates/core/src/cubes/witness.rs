//! Parametric witnesses.
//!
//! A representation exists at height `t` exactly when some integers `u, v`
//! satisfy one of
//!
//! * odd form:  `N₁ = (2u + 1 − 2t)(u² + u − v² − v)`
//! * even form: `N₁ = (2u − 2t)(u² − v²)`
//!
//! (write the discriminant condition as `4d = y² − k²` with `y = N₁/d + 2t`
//! and split on the parity of `y`).

use std::ops::RangeInclusive;

use super::RepQuery;
use crate::arith::exact_square_root;
use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessForm {
    Odd,
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness<T> {
    pub u: T,
    pub v: T,
    pub form: WitnessForm,
}

/// Range bound `|u|, |v| ≤ |N₁| + |t| + 2` that makes the witness search
/// complete.
pub fn witness_bound<T: Integral>(q: &RepQuery<T>) -> Result<Option<T>> {
    let Some(n1) = q.reduced_product()? else {
        return Ok(None);
    };
    let b = ops::add(&ops::add(&ops::abs(&n1)?, &ops::abs(&q.t)?)?, &ops::lit(2))?;
    Ok(Some(b))
}

fn require_n1<T: Integral>(q: &RepQuery<T>) -> Result<T> {
    match q.reduced_product()? {
        Some(n1) if !n1.is_zero() => Ok(n1),
        Some(_) => Err(Error::InfiniteFamily),
        None => Err(Error::Domain(format!(
            "3 does not divide n − t³ for n={}, t={}",
            q.n, q.t
        ))),
    }
}

/// All `(u, v)` in the ranges satisfying either form, sorted.
///
/// For each `u` the linear factor must divide `N₁`; the cofactor then fixes
/// `v² + v` (odd form) or `v²` (even form), which is solved exactly. Linear
/// in the length of `u_range`.
pub fn parametric_witness<T: Integral>(
    q: &RepQuery<T>,
    u_range: RangeInclusive<T>,
    v_range: RangeInclusive<T>,
) -> Result<Vec<Witness<T>>> {
    let n1 = require_n1(q)?;
    let one = T::one();
    let two = ops::lit::<T>(2);
    let four = ops::lit::<T>(4);
    let two_t = ops::mul(&two, &q.t)?;
    let mut out = Vec::new();
    let mut u = u_range.start().clone();
    while u <= *u_range.end() {
        let uu = ops::square(&u)?;
        // odd: (2u + 1 − 2t)·D = N₁ with D = u² + u − (v² + v)
        let lin = ops::sub(&ops::add(&ops::mul(&two, &u)?, &one)?, &two_t)?;
        if !lin.is_zero() && n1.is_multiple_of(&lin) {
            let d = ops::div(&n1, &lin)?;
            let w = ops::sub(&ops::add(&uu, &u)?, &d)?; // v² + v
                                                        // v = (−1 ± √(1 + 4w))/2
            if let Some(r) = exact_square_root(&ops::add(&one, &ops::mul(&four, &w)?)?) {
                for num in [ops::sub(&r, &one)?, ops::sub(&ops::neg(&r)?, &one)?] {
                    if num.is_even() {
                        push_v(&mut out, &u, num / two.clone(), WitnessForm::Odd, &v_range);
                    }
                }
            }
        }
        // even: (2u − 2t)·D = N₁ with D = u² − v²
        let lin = ops::sub(&ops::mul(&two, &u)?, &two_t)?;
        if !lin.is_zero() && n1.is_multiple_of(&lin) {
            let d = ops::div(&n1, &lin)?;
            if let Some(r) = exact_square_root(&ops::sub(&uu, &d)?) {
                push_v(&mut out, &u, r.clone(), WitnessForm::Even, &v_range);
                push_v(&mut out, &u, ops::neg(&r)?, WitnessForm::Even, &v_range);
            }
        }
        u = ops::add(&u, &one)?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn push_v<T: Integral>(
    out: &mut Vec<Witness<T>>,
    u: &T,
    v: T,
    form: WitnessForm,
    v_range: &RangeInclusive<T>,
) {
    if v_range.contains(&v) {
        out.push(Witness {
            u: u.clone(),
            v,
            form,
        });
    }
}

/// Direct double loop over the ranges; reference for
/// [`parametric_witness`].
pub fn parametric_witness_naive<T: Integral>(
    q: &RepQuery<T>,
    u_range: RangeInclusive<T>,
    v_range: RangeInclusive<T>,
) -> Result<Vec<Witness<T>>> {
    let n1 = require_n1(q)?;
    let one = T::one();
    let two = ops::lit::<T>(2);
    let two_t = ops::mul(&two, &q.t)?;
    let mut out = Vec::new();
    let mut u = u_range.start().clone();
    while u <= *u_range.end() {
        let mut v = v_range.start().clone();
        while v <= *v_range.end() {
            let uu = ops::square(&u)?;
            let vv = ops::square(&v)?;
            let d_odd = ops::sub(&ops::add(&uu, &u)?, &ops::add(&vv, &v)?)?;
            let odd = ops::sub(
                &ops::mul(&ops::add(&ops::mul(&two, &u)?, &one)?, &d_odd)?,
                &ops::mul(&two_t, &d_odd)?,
            )?;
            if odd == n1 {
                out.push(Witness {
                    u: u.clone(),
                    v: v.clone(),
                    form: WitnessForm::Odd,
                });
            }
            let d_even = ops::sub(&uu, &vv)?;
            let even = ops::sub(
                &ops::mul(&ops::mul(&two, &u)?, &d_even)?,
                &ops::mul(&two_t, &d_even)?,
            )?;
            if even == n1 {
                out.push(Witness {
                    u: u.clone(),
                    v: v.clone(),
                    form: WitnessForm::Even,
                });
            }
            v = ops::add(&v, &one)?;
        }
        u = ops::add(&u, &one)?;
    }
    out.sort();
    Ok(out)
}
