//! Ordered integer triples with prescribed product and sum.
//!
//! Given `N ≠ 0` and `s`, find every `(A, B, C)` with `ABC = N` and
//! `A + B + C = s`. Fixing the signed divisor `d = AB` pins `C = N/d`, and
//! `A, B` are the roots of `X² − (s − N/d)·X + d`, so the pair exists exactly
//! when the discriminant `(s − N/d)² − 4d` is a perfect square.
//!
//! Three counting routes are kept side by side so each can check the others:
//! the square-indicator formula ([`ProductSumInstance::count_formula`]), the
//! divisor-pair form ([`ProductSumInstance::count_delta_form`]) and a plain
//! brute force over divisor pairs ([`ProductSumInstance::brute_force_count`]).

use std::fmt;

use crate::arith::{exact_square_root, factor, for_each_signed_divisor, Factorization};
use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

/// The problem `ABC = product`, `A + B + C = sum`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSumInstance<T> {
    product: T,
    sum: T,
}

/// Quadratic data attached to one signed divisor `d = AB` of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCandidate<T> {
    pub d: T,
    /// `C = N/d`.
    pub third: T,
    /// `A + B = s − N/d`.
    pub pair_sum: T,
    /// `pair_sum² − 4d`.
    pub disc: T,
    /// `√disc` when `disc` is a nonnegative square.
    pub root: Option<T>,
    /// `−pair_sum`; equals `N₁/d + 2t` when `s = −2t`.
    pub l: T,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSumTriple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Integral> ProductSumTriple<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        ProductSumTriple { a, b, c }
    }

    pub fn product(&self) -> Result<T> {
        ops::mul(&ops::mul(&self.a, &self.b)?, &self.c)
    }

    pub fn sum(&self) -> Result<T> {
        ops::add(&ops::add(&self.a, &self.b)?, &self.c)
    }
}

impl<T: fmt::Display> fmt::Display for ProductSumTriple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl<T: Integral> FactorCandidate<T> {
    fn new(product: &T, sum: &T, d: T) -> Result<Self> {
        let third = ops::div(product, &d)?;
        let pair_sum = ops::sub(sum, &third)?;
        let disc = ops::sub(&ops::square(&pair_sum)?, &ops::mul(&ops::lit(4), &d)?)?;
        let root = exact_square_root(&disc);
        let l = ops::neg(&pair_sum)?;
        Ok(FactorCandidate {
            d,
            third,
            pair_sum,
            disc,
            root,
            l,
        })
    }

    /// The ordered triples contributed by this divisor: none, one
    /// (`disc = 0`) or two.
    pub fn triples(&self) -> Result<Vec<ProductSumTriple<T>>> {
        let Some(k) = &self.root else {
            return Ok(Vec::new());
        };
        let two = ops::lit::<T>(2);
        let lo = ops::div(&ops::sub(&self.pair_sum, k)?, &two)?;
        let hi = ops::div(&ops::add(&self.pair_sum, k)?, &two)?;
        let mut out = vec![ProductSumTriple::new(
            lo.clone(),
            hi.clone(),
            self.third.clone(),
        )];
        if !k.is_zero() {
            out.push(ProductSumTriple::new(hi, lo, self.third.clone()));
        }
        Ok(out)
    }
}

/// Comparison of the three-way count with the `3·Σ` bounded `(d, u, v)`
/// expression, which is reported rather than trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedUvDiagnostic {
    pub formula_count: u64,
    pub bounded_uv_value: u64,
}

impl BoundedUvDiagnostic {
    pub fn agrees(&self) -> bool {
        self.formula_count == self.bounded_uv_value
    }
}

impl<T: Integral> ProductSumInstance<T> {
    pub fn new(product: T, sum: T) -> Result<Self> {
        if product.is_zero() {
            return Err(Error::ZeroProduct);
        }
        Ok(ProductSumInstance { product, sum })
    }

    pub fn product(&self) -> &T {
        &self.product
    }

    pub fn sum(&self) -> &T {
        &self.sum
    }

    fn factorization(&self) -> Result<Factorization<T>> {
        factor(&self.product)
    }

    /// One candidate per signed divisor `d` of `N`, ascending by `|d|`,
    /// positive before negative (streamed unsorted above the
    /// materialization limit).
    pub fn candidates(&self) -> Result<Vec<FactorCandidate<T>>> {
        let f = self.factorization()?;
        let mut out = Vec::new();
        for_each_signed_divisor(&f, |d| {
            out.push(FactorCandidate::new(&self.product, &self.sum, d)?);
            Ok(())
        })?;
        Ok(out)
    }

    /// Every ordered solution, sorted lexicographically.
    pub fn enumerate(&self) -> Result<Vec<ProductSumTriple<T>>> {
        let f = self.factorization()?;
        let mut out = Vec::new();
        for_each_signed_divisor(&f, |d| {
            let cand = FactorCandidate::new(&self.product, &self.sum, d)?;
            out.extend(cand.triples()?);
            Ok(())
        })?;
        out.sort();
        Ok(out)
    }

    /// Square-indicator count:
    /// `−#{0 < d | |N| : (s − N/d)² = 4d} + 2·Σ_{d | N, d ≠ 0} S((s − N/d)² − 4d)`
    /// where `S` is the indicator of nonnegative squares.
    pub fn count_formula(&self) -> Result<u64> {
        let f = self.factorization()?;
        let four = ops::lit::<T>(4);
        let mut zero_disc = 0_u64;
        let mut squares = 0_u64;
        for_each_signed_divisor(&f, |d| {
            let pair_sum = ops::sub(&self.sum, &ops::div(&self.product, &d)?)?;
            let four_d = ops::mul(&four, &d)?;
            let sq = ops::square(&pair_sum)?;
            if d.is_positive() && sq == four_d {
                zero_disc += 1;
            }
            if exact_square_root(&ops::sub(&sq, &four_d)?).is_some() {
                squares += 1;
            }
            Ok(())
        })?;
        Ok(2 * squares - zero_disc)
    }

    /// Counts pairs `(d, δ)` with `d | N`, `δ | d` (both signed, nonzero)
    /// and `δ + d/δ + N/d = s`.
    pub fn count_delta_form(&self) -> Result<u64> {
        let f = self.factorization()?;
        let primes: Vec<T> = f.primes().cloned().collect();
        let max_exps: Vec<u32> = f.factors().iter().map(|(_, e)| *e).collect();
        let mut count = 0_u64;
        for d_exps in exponent_vectors(&max_exps) {
            let d_abs = power_product(&primes, &d_exps)?;
            for d in [d_abs.clone(), ops::neg(&d_abs)?] {
                let third = ops::div(&self.product, &d)?;
                for delta_exps in exponent_vectors(&d_exps) {
                    let delta_abs = power_product(&primes, &delta_exps)?;
                    for delta in [delta_abs.clone(), ops::neg(&delta_abs)?] {
                        let cofactor = ops::div(&d, &delta)?;
                        let total = ops::add(&ops::add(&delta, &cofactor)?, &third)?;
                        if total == self.sum {
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok(count)
    }

    /// Oracle: `A` over signed divisors of `N`, `B` over signed divisors of
    /// `N/A`, `C = N/(AB)`, count sum matches. No square roots involved.
    pub fn brute_force_count(&self) -> Result<u64> {
        let divisors = self.factorization()?.divisors();
        let mut count = 0_u64;
        for a_abs in &divisors {
            for a in [a_abs.clone(), ops::neg(a_abs)?] {
                let rest = ops::div(&self.product, &a)?;
                for b_abs in divisors.iter().filter(|b| rest.is_multiple_of(b)) {
                    for b in [b_abs.clone(), ops::neg(b_abs)?] {
                        let c = ops::div(&rest, &b)?;
                        if ops::add(&ops::add(&a, &b)?, &c)? == self.sum {
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok(count)
    }

    /// Evaluates `3·#{(d, u, v) : d | N, 0 < |u| ≤ d, 0 < |v| ≤ d, uv = d,
    /// u + v = N/d − s}` literally, next to [`Self::count_formula`]. The
    /// factor 3 and the bounds do not reproduce the formula in general; this
    /// only reports the two values.
    pub fn bounded_uv_diagnostic(&self) -> Result<BoundedUvDiagnostic> {
        let f = self.factorization()?;
        let divisors = f.divisors();
        let mut hits = 0_u64;
        for d in &divisors {
            let target = ops::sub(&ops::div(&self.product, d)?, &self.sum)?;
            for u_abs in divisors.iter().filter(|u| d.is_multiple_of(u)) {
                for u in [u_abs.clone(), ops::neg(u_abs)?] {
                    let v = ops::div(d, &u)?;
                    if u.abs() <= *d && v.abs() <= *d && ops::add(&u, &v)? == target {
                        hits += 1;
                    }
                }
            }
        }
        Ok(BoundedUvDiagnostic {
            formula_count: self.count_formula()?,
            bounded_uv_value: 3 * hits,
        })
    }
}

/// All exponent vectors `0 ≤ e_i ≤ max_i`.
fn exponent_vectors(max: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(max.len())];
    for &m in max {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=m).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn power_product<T: Integral>(primes: &[T], exps: &[u32]) -> Result<T> {
    primes.iter().zip(exps).try_fold(T::one(), |acc, (p, e)| {
        (0..*e).try_fold(acc, |a, _| ops::mul(&a, p))
    })
}
