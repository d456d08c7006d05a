//! Divisor enumeration and multiplicative functions.

use super::factor::{factor, Factorization};
use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

/// Above this magnitude divisor scans stream instead of materializing.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000_000_000;

impl<T: Integral> Factorization<T> {
    /// Positive divisors of `|value|`, ascending.
    pub fn divisors(&self) -> Vec<T> {
        let mut out: Vec<T> = self.divisor_iter().collect();
        out.sort();
        out
    }

    /// Positive divisors of `|value|` in mixed-radix order, without
    /// materializing the list.
    pub fn divisor_iter(&self) -> DivisorIter<'_, T> {
        DivisorIter {
            factors: self.factors(),
            exps: vec![0; self.factors().len()],
            powers: vec![T::one(); self.factors().len()],
            done: false,
        }
    }

    /// Whether divisor scans should materialize a sorted list.
    pub fn is_small(&self) -> bool {
        self.abs_value()
            .ok()
            .and_then(|v| v.to_u64())
            .is_some_and(|v| v <= MATERIALIZE_LIMIT)
    }

    /// Number of positive divisors.
    pub fn tau(&self) -> T {
        self.factors().iter().fold(T::one(), |acc, (_, e)| {
            acc * ops::lit::<T>(i64::from(*e) + 1)
        })
    }

    /// Sum of the `nu`-th powers of the positive divisors.
    pub fn sigma(&self, nu: u32) -> Result<T> {
        let mut acc = T::one();
        for (p, e) in self.factors() {
            let pn = (0..nu).try_fold(T::one(), |a, _| ops::mul(&a, p))?;
            let mut term = T::one();
            let mut sum = T::one();
            for _ in 0..*e {
                term = ops::mul(&term, &pn)?;
                sum = ops::add(&sum, &term)?;
            }
            acc = ops::mul(&acc, &sum)?;
        }
        Ok(acc)
    }

    /// Product of the distinct primes.
    pub fn rad(&self) -> T {
        self.factors()
            .iter()
            .fold(T::one(), |acc, (p, _)| acc * p.clone())
    }

    /// `Σ_{d | |value|} τ(d)`, the multiplicative closed form
    /// `Π (e+1)(e+2)/2`.
    pub fn tau_sum(&self) -> Result<T> {
        self.factors().iter().try_fold(T::one(), |acc, (_, e)| {
            let e = i64::from(*e);
            ops::mul(&acc, &ops::lit((e + 1) * (e + 2) / 2))
        })
    }
}

/// Streaming positive-divisor iterator.
pub struct DivisorIter<'a, T> {
    factors: &'a [(T, u32)],
    exps: Vec<u32>,
    powers: Vec<T>,
    done: bool,
}

impl<T: Integral> Iterator for DivisorIter<'_, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        if self.done {
            return None;
        }
        let current = self.powers.iter().fold(T::one(), |acc, p| acc * p.clone());
        let mut i = 0;
        loop {
            if i == self.factors.len() {
                self.done = true;
                break;
            }
            if self.exps[i] < self.factors[i].1 {
                self.exps[i] += 1;
                self.powers[i] = self.powers[i].clone() * self.factors[i].0.clone();
                break;
            }
            self.exps[i] = 0;
            self.powers[i] = T::one();
            i += 1;
        }
        Some(current)
    }
}

/// Visits every signed divisor of the factored value: for each positive
/// divisor `d` (ascending when the value is small), `d` then `-d`.
pub fn for_each_signed_divisor<T: Integral>(
    f: &Factorization<T>,
    mut visit: impl FnMut(T) -> Result<()>,
) -> Result<()> {
    let mut step = |d: T| -> Result<()> {
        let neg = ops::neg(&d)?;
        visit(d)?;
        visit(neg)
    };
    if f.is_small() {
        f.divisors().into_iter().try_for_each(&mut step)
    } else {
        f.divisor_iter().try_for_each(&mut step)
    }
}

/// Signed divisors of a factored value, ascending by `|d|`, positive first.
pub fn signed_divisors<T: Integral>(f: &Factorization<T>) -> Vec<T> {
    let divs = f.divisors();
    let mut out = Vec::with_capacity(2 * divs.len());
    for d in divs {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

pub fn tau<T: Integral>(n: &T) -> Result<T> {
    Ok(factor(n)?.tau())
}

pub fn sigma<T: Integral>(n: &T, nu: u32) -> Result<T> {
    factor(n)?.sigma(nu)
}

pub fn rad<T: Integral>(n: &T) -> Result<T> {
    Ok(factor(n)?.rad())
}

/// Number of ordered integer triples `(A, B, C)` with `ABC = N`,
/// `4·Σ_{d | |N|} τ(d)`.
pub fn total_product_triples<T: Integral>(n: &T) -> Result<T> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    ops::mul(&ops::lit(4), &factor(n)?.tau_sum()?)
}

/// `Some(k)` with `k² = m` when `m` is a nonnegative perfect square.
pub fn exact_square_root<T: Integral>(m: &T) -> Option<T> {
    if m.is_negative() {
        return None;
    }
    let r = m.sqrt();
    (r.clone() * r.clone() == *m).then_some(r)
}

/// Square indicator on the nonnegative integers.
pub fn is_square<T: Integral>(m: &T) -> bool {
    exact_square_root(m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn brute_divisors(n: i64) -> Vec<i64> {
        let n = n.abs();
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(factor(&12_i64).unwrap().divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factor(&8_i64).unwrap().divisors(), vec![1, 2, 4, 8]);
        assert_eq!(factor(&1_i64).unwrap().divisors(), vec![1]);
        assert_eq!(
            factor(&-12_i64).unwrap().divisors(),
            vec![1, 2, 3, 4, 6, 12]
        );
    }

    #[test]
    fn function_examples() {
        assert_eq!(tau(&12_i64).unwrap(), 6);
        // independent: sum the divisor list of 90
        let by_list: i64 = brute_divisors(90).iter().sum();
        assert_eq!(by_list, 234);
        assert_eq!(sigma(&90_i64, 1).unwrap(), 234);
        assert_eq!(rad(&72_i64).unwrap(), 6);
        assert_eq!(sigma(&5040_i64, 1).unwrap(), 19344);
        assert_eq!(sigma(&5041_i64, 1).unwrap(), 5113);
        assert_eq!(sigma(&12_i64, 0).unwrap(), 6);
        assert_eq!(sigma(&12_i64, 2).unwrap(), 1 + 4 + 9 + 16 + 36 + 144);
    }

    #[test]
    fn sigma_overflow_is_reported() {
        let n = 9_007_199_254_740_880_i64;
        assert_eq!(sigma(&n, 3), Err(Error::Overflow));
        assert!(sigma(&BigInt::from(n), 3).is_ok());
    }

    fn brute_triples(n: i64) -> i64 {
        let divs = brute_divisors(n);
        let mut count = 0;
        for &a0 in &divs {
            for a in [a0, -a0] {
                for &b0 in &divs {
                    for b in [b0, -b0] {
                        if n % (a * b) == 0 {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn total_product_triples_matches_brute_force() {
        assert_eq!(total_product_triples(&1_i64).unwrap(), 4);
        assert_eq!(total_product_triples(&2_i64).unwrap(), 12);
        assert_eq!(total_product_triples(&8_i64).unwrap(), 40);
        assert_eq!(total_product_triples(&0_i64), Err(Error::ZeroInput));
        for n in (-200..=200).filter(|&n| n != 0) {
            assert_eq!(
                total_product_triples(&n).unwrap(),
                brute_triples(n),
                "N={n}"
            );
        }
    }

    #[test]
    fn square_root_examples() {
        assert_eq!(exact_square_root(&81_i64), Some(9));
        assert_eq!(exact_square_root(&0_i64), Some(0));
        assert_eq!(exact_square_root(&-4_i64), None);
        let big = BigInt::from(10).pow(41);
        assert!(exact_square_root(&big).is_none());
        let sq = BigInt::from(10).pow(40);
        assert_eq!(exact_square_root(&sq), Some(BigInt::from(10).pow(20)));
    }

    #[test]
    fn square_root_sweep() {
        for k in 0..=100_000_i64 {
            assert_eq!(exact_square_root(&(k * k)), Some(k));
            if k >= 2 {
                assert_eq!(exact_square_root(&(k * k + 1)), None);
                assert_eq!(exact_square_root(&(k * k - 1)), None);
            }
        }
    }

    #[test]
    fn streaming_and_materialized_agree_on_large_input() {
        let n: i64 = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41;
        let f = factor(&n).unwrap();
        assert!(!f.is_small());
        let mut streamed: Vec<i64> = f.divisor_iter().collect();
        streamed.sort();
        assert_eq!(streamed, f.divisors());
        assert_eq!(streamed.len() as i64, f.tau());
        let mut seen = Vec::new();
        for_each_signed_divisor(&f, |d| {
            seen.push(d);
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len(), 2 * streamed.len());
    }

    #[test]
    fn signed_divisor_order() {
        let f = factor(&-6_i64).unwrap();
        assert_eq!(signed_divisors(&f), vec![1, -1, 2, -2, 3, -3, 6, -6]);
    }

    fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
        (1_i64..=1_000_000, 1_i64..=1_000_000)
            .prop_filter("coprime", |(a, b)| num_integer::Integer::gcd(a, b) == 1)
    }

    proptest! {
        #[test]
        fn divisor_list_shape(n in 1_i64..2_000_000) {
            let f = factor(&n).unwrap();
            let d = f.divisors();
            prop_assert_eq!(d.len() as i64, f.tau());
            prop_assert_eq!(d[0] * d[d.len() - 1], n);
            prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(d.iter().all(|x| n % x == 0));
        }

        #[test]
        fn factorization_reconstructs(n in any::<i64>().prop_filter("nonzero", |n| *n != 0)) {
            let f = factor(&n).unwrap();
            prop_assert_eq!(f.value().unwrap(), n);
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(f.primes().all(is_prime));
        }

        #[test]
        fn multiplicative_functions((a, b) in coprime_pair()) {
            let ab = a * b;
            prop_assert_eq!(tau(&ab).unwrap(), tau(&a).unwrap() * tau(&b).unwrap());
            prop_assert_eq!(rad(&ab).unwrap(), rad(&a).unwrap() * rad(&b).unwrap());
            for nu in 0..3 {
                let s = sigma(&(ab as i128), nu).unwrap();
                prop_assert_eq!(s, sigma(&(a as i128), nu).unwrap() * sigma(&(b as i128), nu).unwrap());
            }
        }
    }
}
