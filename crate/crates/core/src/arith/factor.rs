//! Integer factorization.
//!
//! Trial division by the primes below 10⁶, then Brent's variant of Pollard rho
//! on whatever cofactor survives. Primality below 2⁶⁴ is decided by a
//! deterministic Miller–Rabin base set; above 2⁶⁴ a strong Miller–Rabin test
//! over the first 20 prime bases is used.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ops, Integral};

/// Upper bound of the trial-division stage.
pub const TRIAL_LIMIT: u32 = 1_000_000;

const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_BASES_BIG: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Primes below [`TRIAL_LIMIT`], sieved once.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_below(TRIAL_LIMIT))
}

/// Sieve of Eratosthenes.
pub fn primes_below(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Signed integer as a sign and an ordered prime-power list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    negative: bool,
    factors: Vec<(T, u32)>,
}

impl<T: Integral> Factorization<T> {
    /// Builds a factorization from parts, checking every invariant.
    pub fn from_parts(sign: i8, mut factors: Vec<(T, u32)>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Domain(format!("sign must be ±1, got {sign}")));
        }
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Domain(format!("repeated prime {}", w[0].0)));
            }
        }
        for (p, e) in &factors {
            if *e == 0 || !is_prime(p) {
                return Err(Error::Domain(format!("{p}^{e} is not a prime power")));
            }
        }
        let f = Factorization {
            negative: sign < 0,
            factors,
        };
        f.value()?;
        Ok(f)
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &T> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Reconstructs `|value|`.
    pub fn abs_value(&self) -> Result<T> {
        self.factors.iter().try_fold(T::one(), |acc, (p, e)| {
            (0..*e).try_fold(acc, |a, _| ops::mul(&a, p))
        })
    }

    /// Reconstructs the signed value.
    pub fn value(&self) -> Result<T> {
        let a = self.abs_value()?;
        if self.negative {
            ops::neg(&a)
        } else {
            Ok(a)
        }
    }
}

/// Factors a nonzero integer.
pub fn factor<T: Integral>(n: &T) -> Result<Factorization<T>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let negative = n.is_negative();
    let magnitude = n.to_big().abs();
    let mut raw: Vec<(BigInt, u32)> = match magnitude.to_u64() {
        Some(m) => factor_u64(m)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect(),
        None => factor_big(&magnitude),
    };
    raw.sort();
    let factors = raw
        .into_iter()
        .map(|(p, e)| ops::convert::<BigInt, T>(&p).map(|p| (p, e)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Factorization { negative, factors })
}

/// Primality of `|n|`.
pub fn is_prime<T: Integral>(n: &T) -> bool {
    let m = n.to_big().abs();
    match m.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_probable_prime_big(&m),
    }
}

fn push_factor<P: PartialEq>(out: &mut Vec<(P, u32)>, p: P) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    }
}

pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    for &p in small_primes() {
        let p = u64::from(p);
        if p * p > n {
            break;
        }
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n > 1 {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m < u64::from(TRIAL_LIMIT) * u64::from(TRIAL_LIMIT) || is_prime_u64(m) {
                // every prime below the trial limit has been removed, so a
                // cofactor below its square is prime
                push_factor(&mut out, m);
                continue;
            }
            let d = split_u64(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort();
    out
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES_U64 {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES_U64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Nontrivial divisor of an odd composite `n`.
fn split_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1.. {
        if let Some(d) = brent_u64(n, c) {
            return d;
        }
    }
    unreachable!()
}

fn brent_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2_u64, 1_u64, 1_u64);
    let mut g = 1;
    let mut x = y;
    let mut ys = y;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn is_probable_prime_big(n: &BigInt) -> bool {
    let one = BigInt::one();
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for &p in &MR_BASES_BIG {
        let p = BigInt::from(p);
        if (n % &p).is_zero() {
            return *n == p;
        }
    }
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for &a in &MR_BASES_BIG {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn factor_big(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    for &p in small_primes() {
        if let Some(v) = m.to_u64() {
            out.extend(factor_u64(v).into_iter().map(|(p, e)| (BigInt::from(p), e)));
            m = BigInt::one();
            break;
        }
        let pb = BigInt::from(p);
        if (&m % &pb).is_zero() {
            let mut e = 0;
            while (&m % &pb).is_zero() {
                m /= &pb;
                e += 1;
            }
            out.push((pb, e));
        }
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(v) = m.to_u64() {
            for (p, e) in factor_u64(v) {
                for _ in 0..e {
                    push_factor(&mut out, BigInt::from(p));
                }
            }
            continue;
        }
        if is_probable_prime_big(&m) {
            push_factor(&mut out, m);
            continue;
        }
        let d = split_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

fn split_big(n: &BigInt) -> BigInt {
    for c in 1_u64.. {
        if let Some(d) = brent_big(n, &BigInt::from(c)) {
            return d;
        }
    }
    unreachable!()
}

fn brent_big(n: &BigInt, c: &BigInt) -> Option<BigInt> {
    let f = |x: &BigInt| (x * x + c) % n;
    let mut y = BigInt::from(2);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut r: u64 = 1;
    const BATCH: u64 = 128;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 30 {
            return None;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}
