//! The reduced equation `xy(x − y − 1) = n`, positive triples `x + y = z`
//! with `xyz = n`, and abc-quality diagnostics.
//!
//! Quality is `q = log z / log k` with `k = rad(xyz)`. The refined bound
//!
//! ```text
//! z < k·exp[4·√(3 log k / log log k)·(1 + log log log k / (2 log log k) + C / log log k)]
//! ```
//!
//! is evaluated by [`rst_bound`]; [`implied_c`] inverts it for a given triple.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith::{exact_square_root, factor, for_each_signed_divisor, is_square, primes_below};
use crate::error::{Error, Result};
use crate::product_sum::{ProductSumInstance, ProductSumTriple};
use crate::records::zero_height_count;
use crate::scalar::{ops, Integral, Mp, Real, WORKING_BITS};

/// Largest `ν` accepted by [`prime_family`].
pub const MAX_FAMILY_INDEX: u64 = 10_000;
/// Largest `x_max` accepted by [`hunt_high_quality`].
pub const MAX_HUNT_X: u64 = 100_000;
/// Smallest radical for which `log log log k` is defined.
pub const MIN_RADICAL: i64 = 16;
/// Largest span accepted by [`theorem8_bound_report`].
pub const MAX_REPORT_SPAN: u64 = 10_000_000;

/// `xyz = −n` with `x + y + z = −1`.
fn reduced_instance<T: Integral>(n: &T) -> Result<ProductSumInstance<T>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    ProductSumInstance::new(ops::neg(n)?, ops::lit(-1))
}

/// Number of integer `(x, y)` with `xy(x − y − 1) = n`.
pub fn reduced_count<T: Integral>(n: &T) -> Result<u64> {
    reduced_instance(n)?.count_formula()
}

/// The same count written as a square indicator over the divisors of `n`:
/// `−#{0 < d | n : (n/d − 1)² = 4d} + 2·Σ_{±d | n} [(n/d − 1)² − 4d is a square]`.
pub fn reduced_count_square_indicator<T: Integral>(n: &T) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let four = ops::lit::<T>(4);
    let mut doubled: u64 = 0;
    let mut tangent: u64 = 0;
    for_each_signed_divisor(&factor(n)?, |d| {
        let w = ops::sub(&ops::div(n, &d)?, &T::one())?;
        let disc = ops::sub(&ops::square(&w)?, &ops::mul(&four, &d)?)?;
        if is_square(&disc) {
            doubled += 2;
            if disc.is_zero() && d.is_positive() {
                tangent += 1;
            }
        }
        Ok(())
    })?;
    Ok(doubled - tangent)
}

/// Every `(x, y)` with `xy(x − y − 1) = n`, sorted.
pub fn reduced_solutions<T: Integral>(n: &T) -> Result<Vec<(T, T)>> {
    let mut out = reduced_instance(n)?
        .enumerate()?
        .into_iter()
        .map(|p| Ok((ops::neg(&p.a)?, p.b)))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFamilyEntry {
    pub nu: u64,
    pub p: u64,
    pub p1: u64,
    /// `p·p₁·(1 + p + p₁)`
    pub n: i64,
    /// `(p, p₁, −(1 + p + p₁))`: product `−n`, sum `−1`.
    pub witness: ProductSumTriple<i64>,
    pub count: u64,
}

impl PrimeFamilyEntry {
    /// `δ₀ + d₀/δ₀ − n/d₀ = −1` with `d₀ = p·p₁`, `δ₀ = p`, together with
    /// the product and sum of the witness.
    pub fn witness_holds(&self) -> bool {
        let (p, p1) = (self.p as i64, self.p1 as i64);
        let d0 = p * p1;
        let divisor_form = self.n % d0 == 0 && p + d0 / p - self.n / d0 == -1;
        divisor_form && self.witness.product() == Ok(-self.n) && self.witness.sum() == Ok(-1)
    }
}

/// `n_ν = p_ν·p_{ν+1}·(1 + p_ν + p_{ν+1})` for `ν = 1..=nu_max`.
pub fn prime_family(nu_max: u64) -> Result<Vec<PrimeFamilyEntry>> {
    if nu_max > MAX_FAMILY_INDEX {
        return Err(Error::LimitTooLarge(nu_max));
    }
    let need = nu_max as usize + 1;
    let mut limit = 64;
    let primes = loop {
        let ps = primes_below(limit);
        if ps.len() >= need {
            break ps;
        }
        limit *= 2;
    };
    (1..=nu_max)
        .into_par_iter()
        .map(|nu| {
            let p = u64::from(primes[nu as usize - 1]);
            let p1 = u64::from(primes[nu as usize]);
            let s = 1 + p + p1;
            let n = (p * p1 * s) as i64;
            let witness = ProductSumTriple::new(p as i64, p1 as i64, -(s as i64));
            Ok(PrimeFamilyEntry {
                nu,
                p,
                p1,
                n,
                witness,
                // the discriminants exceed i64 long before n does
                count: reduced_count(&i128::from(n))?,
            })
        })
        .collect()
}

/// Positive `x + y = z` with `n = xyz` and `k = rad(n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbcTriple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub n: T,
    pub k: T,
}

impl<T: Integral> AbcTriple<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if !x.is_positive() || !y.is_positive() {
            return Err(Error::Domain(format!(
                "abc triple needs x, y > 0, got ({x}, {y})"
            )));
        }
        let z = ops::add(&x, &y)?;
        let n = ops::mul(&ops::mul(&x, &y)?, &z)?;
        let k = factor(&n)?.rad();
        Ok(AbcTriple { x, y, z, n, k })
    }

    /// `log z / log k`; infinite when `k = 1`.
    pub fn quality<R: Real>(&self, ctx: R::Context) -> R {
        R::from_int(&self.z, ctx).ln() / R::from_int(&self.k, ctx).ln()
    }
}

/// All ordered positive `(x, y, x + y)` with product `n`, sorted by `x`.
pub fn positive_solutions<T: Integral>(n: &T) -> Result<Vec<AbcTriple<T>>> {
    if !n.is_positive() {
        return Err(Error::Domain(format!(
            "positive solutions need n > 0, got {n}"
        )));
    }
    let f = factor(n)?;
    let k = f.rad();
    let two = ops::lit::<T>(2);
    let four = ops::lit::<T>(4);
    let mut out = Vec::new();
    for x in f.divisors() {
        // n = xy(x + y) > x², and the divisors ascend
        let xx = match ops::square(&x) {
            Ok(xx) if xx < *n => xx,
            _ => break,
        };
        // y² + xy − n/x = 0
        let m = ops::div(n, &x)?;
        let disc = ops::add(&xx, &ops::mul(&four, &m)?)?;
        let Some(r) = exact_square_root(&disc) else {
            continue;
        };
        let num = ops::sub(&r, &x)?;
        if num.is_positive() && num.is_even() {
            let y = num / two.clone();
            let z = ops::add(&x, &y)?;
            out.push(AbcTriple {
                x: x.clone(),
                y,
                z,
                n: n.clone(),
                k: k.clone(),
            });
        }
    }
    Ok(out)
}

/// `k·exp[4·√(3L/LL)·(1 + LLL/(2·LL) + C/LL)]` with `L = log k`,
/// `LL = log L`, `LLL = log LL`, at the precision of `c`.
pub fn rst_bound<R: Real, T: Integral>(k: &T, c: &R) -> Result<R> {
    let (l, ll, lll) = logs::<R, T>(k, c.context())?;
    let one = R::from_int(&1_i64, c.context());
    let two = R::from_int(&2_i64, c.context());
    let inner = one + lll / (two * ll.clone()) + c.clone() / ll.clone();
    let kf = R::from_int(k, c.context());
    Ok(kf * (amplitude(&l, &ll) * inner).exp())
}

/// The `C` for which [`rst_bound`] at `k = rad(xyz)` equals `z`.
pub fn implied_c<R: Real, T: Integral>(triple: &AbcTriple<T>, ctx: R::Context) -> Result<R> {
    let (l, ll, lll) = logs::<R, T>(&triple.k, ctx)?;
    let one = R::from_int(&1_i64, ctx);
    let two = R::from_int(&2_i64, ctx);
    let z = R::from_int(&triple.z, ctx);
    let k = R::from_int(&triple.k, ctx);
    let scaled = (z / k).ln() / amplitude(&l, &ll);
    Ok(ll.clone() * (scaled - one - lll / (two * ll)))
}

fn logs<R: Real, T: Integral>(k: &T, ctx: R::Context) -> Result<(R, R, R)> {
    if *k < ops::lit(MIN_RADICAL) {
        return Err(Error::Domain(format!(
            "refined abc bound needs k ≥ 16, got {k}"
        )));
    }
    let l = R::from_int(k, ctx).ln();
    let ll = l.ln();
    let lll = ll.ln();
    Ok((l, ll, lll))
}

/// `4·√(3L/LL)`
fn amplitude<R: Real>(l: &R, ll: &R) -> R {
    let ctx = l.context();
    let three = R::from_int(&3_i64, ctx);
    let four = R::from_int(&4_i64, ctx);
    four * (three * l.clone() / ll.clone()).sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbcReport<T> {
    pub triple: AbcTriple<T>,
    pub q: Mp,
    pub implied_c: Mp,
}

impl<T: Integral> AbcReport<T> {
    pub fn new(triple: AbcTriple<T>, bits: u32) -> Result<Self> {
        let implied_c = implied_c(&triple, bits)?;
        let q = triple.quality(bits);
        Ok(AbcReport {
            triple,
            q,
            implied_c,
        })
    }

    /// Decimal digits on which `rst_bound(k, implied_C)` and `z` agree.
    pub fn round_trip_digits(&self) -> Result<f64> {
        let back: Mp = rst_bound(&self.triple.k, &self.implied_c)?;
        let z = Mp::from_int(&self.triple.z, self.implied_c.prec());
        Ok(back.agreeing_digits(&z))
    }
}

/// `(1/ν)·Σ z` over the ordered positive solutions of `n`, with `rad(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanZRow<T> {
    pub n: T,
    pub nu: u64,
    pub sum_z: T,
    pub rad: T,
    pub mean_z: Mp,
}

impl<T: Integral> MeanZRow<T> {
    /// `mean_z / rad^{1+ε}`: the smallest constant for which the mean-z
    /// bound holds at this `n`.
    pub fn implied_k(&self, eps: &Mp) -> Mp {
        let bits = eps.prec();
        let one = Mp::from_int(&1_i64, bits);
        let rad = Mp::from_int(&self.rad, bits);
        self.mean_z.clone() / rad.powr(&(one + eps.clone()))
    }
}

/// Mean-z row for `n`, or `None` when `n` has no positive solution.
pub fn mean_z<T: Integral>(n: &T) -> Result<Option<MeanZRow<T>>> {
    let sols = positive_solutions(n)?;
    let Some(first) = sols.first() else {
        return Ok(None);
    };
    let mut sum_z = T::zero();
    for s in &sols {
        sum_z = ops::add(&sum_z, &s.z)?;
    }
    let nu = sols.len() as u64;
    let mean = Mp::from_int(&sum_z, WORKING_BITS) / Mp::from_int(&(nu as i64), WORKING_BITS);
    Ok(Some(MeanZRow {
        n: n.clone(),
        nu,
        rad: first.k.clone(),
        sum_z,
        mean_z: mean,
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct HuntReport {
    /// Sorted by implied `C` descending, then `q` descending, then `(x, y)`.
    pub reports: Vec<AbcReport<i64>>,
    /// One row per distinct reported `n` with at least two ordered
    /// solutions, ascending in `n`.
    pub mean_z: Vec<MeanZRow<i64>>,
}

/// Slack, in units of `C`, kept around the cut-off when pruning on the
/// `f64` key. Far above the error of the `f64` evaluation.
const PREFILTER_MARGIN: f64 = 1e-6;

/// Scans `1 ≤ x ≤ y ≤ x_max` and reports the `top` triples with the largest
/// implied `C`. Triples with `rad(xyz) < 16` are skipped: the bound is
/// undefined there.
///
/// The grid is ranked with `f64` keys and pruned with a margin; survivors
/// are recomputed at [`WORKING_BITS`] and sorted exactly, so the output
/// does not depend on the thread count.
pub fn hunt_high_quality(x_max: u64, top: usize) -> Result<HuntReport> {
    if x_max > MAX_HUNT_X {
        return Err(Error::LimitTooLarge(x_max));
    }
    if top == 0 || x_max == 0 {
        return Ok(HuntReport {
            reports: Vec::new(),
            mean_z: Vec::new(),
        });
    }
    let spf = smallest_prime_factors(2 * x_max as usize);
    let candidates = (1..=x_max)
        .into_par_iter()
        .fold(Vec::new, |mut acc: Vec<(f64, u64, u64)>, x| {
            for y in x..=x_max {
                let k = radical_of(&spf, &[x, y, x + y]);
                if k < MIN_RADICAL as u64 {
                    continue;
                }
                acc.push((implied_c_f64(x + y, k), x, y));
                if acc.len() >= top.saturating_mul(4).saturating_add(64) {
                    prune(&mut acc, top);
                }
            }
            acc
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            prune(&mut a, top);
            a
        });
    let mut reports = candidates
        .into_par_iter()
        .map(|(_, x, y)| {
            let (x, y, z) = (x as i64, y as i64, (x + y) as i64);
            let k = radical_of(&spf, &[x as u64, y as u64, z as u64]) as i64;
            AbcReport::new(
                AbcTriple {
                    x,
                    y,
                    z,
                    n: x * y * z,
                    k,
                },
                WORKING_BITS,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| {
        b.implied_c
            .partial_cmp(&a.implied_c)
            .unwrap()
            .then_with(|| b.q.partial_cmp(&a.q).unwrap())
            .then_with(|| (a.triple.x, a.triple.y).cmp(&(b.triple.x, b.triple.y)))
    });
    reports.truncate(top);
    let distinct: BTreeSet<i64> = reports.iter().map(|r| r.triple.n).collect();
    let rows = distinct
        .into_par_iter()
        .map(|n| mean_z(&n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .filter(|row| row.nu >= 2)
        .collect();
    Ok(HuntReport {
        reports,
        mean_z: rows,
    })
}

fn prune(acc: &mut Vec<(f64, u64, u64)>, top: usize) {
    if acc.len() <= top {
        return;
    }
    acc.sort_by(|a, b| b.0.total_cmp(&a.0));
    let cut = acc[top - 1].0 - PREFILTER_MARGIN;
    acc.retain(|c| c.0 >= cut);
}

fn implied_c_f64(z: u64, k: u64) -> f64 {
    let (z, k) = (z as f64, k as f64);
    let l = k.ln();
    let ll = l.ln();
    let lll = ll.ln();
    ll * ((z / k).ln() / (4.0 * (3.0 * l / ll).sqrt()) - 1.0 - lll / (2.0 * ll))
}

fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            for j in (i..=limit).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    spf
}

fn radical_of(spf: &[u32], parts: &[u64]) -> u64 {
    let mut primes: Vec<u32> = Vec::with_capacity(16);
    for &v in parts {
        let mut m = v as usize;
        while m > 1 {
            let p = spf[m];
            primes.push(p);
            while m.is_multiple_of(p as usize) {
                m /= p as usize;
            }
        }
    }
    primes.sort_unstable();
    primes.dedup();
    primes.iter().map(|&p| u64::from(p)).product()
}

/// One row of the height-zero size report.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub n: u64,
    /// Largest `|x| + |y| + |z|` over the height-zero representations of `n`.
    pub max_l1: u64,
    pub rad: u64,
    /// `rad(n)^{1+ε}`
    pub rad_power: Mp,
    /// `max_l1 / rad(n)^{1+ε}`
    pub implied_k: Mp,
}

/// For each `n` in the range with height-zero representations, the size of
/// the largest one against `rad(n)^{1+ε}`.
pub fn theorem8_bound_report(from: u64, to: u64, eps: &Mp) -> Result<Vec<BoundRow>> {
    if !eps.is_finite() || *eps <= Mp::from_int(&0_i64, eps.prec()) {
        return Err(Error::Domain("epsilon must be a positive real".into()));
    }
    if to.saturating_sub(from) > MAX_REPORT_SPAN {
        return Err(Error::LimitTooLarge(to - from));
    }
    let from = from.max(1);
    let first = from.div_ceil(6) * 6;
    let bits = eps.prec();
    let one = Mp::from_int(&1_i64, bits);
    let exponent = one + eps.clone();
    let rows = (first..=to)
        .step_by(6)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| -> Result<Option<BoundRow>> {
            let n_i = n as i64;
            if zero_height_count(&n_i)? == 0 {
                return Ok(None);
            }
            let inst = ProductSumInstance::new(n_i / 3, 0)?;
            let mut max_l1 = 0_u64;
            for t in inst.enumerate()? {
                let l1 = t.a.unsigned_abs() + t.b.unsigned_abs() + t.c.unsigned_abs();
                max_l1 = max_l1.max(l1);
            }
            let rad = factor(&n_i)?.rad() as u64;
            let rad_power = Mp::from_int(&(rad as i64), bits).powr(&exponent);
            let implied_k = Mp::from_int(&(max_l1 as i64), bits) / rad_power.clone();
            Ok(Some(BoundRow {
                n,
                max_l1,
                rad,
                rad_power,
                implied_k,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_reduced(n: i64) -> u64 {
        // |x|, |y| are bounded by divisors of n; x − y − 1 too
        let b = n.abs() + 2;
        let mut c = 0;
        for x in -b..=b {
            for y in -b..=b {
                if x != 0 && y != 0 && x * y * (x - y - 1) == n {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn reduced_examples() {
        assert!(reduced_count(&36_i64).unwrap() >= 1);
        assert_eq!(reduced_count(&1_i64).unwrap(), 0);
        assert_eq!(reduced_count(&0_i64), Err(Error::ZeroInput));
        let sols = reduced_solutions(&36_i64).unwrap();
        assert!(sols.contains(&(-2, 3)));
        for (x, y) in sols {
            assert_eq!(x * y * (x - y - 1), 36);
        }
    }

    #[test]
    fn reduced_forms_agree_with_oracle() {
        for n in -500_i64..=500 {
            if n == 0 {
                continue;
            }
            let c = reduced_count(&n).unwrap();
            assert_eq!(reduced_count_square_indicator(&n).unwrap(), c, "n={n}");
            assert_eq!(
                reduced_instance(&n).unwrap().brute_force_count().unwrap(),
                c,
                "n={n}"
            );
            if n.abs() <= 60 {
                assert_eq!(brute_reduced(n), c, "n={n}");
            }
        }
    }

    #[test]
    fn prime_family_examples() {
        let fam = prime_family(3).unwrap();
        type Row = (u64, u64, i64, (i64, i64, i64));
        let got: Vec<Row> = fam
            .iter()
            .map(|e| (e.p, e.p1, e.n, (e.witness.a, e.witness.b, e.witness.c)))
            .collect();
        assert_eq!(
            got,
            vec![
                (2, 3, 36, (2, 3, -6)),
                (3, 5, 135, (3, 5, -9)),
                (5, 7, 455, (5, 7, -13)),
            ]
        );
        assert!(fam.iter().all(|e| e.witness_holds() && e.count >= 1));
        assert_eq!(
            prime_family(MAX_FAMILY_INDEX + 1),
            Err(Error::LimitTooLarge(MAX_FAMILY_INDEX + 1))
        );
    }

    #[test]
    fn prime_family_large_index() {
        let fam = prime_family(2000).unwrap();
        assert_eq!(fam.len(), 2000);
        assert_eq!(fam[999].p, 7919);
        assert!(fam.iter().all(|e| e.witness_holds() && e.count >= 1));
    }

    #[test]
    fn positive_solution_examples() {
        let xy = |n: i64| -> Vec<(i64, i64)> {
            positive_solutions(&n)
                .unwrap()
                .iter()
                .map(|t| (t.x, t.y))
                .collect()
        };
        // every ordered pair: 1·5·6 and 2·3·5 both give 30
        assert_eq!(xy(30), vec![(1, 5), (2, 3), (3, 2), (5, 1)]);
        assert_eq!(
            xy(240),
            vec![(1, 15), (2, 10), (4, 6), (6, 4), (10, 2), (15, 1)]
        );
        assert!(xy(7).is_empty());
        assert!(positive_solutions(&0_i64).is_err());
    }

    #[test]
    fn positive_solutions_match_height_zero_count() {
        for n in 1_i64..=10_000 {
            let sols = positive_solutions(&n).unwrap();
            // each ordered positive (x, y) fixes the negative coordinate
            // −(x + y); its three positions give three zero-sum triples
            assert_eq!(
                3 * sols.len() as u64,
                zero_height_count(&(3 * n)).unwrap(),
                "n={n}"
            );
            if sols.iter().all(|t| t.x != t.y) {
                let unordered = sols.len() / 2;
                assert_eq!(6 * unordered as u64, zero_height_count(&(3 * n)).unwrap());
            }
            // brute force over x ≤ y
            let mut brute = 0;
            let mut x = 1;
            while x * x * 2 <= n {
                let mut y = x;
                while x * y * (x + y) <= n {
                    if x * y * (x + y) == n {
                        brute += if x == y { 1 } else { 2 };
                    }
                    y += 1;
                }
                x += 1;
            }
            assert_eq!(brute, sols.len(), "n={n}");
        }
    }

    #[test]
    fn rst_bound_values() {
        let c0 = Mp::from_int(&0_i64, WORKING_BITS);
        let b: Mp = rst_bound(&100_i64, &c0).unwrap();
        assert!(b.to_decimal(28).starts_with("8.89789422216370157729386304"));
        let b16: Mp = rst_bound(&16_i64, &c0).unwrap();
        assert!(b16.is_finite());
        assert!(b16.to_decimal(15).starts_with("1.63325214128412"));
        let f: f64 = rst_bound(&100_i64, &0.0).unwrap();
        assert!((f / 88_978_942.221_637 - 1.0).abs() < 1e-12);
        assert!(rst_bound(&15_i64, &c0).is_err());
        let mut prev = f64::NEG_INFINITY;
        for c in [-3.0, -1.0, 0.0, 0.5, 2.0] {
            let v: f64 = rst_bound(&1000_i64, &c).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn implied_c_round_trip() {
        let t = AbcTriple::new(1_i64, 80).unwrap();
        assert_eq!((t.z, t.n, t.k), (81, 6480, 30));
        let r = AbcReport::new(t, WORKING_BITS).unwrap();
        assert!(r.round_trip_digits().unwrap() >= 25.0);
        assert!(r.q.to_decimal(21).starts_with("1.29203002988461790071"));
        let small = AbcTriple::new(1_i64, 8).unwrap();
        assert_eq!(small.k, 6);
        assert!(implied_c::<Mp, _>(&small, WORKING_BITS).is_err());
    }

    #[test]
    fn implied_c_of_a_constructed_bound() {
        // z = k·e^{4√(3L/LL)} makes 1 + LLL/(2LL) + C/LL = 1
        let bits = WORKING_BITS;
        let k = 1000_i64;
        let (l, ll, lll): (Mp, Mp, Mp) = logs(&k, bits).unwrap();
        let z = Mp::from_int(&k, bits) * amplitude(&l, &ll).exp();
        let two = Mp::from_int(&2_i64, bits);
        let c = -(lll / two);
        let back: Mp = rst_bound(&k, &c).unwrap();
        assert!(back.agreeing_digits(&z) >= 70.0);
    }

    #[test]
    fn hunt_contains_known_triple() {
        // (1, 80, 81) ranks 53rd by implied C at this size
        let h = hunt_high_quality(100, 60).unwrap();
        let hit = h
            .reports
            .iter()
            .find(|r| (r.triple.x, r.triple.y) == (1, 80))
            .expect("(1, 80, 81) reported");
        assert!((hit.q.to_f64() - 81f64.ln() / 30f64.ln()).abs() < 1e-12);
        for w in h.reports.windows(2) {
            assert!(w[0].implied_c >= w[1].implied_c);
        }
        let small = hunt_high_quality(10, 100).unwrap();
        assert!(small
            .reports
            .iter()
            .all(|r| r.q.is_finite() && r.q.to_f64() > 0.0));
    }

    #[test]
    fn hunt_prefilter_matches_exhaustive_ranking() {
        let x_max = 120;
        let mut all = Vec::new();
        for x in 1..=x_max {
            for y in x..=x_max {
                let t = AbcTriple::new(x, y).unwrap();
                if t.k >= MIN_RADICAL {
                    all.push(AbcReport::new(t, WORKING_BITS).unwrap());
                }
            }
        }
        all.sort_by(|a, b| {
            b.implied_c
                .partial_cmp(&a.implied_c)
                .unwrap()
                .then_with(|| b.q.partial_cmp(&a.q).unwrap())
                .then_with(|| (a.triple.x, a.triple.y).cmp(&(b.triple.x, b.triple.y)))
        });
        all.truncate(25);
        assert_eq!(hunt_high_quality(x_max as u64, 25).unwrap().reports, all);
    }

    #[test]
    fn hunt_is_thread_independent() {
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = one.install(|| hunt_high_quality(300, 20)).unwrap();
        let b = four.install(|| hunt_high_quality(300, 20)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mean_z_of_240() {
        let row = mean_z(&240_i64).unwrap().unwrap();
        assert_eq!((row.nu, row.sum_z, row.rad), (6, 76, 30));
        let expect = Mp::from_int(&76_i64, WORKING_BITS) / Mp::from_int(&6_i64, WORKING_BITS);
        assert_eq!(row.mean_z, expect);
        assert!(mean_z(&7_i64).unwrap().is_none());
    }

    #[test]
    fn bound_report_examples() {
        let eps = Mp::from_int(&1_i64, WORKING_BITS);
        let rows = theorem8_bound_report(90, 90, &eps).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].max_l1, rows[0].rad), (12, 30));
        let expect = Mp::from_int(&12_i64, WORKING_BITS) / Mp::from_int(&900_i64, WORKING_BITS);
        assert!(rows[0].implied_k.agreeing_digits(&expect) > 60.0);
        let half = Mp::from_decimal("0.5", WORKING_BITS).unwrap();
        let rows = theorem8_bound_report(720, 720, &half).unwrap();
        assert_eq!(rows[0].rad, 30);
        assert!(theorem8_bound_report(12, 12, &eps).unwrap().is_empty());
        assert!(theorem8_bound_report(1, 10, &Mp::from_int(&0_i64, 64)).is_err());
    }
}
