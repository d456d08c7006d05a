//! Self-check suites: each re-derives a family of results through an
//! independent route and reports every disagreement.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abc::{prime_family, reduced_count, reduced_count_square_indicator};
use crate::cubes::{
    brute_cube_search, euler_identity_holds, height_residue, lemma1_rule, rep_count, rep_enumerate,
    symmetric_profile, theorem5_cases, theorem5_residue_table, Outcome, Parametrization, RepQuery,
    LEMMA1_TABLE,
};
use crate::error::{Error, Result};
use crate::product_sum::ProductSumInstance;
use crate::records::{corollary1_check, record_scan, zero_height_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Euler,
    Oracle,
    Mod9,
    Lemma1,
    Theorem5,
    Records,
    Family,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Euler,
        Suite::Oracle,
        Suite::Mod9,
        Suite::Lemma1,
        Suite::Theorem5,
        Suite::Records,
        Suite::Family,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::Oracle => "oracle",
            Suite::Mod9 => "mod9",
            Suite::Lemma1 => "lemma1",
            Suite::Theorem5 => "theorem5",
            Suite::Records => "records",
            Suite::Family => "family",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Failures past this many are counted but not described.
const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.checks += other.checks;
        self.failed += other.failed;
        let room = MAX_LISTED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

/// Runs one suite; `fast` shrinks every range.
pub fn run_suite(suite: Suite, fast: bool) -> Result<VerifyReport> {
    match suite {
        Suite::Euler => euler(fast),
        Suite::Oracle => oracle(fast),
        Suite::Mod9 => mod9(fast),
        Suite::Lemma1 => lemma1(fast),
        Suite::Theorem5 => theorem5(),
        Suite::Records => records(fast),
        Suite::Family => family(fast),
    }
}

fn euler(fast: bool) -> Result<VerifyReport> {
    let mut rep = VerifyReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let samples = if fast { 1_000 } else { 100_000 };
    for _ in 0..samples {
        let [x, y, z] =
            [(); 3].map(|_| i128::from(rng.gen_range(-1_000_000_000_i64..=1_000_000_000)));
        rep.check(euler_identity_holds(&x, &y, &z)?, || {
            format!("identity fails at ({x}, {y}, {z})")
        });
    }
    for (n, t) in [(3_i64, 3_i64), (3, -5), (29, 5), (90, 0), (720, 0), (6, 0)] {
        for s in rep_enumerate(&RepQuery::new(n, t))? {
            let bad = symmetric_profile(&s.x, &s.y, &s.z, &n)?.violations(&n)?;
            rep.check(bad.is_empty(), || {
                format!("profile of {s} for n={n}: {bad:?}")
            });
        }
    }
    Ok(rep)
}

fn oracle(fast: bool) -> Result<VerifyReport> {
    let (t_max, n_max) = if fast { (3_i64, 50_i64) } else { (10, 200) };
    let reports = (-n_max..=n_max)
        .into_par_iter()
        .map(|n| oracle_for(n, t_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(reports
        .into_iter()
        .fold(VerifyReport::default(), VerifyReport::merge))
}

/// Formula, delta form, divisor brute force and a height-filtered cube
/// search for every height `|t| ≤ t_max` of one `n`.
pub fn oracle_for(n: i64, t_max: i64) -> Result<VerifyReport> {
    let mut rep = VerifyReport::default();
    // |x − t| ≤ |N₁| bounds every coordinate at height t
    let bound = (-t_max..=t_max)
        .map(|t| (n - t * t * t).abs() / 3 + t.abs())
        .max()
        .unwrap_or(0);
    let found = brute_cube_search(&n, bound as u64)?;
    for t in -t_max..=t_max {
        if t * t * t == n {
            continue;
        }
        let by_search = found.iter().filter(|c| c.x + c.y + c.z == t).count() as u64;
        let count = rep_count(&RepQuery::new(n, t))?.count_or_zero();
        rep.check(count == by_search, || {
            format!("n={n} t={t}: count {count}, cube search {by_search}")
        });
        let Some(inst) = RepQuery::new(n, t).instance()? else {
            continue;
        };
        let formula = inst.count_formula()?;
        let delta = inst.count_delta_form()?;
        let brute = inst.brute_force_count()?;
        rep.check(formula == delta && delta == brute && brute == by_search, || {
            format!("n={n} t={t}: formula {formula}, delta {delta}, divisors {brute}, search {by_search}")
        });
    }
    Ok(rep)
}

fn mod9(fast: bool) -> Result<VerifyReport> {
    let (n_max, t_max, bound) = if fast {
        (200_i64, 20_i64, 20_u64)
    } else {
        (1000, 60, 50)
    };
    let ns: Vec<i64> = (-n_max..=n_max)
        .filter(|n| matches!(n.rem_euclid(9), 4 | 5))
        .collect();
    let reports = ns
        .into_par_iter()
        .map(|n| -> Result<VerifyReport> {
            let mut rep = VerifyReport::default();
            for t in -t_max..=t_max {
                let c = rep_count(&RepQuery::new(n, t))?;
                rep.check(c.count_or_zero() == 0 && !c.is_infinite(), || {
                    format!("n={n} t={t}: {c:?}")
                });
            }
            let found = brute_cube_search(&n, bound)?;
            rep.check(found.is_empty(), || {
                format!("n={n}: cube search found {}", found[0])
            });
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reports
        .into_iter()
        .fold(VerifyReport::default(), VerifyReport::merge))
}

fn lemma1(fast: bool) -> Result<VerifyReport> {
    let (n_max, bound) = if fast { (200_i64, 15_u64) } else { (1000, 30) };
    let mut rep = VerifyReport::default();
    rep.check(LEMMA1_TABLE.len() == 28, || {
        format!("{} rows", LEMMA1_TABLE.len())
    });
    for n in -5 * n_max..=5 * n_max {
        let (table, closed) = (lemma1_rule(&n), height_residue(&n));
        rep.check(table == closed, || {
            format!("n={n}: table {table:?}, closed form {closed:?}")
        });
    }
    let reports = (-n_max..=n_max)
        .into_par_iter()
        .map(|n| -> Result<VerifyReport> {
            let mut rep = VerifyReport::default();
            for s in brute_cube_search(&n, bound)? {
                let t = (s.x + s.y + s.z).rem_euclid(6);
                let rule = lemma1_rule(&n);
                rep.check(rule == Some(t as u8), || {
                    format!("{s} for n={n}: rule {rule:?}")
                });
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reports.into_iter().fold(rep, VerifyReport::merge))
}

fn theorem5() -> Result<VerifyReport> {
    let mut rep = VerifyReport::default();
    for case in theorem5_cases() {
        for form in [Parametrization::Odd, Parametrization::Even] {
            let got = theorem5_residue_table(case.t_cubed_mod18, case.six_t_mod18, form);
            rep.check(got == case.claimed && !got.contains(&case.n_mod18), || {
                format!("n ≡ {} (mod 18), {form:?}: {got:?}", case.n_mod18)
            });
        }
    }
    Ok(rep)
}

/// First attainments of the record counts, as listed in the literature.
pub const KNOWN_RECORDS: [(u64, u64); 5] = [
    (90, 12),
    (720, 18),
    (19_440, 24),
    (55_440, 30),
    (443_520, 36),
];

fn records(fast: bool) -> Result<VerifyReport> {
    let limit = if fast { 100_000 } else { 500_000 };
    let mut rep = VerifyReport::default();
    let entries = record_scan(limit)?;
    for (n, count) in KNOWN_RECORDS.into_iter().filter(|&(n, _)| n <= limit) {
        let first = entries
            .iter()
            .find(|e| e.count == count)
            .map(|e| (e.n, e.is_new_max));
        rep.check(first == Some((n, true)), || {
            format!("count {count}: expected first at {n}, got {first:?}")
        });
    }
    let corollary_max = if fast { 2_000 } else { 10_000 };
    for n in (6..=corollary_max).step_by(6) {
        let n = n as i64;
        let (lhs, rhs) = (corollary1_check(&n)?, zero_height_count(&n)? > 0);
        rep.check(lhs == rhs, || {
            format!("n={n}: divisor criterion {lhs}, count {rhs}")
        });
    }
    for n in 1..=corollary_max as i64 {
        let listed = entries
            .iter()
            .find(|e| e.n == n as u64)
            .map_or(0, |e| e.count);
        let direct = match rep_count(&RepQuery::new(n, 0))? {
            Outcome::Finite(c) => c,
            _ => 0,
        };
        rep.check(listed == direct, || {
            format!("n={n}: scan {listed}, rep_count {direct}")
        });
    }
    Ok(rep)
}

fn family(fast: bool) -> Result<VerifyReport> {
    let (nu_max, n_max) = if fast { (20, 100_i64) } else { (100, 500) };
    let mut rep = VerifyReport::default();
    for e in prime_family(nu_max)? {
        rep.check(e.witness_holds() && e.count >= 1, || {
            format!(
                "ν={}: n={}, witness {}, count {}",
                e.nu, e.n, e.witness, e.count
            )
        });
    }
    for n in (-n_max..=n_max).filter(|&n| n != 0) {
        let formula = reduced_count(&n)?;
        let indicator = reduced_count_square_indicator(&n)?;
        let brute = ProductSumInstance::new(-n, -1)?.brute_force_count()?;
        rep.check(formula == indicator && indicator == brute, || {
            format!("n={n}: formula {formula}, indicator {indicator}, divisors {brute}")
        });
    }
    Ok(rep)
}
