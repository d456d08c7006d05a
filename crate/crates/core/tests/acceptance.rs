//! Acceptance run: one line per criterion with its wall time and budget.
//! Exits non-zero when any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sumcubes::abc::{hunt_high_quality, prime_family, AbcReport};
use sumcubes::arith::robin_scan;
use sumcubes::cubes::{
    brute_cube_search, euler_identity_holds, height_residue, lemma1_rule, rep_count, rep_enumerate,
    symmetric_profile, theorem5_cases, theorem5_residue_table, verify_giant, CubeTriple,
    Parametrization, RepQuery, GIANT_TRIPLE, LEMMA1_TABLE,
};
use sumcubes::records::record_scan;
use sumcubes::ProductSumInstance;

type Check = Result<String, String>;

/// Representations enumerated along the way, keyed by `n`; their symmetric
/// profiles are audited at the end.
#[derive(Default)]
struct Seen(BTreeMap<i64, Vec<CubeTriple<i64>>>);

impl Seen {
    fn add(&mut self, n: i64, sols: impl IntoIterator<Item = CubeTriple<i64>>) {
        self.0.entry(n).or_default().extend(sols);
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1(seen: &mut Seen) -> Check {
    let q = RepQuery::new(3_i64, 3);
    let count = rep_count(&q).map_err(|e| e.to_string())?.count_or_zero();
    ensure(count == 4, || format!("count {count}"))?;
    let sols = rep_enumerate(&q).map_err(|e| e.to_string())?;
    let got: Vec<(i64, i64, i64)> = sols.iter().map(|s| (s.x, s.y, s.z)).collect();
    let want = vec![(-5, 4, 4), (1, 1, 1), (4, -5, 4), (4, 4, -5)];
    ensure(got == want, || format!("enumerate {got:?}"))?;
    seen.add(3, sols);
    Ok("count 4; (1,1,1) and the permutations of (4,4,−5)".into())
}

fn c2() -> Check {
    ensure(verify_giant(), || "identity fails".into())?;
    let [x, y, z] = GIANT_TRIPLE.map(|s| s.parse::<BigInt>().unwrap());
    let sum = &x * &x * &x + &y * &y * &y + &z * &z * &z;
    ensure(sum == BigInt::from(3), || format!("cube sum {sum}"))?;
    Ok(format!("{x}³ + ({y})³ + ({z})³ = 3"))
}

fn c3() -> Check {
    let ns: Vec<i64> = (-1000..=1000)
        .filter(|n: &i64| matches!(n.rem_euclid(9), 4 | 5))
        .collect();
    let bad: Vec<String> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let mut bad = Vec::new();
            for t in -60..=60 {
                match rep_count(&RepQuery::new(n, t)) {
                    Ok(c) if c.count_or_zero() == 0 && !c.is_infinite() => {}
                    other => bad.push(format!("n={n} t={t}: {other:?}")),
                }
            }
            match brute_cube_search(&n, 50) {
                Ok(v) if v.is_empty() => {}
                other => bad.push(format!("n={n}: search {other:?}")),
            }
            bad
        })
        .collect();
    ensure(bad.is_empty(), || bad[..bad.len().min(5)].join("; "))?;
    Ok(format!(
        "{} values of n × 121 heights all zero; cube search over |coords| ≤ 50 empty",
        ns.len()
    ))
}

type PerN = Result<(i64, u64, Vec<CubeTriple<i64>>), String>;

fn c4(seen: &mut Seen) -> Check {
    let per_n: Vec<PerN> = (-200_i64..=200)
        .into_par_iter()
        .map(|n| {
            // every coordinate at height t satisfies |x| ≤ |N₁| + |t|
            let bound = (-10_i64..=10).map(|t| (n - t * t * t).abs() / 3 + t.abs()).max().unwrap();
            let found = brute_cube_search(&n, bound as u64).map_err(|e| e.to_string())?;
            let mut compared = 0;
            let mut sols = Vec::new();
            for t in -10_i64..=10 {
                if t * t * t == n {
                    continue;
                }
                let mut by_search: Vec<CubeTriple<i64>> =
                    found.iter().filter(|c| c.x + c.y + c.z == t).cloned().collect();
                by_search.sort();
                let q = RepQuery::new(n, t);
                let (formula, delta, brute) = match q.instance().map_err(|e| e.to_string())? {
                    Some(inst) => (
                        inst.count_formula().map_err(|e| e.to_string())?,
                        inst.count_delta_form().map_err(|e| e.to_string())?,
                        inst.brute_force_count().map_err(|e| e.to_string())?,
                    ),
                    None => (0, 0, 0),
                };
                let listed = rep_enumerate(&q).map_err(|e| e.to_string())?;
                let searched = by_search.len() as u64;
                if !(formula == delta && delta == brute && brute == searched && listed == by_search) {
                    return Err(format!(
                        "n={n} t={t}: formula {formula}, delta {delta}, divisors {brute}, search {searched}"
                    ));
                }
                compared += 1;
                sols.extend(listed);
            }
            Ok((n, compared, sols))
        })
        .collect();
    let mut pairs = 0;
    let mut total = 0;
    for r in per_n {
        let (n, compared, sols) = r?;
        pairs += compared;
        total += sols.len();
        seen.add(n, sols);
    }
    Ok(format!(
        "{pairs} (n, t) pairs, {total} representations, four routes identical"
    ))
}

const RECORDS: [(u64, u64); 5] = [
    (90, 12),
    (720, 18),
    (19_440, 24),
    (55_440, 30),
    (443_520, 36),
];

fn c5(seen: &mut Seen) -> Check {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let entries = pool
        .install(|| record_scan(500_000))
        .map_err(|e| e.to_string())?;
    for (n, count) in RECORDS {
        let first = entries
            .iter()
            .find(|e| e.count == count)
            .map(|e| (e.n, e.is_new_max));
        ensure(first == Some((n, true)), || {
            format!("count {count}: first at {first:?}, expected {n}")
        })?;
    }
    for (n, _) in RECORDS {
        let n = n as i64;
        let sols = rep_enumerate(&RepQuery::new(n, 0)).map_err(|e| e.to_string())?;
        seen.add(n, sols);
    }
    let maxima: Vec<String> = entries
        .iter()
        .filter(|e| e.is_new_max)
        .map(|e| format!("({},{})", e.n, e.count))
        .collect();
    Ok(format!("single thread; new maxima {}", maxima.join(" ")))
}

fn c6() -> Check {
    let scan = robin_scan(5040, 1_000_000).map_err(|e| e.to_string())?;
    ensure(scan.violations.is_empty(), || {
        format!("violations {:?}", scan.violations)
    })?;
    ensure(scan.out_of_claim == [(5040, 19_344)], || {
        format!("out of claim {:?}", scan.out_of_claim)
    })?;
    Ok(format!(
        "{} values checked; only 5040 (σ₁ = 19344) fails, outside the claimed range",
        scan.checked
    ))
}

fn c7() -> Check {
    let fam = prime_family(100).map_err(|e| e.to_string())?;
    ensure(fam.len() == 100, || format!("{} entries", fam.len()))?;
    for e in &fam {
        ensure(e.witness_holds() && e.count >= 1, || {
            format!("ν={}: {:?}", e.nu, e)
        })?;
        let inst = ProductSumInstance::new(BigInt::from(-e.n), BigInt::from(-1))
            .map_err(|e| e.to_string())?;
        let sols = inst.enumerate().map_err(|e| e.to_string())?;
        let w = &e.witness;
        let listed = sols.iter().any(|s| {
            s.a == BigInt::from(w.a) && s.b == BigInt::from(w.b) && s.c == BigInt::from(w.c)
        });
        ensure(listed, || format!("ν={}: witness {w} not enumerated", e.nu))?;
    }
    let last = &fam[99];
    Ok(format!(
        "ν = 1..100 verified; ν=100: p={}, p₁={}, n={}, count {}",
        last.p, last.p1, last.n, last.count
    ))
}

fn c8() -> Check {
    ensure(LEMMA1_TABLE.len() == 28, || {
        format!("{} rows", LEMMA1_TABLE.len())
    })?;
    for n in -100_000_i64..=100_000 {
        ensure(lemma1_rule(&n) == height_residue(&n), || format!("n={n}"))?;
    }
    let checked: Result<Vec<usize>, String> = (-3000_i64..=3000)
        .into_par_iter()
        .map(|n| {
            let sols = brute_cube_search(&n, 30).map_err(|e| e.to_string())?;
            for s in &sols {
                let t = (s.x + s.y + s.z).rem_euclid(6) as u8;
                ensure(lemma1_rule(&n) == Some(t), || format!("{s} for n={n}"))?;
            }
            Ok(sols.len())
        })
        .collect();
    let total: usize = checked?.iter().sum();
    Ok(format!(
        "table = closed form on |n| ≤ 10⁵; {total} searched solutions with |n| ≤ 3000 obey it"
    ))
}

fn c9() -> Check {
    let mut shown = Vec::new();
    for case in theorem5_cases() {
        for form in [Parametrization::Odd, Parametrization::Even] {
            let got = theorem5_residue_table(case.t_cubed_mod18, case.six_t_mod18, form);
            ensure(got == case.claimed, || {
                format!("n ≡ {}: {got:?}", case.n_mod18)
            })?;
        }
        shown.push(format!("{:?}", case.claimed));
    }
    ensure(shown[..3] == ["{10, 16}", "{1, 7}", "{11, 17}"], || {
        format!("{shown:?}")
    })?;
    Ok(format!("residue sets {}", shown.join(" ")))
}

fn c10(seen: &Seen) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100_000 {
        let [x, y, z] =
            [(); 3].map(|_| i128::from(rng.gen_range(-1_000_000_000_i64..=1_000_000_000)));
        ensure(euler_identity_holds(&x, &y, &z).unwrap(), || {
            format!("({x}, {y}, {z})")
        })?;
    }
    let mut audited = 0;
    for (n, sols) in &seen.0 {
        for s in sols {
            let p = symmetric_profile(&s.x, &s.y, &s.z, n).map_err(|e| e.to_string())?;
            let bad = p.violations(n).map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("{s} for n={n}: {bad:?}"))?;
            audited += 1;
        }
    }
    ensure(audited > 0, || "no solutions collected".into())?;
    Ok(format!(
        "10⁵ random triples; {audited} profiles from criteria 1–5"
    ))
}

fn c11() -> Check {
    let (x_max, top) = (2000, 2000);
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let a = one
        .install(|| hunt_high_quality(x_max, top))
        .map_err(|e| e.to_string())?;
    let b = hunt_high_quality(x_max, top).map_err(|e| e.to_string())?;
    ensure(a == b, || {
        "reports differ between 1 thread and the default pool".into()
    })?;
    ensure(a.reports.len() == top, || {
        format!("{} reports", a.reports.len())
    })?;
    let worst = a
        .reports
        .par_iter()
        .map(|r| r.round_trip_digits().unwrap_or(0.0))
        .reduce(|| f64::INFINITY, f64::min);
    ensure(worst >= 25.0, || {
        format!("round trip only {worst:.1} digits")
    })?;
    let (rank, hit): (usize, &AbcReport<i64>) = a
        .reports
        .iter()
        .enumerate()
        .find(|(_, r)| (r.triple.x, r.triple.y) == (1, 80))
        .ok_or("(1, 80, 81) missing")?;
    let q = hit.q.0.to_f64();
    let want = 81f64.ln() / 30f64.ln();
    ensure((q - want).abs() < 1e-10 * want, || format!("q = {q}"))?;
    Ok(format!(
        "top {top} of x ≤ y ≤ {x_max}, identical on 1 thread and the pool; round trip ≥ {worst:.0} digits; \
         (1,80,81) rank {}, q = {}",
        rank + 1,
        hit.q.0.to_string_radix(10, Some(12))
    ))
}

fn main() -> ExitCode {
    let mut seen = Seen::default();
    let mut failed = 0;
    let mut run = |id: u32, budget: Duration, f: &mut dyn FnMut(&mut Seen) -> Check| {
        let start = Instant::now();
        let result = f(&mut seen);
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {} ({:.2} s of {} s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs()
        );
    };
    run(1, Duration::from_secs(1), &mut c1);
    run(2, Duration::from_secs(1), &mut |_| c2());
    run(3, Duration::from_secs(60), &mut |_| c3());
    run(4, Duration::from_secs(120), &mut c4);
    run(5, Duration::from_secs(600), &mut c5);
    run(6, Duration::from_secs(300), &mut |_| c6());
    run(7, Duration::from_secs(10), &mut |_| c7());
    run(8, Duration::from_secs(60), &mut |_| c8());
    run(9, Duration::from_secs(1), &mut |_| c9());
    run(10, Duration::from_secs(60), &mut |s| c10(s));
    run(11, Duration::from_secs(120), &mut |_| c11());
    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
