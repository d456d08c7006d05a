use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use sumcubes::abc::{hunt_high_quality, prime_family, reduced_count};
use sumcubes::arith::robin_scan;
use sumcubes::cubes::{band_count, rep_count, rep_enumerate, Outcome, RepQuery};
use sumcubes::records::{record_jumps, record_scan, sigma_ratio, zero_height_count, RATIO_DIGITS};
use sumcubes::verify::{run_suite, Suite};
use sumcubes::{Error, Mp, Real, WORKING_BITS};

/// Significant digits printed for real-valued fields.
const REAL_DIGITS: usize = 30;

#[derive(Parser)]
#[command(
    name = "cubes",
    version,
    about = "Sums of three cubes with prescribed height"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of representations of n at height t
    Count(Query),
    /// Representations of n at height t
    Enumerate(Query),
    /// Representations of n over heights −j..=j
    Band {
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        json: bool,
    },
    /// Height-zero count R(0, n)
    Zero {
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// New maxima of R(0, n) up to a limit
    Records {
        #[arg(long)]
        limit: u64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Solutions of xy(x − y − 1) = n
    Reduced {
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// The prime family p·p₁·(1 + p + p₁)
    Family {
        #[arg(long)]
        nu: u64,
    },
    /// High-quality abc triples ranked by implied C
    Abc {
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        top: usize,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Robin's inequality over a range
    Robin {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// σ₁(n) / (e^γ n log log n)
    SigmaRatio {
        #[arg(long)]
        n: BigInt,
    },
    /// Run a self-check suite
    Verify {
        #[arg(long, value_parser = ["euler", "oracle", "mod9", "lemma1", "theorem5", "records", "family"])]
        suite: String,
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Args)]
struct Query {
    #[arg(long, allow_hyphen_values = true)]
    n: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    t: BigInt,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Domain(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.cmd, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            let _ = out.flush();
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = out.flush();
            eprintln!("{msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn envelope(cmd: &str, input: Value, result: Value) -> String {
    json!({"cmd": cmd, "input": input, "result": result}).to_string()
}

fn real(v: &Mp) -> Value {
    Value::String(v.to_decimal(REAL_DIGITS))
}

fn run(cmd: Cmd, out: &mut Out) -> Result<(), Failure> {
    match cmd {
        Cmd::Count(q) => {
            let outcome = rep_count(&RepQuery::new(q.n.clone(), q.t.clone()))?;
            let (count, status) = match outcome {
                Outcome::InfiniteFamily => return Err(Error::InfiniteFamily.into()),
                Outcome::Finite(c) => (c, "finite".to_string()),
                Outcome::Empty(r) => (0, format!("empty:{r}")),
            };
            if q.json {
                let input = json!({"n": q.n.to_string(), "t": q.t.to_string()});
                let result = json!({"count": count.to_string(), "outcome": status});
                writeln!(out, "{}", envelope("count", input, result))?;
            } else {
                writeln!(out, "{count}")?;
            }
        }
        Cmd::Enumerate(q) => {
            let sols = rep_enumerate(&RepQuery::new(q.n.clone(), q.t.clone()))?;
            if q.json {
                let input = json!({"n": q.n.to_string(), "t": q.t.to_string()});
                let list: Vec<Value> = sols
                    .iter()
                    .map(|s| json!([s.x.to_string(), s.y.to_string(), s.z.to_string()]))
                    .collect();
                let result = json!({"count": sols.len().to_string(), "solutions": list});
                writeln!(out, "{}", envelope("enumerate", input, result))?;
            } else {
                for s in sols {
                    writeln!(out, "{} {} {}", s.x, s.y, s.z)?;
                }
            }
        }
        Cmd::Band { n, j, json } => {
            let band = band_count(&n, j)?;
            if !band.infinite_heights.is_empty() {
                let hs: Vec<String> = band
                    .infinite_heights
                    .iter()
                    .map(|t| t.to_string())
                    .collect();
                eprintln!("infinite family at height {} (not counted)", hs.join(", "));
            }
            if json {
                let input = json!({"n": n.to_string(), "j": j.to_string()});
                let heights: Vec<String> = band
                    .infinite_heights
                    .iter()
                    .map(|t| t.to_string())
                    .collect();
                let result = json!({"count": band.count.to_string(), "infinite_heights": heights});
                writeln!(out, "{}", envelope("band", input, result))?;
            } else {
                writeln!(out, "{}", band.count)?;
            }
        }
        Cmd::Zero { n } => writeln!(out, "{}", zero_height_count(&n)?)?,
        Cmd::Records {
            limit,
            csv: _,
            json,
            threads,
        } => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(k) = threads {
                pool = pool.num_threads(k);
            }
            let pool = pool.build().map_err(|e| Failure::Domain(e.to_string()))?;
            let entries = pool.install(|| record_scan(limit))?;
            if json {
                let input = json!({"limit": limit.to_string()});
                for e in &entries {
                    let result = json!({
                        "n": e.n.to_string(),
                        "count": e.count.to_string(),
                        "is_new_max": e.is_new_max,
                    });
                    writeln!(out, "{}", envelope("records", input.clone(), result))?;
                }
            } else {
                writeln!(out, "n,count,is_new_max")?;
                for e in &entries {
                    writeln!(out, "{},{},{}", e.n, e.count, e.is_new_max)?;
                }
            }
            for j in record_jumps(&entries).iter().filter(|j| !j.is_six()) {
                eprintln!(
                    "record at n={} (count {}) jumps by {}, not 6",
                    j.n, j.count, j.jump
                );
            }
        }
        Cmd::Reduced { n } => writeln!(out, "{}", reduced_count(&n)?)?,
        Cmd::Family { nu } => {
            writeln!(out, "nu,p,p1,n,a,b,c,count")?;
            for e in prime_family(nu)? {
                if !e.witness_holds() {
                    return Err(Failure::Mismatch(format!("witness fails at ν={}", e.nu)));
                }
                let w = &e.witness;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    e.nu, e.p, e.p1, e.n, w.a, w.b, w.c, e.count
                )?;
            }
        }
        Cmd::Abc {
            xmax,
            top,
            epsilon,
            json,
        } => abc(out, xmax, top, epsilon, json)?,
        Cmd::Robin { from, to } => {
            let scan = robin_scan(from, to)?;
            writeln!(out, "n,sigma1,in_claim")?;
            let mut all: Vec<(u64, u64, bool)> = scan
                .out_of_claim
                .iter()
                .map(|&(n, s)| (n, s, false))
                .chain(scan.violations.iter().map(|&(n, s)| (n, s, true)))
                .collect();
            all.sort();
            for (n, s, claimed) in all {
                writeln!(out, "{n},{s},{claimed}")?;
            }
            eprintln!(
                "checked {}, violations above 5040: {}, at or below 5040: {}",
                scan.checked,
                scan.violations.len(),
                scan.out_of_claim.len()
            );
        }
        Cmd::SigmaRatio { n } => {
            let r = sigma_ratio(&n)?;
            writeln!(out, "n={}", r.n)?;
            writeln!(out, "sigma1={}", r.sigma1)?;
            writeln!(out, "ratio={}", r.ratio_decimal)?;
            writeln!(out, "digits={RATIO_DIGITS}")?;
            writeln!(out, "in_S={}", r.in_s)?;
        }
        Cmd::Verify { suite, fast } => {
            let suite: Suite = suite.parse()?;
            let rep = run_suite(suite, fast)?;
            writeln!(out, "{suite}: {} checks, {} failed", rep.checks, rep.failed)?;
            for f in &rep.failures {
                eprintln!("{f}");
            }
            if !rep.passed() {
                return Err(Failure::Mismatch(format!(
                    "{suite}: {} mismatches",
                    rep.failed
                )));
            }
        }
    }
    Ok(())
}

fn abc(
    out: &mut Out,
    xmax: u64,
    top: usize,
    epsilon: Option<String>,
    json: bool,
) -> Result<(), Failure> {
    let eps = match &epsilon {
        None => None,
        Some(s) => match Mp::from_decimal(s, WORKING_BITS) {
            Some(e) if e.is_finite() && e > Mp::from_int(&0_i64, WORKING_BITS) => Some(e),
            _ => {
                return Err(Failure::Domain(format!(
                    "epsilon must be a positive decimal, got {s:?}"
                )))
            }
        },
    };
    let hunt = hunt_high_quality(xmax, top)?;
    let mut input = Map::new();
    input.insert("xmax".into(), xmax.to_string().into());
    input.insert("top".into(), top.to_string().into());
    if let Some(s) = &epsilon {
        input.insert("epsilon".into(), s.clone().into());
    }
    let input = Value::Object(input);
    if !json {
        writeln!(out, "x,y,z,n,rad,q,implied_C")?;
    }
    for r in &hunt.reports {
        let t = &r.triple;
        if json {
            let result = json!({
                "x": t.x.to_string(),
                "y": t.y.to_string(),
                "z": t.z.to_string(),
                "n": t.n.to_string(),
                "rad": t.k.to_string(),
                "q": real(&r.q),
                "implied_C": real(&r.implied_c),
            });
            writeln!(out, "{}", envelope("abc", input.clone(), result))?;
        } else {
            let (q, c) = (
                r.q.to_decimal(REAL_DIGITS),
                r.implied_c.to_decimal(REAL_DIGITS),
            );
            writeln!(out, "{},{},{},{},{},{q},{c}", t.x, t.y, t.z, t.n, t.k)?;
        }
    }
    let Some(eps) = eps else { return Ok(()) };
    if !json {
        writeln!(out, "n,nu,sum_z,mean_z,rad,implied_K")?;
    }
    for row in &hunt.mean_z {
        let k = row.implied_k(&eps);
        if json {
            let result = json!({
                "n": row.n.to_string(),
                "nu": row.nu.to_string(),
                "sum_z": row.sum_z.to_string(),
                "mean_z": real(&row.mean_z),
                "rad": row.rad.to_string(),
                "implied_K": real(&k),
            });
            writeln!(out, "{}", envelope("abc-mean-z", input.clone(), result))?;
        } else {
            let (m, k) = (
                row.mean_z.to_decimal(REAL_DIGITS),
                k.to_decimal(REAL_DIGITS),
            );
            writeln!(
                out,
                "{},{},{},{m},{},{k}",
                row.n, row.nu, row.sum_z, row.rad
            )?;
        }
    }
    Ok(())
}
