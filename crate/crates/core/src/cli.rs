//! `subres` command line: compute, psres, verify and bench.
//!
//! Exit codes: 0 ok, 2 usage or invalid input, 3 outside the supported
//! characteristic range, 4 verification failure.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fastsubres::{
    bernstein_to_monomial, classify, cofactors, sres_bernstein, sres_fast, Basis, CharCase,
};
use crate::field::{Field, FieldDescriptor, FieldValue};
use crate::jacobi::{
    jacobi_hypergeometric, jacobi_rodrigues, sres_via_jacobi, verify_pade_identity, JacobiParams,
};
use crate::poly::{psres_oracle, sres_oracle, ProblemSpec};
use crate::psres::psres_all;
use crate::wire::{write_bench_csv, Algorithm, BenchRow, PsresJson, SubresJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "subres",
    version,
    about = "Subresultants of (x - alpha)^m and (x - beta)^n over Q and Z/pZ"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute Sres_d((x - alpha)^m, (x - beta)^n) as JSON.
    Compute(ComputeArgs),
    /// Compute all principal subresultants as JSON.
    Psres(PsresArgs),
    /// Run the oracle sweeps and report pass/fail counts.
    Verify(VerifyArgs),
    /// Count field operations and time the algorithms, as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// `q` or `fp:<p>`
    #[arg(long)]
    pub field: FieldDescriptor,
    #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
    pub basis: BasisArg,
    /// Also emit the Bezout cofactors.
    #[arg(long)]
    pub cofactors: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Bernstein,
}

#[derive(Args, Debug)]
pub struct PsresArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long)]
    pub field: FieldDescriptor,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_degree: u64,
    #[arg(long, value_delimiter = ',', default_value = "11,13,101")]
    pub primes: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Jacobi,
    Pade,
    Bernstein,
    All,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<u64>,
    #[arg(long, default_value = "fp:10007")]
    pub field: FieldDescriptor,
    #[arg(long, value_delimiter = ',', default_value = "fast")]
    pub algorithms: Vec<Algorithm>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Skip the oracle for n above this.
    #[arg(long, default_value_t = 64)]
    pub oracle_cutoff: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(&a, out),
        Command::Psres(a) => cmd_psres(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedCharacteristic { .. }
        | Error::CharacteristicTooSmall { .. }
        | Error::UnsupportedParameters(_) => EXIT_UNSUPPORTED,
        _ => EXIT_USAGE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

pub fn cmd_compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    let field = Field::new(a.field);
    let spec = ProblemSpec::new(a.m, a.n, a.d, field.parse(&a.alpha)?, field.parse(&a.beta)?)?;
    let result = match a.basis {
        BasisArg::Monomial => sres_fast(&spec, &field)?,
        BasisArg::Bernstein => sres_bernstein(&spec, &field)?,
    };
    let pair = if a.cofactors {
        Some(cofactors(&spec, &field)?)
    } else {
        None
    };
    emit(out, &SubresJson::from_result(&result, pair.as_ref()))?;
    Ok(EXIT_OK)
}

pub fn cmd_psres(a: &PsresArgs, out: &mut dyn Write) -> Result<i32> {
    let field = Field::new(a.field);
    let (alpha, beta) = (field.parse(&a.alpha)?, field.parse(&a.beta)?);
    let values = psres_all(a.m, a.n, &alpha, &beta, &field)?;
    emit(out, &PsresJson::new(a.m, a.n, &alpha, &beta, &values, field.counter()))?;
    Ok(EXIT_OK)
}

/// Outcome of one sweep: the number of cases and the first failure.
#[derive(Default)]
struct Tally {
    passed: u64,
    total: u64,
    first_failure: Option<serde_json::Value>,
}

impl Tally {
    fn record(&mut self, ok: Result<bool>, case: impl FnOnce(Option<String>) -> serde_json::Value) {
        self.total += 1;
        match ok {
            Ok(true) => self.passed += 1,
            Ok(false) => {
                self.first_failure.get_or_insert_with(|| case(None));
            }
            Err(e) => {
                self.first_failure.get_or_insert_with(|| case(Some(e.to_string())));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.passed += other.passed;
        self.total += other.total;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

fn spec_json(suite: &str, spec: &ProblemSpec, error: Option<String>) -> serde_json::Value {
    json!({
        "suite": suite,
        "m": spec.m,
        "n": spec.n,
        "d": spec.d,
        "alpha": spec.alpha.to_string(),
        "beta": spec.beta.to_string(),
        "field": spec.field().to_string(),
        "error": error,
    })
}

/// Distinct random `alpha`, `beta` in `[-50, 50]`, distinct in the field.
fn random_roots(rng: &mut ChaCha8Rng, field: &Field) -> (FieldValue, FieldValue) {
    loop {
        let a = field.int(rng.gen_range(-50..=50));
        let b = field.int(rng.gen_range(-50..=50));
        if a != b {
            return (a, b);
        }
    }
}

fn triples(max: u64) -> impl Iterator<Item = (u64, u64, u64)> {
    (1..=max).flat_map(move |m| (1..=max).flat_map(move |n| (0..m.min(n)).map(move |d| (m, n, d))))
}

/// Every field in the sweep: Q, then the requested primes.
fn fields(primes: &[u64]) -> Result<Vec<Field>> {
    let mut out = vec![Field::rationals()];
    for &p in primes {
        out.push(Field::prime(p)?);
    }
    Ok(out)
}

fn suite_oracle(max: u64, primes: &[u64], rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::default();
    for field in fields(primes)? {
        for (m, n, d) in triples(max) {
            let (alpha, beta) = random_roots(rng, &field);
            let spec = ProblemSpec::new(m, n, d, alpha, beta)?;
            if classify(&spec) == CharCase::Unsupported {
                continue;
            }
            let check = || -> Result<bool> {
                let (f, g) = spec.pair(&field)?;
                let oracle = sres_oracle(&f, &g, d, &field)?;
                if sres_fast(&spec, &field)?.to_poly()? != oracle {
                    return Ok(false);
                }
                let p = field.characteristic();
                if d == 0 && p != 0 && p < m + n - 1 {
                    return Ok(true);
                }
                let pair = cofactors(&spec, &field)?;
                let lhs = pair.f_cof.mul(&f, &field)?.add(&pair.g_cof.mul(&g, &field)?, &field)?;
                Ok(lhs == oracle
                    && pair.f_cof.degree().below(n - d)
                    && pair.g_cof.degree().below(m - d))
            };
            t.record(check(), |e| spec_json("oracle", &spec, e));
        }
        for m in 1..=max {
            for n in 1..=max {
                if !field.descriptor().inverts_below(m + n) {
                    continue;
                }
                let (alpha, beta) = random_roots(rng, &field);
                let spec = ProblemSpec::new(m, n, 0, alpha.clone(), beta.clone())?;
                let check = || -> Result<bool> {
                    let all = psres_all(m, n, &alpha, &beta, &field)?;
                    let (f, g) = spec.pair(&field)?;
                    for (d, v) in all.iter().enumerate() {
                        if *v != psres_oracle(&f, &g, d as u64, &field)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                };
                t.record(check(), |e| spec_json("psres", &spec, e));
            }
        }
    }
    Ok(t)
}

fn suite_jacobi(max: u64, rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::default();
    let q = Field::rationals();
    for (m, n, d) in triples(max) {
        let (alpha, beta) = random_roots(rng, &q);
        let spec = ProblemSpec::new(m, n, d, alpha, beta)?;
        let check = || Ok(sres_via_jacobi(&spec, &q)? == sres_fast(&spec, &q)?.to_poly()?);
        t.record(check(), |e| spec_json("jacobi", &spec, e));
    }
    let bound = max as i64;
    for r in 0..=max {
        for k in -bound..=bound {
            for l in -bound..=bound {
                let p = JacobiParams::new(r, k, l);
                let check = || Ok(jacobi_hypergeometric(p, &q)? == jacobi_rodrigues(p, &q)?);
                t.record(check(), |e| json!({"suite": "jacobi", "r": r, "k": k, "l": l, "error": e}));
            }
        }
    }
    Ok(t)
}

fn suite_pade(max: u64) -> Tally {
    let mut t = Tally::default();
    let q = Field::rationals();
    for m in 1..=max {
        for n in 1..=max {
            for k in m..=max + 2 {
                t.record(verify_pade_identity(m, n, k, &q), |e| {
                    json!({"suite": "pade", "m": m, "n": n, "k": k, "error": e})
                });
            }
        }
    }
    t
}

fn suite_bernstein(max: u64, primes: &[u64], rng: &mut ChaCha8Rng) -> Result<Tally> {
    let mut t = Tally::default();
    for field in fields(primes)? {
        for (m, n, d) in triples(max) {
            if !field.descriptor().inverts_below(m + n - d) {
                continue;
            }
            let (alpha, beta) = random_roots(rng, &field);
            let spec = ProblemSpec::new(m, n, d, alpha, beta)?;
            let check = || -> Result<bool> {
                let b = sres_bernstein(&spec, &field)?;
                if field.characteristic() == 0 && !b.coeffs.iter().all(FieldValue::is_integral) {
                    return Ok(false);
                }
                let mono = bernstein_to_monomial(&b, &field)?;
                Ok(mono.basis == Basis::Monomial && mono.coeffs == sres_fast(&spec, &field)?.coeffs)
            };
            t.record(check(), |e| spec_json("bernstein", &spec, e));
        }
    }
    Ok(t)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let run_all = a.suite == Suite::All;
    let mut total = Tally::default();
    let mut report = |name: &str, t: Tally, out: &mut dyn Write| -> Result<()> {
        let verdict = if t.passed == t.total { "PASS" } else { "FAIL" };
        writeln!(out, "{name}: {verdict} {}/{} cases", t.passed, t.total).map_err(io)?;
        total.merge(t);
        Ok(())
    };
    if run_all || a.suite == Suite::Oracle {
        report("oracle", suite_oracle(a.max_degree, &a.primes, &mut rng)?, out)?;
    }
    if run_all || a.suite == Suite::Jacobi {
        report("jacobi", suite_jacobi(a.max_degree, &mut rng)?, out)?;
    }
    if run_all || a.suite == Suite::Pade {
        report("pade", suite_pade(a.max_degree), out)?;
    }
    if run_all || a.suite == Suite::Bernstein {
        report("bernstein", suite_bernstein(a.max_degree, &a.primes, &mut rng)?, out)?;
    }

    if let Some(case) = &total.first_failure {
        writeln!(out, "FAIL {}/{} cases", total.passed, total.total).map_err(io)?;
        writeln!(out, "counterexample: {case}").map_err(io)?;
        return Ok(EXIT_VERIFY_FAILED);
    }
    writeln!(out, "PASS {}/{} cases", total.passed, total.total).map_err(io)?;
    Ok(EXIT_OK)
}

/// Runs one bench configuration: `m = n`, `d = n / 2`, `alpha = 1`, `beta = 2`.
pub fn bench_row(n: u64, desc: FieldDescriptor, algorithm: Algorithm) -> Result<BenchRow> {
    let field = Field::new(desc);
    let d = n / 2;
    let (alpha, beta) = (field.int(1), field.int(2));
    let spec = ProblemSpec::new(n, n, d, alpha.clone(), beta.clone())?;
    let start = Instant::now();
    match algorithm {
        Algorithm::Fast => {
            sres_fast(&spec, &field)?;
        }
        Algorithm::Oracle => {
            let (f, g) = spec.pair(&field)?;
            field.reset_counter();
            sres_oracle(&f, &g, d, &field)?;
        }
        Algorithm::PsresAll => {
            psres_all(n, n, &alpha, &beta, &field)?;
        }
    }
    let wall_ns = start.elapsed().as_nanos() as u64;
    let ops = field.counter();
    Ok(BenchRow {
        m: n,
        n,
        d,
        field: desc.to_string(),
        algorithm,
        adds: ops.adds,
        muls: ops.muls,
        divs: ops.divs,
        wall_ns,
    })
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if a.sizes.contains(&0) {
        return Err(Error::InvalidSpec("sizes must be positive".into()));
    }
    let mut rows = Vec::new();
    for &n in &a.sizes {
        for &alg in &a.algorithms {
            if alg == Algorithm::Oracle && n > a.oracle_cutoff {
                continue;
            }
            rows.push(bench_row(n, a.field, alg)?);
        }
    }
    match &a.csv {
        Some(path) => write_bench_csv(&rows, File::create(path).map_err(io)?)?,
        None => write_bench_csv(&rows, out)?,
    }
    Ok(EXIT_OK)
}
