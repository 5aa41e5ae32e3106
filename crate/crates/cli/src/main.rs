//! `qcong`: expand f-quotients, count partition triples, and verify the
//! identity registry and the congruence theorems for `B(n)`.
//!
//! Exit status is 0 when every requested check passes, 1 when any check
//! fails and 2 on a usage error (bad flags, unparsable notation, unknown
//! names).

mod defaults;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::json;

use qcong_core::registry::{self, VerificationReport};
use qcong_core::theorems::{
    self, b_table, theorem_claims, ClaimReport, CongruenceClaim, TheoremError, THEOREM_NAMES,
};
use qcong_core::{
    count_family, parse_quotient, CoefficientRing, FQuotientSpec, Family, ScaledQuotient,
};

use defaults::Defaults;

#[derive(Parser)]
#[command(
    name = "qcong",
    version,
    about = "q-series expansion and congruence checks for B(n)"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print the table of default orders, ranges and primes, then exit.
    #[arg(long)]
    show_defaults: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a series as `n<TAB>coefficient` lines.
    Expand {
        #[command(flatten)]
        source: Source,
        /// Last exponent to print.
        #[arg(long, default_value_t = defaults::EXPAND_ORDER, allow_negative_numbers = true)]
        order: i64,
        /// Reduce coefficients modulo m.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Print a single coefficient.
    Coeff {
        #[command(flatten)]
        source: Source,
        /// Exponent of the coefficient.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Count partitions combinatorially and compare with the generating function.
    Oracle {
        /// Largest n to count.
        #[arg(long, default_value_t = defaults::ORACLE_N)]
        n: usize,
        /// Partition family: B, b, p, a or abar.
        #[arg(long, default_value = "B")]
        family: String,
    },
    /// Check identities from the registry.
    VerifyIdentity {
        #[arg(long, conflicts_with_all = ["all", "list", "export"])]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// List entry names and citations.
        #[arg(long, conflicts_with_all = ["all", "export"])]
        list: bool,
        /// Print the registry as JSON.
        #[arg(long, conflicts_with = "all")]
        export: bool,
        /// Compare through this exponent instead of each entry's default.
        #[arg(long)]
        order: Option<i64>,
    },
    /// Check congruence theorems on a table of B(n).
    VerifyTheorem {
        /// One of thm1.1 to thm1.7.
        #[arg(long, conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// Largest n for every selected claim.
        #[arg(long)]
        nmax: Option<u64>,
        /// Comma-separated primes for the prime-indexed families.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// Check every registry identity and every theorem at the defaults.
    VerifyAll,
    /// Search for congruences `c(An + r) ≡ 0 (mod m)` in a generating function.
    Scan {
        #[arg(long, conflicts_with = "name")]
        spec: Option<String>,
        /// Partition family: B, b, p, a or abar.
        #[arg(long)]
        name: Option<String>,
        /// Largest modulus A of the progression.
        #[arg(long)]
        a_max: Option<u64>,
        /// Comma-separated moduli m.
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<u64>>,
        /// Largest n checked in each progression.
        #[arg(long)]
        nmax: Option<u64>,
        /// JSON file with keys spec, A_max, moduli and n_max. Flags override it.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Time the main kernels.
    Bench {
        #[arg(long, default_value_t = defaults::BENCH_ORDER)]
        order: i64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// f-quotient notation such as "f2^4/(f1^2*f4^3)".
    #[arg(long)]
    spec: Option<String>,
    /// Partition family whose generating function to use: B, b, p, a or abar.
    #[arg(long)]
    name: Option<String>,
}

enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::UnknownTheorem { .. } | TheoremError::InvalidParameter(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Runtime(other.into()),
        }
    }
}

impl From<qcong_core::SeriesError> for CliError {
    fn from(e: qcong_core::SeriesError) -> Self {
        CliError::Runtime(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Text and JSON renderings of a command's result.
struct Output {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(passed) => ExitCode::from(if passed { 0 } else { 1 }),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    configure_threads()?;
    if cli.show_defaults {
        let d = Defaults::current();
        print_output(
            cli.json,
            &Output {
                text: d.to_string(),
                json: serde_json::to_value(&d).unwrap(),
                passed: true,
            },
        );
        return Ok(true);
    }
    let Some(command) = cli.command else {
        return Err(CliError::Usage(
            "a subcommand is required; see `qcong --help`".into(),
        ));
    };
    let out = match command {
        Command::Expand {
            source,
            order,
            modulus,
        } => expand(&source, order, modulus)?,
        Command::Coeff { source, n, modulus } => coeff(&source, n, modulus)?,
        Command::Oracle { n, family } => oracle(n, &family)?,
        Command::VerifyIdentity {
            name,
            all,
            list,
            export,
            order,
        } => verify_identity(name.as_deref(), all, list, export, order)?,
        Command::VerifyTheorem {
            name,
            all,
            nmax,
            primes,
        } => {
            let names = select_theorems(name.as_deref(), all)?;
            verify_theorems(&names, nmax, primes.as_deref())?
        }
        Command::VerifyAll => verify_all()?,
        Command::Scan {
            spec,
            name,
            a_max,
            moduli,
            nmax,
            config,
        } => scan(spec, name, a_max, moduli, nmax, config.as_deref())?,
        Command::Bench { order } => bench(order)?,
    };
    print_output(cli.json, &out);
    Ok(out.passed)
}

fn print_output(json: bool, out: &Output) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("reports serialize")
        );
    } else {
        print!("{}", out.text);
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("QCONG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "QCONG_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(())
}

fn family_names() -> String {
    Family::ALL
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join(", ")
}

fn family(name: &str) -> CliResult<Family> {
    name.parse().map_err(|_| {
        CliError::Usage(format!(
            "unknown series {name:?}; available: {}",
            family_names()
        ))
    })
}

fn parse_spec(text: &str) -> CliResult<ScaledQuotient> {
    parse_quotient(text)
        .map_err(|e| CliError::Usage(format!("cannot parse series notation\n{}", e.render(text))))
}

fn resolve(source: &Source) -> CliResult<ScaledQuotient> {
    match (&source.spec, &source.name) {
        (Some(text), _) => parse_spec(text),
        (None, Some(name)) => Ok(ScaledQuotient {
            scalar: 1,
            quotient: family(name)?.generating_function(),
        }),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn ring(modulus: Option<u64>) -> CliResult<CoefficientRing> {
    match modulus {
        None => Ok(CoefficientRing::Integers),
        Some(m) => CoefficientRing::modular(m).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn expand_series(
    q: &ScaledQuotient,
    order: i64,
    ring: CoefficientRing,
) -> CliResult<qcong_core::LaurentSeries> {
    Ok(q.quotient
        .expand(order, ring)?
        .scale(&BigInt::from(q.scalar)))
}

fn expand(source: &Source, order: i64, modulus: Option<u64>) -> CliResult<Output> {
    let q = resolve(source)?;
    let s = expand_series(&q, order, ring(modulus)?)?;
    let mut text = String::new();
    let mut coefficients = Vec::new();
    for n in s.valuation()..=order {
        let c = s.coeff(n)?;
        writeln!(text, "{n}\t{c}").unwrap();
        coefficients.push(c.to_string());
    }
    let json = json!({
        "spec": q.to_string(),
        "order": order,
        "modulus": modulus,
        "valuation": s.valuation(),
        "coefficients": coefficients,
    });
    Ok(Output {
        text,
        json,
        passed: true,
    })
}

fn coeff(source: &Source, n: i64, modulus: Option<u64>) -> CliResult<Output> {
    let q = resolve(source)?;
    let c = expand_series(&q, n, ring(modulus)?)?.coeff(n)?;
    Ok(Output {
        text: format!("{c}\n"),
        json: json!({ "spec": q.to_string(), "n": n, "modulus": modulus, "coefficient": c.to_string() }),
        passed: true,
    })
}

fn oracle(n: usize, name: &str) -> CliResult<Output> {
    let family = family(name)?;
    let counts = count_family(family, n);
    let series = family
        .generating_function()
        .expand(n as i64, CoefficientRing::Integers)?
        .coefficients();
    let mismatch = counts
        .iter()
        .zip(&series)
        .position(|(c, s)| &BigInt::from(c.clone()) != s);
    let mut text = String::new();
    for (i, c) in counts.iter().enumerate() {
        writeln!(text, "{i}\t{c}").unwrap();
    }
    let gf = family.generating_function();
    match mismatch {
        None => writeln!(
            text,
            "PASS counts of {family} agree with {gf} for 0 <= n <= {n}"
        )
        .unwrap(),
        Some(i) => writeln!(
            text,
            "FAIL counts of {family} differ from {gf} at n = {i}: {} vs {}",
            counts[i], series[i]
        )
        .unwrap(),
    }
    let json = json!({
        "family": family.name(),
        "generating_function": gf.to_string(),
        "counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "passed": mismatch.is_none(),
        "first_mismatch": mismatch,
    });
    Ok(Output {
        text,
        json,
        passed: mismatch.is_none(),
    })
}

fn identity_names() -> String {
    registry::registry()
        .iter()
        .map(|id| id.name.clone())
        .collect::<Vec<_>>()
        .join(", ")
}

fn report_output(reports: Vec<VerificationReport>) -> Output {
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{r}").unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(
        text,
        "identities: {} passed, {failed} failed",
        reports.len() - failed
    )
    .unwrap();
    Output {
        text,
        json: serde_json::to_value(&reports).unwrap(),
        passed: failed == 0,
    }
}

fn verify_identity(
    name: Option<&str>,
    all: bool,
    list: bool,
    export: bool,
    order: Option<i64>,
) -> CliResult<Output> {
    if list {
        let entries = registry::registry();
        let mut text = String::new();
        for id in &entries {
            writeln!(text, "{}\t{}", id.name, id.citation).unwrap();
        }
        let json = json!(entries
            .iter()
            .map(|id| json!({"name": id.name, "citation": id.citation}))
            .collect::<Vec<_>>());
        return Ok(Output {
            text,
            json,
            passed: true,
        });
    }
    if export {
        let json = registry::registry_json();
        let text = format!("{}\n", serde_json::to_string_pretty(&json).unwrap());
        return Ok(Output {
            text,
            json,
            passed: true,
        });
    }
    if let Some(t) = order {
        if t < 0 {
            return Err(CliError::Usage(format!(
                "--order must be nonnegative, got {t}"
            )));
        }
    }
    let reports = match (name, all) {
        (Some(name), _) => {
            let id = registry::find(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown identity {name:?}; available: {}",
                    identity_names()
                ))
            })?;
            vec![id.verify(order)]
        }
        (None, true) => registry::verify_all(order),
        (None, false) => {
            return Err(CliError::Usage(
                "give --name, --all, --list or --export".into(),
            ))
        }
    };
    Ok(report_output(reports))
}

fn select_theorems(name: Option<&str>, all: bool) -> CliResult<Vec<String>> {
    match (name, all) {
        (Some(name), _) if THEOREM_NAMES.contains(&name) => Ok(vec![name.to_string()]),
        (Some(name), _) => Err(CliError::Usage(format!(
            "unknown theorem {name:?}; available: {}",
            THEOREM_NAMES.join(", ")
        ))),
        (None, true) => Ok(THEOREM_NAMES.iter().map(|s| s.to_string()).collect()),
        (None, false) => Err(CliError::Usage("give --name or --all".into())),
    }
}

fn theorem_output(claims: &[CongruenceClaim]) -> CliResult<(String, serde_json::Value, bool)> {
    let needed = theorems::max_argument(claims);
    let table = b_table(needed);
    let reports: Vec<ClaimReport> = claims
        .iter()
        .map(|c| c.verify(&table))
        .collect::<Result<_, _>>()?;
    let mut text = format!("sizing: claims read B up to B({needed})\n");
    for r in &reports {
        writeln!(text, "{r}").unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(
        text,
        "claims: {} passed, {failed} failed",
        reports.len() - failed
    )
    .unwrap();
    let json = json!({ "max_argument": needed, "reports": reports });
    Ok((text, json, failed == 0))
}

fn verify_theorems(
    names: &[String],
    nmax: Option<u64>,
    primes: Option<&[u64]>,
) -> CliResult<Output> {
    let d = defaults::theorem_defaults(nmax, primes);
    let mut claims = Vec::new();
    for name in names {
        claims.extend(theorem_claims(name, &d)?);
    }
    let (text, json, passed) = theorem_output(&claims)?;
    Ok(Output { text, json, passed })
}

fn verify_all() -> CliResult<Output> {
    let identities = report_output(registry::verify_all(None));
    let names: Vec<String> = THEOREM_NAMES.iter().map(|s| s.to_string()).collect();
    let theorems = verify_theorems(&names, None, None)?;
    let passed = identities.passed && theorems.passed;
    Ok(Output {
        text: format!(
            "{}{}{}\n",
            identities.text,
            theorems.text,
            if passed {
                "ALL PASS"
            } else {
                "SOME CHECKS FAILED"
            }
        ),
        json: json!({ "identities": identities.json, "theorems": theorems.json, "passed": passed }),
        passed,
    })
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ScanConfig {
    spec: Option<String>,
    #[serde(rename = "A_max")]
    a_max: Option<u64>,
    moduli: Option<Vec<u64>>,
    n_max: Option<u64>,
}

/// A family name or f-quotient notation with scalar 1.
fn scan_target(text: &str) -> CliResult<FQuotientSpec> {
    if let Ok(f) = text.parse::<Family>() {
        return Ok(f.generating_function());
    }
    let q = parse_spec(text)?;
    if q.scalar != 1 {
        return Err(CliError::Usage(format!(
            "scan needs a quotient without a scalar factor, got {q}"
        )));
    }
    Ok(q.quotient)
}

fn scan(
    spec: Option<String>,
    name: Option<String>,
    a_max: Option<u64>,
    moduli: Option<Vec<u64>>,
    nmax: Option<u64>,
    config: Option<&std::path::Path>,
) -> CliResult<Output> {
    let file = match config {
        None => ScanConfig::default(),
        Some(path) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&raw).map_err(|e| {
                CliError::Usage(format!("invalid scan config {}: {e}", path.display()))
            })?
        }
    };
    let gf = match (spec, name, file.spec) {
        (Some(s), _, _) => scan_target(&s)?,
        (None, Some(n), _) => family(&n)?.generating_function(),
        (None, None, Some(s)) => scan_target(&s)?,
        (None, None, None) => {
            return Err(CliError::Usage(
                "give --spec, --name or a config with a spec".into(),
            ))
        }
    };
    let a_max = a_max.or(file.a_max).unwrap_or(defaults::SCAN_A_MAX);
    let moduli = moduli
        .or(file.moduli)
        .unwrap_or_else(|| defaults::SCAN_MODULI.to_vec());
    let n_max = nmax.or(file.n_max).unwrap_or(defaults::SCAN_N_MAX);
    let report = theorems::scan(&gf, a_max, &moduli, n_max)?;
    Ok(Output {
        text: report.to_string(),
        json: serde_json::to_value(&report).unwrap(),
        passed: report.missed_known.is_empty(),
    })
}

fn bench(order: i64) -> CliResult<Output> {
    if order < 1 {
        return Err(CliError::Usage(format!(
            "--order must be positive, got {order}"
        )));
    }
    let b_gf = Family::B.generating_function();
    let mut rows: Vec<(String, f64)> = Vec::new();
    let mut time = |label: String, f: &mut dyn FnMut() -> CliResult<()>| -> CliResult<()> {
        let start = Instant::now();
        f()?;
        rows.push((label, start.elapsed().as_secs_f64()));
        Ok(())
    };
    time(format!("B series exact through q^{order}"), &mut || {
        b_gf.expand(order, CoefficientRing::Integers)?;
        Ok(())
    })?;
    time(format!("B series mod 63 through q^{order}"), &mut || {
        b_gf.expand(order, CoefficientRing::IntegersMod(63))?;
        Ok(())
    })?;
    let f1 = FQuotientSpec::new(&[(1, 1)], 0).expand(order, CoefficientRing::Integers)?;
    let g = b_gf.expand(order, CoefficientRing::Integers)?;
    time(format!("dense product through q^{order}"), &mut || {
        f1.mul(&g)?;
        Ok(())
    })?;
    time(format!("inverse through q^{order}"), &mut || {
        g.invert()?;
        Ok(())
    })?;
    let mut text = String::new();
    for (label, secs) in &rows {
        writeln!(text, "{secs:.4}s\t{label}").unwrap();
    }
    let json = json!(rows
        .iter()
        .map(|(l, s)| json!({"task": l, "seconds": s}))
        .collect::<Vec<_>>());
    Ok(Output {
        text,
        json,
        passed: true,
    })
}
