//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every threshold below is fixed; none is read from the
//! environment.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qcong_core::registry::{self, LAURENT_ORDER, MODULAR_ORDER, MUTATION_TARGETS};
use qcong_core::series::CoefficientRing;
use qcong_core::special::euler_f;
use qcong_core::theorems::{self, b_table, b_table_mod, default_claims, scan, verify_simple};
use qcong_core::{count_b, Family, SeriesExpr};

const ORACLE_N: usize = 400;
const ORACLE_LIMIT: Duration = Duration::from_secs(5);
const PARITY_N_MAX: u64 = 2000;
const PARITY_LIMIT: Duration = Duration::from_secs(30);
const MOD3_N_MAX: u64 = 400;
const MOD3_LIMIT: Duration = Duration::from_secs(60);
const EXACT_ORDER: i64 = 300;
const EXACT_LIMIT: Duration = Duration::from_secs(60);
const MODULAR_LIMIT: Duration = Duration::from_secs(60);
const CLAIMS_LIMIT: Duration = Duration::from_secs(600);
const BINOMIAL_ORDER: i64 = 300;
const TABLE_MOD_N: usize = 20000;
const TABLE_MOD_M: u32 = 63;
const TABLE_MOD_LIMIT: Duration = Duration::from_secs(10);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.passed = false;
    }
    o.detail = format!(
        "{} ({:.2}s, limit {}s)",
        o.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    o
}

fn oracle_equivalence() -> Outcome {
    timed(ORACLE_LIMIT, || {
        let oracle = count_b(ORACLE_N);
        let series = b_table(ORACLE_N);
        let mismatch = oracle
            .iter()
            .zip(&series)
            .position(|(x, y)| &BigInt::from(x.clone()) != y);
        match mismatch {
            None => outcome(
                true,
                format!("triple counts equal the expansion for 0 <= n <= {ORACLE_N}"),
            ),
            Some(n) => outcome(false, format!("first difference at n = {n}")),
        }
    })
}

fn parity_and_mod_five() -> Outcome {
    timed(PARITY_LIMIT, || {
        let table = b_table(5 * PARITY_N_MAX as usize + 4);
        let reports = [
            verify_simple(&table, 2, 1, 2, PARITY_N_MAX).unwrap(),
            verify_simple(&table, 5, 4, 5, PARITY_N_MAX).unwrap(),
        ];
        let lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
        outcome(reports.iter().all(|r| r.passed), lines.join("; "))
    })
}

fn twenty_seven_n_plus_sixteen() -> Outcome {
    timed(MOD3_LIMIT, || {
        let table = b_table(27 * MOD3_N_MAX as usize + 16);
        let r = verify_simple(&table, 27, 16, 3, MOD3_N_MAX).unwrap();
        outcome(r.passed, r.to_string())
    })
}

fn check_identity(name: &str, order: i64) -> Outcome {
    let id = registry::find(name).unwrap_or_else(|| panic!("{name} is in the registry"));
    timed(EXACT_LIMIT, || {
        let r = id.verify(Some(order));
        let valuations = format!(" valuations {:?}/{:?}", r.lhs_valuation, r.rhs_valuation);
        outcome(r.passed, format!("{r}{valuations}"))
    })
}

fn exact_lemmas() -> Vec<Outcome> {
    vec![
        check_identity("b_3n_plus_2", EXACT_ORDER),
        check_identity("theta_product_relation", EXACT_ORDER),
        check_identity("b_7n_plus_2_modular_basis", LAURENT_ORDER),
    ]
}

fn modular_lemmas() -> Outcome {
    let names = [
        "c_series_mod_3",
        "b_3n_plus_1_mod_9",
        "b_9n_plus_7_mod_9",
        "b_27n_plus_16_mod_9",
        "b_7n_plus_2_mod_7",
    ];
    timed(MODULAR_LIMIT, || {
        let reports: Vec<_> = names
            .iter()
            .map(|n| registry::find(n).unwrap().verify(Some(MODULAR_ORDER)))
            .collect();
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.to_string())
            .collect();
        if failed.is_empty() {
            outcome(
                true,
                format!(
                    "{} congruences hold through q^{MODULAR_ORDER}",
                    reports.len()
                ),
            )
        } else {
            outcome(false, failed.join("; "))
        }
    })
}

fn weighted_claims() -> Outcome {
    timed(CLAIMS_LIMIT, || {
        let claims = default_claims();
        let needed = theorems::max_argument(&claims);
        println!("  sizing: default claims read B up to B({needed})");
        let table = b_table(needed);
        let reports: Vec<_> = claims.iter().map(|c| c.verify(&table).unwrap()).collect();
        for r in &reports {
            println!("  {r}");
        }
        let sums: usize = reports.iter().map(|r| r.checked).sum();
        outcome(
            reports.iter().all(|r| r.passed),
            format!("{} claim families, {sums} sums", reports.len()),
        )
    })
}

/// Perturbation exponents sit inside each identity's window.
fn mutation_sensitivity() -> Outcome {
    let mut lines = Vec::new();
    let mut all = true;
    for name in MUTATION_TARGETS {
        let id = registry::find(name).unwrap();
        let order = id.default_order.min(EXACT_ORDER);
        let exponent = 17;
        let r = id.perturbed(exponent, 1).verify(Some(order));
        let hit = !r.passed && r.mismatch.as_ref().map(|m| m.exponent) == Some(exponent);
        all &= hit;
        lines.push(format!(
            "{name}: {}",
            r.mismatch.map_or("no mismatch".into(), |m| format!(
                "first mismatch at q^{}",
                m.exponent
            ))
        ));
    }
    // The same lemma with f4^(-10) replaced by f4^(-9) on the right.
    let id = registry::find("b_3n_plus_2").unwrap();
    let mut wrong = id.clone();
    wrong.rhs = SeriesExpr::notation("f2^12*f12^3/(f1^6*f4^9)");
    let r = wrong.verify(Some(EXACT_ORDER));
    all &= !r.passed && r.mismatch.is_some();
    lines.push(format!(
        "b_3n_plus_2 with f4^9: {}",
        r.mismatch.map_or("no mismatch".into(), |m| format!(
            "first mismatch at q^{}",
            m.exponent
        ))
    ));
    outcome(all, lines.join("; "))
}

/// `f_m^(p^k) ≡ f_(mp)^(p^(k-1)) (mod p^k)`.
fn binomial_congruences() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for p in [2u32, 3, 5, 7] {
        for k in [1u32, 2] {
            let pk = p.pow(k);
            let ring = CoefficientRing::modular(pk as u64).unwrap();
            for m in 1u32..=4 {
                let lhs = euler_f(m, BINOMIAL_ORDER, ring)
                    .unwrap()
                    .pow(pk as i64)
                    .unwrap();
                let rhs = euler_f(m * p, BINOMIAL_ORDER, ring)
                    .unwrap()
                    .pow(p.pow(k - 1) as i64)
                    .unwrap();
                count += 1;
                if let Some((e, _, _)) = lhs.first_mismatch(&rhs, BINOMIAL_ORDER).unwrap() {
                    failures.push(format!("p={p} k={k} m={m} at q^{e}"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} cases through q^{BINOMIAL_ORDER}")
        } else {
            failures.join(", ")
        },
    )
}

fn scanner_rediscovery() -> Outcome {
    let runs: [(Family, u64, &[u64], u64); 3] = [
        (Family::B, 30, &[2, 3, 5, 7], 500),
        (Family::LinB, 10, &[3], 500),
        (Family::P, 10, &[5, 7], 500),
    ];
    let mut ok = true;
    let mut lines = Vec::new();
    for (family, a_max, moduli, n_max) in runs {
        let gf = family.generating_function();
        let report = scan(&gf, a_max, moduli, n_max).unwrap();
        let mut marked: Vec<(u64, u64, u64)> = report
            .hits
            .iter()
            .filter(|h| h.known)
            .map(|h| (h.a, h.r, h.modulus))
            .collect();
        let mut expected: Vec<(u64, u64, u64)> = theorems::known_congruences(&gf)
            .into_iter()
            .filter(|&(a, _, m)| a <= a_max && moduli.contains(&m))
            .collect();
        marked.sort();
        expected.sort();
        let good = report.missed_known.is_empty() && marked == expected;
        ok &= good;
        lines.push(format!(
            "{family}: {} hits, known {marked:?}{}",
            report.hits.len(),
            if good {
                ""
            } else {
                " (expected a different known set)"
            }
        ));
    }
    outcome(ok, lines.join("; "))
}

fn table_mod_throughput() -> Outcome {
    timed(TABLE_MOD_LIMIT, || {
        let t = b_table_mod(TABLE_MOD_N, TABLE_MOD_M).unwrap();
        let exact_prefix = b_table(50);
        let prefix_ok = exact_prefix
            .iter()
            .zip(&t)
            .all(|(x, &y)| x % TABLE_MOD_M == BigInt::from(y));
        outcome(
            t.len() == TABLE_MOD_N + 1 && prefix_ok,
            format!("B(0..={TABLE_MOD_N}) mod {TABLE_MOD_M}"),
        )
    })
}

fn main() -> ExitCode {
    let mut results: Vec<(String, Outcome)> = Vec::new();
    let mut run = |label: &str, o: Outcome| {
        println!(
            "{} {label}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((label.to_string(), o));
    };
    run("1 oracle equivalence", oracle_equivalence());
    run("2 B(2n+1) mod 2 and B(5n+4) mod 5", parity_and_mod_five());
    run("3 B(27n+16) mod 3", twenty_seven_n_plus_sixteen());
    let labels = [
        "4a B(3n+2) generating function",
        "4b three-term eta product relation",
        "4c B(7n+2) in the level 28 basis",
    ];
    for (label, o) in labels.iter().zip(exact_lemmas()) {
        run(label, o);
    }
    run("5 modular generating functions", modular_lemmas());
    run("6 weighted sum congruences", weighted_claims());
    run("7 mutation sensitivity", mutation_sensitivity());
    run("8 binomial congruences", binomial_congruences());
    run("9 scanner rediscovery", scanner_rediscovery());
    run("10 B table mod 63 throughput", table_mod_throughput());

    let failed = results.iter().filter(|(_, o)| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
