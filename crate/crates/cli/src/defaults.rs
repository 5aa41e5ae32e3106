//! Every default the CLI uses, in one table printed by `--show-defaults`.

use std::fmt;

use serde::Serialize;

use qcong_core::registry::{EXACT_ORDER, LAURENT_ORDER, MODULAR_ORDER};
use qcong_core::theorems::TheoremDefaults;

pub const EXPAND_ORDER: i64 = 20;
pub const ORACLE_N: usize = 50;
pub const SCAN_A_MAX: u64 = 30;
pub const SCAN_MODULI: [u64; 4] = [2, 3, 5, 7];
pub const SCAN_N_MAX: u64 = 500;
pub const BENCH_ORDER: i64 = 5000;

#[derive(Serialize)]
pub struct Defaults {
    pub expand_order: i64,
    pub oracle_n: usize,
    pub identity_exact_order: i64,
    pub identity_modular_order: i64,
    pub identity_laurent_order: i64,
    pub theorems: TheoremDefaults,
    pub scan_a_max: u64,
    pub scan_moduli: Vec<u64>,
    pub scan_n_max: u64,
    pub bench_order: i64,
}

impl Defaults {
    pub fn current() -> Self {
        Defaults {
            expand_order: EXPAND_ORDER,
            oracle_n: ORACLE_N,
            identity_exact_order: EXACT_ORDER,
            identity_modular_order: MODULAR_ORDER,
            identity_laurent_order: LAURENT_ORDER,
            theorems: TheoremDefaults::default(),
            scan_a_max: SCAN_A_MAX,
            scan_moduli: SCAN_MODULI.to_vec(),
            scan_n_max: SCAN_N_MAX,
            bench_order: BENCH_ORDER,
        }
    }
}

fn list(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Defaults {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.theorems;
        let rows: [(&str, String); 19] = [
            ("expand --order", self.expand_order.to_string()),
            ("oracle --n", self.oracle_n.to_string()),
            (
                "identity order, exact entries",
                self.identity_exact_order.to_string(),
            ),
            (
                "identity order, modular entries",
                self.identity_modular_order.to_string(),
            ),
            (
                "identity order, Laurent entries",
                self.identity_laurent_order.to_string(),
            ),
            ("thm1.1 n_max", t.thm1_1_n_max.to_string()),
            ("thm1.2 n_max", t.thm1_2_n_max.to_string()),
            ("thm1.3 n_max", t.thm1_3_n_max.to_string()),
            ("thm1.4 primes", list(&t.thm1_4_primes)),
            ("thm1.4 n_max", t.thm1_4_n_max.to_string()),
            ("thm1.5 primes", list(&t.thm1_5_primes)),
            ("thm1.5 n_max", t.thm1_5_n_max.to_string()),
            ("thm1.6 n_max", t.thm1_6_n_max.to_string()),
            ("thm1.7 F(7n+j) n_max", t.thm1_7_first_n_max.to_string()),
            (
                "thm1.7 F(49n+7j+2) n_max",
                t.thm1_7_second_n_max.to_string(),
            ),
            ("scan --a-max", self.scan_a_max.to_string()),
            ("scan --moduli", list(&self.scan_moduli)),
            ("scan --nmax", self.scan_n_max.to_string()),
            ("bench --order", self.bench_order.to_string()),
        ];
        for (key, value) in rows {
            writeln!(f, "{key:<34}{value}")?;
        }
        Ok(())
    }
}

/// Theorem ranges with command-line overrides applied. `nmax` replaces
/// every range; `primes` replaces both prime lists.
pub fn theorem_defaults(nmax: Option<u64>, primes: Option<&[u64]>) -> TheoremDefaults {
    let mut d = TheoremDefaults::default();
    if let Some(n) = nmax {
        d.thm1_1_n_max = n;
        d.thm1_2_n_max = n;
        d.thm1_3_n_max = n;
        d.thm1_4_n_max = n;
        d.thm1_5_n_max = n;
        d.thm1_6_n_max = n;
        d.thm1_7_first_n_max = n;
        d.thm1_7_second_n_max = n;
    }
    if let Some(p) = primes {
        d.thm1_4_primes = p.to_vec();
        d.thm1_5_primes = p.to_vec();
    }
    d
}
