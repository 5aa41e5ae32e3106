//! Direct numerical checks of congruences on tables of `B(n)`: simple
//! progressions `B(An + r) ≡ 0 (mod m)`, weighted sums over quadratic
//! arguments, and an affine congruence scanner.

mod claims;
mod scan;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::partitions::Family;
use crate::series::{CoefficientRing, LaurentSeries, SeriesError};
use crate::special::fquotient;

pub use claims::{
    default_claims, theorem_claims, ArgForm, ClaimInstance, ClaimReport, ClaimWeight,
    CongruenceClaim, InstanceResult, TermRecord, TheoremDefaults, THEOREM_NAMES,
};
pub use scan::{known_congruences, scan, ScanHit, ScanReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("table too small: need B(0..={needed}), have B(0..={available})")]
    TableTooSmall { needed: usize, available: usize },
    #[error("unknown theorem {name:?}; available: {}", THEOREM_NAMES.join(", "))]
    UnknownTheorem { name: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, TheoremError>;

/// `B(0..=n_max)` as a series in `ring`, built from the generating function.
pub fn b_series(n_max: usize, ring: CoefficientRing) -> Result<LaurentSeries> {
    Ok(fquotient(
        &Family::B.generating_function(),
        n_max as i64,
        ring,
    )?)
}

/// Exact `B(0..=n_max)`.
pub fn b_table(n_max: usize) -> Vec<BigInt> {
    b_series(n_max, CoefficientRing::Integers)
        .expect("the B generating function expands over the integers")
        .coefficients()
}

/// `B(0..=n_max) mod m`.
pub fn b_table_mod(n_max: usize, m: u32) -> Result<Vec<u64>> {
    let ring = CoefficientRing::modular(m as u64)?;
    let s = b_series(n_max, ring)?;
    Ok(s.residues().expect("modular ring").to_vec())
}

/// Outcome of checking `B(An + r) ≡ 0 (mod m)` for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleReport {
    pub a: u64,
    pub r: u64,
    pub modulus: u64,
    pub n_max: u64,
    pub passed: bool,
    /// First failing `n` with the value of `B(An + r)`.
    pub counterexample: Option<(u64, String)>,
}

impl fmt::Display for SimpleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} B({}n+{}) ≡ 0 (mod {}) for 0 <= n <= {}",
            self.a, self.r, self.modulus, self.n_max
        )?;
        if let Some((n, v)) = &self.counterexample {
            write!(f, ": n = {n} gives B({}) = {v}", self.a * n + self.r)?;
        }
        Ok(())
    }
}

/// Check `B(An + r) ≡ 0 (mod m)` for `0 <= n <= n_max` against `table`.
pub fn verify_simple(table: &[BigInt], a: u64, r: u64, m: u64, n_max: u64) -> Result<SimpleReport> {
    if a == 0 || r >= a || m < 2 {
        return Err(TheoremError::InvalidParameter(format!(
            "need A >= 1, 0 <= r < A, m >= 2; got A = {a}, r = {r}, m = {m}"
        )));
    }
    let needed = (a * n_max + r) as usize;
    if needed >= table.len() {
        return Err(TheoremError::TableTooSmall {
            needed,
            available: table.len().saturating_sub(1),
        });
    }
    let modulus = BigInt::from(m);
    let counterexample = (0..=n_max)
        .map(|n| (n, &table[(a * n + r) as usize]))
        .find(|(_, v)| !(*v % &modulus).is_zero())
        .map(|(n, v)| (n, v.to_string()));
    Ok(SimpleReport {
        a,
        r,
        modulus: m,
        n_max,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Largest `B` argument any claim in `claims` reads.
pub fn max_argument(claims: &[CongruenceClaim]) -> usize {
    claims
        .iter()
        .map(CongruenceClaim::max_argument)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count_b;
    use num_traits::ToPrimitive;

    #[test]
    fn table_starts_with_small_values() {
        let t: Vec<i64> = b_table(5).iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(t, vec![1, 2, 1, 2, 5, 6]);
    }

    #[test]
    fn table_agrees_with_triple_counts() {
        let t = b_table(400);
        let oracle = count_b(400);
        for (n, (x, y)) in t.iter().zip(&oracle).enumerate() {
            assert_eq!(x, &BigInt::from(y.clone()), "B({n})");
        }
    }

    #[test]
    fn modular_table_is_reduction_of_exact() {
        let exact = b_table(500);
        let m63 = b_table_mod(500, 63).unwrap();
        for (x, y) in exact.iter().zip(&m63) {
            assert_eq!((x % 63u32).to_u64().unwrap(), *y);
        }
    }

    #[test]
    fn simple_congruences_hold() {
        let t = b_table(2000);
        assert!(verify_simple(&t, 2, 1, 2, 999).unwrap().passed);
        assert!(verify_simple(&t, 5, 4, 5, 399).unwrap().passed);
    }

    #[test]
    fn simple_counterexample_is_the_first_one() {
        let t = b_table(50);
        // B(1) = 2 is not divisible by 3.
        let r = verify_simple(&t, 2, 1, 3, 20).unwrap();
        assert!(!r.passed);
        assert_eq!(r.counterexample, Some((0, "2".to_string())));
    }

    #[test]
    fn simple_rejects_short_table_and_bad_parameters() {
        let t = b_table(10);
        assert_eq!(
            verify_simple(&t, 2, 1, 2, 10),
            Err(TheoremError::TableTooSmall {
                needed: 21,
                available: 10
            })
        );
        assert!(verify_simple(&t, 2, 2, 2, 1).is_err());
        assert!(verify_simple(&t, 2, 1, 1, 1).is_err());
    }
}
