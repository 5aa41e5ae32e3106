use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Result, TheoremError};
use crate::partitions::Family;
use crate::series::CoefficientRing;
use crate::special::{fquotient, FQuotientSpec};

/// `(A, r, m)` with `coefficient(An + r) ≡ 0 (mod m)` for every checked `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    pub a: u64,
    pub r: u64,
    pub modulus: u64,
    /// Number of coefficients that vanished.
    pub evidence: u64,
    /// A congruence stated in the literature for this generating function.
    pub known: bool,
    /// A coarser hit `(A', r', m')` with `A' | A`, `r ≡ r' (mod A')`, `m | m'`.
    pub implied_by: Option<(u64, u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub spec: String,
    pub a_max: u64,
    pub moduli: Vec<u64>,
    pub n_max: u64,
    pub hits: Vec<ScanHit>,
    /// Known congruences inside the scanned range that were not found.
    pub missed_known: Vec<(u64, u64, u64)>,
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "scan of {} for A <= {}, moduli {:?}, 0 <= n <= {}",
            self.spec, self.a_max, self.moduli, self.n_max
        )?;
        for h in &self.hits {
            write!(
                f,
                "A={} r={} m={} evidence={}",
                h.a, h.r, h.modulus, h.evidence
            )?;
            if h.known {
                write!(f, " known")?;
            }
            if let Some((a, r, m)) = h.implied_by {
                write!(f, " implied-by=({a},{r},{m})")?;
            }
            writeln!(f)?;
        }
        for (a, r, m) in &self.missed_known {
            writeln!(f, "MISSED known congruence A={a} r={r} m={m}")?;
        }
        Ok(())
    }
}

/// Published congruences `(A, r, m)` for the named partition functions.
pub fn known_congruences(gf: &FQuotientSpec) -> Vec<(u64, u64, u64)> {
    let family = Family::ALL
        .into_iter()
        .find(|f| &f.generating_function() == gf);
    match family {
        Some(Family::B) => vec![(2, 1, 2), (5, 4, 5), (27, 16, 3)],
        Some(Family::LinB) => vec![(3, 2, 3)],
        Some(Family::P) => vec![(5, 4, 5), (7, 5, 7)],
        Some(Family::A) => vec![(3, 2, 3)],
        Some(Family::ABar) => vec![(3, 2, 6)],
        None => vec![],
    }
}

/// Every `(A, r, m)` with `A <= a_max`, `r < A`, `m` in `moduli` such that
/// the coefficient of `q^(An+r)` in `gf` is divisible by `m` for all
/// `0 <= n <= n_max`.
pub fn scan(gf: &FQuotientSpec, a_max: u64, moduli: &[u64], n_max: u64) -> Result<ScanReport> {
    if !(1..=60).contains(&a_max) {
        return Err(TheoremError::InvalidParameter(format!(
            "A_max must be in 1..=60, got {a_max}"
        )));
    }
    if n_max < 50 {
        return Err(TheoremError::InvalidParameter(format!(
            "n_max must be at least 50, got {n_max}"
        )));
    }
    if gf.qshift() < 0 {
        return Err(TheoremError::InvalidParameter(
            "the generating function must be a power series".into(),
        ));
    }
    let mut moduli: Vec<u64> = moduli.to_vec();
    moduli.sort_unstable();
    moduli.dedup();
    if moduli.is_empty() || moduli[0] < 2 {
        return Err(TheoremError::InvalidParameter(
            "moduli must be at least 2".into(),
        ));
    }
    let lcm = moduli.iter().fold(1u64, |acc, &m| acc.lcm(&m));
    let ring = CoefficientRing::modular(lcm)?;
    let order = a_max * n_max + a_max - 1;
    let series = fquotient(gf, order as i64, ring)?;
    let v = series.valuation();
    let residues = series.residues().expect("modular ring");
    let coeff = |e: u64| -> u64 {
        let i = e as i64 - v;
        if i < 0 {
            0
        } else {
            residues[i as usize]
        }
    };

    let mut hits: Vec<ScanHit> = (1..=a_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let moduli = &moduli;
            (0..a).flat_map(move |r| {
                moduli
                    .iter()
                    .filter(move |&&m| (0..=n_max).all(|n| coeff(a * n + r) % m == 0))
                    .map(move |&m| (a, r, m))
            })
        })
        .map(|(a, r, m)| ScanHit {
            a,
            r,
            modulus: m,
            evidence: n_max + 1,
            known: false,
            implied_by: None,
        })
        .collect();

    let known = known_congruences(gf);
    let triples: Vec<(u64, u64, u64)> = hits.iter().map(|h| (h.a, h.r, h.modulus)).collect();
    for h in &mut hits {
        h.known = known.contains(&(h.a, h.r, h.modulus));
        h.implied_by = triples.iter().copied().find(|&(a, r, m)| {
            (a, r, m) != (h.a, h.r, h.modulus) && h.a % a == 0 && h.r % a == r && m % h.modulus == 0
        });
    }
    let missed_known = known
        .into_iter()
        .filter(|&(a, _, m)| a <= a_max && moduli.contains(&m))
        .filter(|t| !triples.contains(t))
        .collect();

    Ok(ScanReport {
        spec: gf.to_string(),
        a_max,
        moduli,
        n_max,
        hits,
        missed_known,
    })
}
