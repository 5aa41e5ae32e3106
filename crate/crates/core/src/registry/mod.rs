//! Catalog of q-series identities and congruences, stated as pairs of
//! [`SeriesExpr`] and checked coefficient by coefficient.

mod catalog;
mod expr;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::series::CoefficientRing;

pub use catalog::{registry, MUTATION_TARGETS};
pub use expr::{NamedSeries, SeriesExpr};

/// Default order for identities over the integers.
pub const EXACT_ORDER: i64 = 300;
/// Default order for identities checked modulo `m`.
pub const MODULAR_ORDER: i64 = 1000;
/// Default order for the Laurent identity in the modular-function basis.
pub const LAURENT_ORDER: i64 = 150;

/// One identity `lhs = rhs`, or `lhs ≡ rhs (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySpec {
    pub name: String,
    pub citation: String,
    pub lhs: SeriesExpr,
    pub rhs: SeriesExpr,
    pub modulus: Option<u32>,
    pub default_order: i64,
}

impl IdentitySpec {
    pub fn exact(name: &str, citation: &str, lhs: SeriesExpr, rhs: SeriesExpr) -> Self {
        IdentitySpec {
            name: name.to_string(),
            citation: citation.to_string(),
            lhs,
            rhs,
            modulus: None,
            default_order: EXACT_ORDER,
        }
    }

    pub fn modular(
        name: &str,
        citation: &str,
        modulus: u32,
        lhs: SeriesExpr,
        rhs: SeriesExpr,
    ) -> Self {
        IdentitySpec {
            modulus: Some(modulus),
            default_order: MODULAR_ORDER,
            ..IdentitySpec::exact(name, citation, lhs, rhs)
        }
    }

    pub fn with_order(mut self, order: i64) -> Self {
        self.default_order = order;
        self
    }

    pub fn ring(&self) -> CoefficientRing {
        match self.modulus {
            None => CoefficientRing::Integers,
            Some(m) => CoefficientRing::IntegersMod(m),
        }
    }

    /// The same identity with `delta * q^exponent` added to the right side.
    pub fn perturbed(&self, exponent: i64, delta: i64) -> IdentitySpec {
        let mut out = self.clone();
        out.name = format!("{}[perturbed q^{exponent} by {delta}]", self.name);
        out.rhs = self
            .rhs
            .clone()
            .plus(SeriesExpr::literal(delta).shift(exponent));
        out
    }

    /// Compare both sides through `order` (the default order when `None`).
    pub fn verify(&self, order: Option<i64>) -> VerificationReport {
        let order = order.unwrap_or(self.default_order);
        let ring = self.ring();
        let mut report = VerificationReport {
            name: self.name.clone(),
            citation: self.citation.clone(),
            order,
            modulus: self.modulus,
            passed: false,
            lhs_valuation: None,
            rhs_valuation: None,
            mismatch: None,
            error: None,
        };
        let outcome = self.lhs.evaluate(order, ring).and_then(|l| {
            let r = self.rhs.evaluate(order, ring)?;
            let mismatch = l.first_mismatch(&r, order)?;
            Ok((l, r, mismatch))
        });
        match outcome {
            Ok((l, r, mismatch)) => {
                report.lhs_valuation = leading_exponent(&l);
                report.rhs_valuation = leading_exponent(&r);
                report.passed = mismatch.is_none();
                report.mismatch = mismatch.map(|(exponent, lhs, rhs)| Mismatch {
                    exponent,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            Err(e) => report.error = Some(e.to_string()),
        }
        report
    }
}

fn leading_exponent(s: &crate::series::LaurentSeries) -> Option<i64> {
    let n = s.normalize();
    (!n.is_zero_on_window()).then(|| n.valuation())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub citation: String,
    pub order: i64,
    pub modulus: Option<u32>,
    pub passed: bool,
    /// Exponent of the first nonzero coefficient (`None` if all vanish).
    pub lhs_valuation: Option<i64>,
    pub rhs_valuation: Option<i64>,
    pub mismatch: Option<Mismatch>,
    pub error: Option<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let relation = match self.modulus {
            None => "exact".to_string(),
            Some(m) => format!("mod {m}"),
        };
        write!(
            f,
            "{status} {} [{}] {relation} through q^{}",
            self.name, self.citation, self.order
        )?;
        if let Some(m) = &self.mismatch {
            write!(
                f,
                ": first mismatch at q^{} (lhs {}, rhs {})",
                m.exponent, m.lhs, m.rhs
            )?;
        }
        if let Some(e) = &self.error {
            write!(f, ": error: {e}")?;
        }
        Ok(())
    }
}

pub fn find(name: &str) -> Option<IdentitySpec> {
    registry().into_iter().find(|id| id.name == name)
}

/// Verify every registry entry (in parallel) at its default order, or at
/// `order` when given. Reports come back in catalog order.
pub fn verify_all(order: Option<i64>) -> Vec<VerificationReport> {
    registry().par_iter().map(|id| id.verify(order)).collect()
}

/// The registry as a JSON document.
pub fn registry_json() -> serde_json::Value {
    let entries: Vec<serde_json::Value> = registry()
        .iter()
        .map(|id| {
            serde_json::json!({
                "name": id.name,
                "citation": id.citation,
                "modulus": id.modulus,
                "order": id.default_order,
                "lhs": id.lhs,
                "rhs": id.rhs,
            })
        })
        .collect();
    serde_json::json!({ "schema": "qcong-registry/1", "identities": entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_passes_at_default_order() {
        let reports = verify_all(None);
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.to_string())
            .collect();
        for r in &reports {
            eprintln!("{r}");
        }
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn level_28_identity_starts_at_q_minus_20() {
        // The prefactor contributes q^-20 against B(2) = 1; on the right only
        // Z X^5 reaches q^-5 q^-15, with coefficient 1.
        let r = find("b_7n_plus_2_modular_basis").unwrap().verify(Some(20));
        assert!(r.passed);
        assert_eq!((r.lhs_valuation, r.rhs_valuation), (Some(-20), Some(-20)));
    }

    #[test]
    fn registry_is_large_and_uniquely_named() {
        let ids = registry();
        assert!(ids.len() >= 30);
        let mut names: Vec<&str> = ids.iter().map(|i| i.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), ids.len());
        for t in MUTATION_TARGETS {
            assert!(find(t).is_some(), "{t}");
        }
    }

    #[test]
    fn perturbation_is_reported_at_its_exponent() {
        let id = find("b_3n_plus_2").unwrap();
        let r = id.perturbed(40, 3).verify(Some(60));
        assert!(!r.passed);
        assert_eq!(r.mismatch.unwrap().exponent, 40);
    }

    #[test]
    fn export_lists_every_entry() {
        let doc = registry_json();
        assert_eq!(
            doc["identities"].as_array().unwrap().len(),
            registry().len()
        );
        let first: IdentitySpec = serde_json::from_value(serde_json::json!({
            "name": doc["identities"][0]["name"],
            "citation": doc["identities"][0]["citation"],
            "lhs": doc["identities"][0]["lhs"],
            "rhs": doc["identities"][0]["rhs"],
            "modulus": doc["identities"][0]["modulus"],
            "default_order": doc["identities"][0]["order"],
        }))
        .unwrap();
        assert_eq!(first, registry()[0]);
    }
}
