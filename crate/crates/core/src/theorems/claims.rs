use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Result, TheoremError};
use crate::special::{quadratic_bounds, KWeight};

/// Theorem identifiers accepted by [`theorem_claims`].
pub const THEOREM_NAMES: [&str; 7] = [
    "thm1.1", "thm1.2", "thm1.3", "thm1.4", "thm1.5", "thm1.6", "thm1.7",
];

/// `arg(n, k) = n_coeff * n + offset - (k_quad * k^2 + k_lin * k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgForm {
    pub n_coeff: i64,
    pub offset: i64,
    pub k_quad: i64,
    pub k_lin: i64,
}

impl ArgForm {
    pub fn at(&self, n: i64, k: i64) -> i64 {
        self.n_coeff * n + self.offset - (self.k_quad * k * k + self.k_lin * k)
    }

    /// Every `k` with `arg(n, k) >= 0`, ascending.
    pub fn k_range(&self, n: i64) -> Vec<i64> {
        let base = self.n_coeff * n + self.offset;
        if self.k_quad == 0 {
            return if base >= 0 { vec![0] } else { vec![] };
        }
        let (lo, hi) = quadratic_bounds(self.k_quad, self.k_lin, -base);
        (lo..=hi).filter(|&k| self.at(n, k) >= 0).collect()
    }
}

/// How the `k`-terms are weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimWeight {
    /// No sum: only `k = 0` with weight 1.
    Single,
    Sum(KWeight),
}

impl ClaimWeight {
    fn at(self, k: i64) -> i64 {
        match self {
            ClaimWeight::Single => 1,
            ClaimWeight::Sum(w) => w.at(k),
        }
    }
}

/// One parameter choice of a claim family, with its argument form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimInstance {
    pub params: Vec<(String, i64)>,
    pub form: ArgForm,
}

/// `sum_k w(k) B(arg(n, k)) ≡ 0 (mod modulus)` for every instance and
/// `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClaim {
    pub name: String,
    pub theorem: String,
    pub modulus: u64,
    pub weight: ClaimWeight,
    pub instances: Vec<ClaimInstance>,
    pub n_max: u64,
    /// Caveats about the finite sample, printed with the report.
    pub note: Option<String>,
}

impl CongruenceClaim {
    pub fn max_argument(&self) -> usize {
        self.instances
            .iter()
            .map(|inst| {
                inst.form.n_coeff * self.n_max as i64 + inst.form.offset + self.k_extra(&inst.form)
            })
            .max()
            .unwrap_or(0)
            .max(0) as usize
    }

    /// Largest increase of the argument over `k = 0` (positive only when the
    /// quadratic in `k` dips below zero).
    fn k_extra(&self, form: &ArgForm) -> i64 {
        match self.weight {
            ClaimWeight::Single => 0,
            ClaimWeight::Sum(_) => {
                let (lo, hi) = quadratic_bounds(form.k_quad, form.k_lin, 0);
                (lo..=hi)
                    .map(|k| -(form.k_quad * k * k + form.k_lin * k))
                    .max()
                    .unwrap_or(0)
                    .max(0)
            }
        }
    }

    /// `(k, arg)` for every term with a nonnegative argument.
    fn live_terms(&self, form: &ArgForm, n: i64) -> impl Iterator<Item = (i64, i64)> + '_ {
        let ks = match self.weight {
            ClaimWeight::Single => vec![0],
            ClaimWeight::Sum(_) => form.k_range(n),
        };
        let form = *form;
        ks.into_iter()
            .map(move |k| (k, form.at(n, k)))
            .filter(|&(_, arg)| arg >= 0)
    }

    fn sum_at(&self, form: &ArgForm, n: i64, table: &[BigInt]) -> BigInt {
        self.live_terms(form, n)
            .map(|(k, arg)| &table[arg as usize] * self.weight.at(k))
            .sum()
    }

    fn terms(&self, form: &ArgForm, n: i64, table: &[BigInt]) -> Vec<TermRecord> {
        self.live_terms(form, n)
            .map(|(k, arg)| TermRecord {
                k,
                arg,
                b: table[arg as usize].to_string(),
                weight: self.weight.at(k),
            })
            .collect()
    }

    /// The full term breakdown of one sum.
    pub fn evaluate(
        &self,
        instance: &ClaimInstance,
        n: u64,
        table: &[BigInt],
    ) -> Result<InstanceResult> {
        let needed = self.max_argument();
        if needed >= table.len() {
            return Err(TheoremError::TableTooSmall {
                needed,
                available: table.len().saturating_sub(1),
            });
        }
        let n = n as i64;
        let sum = self.sum_at(&instance.form, n, table);
        let pass = sum.mod_floor(&BigInt::from(self.modulus)).is_zero();
        Ok(InstanceResult {
            claim: self.name.clone(),
            params: instance.params.clone(),
            n: n as u64,
            k_terms: self.terms(&instance.form, n, table),
            sum: sum.to_string(),
            modulus: self.modulus,
            pass,
        })
    }

    /// Check every instance and `n`, in parallel. Failures are listed in
    /// parameter order with their full term breakdown.
    pub fn verify(&self, table: &[BigInt]) -> Result<ClaimReport> {
        let needed = self.max_argument();
        if needed >= table.len() {
            return Err(TheoremError::TableTooSmall {
                needed,
                available: table.len().saturating_sub(1),
            });
        }
        let modulus = BigInt::from(self.modulus);
        let cases: Vec<(&ClaimInstance, u64)> = self
            .instances
            .iter()
            .flat_map(|inst| (0..=self.n_max).map(move |n| (inst, n)))
            .collect();
        let failing: Vec<(&ClaimInstance, u64)> = cases
            .par_iter()
            .filter(|&&(inst, n)| {
                !self
                    .sum_at(&inst.form, n as i64, table)
                    .mod_floor(&modulus)
                    .is_zero()
            })
            .copied()
            .collect();
        let failures = failing
            .into_iter()
            .map(|(inst, n)| self.evaluate(inst, n, table))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClaimReport {
            claim: self.name.clone(),
            theorem: self.theorem.clone(),
            modulus: self.modulus,
            checked: cases.len(),
            max_argument: needed,
            passed: failures.is_empty(),
            failures,
            note: self.note.clone(),
        })
    }
}

/// One term `weight * B(arg)` of a sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub k: i64,
    pub arg: i64,
    #[serde(rename = "B")]
    pub b: String,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub claim: String,
    pub params: Vec<(String, i64)>,
    pub n: u64,
    pub k_terms: Vec<TermRecord>,
    pub sum: String,
    pub modulus: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub theorem: String,
    pub modulus: u64,
    /// Number of `(instance, n)` sums evaluated.
    pub checked: usize,
    pub max_argument: usize,
    pub passed: bool,
    pub failures: Vec<InstanceResult>,
    pub note: Option<String>,
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} {} (mod {}): {} sums, B arguments up to {}",
            self.theorem, self.claim, self.modulus, self.checked, self.max_argument
        )?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        for fail in &self.failures {
            let params: Vec<String> = fail
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(
                f,
                "\n  n={} {}: sum {} =",
                fail.n,
                params.join(" "),
                fail.sum
            )?;
            for t in &fail.k_terms {
                write!(f, " ({})*B({})", t.weight, t.arg)?;
            }
        }
        Ok(())
    }
}

/// Defaults for the finite ranges over which theorems are checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremDefaults {
    pub thm1_1_n_max: u64,
    pub thm1_2_n_max: u64,
    pub thm1_3_n_max: u64,
    pub thm1_4_primes: Vec<u64>,
    pub thm1_4_n_max: u64,
    pub thm1_5_primes: Vec<u64>,
    pub thm1_5_n_max: u64,
    pub thm1_6_n_max: u64,
    pub thm1_7_first_n_max: u64,
    pub thm1_7_second_n_max: u64,
}

impl Default for TheoremDefaults {
    fn default() -> Self {
        TheoremDefaults {
            thm1_1_n_max: 2000,
            thm1_2_n_max: 400,
            thm1_3_n_max: 300,
            thm1_4_primes: vec![7, 11, 19, 23],
            thm1_4_n_max: 1,
            thm1_5_primes: vec![7, 11, 19, 23],
            thm1_5_n_max: 2,
            thm1_6_n_max: 150,
            thm1_7_first_n_max: 150,
            thm1_7_second_n_max: 25,
        }
    }
}

fn single(name: &str, theorem: &str, a: i64, r: i64, modulus: u64, n_max: u64) -> CongruenceClaim {
    CongruenceClaim {
        name: name.to_string(),
        theorem: theorem.to_string(),
        modulus,
        weight: ClaimWeight::Single,
        instances: vec![ClaimInstance {
            params: vec![],
            form: ArgForm {
                n_coeff: a,
                offset: r,
                k_quad: 0,
                k_lin: 0,
            },
        }],
        n_max,
        note: None,
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn check_primes(primes: &[u64], admissible: impl Fn(u64) -> bool, rule: &str) -> Result<()> {
    match primes.iter().find(|&&p| !is_prime(p) || !admissible(p)) {
        Some(p) => Err(TheoremError::InvalidParameter(format!(
            "{p} is not a prime with {rule}"
        ))),
        None if primes.is_empty() => Err(TheoremError::InvalidParameter("no primes given".into())),
        None => Ok(()),
    }
}

/// Instances over `p` and `r in 1..p`, with `arg = s p^2 n + s p r + c(p) - 6k(3k+1)`.
fn prime_family(primes: &[u64], s: i64, constant: impl Fn(i64) -> i64) -> Vec<ClaimInstance> {
    let mut out = Vec::new();
    for &p in primes {
        let p = p as i64;
        for r in 1..p {
            out.push(ClaimInstance {
                params: vec![("p".into(), p), ("r".into(), r)],
                form: ArgForm {
                    n_coeff: s * p * p,
                    offset: s * p * r + constant(p),
                    k_quad: 18,
                    k_lin: 6,
                },
            });
        }
    }
    out
}

fn sample_note(primes: &[u64]) -> Option<String> {
    let list: Vec<String> = primes.iter().map(u64::to_string).collect();
    Some(format!(
        "sampled primes {{{}}}; the statement covers infinitely many",
        list.join(", ")
    ))
}

/// Claims making up one theorem, over the ranges in `d`.
pub fn theorem_claims(name: &str, d: &TheoremDefaults) -> Result<Vec<CongruenceClaim>> {
    let claims = match name {
        "thm1.1" => vec![
            single("B(2n+1)", name, 2, 1, 2, d.thm1_1_n_max),
            single("B(5n+4)", name, 5, 4, 5, d.thm1_1_n_max),
        ],
        "thm1.2" => vec![single("B(27n+16)", name, 27, 16, 3, d.thm1_2_n_max)],
        "thm1.3" => vec![CongruenceClaim {
            name: "C(3n+j), j in {1,2}".into(),
            theorem: name.into(),
            modulus: 3,
            weight: ClaimWeight::Sum(KWeight::AlternatingSign),
            instances: [1, 2]
                .into_iter()
                .map(|j| ClaimInstance {
                    params: vec![("j".into(), j)],
                    form: ArgForm {
                        n_coeff: 9,
                        offset: 3 * j + 2,
                        k_quad: 18,
                        k_lin: 6,
                    },
                })
                .collect(),
            n_max: d.thm1_3_n_max,
            note: None,
        }],
        "thm1.4" => {
            check_primes(
                &d.thm1_4_primes,
                |p| p >= 5 && p % 4 == 3,
                "p ≡ 3 (mod 4), p >= 5",
            )?;
            vec![CongruenceClaim {
                name: "C(3p(pn+r) + 3(p^2-1)/4)".into(),
                theorem: name.into(),
                modulus: 3,
                weight: ClaimWeight::Sum(KWeight::AlternatingSign),
                instances: prime_family(&d.thm1_4_primes, 9, |p| {
                    assert_eq!((9 * (p * p - 1)) % 4, 0);
                    9 * (p * p - 1) / 4 + 2
                }),
                n_max: d.thm1_4_n_max,
                note: sample_note(&d.thm1_4_primes),
            }]
        }
        "thm1.5" => {
            check_primes(
                &d.thm1_5_primes,
                |p| p % 12 == 7 || p % 12 == 11,
                "p ≡ 7, 11 (mod 12)",
            )?;
            vec![CongruenceClaim {
                name: "D(p(pn+r) + 5(p^2-1)/12)".into(),
                theorem: name.into(),
                modulus: 9,
                weight: ClaimWeight::Sum(KWeight::AlternatingSign),
                instances: prime_family(&d.thm1_5_primes, 3, |p| {
                    assert_eq!((5 * (p * p - 1)) % 4, 0);
                    5 * (p * p - 1) / 4 + 1
                }),
                n_max: d.thm1_5_n_max,
                note: sample_note(&d.thm1_5_primes),
            }]
        }
        "thm1.6" => vec![CongruenceClaim {
            name: "E(3n+2)".into(),
            theorem: name.into(),
            modulus: 9,
            weight: ClaimWeight::Sum(KWeight::AlternatingThreeKPlusOne),
            instances: vec![ClaimInstance {
                params: vec![],
                form: ArgForm {
                    n_coeff: 81,
                    offset: 70,
                    k_quad: 162,
                    k_lin: 108,
                },
            }],
            n_max: d.thm1_6_n_max,
            note: None,
        }],
        "thm1.7" => {
            let family = |n_coeff: i64, step: i64, base: i64| -> Vec<ClaimInstance> {
                [3, 4, 6]
                    .into_iter()
                    .map(|j| ClaimInstance {
                        params: vec![("j".into(), j)],
                        form: ArgForm {
                            n_coeff,
                            offset: step * j + base,
                            k_quad: 21,
                            k_lin: 7,
                        },
                    })
                    .collect()
            };
            vec![
                CongruenceClaim {
                    name: "F(7n+j), j in {3,4,6}".into(),
                    theorem: name.into(),
                    modulus: 7,
                    weight: ClaimWeight::Sum(KWeight::SixKPlusOne),
                    instances: family(49, 7, 2),
                    n_max: d.thm1_7_first_n_max,
                    note: None,
                },
                CongruenceClaim {
                    name: "F(49n+7j+2), j in {3,4,6}".into(),
                    theorem: name.into(),
                    modulus: 7,
                    weight: ClaimWeight::Sum(KWeight::SixKPlusOne),
                    instances: family(343, 49, 16),
                    n_max: d.thm1_7_second_n_max,
                    note: None,
                },
            ]
        }
        _ => {
            return Err(TheoremError::UnknownTheorem {
                name: name.to_string(),
            })
        }
    };
    Ok(claims)
}

/// The weighted and simple claim families beyond the parity and mod-5
/// progressions: seven families in all.
pub fn default_claims() -> Vec<CongruenceClaim> {
    let d = TheoremDefaults::default();
    THEOREM_NAMES[1..]
        .iter()
        .flat_map(|name| theorem_claims(name, &d).expect("defaults are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::b_table;
    use proptest::prelude::*;

    fn claim(name: &str) -> Vec<CongruenceClaim> {
        theorem_claims(name, &TheoremDefaults::default()).unwrap()
    }

    #[test]
    fn seven_default_families() {
        assert_eq!(default_claims().len(), 7);
    }

    #[test]
    fn thm13_first_sum_has_one_term() {
        let c = &claim("thm1.3")[0];
        let t = b_table(c.max_argument());
        let r = c.evaluate(&c.instances[0], 0, &t).unwrap();
        assert_eq!(r.k_terms.len(), 1);
        assert_eq!((r.k_terms[0].k, r.k_terms[0].arg), (0, 5));
        assert_eq!(r.sum, "6");
        assert!(r.pass);
    }

    #[test]
    fn thm16_first_sum_terms() {
        let c = &claim("thm1.6")[0];
        let t = b_table(c.max_argument());
        let r = c.evaluate(&c.instances[0], 0, &t).unwrap();
        let shape: Vec<(i64, i64, i64)> =
            r.k_terms.iter().map(|x| (x.k, x.arg, x.weight)).collect();
        assert_eq!(shape, vec![(-1, 16, 2), (0, 70, 1)]);
        let expected: BigInt = &t[70] + &t[16] * 2;
        assert_eq!(r.sum, expected.to_string());
    }

    #[test]
    fn thm17_first_sum_terms() {
        // Among k in -2..=1 only k = -1 (7k(3k+1) = 14) and k = 0 keep 23 - 7k(3k+1) >= 0.
        let c = &claim("thm1.7")[0];
        let t = b_table(c.max_argument());
        let r = c.evaluate(&c.instances[0], 0, &t).unwrap();
        let shape: Vec<(i64, i64, i64)> =
            r.k_terms.iter().map(|x| (x.k, x.arg, x.weight)).collect();
        assert_eq!(shape, vec![(-1, 9, -5), (0, 23, 1)]);
    }

    #[test]
    fn max_argument_matches_extremes() {
        assert_eq!(claim("thm1.6")[0].max_argument(), 81 * 150 + 70);
        assert_eq!(claim("thm1.2")[0].max_argument(), 27 * 400 + 16);
        // p = 23, r = 22, n = 1
        assert_eq!(
            claim("thm1.4")[0].max_argument(),
            9 * 529 + 9 * 23 * 22 + 9 * 528 / 4 + 2
        );
    }

    #[test]
    fn short_table_reports_needed_size() {
        let c = &claim("thm1.6")[0];
        let t = b_table(100);
        assert_eq!(
            c.verify(&t),
            Err(TheoremError::TableTooSmall {
                needed: 12220,
                available: 100
            })
        );
    }

    #[test]
    fn invalid_primes_are_rejected() {
        let mut d = TheoremDefaults {
            thm1_4_primes: vec![13],
            ..TheoremDefaults::default()
        };
        assert!(theorem_claims("thm1.4", &d).is_err());
        d.thm1_4_primes = vec![15];
        assert!(theorem_claims("thm1.4", &d).is_err());
        d.thm1_5_primes = vec![5];
        assert!(theorem_claims("thm1.5", &d).is_err());
        assert!(matches!(
            theorem_claims("thm9.9", &d),
            Err(TheoremError::UnknownTheorem { .. })
        ));
    }

    #[test]
    fn wrong_modulus_reports_breakdown() {
        let mut c = claim("thm1.3")[0].clone();
        c.modulus = 9;
        c.n_max = 20;
        let t = b_table(c.max_argument());
        let r = c.verify(&t).unwrap();
        assert!(!r.passed);
        let first = &r.failures[0];
        let recomputed: BigInt = first
            .k_terms
            .iter()
            .map(|x| x.b.parse::<BigInt>().unwrap() * x.weight)
            .sum();
        assert_eq!(recomputed.to_string(), first.sum);
    }

    proptest! {
        #[test]
        fn k_range_covers_every_nonnegative_argument(
            n_coeff in 1i64..400, offset in 0i64..400, k_quad in 1i64..200, k_lin in -200i64..200, n in 0i64..200,
        ) {
            let form = ArgForm { n_coeff, offset, k_quad, k_lin };
            let ks = form.k_range(n);
            // A much wider brute-force window finds nothing more.
            let brute: Vec<i64> = (-2000..=2000).filter(|&k| form.at(n, k) >= 0).collect();
            prop_assert_eq!(ks, brute);
        }
    }
}
