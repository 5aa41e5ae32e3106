use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::notation::parse_quotient;
use crate::series::{CoefficientRing, LaurentSeries, Result, SeriesError};
use crate::special::{self, BilateralSumSpec, FQuotientSpec};

/// Series with a closed-form constructor of their own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum NamedSeries {
    /// The cubic theta function.
    Alpha,
    /// The level 12 continued fraction `h(q)`.
    H,
    /// `1 / h(q)`.
    HInv,
    Bilateral {
        spec: BilateralSumSpec,
    },
}

/// An expression over q-series, evaluated to a truncated Laurent series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum SeriesExpr {
    FQuot {
        spec: FQuotientSpec,
    },
    Named {
        series: NamedSeries,
    },
    Add {
        terms: Vec<SeriesExpr>,
    },
    Mul {
        factors: Vec<SeriesExpr>,
    },
    Pow {
        base: Box<SeriesExpr>,
        exponent: i64,
    },
    Scale {
        factor: i64,
        inner: Box<SeriesExpr>,
    },
    Shift {
        by: i64,
        inner: Box<SeriesExpr>,
    },
    Subst {
        k: u32,
        inner: Box<SeriesExpr>,
    },
    Dissect {
        m: u32,
        j: u32,
        inner: Box<SeriesExpr>,
    },
    Literal {
        value: i64,
    },
}

impl SeriesExpr {
    pub fn fquot(spec: FQuotientSpec) -> Self {
        SeriesExpr::FQuot { spec }
    }

    /// Parse f-notation such as `3*q*f2^6/(f1^3*f4^11)`.
    ///
    /// Panics on malformed input; meant for literals written in code.
    pub fn notation(text: &str) -> Self {
        let parsed = parse_quotient(text).unwrap_or_else(|e| panic!("{}", e.render(text)));
        let base = SeriesExpr::fquot(parsed.quotient);
        if parsed.scalar == 1 {
            base
        } else {
            base.scale(parsed.scalar)
        }
    }

    pub fn alpha() -> Self {
        SeriesExpr::Named {
            series: NamedSeries::Alpha,
        }
    }

    pub fn h() -> Self {
        SeriesExpr::Named {
            series: NamedSeries::H,
        }
    }

    pub fn h_inv() -> Self {
        SeriesExpr::Named {
            series: NamedSeries::HInv,
        }
    }

    pub fn bilateral(spec: BilateralSumSpec) -> Self {
        SeriesExpr::Named {
            series: NamedSeries::Bilateral { spec },
        }
    }

    pub fn literal(value: i64) -> Self {
        SeriesExpr::Literal { value }
    }

    pub fn sum(terms: Vec<SeriesExpr>) -> Self {
        SeriesExpr::Add { terms }
    }

    pub fn product(factors: Vec<SeriesExpr>) -> Self {
        SeriesExpr::Mul { factors }
    }

    pub fn plus(self, other: SeriesExpr) -> Self {
        match self {
            SeriesExpr::Add { mut terms } => {
                terms.push(other);
                SeriesExpr::Add { terms }
            }
            s => SeriesExpr::sum(vec![s, other]),
        }
    }

    pub fn minus(self, other: SeriesExpr) -> Self {
        self.plus(other.scale(-1))
    }

    pub fn times(self, other: SeriesExpr) -> Self {
        match self {
            SeriesExpr::Mul { mut factors } => {
                factors.push(other);
                SeriesExpr::Mul { factors }
            }
            s => SeriesExpr::product(vec![s, other]),
        }
    }

    pub fn pow(self, exponent: i64) -> Self {
        SeriesExpr::Pow {
            base: Box::new(self),
            exponent,
        }
    }

    pub fn scale(self, factor: i64) -> Self {
        SeriesExpr::Scale {
            factor,
            inner: Box::new(self),
        }
    }

    pub fn shift(self, by: i64) -> Self {
        SeriesExpr::Shift {
            by,
            inner: Box::new(self),
        }
    }

    pub fn subst(self, k: u32) -> Self {
        SeriesExpr::Subst {
            k,
            inner: Box::new(self),
        }
    }

    pub fn dissect(self, m: u32, j: u32) -> Self {
        SeriesExpr::Dissect {
            m,
            j,
            inner: Box::new(self),
        }
    }

    /// Evaluate through `q^order` (coefficients above are discarded).
    pub fn evaluate(&self, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
        let s = eval(self, order, ring)?;
        if s.known_through() < order {
            return Err(SeriesError::InsufficientPrecision {
                needed: order,
                known: s.known_through(),
            });
        }
        Ok(s.truncate(order))
    }
}

/// Lower bound on the stored valuation of `eval(e, t, ring)` for any `t`.
fn valuation_floor(e: &SeriesExpr, ring: CoefficientRing) -> Result<i64> {
    Ok(match e {
        SeriesExpr::FQuot { spec } => spec.qshift(),
        SeriesExpr::Named { series } => match series {
            NamedSeries::Alpha => 0,
            NamedSeries::H => 0,
            NamedSeries::HInv => -1,
            NamedSeries::Bilateral { spec } => spec.min_exponent().min(0),
        },
        SeriesExpr::Literal { .. } => 0,
        SeriesExpr::Add { terms } => {
            let mut lo = i64::MAX;
            for t in terms {
                lo = lo.min(valuation_floor(t, ring)?);
            }
            if terms.is_empty() {
                0
            } else {
                lo
            }
        }
        SeriesExpr::Mul { factors } => {
            let mut total = 0;
            for f in factors {
                total += valuation_floor(f, ring)?;
            }
            total
        }
        SeriesExpr::Pow { base, exponent } => match *exponent {
            0 => 0,
            e if e > 0 => e * valuation_floor(base, ring)?,
            e => -e.abs() * true_valuation(base, ring)?,
        },
        SeriesExpr::Scale { inner, .. } => valuation_floor(inner, ring)?,
        SeriesExpr::Shift { by, inner } => valuation_floor(inner, ring)? + by,
        SeriesExpr::Subst { k, inner } => valuation_floor(inner, ring)? * *k as i64,
        SeriesExpr::Dissect { .. } => 0,
    })
}

/// Exact valuation of `e`, found by expanding a growing window until a
/// nonzero coefficient appears.
fn true_valuation(e: &SeriesExpr, ring: CoefficientRing) -> Result<i64> {
    let floor = valuation_floor(e, ring)?;
    let mut probe = 16;
    loop {
        let s = eval(e, floor + probe, ring)?.normalize();
        if !s.is_zero_on_window() {
            return Ok(s.valuation());
        }
        if probe > 1 << 14 {
            return Err(SeriesError::ZeroSeries);
        }
        probe *= 2;
    }
}

fn eval(e: &SeriesExpr, t: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    match e {
        SeriesExpr::FQuot { spec } => special::fquotient(spec, t.max(spec.qshift()), ring),
        SeriesExpr::Named { series } => match series {
            NamedSeries::Alpha => special::cubic_theta_alpha(t.max(0), ring),
            NamedSeries::H => special::h_level12(t.max(1), ring),
            NamedSeries::HInv => special::h_level12(t.max(-1) + 2, ring)?.invert(),
            NamedSeries::Bilateral { spec } => special::bilateral(spec, t.max(0), ring),
        },
        SeriesExpr::Literal { value } => Ok(LaurentSeries::monomial(ring, *value, 0, t.max(0))),
        SeriesExpr::Add { terms } => {
            let Some((first, rest)) = terms.split_first() else {
                return Ok(LaurentSeries::zero(ring, 0, t.max(0)));
            };
            let mut acc = eval(first, t, ring)?;
            for term in rest {
                acc = acc.add(&eval(term, t, ring)?)?;
            }
            Ok(acc)
        }
        SeriesExpr::Mul { factors } => {
            let floors = factors
                .iter()
                .map(|f| valuation_floor(f, ring))
                .collect::<Result<Vec<_>>>()?;
            let total: i64 = floors.iter().sum();
            let mut parts = factors
                .iter()
                .zip(&floors)
                .map(|(f, lo)| eval(f, t - (total - lo), ring));
            let Some(first) = parts.next() else {
                return Ok(LaurentSeries::one(ring, t.max(0)));
            };
            let mut acc = first?;
            for part in parts {
                acc = acc.mul(&part?)?;
            }
            Ok(acc)
        }
        SeriesExpr::Pow { base, exponent } => match *exponent {
            0 => Ok(LaurentSeries::one(ring, t.max(0))),
            k if k > 0 => {
                let lo = valuation_floor(base, ring)?;
                eval(base, t - (k - 1) * lo, ring)?.pow(k)
            }
            k => {
                let v = true_valuation(base, ring)?;
                eval(base, t + (k.abs() + 1) * v, ring)?.pow(k)
            }
        },
        SeriesExpr::Scale { factor, inner } => {
            Ok(eval(inner, t, ring)?.scale(&BigInt::from(*factor)))
        }
        SeriesExpr::Shift { by, inner } => Ok(eval(inner, t - by, ring)?.shift(*by)),
        SeriesExpr::Subst { k, inner } => {
            if *k == 0 {
                return Err(SeriesError::InvalidArgument(
                    "substitution factor must be positive".into(),
                ));
            }
            eval(inner, t.div_euclid(*k as i64), ring)?.substitute(*k)
        }
        SeriesExpr::Dissect { m, j, inner } => {
            if *m == 0 {
                return Err(SeriesError::InvalidArgument(
                    "dissection modulus must be positive".into(),
                ));
            }
            eval(inner, *m as i64 * t.max(0) + *j as i64, ring)?.dissect(*m, *j)
        }
    }
}
