//! Truncated formal Laurent series in one variable `q`.
//!
//! A [`LaurentSeries`] stores the exact coefficients of `q^v, ..., q^T`.
//! Everything below `q^v` is zero and everything above `q^T` is unknown.
//! Every operation propagates the known window pessimistically, so a
//! coefficient that is reported is always exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Arith, Exact, Modular};

/// Largest modulus accepted by [`CoefficientRing::IntegersMod`] (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("incompatible rings: {0} and {1}")]
    IncompatibleRings(CoefficientRing, CoefficientRing),
    #[error("not invertible: leading coefficient {0} is not a unit in {1}")]
    NotInvertible(BigInt, CoefficientRing),
    #[error("not invertible: series is zero on its known window")]
    ZeroSeries,
    #[error("dissection requires ordinary series (valuation {0} < 0)")]
    DissectionRequiresOrdinary(i64),
    #[error(
        "insufficient precision: need coefficients through q^{needed}, known through q^{known}"
    )]
    InsufficientPrecision { needed: i64, known: i64 },
    #[error("invalid modulus {0}: must satisfy 2 <= m < 2^31")]
    InvalidModulus(u64),
    #[error("cannot reduce {from} to {to}")]
    InvalidReduction {
        from: CoefficientRing,
        to: CoefficientRing,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;

/// The coefficient domain of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientRing {
    Integers,
    IntegersMod(u32),
}

impl CoefficientRing {
    pub fn modular(m: u64) -> Result<Self> {
        if (2..MAX_MODULUS).contains(&m) {
            Ok(CoefficientRing::IntegersMod(m as u32))
        } else {
            Err(SeriesError::InvalidModulus(m))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::IntegersMod(m) => Some(*m as u64),
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{m}Z"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Exact(Vec<BigInt>),
    Modular(u32, Vec<u64>),
}

impl Coeffs {
    fn len(&self) -> usize {
        match self {
            Coeffs::Exact(v) => v.len(),
            Coeffs::Modular(_, v) => v.len(),
        }
    }

    fn ring(&self) -> CoefficientRing {
        match self {
            Coeffs::Exact(_) => CoefficientRing::Integers,
            Coeffs::Modular(m, _) => CoefficientRing::IntegersMod(*m),
        }
    }
}

/// Apply a generic kernel to the coefficient vector of one series.
macro_rules! map_coeffs {
    ($coeffs:expr, |$ar:ident, $v:ident| $body:expr) => {
        match $coeffs {
            Coeffs::Exact($v) => {
                let $ar = Exact;
                Coeffs::Exact($body)
            }
            Coeffs::Modular(m, $v) => {
                let $ar = Modular(*m as u64);
                Coeffs::Modular(*m, $body)
            }
        }
    };
}

/// Apply a generic kernel to two series over the same ring.
macro_rules! zip_coeffs {
    ($a:expr, $b:expr, |$ar:ident, $x:ident, $y:ident| $body:expr) => {
        match (&$a.coeffs, &$b.coeffs) {
            (Coeffs::Exact($x), Coeffs::Exact($y)) => {
                let $ar = Exact;
                Coeffs::Exact($body)
            }
            (Coeffs::Modular(m, $x), Coeffs::Modular(n, $y)) if m == n => {
                let $ar = Modular(*m as u64);
                Coeffs::Modular(*m, $body)
            }
            _ => return Err(SeriesError::IncompatibleRings($a.ring(), $b.ring())),
        }
    };
}

/// Re-window `c` (valuation `from_v`) onto `[new_v, new_v + len)`.
///
/// Entries below `from_v` become zero; the caller guarantees the upper end
/// does not exceed the known window.
fn rewindow<A: Arith>(ar: &A, c: &[A::Elem], from_v: i64, new_v: i64, len: usize) -> Vec<A::Elem> {
    (0..len as i64)
        .map(|i| {
            let e = new_v + i;
            if e < from_v {
                ar.zero()
            } else {
                c[(e - from_v) as usize].clone()
            }
        })
        .collect()
}

fn window_len(v: i64, t: i64) -> usize {
    (t - v + 1).max(0) as usize
}

/// A truncated formal Laurent series with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Coeffs,
}

impl LaurentSeries {
    /// Series with coefficients `coeffs[i]` at `q^(valuation + i)`.
    pub fn from_coeffs<I>(ring: CoefficientRing, valuation: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let coeffs = match ring {
            CoefficientRing::Integers => {
                Coeffs::Exact(coeffs.into_iter().map(BigInt::from).collect())
            }
            CoefficientRing::IntegersMod(m) => {
                let ar = Modular(m as u64);
                Coeffs::Modular(m, coeffs.into_iter().map(|x| ar.lift_i64(x)).collect())
            }
        };
        LaurentSeries { valuation, coeffs }
    }

    pub fn from_bigints(ring: CoefficientRing, valuation: i64, coeffs: &[BigInt]) -> Self {
        let coeffs = match ring {
            CoefficientRing::Integers => Coeffs::Exact(coeffs.to_vec()),
            CoefficientRing::IntegersMod(m) => {
                let ar = Modular(m as u64);
                Coeffs::Modular(m, coeffs.iter().map(|x| ar.lift_bigint(x)).collect())
            }
        };
        LaurentSeries { valuation, coeffs }
    }

    /// The zero series known on `[valuation, known_through]`.
    pub fn zero(ring: CoefficientRing, valuation: i64, known_through: i64) -> Self {
        let len = window_len(valuation, known_through);
        Self::from_coeffs(ring, valuation, std::iter::repeat_n(0, len))
    }

    /// `c * q^e`, known through `known_through`.
    pub fn monomial(ring: CoefficientRing, c: i64, e: i64, known_through: i64) -> Self {
        let len = window_len(e, known_through);
        Self::from_coeffs(ring, e, (0..len).map(|i| if i == 0 { c } else { 0 }))
    }

    /// The constant `1`, known through `known_through` (which must be `>= 0`).
    pub fn one(ring: CoefficientRing, known_through: i64) -> Self {
        Self::monomial(ring, 1, 0, known_through)
    }

    pub fn ring(&self) -> CoefficientRing {
        self.coeffs.ring()
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Highest exponent whose coefficient is known.
    pub fn known_through(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64 - 1
    }

    fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^n` as an exact integer (a residue in `[0, m)` for
    /// modular series).
    pub fn coeff(&self, n: i64) -> Result<BigInt> {
        if n > self.known_through() {
            return Err(SeriesError::InsufficientPrecision {
                needed: n,
                known: self.known_through(),
            });
        }
        if n < self.valuation {
            return Ok(BigInt::zero());
        }
        let i = (n - self.valuation) as usize;
        Ok(match &self.coeffs {
            Coeffs::Exact(v) => v[i].clone(),
            Coeffs::Modular(_, v) => BigInt::from(v[i]),
        })
    }

    /// All known coefficients, `q^v` first.
    pub fn coefficients(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Exact(v) => v.clone(),
            Coeffs::Modular(_, v) => v.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Residues of a modular series, `q^v` first. `None` for exact series.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.coeffs {
            Coeffs::Exact(_) => None,
            Coeffs::Modular(_, v) => Some(v),
        }
    }

    /// `(exponent, coefficient)` for every known exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigInt)> + '_ {
        let v = self.valuation;
        self.coefficients()
            .into_iter()
            .enumerate()
            .map(move |(i, c)| (v + i as i64, c))
    }

    fn is_zero_at(&self, i: usize) -> bool {
        match &self.coeffs {
            Coeffs::Exact(v) => v[i].is_zero(),
            Coeffs::Modular(_, v) => v[i] == 0,
        }
    }

    /// True when every known coefficient is zero.
    pub fn is_zero_on_window(&self) -> bool {
        (0..self.len()).all(|i| self.is_zero_at(i))
    }

    /// Strip leading zero coefficients, raising the valuation. A series that
    /// vanishes on its whole window is returned unchanged.
    pub fn normalize(&self) -> LaurentSeries {
        let Some(first) = (0..self.len()).find(|&i| !self.is_zero_at(i)) else {
            return self.clone();
        };
        if first == 0 {
            return self.clone();
        }
        LaurentSeries {
            valuation: self.valuation + first as i64,
            coeffs: map_coeffs!(&self.coeffs, |_ar, v| v[first..].to_vec()),
        }
    }

    /// Discard coefficients above `q^t`.
    pub fn truncate(&self, t: i64) -> LaurentSeries {
        let len = window_len(self.valuation, t.min(self.known_through()));
        LaurentSeries {
            valuation: self.valuation,
            coeffs: map_coeffs!(&self.coeffs, |_ar, v| v[..len].to_vec()),
        }
    }

    fn check_ring(&self, other: &LaurentSeries) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(SeriesError::IncompatibleRings(self.ring(), other.ring()))
        }
    }

    pub fn add(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_ring(other)?;
        let v = self.valuation.min(other.valuation);
        let t = self.known_through().min(other.known_through());
        let len = window_len(v, t);
        let coeffs = zip_coeffs!(self, other, |ar, x, y| {
            let mut out = rewindow(&ar, x, self.valuation, v, len);
            for (o, b) in out
                .iter_mut()
                .zip(rewindow(&ar, y, other.valuation, v, len))
            {
                ar.add_assign(o, &b);
            }
            out
        });
        Ok(LaurentSeries {
            valuation: v,
            coeffs,
        })
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: map_coeffs!(&self.coeffs, |ar, v| v.iter().map(|x| ar.neg(x)).collect()),
        }
    }

    pub fn sub(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.add(&other.neg())
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: map_coeffs!(&self.coeffs, |ar, v| {
                let c = ar.lift_bigint(c);
                v.iter().map(|x| ar.mul(&c, x)).collect()
            }),
        }
    }

    pub fn mul(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_ring(other)?;
        let (va, vb) = (self.valuation, other.valuation);
        let v = va + vb;
        let t = (self.known_through() + vb).min(other.known_through() + va);
        let len = window_len(v, t);
        let coeffs = zip_coeffs!(self, other, |ar, x, y| arith::mul_truncated(&ar, x, y, len));
        Ok(LaurentSeries {
            valuation: v,
            coeffs,
        })
    }

    /// Multiplicative inverse. The leading coefficient (after
    /// [`normalize`](Self::normalize)) must be a unit of the ring.
    pub fn invert(&self) -> Result<LaurentSeries> {
        let a = self.normalize();
        if a.len() == 0 || a.is_zero_on_window() {
            return Err(SeriesError::ZeroSeries);
        }
        let len = a.len();
        let lead = a.coeff(a.valuation)?;
        let coeffs = match &a.coeffs {
            Coeffs::Exact(v) => arith::invert_truncated(&Exact, v, len).map(Coeffs::Exact),
            Coeffs::Modular(m, v) => {
                arith::invert_truncated(&Modular(*m as u64), v, len).map(|c| Coeffs::Modular(*m, c))
            }
        }
        .ok_or(SeriesError::NotInvertible(lead, a.ring()))?;
        Ok(LaurentSeries {
            valuation: -a.valuation,
            coeffs,
        })
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`invert`](Self::invert).
    pub fn pow(&self, e: i64) -> Result<LaurentSeries> {
        if e == 0 {
            let width = self.known_through() - self.valuation;
            return Ok(LaurentSeries::one(self.ring(), width));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc: Option<LaurentSeries> = None;
        let mut sq = base;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            sq = sq.mul(&sq)?;
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// `q -> q^k`.
    #[allow(clippy::clone_on_copy)]
    pub fn substitute(&self, k: u32) -> Result<LaurentSeries> {
        if k == 0 {
            return Err(SeriesError::InvalidArgument(
                "substitution factor must be positive".into(),
            ));
        }
        let k = k as usize;
        let v = self.valuation * k as i64;
        let len = self.len() * k;
        let coeffs = map_coeffs!(&self.coeffs, |ar, c| {
            let mut out = vec![ar.zero(); len];
            for (i, x) in c.iter().enumerate() {
                out[i * k] = x.clone();
            }
            out
        });
        Ok(LaurentSeries {
            valuation: v,
            coeffs,
        })
    }

    /// Extract residue class `j` modulo `m`: the coefficient of `q^n` in the
    /// result is the coefficient of `q^(m n + j)` here.
    #[allow(clippy::clone_on_copy)]
    pub fn dissect(&self, m: u32, j: u32) -> Result<LaurentSeries> {
        if m == 0 || j >= m {
            return Err(SeriesError::InvalidArgument(format!(
                "dissection needs 0 <= j < m, got m = {m}, j = {j}"
            )));
        }
        if self.valuation < 0 {
            return Err(SeriesError::DissectionRequiresOrdinary(self.valuation));
        }
        let (m, j) = (m as i64, j as i64);
        let t = (self.known_through() - j).div_euclid(m);
        let len = window_len(0, t);
        let v0 = self.valuation;
        let coeffs = map_coeffs!(&self.coeffs, |ar, c| {
            (0..len as i64)
                .map(|n| {
                    let e = m * n + j;
                    if e < v0 {
                        ar.zero()
                    } else {
                        c[(e - v0) as usize].clone()
                    }
                })
                .collect()
        });
        Ok(LaurentSeries {
            valuation: 0,
            coeffs,
        })
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Reduce into `IntegersMod(m)`. Exact series reduce to any modulus; a
    /// modular series only reduces to a divisor of its modulus.
    pub fn reduce_mod(&self, m: u64) -> Result<LaurentSeries> {
        let target = CoefficientRing::modular(m)?;
        let coeffs = match &self.coeffs {
            Coeffs::Exact(v) => {
                let ar = Modular(m);
                Coeffs::Modular(m as u32, v.iter().map(|x| ar.lift_bigint(x)).collect())
            }
            Coeffs::Modular(old, v) if (*old as u64).is_multiple_of(m) => {
                Coeffs::Modular(m as u32, v.iter().map(|x| x % m).collect())
            }
            Coeffs::Modular(..) => {
                return Err(SeriesError::InvalidReduction {
                    from: self.ring(),
                    to: target,
                })
            }
        };
        Ok(LaurentSeries {
            valuation: self.valuation,
            coeffs,
        })
    }

    /// First exponent `e <= t` where the two series differ, with both
    /// coefficients. Both windows must reach `q^t`.
    pub fn first_mismatch(
        &self,
        other: &LaurentSeries,
        t: i64,
    ) -> Result<Option<(i64, BigInt, BigInt)>> {
        self.check_ring(other)?;
        for s in [self, other] {
            if s.known_through() < t {
                return Err(SeriesError::InsufficientPrecision {
                    needed: t,
                    known: s.known_through(),
                });
            }
        }
        let start = self.valuation.min(other.valuation);
        for e in start..=t {
            let (x, y) = (self.coeff(e)?, other.coeff(e)?);
            if x != y {
                return Ok(Some((e, x, y)));
            }
        }
        Ok(None)
    }

    /// Exact equality of all coefficients through `q^t`.
    pub fn eq_through(&self, other: &LaurentSeries, t: i64) -> Result<bool> {
        Ok(self.first_mismatch(other, t)?.is_none())
    }

    /// Multiply in place by `1 + sum c_e q^e` given the sorted sparse tail.
    pub(crate) fn mul_sparse_monic(&mut self, terms: &[(usize, i64)]) {
        self.apply_sparse_monic(terms, false)
    }

    /// Divide in place by `1 + sum c_e q^e` given the sorted sparse tail.
    pub(crate) fn div_sparse_monic(&mut self, terms: &[(usize, i64)]) {
        self.apply_sparse_monic(terms, true)
    }

    fn apply_sparse_monic(&mut self, terms: &[(usize, i64)], divide: bool) {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.first().is_none_or(|t| t.0 > 0));
        match &mut self.coeffs {
            Coeffs::Exact(v) => {
                let ar = Exact;
                let t: Vec<_> = terms.iter().map(|(e, c)| (*e, ar.lift_i64(*c))).collect();
                if divide {
                    arith::div_sparse_monic_in_place(&ar, v, &t)
                } else {
                    arith::mul_sparse_monic_in_place(&ar, v, &t)
                }
            }
            Coeffs::Modular(m, v) => {
                let ar = Modular(*m as u64);
                let t: Vec<_> = terms
                    .iter()
                    .map(|(e, c)| (*e, ar.lift_i64(*c)))
                    .filter(|(_, c)| *c != 0)
                    .collect();
                if divide {
                    arith::div_sparse_monic_in_place(&ar, v, &t)
                } else {
                    arith::mul_sparse_monic_in_place(&ar, v, &t)
                }
            }
        }
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.known_through() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoefficientRing = CoefficientRing::Integers;

    fn s(v: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::from_coeffs(Z, v, c.iter().copied())
    }

    fn ints(x: &LaurentSeries) -> Vec<i64> {
        x.coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn add_cancels_linear_terms() {
        let a = s(0, &[1, 1, 0, 0]);
        let b = s(0, &[1, -1, 0]);
        let c = a.add(&b).unwrap();
        assert_eq!(c.valuation(), 0);
        assert_eq!(c.known_through(), 2);
        assert_eq!(ints(&c), vec![2, 0, 0]);
    }

    #[test]
    fn add_zero_truncates_to_shorter_window() {
        let a = s(0, &(0..80).collect::<Vec<_>>());
        let z = LaurentSeries::zero(Z, 0, 50);
        let c = a.add(&z).unwrap();
        assert_eq!(c, a.truncate(50));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = s(0, &[1, 2]);
        let b = a.reduce_mod(5).unwrap();
        let err = a.add(&b).unwrap_err();
        assert!(err.to_string().contains("incompatible rings"));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn valuations_add_under_multiplication() {
        let u = s(-3, &[1, 4, 2, 0, 0, 0]);
        let w = s(-5, &[1, 0, 7, 0, 0, 0]);
        let p = u.mul(&w).unwrap();
        assert_eq!(p.valuation(), -8);
        // T = min(Ta + vb, Tb + va) = min(2 - 5, 0 - 3)
        assert_eq!(p.known_through(), -3);
    }

    #[test]
    fn geometric_series_inverse() {
        let a = s(0, &[1, -1, 0, 0, 0, 0]);
        assert_eq!(ints(&a.invert().unwrap()), vec![1; 6]);
    }

    #[test]
    fn invert_mod_nine_uses_modular_inverse() {
        let a = LaurentSeries::from_coeffs(CoefficientRing::IntegersMod(9), 0, [2, 1, 0, 0]);
        let b = a.invert().unwrap();
        assert_eq!(b.coeff(0).unwrap(), BigInt::from(5));
        let one = LaurentSeries::one(a.ring(), 3);
        assert!(a.mul(&b).unwrap().eq_through(&one, 3).unwrap());
    }

    #[test]
    fn invert_rejects_non_units_and_zero() {
        assert!(matches!(
            s(0, &[2, 1]).invert(),
            Err(SeriesError::NotInvertible(..))
        ));
        assert!(s(0, &[3, 1])
            .invert()
            .unwrap_err()
            .to_string()
            .contains("not invertible"));
        assert_eq!(s(0, &[0, 0]).invert(), Err(SeriesError::ZeroSeries));
        let m3 = LaurentSeries::from_coeffs(CoefficientRing::IntegersMod(9), 0, [3, 1]);
        assert!(m3.invert().is_err());
    }

    #[test]
    fn invert_of_shifted_series_moves_window() {
        let a = s(2, &[0, 1, 1, 0, 0, 0]); // true valuation 3, known through 7
        let b = a.invert().unwrap();
        assert_eq!(b.valuation(), -3);
        assert_eq!(b.known_through(), 7 - 6);
    }

    #[test]
    fn pow_zero_and_one() {
        let a = s(-2, &[1, 3, 5, 7]);
        assert_eq!(a.pow(1).unwrap(), a);
        let z = a.pow(0).unwrap();
        assert_eq!(z.valuation(), 0);
        assert_eq!(z.known_through(), 3);
        assert_eq!(ints(&z), vec![1, 0, 0, 0]);
    }

    #[test]
    fn negative_power_matches_inverse_power() {
        let a = s(0, &[1, 2, -1, 3, 0, 4, 1, 1]);
        let lhs = a.pow(-3).unwrap();
        let rhs = a.pow(3).unwrap().invert().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_spreads_coefficients() {
        let a = s(0, &[1, 1]);
        let b = a.substitute(3).unwrap();
        assert_eq!(b.known_through(), 5);
        assert_eq!(ints(&b), vec![1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn dissect_small_cases() {
        let a = s(0, &[1, 1, 1]);
        let d = a.dissect(3, 0).unwrap();
        assert_eq!(ints(&d), vec![1]);
        assert_eq!(d.known_through(), 0);
        assert!(matches!(
            s(-1, &[1, 0, 0]).dissect(2, 0),
            Err(SeriesError::DissectionRequiresOrdinary(-1))
        ));
        let err = s(-1, &[1]).dissect(2, 0).unwrap_err();
        assert!(err
            .to_string()
            .contains("dissection requires ordinary series"));
    }

    #[test]
    fn dissect_respects_raised_valuation() {
        let a = s(5, &[7, 8, 9, 10]); // exponents 5..8
        let d = a.dissect(2, 1).unwrap(); // exponents 1, 3, 5, 7
        assert_eq!(ints(&d), vec![0, 0, 7, 9]);
    }

    #[test]
    fn shift_round_trip() {
        let one = LaurentSeries::one(Z, 4);
        let q3 = one.shift(-3);
        assert_eq!(q3.valuation(), -3);
        assert_eq!(q3.shift(3), one);
    }

    #[test]
    fn reduce_mod_three() {
        let a = s(0, &[1, -3, 0, 5]);
        let r = a.reduce_mod(3).unwrap();
        assert_eq!(r.ring(), CoefficientRing::IntegersMod(3));
        assert_eq!(ints(&r), vec![1, 0, 0, 2]);
        assert!(r.reduce_mod(2).is_err());
        let r9 = a.reduce_mod(9).unwrap().reduce_mod(3).unwrap();
        assert_eq!(r9, r);
    }

    #[test]
    fn coeff_window_rules() {
        let a = s(2, &[4, 5]);
        assert_eq!(a.coeff(0).unwrap(), BigInt::zero());
        assert_eq!(a.coeff(3).unwrap(), BigInt::from(5));
        assert!(matches!(
            a.coeff(4),
            Err(SeriesError::InsufficientPrecision {
                needed: 4,
                known: 3
            })
        ));
    }

    #[test]
    fn eq_through_refuses_unknown_coefficients() {
        let a = s(0, &[1, 2, 3]);
        let b = s(0, &[1, 2, 3, 4]);
        assert!(a.eq_through(&b, 2).unwrap());
        assert!(a.eq_through(&b, 3).is_err());
        let c = s(0, &[1, 2, 4, 4]);
        assert_eq!(
            b.first_mismatch(&c, 3).unwrap(),
            Some((2, BigInt::from(3), BigInt::from(4)))
        );
    }

    #[test]
    fn normalize_strips_leading_zeros() {
        let a = s(-2, &[0, 0, 3, 1]);
        let n = a.normalize();
        assert_eq!(n.valuation(), 0);
        assert_eq!(n.known_through(), 1);
        let z = s(0, &[0, 0]);
        assert_eq!(z.normalize(), z);
    }

    #[test]
    fn invalid_moduli_rejected() {
        assert!(CoefficientRing::modular(1).is_err());
        assert!(CoefficientRing::modular(1 << 31).is_err());
        assert!(CoefficientRing::modular((1 << 31) - 1).is_ok());
    }

    #[test]
    fn display_lists_nonzero_terms() {
        let a = s(-1, &[1, 0, -2]);
        assert_eq!(a.to_string(), "1*q^-1 + -2*q + O(q^2)");
    }
}
