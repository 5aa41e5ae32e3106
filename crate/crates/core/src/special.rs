//! Constructors for the named series: Euler products `f_m`, f-quotients,
//! bilateral theta-type sums, the cubic theta function and the level 12
//! continued fraction `h(q)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::{CoefficientRing, LaurentSeries, Result, SeriesError};

/// `q^qshift * prod f_delta^(r_delta)` with `f_m = prod_{n>=1} (1 - q^(m n))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawQuotient", try_from = "RawQuotient")]
pub struct FQuotientSpec {
    factors: BTreeMap<u32, i64>,
    qshift: i64,
}

/// Serialized form: `{"factors": [[delta, exponent], ...], "qshift": s}`.
#[derive(Serialize, Deserialize)]
struct RawQuotient {
    factors: Vec<(u32, i64)>,
    qshift: i64,
}

impl From<FQuotientSpec> for RawQuotient {
    fn from(spec: FQuotientSpec) -> Self {
        RawQuotient {
            factors: spec.factors.into_iter().collect(),
            qshift: spec.qshift,
        }
    }
}

impl TryFrom<RawQuotient> for FQuotientSpec {
    type Error = String;

    fn try_from(raw: RawQuotient) -> std::result::Result<Self, String> {
        if raw.factors.iter().any(|&(d, _)| d == 0) {
            return Err("f_0 is not defined".into());
        }
        Ok(FQuotientSpec::new(&raw.factors, raw.qshift))
    }
}

impl FQuotientSpec {
    /// Builds a quotient from `(delta, exponent)` pairs. Repeated deltas are
    /// merged and zero exponents dropped.
    ///
    /// Panics if some `delta` is zero.
    pub fn new(factors: &[(u32, i64)], qshift: i64) -> Self {
        let mut spec = FQuotientSpec {
            factors: BTreeMap::new(),
            qshift,
        };
        for &(delta, r) in factors {
            spec.push_factor(delta, r);
        }
        spec
    }

    pub(crate) fn push_factor(&mut self, delta: u32, r: i64) {
        assert!(delta > 0, "f_0 is not defined");
        let e = self.factors.entry(delta).or_insert(0);
        *e += r;
        if *e == 0 {
            self.factors.remove(&delta);
        }
    }

    pub fn one() -> Self {
        FQuotientSpec::default()
    }

    pub fn factors(&self) -> &BTreeMap<u32, i64> {
        &self.factors
    }

    pub fn qshift(&self) -> i64 {
        self.qshift
    }

    pub fn with_qshift(mut self, qshift: i64) -> Self {
        self.qshift = qshift;
        self
    }

    /// Product of two quotients.
    pub fn times(&self, other: &FQuotientSpec) -> FQuotientSpec {
        let mut out = self.clone();
        for (&d, &r) in &other.factors {
            out.push_factor(d, r);
        }
        out.qshift += other.qshift;
        out
    }

    pub fn powi(&self, e: i64) -> FQuotientSpec {
        FQuotientSpec {
            factors: self
                .factors
                .iter()
                .filter(|_| e != 0)
                .map(|(&d, &r)| (d, r * e))
                .collect(),
            qshift: self.qshift * e,
        }
    }

    /// Expand through `q^order`.
    pub fn expand(&self, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
        fquotient(self, order, ring)
    }
}

impl fmt::Display for FQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_quotient(1, self))
    }
}

/// Exponents `k(3k+1)/2 <= limit` (k != 0) of Euler's pentagonal expansion,
/// sorted, with signs `(-1)^k`.
pub fn pentagonal_terms(limit: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut k: i64 = 1;
    loop {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let lo = (k * (3 * k - 1) / 2) as usize;
        let hi = (k * (3 * k + 1) / 2) as usize;
        if lo > limit {
            break;
        }
        out.push((lo, sign));
        if hi <= limit {
            out.push((hi, sign));
        }
        k += 1;
    }
    out
}

/// `f_m` through `q^order`, built from the pentagonal number theorem.
pub fn euler_f(m: u32, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    check_order(order)?;
    if m == 0 {
        return Err(SeriesError::InvalidArgument("f_m needs m >= 1".into()));
    }
    let base_order = order / m as i64;
    let mut coeffs = vec![0i64; base_order as usize + 1];
    coeffs[0] = 1;
    for (e, s) in pentagonal_terms(base_order as usize) {
        coeffs[e] = s;
    }
    LaurentSeries::from_coeffs(ring, 0, coeffs)
        .substitute(m)
        .map(|s| s.truncate(order))
}

/// `f_m` through `q^order` from the literal product `prod (1 - q^(m n))`.
pub fn euler_f_product(m: u32, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    check_order(order)?;
    if m == 0 {
        return Err(SeriesError::InvalidArgument("f_m needs m >= 1".into()));
    }
    let mut s = LaurentSeries::one(ring, order);
    let m = m as usize;
    for n in 1..=(order as usize / m) {
        s.mul_sparse_monic(&[(m * n, -1)]);
    }
    Ok(s)
}

/// Expansion of an f-quotient through `q^order` (`order >= qshift`).
pub fn fquotient(spec: &FQuotientSpec, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    let width = order - spec.qshift;
    if width < 0 {
        return Err(SeriesError::InvalidArgument(format!(
            "order {order} is below the quotient's valuation {}",
            spec.qshift
        )));
    }
    let mut s = LaurentSeries::one(ring, width);
    for (&delta, &r) in &spec.factors {
        let terms: Vec<(usize, i64)> = pentagonal_terms(width as usize / delta as usize)
            .into_iter()
            .map(|(e, c)| (e * delta as usize, c))
            .collect();
        for _ in 0..r.unsigned_abs() {
            if r > 0 {
                s.mul_sparse_monic(&terms);
            } else {
                s.div_sparse_monic(&terms);
            }
        }
    }
    Ok(s.shift(spec.qshift))
}

/// Index range of a bilateral sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KRange {
    All,
    NonNegative,
}

/// Sign/weight rules `w(k)` for bilateral sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KWeight {
    /// `1`
    One,
    /// `(-1)^k`
    AlternatingSign,
    /// `2k + 1`
    OddLinear,
    /// `(-1)^k (2k + 1)`
    AlternatingOddLinear,
    /// `(-1)^k (3k + 1)`
    AlternatingThreeKPlusOne,
    /// `6k + 1`
    SixKPlusOne,
    /// `(-1)^(k(k+1)/2)`
    TriangularSign,
}

impl KWeight {
    pub fn at(self, k: i64) -> i64 {
        let alt = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        match self {
            KWeight::One => 1,
            KWeight::AlternatingSign => alt,
            KWeight::OddLinear => 2 * k + 1,
            KWeight::AlternatingOddLinear => alt * (2 * k + 1),
            KWeight::AlternatingThreeKPlusOne => alt * (3 * k + 1),
            KWeight::SixKPlusOne => 6 * k + 1,
            KWeight::TriangularSign => {
                if (k * (k + 1) / 2).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// Integer-valued quadratic `(a k^2 + b k + c) / d` with `a, d > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticExponent {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl QuadraticExponent {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a <= 0 || d <= 0 {
            return Err(SeriesError::InvalidArgument(
                "exponent must be an upward quadratic with positive denominator".into(),
            ));
        }
        let q = QuadraticExponent { a, b, c, d };
        // Integer values at three consecutive points force integrality everywhere.
        if (0..3).any(|k| q.numerator(k) % d != 0) {
            return Err(SeriesError::InvalidArgument(format!(
                "({a}k^2 + {b}k + {c})/{d} is not integer-valued"
            )));
        }
        Ok(q)
    }

    fn numerator(&self, k: i64) -> i64 {
        self.a * k * k + self.b * k + self.c
    }

    pub fn at(&self, k: i64) -> i64 {
        self.numerator(k) / self.d
    }

    /// All `k` in `range` with `at(k) <= limit`, ascending.
    pub fn indices_up_to(&self, limit: i64, range: KRange) -> Vec<i64> {
        let (lo, hi) = quadratic_bounds(self.a, self.b, self.c - limit * self.d);
        let lo = match range {
            KRange::All => lo,
            KRange::NonNegative => lo.max(0),
        };
        (lo..=hi).filter(|&k| self.at(k) <= limit).collect()
    }
}

/// Integer interval (with a margin of 2 on each side) containing every
/// integer root region of `a k^2 + b k + c <= 0`; empty when there is none.
pub(crate) fn quadratic_bounds(a: i64, b: i64, c: i64) -> (i64, i64) {
    let (a, b, c) = (a as f64, b as f64, c as f64);
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        // Still scan the vertex neighbourhood: rounding can hide a root pair.
        let v = (-b / (2.0 * a)).round() as i64;
        return (v - 2, v + 2);
    }
    let r = disc.sqrt();
    let lo = ((-b - r) / (2.0 * a)).floor() as i64 - 2;
    let hi = ((-b + r) / (2.0 * a)).ceil() as i64 + 2;
    (lo, hi)
}

/// `sum_k w(k) q^(e(k))` over the admitted range of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BilateralSumSpec {
    pub exponent: QuadraticExponent,
    pub weight: KWeight,
    pub range: KRange,
}

impl BilateralSumSpec {
    fn preset(a: i64, b: i64, d: i64, weight: KWeight, range: KRange) -> Self {
        BilateralSumSpec {
            exponent: QuadraticExponent::new(a, b, 0, d).expect("preset exponent is valid"),
            weight,
            range,
        }
    }

    /// `f_1 = sum (-1)^k q^(k(3k+1)/2)`
    pub fn euler() -> Self {
        Self::preset(3, 1, 2, KWeight::AlternatingSign, KRange::All)
    }

    /// `f_1^3 = sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2)`
    pub fn jacobi_cube() -> Self {
        Self::preset(1, 1, 2, KWeight::AlternatingOddLinear, KRange::NonNegative)
    }

    /// `f_2^2 / f_1 = sum_{k>=0} q^(k(k+1)/2)`
    pub fn triangular() -> Self {
        Self::preset(1, 1, 2, KWeight::One, KRange::NonNegative)
    }

    /// `f_2^5 / f_1^2 = sum (-1)^k (3k+1) q^(k(3k+2))`
    pub fn f2_5_over_f1_2() -> Self {
        Self::preset(3, 2, 1, KWeight::AlternatingThreeKPlusOne, KRange::All)
    }

    /// `f_1^5 / f_2^2 = sum (6k+1) q^(k(3k+1)/2)`
    pub fn f1_5_over_f2_2() -> Self {
        Self::preset(3, 1, 2, KWeight::SixKPlusOne, KRange::All)
    }

    /// `f_2^3 / (f_1 f_4) = sum (-1)^(k(k+1)/2) q^(k(3k+1)/2)`
    pub fn f2_3_over_f1_f4() -> Self {
        Self::preset(3, 1, 2, KWeight::TriangularSign, KRange::All)
    }

    pub fn expand(&self, order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
        bilateral(self, order, ring)
    }

    /// Smallest exponent over the admitted range of `k`.
    pub fn min_exponent(&self) -> i64 {
        let e = &self.exponent;
        let vertex = -(e.b as f64) / (2.0 * e.a as f64);
        let lo = match self.range {
            KRange::All => i64::MIN,
            KRange::NonNegative => 0,
        };
        [vertex.floor() as i64, vertex.ceil() as i64]
            .into_iter()
            .map(|k| e.at(k.max(lo)))
            .min()
            .expect("two candidates")
    }
}

/// Expand a bilateral sum through `q^order`.
pub fn bilateral(
    spec: &BilateralSumSpec,
    order: i64,
    ring: CoefficientRing,
) -> Result<LaurentSeries> {
    check_order(order)?;
    let ks = spec.exponent.indices_up_to(order, spec.range);
    let lowest = spec.min_exponent().min(0);
    let mut coeffs = vec![0i64; (order - lowest + 1) as usize];
    for k in ks {
        coeffs[(spec.exponent.at(k) - lowest) as usize] += spec.weight.at(k);
    }
    Ok(LaurentSeries::from_coeffs(ring, lowest, coeffs))
}

/// `alpha(q) = sum_{m,n} q^(m^2 + mn + n^2)` by lattice enumeration.
pub fn cubic_theta_alpha(order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    check_order(order)?;
    // m^2 + mn + n^2 >= (m^2 + n^2) / 2
    let bound = (2.0 * (order as f64).sqrt()).ceil() as i64 + 1;
    let mut counts = vec![0i64; order as usize + 1];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = m * m + m * n + n * n;
            if e <= order {
                counts[e as usize] += 1;
            }
        }
    }
    Ok(LaurentSeries::from_coeffs(ring, 0, counts))
}

/// `h(q) = q prod (1-q^(12n-1))(1-q^(12n-11)) / ((1-q^(12n-5))(1-q^(12n-7)))`
/// through `q^order` (`order >= 1`).
pub fn h_level12(order: i64, ring: CoefficientRing) -> Result<LaurentSeries> {
    if order < 1 {
        return Err(SeriesError::InvalidArgument("h(q) needs order >= 1".into()));
    }
    let width = order - 1;
    let mut s = LaurentSeries::one(ring, width);
    for n in 1.. {
        let base = 12 * n;
        if base - 11 > width {
            break;
        }
        for e in [base - 1, base - 11] {
            if e <= width {
                s.mul_sparse_monic(&[(e as usize, -1)]);
            }
        }
        for e in [base - 5, base - 7] {
            if e <= width {
                s.div_sparse_monic(&[(e as usize, -1)]);
            }
        }
    }
    Ok(s.shift(1))
}

fn check_order(order: i64) -> Result<()> {
    if order < 0 {
        Err(SeriesError::InvalidArgument(format!(
            "order must be >= 0, got {order}"
        )))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoefficientRing = CoefficientRing::Integers;

    fn ints(x: &LaurentSeries) -> Vec<i64> {
        x.coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn euler_f1_through_q12() {
        let f1 = euler_f(1, 12, Z).unwrap();
        assert_eq!(ints(&f1), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn euler_f4_below_q4_is_one() {
        let f4 = euler_f(4, 3, Z).unwrap();
        assert_eq!(ints(&f4), vec![1, 0, 0, 0]);
    }

    #[test]
    fn pentagonal_builder_matches_product() {
        for m in 1..=3 {
            assert_eq!(
                euler_f(m, 2000, Z).unwrap(),
                euler_f_product(m, 2000, Z).unwrap()
            );
        }
    }

    #[test]
    fn fquotient_single_factor_is_euler_f() {
        let spec = FQuotientSpec::new(&[(1, 1)], 0);
        assert_eq!(fquotient(&spec, 60, Z).unwrap(), euler_f(1, 60, Z).unwrap());
    }

    #[test]
    fn fquotient_rejects_order_below_shift() {
        let spec = FQuotientSpec::new(&[(1, 1)], 5);
        assert!(fquotient(&spec, 4, Z).is_err());
        assert_eq!(fquotient(&spec, 5, Z).unwrap().valuation(), 5);
    }

    #[test]
    fn spec_merges_and_drops_zero_exponents() {
        let s = FQuotientSpec::new(&[(2, 3), (1, 1), (2, -3)], 0);
        assert_eq!(s.factors().len(), 1);
        let t = s.times(&FQuotientSpec::new(&[(1, -1)], 2));
        assert!(t.factors().is_empty());
        assert_eq!(t.qshift(), 2);
    }

    #[test]
    fn triangular_sum_first_terms() {
        let t = bilateral(&BilateralSumSpec::triangular(), 10, Z).unwrap();
        assert_eq!(ints(&t), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn alpha_first_coefficients() {
        // Oracle: direct count of (m, n) in a generous box.
        let mut oracle = [0i64; 5];
        for m in -10i64..=10 {
            for n in -10i64..=10 {
                let e = m * m + m * n + n * n;
                if e < 5 {
                    oracle[e as usize] += 1;
                }
            }
        }
        assert_eq!(oracle, [1, 6, 0, 6, 6]);
        assert_eq!(ints(&cubic_theta_alpha(4, Z).unwrap()), oracle.to_vec());
    }

    #[test]
    fn alpha_coefficients_are_multiples_of_six() {
        let a = cubic_theta_alpha(300, Z).unwrap();
        for e in 1..=300 {
            let c = i64::try_from(a.coeff(e).unwrap()).unwrap();
            assert_eq!(c % 6, 0, "alpha coefficient at q^{e} = {c}");
        }
    }

    #[test]
    fn h_has_valuation_one() {
        let h = h_level12(50, Z).unwrap();
        assert_eq!(h.normalize().valuation(), 1);
        assert_eq!(h.known_through(), 50);
        assert_eq!(h.invert().unwrap().valuation(), -1);
        assert!(h_level12(0, Z).is_err());
    }

    #[test]
    fn non_integer_exponent_rejected() {
        assert!(QuadraticExponent::new(1, 0, 0, 2).is_err());
        assert!(QuadraticExponent::new(1, 1, 0, 2).is_ok());
        assert!(QuadraticExponent::new(-1, 1, 0, 2).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(KWeight::AlternatingThreeKPlusOne.at(-1), 2);
        assert_eq!(KWeight::SixKPlusOne.at(-2), -11);
        let signs: Vec<i64> = (-2..=3).map(|k| KWeight::TriangularSign.at(k)).collect();
        assert_eq!(signs, vec![-1, 1, 1, -1, -1, 1]);
    }

    #[test]
    fn quadratic_indices_cover_both_branches() {
        let e = QuadraticExponent::new(3, 1, 0, 2).unwrap();
        assert_eq!(e.indices_up_to(7, KRange::All), vec![-2, -1, 0, 1, 2]);
        assert_eq!(e.indices_up_to(7, KRange::NonNegative), vec![0, 1, 2]);
    }
}
