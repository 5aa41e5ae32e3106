use num_bigint::BigInt;
use qcong_core::theorems::{b_table, theorem_claims, TheoremDefaults};
use qcong_core::{CoefficientRing, Family, SeriesExpr};

/// The alternating sums over `B(9n + 3j + 2 - 6k(3k+1))` are the
/// coefficients of `f4 * sum B(3n+2) q^n` at `q^(3n+j)`.
#[test]
fn alternating_sums_agree_with_the_series_route() {
    let n_max = 300u64;
    let order = 3 * n_max as i64 + 2;
    let series = SeriesExpr::fquot(Family::B.generating_function())
        .dissect(3, 2)
        .times(SeriesExpr::notation("f4"))
        .evaluate(order, CoefficientRing::Integers)
        .unwrap();
    let claims = theorem_claims("thm1.3", &TheoremDefaults::default()).unwrap();
    let claim = &claims[0];
    let table = b_table(claim.max_argument());
    for instance in &claim.instances {
        let j = instance.params[0].1;
        for n in 0..=n_max {
            let direct = claim.evaluate(instance, n, &table).unwrap();
            let via_series = series.coeff(3 * n as i64 + j).unwrap();
            assert_eq!(
                direct.sum.parse::<BigInt>().unwrap(),
                via_series,
                "j = {j}, n = {n}"
            );
            assert!(direct.pass);
        }
    }
}

/// Enlarging the k range only adds terms with negative argument.
#[test]
fn sums_ignore_terms_beyond_the_k_range() {
    let claims = theorem_claims("thm1.6", &TheoremDefaults::default()).unwrap();
    let form = claims[0].instances[0].form;
    for n in 0..=150 {
        let ks = form.k_range(n);
        let (lo, hi) = (ks[0], *ks.last().unwrap());
        for k in (lo - 20..lo).chain(hi + 1..hi + 20) {
            assert!(form.at(n, k) < 0, "n = {n}, k = {k}");
        }
    }
}
