//! Shared inputs for the benchmarks.

use qcong_core::{CoefficientRing, Family, LaurentSeries};

/// Orders at which the series kernels are timed.
pub const ORDERS: [i64; 3] = [1000, 5000, 20000];

/// The generating function of `B(n)` through `q^order`.
pub fn b_series(order: i64, ring: CoefficientRing) -> LaurentSeries {
    Family::B
        .generating_function()
        .expand(order, ring)
        .expect("the B generating function expands in every ring")
}

/// A dense series with every coefficient nonzero, for multiplication.
pub fn dense(order: i64, ring: CoefficientRing) -> LaurentSeries {
    LaurentSeries::from_coeffs(ring, 0, (0..=order).map(|n| 1 + n % 17))
}
