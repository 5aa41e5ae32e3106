//! Coefficient arithmetic shared by the series kernels.
//!
//! Two coefficient domains are supported: arbitrary-precision integers and
//! residues modulo a machine-word modulus. Kernels are written once, generic
//! over [`Arith`], and dispatched by [`crate::series::LaurentSeries`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Arith {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn lift_i64(&self, x: i64) -> Self::Elem;
    fn lift_bigint(&self, x: &BigInt) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem);
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `acc += x * y`
    fn mul_add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem);
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem>;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Exact;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Modular(pub u64);

impl Arith for Exact {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn lift_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn lift_bigint(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add_assign(&self, acc: &mut BigInt, x: &BigInt) {
        *acc += x;
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn mul_add_assign(&self, acc: &mut BigInt, x: &BigInt, y: &BigInt) {
        // Most sparse factors in this crate are ±1; skip the bignum product.
        if x.is_one() {
            *acc += y;
        } else if x.is_negative() && x.magnitude().is_one() {
            *acc -= y;
        } else if !x.is_zero() && !y.is_zero() {
            *acc += x * y;
        }
    }
    fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        if x.magnitude().is_one() {
            Some(x.clone())
        } else {
            None
        }
    }
}

impl Modular {
    #[inline]
    fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
}

impl Arith for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn lift_i64(&self, x: i64) -> u64 {
        self.reduce_i64(x)
    }
    fn lift_bigint(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    #[inline]
    fn add_assign(&self, acc: &mut u64, x: &u64) {
        *acc += *x;
        if *acc >= self.0 {
            *acc -= self.0;
        }
    }
    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.0 - *x
        }
    }
    #[inline]
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.0
    }
    #[inline]
    fn mul_add_assign(&self, acc: &mut u64, x: &u64, y: &u64) {
        *acc = (*acc + x * y) % self.0;
    }
    fn inverse(&self, x: &u64) -> Option<u64> {
        let m = self.0 as i64;
        let g = (*x as i64).extended_gcd(&m);
        if g.gcd != 1 {
            return None;
        }
        Some(g.x.rem_euclid(m) as u64)
    }
}

/// Nonzero entries of a coefficient slice as `(index, value)` pairs.
pub(crate) fn nonzeros<A: Arith>(ar: &A, c: &[A::Elem]) -> Vec<(usize, A::Elem)> {
    c.iter()
        .enumerate()
        .filter(|(_, x)| !ar.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Truncated Cauchy product: the first `len` coefficients of `a * b`.
///
/// Iterates over the nonzero terms of the sparser operand, so products with
/// pentagonal or theta-type series cost `O(len * nnz)`.
pub(crate) fn mul_truncated<A: Arith>(
    ar: &A,
    a: &[A::Elem],
    b: &[A::Elem],
    len: usize,
) -> Vec<A::Elem> {
    let mut out = vec![ar.zero(); len];
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    let (sparse, dense) = {
        let na = nonzeros(ar, a);
        let nb = nonzeros(ar, b);
        if na.len() <= nb.len() {
            (na, b)
        } else {
            (nb, a)
        }
    };
    for (i, x) in &sparse {
        let room = len - i;
        for (o, y) in out[*i..].iter_mut().zip(&dense[..dense.len().min(room)]) {
            ar.mul_add_assign(o, x, y);
        }
    }
    out
}

/// Power series reciprocal of `a` (with `a[0]` a unit) to `len` terms.
pub(crate) fn invert_truncated<A: Arith>(
    ar: &A,
    a: &[A::Elem],
    len: usize,
) -> Option<Vec<A::Elem>> {
    let u0_inv = ar.inverse(a.first()?)?;
    let neg_inv = ar.neg(&u0_inv);
    let tail: Vec<(usize, A::Elem)> = nonzeros(ar, &a[..a.len().min(len)])
        .into_iter()
        .filter(|(i, _)| *i > 0)
        .collect();
    let mut out: Vec<A::Elem> = Vec::with_capacity(len);
    if len == 0 {
        return Some(out);
    }
    out.push(u0_inv);
    for n in 1..len {
        let mut acc = ar.zero();
        for (i, u) in &tail {
            if *i > n {
                break;
            }
            ar.mul_add_assign(&mut acc, u, &out[n - i]);
        }
        out.push(ar.mul(&neg_inv, &acc));
    }
    Some(out)
}

/// In place `c <- c * s` where `s` is sparse with `s[0] = 1`.
///
/// `terms` lists the remaining nonzero terms `(exponent > 0, coefficient)`.
pub(crate) fn mul_sparse_monic_in_place<A: Arith>(
    ar: &A,
    c: &mut [A::Elem],
    terms: &[(usize, A::Elem)],
) {
    for n in (0..c.len()).rev() {
        let mut acc = c[n].clone();
        for (e, s) in terms {
            if *e > n {
                break;
            }
            ar.mul_add_assign(&mut acc, s, &c[n - e]);
        }
        c[n] = acc;
    }
}

/// In place `c <- c / s` where `s` is sparse with `s[0] = 1`.
pub(crate) fn div_sparse_monic_in_place<A: Arith>(
    ar: &A,
    c: &mut [A::Elem],
    terms: &[(usize, A::Elem)],
) {
    let neg_terms: Vec<(usize, A::Elem)> = terms.iter().map(|(e, s)| (*e, ar.neg(s))).collect();
    for n in 0..c.len() {
        let mut acc = c[n].clone();
        for (e, s) in &neg_terms {
            if *e > n {
                break;
            }
            ar.mul_add_assign(&mut acc, s, &c[n - e]);
        }
        c[n] = acc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse_of_two_mod_nine_is_five() {
        assert_eq!(Modular(9).inverse(&2), Some(5));
        assert_eq!(Modular(9).inverse(&3), None);
    }

    #[test]
    fn exact_units_are_plus_minus_one() {
        assert_eq!(Exact.inverse(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(Exact.inverse(&BigInt::from(2)), None);
    }

    #[test]
    fn sparse_multiply_then_divide_is_identity() {
        let ar = Modular(7);
        let orig: Vec<u64> = (0..40).map(|i| (i * i + 3) % 7).collect();
        let mut c = orig.clone();
        let terms = vec![(1, 6u64), (2, 6), (5, 1), (7, 1)];
        mul_sparse_monic_in_place(&ar, &mut c, &terms);
        div_sparse_monic_in_place(&ar, &mut c, &terms);
        assert_eq!(c, orig);
    }
}
