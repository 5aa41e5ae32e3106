//! Combinatorial partition counts, computed by dynamic programming over
//! admissible parts and independent of the series engine.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::special::FQuotientSpec;

/// Which parts (and multiplicities) a partition may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionConstraint {
    Unrestricted,
    /// Each odd part at most once.
    DistinctOdd,
    /// Parts `d, 2d, 3d, ...` with unlimited multiplicity.
    MultiplesOf(u32),
    /// Even parts come in two colors.
    EvenTwoColors,
    /// Cubic partitions whose first occurrence of each part may be overlined.
    OvercubicMarking,
}

/// Ordered triples `(pi1, pi2, pi3)` with each component constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleSpec {
    pub c1: PartitionConstraint,
    pub c2: PartitionConstraint,
    pub c3: PartitionConstraint,
}

impl TripleSpec {
    /// Two distinct-odd partitions and one into multiples of 4.
    pub const B: TripleSpec = TripleSpec {
        c1: PartitionConstraint::DistinctOdd,
        c2: PartitionConstraint::DistinctOdd,
        c3: PartitionConstraint::MultiplesOf(4),
    };

    /// One distinct-odd partition and two into multiples of 4.
    pub const LIN_B: TripleSpec = TripleSpec {
        c1: PartitionConstraint::DistinctOdd,
        c2: PartitionConstraint::MultiplesOf(4),
        c3: PartitionConstraint::MultiplesOf(4),
    };

    pub fn count_table(&self, n_max: usize) -> Vec<BigUint> {
        let t1 = count_table(self.c1, n_max);
        let t2 = count_table(self.c2, n_max);
        let t3 = count_table(self.c3, n_max);
        convolve(&convolve(&t1, &t2, n_max), &t3, n_max)
    }
}

/// Unbounded multiplicity for `part`.
fn add_unbounded(table: &mut [BigUint], part: usize) {
    for s in part..table.len() {
        let prev = table[s - part].clone();
        table[s] += prev;
    }
}

/// At most one copy of `part`.
fn add_once(table: &mut [BigUint], part: usize) {
    for s in (part..table.len()).rev() {
        let prev = table[s - part].clone();
        table[s] += prev;
    }
}

/// Multiplicity `j >= 0` of `part`, with two markings for every `j >= 1`.
fn add_overlinable(table: &mut [BigUint], part: usize) {
    // tail[s] = sum_{j>=1} table[s - j part]
    let mut tail = vec![BigUint::zero(); table.len()];
    for s in part..table.len() {
        tail[s] = &table[s - part] + &tail[s - part];
    }
    for (t, g) in table.iter_mut().zip(tail) {
        *t += g * 2u32;
    }
}

/// `table[n]` = number of partitions of `n` obeying `c`, for `0 <= n <= n_max`.
pub fn count_table(c: PartitionConstraint, n_max: usize) -> Vec<BigUint> {
    let mut t = vec![BigUint::zero(); n_max + 1];
    t[0] = BigUint::one();
    match c {
        PartitionConstraint::Unrestricted => (1..=n_max).for_each(|p| add_unbounded(&mut t, p)),
        PartitionConstraint::DistinctOdd => {
            (1..=n_max).step_by(2).for_each(|p| add_once(&mut t, p))
        }
        PartitionConstraint::MultiplesOf(d) => {
            assert!(d > 0, "multiples of zero");
            (d as usize..=n_max)
                .step_by(d as usize)
                .for_each(|p| add_unbounded(&mut t, p))
        }
        PartitionConstraint::EvenTwoColors => {
            for p in 1..=n_max {
                add_unbounded(&mut t, p);
                if p % 2 == 0 {
                    add_unbounded(&mut t, p);
                }
            }
        }
        PartitionConstraint::OvercubicMarking => {
            for p in 1..=n_max {
                add_overlinable(&mut t, p);
                if p % 2 == 0 {
                    add_overlinable(&mut t, p);
                }
            }
        }
    }
    t
}

/// Truncated convolution of two count tables.
pub fn convolve(a: &[BigUint], b: &[BigUint], n_max: usize) -> Vec<BigUint> {
    (0..=n_max)
        .map(|n| {
            (0..=n)
                .filter(|&i| i < a.len() && n - i < b.len())
                .map(|i| &a[i] * &b[n - i])
                .sum()
        })
        .collect()
}

/// `B(0..=n_max)`: triples of two distinct-odd partitions and one into
/// multiples of 4.
pub fn count_b(n_max: usize) -> Vec<BigUint> {
    TripleSpec::B.count_table(n_max)
}

/// The other partition functions with a combinatorial counterpart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Unrestricted partitions `p(n)`.
    P,
    /// Cubic partitions `a(n)`.
    A,
    /// Overcubic partitions.
    ABar,
    /// Lin's restricted triples `b(n)`.
    LinB,
    /// The triples `B(n)`.
    B,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::B, Family::LinB, Family::P, Family::A, Family::ABar];

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "p",
            Family::A => "a",
            Family::ABar => "abar",
            Family::LinB => "b",
            Family::B => "B",
        }
    }

    /// The generating function as an f-quotient.
    pub fn generating_function(self) -> FQuotientSpec {
        match self {
            Family::P => FQuotientSpec::new(&[(1, -1)], 0),
            Family::A => FQuotientSpec::new(&[(1, -1), (2, -1)], 0),
            Family::ABar => FQuotientSpec::new(&[(4, 1), (1, -2), (2, -1)], 0),
            Family::LinB => FQuotientSpec::new(&[(2, 2), (1, -1), (4, -3)], 0),
            Family::B => FQuotientSpec::new(&[(2, 4), (1, -2), (4, -3)], 0),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown partition family {0:?} (expected one of B, b, p, a, abar)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// Combinatorial count table for a named family.
pub fn count_family(family: Family, n_max: usize) -> Vec<BigUint> {
    match family {
        Family::P => count_table(PartitionConstraint::Unrestricted, n_max),
        Family::A => count_table(PartitionConstraint::EvenTwoColors, n_max),
        Family::ABar => count_table(PartitionConstraint::OvercubicMarking, n_max),
        Family::LinB => TripleSpec::LIN_B.count_table(n_max),
        Family::B => count_b(n_max),
    }
}
