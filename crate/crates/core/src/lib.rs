//! Truncated q-series arithmetic and numerical verification of congruences
//! for `B(n)`, the number of partition triples of `n` whose first two
//! components have distinct odd parts and whose third has parts divisible
//! by 4. Its generating function is `f2^4 / (f1^2 f4^3)`, where
//! `fm = prod_{n>=1} (1 - q^(mn))`.
//!
//! The layers build on each other:
//!
//! * [`series`]: [`LaurentSeries`] over the integers or `Z/mZ`.
//! * [`special`]: Euler products, f-quotients, theta-type sums, `alpha(q)`
//!   and the level 12 function `h(q)`.
//! * [`partitions`]: combinatorial counting, independent of the series code.
//! * [`registry`]: identities as expression pairs with a verifier.
//! * [`theorems`]: direct checks of congruences on tables of `B(n)`.

mod arith;
pub mod notation;
pub mod partitions;
pub mod registry;
pub mod series;
pub mod special;
pub mod theorems;

pub use notation::{parse_quotient, ParseError, ScaledQuotient};
pub use partitions::{count_b, count_family, Family, PartitionConstraint, TripleSpec};
pub use registry::{IdentitySpec, NamedSeries, SeriesExpr, VerificationReport};
pub use series::{CoefficientRing, LaurentSeries, SeriesError};
pub use special::{BilateralSumSpec, FQuotientSpec, KRange, KWeight, QuadraticExponent};
