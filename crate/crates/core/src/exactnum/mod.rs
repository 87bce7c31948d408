//! Exact arithmetic substrate: big rationals, quadratic surds, and the
//! handful of elementary number-theoretic tools the constructions rely on.

mod arith;
mod rational;
mod surd;
mod triple;

pub use arith::{divides_via_power, exact_root, exact_sqrt, gcd, rational_sqrt};
pub use rational::{parse_rational, rational, Rational};
pub use surd::{Surd, SurdSum};
pub use triple::{classify_triple, primitive_triple, scaled_triple, LegForm, PythTriple};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("radicand must be at least 1")]
    ZeroRadicand,
    #[error("cannot take the square root of negative value {0}")]
    NegativeRadicand(Rational),
    #[error("cannot add surds with radicands {left} and {right}")]
    RadicandMismatch { left: BigUint, right: BigUint },
    #[error("generator requires m > n, got m = {m}, n = {n}")]
    NotOrdered { m: BigUint, n: BigUint },
    #[error("generator requires gcd(m, n) = 1, got gcd({m}, {n}) = {gcd}")]
    NotCoprime { m: BigUint, n: BigUint, gcd: BigUint },
    #[error("generator requires m + n odd, got m = {m}, n = {n}")]
    SameParity { m: BigUint, n: BigUint },
    #[error("scale factor must be positive")]
    ZeroScale,
    #[error("({a}, {b}, {c}) is not a Pythagorean triple: {a}² + {b}² ≠ {c}²")]
    NotPythagorean { a: BigUint, b: BigUint, c: BigUint },
    #[error("invalid rational literal {0:?}")]
    Parse(String),
}
