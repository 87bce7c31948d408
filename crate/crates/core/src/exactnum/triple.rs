use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{exact_sqrt, gcd, NumberError};

/// Which leg carries the `2δmn` term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LegForm {
    /// `a = 2δmn`, `b = δ(m² − n²)`.
    EvenLegFirst,
    /// `a = δ(m² − n²)`, `b = 2δmn`.
    OddLegFirst,
}

/// A Pythagorean triple together with its Euclid parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PythTriple {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub delta: BigUint,
    pub m: BigUint,
    pub n: BigUint,
    pub leg_form: LegForm,
}

impl PythTriple {
    pub fn is_primitive(&self) -> bool {
        self.delta.is_one()
    }
}

fn check_generator(m: &BigUint, n: &BigUint) -> Result<(), NumberError> {
    if n.is_zero() || m <= n {
        return Err(NumberError::NotOrdered { m: m.clone(), n: n.clone() });
    }
    let g = gcd(m, n);
    if !g.is_one() {
        return Err(NumberError::NotCoprime { m: m.clone(), n: n.clone(), gcd: g });
    }
    if (m + n).is_even() {
        return Err(NumberError::SameParity { m: m.clone(), n: n.clone() });
    }
    Ok(())
}

/// `(2mn, m² − n², m² + n²)` for coprime `m > n` of opposite parity.
pub fn primitive_triple(m: impl Into<BigUint>, n: impl Into<BigUint>) -> Result<PythTriple, NumberError> {
    scaled_triple(1u32, m, n)
}

/// `(2δmn, δ(m² − n²), δ(m² + n²))`, even leg first.
pub fn scaled_triple(
    delta: impl Into<BigUint>,
    m: impl Into<BigUint>,
    n: impl Into<BigUint>,
) -> Result<PythTriple, NumberError> {
    let (delta, m, n) = (delta.into(), m.into(), n.into());
    if delta.is_zero() {
        return Err(NumberError::ZeroScale);
    }
    check_generator(&m, &n)?;
    let m2 = &m * &m;
    let n2 = &n * &n;
    Ok(PythTriple {
        a: BigUint::from(2u32) * &delta * &m * &n,
        b: &delta * (&m2 - &n2),
        c: &delta * (m2 + n2),
        delta,
        m,
        n,
        leg_form: LegForm::EvenLegFirst,
    })
}

/// Recovers `(δ, m, n)` and the leg order of a Pythagorean triple.
///
/// `δ = gcd(a, b)`; after dividing it out exactly one leg is even and that
/// leg is `2mn`.
pub fn classify_triple(a: impl Into<BigUint>, b: impl Into<BigUint>, c: impl Into<BigUint>) -> Result<PythTriple, NumberError> {
    let (a, b, c) = (a.into(), b.into(), c.into());
    let not_pyth = || NumberError::NotPythagorean { a: a.clone(), b: b.clone(), c: c.clone() };
    if a.is_zero() || b.is_zero() || &a * &a + &b * &b != &c * &c {
        return Err(not_pyth());
    }
    let delta = gcd(&a, &b);
    let (pa, pb, pc) = (&a / &delta, &b / &delta, &c / &delta);
    let (even, odd, leg_form) = if pa.is_even() {
        (pa, pb, LegForm::EvenLegFirst)
    } else {
        (pb, pa, LegForm::OddLegFirst)
    };
    debug_assert!(even.is_even() && odd.is_odd());
    // m² = (c + odd)/2, n² = (c − odd)/2
    let m = exact_sqrt(&((&pc + &odd) >> 1)).ok_or_else(not_pyth)?;
    let n = exact_sqrt(&((&pc - &odd) >> 1)).ok_or_else(not_pyth)?;
    debug_assert_eq!(BigUint::from(2u32) * &m * &n, even);
    Ok(PythTriple { a, b, c, delta, m, n, leg_form })
}
