use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::arith::square_part;
use super::{NumberError, Rational};

/// Exact real of the form `coefficient · √radicand`.
///
/// The radicand is kept squarefree and a zero value always carries radicand
/// 1, which makes the representation unique and equality structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coefficient: Rational,
    radicand: BigUint,
}

impl Surd {
    /// Builds `coefficient · √radicand`, pulling square factors out of the
    /// radicand.
    pub fn new(coefficient: Rational, radicand: BigUint) -> Result<Self, NumberError> {
        if radicand.is_zero() {
            return Err(NumberError::ZeroRadicand);
        }
        if coefficient.is_zero() {
            return Ok(Self::zero());
        }
        let (square, free) = square_part(&radicand);
        Ok(Self {
            coefficient: coefficient * Rational::from_integer(square.into()),
            radicand: free,
        })
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            coefficient: r,
            radicand: BigUint::one(),
        }
    }

    /// `√r` for a non-negative rational; `√(p/q) = √(pq) / q`.
    pub fn sqrt_of(r: &Rational) -> Result<Self, NumberError> {
        if r.is_negative() {
            return Err(NumberError::NegativeRadicand(r.clone()));
        }
        if r.is_zero() {
            return Ok(Self::zero());
        }
        let q = r.denom().magnitude().clone();
        let pq = r.numer().magnitude() * &q;
        Self::new(Rational::new(BigInt::one(), q.into()), pq)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coefficient)
    }

    /// `value²`, always rational.
    pub fn squared(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(self.radicand.clone().into())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coefficient: &self.coefficient * factor,
            radicand: self.radicand.clone(),
        }
    }

    /// Sum of two surds sharing a radicand.
    pub fn checked_add(&self, other: &Self) -> Result<Self, NumberError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != other.radicand {
            return Err(NumberError::RadicandMismatch {
                left: self.radicand.clone(),
                right: other.radicand.clone(),
            });
        }
        let coefficient = &self.coefficient + &other.coefficient;
        if coefficient.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self {
            coefficient,
            radicand: self.radicand.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        let coefficient = &self.coefficient * &rhs.coefficient;
        if self.radicand == rhs.radicand {
            // √d·√d = d
            return Surd::from_rational(coefficient * Rational::from_integer(self.radicand.clone().into()));
        }
        Surd::new(coefficient, &self.radicand * &rhs.radicand).expect("radicands are positive")
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd {
            coefficient: -self.coefficient,
            radicand: self.radicand,
        }
    }
}

impl From<Rational> for Surd {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coefficient);
        }
        if self.coefficient.is_one() {
            write!(f, "√{}", self.radicand)
        } else if self.coefficient.is_integer() {
            write!(f, "{}√{}", self.coefficient, self.radicand)
        } else {
            write!(f, "({})√{}", self.coefficient, self.radicand)
        }
    }
}

/// A finite ℚ-linear combination of square roots of distinct squarefree
/// integers.
///
/// Such roots are linearly independent over ℚ, so two sums are equal exactly
/// when their coefficient maps agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl SurdSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, s: &Surd) {
        if s.is_zero() {
            return;
        }
        let entry = self.terms.entry(s.radicand.clone()).or_insert_with(Rational::zero);
        *entry += &s.coefficient;
        if entry.is_zero() {
            self.terms.remove(&s.radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Collapses to a single surd when at most one radicand is present.
    pub fn as_surd(&self) -> Option<Surd> {
        match self.terms.len() {
            0 => Some(Surd::zero()),
            1 => {
                let (radicand, coefficient) = self.terms.iter().next().unwrap();
                Some(Surd {
                    coefficient: coefficient.clone(),
                    radicand: radicand.clone(),
                })
            }
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| c.to_f64().unwrap_or(f64::NAN) * r.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

impl<'a> FromIterator<&'a Surd> for SurdSum {
    fn from_iter<I: IntoIterator<Item = &'a Surd>>(iter: I) -> Self {
        let mut sum = SurdSum::new();
        for s in iter {
            sum.add(s);
        }
        sum
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| {
                Surd {
                    coefficient: c.clone(),
                    radicand: r.clone(),
                }
                .to_string()
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
