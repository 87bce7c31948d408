use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, Pow, Signed, Zero};

use super::Rational;

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Returns `k` with `k² = c`, or `None` when `c` is not a perfect square.
pub fn exact_sqrt(c: &BigUint) -> Option<BigUint> {
    exact_root(c, 2)
}

/// Returns `k` with `kⁿ = c`, or `None` when no integer root exists.
///
/// An integer that is the n-th power of a rational is the n-th power of an
/// integer, so `None` also rules out rational roots.
pub fn exact_root(c: &BigUint, n: u32) -> Option<BigUint> {
    assert!(n >= 1, "root index must be positive");
    let k = c.nth_root(n);
    if Pow::pow(&k, n) == *c {
        Some(k)
    } else {
        None
    }
}

/// Square root of a non-negative rational when it is itself rational.
///
/// Relies on the stored form being reduced: `p/q` is a rational square iff
/// both `p` and `q` are integer squares.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_sqrt(r.numer().magnitude())?;
    let den = exact_sqrt(r.denom().magnitude())?;
    Some(Rational::new(num.into(), den.into()))
}

/// Whether `aⁿ` divides `bⁿ`, evaluated on the powers themselves.
///
/// Always agrees with `a | b`; the test suite checks that by brute force.
pub fn divides_via_power(a: &BigUint, b: &BigUint, n: u32) -> bool {
    assert!(!a.is_zero() && !b.is_zero() && n >= 1);
    let an: BigUint = Pow::pow(a, n);
    let bn: BigUint = Pow::pow(b, n);
    (bn % an).is_zero()
}

/// Splits `r` into `(s, f)` with `r = s²·f` and `f` squarefree.
///
/// Trial division runs only while `p³ ≤ rest`; what remains afterwards has at
/// most two prime factors, so it is squarefree unless it is a perfect square.
pub(crate) fn square_part(r: &BigUint) -> (BigUint, BigUint) {
    if let Some(s) = exact_sqrt(r) {
        return (s, BigUint::one());
    }
    match u64::try_from(r) {
        Ok(small) => {
            let (s, f) = square_part_u64(small);
            (BigUint::from(s), BigUint::from(f))
        }
        Err(_) => square_part_big(r),
    }
}

fn square_part_u64(mut rest: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while (p as u128).pow(3) <= rest as u128 {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if root * root == rest {
        square *= root;
    } else {
        free *= rest;
    }
    (square, free)
}

fn square_part_big(r: &BigUint) -> (BigUint, BigUint) {
    let mut rest = r.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    let two = BigUint::from(2u32);
    while Pow::pow(&p, 3u32) <= rest {
        let mut e = 0u32;
        loop {
            let (q, rem) = rest.div_rem(&p);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        square *= Pow::pow(&p, e / 2);
        if e % 2 == 1 {
            free *= &p;
        }
        if p == two {
            p += 1u32;
        } else {
            p += 2u32;
        }
    }
    match exact_sqrt(&rest) {
        Some(root) => square *= root,
        None => free *= rest,
    }
    (square, free)
}
