//! Solution sets of `α·sin x + β·cos x = γ`.
//!
//! Substituting `t = tan(x/2)` (valid away from `x = π + 2kπ`) turns the
//! equation into the quadratic `(β+γ)t² − 2αt + (γ−β) = 0`. The odd
//! multiples of π are handled separately: they solve the equation exactly
//! when `β + γ = 0`.

use std::f64::consts::PI;

use num_traits::{Num, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{rational_sqrt, Rational, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("every real number is a solution; the set is uncountable")]
    Uncountable,
    #[error("empty k range: k_min = {k_min} > k_max = {k_max}")]
    InvalidRange { k_min: i64, k_max: i64 },
}

/// Coefficients of the equation, either all exact or all floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum EquationCoeffs {
    Exact { alpha: Rational, beta: Rational, gamma: Rational },
    Float { alpha: f64, beta: f64, gamma: f64 },
}

impl EquationCoeffs {
    pub fn exact(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self::Exact { alpha, beta, gamma }
    }

    pub fn float(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::Float { alpha, beta, gamma }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact { .. })
    }

    pub fn to_f64(&self) -> (f64, f64, f64) {
        match self {
            Self::Exact { alpha, beta, gamma } => (approx(alpha), approx(beta), approx(gamma)),
            Self::Float { alpha, beta, gamma } => (*alpha, *beta, *gamma),
        }
    }
}

fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `(β+γ)t² + (−2α)t + (γ−β)` and its discriminant `4(α²+β²−γ²)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HalfAngleQuadratic<T> {
    pub c2: T,
    pub c1: T,
    pub c0: T,
    pub discriminant: T,
}

impl<T: Num + Clone> HalfAngleQuadratic<T> {
    pub fn from_coeffs(alpha: &T, beta: &T, gamma: &T) -> Self {
        let two = T::one() + T::one();
        let four = two.clone() * two.clone();
        let sum = alpha.clone() * alpha.clone() + beta.clone() * beta.clone() - gamma.clone() * gamma.clone();
        Self {
            c2: beta.clone() + gamma.clone(),
            c1: T::zero() - two * alpha.clone(),
            c0: gamma.clone() - beta.clone(),
            discriminant: four * sum,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Quadratic {
    Exact(HalfAngleQuadratic<Rational>),
    Float(HalfAngleQuadratic<f64>),
}

pub fn half_angle_quadratic(c: &EquationCoeffs) -> Quadratic {
    match c {
        EquationCoeffs::Exact { alpha, beta, gamma } => {
            Quadratic::Exact(HalfAngleQuadratic::from_coeffs(alpha, beta, gamma))
        }
        EquationCoeffs::Float { alpha, beta, gamma } => {
            Quadratic::Float(HalfAngleQuadratic::from_coeffs(alpha, beta, gamma))
        }
    }
}

/// How a family arises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `x = π + 2kπ`.
    OddPi,
    /// `x = 2θ + 2kπ` with `tan θ` a root of the half-angle quadratic.
    DoubleAngle,
}

/// `tan(base/2)` for a family, as exactly as the inputs allow.
#[derive(Clone, Debug, PartialEq)]
pub enum TanHalf {
    /// The odd-π family: `tan(π/2)` is unbounded.
    Infinite,
    Rational(Rational),
    /// `rational_part + surd_part`, irrational.
    Quadratic { rational_part: Rational, surd_part: Surd },
    Float(f64),
}

/// `{ base + 2kπ : k ∈ ℤ }` with `base ∈ (−π, π]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub base: f64,
    pub tan_half: TanHalf,
    pub tan_half_approx: f64,
    pub kind: FamilyKind,
}

impl Family {
    fn odd_pi() -> Self {
        Self {
            base: PI,
            tan_half: TanHalf::Infinite,
            tan_half_approx: f64::INFINITY,
            kind: FamilyKind::OddPi,
        }
    }

    fn double_angle(tan_half: TanHalf, tan_half_approx: f64) -> Self {
        Self {
            base: 2.0 * tan_half_approx.atan(),
            tan_half,
            tan_half_approx,
            kind: FamilyKind::DoubleAngle,
        }
    }

    fn rational(t: Rational) -> Self {
        let approx = approx(&t);
        Self::double_angle(TanHalf::Rational(t), approx)
    }

    /// `θ` in degrees, i.e. half the base angle.
    pub fn half_base_degrees(&self) -> f64 {
        (self.base / 2.0).to_degrees()
    }

    pub fn base_degrees(&self) -> f64 {
        self.base.to_degrees()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolutionSet {
    AllReals,
    Empty,
    Families(Vec<Family>),
}

impl SolutionSet {
    pub fn families(&self) -> &[Family] {
        match self {
            SolutionSet::Families(f) => f,
            _ => &[],
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SolutionSet::AllReals => "all-reals",
            SolutionSet::Empty => "empty",
            SolutionSet::Families(_) => "families",
        }
    }
}

/// Boundary tolerance for floating-point coefficients.
///
/// `β + γ` counts as zero when `|β + γ| ≤ boundary · max(|β|, |γ|, 1)`; the
/// discriminant uses the same relative bound against `max(α², β², γ², 1)`.
/// Exact coefficients ignore it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub boundary: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { boundary: 1e-12 }
    }
}

pub fn classify(c: &EquationCoeffs) -> SolutionSet {
    classify_with(c, Tolerance::default())
}

pub fn classify_with(c: &EquationCoeffs, tol: Tolerance) -> SolutionSet {
    match c {
        EquationCoeffs::Exact { alpha, beta, gamma } => classify_exact(alpha, beta, gamma),
        EquationCoeffs::Float { alpha, beta, gamma } => classify_float(*alpha, *beta, *gamma, tol),
    }
}

/// Roots of the half-angle quadratic `r₁ = (α + √Δ)/s`, `r₂ = (α − √Δ)/s`
/// with `Δ = α² + β² − γ² > 0`, `s = β + γ`, evaluated without cancellation.
fn stable_roots(alpha: f64, beta: f64, gamma: f64, delta: f64) -> (f64, f64) {
    let s = beta + gamma;
    let root = delta.sqrt();
    let q = if alpha >= 0.0 { alpha + root } else { alpha - root };
    let big = q / s;
    let small = (gamma - beta) / q;
    if alpha >= 0.0 {
        (big, small)
    } else {
        (small, big)
    }
}

fn classify_exact(alpha: &Rational, beta: &Rational, gamma: &Rational) -> SolutionSet {
    let s = beta + gamma;
    if s.is_zero() {
        if alpha.is_zero() {
            return if beta.is_zero() {
                SolutionSet::AllReals
            } else {
                SolutionSet::Families(vec![Family::odd_pi()])
            };
        }
        let tan_phi = -(beta / alpha);
        return SolutionSet::Families(vec![Family::odd_pi(), Family::rational(tan_phi)]);
    }
    let delta = alpha * alpha + beta * beta - gamma * gamma;
    if delta.is_negative() {
        return SolutionSet::Empty;
    }
    if delta.is_zero() {
        return SolutionSet::Families(vec![Family::rational(alpha / &s)]);
    }
    if let Some(root) = rational_sqrt(&delta) {
        return SolutionSet::Families(vec![
            Family::rational((alpha + &root) / &s),
            Family::rational((alpha - &root) / &s),
        ]);
    }
    let (r1, r2) = stable_roots(approx(alpha), approx(beta), approx(gamma), approx(&delta));
    let rational_part = alpha / &s;
    let inv_s = Rational::from_integer(1.into()) / &s;
    let surd = Surd::sqrt_of(&delta).expect("discriminant is positive");
    SolutionSet::Families(vec![
        Family::double_angle(
            TanHalf::Quadratic {
                rational_part: rational_part.clone(),
                surd_part: surd.scale(&inv_s),
            },
            r1,
        ),
        Family::double_angle(
            TanHalf::Quadratic {
                rational_part,
                surd_part: surd.scale(&-inv_s),
            },
            r2,
        ),
    ])
}

fn classify_float(alpha: f64, beta: f64, gamma: f64, tol: Tolerance) -> SolutionSet {
    let s = beta + gamma;
    let s_scale = beta.abs().max(gamma.abs()).max(1.0);
    let s_zero = s.abs() <= tol.boundary * s_scale;
    let a_scale = alpha.abs().max(s_scale);
    let a_zero = alpha.abs() <= tol.boundary * a_scale;
    if s_zero {
        if a_zero {
            return if beta.abs() <= tol.boundary * s_scale {
                SolutionSet::AllReals
            } else {
                SolutionSet::Families(vec![Family::odd_pi()])
            };
        }
        let t = -beta / alpha;
        return SolutionSet::Families(vec![Family::odd_pi(), Family::double_angle(TanHalf::Float(t), t)]);
    }
    let delta = alpha * alpha + beta * beta - gamma * gamma;
    let d_scale = (alpha * alpha).max(beta * beta).max(gamma * gamma).max(1.0);
    if delta.abs() <= tol.boundary * d_scale {
        let t = alpha / s;
        return SolutionSet::Families(vec![Family::double_angle(TanHalf::Float(t), t)]);
    }
    if delta < 0.0 {
        return SolutionSet::Empty;
    }
    let (r1, r2) = stable_roots(alpha, beta, gamma, delta);
    SolutionSet::Families(vec![
        Family::double_angle(TanHalf::Float(r1), r1),
        Family::double_angle(TanHalf::Float(r2), r2),
    ])
}

/// All `x = base + 2kπ` for `k_min ≤ k ≤ k_max`, ascending, with values closer
/// than `1e−12` (relative) merged.
pub fn enumerate_solutions(s: &SolutionSet, k_min: i64, k_max: i64) -> Result<Vec<f64>, SolveError> {
    if k_min > k_max {
        return Err(SolveError::InvalidRange { k_min, k_max });
    }
    let families = match s {
        SolutionSet::AllReals => return Err(SolveError::Uncountable),
        SolutionSet::Empty => return Ok(Vec::new()),
        SolutionSet::Families(f) => f,
    };
    let mut xs: Vec<f64> = (k_min..=k_max)
        .flat_map(|k| families.iter().map(move |f| 2.0 * k as f64 * PI + f.base))
        .collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|b, a| (*b - *a).abs() <= 1e-12 * a.abs().max(1.0));
    Ok(xs)
}

/// `α·sin x + β·cos x − γ` in floating point.
pub fn residual(c: &EquationCoeffs, x: f64) -> f64 {
    let (alpha, beta, gamma) = c.to_f64();
    alpha * x.sin() + beta * x.cos() - gamma
}
