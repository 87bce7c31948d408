//! The cyclic quadrilateral ΓBΓ₂Γ₁ built on a right triangle ΓBA.
//!
//! Embedding: `B = (0, 0)`, `A = (γ, 0)`, `Γ = (α²/γ, αβ/γ)` above the axis,
//! `Γ₂ = (0, −α)` below it and `Γ₁ = (β + γ, 0)`. Every vertex is rational
//! whenever the triple is, and `Γ₁Γ₂` is a diameter of the circumcircle.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{Rational, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: String },
    #[error("not a right triangle: α² + β² = {lhs} but γ² = {rhs}")]
    NotRightTriangle { lhs: String, rhs: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }

    pub fn dist2(&self, other: &Point2) -> Rational {
        let dx = &other.x - &self.x;
        let dy = &other.y - &self.y;
        &dx * &dx + &dy * &dy
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(b − a) × (c − a)`.
pub(crate) fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// `(b − a) · (c − a)`.
pub(crate) fn dot(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.x - &a.x) + (&b.y - &a.y) * (&c.y - &a.y)
}

/// Twice the signed shoelace area; positive for counterclockwise order.
pub(crate) fn twice_signed_area(points: &[&Point2]) -> Rational {
    let n = points.len();
    (0..n)
        .map(|i| {
            let (p, q) = (points[i], points[(i + 1) % n]);
            &p.x * &q.y - &q.x * &p.y
        })
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Vertices in counterclockwise traversal order Γ → B → Γ₂ → Γ₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Vertex {
    Gamma,
    B,
    Gamma2,
    Gamma1,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::Gamma, Vertex::B, Vertex::Gamma2, Vertex::Gamma1];

    fn index(self) -> usize {
        Self::ALL.iter().position(|v| *v == self).unwrap()
    }

    pub fn prev(self) -> Vertex {
        Self::ALL[(self.index() + 3) % 4]
    }

    pub fn next(self) -> Vertex {
        Self::ALL[(self.index() + 1) % 4]
    }

    pub fn label(self) -> &'static str {
        match self {
            Vertex::Gamma => "Γ",
            Vertex::B => "B",
            Vertex::Gamma2 => "Γ₂",
            Vertex::Gamma1 => "Γ₁",
        }
    }
}

/// Interior-angle tangents at the four vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangents {
    pub at_b: Rational,
    pub at_gamma: Rational,
    pub at_gamma1: Rational,
    pub at_gamma2: Rational,
}

impl Tangents {
    pub fn get(&self, v: Vertex) -> &Rational {
        match v {
            Vertex::Gamma => &self.at_gamma,
            Vertex::B => &self.at_b,
            Vertex::Gamma2 => &self.at_gamma2,
            Vertex::Gamma1 => &self.at_gamma1,
        }
    }
}

/// Exact construction; the length and tangent fields hold the closed forms,
/// the vertex fields the coordinates they can be checked against.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadConstruction {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub vertex_gamma: Point2,
    pub vertex_b: Point2,
    pub vertex_gamma2: Point2,
    pub vertex_gamma1: Point2,
    /// Third vertex of the right triangle ΓBA; not part of the quadrilateral.
    pub vertex_a: Point2,
    pub side_gamma_b: Rational,
    pub side_b_gamma2: Rational,
    pub side_gamma2_gamma1: Surd,
    pub side_gamma_gamma1: Surd,
    pub diag_b_gamma1: Rational,
    pub diag_gamma_gamma2: Surd,
    pub tangents: Tangents,
    pub tan_theta: Rational,
    pub circumcenter: Point2,
    pub radius_squared: Rational,
}

impl QuadConstruction {
    pub fn vertex(&self, v: Vertex) -> &Point2 {
        match v {
            Vertex::Gamma => &self.vertex_gamma,
            Vertex::B => &self.vertex_b,
            Vertex::Gamma2 => &self.vertex_gamma2,
            Vertex::Gamma1 => &self.vertex_gamma1,
        }
    }

    pub fn vertex_mut(&mut self, v: Vertex) -> &mut Point2 {
        match v {
            Vertex::Gamma => &mut self.vertex_gamma,
            Vertex::B => &mut self.vertex_b,
            Vertex::Gamma2 => &mut self.vertex_gamma2,
            Vertex::Gamma1 => &mut self.vertex_gamma1,
        }
    }

    pub fn vertices(&self) -> [&Point2; 4] {
        Vertex::ALL.map(|v| self.vertex(v))
    }

    /// θ with `tan θ = α/(β+γ)`, in degrees.
    pub fn theta_degrees(&self) -> f64 {
        self.tan_theta.to_f64().unwrap_or(f64::NAN).atan().to_degrees()
    }
}

pub fn construct_quad(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<QuadConstruction, GeometryError> {
    for (name, value) in [("α", alpha), ("β", beta), ("γ", gamma)] {
        if !value.is_positive() {
            return Err(GeometryError::NonPositive { name, value: value.to_string() });
        }
    }
    let legs = alpha * alpha + beta * beta;
    let hyp = gamma * gamma;
    if legs != hyp {
        return Err(GeometryError::NotRightTriangle { lhs: legs.to_string(), rhs: hyp.to_string() });
    }

    let zero = Rational::zero;
    let two = Rational::from_integer(2.into());
    let bg = beta + gamma;
    let diameter2 = alpha * alpha + &bg * &bg;
    let diameter = Surd::sqrt_of(&diameter2).expect("positive");

    Ok(QuadConstruction {
        vertex_gamma: Point2::new(alpha * alpha / gamma, alpha * beta / gamma),
        vertex_b: Point2::new(zero(), zero()),
        vertex_gamma2: Point2::new(zero(), -alpha.clone()),
        vertex_gamma1: Point2::new(bg.clone(), zero()),
        vertex_a: Point2::new(gamma.clone(), zero()),
        side_gamma_b: alpha.clone(),
        side_b_gamma2: alpha.clone(),
        side_gamma_gamma1: diameter.scale(&(beta / gamma)),
        side_gamma2_gamma1: diameter.clone(),
        diag_b_gamma1: bg.clone(),
        diag_gamma_gamma2: diameter.scale(&(alpha / gamma)),
        tangents: Tangents {
            at_b: -(alpha / beta),
            at_gamma: alpha / (beta - gamma),
            at_gamma1: alpha / beta,
            at_gamma2: &bg / alpha,
        },
        tan_theta: alpha / &bg,
        circumcenter: Point2::new(&bg / &two, -(alpha / &two)),
        radius_squared: diameter2 / Rational::from_integer(4.into()),
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
    })
}

/// Tangent of an angle, or the distinguished right-angle case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AngleTangent {
    Finite(Rational),
    Right,
}

impl AngleTangent {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            AngleTangent::Finite(t) => Some(t),
            AngleTangent::Right => None,
        }
    }
}

/// Tangent of the interior angle at `at` of a counterclockwise polygon whose
/// neighbours are `prev` and `next`: cross over dot of the incident edges.
pub fn interior_tangent(prev: &Point2, at: &Point2, next: &Point2) -> AngleTangent {
    let d = dot(at, next, prev);
    if d.is_zero() {
        return AngleTangent::Right;
    }
    AngleTangent::Finite(cross(at, next, prev) / d)
}

pub fn interior_tangent_from_coords(q: &QuadConstruction, v: Vertex) -> AngleTangent {
    interior_tangent(q.vertex(v.prev()), q.vertex(v), q.vertex(v.next()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AngleIdentity {
    pub phi: f64,
    pub omega: f64,
    pub theta: f64,
    pub max_spread: f64,
    /// `(γ − β)/α = α/(γ + β)` holds exactly.
    pub half_angle_tangents_agree: bool,
}

fn angle_degrees(at: &Point2, p: &Point2, q: &Point2) -> f64 {
    let c = cross(at, p, q).abs().to_f64().unwrap_or(f64::NAN);
    let d = dot(at, p, q).to_f64().unwrap_or(f64::NAN);
    c.atan2(d).to_degrees()
}

/// Measures φ (base angle of the isosceles triangle ΓBΓ₂ at Γ₂), ω (half of
/// ∠BAΓ) and θ (`arctan(α/(β+γ))`) independently.
pub fn angle_identity_check(q: &QuadConstruction) -> AngleIdentity {
    let phi = angle_degrees(&q.vertex_gamma2, &q.vertex_b, &q.vertex_gamma);
    let omega = angle_degrees(&q.vertex_a, &q.vertex_b, &q.vertex_gamma) / 2.0;
    let theta = q.theta_degrees();
    let max_spread = (phi - omega).abs().max((omega - theta).abs()).max((phi - theta).abs());
    let (a, b, g) = (&q.alpha, &q.beta, &q.gamma);
    AngleIdentity {
        phi,
        omega,
        theta,
        max_spread,
        half_angle_tangents_agree: (g - b) / a == a / (g + b),
    }
}

/// Shoelace area over Γ, B, Γ₂, Γ₁.
pub fn quad_area(q: &QuadConstruction) -> Rational {
    twice_signed_area(&q.vertices()).abs() / Rational::from_integer(2.into())
}

/// Floating-point variant of the construction for irrational inputs; no
/// exactness claims are made.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxConstruction {
    pub vertices: [(f64, f64); 4],
    pub vertex_a: (f64, f64),
    pub sides: [f64; 4],
    pub diagonals: [f64; 2],
    pub tangents: [f64; 4],
    pub theta_degrees: f64,
    pub area: f64,
}

impl ApproxConstruction {
    /// Accepts `α² + β² = γ²` up to `1e−9` relative error.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self, GeometryError> {
        for (name, value) in [("α", alpha), ("β", beta), ("γ", gamma)] {
            if value <= 0.0 || !value.is_finite() {
                return Err(GeometryError::NonPositive { name, value: value.to_string() });
            }
        }
        let legs = alpha * alpha + beta * beta;
        let hyp = gamma * gamma;
        if (legs - hyp).abs() > 1e-9 * hyp {
            return Err(GeometryError::NotRightTriangle { lhs: legs.to_string(), rhs: hyp.to_string() });
        }
        let bg = beta + gamma;
        let diameter = (alpha * alpha + bg * bg).sqrt();
        let area = alpha * beta / 2.0 + beta * beta * alpha / gamma / 2.0 + alpha * bg / 2.0;
        Ok(Self {
            vertices: [(alpha * alpha / gamma, alpha * beta / gamma), (0.0, 0.0), (0.0, -alpha), (bg, 0.0)],
            vertex_a: (gamma, 0.0),
            sides: [alpha, alpha, diameter, beta / gamma * diameter],
            diagonals: [bg, alpha / gamma * diameter],
            tangents: [-alpha / beta, alpha / (beta - gamma), alpha / beta, bg / alpha],
            theta_degrees: (alpha / bg).atan().to_degrees(),
            area,
        })
    }
}
