//! JSON shapes for exact values. Exact quantities are strings so that big
//! integers survive; approximations sit next to them at 10 significant
//! digits.

use heron_quad_core::exactnum::{Rational, Surd};
use heron_quad_core::geometry::Point2;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn approx(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.9e}").parse().unwrap_or(x);
    json!(rounded)
}

pub fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rat_with_approx(r: &Rational) -> Value {
    json!({ "exact": rat(r), "approx": approx(r.to_f64().unwrap_or(f64::NAN)) })
}

pub fn surd(s: &Surd) -> Value {
    json!({
        "coef": rat(s.coefficient()),
        "radicand": s.radicand().to_string(),
        "display": s.to_string(),
        "approx": approx(s.to_f64()),
    })
}

pub fn point(p: &Point2) -> Value {
    json!({ "x": rat(&p.x), "y": rat(&p.y) })
}

pub fn degrees_display(deg: f64) -> String {
    format!("{deg:.5}")
}
