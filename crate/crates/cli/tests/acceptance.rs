//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::f64::consts::PI;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use heron_quad_core::exactnum::{divides_via_power, exact_sqrt, rational_sqrt, Rational};
use heron_quad_core::family::{coprimality_certificate, f1_member, generators};
use heron_quad_core::geometry::{construct_quad, interior_tangent, interior_tangent_from_coords, AngleTangent};
use heron_quad_core::trigsolve::{classify, enumerate_solutions, residual, EquationCoeffs, SolutionSet};
use heron_quad_core::verify::{concyclic_determinant, ptolemy_check, shoelace};
use heron_quad_core::{QuadConstruction, Vertex};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::Value;

struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.check(elapsed < limit, format!("runtime {elapsed:.2?} exceeds {limit:?}"));
    }
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn int(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn run_cli(args: &[&str]) -> (Value, Duration, i32) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_heron-quad")).args(args).output().expect("spawn heron-quad");
    let elapsed = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    let text = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (value, elapsed, code)
}

fn surd_is(v: &Value, coef: &str, radicand: &str) -> bool {
    v["coef"] == coef && v["radicand"] == radicand
}

fn reproduce_small_triple() -> Verdict {
    let mut v = Verdict::new();
    let (doc, elapsed, code) = run_cli(&["construct", "3", "4", "5"]);
    v.check(code == 0, format!("exit code {code}"));
    let r = &doc["result"];
    v.check(surd_is(&r["sides"]["Gamma2Gamma1"], "3", "10"), format!("|Γ₂Γ₁| = {}", r["sides"]["Gamma2Gamma1"]["display"]));
    v.check(surd_is(&r["sides"]["GammaGamma1"], "12/5", "10"), format!("x = {}", r["sides"]["GammaGamma1"]["display"]));
    v.check(surd_is(&r["diagonals"]["BGamma1"], "9", "1"), format!("|BΓ₁| = {}", r["diagonals"]["BGamma1"]["display"]));
    v.check(surd_is(&r["diagonals"]["GammaGamma2"], "9/5", "10"), format!("y = {}", r["diagonals"]["GammaGamma2"]["display"]));
    let t = &r["tangents"];
    let got = [&t["B"], &t["Gamma"], &t["Gamma1"], &t["Gamma2"]];
    v.check(got == ["-3/4", "-3", "3/4", "3"], format!("tangents {got:?}"));
    let theta = r["theta"]["degrees"].as_f64().unwrap_or(f64::NAN);
    v.check((theta - 18.43494882).abs() < 1e-7, format!("θ = {theta}°"));
    v.within(elapsed, Duration::from_secs(1));
    v
}

fn reproduce_worked_example() -> Verdict {
    let mut v = Verdict::new();
    let (doc, _, code) = run_cli(&["construct", "120", "35", "125"]);
    v.check(code == 0, format!("exit code {code}"));
    let r = &doc["result"];
    let s = &r["sides"];
    let sides = [&s["GammaB"], &s["BGamma2"], &s["Gamma2Gamma1"], &s["GammaGamma1"]];
    let ok = sides.iter().zip(["120", "120", "200", "56"]).all(|(x, want)| surd_is(x, want, "1"));
    v.check(ok, format!("sides {:?}", sides.map(|x| &x["display"])));
    let d = &r["diagonals"];
    v.check(surd_is(&d["BGamma1"], "160", "1") && surd_is(&d["GammaGamma2"], "192", "1"), "diagonals");
    let t = &r["tangents"];
    let got = [&t["B"], &t["Gamma"], &t["Gamma1"], &t["Gamma2"]];
    let stated = ["-24/7", "-8/3", "24/7", "8/3"];
    v.check(got == stated, format!("tangents {got:?}, stated {stated:?}"));
    let theta = r["theta"]["degrees"].as_f64().unwrap_or(f64::NAN);
    v.check((theta - 36.86989765).abs() < 1e-7, format!("θ = {theta}°"));
    let flagged = doc["errata"]
        .as_array()
        .is_some_and(|es| es.iter().any(|e| e["quantity"] == "|ΓΓ₂|" && e["printed"] == "92" && e["computed"] == "192"));
    v.check(flagged, "printed y = 92 not flagged against 192");
    v
}

fn reproduce_heron_table() -> Verdict {
    let mut v = Verdict::new();
    let (doc, elapsed, code) = run_cli(&["heron-table", "--t-max", "3"]);
    v.check(code == 0, format!("exit code {code}"));
    let rows = doc["result"]["rows"].as_array().cloned().unwrap_or_default();
    v.check(rows.len() == 2, format!("{} rows", rows.len()));
    let printed = [
        ["120", "56", "200", "120", "160", "192"],
        ["1560", "2856", "4056", "1560", "3744", "2880"],
    ];
    let cols = ["B_Gamma", "Gamma_Gamma1", "Gamma1_Gamma2", "Gamma2_B", "B_Gamma1", "Gamma_Gamma2"];
    for (row, want) in rows.iter().zip(printed) {
        let got: Vec<&Value> = cols.iter().map(|c| &row[*c]).collect();
        v.check(got.iter().zip(want).all(|(g, w)| *g == w), format!("lengths {got:?}"));
    }
    let area = |i: usize| rows.get(i).map(|r| r["area"].clone()).unwrap_or(Value::Null);
    v.check(area(0) == "12288", format!("row 1 area {}", area(0)));
    let expected = (4u64 * 12u64.pow(5) * 5).to_string();
    v.check(area(1) == expected.as_str(), format!("row 2 area {}", area(1)));
    let flagged = doc["errata"]
        .as_array()
        .is_some_and(|es| es.iter().any(|e| e["quantity"] == "area" && e["printed"] == "12888" && e["computed"] == "12288"));
    v.check(flagged, "printed area 12888 not flagged");
    v.within(elapsed, Duration::from_secs(1));
    v
}

/// The six solution-set shapes: all reals, odd multiples of π only, odd π plus
/// one family, no solutions, one tangent family, two families.
#[derive(Clone, Copy, Debug)]
enum Case {
    AllReals,
    OddPiOnly,
    OddPiAndFamily,
    Empty,
    Tangent,
    TwoFamilies,
}

const CASES: [Case; 6] = [Case::AllReals, Case::OddPiOnly, Case::OddPiAndFamily, Case::Empty, Case::Tangent, Case::TwoFamilies];

fn random_rational(rng: &mut StdRng, bound: i64) -> Rational {
    let den = rng.gen_range(1..=12);
    q(rng.gen_range(-bound * den..=bound * den), den)
}

fn random_nonzero(rng: &mut StdRng, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

fn abs_le(r: &Rational, bound: i64) -> bool {
    r.abs() <= q(bound, 1)
}

/// A coefficient triple of the requested shape with every entry in `[−20, 20]`.
fn sample(rng: &mut StdRng, case: Case) -> [Rational; 3] {
    loop {
        let triple = match case {
            Case::AllReals => [q(0, 1), q(0, 1), q(0, 1)],
            Case::OddPiOnly => {
                let b = random_nonzero(rng, 20);
                [q(0, 1), b.clone(), -b]
            }
            Case::OddPiAndFamily => {
                let b = random_rational(rng, 20);
                [random_nonzero(rng, 20), b.clone(), -b]
            }
            Case::Empty | Case::TwoFamilies => [random_rational(rng, 20), random_rational(rng, 20), random_rational(rng, 20)],
            Case::Tangent => {
                // Rational point on the circle α² + β² = γ², scaled.
                let t = random_rational(rng, 5);
                let one = q(1, 1);
                let s = random_nonzero(rng, 20) / (&one + &t * &t);
                let mut a = &s * q(2, 1) * &t;
                let mut b = &s * (&one - &t * &t);
                if rng.gen_bool(0.5) {
                    std::mem::swap(&mut a, &mut b);
                }
                [a, b, s.clone() * (&one + &t * &t)]
            }
        };
        let [a, b, c] = &triple;
        if !(abs_le(a, 20) && abs_le(b, 20) && abs_le(c, 20)) {
            continue;
        }
        let d = a * a + b * b - c * c;
        let s_zero = (b + c).is_zero();
        let ok = match case {
            Case::AllReals | Case::OddPiOnly | Case::OddPiAndFamily => true,
            Case::Empty => !s_zero && d.is_negative(),
            Case::Tangent => !s_zero && d.is_zero(),
            Case::TwoFamilies => !s_zero && d.is_positive(),
        };
        if ok {
            return triple;
        }
    }
}

const SCAN_STEP: f64 = 1e-5;

/// Walks `[−π, 3π)` in `SCAN_STEP` increments and returns the points where the
/// residual changes sign or has a local minimum of absolute value near zero.
fn scan_roots(alpha: f64, beta: f64, gamma: f64) -> Vec<f64> {
    let start = -PI;
    let steps = ((4.0 * PI) / SCAN_STEP) as usize;
    let (sh, ch) = SCAN_STEP.sin_cos();
    let scale = alpha.abs().max(beta.abs()).max(gamma.abs()).max(1.0);
    let touch = 4.0 * scale * SCAN_STEP * SCAN_STEP;
    let mut hits = Vec::new();
    let (mut s, mut c) = start.sin_cos();
    let f = |s: f64, c: f64| alpha * s + beta * c - gamma;
    let mut prev2 = f64::NAN;
    let mut prev = f(s, c);
    for i in 1..=steps {
        if i % 1024 == 0 {
            (s, c) = (start + i as f64 * SCAN_STEP).sin_cos();
        } else {
            (s, c) = (s * ch + c * sh, c * ch - s * sh);
        }
        let cur = f(s, c);
        let x = start + i as f64 * SCAN_STEP;
        let crossing = prev == 0.0 || (prev < 0.0) != (cur < 0.0);
        let touching = prev.abs() <= touch && prev.abs() <= prev2.abs() && prev.abs() <= cur.abs();
        if crossing || touching {
            hits.push(x - SCAN_STEP);
        }
        prev2 = prev;
        prev = cur;
    }
    hits
}

fn solver_property_suite() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let samples: Vec<(Case, [Rational; 3])> = (0..1000)
        .map(|i| {
            let case = CASES[i % CASES.len()];
            (case, sample(&mut rng, case))
        })
        .collect();
    let matched = AtomicUsize::new(0);
    let problems: Vec<String> = samples
        .par_iter()
        .filter_map(|(case, [a, b, c])| {
            let coeffs = EquationCoeffs::exact(a.clone(), b.clone(), c.clone());
            let set = classify(&coeffs);
            let label = format!("{case:?} ({a}, {b}, {c})");
            let shape_ok = match case {
                Case::AllReals => matches!(set, SolutionSet::AllReals),
                Case::Empty => matches!(set, SolutionSet::Empty),
                Case::OddPiOnly | Case::Tangent => set.families().len() == 1,
                Case::OddPiAndFamily | Case::TwoFamilies => !set.families().is_empty(),
            };
            if !shape_ok {
                return Some(format!("{label}: classified as {}", set.kind_name()));
            }
            let (fa, fb, fc) = coeffs.to_f64();
            if let SolutionSet::AllReals = set {
                let worst = (0..1000).map(|i| residual(&coeffs, -PI + i as f64 * 0.0125).abs()).fold(0.0, f64::max);
                return (worst != 0.0).then(|| format!("{label}: all-reals residual {worst}"));
            }
            let xs = enumerate_solutions(&set, -1, 2).expect("countable");
            if let Some(bad) = xs.iter().find(|&&x| residual(&coeffs, x).abs() >= 1e-9) {
                return Some(format!("{label}: residual {} at {bad}", residual(&coeffs, *bad)));
            }
            let hits = scan_roots(fa, fb, fc);
            let missed = hits.iter().find(|h| !xs.iter().any(|x| (x - *h).abs() <= 1e-4));
            matched.fetch_add(hits.len(), Ordering::Relaxed);
            missed.map(|h| format!("{label}: scan found a root near {h} not in the solution set"))
        })
        .collect();
    v.check(problems.is_empty(), format!("{} of 1000 cases failed", problems.len()));
    v.note(format!("{} scan roots, each matched to an enumerated solution", matched.into_inner()));
    for p in problems.iter().take(5) {
        v.note(p.clone());
    }
    v.within(start.elapsed(), Duration::from_secs(30));
    v
}

fn coord_tangent(q: &QuadConstruction, at: Vertex) -> Option<Rational> {
    interior_tangent_from_coords(q, at).finite().cloned()
}

/// Shoelace over the vertices in order, computed from coordinates.
fn coordinate_area(q: &QuadConstruction) -> Rational {
    let pts: Vec<_> = q.vertices().into_iter().cloned().collect();
    shoelace(&pts).expect("simple quadrilateral")
}

struct GeometryTally {
    cases: usize,
    failures: Vec<String>,
    printed_form_mismatches: usize,
}

fn geometry_case(tally: &mut GeometryTally, delta: u64, m: u64, n: u64, l2: Rational) {
    tally.cases += 1;
    let label = format!("(δ, m, n) = ({delta}, {m}, {n})");
    let (d, mr, nr) = (int(delta), int(m), int(n));
    let alpha = q(2, 1) * &d * &mr * &nr;
    let beta = &d * (&mr * &mr - &nr * &nr);
    let gamma = &d * (&mr * &mr + &nr * &nr);
    let quad = construct_quad(&alpha, &beta, &gamma).expect("Pythagorean by construction");
    let mut failures = Vec::new();
    let mut fail = |what: &str| failures.push(format!("{label}: {what}"));

    if !concyclic_determinant(quad.vertices()).is_zero() {
        fail("concyclicity determinant");
    }
    if !ptolemy_check(&quad) {
        fail("Ptolemy identity");
    }
    let area = coordinate_area(&quad);
    let diff = &mr * &mr - &nr * &nr;
    let bracket = &d * &d * &mr * &nr * (&diff + &diff * &diff / (&mr * &mr + &nr * &nr) + q(2, 1) * &mr * &mr);
    let closed = q(4, 1) * &d * &d * mr.pow(5) * &nr / &l2;
    if area != bracket || area != closed {
        fail(&format!("area {area}, bracket {bracket}, closed {closed}"));
    }

    // General closed forms in α, β, γ.
    let general = [
        (Vertex::B, -(&alpha / &beta)),
        (Vertex::Gamma, &alpha / (&beta - &gamma)),
        (Vertex::Gamma1, &alpha / &beta),
        (Vertex::Gamma2, (&beta + &gamma) / &alpha),
    ];
    for (vx, want) in &general {
        match coord_tangent(&quad, *vx) {
            Some(got) if &got == want => {}
            got => fail(&format!("tangent at {} = {got:?}, closed form {want}", vx.label())),
        }
    }
    // The same values written in m, n; the printed forms at Γ and Γ₂ carry an extra factor 2.
    let tan_double = q(2, 1) * &mr * &nr / &diff;
    let in_mn = [-tan_double.clone(), -(&mr / &nr), tan_double, &mr / &nr];
    if general.iter().zip(&in_mn).any(|((_, g), s)| g != s) {
        fail("m, n specialisation disagrees with the general form");
    }
    let printed = [q(-2, 1) * &mr / &nr, q(2, 1) * &mr / &nr];
    if coord_tangent(&quad, Vertex::Gamma) != Some(printed[0].clone())
        || coord_tangent(&quad, Vertex::Gamma2) != Some(printed[1].clone())
    {
        tally.printed_form_mismatches += 1;
    }

    let sum = |a: Vertex, b: Vertex| match (coord_tangent(&quad, a), coord_tangent(&quad, b)) {
        (Some(x), Some(y)) => (x + y).is_zero(),
        _ => false,
    };
    if !sum(Vertex::B, Vertex::Gamma1) || !sum(Vertex::Gamma, Vertex::Gamma2) {
        fail("opposite tangents do not cancel");
    }

    let n_over_m = &nr / &mr;
    let at_gamma1 = interior_tangent(&quad.vertex_b, &quad.vertex_gamma1, &quad.vertex_gamma2);
    let coord_theta = match at_gamma1 {
        AngleTangent::Finite(t) => t.abs(),
        AngleTangent::Right => q(-1, 1),
    };
    if quad.tan_theta != n_over_m || coord_theta != n_over_m {
        fail(&format!("tan θ = {} (coordinates {coord_theta}), expected {n_over_m}", quad.tan_theta));
    }
    tally.failures.extend(failures);
}

fn geometry_invariant_suite() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let pairs: Vec<(u64, u64)> =
        (2..=50u64).flat_map(|m| (1..m).map(move |n| (m, n))).filter(|&(m, n)| m.gcd(&n) == 1 && (m + n) % 2 == 1).collect();
    let tallies: Vec<GeometryTally> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let mut tally = GeometryTally { cases: 0, failures: Vec::new(), printed_form_mismatches: 0 };
            let l2 = m * m + n * n;
            match exact_sqrt(&BigUint::from(l2)).and_then(|l| l.to_u64()) {
                Some(l) => {
                    for delta in [1, l, 2 * l] {
                        geometry_case(&mut tally, delta, m, n, int(l2));
                    }
                    if let Err(e) = f1_member(1, m, n) {
                        tally.failures.push(format!("f1_member({m}, {n}) rejected: {e}"));
                    }
                }
                None => {
                    for delta in [1, 2] {
                        geometry_case(&mut tally, delta, m, n, int(l2));
                    }
                }
            }
            tally
        })
        .collect();
    let cases: usize = tallies.iter().map(|t| t.cases).sum();
    let failures: Vec<&String> = tallies.iter().flat_map(|t| &t.failures).collect();
    let printed: usize = tallies.iter().map(|t| t.printed_form_mismatches).sum();
    v.check(failures.is_empty(), format!("{} failures", failures.len()));
    for f in failures.iter().take(5) {
        v.note((*f).clone());
    }
    v.note(format!("{cases} cases over {} pairs", pairs.len()));
    v.note(format!("printed −2m/n, 2m/n forms at Γ, Γ₂ disagree with coordinates in {printed} of {cases} cases"));
    v.within(start.elapsed(), Duration::from_secs(60));
    v
}

fn length_is_integer(len2: &Rational) -> bool {
    rational_sqrt(len2).is_some_and(|r| r.is_integer())
}

fn heron_criterion() -> Verdict {
    let mut v = Verdict::new();
    let mut members = 0usize;
    let mut heron = 0usize;
    for (_, (m, n, l)) in generators(10) {
        for delta in 1..=3 * l {
            let mem = f1_member(delta, m, n).expect("generator output is valid");
            let q = mem.construction();
            let [g, b, g2, g1] = q.vertices();
            let pairs = [(g, b), (g, g1), (g1, g2), (g2, b), (b, g1), (g, g2)];
            let integral = pairs.iter().all(|(p, r)| length_is_integer(&p.dist2(r))) && coordinate_area(&q).is_integer();
            let divisible = delta % l == 0;
            members += 1;
            heron += usize::from(mem.is_heron);
            if mem.is_heron != divisible || divisible != integral {
                v.check(
                    false,
                    format!("(δ, m, n, L) = ({delta}, {m}, {n}, {l}): heron {}, L | δ {divisible}, integral {integral}", mem.is_heron),
                );
            }
        }
    }
    v.note(format!("{members} members, {heron} Heron"));
    let one = BigUint::from(1u32);
    let mut certs = 0usize;
    for (_, (m, n, l)) in generators(30) {
        certs += 1;
        let (a, b) = coprimality_certificate(m, n, l);
        let direct = (l.gcd(&(2 * m * (m * m - n * n))), l.gcd(&(4 * n * m * m)));
        if a != one || b != one || direct != (1, 1) {
            v.check(false, format!("(m, n, L) = ({m}, {n}, {l}): certificate ({a}, {b}), direct {direct:?}"));
        }
    }
    v.note(format!("{certs} coprimality certificates"));
    v
}

fn number_theory_facts() -> Verdict {
    let mut v = Verdict::new();
    for a in 1..=200u32 {
        for b in 1..=200u32 {
            let got = divides_via_power(&BigUint::from(a), &BigUint::from(b), 2);
            if got != (b % a == 0) {
                v.check(false, format!("divides_via_power({a}, {b}, 2) = {got}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    let mut ks: Vec<u64> = (0..10_000 - 2).map(|_| rng.gen_range(1..=1_000_000)).collect();
    ks.extend([1, 1_000_000]);
    for k in ks {
        let sq = BigUint::from(k) * k;
        if exact_sqrt(&sq) != Some(BigUint::from(k)) {
            v.check(false, format!("exact_sqrt({k}²) wrong"));
        }
        if exact_sqrt(&(&sq + 1u32)).is_some() {
            v.check(false, format!("exact_sqrt({k}² + 1) claims a root"));
        }
    }
    v
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 7] = [
        ("construct 3 4 5 reproduction", reproduce_small_triple),
        ("construct 120 35 125 reproduction with erratum", reproduce_worked_example),
        ("heron-table --t-max 3 reproduction", reproduce_heron_table),
        ("solver property suite", solver_property_suite),
        ("geometry invariant suite", geometry_invariant_suite),
        ("Heron criterion", heron_criterion),
        ("number theory facts", number_theory_facts),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let status = if verdict.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!verdict.pass);
        println!("criterion {} {status}: {name} ({:.2?})", i + 1, start.elapsed());
        for note in &verdict.notes {
            println!("    {note}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
