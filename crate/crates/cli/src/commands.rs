use std::path::Path;

use heron_quad_core::exactnum::{classify_triple, parse_rational, LegForm, Rational};
use heron_quad_core::family::{enumerate_f1, f1_member, f1_member_from_triple, generators, heron_member, F1Member};
use heron_quad_core::geometry::{angle_identity_check, construct_quad, quad_area, ApproxConstruction, QuadConstruction};
use heron_quad_core::trigsolve::{
    classify_with, enumerate_solutions, half_angle_quadratic, residual, EquationCoeffs, Quadratic, SolutionSet, TanHalf,
    Tolerance,
};
use heron_quad_core::verify::{
    verify_construction, verify_construction_with_printed, verify_member_with_printed, CheckStatus, VerificationReport,
};
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::render::{approx, degrees_display, point, rat, rat_with_approx, surd};
use crate::{exit, svg, CliError, Command, Outcome, OutputEnvelope};

pub fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Solve { alpha, beta, gamma, k, tolerance } => cmd_solve(alpha, beta, gamma, k, *tolerance),
        Command::Construct { alpha, beta, gamma, svg } => cmd_construct(alpha, beta, gamma, svg.as_deref()),
        Command::Family { t_max, delta_max, heron_only } => cmd_family(*t_max, *delta_max, *heron_only),
        Command::HeronTable { t_max, delta_multiples } => cmd_heron_table(*t_max, *delta_multiples),
        Command::Verify { input, triple, params } => cmd_verify(input.as_deref(), triple.as_deref(), params.as_deref()),
        Command::Svg { alpha, beta, gamma } => cmd_svg(alpha, beta, gamma),
    }
}

/// A numeric literal: integers and `p/q` are exact, decimals are floats.
#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Exact(Rational),
    Float(f64),
}

impl Literal {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if let Ok(r) = parse_rational(s) {
            return Ok(Literal::Exact(r));
        }
        match s.trim().parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Literal::Float(x)),
            _ => Err(CliError::Parse(format!("not a number: {s:?}"))),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            Literal::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Literal::Float(x) => *x,
        }
    }
}

fn parse_three(a: &str, b: &str, c: &str) -> Result<[Literal; 3], CliError> {
    Ok([Literal::parse(a)?, Literal::parse(b)?, Literal::parse(c)?])
}

fn parse_k_range(s: &str) -> Result<(i64, i64), CliError> {
    let err = || CliError::Parse(format!("expected --k LO..HI, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(err)?;
    let lo: i64 = lo.trim().parse().map_err(|_| err())?;
    let hi: i64 = hi.trim().parse().map_err(|_| err())?;
    if lo > hi {
        return Err(CliError::Parse(format!("empty k range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn tan_half_json(t: &TanHalf, approx_value: f64) -> Value {
    match t {
        TanHalf::Infinite => json!({ "form": "infinite" }),
        TanHalf::Rational(r) => json!({ "form": "rational", "exact": rat(r), "approx": approx(approx_value) }),
        TanHalf::Quadratic { rational_part, surd_part } => json!({
            "form": "quadratic",
            "rational_part": rat(rational_part),
            "surd_part": surd(surd_part),
            "approx": approx(approx_value),
        }),
        TanHalf::Float(_) => json!({ "form": "float", "approx": approx(approx_value) }),
    }
}

pub fn cmd_solve(a: &str, b: &str, c: &str, k: &str, tolerance: Option<f64>) -> Result<Outcome, CliError> {
    let lits = parse_three(a, b, c)?;
    let (k_min, k_max) = parse_k_range(k)?;
    let coeffs = match &lits {
        [Literal::Exact(x), Literal::Exact(y), Literal::Exact(z)] => EquationCoeffs::exact(x.clone(), y.clone(), z.clone()),
        _ => EquationCoeffs::float(lits[0].to_f64(), lits[1].to_f64(), lits[2].to_f64()),
    };
    let tol = tolerance.map(|boundary| Tolerance { boundary }).unwrap_or_default();
    let set = classify_with(&coeffs, tol);

    let quadratic = match half_angle_quadratic(&coeffs) {
        Quadratic::Exact(q) => json!({
            "c2": rat(&q.c2), "c1": rat(&q.c1), "c0": rat(&q.c0), "discriminant": rat(&q.discriminant),
        }),
        Quadratic::Float(q) => json!({
            "c2": approx(q.c2), "c1": approx(q.c1), "c0": approx(q.c0), "discriminant": approx(q.discriminant),
        }),
    };
    let families: Vec<Value> = set
        .families()
        .iter()
        .map(|f| {
            json!({
                "kind": f.kind,
                "base_radians": f.base,
                "base_degrees": f.base_degrees(),
                "half_angle_degrees": f.half_base_degrees(),
                "half_angle_display": degrees_display(f.half_base_degrees()),
                "tan_half": tan_half_json(&f.tan_half, f.tan_half_approx),
            })
        })
        .collect();
    let (solutions, max_residual) = match enumerate_solutions(&set, k_min, k_max) {
        Ok(xs) => {
            let worst = xs.iter().map(|&x| residual(&coeffs, x).abs()).fold(0.0, f64::max);
            (json!(xs), json!(worst))
        }
        Err(_) => (Value::Null, Value::Null),
    };
    let result = json!({
        "exact": coeffs.is_exact(),
        "half_angle_quadratic": quadratic,
        "kind": set.kind_name(),
        "families": families,
        "k_range": [k_min, k_max],
        "solutions": solutions,
        "max_abs_residual": max_residual,
    });
    let inputs = json!({ "alpha": a, "beta": b, "gamma": c, "k": k });
    let mut out = Outcome::json(OutputEnvelope::new("solve", inputs, result, Vec::new()));
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(["x", "residual"]).expect("in-memory");
    if let SolutionSet::Families(_) = set {
        for x in enumerate_solutions(&set, k_min, k_max).unwrap_or_default() {
            csv.write_record([format!("{x:.15e}"), format!("{:.3e}", residual(&coeffs, x))]).expect("in-memory");
        }
    }
    out.csv = Some(String::from_utf8(csv.into_inner().expect("in-memory")).expect("utf-8"));
    Ok(out)
}

fn exact_triple(lits: &[Literal; 3]) -> Option<[Rational; 3]> {
    match lits {
        [Literal::Exact(x), Literal::Exact(y), Literal::Exact(z)] => Some([x.clone(), y.clone(), z.clone()]),
        _ => None,
    }
}

fn build_construction(a: &str, b: &str, c: &str) -> Result<QuadConstruction, CliError> {
    let lits = parse_three(a, b, c)?;
    let [x, y, z] = exact_triple(&lits).ok_or_else(|| CliError::Parse("exact construction needs integer or p/q literals".into()))?;
    construct_quad(&x, &y, &z).map_err(|e| CliError::Domain(e.to_string()))
}

pub fn construction_json(q: &QuadConstruction) -> Value {
    let id = angle_identity_check(q);
    let theta = q.theta_degrees();
    json!({
        "triple": { "alpha": rat(&q.alpha), "beta": rat(&q.beta), "gamma": rat(&q.gamma) },
        "vertices": {
            "Gamma": point(&q.vertex_gamma),
            "B": point(&q.vertex_b),
            "Gamma2": point(&q.vertex_gamma2),
            "Gamma1": point(&q.vertex_gamma1),
            "A": point(&q.vertex_a),
        },
        "sides": {
            "GammaB": surd(&q.side_gamma_b.clone().into()),
            "BGamma2": surd(&q.side_b_gamma2.clone().into()),
            "Gamma2Gamma1": surd(&q.side_gamma2_gamma1),
            "GammaGamma1": surd(&q.side_gamma_gamma1),
        },
        "diagonals": {
            "BGamma1": surd(&q.diag_b_gamma1.clone().into()),
            "GammaGamma2": surd(&q.diag_gamma_gamma2),
        },
        "tangents": {
            "B": rat(&q.tangents.at_b),
            "Gamma": rat(&q.tangents.at_gamma),
            "Gamma1": rat(&q.tangents.at_gamma1),
            "Gamma2": rat(&q.tangents.at_gamma2),
        },
        "theta": {
            "tan": rat(&q.tan_theta),
            "degrees": theta,
            "display": degrees_display(theta),
        },
        "angles": {
            "phi_degrees": id.phi,
            "omega_degrees": id.omega,
            "theta_degrees": id.theta,
            "max_spread": id.max_spread,
        },
        "circumcircle": { "center": point(&q.circumcenter), "radius_squared": rat(&q.radius_squared) },
        "area": rat_with_approx(&quad_area(q)),
    })
}

fn summary(report: &VerificationReport) -> Value {
    let count = |s: CheckStatus| report.checks.iter().filter(|c| c.status == s).count();
    json!({
        "checks": report.checks.len(),
        "pass": count(CheckStatus::Pass),
        "fail": count(CheckStatus::Fail),
        "erratum": count(CheckStatus::Erratum),
    })
}

pub fn cmd_construct(a: &str, b: &str, c: &str, svg_path: Option<&Path>) -> Result<Outcome, CliError> {
    let inputs = json!({ "alpha": a, "beta": b, "gamma": c });
    let lits = parse_three(a, b, c)?;
    if exact_triple(&lits).is_none() {
        if svg_path.is_some() {
            return Err(CliError::Parse("--svg needs an exact triple".into()));
        }
        let approx_q = ApproxConstruction::new(lits[0].to_f64(), lits[1].to_f64(), lits[2].to_f64())
            .map_err(|e| CliError::Domain(e.to_string()))?;
        let result = json!({ "exact": false, "construction": approx_q });
        return Ok(Outcome::json(OutputEnvelope::new("construct", inputs, result, Vec::new())));
    }
    let q = build_construction(a, b, c)?;
    let report = verify_construction_with_printed(&q);
    let mut result = construction_json(&q);
    result["exact"] = json!(true);
    result["verification"] = summary(&report);
    if let Some(path) = svg_path {
        std::fs::write(path, svg::render(&q))?;
        result["svg"] = json!(path.display().to_string());
    }
    let mut out = Outcome::json(OutputEnvelope::new("construct", inputs, result, report.errata.clone()));
    if report.has_failures() {
        out.exit_code = exit::VERIFICATION;
    }
    Ok(out)
}

pub fn cmd_svg(a: &str, b: &str, c: &str) -> Result<Outcome, CliError> {
    let q = build_construction(a, b, c)?;
    let inputs = json!({ "alpha": a, "beta": b, "gamma": c });
    let mut out = Outcome::json(OutputEnvelope::new("svg", inputs, Value::Null, Vec::new()));
    out.raw = Some(svg::render(&q));
    Ok(out)
}

/// Column headers in table order.
pub const TABLE_COLUMNS: [&str; 12] = [
    "t1", "t2", "m", "n", "delta", "B_Gamma", "Gamma_Gamma1", "Gamma1_Gamma2", "Gamma2_B", "B_Gamma1", "Gamma_Gamma2", "area",
];

fn table_row(mem: &F1Member) -> Vec<String> {
    let p = &mem.params;
    let g = p.generator.expect("table rows come from generators");
    let mut row = vec![g.t1.to_string(), g.t2.to_string(), p.m.to_string(), p.n.to_string(), p.delta.to_string()];
    row.extend(mem.table_lengths().iter().map(|r| r.to_string()));
    row.push(mem.area.to_string());
    row
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory");
    for r in rows {
        w.write_record(r).expect("in-memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
}

pub fn cmd_heron_table(t_max: u64, multiples: u64) -> Result<Outcome, CliError> {
    if t_max < 2 || multiples < 1 {
        return Err(CliError::Parse("need --t-max ≥ 2 and --delta-multiples ≥ 1".into()));
    }
    let mut rows = Vec::new();
    let mut errata = Vec::new();
    let mut failures = Vec::new();
    for (generator, (m, n, l)) in generators(t_max) {
        for j in 1..=multiples {
            let mut mem = heron_member(m, n, l, j).map_err(|e| CliError::Domain(e.to_string()))?;
            mem.params.generator = Some(generator);
            let report = verify_member_with_printed(&mem);
            failures.extend(report.failures().map(|c| format!("{}: {}", report.subject, c.name)));
            errata.extend(report.errata);
            rows.push(table_row(&mem));
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| Value::Object(TABLE_COLUMNS.iter().zip(r).map(|(k, v)| (k.to_string(), json!(v))).collect()))
        .collect();
    let result = json!({ "columns": TABLE_COLUMNS, "rows": json_rows, "verified": failures.is_empty(), "failures": failures });
    let inputs = json!({ "t_max": t_max, "delta_multiples": multiples });
    let mut out = Outcome::json(OutputEnvelope::new("heron-table", inputs, result, errata));
    out.csv = Some(csv_text(&TABLE_COLUMNS, &rows));
    if !failures.is_empty() {
        out.exit_code = exit::VERIFICATION;
    }
    Ok(out)
}

const FAMILY_COLUMNS: [&str; 19] = [
    "t1", "t2", "form", "m", "n", "L", "delta", "B_Gamma", "Gamma_Gamma1", "Gamma1_Gamma2", "Gamma2_B", "B_Gamma1",
    "Gamma_Gamma2", "area", "tan_B", "tan_Gamma", "tan_Gamma1", "tan_Gamma2", "is_heron",
];

pub fn cmd_family(t_max: u64, delta_max: u64, heron_only: bool) -> Result<Outcome, CliError> {
    if t_max < 2 || delta_max < 1 {
        return Err(CliError::Parse("need --t-max ≥ 2 and --delta-max ≥ 1".into()));
    }
    let rows: Vec<Vec<String>> = enumerate_f1(t_max, delta_max, heron_only)
        .map(|mem| {
            let p = mem.params;
            let g = p.generator.expect("enumerated");
            let mut row = vec![g.t1.to_string(), g.t2.to_string(), g.form.to_string()];
            row.extend([p.m, p.n, p.l, p.delta].map(|v| v.to_string()));
            row.extend(mem.table_lengths().iter().map(|r| r.to_string()));
            row.push(mem.area.to_string());
            let t = &mem.tangents;
            row.extend([&t.at_b, &t.at_gamma, &t.at_gamma1, &t.at_gamma2].map(|r| r.to_string()));
            row.push(mem.is_heron.to_string());
            row
        })
        .collect();
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            Value::Object(
                FAMILY_COLUMNS
                    .iter()
                    .zip(r)
                    .map(|(k, v)| {
                        let v = if *k == "is_heron" { json!(v == "true") } else { json!(v) };
                        (k.to_string(), v)
                    })
                    .collect(),
            )
        })
        .collect();
    let inputs = json!({ "t_max": t_max, "delta_max": delta_max, "heron_only": heron_only });
    let result = json!({ "count": rows.len(), "columns": FAMILY_COLUMNS, "rows": json_rows });
    let mut out = Outcome::json(OutputEnvelope::new("family", inputs, result, Vec::new()));
    out.csv = Some(csv_text(&FAMILY_COLUMNS, &rows));
    Ok(out)
}

fn report_result(report: &VerificationReport, extra: Value) -> Value {
    json!({
        "subject": report.subject,
        "passed": !report.has_failures(),
        "summary": summary(report),
        "checks": report.checks,
        "details": extra,
    })
}

fn verify_outcome(inputs: Value, report: VerificationReport, extra: Value) -> Outcome {
    let result = report_result(&report, extra);
    let mut out = Outcome::json(OutputEnvelope::new("verify", inputs, result, report.errata.clone()));
    if report.has_failures() {
        out.exit_code = exit::VERIFICATION;
    }
    out
}

fn verify_triple(a: &str, b: &str, c: &str, inputs: Value) -> Result<Outcome, CliError> {
    let q = build_construction(a, b, c)?;
    let integral = [&q.alpha, &q.beta, &q.gamma].iter().all(|r| r.is_integer() && r.is_positive());
    let member = if integral {
        let to_big = |r: &Rational| r.to_integer().to_biguint().expect("positive");
        classify_triple(to_big(&q.alpha), to_big(&q.beta), to_big(&q.gamma))
            .ok()
            .filter(|t| t.leg_form == LegForm::EvenLegFirst)
            .and_then(|t| f1_member_from_triple(&t).ok())
    } else {
        None
    };
    let (report, extra) = match member {
        Some(mem) => {
            let mut report = verify_construction(&q);
            report.merge(verify_member_with_printed(&mem));
            let p = mem.params;
            (report, json!({ "family_member": { "delta": p.delta, "m": p.m, "n": p.n, "L": p.l, "is_heron": mem.is_heron } }))
        }
        None => (verify_construction_with_printed(&q), json!({ "family_member": null })),
    };
    Ok(verify_outcome(inputs, report, extra))
}

fn verify_params(delta: u64, m: u64, n: u64, inputs: Value) -> Result<Outcome, CliError> {
    let mem = f1_member(delta, m, n).map_err(|e| CliError::Domain(e.to_string()))?;
    let report = verify_member_with_printed(&mem);
    let p = mem.params;
    let extra = json!({
        "family_member": { "delta": p.delta, "m": p.m, "n": p.n, "L": p.l, "is_heron": mem.is_heron },
        "GammaGamma1": rat(&mem.side_gamma_gamma1),
        "GammaGamma2": rat(&mem.diag_gamma_gamma2),
    });
    Ok(verify_outcome(inputs, report, extra))
}

fn json_str(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

pub fn cmd_verify(input: Option<&Path>, triple: Option<&[String]>, params: Option<&[u64]>) -> Result<Outcome, CliError> {
    if let Some(t) = triple {
        let inputs = json!({ "triple": t });
        return verify_triple(&t[0], &t[1], &t[2], inputs);
    }
    if let Some(p) = params {
        let inputs = json!({ "params": p });
        return verify_params(p[0], p[1], p[2], inputs);
    }
    let path = input.ok_or_else(|| CliError::Parse("verify needs --input, --triple or --params".into()))?;
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let fields = if doc.get("command").is_some() { &doc["inputs"] } else { &doc };
    let inputs = json!({ "input": path.display().to_string() });
    let get = |k: &str| fields.get(k).and_then(json_str);
    if let (Some(a), Some(b), Some(c)) = (get("alpha"), get("beta"), get("gamma")) {
        return verify_triple(&a, &b, &c, inputs);
    }
    if let (Some(d), Some(m), Some(n)) = (get("delta"), get("m"), get("n")) {
        let num = |s: &str| s.parse::<u64>().map_err(|_| CliError::Parse(format!("not a positive integer: {s:?}")));
        return verify_params(num(&d)?, num(&m)?, num(&n)?, inputs);
    }
    Err(CliError::Parse(format!("{}: expected alpha/beta/gamma or delta/m/n fields", path.display())))
}
