//! Static SVG of the construction: the quadrilateral, the right triangle
//! ΓBA, the dashed circumcircle and vertex labels.

use std::fmt::Write;

use heron_quad_core::geometry::QuadConstruction;
use num_traits::ToPrimitive;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 0.1;

struct Frame {
    scale: f64,
    min_x: f64,
    max_y: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Frame {
    fn fit(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Self {
        let (inner_w, inner_h) = (WIDTH * (1.0 - 2.0 * MARGIN), HEIGHT * (1.0 - 2.0 * MARGIN));
        let (w, h) = ((max_x - min_x).max(f64::EPSILON), (max_y - min_y).max(f64::EPSILON));
        let scale = (inner_w / w).min(inner_h / h);
        Self {
            scale,
            min_x,
            max_y,
            offset_x: (WIDTH - w * scale) / 2.0,
            offset_y: (HEIGHT - h * scale) / 2.0,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.offset_x + (x - self.min_x) * self.scale, self.offset_y + (self.max_y - y) * self.scale)
    }
}

pub fn render(q: &QuadConstruction) -> String {
    let gamma = q.vertex_gamma.to_f64();
    let b = q.vertex_b.to_f64();
    let gamma2 = q.vertex_gamma2.to_f64();
    let gamma1 = q.vertex_gamma1.to_f64();
    let a = q.vertex_a.to_f64();
    let center = q.circumcenter.to_f64();
    let radius = q.radius_squared.to_f64().unwrap_or(0.0).sqrt();

    let frame = Frame::fit(center.0 - radius, center.1 - radius, center.0 + radius, center.1 + radius);
    let [pg, pb, pg2, pg1, pa, pc] = [gamma, b, gamma2, gamma1, a, center].map(|p| frame.map(p));

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="gray" stroke-dasharray="6 4"/>"#,
        pc.0,
        pc.1,
        radius * frame.scale
    );
    let _ = writeln!(
        out,
        r#"  <polygon points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
        pg.0, pg.1, pb.0, pb.1, pg2.0, pg2.1, pg1.0, pg1.1
    );
    for (from, to, style) in [
        (pg, pa, "stroke=\"steelblue\""),
        (pb, pg1, "stroke=\"steelblue\" stroke-dasharray=\"2 2\""),
        (pg, pg2, "stroke=\"steelblue\" stroke-dasharray=\"2 2\""),
    ] {
        let _ = writeln!(
            out,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {style}/>"#,
            from.0, from.1, to.0, to.1
        );
    }
    for (p, label, dx, dy) in [
        (pg, "Γ", 0.0, -10.0),
        (pb, "B", -18.0, 5.0),
        (pg2, "Γ₂", -8.0, 20.0),
        (pg1, "Γ₁", 8.0, 5.0),
        (pa, "A", 4.0, -8.0),
    ] {
        let _ = writeln!(out, r#"  <circle cx="{:.3}" cy="{:.3}" r="3" fill="black"/>"#, p.0, p.1);
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="serif" font-size="18">{label}</text>"#,
            p.0 + dx,
            p.1 + dy
        );
    }
    // angle labels just inside the vertices carrying φ, ω and θ
    for (p, toward, label) in [(pg2, pg, "φ"), (pa, pg, "ω"), (pg1, pb, "θ")] {
        let (x, y) = (p.0 + (toward.0 - p.0) * 0.12, p.1 + (toward.1 - p.1) * 0.12);
        let _ = writeln!(
            out,
            r#"  <text x="{x:.3}" y="{y:.3}" font-family="serif" font-size="14" fill="darkred">{label}</text>"#
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="10" y="{:.0}" font-family="sans-serif" font-size="12">θ = {:.5}°, tan θ = {}</text>"#,
        HEIGHT - 10.0,
        q.theta_degrees(),
        q.tan_theta
    );
    out.push_str("</svg>\n");
    out
}
