//! SVG rendering in the Poincaré disk.
//!
//! Points project from the hyperboloid by (x¹, x²)/(1 + x⁰), which maps the
//! plane onto the open unit disk. Geodesics and the inscribed circle are
//! drawn as sampled polylines; resolution is caller-controlled, and output
//! is deterministic for fixed input.

use hypoly::lorentz::{HPoint, Vec3};
use hypoly::{Frame, Polygon};
use std::fmt::Write as _;

/// Rendering parameters.
#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub width_px: u32,
    pub samples_per_edge: usize,
    pub draw_incircle: bool,
    pub draw_duals_table: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width_px: 512,
            samples_per_edge: 64,
            draw_incircle: false,
            draw_duals_table: false,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<(), String> {
        if self.width_px < 64 {
            return Err(format!("width_px must be at least 64, got {}", self.width_px));
        }
        if self.samples_per_edge < 8 {
            return Err(format!(
                "samples_per_edge must be at least 8, got {}",
                self.samples_per_edge
            ));
        }
        Ok(())
    }
}

/// Projection onto the Poincaré disk: (x¹, x²)/(1 + x⁰).
pub fn disk_project(p: &HPoint<f64>) -> (f64, f64) {
    let v = p.v();
    (v.x1 / (1.0 + v.x0), v.x2 / (1.0 + v.x0))
}

/// Disk coordinates to pixel coordinates (y axis flipped for SVG).
pub fn disk_to_px(xy: (f64, f64), width_px: u32) -> (f64, f64) {
    let half = width_px as f64 / 2.0;
    let scale = half * 0.94;
    (half + xy.0 * scale, half - xy.1 * scale)
}

/// Point at parameter s ∈ [0,1] of the geodesic from `a` to `b`.
fn geodesic_point(a: &HPoint<f64>, b: &HPoint<f64>, s: f64) -> HPoint<f64> {
    let d = a.distance_to(b);
    if d < 1e-12 {
        return *a;
    }
    let w = a
        .v()
        .scale(((1.0 - s) * d).sinh())
        + b.v().scale((s * d).sinh());
    hypoly::lorentz::normalize_h(w.scale(1.0 / d.sinh())).expect("geodesic stays timelike")
}

/// Sampled geodesic polyline of edge `e` in pixel coordinates.
pub fn edge_polyline(p: &Polygon, e: usize, opts: &RenderOptions) -> Vec<(f64, f64)> {
    let n = p.n();
    let a = &p.vertices()[e];
    let b = &p.vertices()[(e + 1) % n];
    (0..=opts.samples_per_edge)
        .map(|k| {
            let s = k as f64 / opts.samples_per_edge as f64;
            disk_to_px(disk_project(&geodesic_point(a, b, s)), opts.width_px)
        })
        .collect()
}

/// Frame based at `c`: rotate into the direction of `c`, then translate out
/// to its distance from the origin.
fn frame_at(c: &HPoint<f64>) -> Frame {
    let v = c.v();
    let phi = v.x2.atan2(v.x1);
    let d = v.x0.max(1.0).acosh();
    hypoly::developing::rotate(phi) * hypoly::developing::translate(d)
}

/// Sampled circle of radius `r` about `center`, in pixel coordinates.
pub fn circle_polyline(
    center: &HPoint<f64>,
    r: f64,
    samples: usize,
    width_px: u32,
) -> Vec<(f64, f64)> {
    let frame = frame_at(center);
    (0..=samples)
        .map(|k| {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
            let on_circle = Vec3::new(r.cosh(), r.sinh() * phi.cos(), r.sinh() * phi.sin());
            let q = HPoint::try_new(frame.apply(on_circle)).expect("circle stays on the sheet");
            disk_to_px(disk_project(&q), width_px)
        })
        .collect()
}

fn push_polyline(svg: &mut String, pts: &[(f64, f64)], style: &str) {
    let mut points = String::new();
    for (x, y) in pts {
        let _ = write!(points, "{:.2},{:.2} ", x, y);
    }
    let _ = writeln!(
        svg,
        r#"  <polyline fill="none" {} points="{}"/>"#,
        style,
        points.trim_end()
    );
}

/// Renders the polygon (and optionally its inscribed circle) as SVG 1.1.
pub fn render_svg(
    p: &Polygon,
    incircle: Option<(HPoint<f64>, f64)>,
    opts: &RenderOptions,
) -> String {
    let w = opts.width_px;
    let half = w as f64 / 2.0;
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#
    );
    let _ = writeln!(svg, r#"  <rect width="{w}" height="{w}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r##"  <circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="#999999" stroke-width="1"/>"##,
        half,
        half,
        half * 0.94
    );

    for e in 0..p.n() {
        push_polyline(
            &mut svg,
            &edge_polyline(p, e, opts),
            r##"stroke="#1f6feb" stroke-width="1.5""##,
        );
    }
    for v in p.vertices() {
        let (x, y) = disk_to_px(disk_project(v), w);
        let _ = writeln!(
            svg,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="2.5" fill="#1f6feb"/>"##,
            x, y
        );
    }

    if let Some((center, r)) = incircle {
        push_polyline(
            &mut svg,
            &circle_polyline(&center, r, opts.samples_per_edge.max(32) * 4, w),
            r##"stroke="#d73a49" stroke-width="1.2" stroke-dasharray="5 3""##,
        );
        let (x, y) = disk_to_px(disk_project(&center), w);
        let _ = writeln!(
            svg,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="2" fill="#d73a49"/>"##,
            x, y
        );
    }

    if opts.draw_duals_table {
        let _ = writeln!(
            svg,
            r##"  <g font-family="monospace" font-size="10" fill="#333333">"##
        );
        for (i, d) in p.duals().iter().enumerate() {
            let v = d.v();
            let _ = writeln!(
                svg,
                r#"    <text x="6" y="{}">e{}* = ({:+.6}, {:+.6}, {:+.6})</text>"#,
                14 + 12 * i,
                i + 1,
                v.x0,
                v.x1,
                v.x2
            );
        }
        let _ = writeln!(svg, "  </g>");
    }

    let _ = writeln!(svg, "</svg>");
    svg
}

/// Pixel positions of the incircle tangency points (edge e touches the
/// circle at tangent-length distance from its start vertex).
pub fn tangency_points_px(
    p: &Polygon,
    tangent_lengths: &[f64],
    width_px: u32,
) -> Vec<(f64, f64)> {
    let n = p.n();
    (0..n)
        .map(|e| {
            let a = &p.vertices()[e];
            let b = &p.vertices()[(e + 1) % n];
            let d = a.distance_to(b);
            // the tangent length at the start vertex of edge e
            let t = tangent_lengths[(e + n - 1) % n];
            disk_to_px(disk_project(&geodesic_point(a, b, t / d)), width_px)
        })
        .collect()
}

/// Distance from a point to a sampled polyline.
pub fn distance_to_polyline(q: (f64, f64), polyline: &[(f64, f64)]) -> f64 {
    let mut best = f64::INFINITY;
    for seg in polyline.windows(2) {
        let (ax, ay) = seg[0];
        let (bx, by) = seg[1];
        let (dx, dy) = (bx - ax, by - ay);
        let len_sq = dx * dx + dy * dy;
        let t = if len_sq == 0.0 {
            0.0
        } else {
            (((q.0 - ax) * dx + (q.1 - ay) * dy) / len_sq).clamp(0.0, 1.0)
        };
        let (px, py) = (ax + t * dx, ay + t * dy);
        best = best.min(((q.0 - px).powi(2) + (q.1 - py).powi(2)).sqrt());
    }
    best
}
