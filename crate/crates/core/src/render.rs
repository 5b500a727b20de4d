//! SVG rendering for inspection. Output is never read back.

use std::fmt::Write;

use crate::geometry::{Piece, Point, Scene};
use crate::visibility::VisGraph;

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#9c755f"];

struct View {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl View {
    fn fit(s: &Scene) -> View {
        let pts: Vec<(f64, f64)> =
            s.regions.iter().flat_map(|r| r.vertices()).map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
        if pts.is_empty() {
            return View { min_x: 0.0, max_y: 0.0, scale: 1.0 };
        }
        let fold = |f: fn(f64, f64) -> f64, init: f64, k: usize| {
            pts.iter().map(|p| if k == 0 { p.0 } else { p.1 }).fold(init, f)
        };
        let (min_x, max_x) = (fold(f64::min, f64::INFINITY, 0), fold(f64::max, f64::NEG_INFINITY, 0));
        let (min_y, max_y) = (fold(f64::min, f64::INFINITY, 1), fold(f64::max, f64::NEG_INFINITY, 1));
        let span = (max_x - min_x).max(max_y - min_y);
        let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
        View { min_x, max_y, scale }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        (MARGIN + (p.x.to_f64() - self.min_x) * self.scale, MARGIN + (self.max_y - p.y.to_f64()) * self.scale)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Regions as filled shapes (segments as thick strokes, points as dots) and,
/// when given, witnesses as dashed labelled segments. Y points up in scene
/// coordinates.
pub fn render_svg(s: &Scene, g: Option<&VisGraph>) -> String {
    let v = View::fit(s);
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">"#);
    let _ = writeln!(out, r##"<rect width="1000" height="1000" fill="#ffffff"/>"##);
    for (k, r) in s.regions.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let _ = writeln!(out, r#"<g id="{}" fill="{color}" stroke="{color}">"#, escape(&r.name));
        for pc in &r.pieces {
            match pc {
                Piece::Point(p) => {
                    let (x, y) = v.map(p);
                    let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5"/>"#);
                }
                Piece::Segment(a, b) => {
                    let ((x1, y1), (x2, y2)) = (v.map(a), v.map(b));
                    let _ = writeln!(
                        out,
                        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke-width="4" stroke-linecap="round"/>"#
                    );
                }
                Piece::Polygon(ps) => {
                    let pts: Vec<String> = ps.iter().map(|p| v.map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let _ = writeln!(out, r#"<polygon points="{}" fill-opacity="0.6"/>"#, pts.join(" "));
                }
            }
        }
        if let Some(p) = r.vertices().first() {
            let (x, y) = v.map(p);
            let _ = writeln!(out, r##"<text x="{:.2}" y="{:.2}" font-size="16" fill="#000" stroke="none">{}</text>"##, x + 6.0, y - 6.0, escape(&r.name));
        }
        let _ = writeln!(out, "</g>");
    }
    if let Some(g) = g {
        let _ = writeln!(out, r##"<g stroke="#333" stroke-width="1.5" stroke-dasharray="6 4" font-size="12">"##);
        for w in g.witnesses.values() {
            let ((x1, y1), (x2, y2)) = (v.map(&w.a), v.map(&w.b));
            let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
            let label = escape(&format!("{}-{}", w.region_a, w.region_b));
            let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
            let _ = writeln!(out, r##"<text x="{mx:.2}" y="{my:.2}" stroke="none" fill="#333">{label}</text>"##);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}
