use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write;

use super::crease::{CreaseParity, CreasePattern};
use crate::construction::RibbonDiagram;
use crate::geometry::{PlanarPoint, PlanarVector};

/// Default visual separation between coincident ribbon layers, in widths.
pub const DEFAULT_LAYER_OFFSET: f64 = 0.03;

/// Pixels per ribbon width.
const SCALE: f64 = 100.0;
const MARGIN: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    pub labels: bool,
    /// Shift applied to each repeated visit of the same planar point, so
    /// stacked layers can be told apart. Drawing only; never affects lengths.
    pub layer_offset: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { labels: true, layer_offset: DEFAULT_LAYER_OFFSET }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn x(&self, p: PlanarPoint) -> String {
        num((p.x - self.min_x + MARGIN) * SCALE)
    }

    /// SVG's y axis points down.
    fn y(&self, p: PlanarPoint) -> String {
        num((self.max_y - p.y + MARGIN) * SCALE)
    }
}

fn header(out: &mut String, width: f64, height: f64, desc: &str) {
    let (w, h) = (num(width * SCALE), num(height * SCALE));
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, "<desc>{desc}</desc>");
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Moves repeated visits of a point apart along the diagonal so coincident
/// layers show up as separate strokes.
fn separated(points: &[PlanarPoint], offset: f64) -> Vec<PlanarPoint> {
    let mut seen: HashMap<(u64, u64), u32> = HashMap::new();
    points
        .iter()
        .map(|p| {
            let key = ((p.x * 1e9).round().to_bits(), (p.y * 1e9).round().to_bits());
            let layer = seen.entry(key).or_insert(0);
            let shift = offset * f64::from(*layer);
            *layer += 1;
            PlanarPoint::new(p.x + shift, p.y + shift)
        })
        .collect()
}

/// Direction of the fold line at a vertex: the mirror line taking the
/// incoming direction to the outgoing one.
fn fold_direction(incoming: PlanarVector, outgoing: PlanarVector) -> PlanarVector {
    let m = incoming + outgoing;
    if m.norm() < 1e-9 {
        incoming.perp()
    } else {
        m.normalized()
    }
}

/// Renders a diagram as SVG 1.1 with groups `centerline`, `boundary`,
/// `folds` and `labels`. The output depends only on the diagram and options.
pub fn render_diagram(diagram: &RibbonDiagram, options: &SvgOptions) -> String {
    let pts = separated(diagram.centerline().distinct_vertices(), options.layer_offset);
    let n = pts.len();
    let min_x = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let max_x = pts.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let min_y = pts.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let max_y = pts.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
    let frame = Frame { min_x, max_y };

    let mut out = String::new();
    let desc = format!(
        "folded ribbon diagram; {} fold vertices; coincident layers drawn {} widths apart, so lengths must not be read off the drawing",
        n,
        num(options.layer_offset)
    );
    header(&mut out, max_x - min_x + 2.0 * MARGIN, max_y - min_y + 2.0 * MARGIN, &escape(&desc));

    let mut coords = String::new();
    for p in pts.iter().chain(std::iter::once(&pts[0])) {
        let _ = write!(coords, "{},{} ", frame.x(*p), frame.y(*p));
    }
    let _ = writeln!(out, r#"<g id="centerline" fill="none" stroke="black" stroke-width="1.5">"#);
    let _ = writeln!(out, r#"<polyline points="{}"/>"#, coords.trim_end());
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g id="boundary" fill="none" stroke="#888888" stroke-width="0.75">"##);
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        let normal = (b - a).normalized().perp() * 0.5;
        for side in [1.0, -1.0] {
            let (p, q) = (a + normal * side, b + normal * side);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                frame.x(p),
                frame.y(p),
                frame.x(q),
                frame.y(q)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g id="folds" stroke="#cc0000" stroke-width="1">"##);
    for (i, record) in diagram.folds().iter().enumerate() {
        let v = pts[i];
        let incoming = (v - pts[(i + n - 1) % n]).normalized();
        let outgoing = (pts[(i + 1) % n] - v).normalized();
        let dir = fold_direction(incoming, outgoing);
        // the fold line crosses the full ribbon width
        let half = (0.5 / dir.cross(&incoming).abs().max(0.25)).min(2.0);
        let (p, q) = (v + dir * half, v + dir * -half);
        let style = match record.fold.side {
            crate::geometry::FoldSide::Left => "",
            crate::geometry::FoldSide::Right => r#" stroke-dasharray="4,2""#,
        };
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"{style}/>"#,
            frame.x(p),
            frame.y(p),
            frame.x(q),
            frame.y(q)
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g id="labels" font-family="sans-serif" font-size="12">"#);
    if options.labels {
        for (label, mark) in diagram.landmarks() {
            let p = match mark.vertex {
                Some(v) => pts[v],
                None => mark.point,
            };
            let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, frame.x(p), frame.y(p), escape(label));
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// Renders the unfolded strip, one unit tall: mountain creases solid,
/// valley creases dashed.
pub fn render_crease(pattern: &CreasePattern, options: &SvgOptions) -> String {
    let frame = Frame { min_x: 0.0, max_y: 1.0 };
    let mut out = String::new();
    header(
        &mut out,
        pattern.strip_length + 2.0 * MARGIN,
        1.0 + 2.0 * MARGIN,
        &format!("crease pattern; strip length {}; {} creases", num(pattern.strip_length), pattern.creases.len()),
    );
    let a = PlanarPoint::new(0.0, 1.0);
    let _ = writeln!(out, r#"<g id="strip" fill="none" stroke="black" stroke-width="1">"#);
    let _ = writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
        frame.x(a),
        frame.y(a),
        num(pattern.strip_length * SCALE),
        num(SCALE)
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g id="creases" stroke="#cc0000" stroke-width="1">"##);
    for crease in &pattern.creases {
        // the crease meets the edges at `angle`; near-parallel creases are
        // drawn across at most four widths
        let run = if crease.angle.abs() < PI / 2.0 - 1e-12 {
            (0.5 / crease.angle.tan()).clamp(-2.0, 2.0)
        } else {
            0.0
        };
        let p = PlanarPoint::new(crease.position - run, 0.0);
        let q = PlanarPoint::new(crease.position + run, 1.0);
        let style = match crease.parity {
            CreaseParity::Mountain => "",
            CreaseParity::Valley => r#" stroke-dasharray="4,2""#,
        };
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"{style}/>"#,
            frame.x(p),
            frame.y(p),
            frame.x(q),
            frame.y(q)
        );
    }
    let _ = writeln!(out, "</g>");
    if options.labels {
        let _ = writeln!(out, r#"<g id="labels" font-family="sans-serif" font-size="12">"#);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">strip length {}</text>"#,
            frame.x(PlanarPoint::new(0.0, -0.4)),
            frame.y(PlanarPoint::new(0.0, -0.4)),
            num(pattern.strip_length)
        );
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}
