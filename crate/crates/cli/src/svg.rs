//! SVG scene: points, edges and an optional region, in a 1000×1000 viewBox.

use geom_core::{PointSet, Vec2};
use std::fmt::Write;

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 0.02 * SIZE;

/// Uniform scale of the bounding box of `pts` into the viewBox, y up.
struct Frame {
    lo: Vec2,
    hi_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(pts: &[Vec2]) -> Self {
        let (lo, hi) = pts.iter().fold(
            (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
            |(lo, hi), q| (Vec2::new(lo.x.min(q.x), lo.y.min(q.y)), Vec2::new(hi.x.max(q.x), hi.y.max(q.y))),
        );
        let ext = (hi.x - lo.x).max(hi.y - lo.y);
        let scale = if ext > 0.0 { (SIZE - 2.0 * MARGIN) / ext } else { 1.0 };
        Self { lo, hi_y: hi.y, scale }
    }

    fn map(&self, q: Vec2) -> (f64, f64) {
        (MARGIN + (q.x - self.lo.x) * self.scale, MARGIN + (self.hi_y - q.y) * self.scale)
    }
}

/// `manifest` is referenced in a leading comment.
pub fn render(p: &PointSet, edges: &[(usize, usize)], region: Option<&[Vec2]>, manifest: &str) -> String {
    let pts = p.coords();
    let mut extent = pts.clone();
    if let Some(r) = region {
        extent.extend_from_slice(r);
    }
    let f = Frame::fit(&extent);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">"#);
    let _ = writeln!(s, "<!-- manifest: {manifest} -->");
    let _ = writeln!(s, r#"<rect width="1000" height="1000" fill="white"/>"#);
    if let Some(r) = region {
        let d: Vec<String> = r.iter().map(|&q| { let (x, y) = f.map(q); format!("{x:.3},{y:.3}") }).collect();
        let _ = writeln!(s, r#"<polygon points="{}" fill="steelblue" fill-opacity="0.3" stroke="steelblue"/>"#, d.join(" "));
    }
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="0.6">"#);
    for &(a, b) in edges {
        let ((x1, y1), (x2, y2)) = (f.map(pts[a]), f.map(pts[b]));
        let _ = writeln!(s, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="crimson">"#);
    for &q in &pts {
        let (x, y) = f.map(q);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_fill_the_margin_box() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (2.0, 1.0)]).unwrap();
        let svg = render(&p, &[], None, "m.json");
        assert!(svg.contains(r#"cx="20.000" cy="500.000""#));
        assert!(svg.contains(r#"cx="980.000" cy="20.000""#));
        assert!(!svg.contains("<line"));
    }
}
