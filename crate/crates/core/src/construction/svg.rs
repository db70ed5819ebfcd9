//! Drawing of a construction: the compass and straightedge work in one
//! layer, the resulting polygon in another and the labelled points on top.

use super::{Circle, ConstructionTrace, Point};
use crate::svg::{self, Document, Frame};

/// Renders the trace and the polygon through `vertices`.
pub fn render(trace: &ConstructionTrace, vertices: &[Point]) -> String {
    let circles = trace.circles();
    let points = trace.points();
    let lines = trace.lines();

    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |x: f64, y: f64| {
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    };
    for (_, Circle { center, radius }) in &circles {
        grow(center.x - radius, center.y - radius);
        grow(center.x + radius, center.y + radius);
    }
    for p in points.iter().map(|(_, p)| p).chain(vertices) {
        grow(p.x, p.y);
    }
    if !lo_x.is_finite() {
        (lo_x, lo_y, hi_x, hi_y) = (-1.0, -1.0, 1.0, 1.0);
    }
    let frame = Frame::fit(lo_x, lo_y, hi_x, hi_y);

    let mut doc = Document::new();
    let work = doc.layer("construction", "fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"1\"");
    for (_, c) in &circles {
        svg::circle(work, &frame, c.center.x, c.center.y, c.radius);
    }
    for (_, l) in &lines {
        svg::line(work, &frame, (l.through.x, l.through.y), (l.and.x, l.and.y));
    }

    let poly = doc.layer("polygon", "fill=\"none\" stroke=\"#b0302a\" stroke-width=\"2.5\"");
    if vertices.len() >= 2 {
        let pts: Vec<(f64, f64)> = vertices.iter().map(|p| (p.x, p.y)).collect();
        svg::polygon(poly, &frame, &pts, "");
    }

    let marks = doc.layer("points", "fill=\"#222222\" font-family=\"monospace\" font-size=\"14\"");
    for (label, p) in &points {
        svg::dot(marks, &frame, p.x, p.y, 3.0);
        svg::text(marks, &frame, p.x, p.y, 5.0, -5.0, label);
    }
    doc.finish()
}
