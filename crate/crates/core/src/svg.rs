//! Minimal deterministic SVG writer shared by the construction and
//! dissection renderers.
//!
//! Every document uses the fixed viewBox `0 0 1000 1000`. World
//! coordinates are fitted into it with a margin, the y axis flipped so that
//! counterclockwise stays counterclockwise on screen, and every number is
//! printed with exactly six decimals.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 40.0;

/// Formats a coordinate with six decimals, never producing `-0.000000`.
pub fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Maps world coordinates into the viewBox.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Frame {
    /// Fits the box `[min_x, max_x] × [min_y, max_y]`, centered.
    pub fn fit(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Self {
        let w = (max_x - min_x).max(f64::MIN_POSITIVE);
        let h = (max_y - min_y).max(f64::MIN_POSITIVE);
        let avail = SIZE - 2.0 * MARGIN;
        let scale = avail / w.max(h);
        Frame {
            min_x,
            max_y,
            scale,
            off_x: MARGIN + (avail - w * scale) / 2.0,
            off_y: MARGIN + (avail - h * scale) / 2.0,
        }
    }

    pub fn x(&self, x: f64) -> f64 {
        self.off_x + (x - self.min_x) * self.scale
    }

    pub fn y(&self, y: f64) -> f64 {
        self.off_y + (self.max_y - y) * self.scale
    }

    pub fn len(&self, d: f64) -> f64 {
        d * self.scale
    }
}

/// An SVG document assembled from named layers in insertion order.
#[derive(Debug, Default)]
pub struct Document {
    layers: Vec<(String, String, String)>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts a `<g>` layer with the given id and presentation attributes.
    pub fn layer(&mut self, id: &str, style: &str) -> &mut String {
        self.layers.push((id.to_string(), style.to_string(), String::new()));
        &mut self.layers.last_mut().expect("just pushed").2
    }

    pub fn finish(&self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n",
        );
        out.push_str("<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n");
        for (id, style, body) in &self.layers {
            let _ = writeln!(out, "<g id=\"{id}\" {style}>");
            out.push_str(body);
            out.push_str("</g>\n");
        }
        out.push_str("</svg>\n");
        out
    }
}

pub fn circle(buf: &mut String, f: &Frame, cx: f64, cy: f64, r: f64) {
    let _ = writeln!(buf, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", fmt6(f.x(cx)), fmt6(f.y(cy)), fmt6(f.len(r)));
}

pub fn dot(buf: &mut String, f: &Frame, x: f64, y: f64, r_px: f64) {
    let _ = writeln!(buf, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", fmt6(f.x(x)), fmt6(f.y(y)), fmt6(r_px));
}

pub fn line(buf: &mut String, f: &Frame, a: (f64, f64), b: (f64, f64)) {
    let _ = writeln!(
        buf,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        fmt6(f.x(a.0)),
        fmt6(f.y(a.1)),
        fmt6(f.x(b.0)),
        fmt6(f.y(b.1))
    );
}

/// A closed polygon, with optional extra attributes such as a fill.
pub fn polygon(buf: &mut String, f: &Frame, pts: &[(f64, f64)], attrs: &str) {
    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", fmt6(f.x(x)), fmt6(f.y(y)))).collect();
    let sep = if attrs.is_empty() { "" } else { " " };
    let _ = writeln!(buf, "<polygon points=\"{}\"{sep}{attrs}/>", coords.join(" "));
}

pub fn text(buf: &mut String, f: &Frame, x: f64, y: f64, dx_px: f64, dy_px: f64, content: &str) {
    let escaped = content.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
    let _ = writeln!(buf, "<text x=\"{}\" y=\"{}\">{escaped}</text>", fmt6(f.x(x) + dx_px), fmt6(f.y(y) + dy_px));
}

/// Writes `contents` to `path` through a sibling temporary file and a
/// rename, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_decimals_without_negative_zero() {
        assert_eq!(fmt6(-0.0), "0.000000");
        assert_eq!(fmt6(-1e-9), "0.000000");
        assert_eq!(fmt6(1.5), "1.500000");
        assert_eq!(fmt6(-2.25), "-2.250000");
    }

    #[test]
    fn frame_flips_y_and_keeps_margin() {
        let f = Frame::fit(-1.0, -1.0, 1.0, 1.0);
        assert!((f.x(-1.0) - 40.0).abs() < 1e-12);
        assert!((f.y(1.0) - 40.0).abs() < 1e-12);
        assert!((f.y(-1.0) - 960.0).abs() < 1e-12);
    }

    #[test]
    fn document_has_fixed_viewbox() {
        let mut d = Document::new();
        d.layer("a", "fill=\"none\"").push_str("<x/>\n");
        let s = d.finish();
        assert!(s.contains("viewBox=\"0 0 1000 1000\""));
        assert!(s.contains("<g id=\"a\" fill=\"none\">\n<x/>\n</g>"));
    }
}
