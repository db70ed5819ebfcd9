//! Drawing of a dissection: region, shaded cells, grid and pieces.

use super::{CellClass, GoalRegion, GridReport};
use crate::svg::{self, Document, Frame};

fn fill(class: CellClass) -> &'static str {
    match class {
        CellClass::CompleteColored => "#3f7f3f",
        CellClass::AlmostColored => "#8fbf6f",
        CellClass::Partial => "#e0c060",
        CellClass::AlmostBlankHalf => "#f0e0b0",
        CellClass::Blank => "#ffffff",
    }
}

pub fn render(region: &GoalRegion, report: &GridReport) -> String {
    let o = region.outline;
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (o.x0, o.y0, o.x1, o.y1);
    for p in report.placed.iter().flat_map(|p| p.vertices) {
        lo_x = lo_x.min(p.x);
        lo_y = lo_y.min(p.y);
        hi_x = hi_x.max(p.x);
        hi_y = hi_y.max(p.y);
    }
    let frame = Frame::fit(lo_x, lo_y, hi_x, hi_y);
    let mut doc = Document::new();

    let cells = doc.layer("cells", "stroke=\"none\"");
    for c in &report.cell_reports {
        let r = c.rect;
        let pts = [(r.x0, r.y0), (r.x1, r.y0), (r.x1, r.y1), (r.x0, r.y1)];
        svg::polygon(cells, &frame, &pts, &format!("fill=\"{}\"", fill(c.class)));
    }

    let grid = doc.layer("grid", "stroke=\"#c8c8c8\" stroke-width=\"0.5\"");
    let step = report.cell_size;
    let cols = (o.x1 / step).round() as u32;
    let rows = (o.y1 / step).round() as u32;
    for i in 0..=cols {
        let x = i as f64 * step;
        svg::line(grid, &frame, (x, o.y0), (x, o.y1));
    }
    for j in 0..=rows {
        let y = j as f64 * step;
        svg::line(grid, &frame, (o.x0, y), (o.x1, y));
    }

    let outline = doc.layer("region", "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"");
    let boundary: Vec<(f64, f64)> = region.boundary().iter().map(|p| (p.x, p.y)).collect();
    svg::polygon(outline, &frame, &boundary, "");
    let cut = region.removed_cell;
    let cut_pts = [(cut.x0, cut.y0), (cut.x1, cut.y0), (cut.x1, cut.y1), (cut.x0, cut.y1)];
    svg::polygon(outline, &frame, &cut_pts, "stroke-dasharray=\"6 4\"");

    let pieces = doc.layer("pieces", "fill=\"none\" stroke=\"#1f3f9f\" stroke-width=\"1.5\"");
    for p in &report.placed {
        let pts: Vec<(f64, f64)> = p.vertices.iter().map(|v| (v.x, v.y)).collect();
        svg::polygon(pieces, &frame, &pts, "");
    }
    let labels =
        doc.layer("labels", "fill=\"#1f3f9f\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\"");
    for p in &report.placed {
        let cx = p.vertices.iter().map(|v| v.x).sum::<f64>() / 3.0;
        let cy = p.vertices.iter().map(|v| v.y).sum::<f64>() / 3.0;
        svg::text(labels, &frame, cx, cy, 0.0, 5.0, &p.id);
    }
    doc.finish()
}
