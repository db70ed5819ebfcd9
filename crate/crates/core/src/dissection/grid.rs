//! Coverage of the goal region, cell by cell.

use serde::Serialize;

use super::clip::{self, Rect};
use super::placement::{place, PlacedPiece};
use super::{DissectionError, GoalRegion, Piece, Placement};

/// Covered fractions at which a cell counts as complete or almost complete.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub complete: f64,
    pub almost: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds { complete: 0.99, almost: 0.80 }
    }
}

impl Thresholds {
    pub fn new(complete: f64, almost: f64) -> Result<Self, DissectionError> {
        let ok = |t: f64| t > 0.0 && t <= 1.0;
        if !ok(complete) || !ok(almost) {
            return Err(DissectionError::InvalidThresholds(format!(
                "thresholds must lie in (0, 1], got complete={complete}, almost={almost}"
            )));
        }
        if complete < almost {
            return Err(DissectionError::InvalidThresholds(format!(
                "complete ({complete}) must not be below almost ({almost})"
            )));
        }
        Ok(Thresholds { complete, almost })
    }

    /// Fractions at or below this (but above zero) count as almost blank.
    fn almost_blank(&self) -> f64 {
        (1.0 - self.almost).min(self.almost)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellClass {
    CompleteColored,
    AlmostColored,
    Partial,
    AlmostBlankHalf,
    Blank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClassCounts {
    pub complete_colored: usize,
    pub almost_colored: usize,
    pub partial: usize,
    pub almost_blank_half: usize,
    pub blank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellReport {
    pub col: u32,
    pub row: u32,
    pub rect: Rect,
    pub covered: f64,
    pub fraction: f64,
    pub class: CellClass,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridReport {
    pub cell_size: f64,
    pub cells: usize,
    pub counts: ClassCounts,
    /// Sum over cells of the piece area clipped to each cell.
    pub covered_area: f64,
    pub goal_area: f64,
    /// Total area of the placed pieces.
    pub placed_area: f64,
    pub inside_area: f64,
    pub outside_area: f64,
    /// Area covered by more than one piece.
    pub overlap_area: f64,
    /// `goal_area - placed_area`: what is left once parts sticking out are
    /// cut off and pasted into gaps.
    pub net_uncovered: f64,
    /// Part of the region not covered by any piece as placed.
    pub uncovered_in_place: f64,
    /// Three cells of side `a/12`, i.e. `a^2/48`.
    pub three_cell_residual: f64,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub cell_reports: Vec<CellReport>,
    #[serde(skip)]
    pub placed: Vec<PlacedPiece>,
}

impl GridReport {
    /// Cells whose covered fraction is positive.
    pub fn touched(&self) -> usize {
        let c = &self.counts;
        c.complete_colored + c.almost_colored + c.partial + c.almost_blank_half
    }
}

/// Classifies every `a/grid` cell of the region by covered fraction.
pub fn grid_classify(
    region: &GoalRegion,
    placements: &[Placement],
    pieces: &[Piece],
    grid: u32,
    thresholds: Thresholds,
) -> Result<GridReport, DissectionError> {
    if grid == 0 {
        return Err(DissectionError::InvalidGrid(grid));
    }
    let placed = place(pieces, placements)?;
    let a = region.a;
    let cell = a / grid as f64;
    let tol = 1e-12 * a * a;

    let mut warnings = Vec::new();
    for p in &placed {
        if region.outline.clipped_area(&p.vertices) <= tol {
            warnings.push(format!("piece {} lies entirely outside the region's bounding box", p.id));
        }
    }

    let cols = (region.outline.x1 / cell).round() as u32;
    let rows = (region.outline.y1 / cell).round() as u32;
    let mut counts = ClassCounts::default();
    let mut cell_reports = Vec::new();
    let mut covered_area = 0.0;
    for row in 0..rows {
        for col in 0..cols {
            let rect =
                Rect::new(col as f64 * cell, row as f64 * cell, (col + 1) as f64 * cell, (row + 1) as f64 * cell);
            let inside: Vec<Rect> = region.parts.iter().filter_map(|p| p.intersect(&rect)).collect();
            let cell_area: f64 = inside.iter().map(Rect::area).sum();
            if cell_area <= tol {
                continue;
            }
            let covered: f64 =
                placed.iter().map(|p| inside.iter().map(|r| r.clipped_area(&p.vertices)).sum::<f64>()).sum();
            covered_area += covered;
            let fraction = (covered / cell_area).min(1.0);
            let class = if fraction >= thresholds.complete {
                counts.complete_colored += 1;
                CellClass::CompleteColored
            } else if fraction >= thresholds.almost {
                counts.almost_colored += 1;
                CellClass::AlmostColored
            } else if covered <= tol {
                counts.blank += 1;
                CellClass::Blank
            } else if fraction <= thresholds.almost_blank() {
                counts.almost_blank_half += 1;
                CellClass::AlmostBlankHalf
            } else {
                counts.partial += 1;
                CellClass::Partial
            };
            cell_reports.push(CellReport { col, row, rect, covered, fraction, class });
        }
    }

    let placed_area: f64 = placed.iter().map(|p| p.area).sum();
    let inside_area: f64 = placed.iter().map(|p| region.clipped_area(&p.vertices)).sum();
    let mut overlap_area = 0.0;
    for i in 0..placed.len() {
        for j in i + 1..placed.len() {
            let both = clip::clip_convex(&placed[i].vertices, &placed[j].vertices);
            overlap_area += region.clipped_area(&both);
        }
    }
    let goal_area = region.area();
    Ok(GridReport {
        cell_size: cell,
        cells: cell_reports.len(),
        counts,
        covered_area,
        goal_area,
        placed_area,
        inside_area,
        outside_area: placed_area - inside_area,
        overlap_area,
        net_uncovered: goal_area - placed_area,
        uncovered_in_place: goal_area - (inside_area - overlap_area),
        three_cell_residual: a * a / 48.0,
        warnings,
        cell_reports,
        placed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissection::{decompose_heptagon, goal_region, heptagon_apothem, Layout, Split};

    #[test]
    fn empty_placement_is_blank() {
        let region = goal_region(Layout::Square, 1.0).unwrap();
        let pieces = decompose_heptagon(1.0, Split::Two).unwrap();
        let r = grid_classify(&region, &[], &pieces, 12, Thresholds::default()).unwrap();
        assert_eq!(r.cells, 528);
        assert_eq!(r.counts.blank, 528);
        assert_eq!(r.covered_area, 0.0);
        assert!((r.net_uncovered - 11.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn one_piece_is_conserved() {
        let region = goal_region(Layout::Rectangle, 1.0).unwrap();
        let pieces = decompose_heptagon(1.0, Split::Two).unwrap();
        let pl = [Placement::new("I1", 1.3, 0.5, -90.0, false)];
        let r = grid_classify(&region, &pl, &pieces, 12, Thresholds::default()).unwrap();
        assert_eq!(r.cells, 528);
        assert!((r.covered_area - pieces[0].area).abs() < 1e-9);
        assert!((r.inside_area - pieces[0].area).abs() < 1e-12);
        assert!(r.overlap_area.abs() < 1e-15);
        let cell2 = r.cell_size * r.cell_size;
        assert!(r.counts.complete_colored as f64 * 0.99 * cell2 <= r.covered_area);
        assert!(r.covered_area <= r.touched() as f64 * cell2);
    }

    #[test]
    fn outside_piece_warns_and_overlap_is_measured() {
        let region = goal_region(Layout::Square, 1.0).unwrap();
        let pieces = decompose_heptagon(1.0, Split::Two).unwrap();
        let h = heptagon_apothem(1.0);
        let pl = [
            Placement::new("I1", 10.0, 10.0, 0.0, false),
            Placement::new("I2", 0.5, 0.0, 0.0, false),
            Placement::new("R1", 0.5, 0.0, 0.0, false),
        ];
        let r = grid_classify(&region, &pl, &pieces, 12, Thresholds::default()).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!((r.overlap_area - h / 4.0).abs() < 1e-12);
        assert!((r.outside_area - pieces[0].area).abs() < 1e-12);
    }

    #[test]
    fn thresholds_validated() {
        assert!(Thresholds::new(0.8, 0.9).is_err());
        assert!(Thresholds::new(1.2, 0.9).is_err());
        assert!(Thresholds::new(0.0, 0.0).is_err());
        assert!(Thresholds::new(1.0, 0.5).is_ok());
        let region = goal_region(Layout::Square, 1.0).unwrap();
        assert!(grid_classify(&region, &[], &[], 0, Thresholds::default()).is_err());
    }
}
