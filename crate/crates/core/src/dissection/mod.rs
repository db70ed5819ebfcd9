//! Cut-and-paste check of the heptagon area rule `S = 11/3 a^2`.
//!
//! The heptagon is cut into seven isosceles triangles from its center, some
//! of which are halved along their heights. The pieces are moved rigidly
//! into a goal region of area `11/3 a^2` and the coverage is measured on a
//! grid of `a/12` cells.

pub mod clip;
mod grid;
mod placement;
pub mod svg;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construction::Point;
use crate::sexagesimal::Rational;
use clip::Rect;

pub use grid::{grid_classify, CellClass, CellReport, ClassCounts, GridReport, Thresholds};
pub use placement::{parse_placement_file, place, PlacedPiece, Placement, PlacementFile};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DissectionError {
    #[error("side length must be positive and finite, got {0}")]
    NonPositiveSide(f64),
    #[error("side length must be nonzero")]
    ZeroSide,
    #[error("invalid thresholds: {0}")]
    InvalidThresholds(String),
    #[error("grid must have at least one cell per side, got {0}")]
    InvalidGrid(u32),
    #[error("unknown piece `{0}`")]
    UnknownPiece(String),
    #[error("piece `{0}` is placed more than once")]
    DuplicatePlacement(String),
    #[error("invalid placement of `{piece}`: {reason}")]
    InvalidPlacement { piece: String, reason: String },
    #[error("placement file: {0}")]
    Parse(String),
}

/// How many of the seven central triangles are halved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    /// Two halved: 5 isosceles and 4 right pieces.
    #[default]
    Two,
    /// Four halved: 3 isosceles and 8 right pieces.
    Four,
}

impl Split {
    fn halved(self) -> usize {
        match self {
            Split::Two => 2,
            Split::Four => 4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Two => "two",
            Split::Four => "four",
        }
    }
}

impl FromStr for Split {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "two" | "2" => Ok(Split::Two),
            "four" | "4" => Ok(Split::Four),
            other => Err(format!("unknown split `{other}` (expected two or four)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Isosceles,
    Right,
}

/// A triangle in its local frame.
///
/// Isosceles pieces sit on their base `(-a/2, 0)..(a/2, 0)` with the apex at
/// `(0, h)`; right pieces are the half `x >= 0` of one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Piece {
    pub id: String,
    pub kind: PieceKind,
    pub vertices: [Point; 3],
    pub area: f64,
}

/// Apothem of the regular heptagon with side `a`.
pub fn heptagon_apothem(a: f64) -> f64 {
    a / (2.0 * (PI / 7.0).tan())
}

fn check_side(a: f64) -> Result<(), DissectionError> {
    if !a.is_finite() || a <= 0.0 {
        return Err(DissectionError::NonPositiveSide(a));
    }
    Ok(())
}

/// Cuts the heptagon of side `a` into its central triangles, halving two or
/// four of them. Isosceles pieces are `I1, I2, ...`, right pieces `R1, ...`.
pub fn decompose_heptagon(a: f64, split: Split) -> Result<Vec<Piece>, DissectionError> {
    check_side(a)?;
    let h = heptagon_apothem(a);
    let iso = [Point::new(-a / 2.0, 0.0), Point::new(a / 2.0, 0.0), Point::new(0.0, h)];
    let right = [Point::new(0.0, 0.0), Point::new(a / 2.0, 0.0), Point::new(0.0, h)];
    let whole = 7 - split.halved();
    let mut pieces = Vec::with_capacity(whole + 2 * split.halved());
    for i in 1..=whole {
        pieces.push(Piece { id: format!("I{i}"), kind: PieceKind::Isosceles, vertices: iso, area: a * h / 2.0 });
    }
    for i in 1..=2 * split.halved() {
        pieces.push(Piece { id: format!("R{i}"), kind: PieceKind::Right, vertices: right, area: a * h / 4.0 });
    }
    Ok(pieces)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Layout {
    /// `2a x 2a`, four columns by three rows, top-right rectangle removed.
    Square,
    /// `4a x a`, twelve strips along the long side, the last one removed.
    Rectangle,
}

impl Layout {
    pub fn as_str(self) -> &'static str {
        match self {
            Layout::Square => "square",
            Layout::Rectangle => "rectangle",
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Layout {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "square" => Ok(Layout::Square),
            "rectangle" => Ok(Layout::Rectangle),
            other => Err(format!("unknown layout `{other}` (expected square or rectangle)")),
        }
    }
}

/// A big rectangle with one of its twelve equal parts removed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoalRegion {
    pub layout: Layout,
    pub a: f64,
    pub outline: Rect,
    pub removed_cell: Rect,
    /// Disjoint rectangles whose union is the outline minus the removed cell.
    pub parts: Vec<Rect>,
}

impl GoalRegion {
    pub fn area(&self) -> f64 {
        self.parts.iter().map(Rect::area).sum()
    }

    /// The region's boundary, counterclockwise from the origin.
    pub fn boundary(&self) -> Vec<Point> {
        let Rect { x1, y1, .. } = self.outline;
        let cut = self.removed_cell;
        match self.layout {
            Layout::Square => vec![
                Point::new(0.0, 0.0),
                Point::new(x1, 0.0),
                Point::new(x1, cut.y0),
                Point::new(cut.x0, cut.y0),
                Point::new(cut.x0, y1),
                Point::new(0.0, y1),
            ],
            Layout::Rectangle => {
                vec![Point::new(0.0, 0.0), Point::new(cut.x0, 0.0), Point::new(cut.x0, y1), Point::new(0.0, y1)]
            }
        }
    }

    /// Area of the part of a convex polygon inside the region.
    pub fn clipped_area(&self, poly: &[Point]) -> f64 {
        self.parts.iter().map(|r| r.clipped_area(poly)).sum()
    }
}

pub fn goal_region(layout: Layout, a: f64) -> Result<GoalRegion, DissectionError> {
    check_side(a)?;
    Ok(match layout {
        Layout::Square => {
            let outline = Rect::new(0.0, 0.0, 2.0 * a, 2.0 * a);
            let removed = Rect::new(1.5 * a, 4.0 * a / 3.0, 2.0 * a, 2.0 * a);
            let parts =
                vec![Rect::new(0.0, 0.0, 2.0 * a, 4.0 * a / 3.0), Rect::new(0.0, 4.0 * a / 3.0, 1.5 * a, 2.0 * a)];
            GoalRegion { layout, a, outline, removed_cell: removed, parts }
        }
        Layout::Rectangle => {
            let outline = Rect::new(0.0, 0.0, 4.0 * a, a);
            let removed = Rect::new(11.0 * a / 3.0, 0.0, 4.0 * a, a);
            let parts = vec![Rect::new(0.0, 0.0, 11.0 * a / 3.0, a)];
            GoalRegion { layout, a, outline, removed_cell: removed, parts }
        }
    })
}

/// Placement file shipped with the crate for a layout and split.
pub fn shipped_placements(layout: Layout, split: Split) -> &'static str {
    match (layout, split) {
        (Layout::Square, Split::Two) => include_str!("../../data/placements/square_two.json"),
        (Layout::Square, Split::Four) => include_str!("../../data/placements/square_four.json"),
        (Layout::Rectangle, Split::Two) => include_str!("../../data/placements/rectangle_two.json"),
        (Layout::Rectangle, Split::Four) => include_str!("../../data/placements/rectangle_four.json"),
    }
}

/// Exact bookkeeping of the three leftover cells.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualIdentity {
    /// `3 (a/12)^2 = a^2/48`
    pub three_cells_area: Rational,
    /// `11/3 a^2`
    pub elamite_goal_area: Rational,
    /// Three cells as a percentage of the goal area, `25/44`.
    pub percent: Rational,
}

pub fn residual_identity(a: &Rational) -> Result<ResidualIdentity, DissectionError> {
    if a.is_zero() {
        return Err(DissectionError::ZeroSide);
    }
    let a2 = a.square();
    let cell = a.clone() * Rational::ratio(1, 12);
    let three_cells_area = Rational::from_integer(3) * cell.square();
    let elamite_goal_area = Rational::ratio(11, 3) * &a2;
    let percent = (three_cells_area.clone() * Rational::from_integer(100))
        .checked_div(&elamite_goal_area)
        .expect("goal area is nonzero");
    Ok(ResidualIdentity { three_cells_area, elamite_goal_area, percent })
}
