//! Compass-and-straightedge geometry in floating point with a relative
//! tolerance, plus recipes for regular and approximately regular polygons.

mod kernel;
mod recipes;
pub mod svg;
mod trace;

use thiserror::Error;

pub use kernel::{
    arc_midpoint, ccw_angle, circle_circle_intersect, line_circle_intersect, line_line_intersect, Circle, Line, Point,
    DEFAULT_EPS,
};
pub use recipes::{
    check_regular, compose_ngon, double_ngon, durer_heptagon, elamite_heptagon, exact_ngon, exact_ngon_on,
    heron_heptagon, hexagon_march, min_angular_spacing_deg, polygon_regularity_error, ptolemy_pentagon,
    square_from_hexagon, triangle_from_hexagon, ClosureMode, Construction, GapReport, HeptagonConstruction, HeronSide,
    HexagonMarch, PentagonConstruction, CENTER, MAIN_CIRCLE,
};
pub use trace::{replay, ConstructionTrace, Pick, Radius, Step};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the circles coincide")]
    CoincidentCircles,
    #[error("the lines coincide")]
    CoincidentLines,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` is already in use")]
    DuplicateLabel(String),
    #[error("`{label}` is not a {expected}")]
    WrongKind { label: String, expected: &'static str },
    #[error("no intersection available for `{label}`")]
    NoIntersection { label: String },
    #[error("`{label}`: intersection index {index} out of range ({available} available)")]
    PickOutOfRange { label: String, index: usize, available: usize },
    #[error("`{label}` is not on the circle")]
    NotOnCircle { label: String },
    #[error("not a regular polygon: {0}")]
    IrregularPolygon(String),
    #[error("{n} and {m} are not coprime")]
    NotCoprime { n: u32, m: u32 },
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
}
