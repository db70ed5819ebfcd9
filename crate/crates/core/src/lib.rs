//! Mathematics of Susa Mathematical Text No. 2: exact sexagesimal
//! arithmetic, rival area rules for the regular heptagon, compass and
//! straightedge constructions, and the cut-and-paste dissection behind the
//! Elamite rule `S = 3;40 a^2`.

pub mod ancient;
pub mod construction;
pub mod dissection;
pub mod expr;
pub mod highprec;
pub mod polygon_area;
pub mod sexagesimal;
pub mod svg;

pub use sexagesimal::{parse_sexagesimal, render_sexagesimal, Rational, RenderMode, SexagesimalDigits};
