//! Planar primitives and intersections with a tolerance scaled to the
//! figure.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use serde::Serialize;

use super::ConstructionError;

/// Relative tolerance; absolute tolerances are `DEFAULT_EPS * scale` where
/// the scale is the relevant circle radius.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Point at `radius` from `center`, `deg` degrees counterclockwise from
    /// the positive x axis.
    pub fn polar(center: Point, radius: f64, deg: f64) -> Self {
        let t = deg.to_radians();
        Point::new(center.x + radius * t.cos(), center.y + radius * t.sin())
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn approx_eq(self, other: Point, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    /// Polar angle about `center` in `[0, 2pi)`.
    pub fn angle_about(self, center: Point) -> f64 {
        let a = (self.y - center.y).atan2(self.x - center.x);
        if a < 0.0 {
            a + TAU
        } else {
            a
        }
    }
}

/// Counterclockwise angle from `from` to `to` about `center`, in `[0, 2pi)`.
pub fn ccw_angle(center: Point, from: Point, to: Point) -> f64 {
    let d = to.angle_about(center) - from.angle_about(center);
    if d < 0.0 {
        d + TAU
    } else {
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self, ConstructionError> {
        if !center.is_finite() {
            return Err(ConstructionError::InvalidInput("circle center is not finite".into()));
        }
        if !radius.is_finite() || radius <= f64::MIN_POSITIVE.sqrt() {
            return Err(ConstructionError::InvalidInput(format!("circle radius {radius} is not positive")));
        }
        Ok(Circle { center, radius })
    }

    /// Absolute tolerance for this circle.
    pub fn eps(&self) -> f64 {
        DEFAULT_EPS * self.radius
    }

    pub fn contains(&self, p: Point) -> bool {
        (p.distance(self.center) - self.radius).abs() <= self.eps()
    }

    pub fn point_at(&self, deg: f64) -> Point {
        Point::polar(self.center, self.radius, deg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Line {
    pub through: Point,
    pub and: Point,
}

impl Line {
    pub fn new(through: Point, and: Point) -> Result<Self, ConstructionError> {
        if !through.is_finite() || !and.is_finite() {
            return Err(ConstructionError::InvalidInput("line point is not finite".into()));
        }
        let scale = 1f64.max(through.x.abs()).max(through.y.abs()).max(and.x.abs()).max(and.y.abs());
        if through.distance(and) <= DEFAULT_EPS * scale {
            return Err(ConstructionError::InvalidInput("line needs two distinct points".into()));
        }
        Ok(Line { through, and })
    }

    fn unit_direction(&self) -> (f64, f64) {
        let dx = self.and.x - self.through.x;
        let dy = self.and.y - self.through.y;
        let len = dx.hypot(dy);
        (dx / len, dy / len)
    }

    /// Unsigned distance from `p` to the infinite line.
    pub fn distance_to(&self, p: Point) -> f64 {
        let (ux, uy) = self.unit_direction();
        ((p.x - self.through.x) * uy - (p.y - self.through.y) * ux).abs()
    }

    fn scale(&self) -> f64 {
        1f64.max(self.through.distance(self.and))
    }
}

/// Orders by `y` descending, then `x` descending, treating values within
/// `tol` as equal.
fn order_points(points: &mut [Point], tol: f64) {
    points.sort_by(|a, b| {
        if (a.y - b.y).abs() > tol {
            b.y.partial_cmp(&a.y).unwrap_or(Ordering::Equal)
        } else {
            b.x.partial_cmp(&a.x).unwrap_or(Ordering::Equal)
        }
    });
}

pub fn circle_circle_intersect(c1: &Circle, c2: &Circle) -> Result<Vec<Point>, ConstructionError> {
    let tol = DEFAULT_EPS * c1.radius.max(c2.radius);
    let dx = c2.center.x - c1.center.x;
    let dy = c2.center.y - c1.center.y;
    let d = dx.hypot(dy);
    if d <= tol {
        if (c1.radius - c2.radius).abs() <= tol {
            return Err(ConstructionError::CoincidentCircles);
        }
        return Ok(Vec::new());
    }
    let sum = c1.radius + c2.radius;
    let diff = (c1.radius - c2.radius).abs();
    if d > sum + tol || d < diff - tol {
        return Ok(Vec::new());
    }
    let (ux, uy) = (dx / d, dy / d);
    let along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    if (d - sum).abs() <= tol || (d - diff).abs() <= tol {
        return Ok(vec![Point::new(c1.center.x + along * ux, c1.center.y + along * uy)]);
    }
    let h = (c1.radius * c1.radius - along * along).max(0.0).sqrt();
    let base = Point::new(c1.center.x + along * ux, c1.center.y + along * uy);
    let mut pts = vec![Point::new(base.x - h * uy, base.y + h * ux), Point::new(base.x + h * uy, base.y - h * ux)];
    order_points(&mut pts, tol);
    Ok(pts)
}

pub fn line_circle_intersect(l: &Line, c: &Circle) -> Result<Vec<Point>, ConstructionError> {
    let tol = c.eps();
    let (ux, uy) = l.unit_direction();
    // foot of the perpendicular from the center
    let t = (c.center.x - l.through.x) * ux + (c.center.y - l.through.y) * uy;
    let foot = Point::new(l.through.x + t * ux, l.through.y + t * uy);
    let dist = foot.distance(c.center);
    if dist > c.radius + tol {
        return Ok(Vec::new());
    }
    if (dist - c.radius).abs() <= tol {
        return Ok(vec![foot]);
    }
    let h = (c.radius * c.radius - dist * dist).max(0.0).sqrt();
    let mut pts = vec![Point::new(foot.x + h * ux, foot.y + h * uy), Point::new(foot.x - h * ux, foot.y - h * uy)];
    order_points(&mut pts, tol);
    Ok(pts)
}

pub fn line_line_intersect(l1: &Line, l2: &Line) -> Result<Option<Point>, ConstructionError> {
    let (ax, ay) = l1.unit_direction();
    let (bx, by) = l2.unit_direction();
    let cross = ax * by - ay * bx;
    if cross.abs() <= DEFAULT_EPS {
        let tol = DEFAULT_EPS * l1.scale().max(l2.scale());
        if l1.distance_to(l2.through) <= tol {
            return Err(ConstructionError::CoincidentLines);
        }
        return Ok(None);
    }
    let wx = l2.through.x - l1.through.x;
    let wy = l2.through.y - l1.through.y;
    let t = (wx * by - wy * bx) / cross;
    Ok(Some(Point::new(l1.through.x + t * ax, l1.through.y + t * ay)))
}

/// Midpoint of the counterclockwise arc of `c` from `from` to `to`, found
/// where the perpendicular bisector of the chord meets the circle.
pub fn arc_midpoint(c: &Circle, from: Point, to: Point) -> Point {
    let sweep = ccw_angle(c.center, from, to);
    let sweep = if sweep <= c.eps() / c.radius { TAU } else { sweep };
    let chord_mid = from.midpoint(to);
    let off = chord_mid.distance(c.center);
    let (dx, dy) = if off > c.eps() {
        let (ux, uy) = ((chord_mid.x - c.center.x) / off, (chord_mid.y - c.center.y) / off);
        if sweep < std::f64::consts::PI {
            (ux, uy)
        } else {
            (-ux, -uy)
        }
    } else {
        // diameter or full turn: bisector is perpendicular to the center-from ray
        let a = from.angle_about(c.center) + sweep / 2.0;
        (a.cos(), a.sin())
    };
    Point::new(c.center.x + c.radius * dx, c.center.y + c.radius * dy)
}
