//! Construction procedures for regular polygons, exact and approximate.

use std::f64::consts::TAU;

use num_integer::Integer;
use serde::Serialize;

use super::kernel::{ccw_angle, Circle, Point, DEFAULT_EPS};
use super::trace::{ConstructionTrace, Pick, Radius};
use super::ConstructionError;

/// Label of the given circle in every recipe trace.
pub const MAIN_CIRCLE: &str = "circle";
/// Label of its center.
pub const CENTER: &str = "O";

/// Vertices (counterclockwise) together with the steps that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct Construction {
    pub vertices: Vec<Point>,
    pub trace: ConstructionTrace,
}

fn start_trace(c: &Circle) -> Result<ConstructionTrace, ConstructionError> {
    let mut t = ConstructionTrace::new();
    t.mark_point(CENTER, c.center)?;
    t.draw_circle(MAIN_CIRCLE, CENTER, Radius::Fixed(c.radius))?;
    Ok(t)
}

fn span(from: &str, to: &str) -> Radius {
    Radius::Span { from: from.into(), to: to.into() }
}

/// Steps the compass around the main circle `labels.len()` times starting
/// at `start`, each mark the next counterclockwise intersection of the
/// main circle with a circle of the given opening centered at the previous
/// mark.
fn march(
    t: &mut ConstructionTrace,
    start: &str,
    compass: &Radius,
    labels: &[String],
) -> Result<Vec<Point>, ConstructionError> {
    let mut current = start.to_string();
    let mut out = Vec::with_capacity(labels.len());
    for label in labels {
        let arc = format!("arc_{label}");
        t.draw_circle(&arc, &current, compass.clone())?;
        let p =
            t.intersect(label, MAIN_CIRCLE, &arc, Pick::NextCcw { center: CENTER.into(), from: current.clone() })?;
        out.push(p);
        current = label.clone();
    }
    Ok(out)
}

fn ensure_on_circle(c: &Circle, p: Point, what: &str) -> Result<(), ConstructionError> {
    if !p.is_finite() || !c.contains(p) {
        return Err(ConstructionError::NotOnCircle { label: what.into() });
    }
    Ok(())
}

/// Checks that `points`, taken in the given order, are the vertices of a
/// counterclockwise regular polygon inscribed in `c`.
pub fn check_regular(points: &[Point], c: &Circle) -> Result<(), ConstructionError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructionError::TooFewPoints(n));
    }
    for (i, p) in points.iter().enumerate() {
        if !p.is_finite() || !c.contains(*p) {
            return Err(ConstructionError::IrregularPolygon(format!("vertex {i} is not on the circle")));
        }
    }
    let step = TAU / n as f64;
    for i in 0..n {
        let gap = ccw_angle(c.center, points[i], points[(i + 1) % n]);
        if (gap - step).abs() > DEFAULT_EPS * 10.0 {
            return Err(ConstructionError::IrregularPolygon(format!(
                "arc {i} spans {:.9} deg, expected {:.9}",
                gap.to_degrees(),
                step.to_degrees()
            )));
        }
    }
    Ok(())
}

/// Sorts points counterclockwise about the center starting from `points[0]`.
fn sort_ccw(points: &[Point], c: &Circle) -> Vec<Point> {
    let first = points[0];
    let mut out = points.to_vec();
    out.sort_by(|a, b| ccw_angle(c.center, first, *a).total_cmp(&ccw_angle(c.center, first, *b)));
    out
}

/// Regular n-gon with vertices at `phase + k * 360/n` degrees on a circle
/// of radius `r` about the origin.
pub fn exact_ngon(n: u32, r: f64, phase_deg: f64) -> Result<Construction, ConstructionError> {
    exact_ngon_on(&Circle::new(Point::new(0.0, 0.0), r)?, n, phase_deg)
}

pub fn exact_ngon_on(c: &Circle, n: u32, phase_deg: f64) -> Result<Construction, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidInput(format!("a polygon needs at least 3 sides, got {n}")));
    }
    if !phase_deg.is_finite() {
        return Err(ConstructionError::InvalidInput("phase is not finite".into()));
    }
    let mut t = start_trace(c)?;
    let mut vertices = Vec::with_capacity(n as usize);
    for k in 0..n {
        let p = c.point_at(phase_deg + k as f64 * 360.0 / n as f64);
        t.mark_point(&format!("v{}", k + 1), p)?;
        vertices.push(p);
    }
    Ok(Construction { vertices, trace: t })
}

/// Hexagon by stepping the radius six times around the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct HexagonMarch {
    pub vertices: Vec<Point>,
    pub trace: ConstructionTrace,
    /// Distance between the sixth arc's mark and the start.
    pub closure_error: f64,
}

pub fn hexagon_march(c: &Circle, start: Point) -> Result<HexagonMarch, ConstructionError> {
    ensure_on_circle(c, start, "start")?;
    let mut t = start_trace(c)?;
    t.mark_point("v1", start)?;
    let labels: Vec<String> = (2..=7).map(|i| format!("v{i}")).collect();
    let marks = march(&mut t, "v1", &span(CENTER, "v1"), &labels)?;
    let closure_error = marks[5].distance(start);
    if closure_error > c.eps() {
        return Err(ConstructionError::IrregularPolygon(format!("hexagon did not close ({closure_error:e})")));
    }
    let mut vertices = vec![start];
    vertices.extend_from_slice(&marks[..5]);
    Ok(HexagonMarch { vertices, trace: t, closure_error })
}

fn circumcircle_of_regular(points: &[Point]) -> Result<Circle, ConstructionError> {
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / n;
    let center = Point::new(cx, cy);
    let r = points.iter().map(|p| p.distance(center)).sum::<f64>() / n;
    Circle::new(center, r).map_err(|_| ConstructionError::IrregularPolygon("degenerate polygon".into()))
}

/// Equilateral triangle on the odd-labelled vertices `v1, v3, v5`.
pub fn triangle_from_hexagon(hex: &[Point]) -> Result<Vec<Point>, ConstructionError> {
    if hex.len() != 6 {
        return Err(ConstructionError::InvalidInput(format!("expected 6 hexagon vertices, got {}", hex.len())));
    }
    let c = circumcircle_of_regular(hex)?;
    check_regular(hex, &c)?;
    Ok(vec![hex[0], hex[2], hex[4]])
}

/// Square on `v1`, `v4` and the midpoints of the arcs `v2 v3` and `v5 v6`.
pub fn square_from_hexagon(hex: &[Point], c: &Circle) -> Result<Construction, ConstructionError> {
    if hex.len() != 6 {
        return Err(ConstructionError::InvalidInput(format!("expected 6 hexagon vertices, got {}", hex.len())));
    }
    check_regular(hex, c)?;
    let mut t = start_trace(c)?;
    for (i, p) in hex.iter().enumerate() {
        t.mark_point(&format!("v{}", i + 1), *p)?;
    }
    let m23 = t.mark_midpoint_of_arc("m23", MAIN_CIRCLE, "v2", "v3")?;
    let m56 = t.mark_midpoint_of_arc("m56", MAIN_CIRCLE, "v5", "v6")?;
    Ok(Construction { vertices: vec![hex[0], m23, hex[3], m56], trace: t })
}

/// Ptolemy's pentagon and the golden-ratio segment it is built from.
#[derive(Debug, Clone, PartialEq)]
pub struct PentagonConstruction {
    pub vertices: Vec<Point>,
    pub trace: ConstructionTrace,
    /// `|OE|`, equal to `r (sqrt 5 - 1)/2`.
    pub oe: f64,
    /// `|OE| / |OB|`
    pub ratio_oe_ob: f64,
    /// `|OB| / |EB|`, the second golden section.
    pub ratio_ob_eb: f64,
    /// `|EB| / |OE|`, which is `phi + 2` rather than `phi` since `E` lies
    /// on the far side of `O` from `B`.
    pub ratio_eb_oe: f64,
    /// `|CE|`, the pentagon side.
    pub side: f64,
}

/// Diameter `AB`, `C` the midpoint of the upper arc, `D` the midpoint of
/// `OB` (by bisecting `OB` with two circles), `E` on `AO` with `DE = DC`.
/// `CE` is then the side, marked five times from `C`.
pub fn ptolemy_pentagon(c: &Circle) -> Result<PentagonConstruction, ConstructionError> {
    let mut t = start_trace(c)?;
    let b = t.mark_point("B", c.point_at(0.0))?;
    t.draw_line("diameter", CENTER, "B")?;
    t.intersect("A", "diameter", MAIN_CIRCLE, Pick::Farthest("B".into()))?;
    let cpt = t.mark_midpoint_of_arc("C", MAIN_CIRCLE, "B", "A")?;
    // perpendicular bisector of OB
    t.draw_circle("bisect_B", "B", span("B", CENTER))?;
    t.intersect("P", MAIN_CIRCLE, "bisect_B", Pick::Index(0))?;
    t.intersect("Q", MAIN_CIRCLE, "bisect_B", Pick::Index(1))?;
    t.draw_line("PQ", "P", "Q")?;
    t.intersect("D", "PQ", "diameter", Pick::Index(0))?;
    t.draw_circle("arc_DC", "D", span("D", "C"))?;
    let e = t.intersect("E", "arc_DC", "diameter", Pick::Nearest("A".into()))?;

    let oe = e.distance(c.center);
    let ob = b.distance(c.center);
    let eb = e.distance(b);
    let side = cpt.distance(e);

    t.mark_point("p1", cpt)?;
    let labels: Vec<String> = (2..=6).map(|i| format!("p{i}")).collect();
    let marks = march(&mut t, "p1", &span("C", "E"), &labels)?;
    let closure = marks[4].distance(cpt);
    if closure > 10.0 * c.eps() {
        return Err(ConstructionError::IrregularPolygon(format!("pentagon did not close ({closure:e})")));
    }
    let mut vertices = vec![cpt];
    vertices.extend_from_slice(&marks[..4]);
    Ok(PentagonConstruction {
        vertices,
        trace: t,
        oe,
        ratio_oe_ob: oe / ob,
        ratio_ob_eb: ob / eb,
        ratio_eb_oe: eb / oe,
        side,
    })
}

/// Inserts the arc midpoint between each pair of adjacent vertices.
pub fn double_ngon(vertices: &[Point], c: &Circle) -> Result<Construction, ConstructionError> {
    if vertices.len() < 3 {
        return Err(ConstructionError::TooFewPoints(vertices.len()));
    }
    let ordered = sort_ccw(vertices, c);
    check_regular(&ordered, c)?;
    let n = ordered.len();
    let mut t = start_trace(c)?;
    for (i, p) in ordered.iter().enumerate() {
        t.mark_point(&format!("v{}", i + 1), *p)?;
    }
    let mut out = Vec::with_capacity(2 * n);
    for (i, v) in ordered.iter().enumerate() {
        let m = t.mark_midpoint_of_arc(
            &format!("m{}", i + 1),
            MAIN_CIRCLE,
            &format!("v{}", i + 1),
            &format!("v{}", (i + 1) % n + 1),
        )?;
        out.push(*v);
        out.push(m);
    }
    Ok(Construction { vertices: out, trace: t })
}

/// An `nm`-gon from an `n`-gon and copies of an `m`-gon anchored at each of
/// its vertices, for coprime `n > m > 2`.
pub fn compose_ngon(n: u32, m: u32, c: &Circle, shared_vertex: Point) -> Result<Construction, ConstructionError> {
    if !(n > m && m > 2) {
        return Err(ConstructionError::InvalidInput(format!("need n > m > 2, got n={n}, m={m}")));
    }
    if n.gcd(&m) != 1 {
        return Err(ConstructionError::NotCoprime { n, m });
    }
    ensure_on_circle(c, shared_vertex, "shared vertex")?;
    let phase = shared_vertex.angle_about(c.center).to_degrees();
    let mut t = start_trace(c)?;
    let mut marks: Vec<Point> = Vec::with_capacity((n * m) as usize);
    let add = |t: &mut ConstructionTrace, marks: &mut Vec<Point>, label: String, p: Point| {
        if marks.iter().any(|q| q.approx_eq(p, c.eps())) {
            return Err(ConstructionError::IrregularPolygon(format!("mark {label} coincides with an earlier mark")));
        }
        t.mark_point(&label, p)?;
        marks.push(p);
        Ok(())
    };
    for i in 0..n {
        let anchor = phase + i as f64 * 360.0 / n as f64;
        add(&mut t, &mut marks, format!("v{}", i + 1), c.point_at(anchor))?;
    }
    for i in 0..n {
        let anchor = phase + i as f64 * 360.0 / n as f64;
        for j in 1..m {
            let p = c.point_at(anchor + j as f64 * 360.0 / m as f64);
            add(&mut t, &mut marks, format!("w{}_{}", i + 1, j + 1), p)?;
        }
    }
    let mut vertices = sort_ccw(&marks, c);
    // keep the shared vertex first
    let first = vertices.iter().position(|p| p.approx_eq(shared_vertex, c.eps())).unwrap_or(0);
    vertices.rotate_left(first);
    Ok(Construction { vertices, trace: t })
}

/// Smallest angular gap, in degrees, between consecutive points.
pub fn min_angular_spacing_deg(points: &[Point], c: &Circle) -> f64 {
    let ordered = sort_ccw(points, c);
    let n = ordered.len();
    (0..n).map(|i| ccw_angle(c.center, ordered[i], ordered[(i + 1) % n]).to_degrees()).fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    /// Join the last mark back to the start.
    ConnectToStart,
    /// Drop the start and use the midpoint of the arc between the overshoot
    /// mark `H` and the start `A`.
    MidpointOfGapArc,
}

/// How far seven equal chords fall short of a full turn.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub chord_length: f64,
    pub per_chord_central_angle_deg: f64,
    pub chords: u32,
    pub cumulative_angle_deg: f64,
    pub gap_deg: f64,
    pub closure_mode: ClosureMode,
}

impl GapReport {
    fn new(chord_length: f64, radius: f64, chords: u32, closure_mode: ClosureMode) -> Self {
        let per = (2.0 * (chord_length / (2.0 * radius)).asin()).to_degrees();
        let cumulative = chords as f64 * per;
        GapReport {
            chord_length,
            per_chord_central_angle_deg: per,
            chords,
            cumulative_angle_deg: cumulative,
            gap_deg: 360.0 - cumulative,
            closure_mode,
        }
    }
}

/// An approximate heptagon with its closure analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct HeptagonConstruction {
    pub vertices: Vec<Point>,
    pub trace: ConstructionTrace,
    pub gap: GapReport,
    /// The mark reached by the seventh chord.
    pub overshoot: Point,
}

impl HeptagonConstruction {
    /// Signed error of the marched side against the true heptagon side,
    /// in percent.
    pub fn side_error_percent(&self, c: &Circle) -> f64 {
        let exact = 2.0 * c.radius * (std::f64::consts::PI / 7.0).sin();
        (self.gap.chord_length - exact) / exact * 100.0
    }
}

fn heptagon_labels() -> Vec<String> {
    ["B", "C", "D", "E", "F", "G", "H"].iter().map(|s| s.to_string()).collect()
}

/// Side length used by Heron's heptagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeronSide {
    /// The apothem of the inscribed hexagon, `(sqrt 3 / 2) r`.
    #[default]
    Apothem,
    /// Heron's numerical value `7/8 r` from `sqrt 3 ~ 7/4`.
    SevenEighths,
}

fn hexagon_into(t: &mut ConstructionTrace, c: &Circle) -> Result<(), ConstructionError> {
    t.mark_point("A", c.point_at(0.0))?;
    let labels: Vec<String> = (2..=6).map(|i| format!("v{i}")).collect();
    march(t, "A", &span(CENTER, "A"), &labels)?;
    Ok(())
}

fn finish_heptagon(
    mut t: ConstructionTrace,
    c: &Circle,
    compass: Radius,
    chord: f64,
    mode: ClosureMode,
) -> Result<HeptagonConstruction, ConstructionError> {
    let labels = heptagon_labels();
    let marks = march(&mut t, "A", &compass, &labels)?;
    let start = t.point("A")?;
    let overshoot = marks[6];
    let vertices = match mode {
        ClosureMode::ConnectToStart => {
            let mut v = vec![start];
            v.extend_from_slice(&marks[..6]);
            v
        }
        ClosureMode::MidpointOfGapArc => {
            let m = t.mark_midpoint_of_arc("M", MAIN_CIRCLE, "H", "A")?;
            let mut v = vec![m];
            v.extend_from_slice(&marks[..6]);
            v
        }
    };
    Ok(HeptagonConstruction { vertices, trace: t, gap: GapReport::new(chord, c.radius, 7, mode), overshoot })
}

/// Heron: the apothem of the inscribed hexagon taken as the heptagon side.
pub fn heron_heptagon(c: &Circle, side: HeronSide) -> Result<HeptagonConstruction, ConstructionError> {
    let mut t = start_trace(c)?;
    hexagon_into(&mut t, c)?;
    let (compass, chord) = match side {
        HeronSide::Apothem => {
            // foot of the perpendicular from O to A v2, by bisecting the chord
            t.draw_circle("bisect_A", "A", span(CENTER, "A"))?;
            t.draw_circle("bisect_v2", "v2", span(CENTER, "v2"))?;
            t.intersect("X", "bisect_A", "bisect_v2", Pick::Farthest(CENTER.into()))?;
            t.draw_line("OX", CENTER, "X")?;
            t.draw_line("side_A_v2", "A", "v2")?;
            let foot = t.intersect("N", "OX", "side_A_v2", Pick::Index(0))?;
            (span(CENTER, "N"), foot.distance(c.center))
        }
        HeronSide::SevenEighths => {
            let chord = 0.875 * c.radius;
            (Radius::Fixed(chord), chord)
        }
    };
    finish_heptagon(t, c, compass, chord, ClosureMode::ConnectToStart)
}

/// Dürer: triangle on alternate hexagon vertices; the line from the center
/// through the skipped vertex `v2` cuts side `A v3` at `K`; `|K A|` is the
/// side.
pub fn durer_heptagon(c: &Circle) -> Result<HeptagonConstruction, ConstructionError> {
    let mut t = start_trace(c)?;
    hexagon_into(&mut t, c)?;
    t.draw_line("side_A_v3", "A", "v3")?;
    t.draw_line("O_v2", CENTER, "v2")?;
    let k = t.intersect("K", "side_A_v3", "O_v2", Pick::Index(0))?;
    let chord = k.distance(t.point("A")?);
    finish_heptagon(t, c, span("K", "A"), chord, ClosureMode::ConnectToStart)
}

/// The Elamite march: seven chords of `6/7 r` (from `r ~ 7a/6`), closed
/// either directly or through the midpoint of the leftover arc.
pub fn elamite_heptagon(c: &Circle, mode: ClosureMode) -> Result<HeptagonConstruction, ConstructionError> {
    let mut t = start_trace(c)?;
    t.mark_point("A", c.point_at(0.0))?;
    let chord = 6.0 / 7.0 * c.radius;
    finish_heptagon(t, c, Radius::Fixed(chord), chord, mode)
}

/// Largest distance, as a fraction of `r`, from a vertex to the nearest
/// vertex of the regular polygon with the same number of vertices, after
/// rotating the reference to fit best.
pub fn polygon_regularity_error(points: &[Point], c: &Circle) -> Result<f64, ConstructionError> {
    let n = points.len();
    if n < 3 {
        return Err(ConstructionError::TooFewPoints(n));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(ConstructionError::InvalidInput("point is not finite".into()));
    }
    let step = TAU / n as f64;
    let polar: Vec<(f64, f64)> = points.iter().map(|p| (p.distance(c.center), p.angle_about(c.center))).collect();
    let r = c.radius;
    let objective = |phase: f64| {
        polar
            .iter()
            .map(|&(rho, theta)| {
                // angular offset to the nearest reference vertex
                let off = (theta - phase).rem_euclid(step);
                let off = off.min(step - off);
                (rho * rho + r * r - 2.0 * rho * r * off.cos()).max(0.0).sqrt()
            })
            .fold(0.0, f64::max)
    };

    const SAMPLES: usize = 2048;
    let (best_i, _) = (0..SAMPLES)
        .map(|i| (i, objective(step * i as f64 / SAMPLES as f64)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let h = step / SAMPLES as f64;
    let mut lo = step * best_i as f64 / SAMPLES as f64 - h;
    let mut hi = lo + 2.0 * h;
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (objective(x1), objective(x2));
    while hi - lo > 1e-9_f64.to_radians() {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    let best = objective((lo + hi) / 2.0).min(f1).min(f2);
    Ok(best / r)
}
