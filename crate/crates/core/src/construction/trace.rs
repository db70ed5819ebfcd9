//! Replayable record of compass and straightedge steps.
//!
//! Every step names its output and refers only to objects created by
//! earlier steps. Applying the same steps in order through [`replay`]
//! reproduces every coordinate bit for bit, since evaluation is the same
//! code path that built the original trace.

use std::collections::BTreeMap;

use serde::Serialize;

use super::kernel::{
    arc_midpoint, ccw_angle, circle_circle_intersect, line_circle_intersect, line_line_intersect, Circle, Line, Point,
};
use super::ConstructionError;

/// Compass opening.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Radius {
    /// A length laid off from a scale, e.g. `6/7 r`.
    Fixed(f64),
    /// The distance between two existing points.
    Span { from: String, to: String },
}

/// Which intersection point a step keeps.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pick {
    /// Position in the `(y desc, x desc)` ordering.
    Index(usize),
    /// The first point reached turning counterclockwise about `center`
    /// starting from `from`.
    NextCcw {
        center: String,
        from: String,
    },
    Nearest(String),
    Farthest(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    MarkPoint { label: String, at: Point },
    DrawCircle { label: String, center: String, radius: Radius },
    DrawLine { label: String, through: String, and: String },
    Intersect { label: String, first: String, second: String, pick: Pick },
    MarkMidpointOfArc { label: String, circle: String, from: String, to: String },
}

impl Step {
    pub fn label(&self) -> &str {
        match self {
            Step::MarkPoint { label, .. }
            | Step::DrawCircle { label, .. }
            | Step::DrawLine { label, .. }
            | Step::Intersect { label, .. }
            | Step::MarkMidpointOfArc { label, .. } => label,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Object {
    Point(Point),
    Circle(Circle),
    Line(Line),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConstructionTrace {
    steps: Vec<Step>,
    objects: BTreeMap<String, Object>,
}

impl ConstructionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Named points in creation order.
    pub fn points(&self) -> Vec<(&str, Point)> {
        self.steps
            .iter()
            .filter_map(|s| match self.objects.get(s.label()) {
                Some(Object::Point(p)) => Some((s.label(), *p)),
                _ => None,
            })
            .collect()
    }

    /// Circles in creation order.
    pub fn circles(&self) -> Vec<(&str, Circle)> {
        self.steps
            .iter()
            .filter_map(|s| match self.objects.get(s.label()) {
                Some(Object::Circle(c)) => Some((s.label(), *c)),
                _ => None,
            })
            .collect()
    }

    /// Lines in creation order.
    pub fn lines(&self) -> Vec<(&str, Line)> {
        self.steps
            .iter()
            .filter_map(|s| match self.objects.get(s.label()) {
                Some(Object::Line(l)) => Some((s.label(), *l)),
                _ => None,
            })
            .collect()
    }

    pub fn point(&self, label: &str) -> Result<Point, ConstructionError> {
        match self.objects.get(label) {
            Some(Object::Point(p)) => Ok(*p),
            Some(_) => Err(ConstructionError::WrongKind { label: label.into(), expected: "point" }),
            None => Err(ConstructionError::UnknownLabel(label.into())),
        }
    }

    pub fn circle(&self, label: &str) -> Result<Circle, ConstructionError> {
        match self.objects.get(label) {
            Some(Object::Circle(c)) => Ok(*c),
            Some(_) => Err(ConstructionError::WrongKind { label: label.into(), expected: "circle" }),
            None => Err(ConstructionError::UnknownLabel(label.into())),
        }
    }

    fn object(&self, label: &str) -> Result<Object, ConstructionError> {
        self.objects.get(label).copied().ok_or_else(|| ConstructionError::UnknownLabel(label.into()))
    }

    /// Evaluates `step` against the objects built so far and records it.
    pub fn apply(&mut self, step: Step) -> Result<(), ConstructionError> {
        let label = step.label().to_string();
        if self.objects.contains_key(&label) {
            return Err(ConstructionError::DuplicateLabel(label));
        }
        let object = match &step {
            Step::MarkPoint { at, .. } => {
                if !at.is_finite() {
                    return Err(ConstructionError::InvalidInput(format!("point {label} is not finite")));
                }
                Object::Point(*at)
            }
            Step::DrawCircle { center, radius, .. } => {
                let c = self.point(center)?;
                let r = match radius {
                    Radius::Fixed(r) => *r,
                    Radius::Span { from, to } => self.point(from)?.distance(self.point(to)?),
                };
                Object::Circle(Circle::new(c, r)?)
            }
            Step::DrawLine { through, and, .. } => Object::Line(Line::new(self.point(through)?, self.point(and)?)?),
            Step::Intersect { first, second, pick, .. } => {
                let candidates = match (self.object(first)?, self.object(second)?) {
                    (Object::Circle(a), Object::Circle(b)) => circle_circle_intersect(&a, &b)?,
                    (Object::Line(l), Object::Circle(c)) | (Object::Circle(c), Object::Line(l)) => {
                        line_circle_intersect(&l, &c)?
                    }
                    (Object::Line(a), Object::Line(b)) => line_line_intersect(&a, &b)?.into_iter().collect(),
                    _ => return Err(ConstructionError::WrongKind { label: first.clone(), expected: "circle or line" }),
                };
                Object::Point(self.pick(&label, &candidates, pick)?)
            }
            Step::MarkMidpointOfArc { circle, from, to, .. } => {
                let c = self.circle(circle)?;
                let (a, b) = (self.point(from)?, self.point(to)?);
                if !c.contains(a) || !c.contains(b) {
                    return Err(ConstructionError::NotOnCircle { label: label.clone() });
                }
                Object::Point(arc_midpoint(&c, a, b))
            }
        };
        self.objects.insert(label, object);
        self.steps.push(step);
        Ok(())
    }

    fn pick(&self, label: &str, candidates: &[Point], pick: &Pick) -> Result<Point, ConstructionError> {
        if candidates.is_empty() {
            return Err(ConstructionError::NoIntersection { label: label.into() });
        }
        let by_key = |key: &dyn Fn(&Point) -> f64, smallest: bool| {
            let mut best = candidates[0];
            let mut best_key = key(&best);
            for p in &candidates[1..] {
                let k = key(p);
                if (smallest && k < best_key) || (!smallest && k > best_key) {
                    best = *p;
                    best_key = k;
                }
            }
            best
        };
        match pick {
            Pick::Index(i) => candidates.get(*i).copied().ok_or(ConstructionError::PickOutOfRange {
                label: label.into(),
                index: *i,
                available: candidates.len(),
            }),
            Pick::Nearest(other) => {
                let q = self.point(other)?;
                Ok(by_key(&|p: &Point| p.distance(q), true))
            }
            Pick::Farthest(other) => {
                let q = self.point(other)?;
                Ok(by_key(&|p: &Point| p.distance(q), false))
            }
            Pick::NextCcw { center, from } => {
                let c = self.point(center)?;
                let f = self.point(from)?;
                // ignore candidates that coincide with the reference point
                let tiny = 1e-12;
                let angle = |p: &Point| {
                    let a = ccw_angle(c, f, *p);
                    if a <= tiny || p.approx_eq(f, tiny * c.distance(f).max(1.0)) {
                        f64::INFINITY
                    } else {
                        a
                    }
                };
                let best = by_key(&angle, true);
                if angle(&best).is_infinite() {
                    return Err(ConstructionError::NoIntersection { label: label.into() });
                }
                Ok(best)
            }
        }
    }

    // Convenience wrappers used by the recipes.

    pub fn mark_point(&mut self, label: &str, at: Point) -> Result<Point, ConstructionError> {
        self.apply(Step::MarkPoint { label: label.into(), at })?;
        Ok(at)
    }

    pub fn draw_circle(&mut self, label: &str, center: &str, radius: Radius) -> Result<Circle, ConstructionError> {
        self.apply(Step::DrawCircle { label: label.into(), center: center.into(), radius })?;
        self.circle(label)
    }

    pub fn draw_line(&mut self, label: &str, through: &str, and: &str) -> Result<(), ConstructionError> {
        self.apply(Step::DrawLine { label: label.into(), through: through.into(), and: and.into() })
    }

    pub fn intersect(
        &mut self,
        label: &str,
        first: &str,
        second: &str,
        pick: Pick,
    ) -> Result<Point, ConstructionError> {
        self.apply(Step::Intersect { label: label.into(), first: first.into(), second: second.into(), pick })?;
        self.point(label)
    }

    pub fn mark_midpoint_of_arc(
        &mut self,
        label: &str,
        circle: &str,
        from: &str,
        to: &str,
    ) -> Result<Point, ConstructionError> {
        self.apply(Step::MarkMidpointOfArc {
            label: label.into(),
            circle: circle.into(),
            from: from.into(),
            to: to.into(),
        })?;
        self.point(label)
    }
}

/// Rebuilds a trace from its steps.
pub fn replay(steps: &[Step]) -> Result<ConstructionTrace, ConstructionError> {
    let mut trace = ConstructionTrace::new();
    for step in steps {
        trace.apply(step.clone())?;
    }
    Ok(trace)
}
