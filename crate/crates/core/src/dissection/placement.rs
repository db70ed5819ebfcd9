//! Rigid motions of pieces and the JSON placement file.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize};

use super::{decompose_heptagon, DissectionError, Layout, Piece, PieceKind, Split};
use crate::construction::Point;
use crate::sexagesimal::{parse_sexagesimal, Rational};

/// Reflect in the y axis (if asked), rotate counterclockwise about the
/// origin, then translate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Placement {
    pub piece_id: String,
    #[serde(deserialize_with = "scalar")]
    pub dx: f64,
    #[serde(deserialize_with = "scalar")]
    pub dy: f64,
    #[serde(default, deserialize_with = "scalar")]
    pub rot_deg: f64,
    #[serde(default)]
    pub reflected: bool,
}

impl Placement {
    pub fn new(piece_id: &str, dx: f64, dy: f64, rot_deg: f64, reflected: bool) -> Self {
        Placement { piece_id: piece_id.into(), dx, dy, rot_deg, reflected }
    }

    pub fn apply(&self, p: Point) -> Point {
        let x = if self.reflected { -p.x } else { p.x };
        let (s, c) = sin_cos_deg(self.rot_deg);
        Point::new(c * x - s * p.y + self.dx, s * x + c * p.y + self.dy)
    }
}

/// Exact values at multiples of 90 degrees so axis-aligned placements stay
/// exactly axis-aligned.
fn sin_cos_deg(deg: f64) -> (f64, f64) {
    let q = deg / 90.0;
    if q == q.round() {
        match (q as i64).rem_euclid(4) {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        }
    } else {
        deg.to_radians().sin_cos()
    }
}

/// A piece after its placement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlacedPiece {
    pub id: String,
    pub kind: PieceKind,
    pub vertices: [Point; 3],
    pub area: f64,
}

/// Applies each placement to the piece it names. Pieces without a
/// placement are left out.
pub fn place(pieces: &[Piece], placements: &[Placement]) -> Result<Vec<PlacedPiece>, DissectionError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(placements.len());
    for pl in placements {
        let piece = pieces
            .iter()
            .find(|p| p.id == pl.piece_id)
            .ok_or_else(|| DissectionError::UnknownPiece(pl.piece_id.clone()))?;
        if !seen.insert(pl.piece_id.as_str()) {
            return Err(DissectionError::DuplicatePlacement(pl.piece_id.clone()));
        }
        if ![pl.dx, pl.dy, pl.rot_deg].iter().all(|v| v.is_finite()) {
            return Err(DissectionError::InvalidPlacement {
                piece: pl.piece_id.clone(),
                reason: "non-finite value".into(),
            });
        }
        let vertices = piece.vertices.map(|v| pl.apply(v));
        out.push(PlacedPiece { id: piece.id.clone(), kind: piece.kind, vertices, area: super::clip::area(&vertices) });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementFile {
    pub layout: Layout,
    #[serde(deserialize_with = "scalar")]
    pub a: f64,
    /// Defaults to halving two triangles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    pub placements: Vec<Placement>,
}

impl PlacementFile {
    pub fn split(&self) -> Split {
        self.split.unwrap_or_default()
    }

    pub fn pieces(&self) -> Result<Vec<Piece>, DissectionError> {
        decompose_heptagon(self.a, self.split())
    }
}

pub fn parse_placement_file(text: &str) -> Result<PlacementFile, DissectionError> {
    let file: PlacementFile = serde_json::from_str(text).map_err(|e| DissectionError::Parse(e.to_string()))?;
    if !file.a.is_finite() || file.a <= 0.0 {
        return Err(DissectionError::NonPositiveSide(file.a));
    }
    Ok(file)
}

/// A number, or a string holding a decimal or sexagesimal literal.
fn scalar<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(f64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Num(v) => Ok(v),
        Raw::Text(s) => {
            let s = s.trim();
            let value = if s.contains([';', ',']) {
                parse_sexagesimal(s).map_err(serde::de::Error::custom)?
            } else {
                s.parse::<Rational>().map_err(serde::de::Error::custom)?
            };
            Ok(value.to_f64())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        let p = Placement::new("x", 1.0, 2.0, 90.0, false);
        assert_eq!(p.apply(Point::new(1.0, 0.0)), Point::new(1.0, 3.0));
        let r = Placement::new("x", 0.0, 0.0, 180.0, true);
        assert_eq!(r.apply(Point::new(0.5, 1.0)), Point::new(0.5, -1.0));
        let m = Placement::new("x", 0.0, 0.0, -90.0, false);
        assert_eq!(m.apply(Point::new(0.0, 1.0)), Point::new(1.0, 0.0));
    }

    #[test]
    fn rigid_motion_keeps_area() {
        let pieces = decompose_heptagon(1.0, Split::Four).unwrap();
        let pl = vec![Placement::new("I1", 0.3, -2.0, 37.5, true), Placement::new("R3", 5.0, 1.0, 200.0, false)];
        let placed = place(&pieces, &pl).unwrap();
        assert!((placed[0].area - pieces[0].area).abs() < 1e-14);
        assert!((placed[1].area - pieces[3].area).abs() < 1e-14);
    }

    #[test]
    fn placement_errors() {
        let pieces = decompose_heptagon(1.0, Split::Two).unwrap();
        let dup = vec![Placement::new("I1", 0.0, 0.0, 0.0, false), Placement::new("I1", 1.0, 0.0, 0.0, false)];
        assert_eq!(place(&pieces, &dup), Err(DissectionError::DuplicatePlacement("I1".into())));
        let unknown = vec![Placement::new("R5", 0.0, 0.0, 0.0, false)];
        assert_eq!(place(&pieces, &unknown), Err(DissectionError::UnknownPiece("R5".into())));
        let nan = vec![Placement::new("I2", f64::NAN, 0.0, 0.0, false)];
        assert!(matches!(place(&pieces, &nan), Err(DissectionError::InvalidPlacement { .. })));
    }

    #[test]
    fn file_accepts_numbers_and_literals() {
        let text = r#"{"layout":"rectangle","a":"0;30","split":"four",
            "placements":[{"piece_id":"I1","dx":"1/2","dy":0.25,"rot_deg":-90,"reflected":false},
                          {"piece_id":"R1","dx":0,"dy":0}]}"#;
        let f = parse_placement_file(text).unwrap();
        assert_eq!(f.a, 0.5);
        assert_eq!(f.split(), Split::Four);
        assert_eq!(f.placements[0].dx, 0.5);
        assert_eq!(f.placements[1].rot_deg, 0.0);
        assert!(!f.placements[1].reflected);
        assert!(parse_placement_file(r#"{"layout":"square","a":0,"placements":[]}"#).is_err());
        assert!(parse_placement_file(r#"{"layout":"circle","a":1,"placements":[]}"#).is_err());
        assert!(parse_placement_file(r#"{"layout":"square","a":1,"placements":[],"extra":1}"#).is_err());
        assert!(parse_placement_file("not json").is_err());
    }
}
