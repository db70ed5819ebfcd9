//! Babylonian and Greek approximation kernel.
//!
//! The square-root rule `sqrt(a^2 +- b) ~ a +- b/(2a)` takes an explicit
//! decomposition so that derivation traces state the anchor the scribe
//! used rather than one picked by a heuristic.

use serde::Serialize;
use thiserror::Error;

use crate::sexagesimal::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("square-root anchor must be positive, got {0}")]
    NonPositiveAnchor(Rational),
    #[error("square-root remainder must be non-negative, got {0}")]
    NegativeRemainder(Rational),
    #[error("minus branch needs remainder {remainder} below anchor squared {anchor_sq}")]
    RemainderTooLarge { remainder: Box<Rational>, anchor_sq: Box<Rational> },
    #[error("length must be positive, got {0}")]
    NonPositiveLength(Rational),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("cannot take the square root of a negative number {0}")]
    NegativeRadicand(Rational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

/// `anchor^2 + remainder` or `anchor^2 - remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtDecomposition {
    anchor: Rational,
    remainder: Rational,
    branch: Branch,
}

impl SqrtDecomposition {
    pub fn new(anchor: Rational, remainder: Rational, branch: Branch) -> Result<Self, NumericsError> {
        if !anchor.is_positive() {
            return Err(NumericsError::NonPositiveAnchor(anchor));
        }
        if remainder.signum() < 0 {
            return Err(NumericsError::NegativeRemainder(remainder));
        }
        if branch == Branch::Minus {
            let anchor_sq = anchor.square();
            if remainder >= anchor_sq {
                return Err(NumericsError::RemainderTooLarge {
                    remainder: remainder.into(),
                    anchor_sq: anchor_sq.into(),
                });
            }
        }
        Ok(SqrtDecomposition { anchor, remainder, branch })
    }

    /// Decomposes `radicand` around `anchor`, choosing the branch from the
    /// sign of `radicand - anchor^2`.
    pub fn around(radicand: &Rational, anchor: Rational) -> Result<Self, NumericsError> {
        let diff = radicand - anchor.square();
        if diff.signum() >= 0 {
            Self::new(anchor, diff, Branch::Plus)
        } else {
            Self::new(anchor, -diff, Branch::Minus)
        }
    }

    pub fn anchor(&self) -> &Rational {
        &self.anchor
    }

    pub fn remainder(&self) -> &Rational {
        &self.remainder
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// The number whose root is being approximated.
    pub fn radicand(&self) -> Rational {
        match self.branch {
            Branch::Plus => self.anchor.square() + &self.remainder,
            Branch::Minus => self.anchor.square() - &self.remainder,
        }
    }
}

/// One-step rule `a +- b/(2a)`. Always overestimates when `b > 0`.
pub fn babylonian_sqrt(d: &SqrtDecomposition) -> Rational {
    let correction = d.remainder.checked_div(&(Rational::from(2) * &d.anchor)).expect("anchor is positive");
    match d.branch {
        Branch::Plus => &d.anchor + correction,
        Branch::Minus => &d.anchor - correction,
    }
}

/// Largest integer `i` with `i^2 <= x`, plus branch. Fails on `x < 1`
/// because the anchor would be zero.
pub fn nearest_integer_anchor(x: &Rational) -> Result<SqrtDecomposition, NumericsError> {
    if x.signum() < 0 {
        return Err(NumericsError::NegativeRadicand(x.clone()));
    }
    let floor = x.trunc();
    let root = floor.sqrt();
    let anchor = Rational::from_bigints(root, 1.into()).expect("unit denominator");
    let remainder = x - anchor.square();
    SqrtDecomposition::new(anchor, remainder, Branch::Plus)
}

/// Integer `i >= 1` whose square is closest to `x` (ties to the smaller),
/// with the branch following the sign of `x - i^2`.
pub fn closest_square_anchor(x: &Rational) -> Result<SqrtDecomposition, NumericsError> {
    if !x.is_positive() {
        return Err(NumericsError::NegativeRadicand(x.clone()));
    }
    let lo = x.trunc().sqrt().max(1.into());
    let hi = &lo + 1;
    let lo_r = Rational::from_bigints(lo, 1.into()).expect("unit denominator");
    let hi_r = Rational::from_bigints(hi, 1.into()).expect("unit denominator");
    let d_lo = (x - lo_r.square()).abs();
    let d_hi = (x - hi_r.square()).abs();
    let anchor = if d_hi < d_lo { hi_r } else { lo_r };
    SqrtDecomposition::around(x, anchor)
}

/// A catalogued ancient approximation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedConstant {
    pub id: &'static str,
    /// `None` for targets that are only described, such as the golden ratio.
    pub value: Option<Rational>,
    pub replaces: &'static str,
    pub source: &'static str,
    /// Decimal value of the quantity being approximated.
    pub check_value: Option<f64>,
}

pub const CATALOG_IDS: [&str; 7] = [
    "pi_babylonian",
    "sqrt3_babylonian",
    "sqrt23_heron",
    "radius_from_side_heron",
    "side_from_radius_heron",
    "radius_from_side_elamite",
    "golden_ratio_target",
];

/// Looks up a catalogue entry by id.
pub fn constant(id: &str) -> Result<NamedConstant, NumericsError> {
    let c = match id {
        "pi_babylonian" => NamedConstant {
            id: "pi_babylonian",
            value: Some(Rational::from(3)),
            replaces: "pi, in circumference = 2 pi r",
            source: "Old Babylonian practice; SMT No. 2 reverse",
            check_value: Some(std::f64::consts::PI),
        },
        "sqrt3_babylonian" => NamedConstant {
            id: "sqrt3_babylonian",
            value: Some(Rational::ratio(7, 4)),
            replaces: "sqrt(3), height of the equilateral triangle",
            source: "Babylonian rule sqrt(a^2 - b) ~ a - b/2a with a=2, b=1",
            check_value: Some(3f64.sqrt()),
        },
        "sqrt23_heron" => NamedConstant {
            id: "sqrt23_heron",
            value: Some(Rational::ratio(43, 9)),
            replaces: "sqrt(23), in Heron's heptagon area",
            source: "Heron of Alexandria, Metrica",
            check_value: Some(23f64.sqrt()),
        },
        "radius_from_side_heron" => NamedConstant {
            id: "radius_from_side_heron",
            value: Some(Rational::ratio(8, 7)),
            replaces: "r / a for the regular heptagon, 1 / (2 sin(pi/7))",
            source: "Heron of Alexandria, Metrica",
            check_value: Some(1.0 / (2.0 * (std::f64::consts::PI / 7.0).sin())),
        },
        "side_from_radius_heron" => NamedConstant {
            id: "side_from_radius_heron",
            value: Some(Rational::ratio(7, 8)),
            replaces: "a / r for the regular heptagon, 2 sin(pi/7)",
            source: "Heron's construction: apothem of the inscribed hexagon with sqrt(3) ~ 7/4",
            check_value: Some(2.0 * (std::f64::consts::PI / 7.0).sin()),
        },
        "radius_from_side_elamite" => NamedConstant {
            id: "radius_from_side_elamite",
            value: Some(Rational::ratio(7, 6)),
            replaces: "r / a for the regular heptagon, from 7a = 2 pi r with pi ~ 3",
            source: "SMT No. 2 reverse: r = 0;35, a = 0;30",
            check_value: Some(1.0 / (2.0 * (std::f64::consts::PI / 7.0).sin())),
        },
        "golden_ratio_target" => NamedConstant {
            id: "golden_ratio_target",
            value: None,
            replaces: "(sqrt(5) - 1) / 2, constructed in Ptolemy's pentagon",
            source: "Ptolemy, Almagest I.10",
            check_value: Some(0.618_033_988_749_894_9),
        },
        other => return Err(NumericsError::UnknownConstant(other.to_string())),
    };
    Ok(c)
}

/// The whole catalogue in a fixed order.
pub fn catalog() -> Vec<NamedConstant> {
    CATALOG_IDS.iter().map(|id| constant(id).expect("catalog ids resolve")).collect()
}

/// Side implied by `7a = 2 pi r` with `pi ~ 3`, i.e. `a = 6r/7`.
pub fn heptagon_side_from_radius(r: &Rational) -> Result<Rational, NumericsError> {
    if !r.is_positive() {
        return Err(NumericsError::NonPositiveLength(r.clone()));
    }
    Ok(Rational::ratio(6, 7) * r)
}

/// Inverse of [`heptagon_side_from_radius`]: `r = 7a/6`.
pub fn heptagon_radius_from_side(a: &Rational) -> Result<Rational, NumericsError> {
    if !a.is_positive() {
        return Err(NumericsError::NonPositiveLength(a.clone()));
    }
    Ok(Rational::ratio(7, 6) * a)
}
