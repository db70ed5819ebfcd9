//! Exact and approximate area coefficients for regular polygons.
//!
//! The area of a regular n-gon with side `a` is `(n/4) cot(pi/n) a^2`. The
//! heptagon has three rival rational coefficients: the Babylonian 3;41
//! (truncated from a worked example with `r = 0;35`), the Elamite 3;40 from
//! the instruction on the reverse of SMT No. 2, and Heron's 43/12. The
//! triangle rule 7/16 comes from `sqrt(3) ~ 7/4`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ancient::{self, babylonian_sqrt, closest_square_anchor, NumericsError, SqrtDecomposition};
use crate::highprec::{self, HighPrecision};
use crate::sexagesimal::{render_sexagesimal, Rational, RenderMode, SexagesimalDigits};

/// Decimal digits used for exact coefficients unless a caller asks for more.
pub const DEFAULT_DIGITS: u32 = 60;

/// Places tried before a trace value is flagged as truncated.
const TRACE_EXACT_PLACES: usize = 12;
const TRACE_TRUNCATED_PLACES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AreaError {
    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(u32),
    #[error("length must be positive, got {0}")]
    NonPositiveLength(Rational),
    #[error("formula `{formula}` does not apply to {n}-gons")]
    NotApplicable { formula: FormulaId, n: u32 },
    #[error("formula `{0}` has no rational coefficient")]
    Transcendental(FormulaId),
    #[error("no formula comparison is recorded for {0}-gons")]
    UnsupportedComparison(u32),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Exact,
    BabylonianHeptagon,
    ElamiteHeptagon,
    HeronHeptagon,
    TriangleSevenSixteenths,
}

impl FormulaId {
    pub const ALL: [FormulaId; 5] = [
        FormulaId::Exact,
        FormulaId::BabylonianHeptagon,
        FormulaId::ElamiteHeptagon,
        FormulaId::HeronHeptagon,
        FormulaId::TriangleSevenSixteenths,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Exact => "exact",
            FormulaId::BabylonianHeptagon => "babylonian_heptagon",
            FormulaId::ElamiteHeptagon => "elamite_heptagon",
            FormulaId::HeronHeptagon => "heron_heptagon",
            FormulaId::TriangleSevenSixteenths => "triangle_seven_sixteenths",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientKind {
    Rational,
    Transcendental,
}

/// An area rule `S = coefficient * a^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaFormula {
    pub id: FormulaId,
    pub coefficient_kind: CoefficientKind,
    pub rational_coefficient: Option<Rational>,
    /// `None` means every `n >= 3`.
    pub applicable_n: Option<u32>,
}

impl AreaFormula {
    pub fn get(id: FormulaId) -> AreaFormula {
        let rational = |c: Rational, n: u32| AreaFormula {
            id,
            coefficient_kind: CoefficientKind::Rational,
            rational_coefficient: Some(c),
            applicable_n: Some(n),
        };
        match id {
            FormulaId::Exact => AreaFormula {
                id,
                coefficient_kind: CoefficientKind::Transcendental,
                rational_coefficient: None,
                applicable_n: None,
            },
            FormulaId::BabylonianHeptagon => rational(Rational::ratio(221, 60), 7),
            FormulaId::ElamiteHeptagon => rational(Rational::ratio(11, 3), 7),
            FormulaId::HeronHeptagon => rational(Rational::ratio(43, 12), 7),
            FormulaId::TriangleSevenSixteenths => rational(Rational::ratio(7, 16), 3),
        }
    }

    pub fn applies_to(&self, n: u32) -> bool {
        n >= 3 && self.applicable_n.is_none_or(|m| m == n)
    }

    /// Formulas that apply to `n`, exact first.
    pub fn for_n(n: u32) -> Vec<AreaFormula> {
        FormulaId::ALL.iter().map(|&id| AreaFormula::get(id)).filter(|f| f.applies_to(n)).collect()
    }
}

/// The Babylonian heptagon coefficient before the scribe dropped the last
/// digit: 3;41,40.
pub fn babylonian_untruncated_coefficient() -> Rational {
    Rational::ratio(133, 36)
}

/// A regular polygon given by its side or by its circumradius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularPolygonSpec {
    n: u32,
    length: PolygonLength,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolygonLength {
    Side(Rational),
    Circumradius(Rational),
}

impl RegularPolygonSpec {
    pub fn new(n: u32, length: PolygonLength) -> Result<Self, AreaError> {
        if n < 3 {
            return Err(AreaError::TooFewSides(n));
        }
        let value = match &length {
            PolygonLength::Side(v) | PolygonLength::Circumradius(v) => v,
        };
        if !value.is_positive() {
            return Err(AreaError::NonPositiveLength(value.clone()));
        }
        Ok(RegularPolygonSpec { n, length })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn length(&self) -> &PolygonLength {
        &self.length
    }
}

/// `(n/4) cot(180deg/n)` to `digits` decimal digits.
pub fn exact_area_coefficient(n: u32, digits: u32) -> Result<HighPrecision, AreaError> {
    if n < 3 {
        return Err(AreaError::TooFewSides(n));
    }
    Ok(highprec::area_coefficient(n, digits.max(16)))
}

/// `coefficient * side^2` for a rational formula applicable to `n`.
pub fn approximate_area(formula: &AreaFormula, n: u32, side: &Rational) -> Result<Rational, AreaError> {
    if !formula.applies_to(n) {
        return Err(AreaError::NotApplicable { formula: formula.id, n });
    }
    if !side.is_positive() {
        return Err(AreaError::NonPositiveLength(side.clone()));
    }
    let c = formula.rational_coefficient.as_ref().ok_or(AreaError::Transcendental(formula.id))?;
    Ok(c * side.square())
}

/// One line of a worked calculation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub key: &'static str,
    pub description: &'static str,
    pub value: Rational,
    pub sexagesimal: SexagesimalDigits,
}

/// A worked calculation in the order the scribe (or Heron) performs it.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DerivationTrace {
    pub steps: Vec<TraceStep>,
}

impl DerivationTrace {
    fn push(&mut self, key: &'static str, description: &'static str, value: Rational) {
        let sexagesimal = render_trace_value(&value);
        self.steps.push(TraceStep { key, description, value, sexagesimal });
    }

    fn push_rendered(&mut self, key: &'static str, description: &'static str, sexagesimal: SexagesimalDigits) {
        let value = sexagesimal.to_rational();
        self.steps.push(TraceStep { key, description, value, sexagesimal });
    }

    pub fn get(&self, key: &str) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.key == key)
    }

    pub fn value(&self, key: &str) -> Option<&Rational> {
        self.get(key).map(|s| &s.value)
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

fn render_trace_value(value: &Rational) -> SexagesimalDigits {
    render_sexagesimal(value, TRACE_EXACT_PLACES, RenderMode::RequireExact)
        .or_else(|_| render_sexagesimal(value, TRACE_TRUNCATED_PLACES, RenderMode::Truncate))
        .expect("truncating render never fails")
}

fn require_positive(x: &Rational) -> Result<(), AreaError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(AreaError::NonPositiveLength(x.clone()))
    }
}

/// The reverse of SMT No. 2: "multiply (the square of a side) by 4 and
/// subtract one-twelfth".
pub fn elamite_instruction(side: &Rational) -> Result<DerivationTrace, AreaError> {
    require_positive(side)?;
    let mut trace = DerivationTrace::default();
    let four_sq = Rational::from(4) * side.square();
    let twelfth = &four_sq * Rational::ratio(1, 12);
    let area = &four_sq - &twelfth;
    trace.push("four_side_squared", "4 a^2", four_sq);
    trace.push("one_twelfth", "(1/12) 4 a^2", twelfth);
    trace.push("area", "4 a^2 - (1/12) 4 a^2", area);
    Ok(trace)
}

/// The Babylonian computation of the heptagon area from its circumradius:
/// side from `7a = 6r`, height by Pythagoras and the one-step root rule,
/// seven triangles, and the coefficient normalised to `a = 1`.
///
/// The root anchor is the integer whose square is closest to `4r^2 - a^2`;
/// for `r = 0;35` that is 1, as on the tablet.
pub fn smt2_derivation(r: &Rational) -> Result<DerivationTrace, AreaError> {
    require_positive(r)?;
    let mut trace = DerivationTrace::default();
    let a = ancient::heptagon_side_from_radius(r)?;
    let half_base = &a * Rational::ratio(1, 2);
    let r_sq = r.square();
    let four_r_sq = Rational::from(4) * &r_sq;
    let a_sq = a.square();
    // h = sqrt(r^2 - a^2/4) = (1/2) sqrt(4r^2 - a^2)
    let radicand = &four_r_sq - &a_sq;
    let decomposition: SqrtDecomposition = closest_square_anchor(&radicand)?;
    let root = babylonian_sqrt(&decomposition);
    let h = &root * Rational::ratio(1, 2);
    let triangle = &half_base * &h;
    let heptagon = Rational::from(7) * &triangle;
    let coefficient = heptagon.checked_div(&a_sq).expect("side is positive");
    let truncated = render_sexagesimal(&coefficient, 1, RenderMode::Truncate).expect("truncation cannot fail");

    trace.push("radius", "circumradius r", r.clone());
    trace.push("side", "a = 6r/7 (7a = 2 pi r, pi = 3)", a);
    trace.push("half_base", "a/2", half_base);
    trace.push("radius_squared", "r^2", r_sq);
    trace.push("four_radius_squared", "4 r^2", four_r_sq);
    trace.push("side_squared", "a^2", a_sq);
    trace.push("radicand", "4 r^2 - a^2", radicand);
    trace.push("root_anchor", "anchor of sqrt(x^2 +- y)", decomposition.anchor().clone());
    trace.push("root", "sqrt(4 r^2 - a^2) by x +- y/2x", root);
    trace.push("height", "h = (1/2) sqrt(4 r^2 - a^2)", h);
    trace.push("triangle_area", "(1/2) a h", triangle);
    trace.push("heptagon_area", "7 x triangle", heptagon);
    trace.push("coefficient", "heptagon area / a^2", coefficient);
    trace.push_rendered("coefficient_truncated", "coefficient to one place", truncated);
    Ok(trace)
}

/// Heron's derivation of `S = (43/12) a^2` from `r ~ (8/7) a` and
/// `sqrt(23) ~ 43/9`.
pub fn heron_derivation(side: &Rational) -> Result<DerivationTrace, AreaError> {
    require_positive(side)?;
    let mut trace = DerivationTrace::default();
    let r = Rational::ratio(8, 7) * side;
    let half_base = side * Rational::ratio(1, 2);
    // r^2 - (a/2)^2 = 64a^2/49 - a^2/4 = (9 * 23)/(4 * 49) a^2
    let radicand = r.square() - half_base.square();
    let sqrt23 = ancient::constant("sqrt23_heron")?.value.expect("sqrt23 is rational");
    // 7 (a/2) sqrt(radicand) = (7a^2/2)(3/14) sqrt(23) = (3/4) sqrt(23) a^2
    let coefficient = Rational::ratio(3, 4) * &sqrt23;
    let area = &coefficient * side.square();

    trace.push("side", "side a", side.clone());
    trace.push("radius", "r = 8a/7", r);
    trace.push("half_base", "a/2", half_base);
    trace.push("radicand", "64 a^2/49 - a^2/4", radicand);
    trace.push("sqrt23", "sqrt(23) ~ 43/9", sqrt23);
    trace.push("coefficient", "(3/4) sqrt(23)", coefficient);
    trace.push("area", "(43/12) a^2", area);
    Ok(trace)
}

/// Accuracy of an approximate coefficient against the exact one.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub formula_id: FormulaId,
    pub approx_coefficient: Rational,
    pub exact_coefficient: HighPrecision,
    pub absolute_error: f64,
    pub relative_error_percent: f64,
}

/// Compares the heptagon rules of Heron, the Babylonians and the Elamite
/// scribe against the exact coefficient, in that order.
pub fn error_analysis(n: u32) -> Result<Vec<ErrorReport>, AreaError> {
    if n != 7 {
        return Err(AreaError::UnsupportedComparison(n));
    }
    let exact = exact_area_coefficient(n, DEFAULT_DIGITS)?;
    let exact_q = exact.to_rational();
    let reports = [FormulaId::HeronHeptagon, FormulaId::BabylonianHeptagon, FormulaId::ElamiteHeptagon]
        .into_iter()
        .map(|id| {
            let approx = AreaFormula::get(id).rational_coefficient.expect("heptagon formulas are rational");
            let abs = (&exact_q - &approx).abs();
            let rel = (&abs * Rational::from(100)).checked_div(&exact_q).expect("exact coefficient is positive");
            ErrorReport {
                formula_id: id,
                approx_coefficient: approx,
                exact_coefficient: exact.clone(),
                absolute_error: abs.to_f64(),
                relative_error_percent: rel.to_f64(),
            }
        })
        .collect();
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sexagesimal::parse_sexagesimal;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn sx(s: &str) -> Rational {
        parse_sexagesimal(s).unwrap()
    }

    #[test]
    fn exact_coefficient_values() {
        let four = exact_area_coefficient(4, 40).unwrap();
        assert!((four.to_f64() - 1.0).abs() < 1e-15);
        let seven = exact_area_coefficient(7, 40).unwrap();
        assert!((seven.to_f64() - 3.633_912_444_001_589).abs() < 1e-14);
        let three = exact_area_coefficient(3, 40).unwrap();
        assert!((three.to_f64() - 0.433_012_701_892_219_3).abs() < 1e-15);
        assert_eq!(exact_area_coefficient(2, 40), Err(AreaError::TooFewSides(2)));
    }

    #[test]
    fn approximate_area_examples() {
        let e = AreaFormula::get(FormulaId::ElamiteHeptagon);
        assert_eq!(approximate_area(&e, 7, &Rational::one()).unwrap(), r(11, 3));
        let h = AreaFormula::get(FormulaId::HeronHeptagon);
        assert_eq!(approximate_area(&h, 7, &Rational::one()).unwrap(), r(43, 12));
        let t = AreaFormula::get(FormulaId::TriangleSevenSixteenths);
        assert_eq!(approximate_area(&t, 3, &Rational::from(2)).unwrap(), r(7, 4));
    }

    #[test]
    fn approximate_area_rejects_mismatch() {
        let e = AreaFormula::get(FormulaId::ElamiteHeptagon);
        assert!(matches!(approximate_area(&e, 6, &Rational::one()), Err(AreaError::NotApplicable { n: 6, .. })));
        let x = AreaFormula::get(FormulaId::Exact);
        assert_eq!(approximate_area(&x, 5, &Rational::one()), Err(AreaError::Transcendental(FormulaId::Exact)));
        assert!(matches!(approximate_area(&e, 7, &Rational::zero()), Err(AreaError::NonPositiveLength(_))));
    }

    #[test]
    fn formulas_per_n() {
        let ids: Vec<_> = AreaFormula::for_n(7).iter().map(|f| f.id).collect();
        assert_eq!(
            ids,
            [FormulaId::Exact, FormulaId::BabylonianHeptagon, FormulaId::ElamiteHeptagon, FormulaId::HeronHeptagon]
        );
        assert_eq!(AreaFormula::for_n(3).len(), 2);
        assert_eq!(AreaFormula::for_n(5).len(), 1);
        assert!(AreaFormula::for_n(2).is_empty());
    }

    #[test]
    fn elamite_instruction_examples() {
        let t = elamite_instruction(&Rational::one()).unwrap();
        let values: Vec<_> = t.steps.iter().map(|s| s.value.clone()).collect();
        assert_eq!(values, [Rational::from(4), r(1, 3), r(11, 3)]);
        assert_eq!(t.last().unwrap().sexagesimal.to_string(), "3;40");

        let t = elamite_instruction(&r(1, 2)).unwrap();
        let values: Vec<_> = t.steps.iter().map(|s| s.value.clone()).collect();
        assert_eq!(values, [Rational::one(), r(1, 12), r(11, 12)]);

        assert!(elamite_instruction(&Rational::zero()).is_err());
    }

    #[test]
    fn smt2_chain_on_the_tablet() {
        let t = smt2_derivation(&sx("0;35")).unwrap();
        assert_eq!(t.value("side").unwrap(), &sx("0;30"));
        assert_eq!(t.value("half_base").unwrap(), &sx("0;15"));
        assert_eq!(t.value("radius_squared").unwrap(), &sx("0;20,25"));
        assert_eq!(t.value("four_radius_squared").unwrap(), &sx("1;21,40"));
        assert_eq!(t.value("radicand").unwrap(), &sx("1;6,40"));
        assert_eq!(t.value("root_anchor").unwrap(), &Rational::one());
        assert_eq!(t.value("root").unwrap(), &sx("1;3,20"));
        assert_eq!(t.value("height").unwrap(), &r(19, 36));
        assert_eq!(t.value("triangle_area").unwrap(), &r(19, 144));
        assert_eq!(t.value("heptagon_area").unwrap(), &r(133, 144));
        assert_eq!(t.value("coefficient").unwrap(), &r(133, 36));
        assert_eq!(t.value("coefficient_truncated").unwrap(), &r(221, 60));
        let rendered: Vec<_> = ["height", "triangle_area", "heptagon_area", "coefficient", "coefficient_truncated"]
            .iter()
            .map(|k| t.get(k).unwrap().sexagesimal.to_string())
            .collect();
        assert_eq!(rendered, ["0;31,40", "0;7,55", "0;55,25", "3;41,40", "3;41"]);
        assert!(!t.get("coefficient_truncated").unwrap().sexagesimal.is_exact());
    }

    #[test]
    fn smt2_chain_scales() {
        let base = smt2_derivation(&r(7, 12)).unwrap();
        let doubled = smt2_derivation(&r(7, 6)).unwrap();
        assert_eq!(doubled.value("height").unwrap(), &r(19, 18));
        for key in ["triangle_area", "heptagon_area"] {
            assert_eq!(doubled.value(key).unwrap(), &(Rational::from(4) * base.value(key).unwrap()));
        }
        assert_eq!(doubled.value("coefficient"), base.value("coefficient"));
    }

    #[test]
    fn smt2_chain_for_unit_radius() {
        // a = 6/7, 4r^2 - a^2 = 160/49, anchor 2 (minus branch):
        // root = 2 - (36/49)/4 = 89/49, h = 89/98, triangle = (3/7)(89/98)
        let t = smt2_derivation(&Rational::one()).unwrap();
        assert_eq!(t.value("side").unwrap(), &r(6, 7));
        assert_eq!(t.value("radicand").unwrap(), &r(160, 49));
        assert_eq!(t.value("root_anchor").unwrap(), &Rational::from(2));
        assert_eq!(t.value("root").unwrap(), &r(89, 49));
        assert_eq!(t.value("height").unwrap(), &r(89, 98));
        assert_eq!(t.value("triangle_area").unwrap(), &r(267, 686));
        assert_eq!(t.value("heptagon_area").unwrap(), &r(267, 98));
        assert_eq!(t.value("coefficient").unwrap(), &r(89, 24));
        // 1/7 does not terminate, so the side is flagged as truncated
        assert!(!t.get("side").unwrap().sexagesimal.is_exact());
        assert!(smt2_derivation(&r(-1, 2)).is_err());
    }

    #[test]
    fn heron_trace() {
        let t = heron_derivation(&Rational::one()).unwrap();
        assert_eq!(t.value("radicand").unwrap(), &r(9 * 23, 4 * 49));
        assert_eq!(t.last().unwrap().value, r(43, 12));
        assert_eq!(t.last().unwrap().sexagesimal.to_string(), "3;35");
        let t2 = heron_derivation(&Rational::from(2)).unwrap();
        assert_eq!(t2.last().unwrap().value, r(43, 3));
        assert!(heron_derivation(&Rational::zero()).is_err());
    }

    #[test]
    fn error_analysis_ordering() {
        let reports = error_analysis(7).unwrap();
        let pct: Vec<f64> = reports.iter().map(|r| r.relative_error_percent).collect();
        assert!((pct[0] - 1.39).abs() < 0.03);
        assert!((pct[1] - 1.36).abs() < 0.03);
        assert!((pct[2] - 0.9).abs() < 0.03);
        assert!(pct[2] < pct[1] && pct[1] < pct[0]);
        assert_eq!(error_analysis(5), Err(AreaError::UnsupportedComparison(5)));
    }

    #[test]
    fn polygon_spec_validation() {
        assert!(RegularPolygonSpec::new(7, PolygonLength::Side(Rational::one())).is_ok());
        assert_eq!(RegularPolygonSpec::new(2, PolygonLength::Side(Rational::one())), Err(AreaError::TooFewSides(2)));
        assert!(RegularPolygonSpec::new(5, PolygonLength::Circumradius(Rational::zero())).is_err());
    }
}
