//! Randomised invariants over the public API.

use proptest::prelude::*;

use susa_core::ancient::{babylonian_sqrt, Branch, SqrtDecomposition};
use susa_core::construction::{
    circle_circle_intersect, elamite_heptagon, exact_ngon, replay, Circle, ClosureMode, Point,
};
use susa_core::dissection::{decompose_heptagon, goal_region, grid_classify, Layout, Placement, Split, Thresholds};
use susa_core::expr::eval_sex_expression;
use susa_core::polygon_area::{approximate_area, AreaFormula, FormulaId};
use susa_core::sexagesimal::{is_regular, parse_sexagesimal, render_sexagesimal, Rational, RenderMode};

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, ..ProptestConfig::default() }
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..1_000_000, 1i64..10_000).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn regular_rational() -> impl Strategy<Value = Rational> {
    (-10_000_000i64..10_000_000, 0u32..12, 0u32..8, 0u32..6).prop_map(|(n, p, q, r)| {
        let d = 2i64.pow(p) * 3i64.pow(q) * 5i64.pow(r);
        Rational::ratio(n, d)
    })
}

fn sqrt_decomposition() -> impl Strategy<Value = SqrtDecomposition> {
    (positive_rational(), 0u32..1_000_000, any::<bool>()).prop_map(|(anchor, frac, plus)| {
        // remainder as a fraction of anchor^2, strictly below it
        let share = Rational::ratio(frac as i64, 1_000_000);
        let remainder = anchor.square() * share;
        let branch = if plus { Branch::Plus } else { Branch::Minus };
        SqrtDecomposition::new(anchor, remainder, branch).expect("valid by construction")
    })
}

proptest! {
    #![proptest_config(cases(1000))]

    #[test]
    fn babylonian_root_never_underestimates(d in sqrt_decomposition()) {
        let root = babylonian_sqrt(&d);
        prop_assert!(root.is_positive());
        prop_assert!(root.square() >= d.radicand());
    }

    #[test]
    fn regular_rationals_round_trip(x in regular_rational()) {
        let digits = render_sexagesimal(&x, 64, RenderMode::RequireExact).unwrap();
        prop_assert!(digits.is_exact());
        prop_assert!(digits.integer_digits().iter().chain(digits.fractional_digits()).all(|&d| d < 60));
        prop_assert_eq!(parse_sexagesimal(&digits.to_string()).unwrap(), x);
    }

    #[test]
    fn truncation_is_bounded(n in -1_000_000_000i64..1_000_000_000, d in 1i64..100_000, places in 0usize..8) {
        let x = Rational::ratio(n, d);
        let t = render_sexagesimal(&x, places, RenderMode::Truncate).unwrap().to_rational();
        let ulp = Rational::from(60).pow(-(places as i32)).unwrap();
        prop_assert!((&t - &x).abs() < ulp);
        prop_assert!(t.abs() <= x.abs());
        prop_assert!(t.is_zero() || t.signum() == x.signum());
    }

    #[test]
    fn nearest_is_within_half_a_place(n in -1_000_000i64..1_000_000, d in 1i64..10_000, places in 0usize..6) {
        let x = Rational::ratio(n, d);
        let r = render_sexagesimal(&x, places, RenderMode::Nearest).unwrap().to_rational();
        let half = Rational::from(60).pow(-(places as i32)).unwrap() * Rational::ratio(1, 2);
        prop_assert!((&r - &x).abs() <= half);
    }

    #[test]
    fn expression_matches_arithmetic(a in regular_rational(), b in regular_rational(), c in regular_rational()) {
        let lit = |x: &Rational| render_sexagesimal(&x.abs(), 64, RenderMode::RequireExact).unwrap().to_string();
        let signed = |x: &Rational| if x.signum() < 0 { format!("(-{})", lit(x)) } else { lit(x) };
        let text = format!("{} + {} * {}", signed(&a), signed(&b), signed(&c));
        prop_assert_eq!(eval_sex_expression(&text).unwrap(), &a + &b * &c);
    }

    #[test]
    fn expression_parser_never_panics(s in "[0-9,;()+*/ ×÷-]{0,40}") {
        let _ = eval_sex_expression(&s);
    }

    #[test]
    fn literal_parser_never_panics(s in "\\PC{0,24}") {
        let _ = parse_sexagesimal(&s);
    }
}

#[test]
fn regular_numbers_are_exactly_the_terminating_reciprocals() {
    for n in 1..=10_000u64 {
        let terminates = render_sexagesimal(&Rational::ratio(1, n as i64), 64, RenderMode::RequireExact).is_ok();
        assert_eq!(is_regular(n).unwrap(), terminates, "n = {n}");
    }
}

proptest! {
    #![proptest_config(cases(300))]

    #[test]
    fn area_rules_scale_with_the_square(a in positive_rational()) {
        let rules = [
            (FormulaId::BabylonianHeptagon, 7),
            (FormulaId::ElamiteHeptagon, 7),
            (FormulaId::HeronHeptagon, 7),
            (FormulaId::TriangleSevenSixteenths, 3),
        ];
        for (id, n) in rules {
            let f = AreaFormula::get(id);
            let base = approximate_area(&f, n, &a).unwrap();
            for k in [Rational::from(2), Rational::from(3), Rational::ratio(1, 2)] {
                let scaled = approximate_area(&f, n, &(&k * &a)).unwrap();
                prop_assert_eq!(scaled, k.square() * &base);
            }
        }
    }

    #[test]
    fn circle_intersection_is_symmetric(
        x1 in -5.0f64..5.0, y1 in -5.0f64..5.0, r1 in 0.1f64..5.0,
        x2 in -5.0f64..5.0, y2 in -5.0f64..5.0, r2 in 0.1f64..5.0,
    ) {
        let c1 = Circle::new(Point::new(x1, y1), r1).unwrap();
        let c2 = Circle::new(Point::new(x2, y2), r2).unwrap();
        let (a, b) = match (circle_circle_intersect(&c1, &c2), circle_circle_intersect(&c2, &c1)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(_), Err(_)) => return Ok(()),
            other => return Err(TestCaseError::fail(format!("asymmetric outcome {other:?}"))),
        };
        prop_assert_eq!(a.len(), b.len());
        let tol = 1e-9 * r1.max(r2).max(1.0);
        for p in &a {
            prop_assert!(b.iter().any(|q| p.approx_eq(*q, tol)));
            prop_assert!(c1.contains(*p) || (p.distance(c1.center) - r1).abs() < 1e-7);
        }
    }

    #[test]
    fn replay_reproduces_every_coordinate(r in 0.01f64..100.0, midpoint in any::<bool>()) {
        let c = Circle::new(Point::new(0.0, 0.0), r).unwrap();
        let mode = if midpoint { ClosureMode::MidpointOfGapArc } else { ClosureMode::ConnectToStart };
        let h = elamite_heptagon(&c, mode).unwrap();
        let again = replay(h.trace.steps()).unwrap();
        prop_assert_eq!(&again, &h.trace);
        for w in h.vertices[1..].windows(2) {
            prop_assert!((w[0].distance(w[1]) - 6.0 / 7.0 * r).abs() <= 1e-9 * r);
        }
        prop_assert!((h.gap.gap_deg - (360.0 - h.gap.cumulative_angle_deg)).abs() < 1e-12);
    }

    #[test]
    fn exact_polygons_have_equal_sides(n in 3u32..40, r in 0.01f64..100.0, phase in -360.0f64..360.0) {
        let v = exact_ngon(n, r, phase).unwrap().vertices;
        let s = 2.0 * r * (std::f64::consts::PI / n as f64).sin();
        for i in 0..v.len() {
            prop_assert!((v[i].distance(v[(i + 1) % v.len()]) - s).abs() <= 1e-9 * r);
        }
    }

    #[test]
    fn placements_conserve_area(
        a in 0.1f64..10.0,
        motions in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0, -360.0f64..360.0, any::<bool>()), 11),
        four in any::<bool>(),
        square in any::<bool>(),
    ) {
        let split = if four { Split::Four } else { Split::Two };
        let layout = if square { Layout::Square } else { Layout::Rectangle };
        let pieces = decompose_heptagon(a, split).unwrap();
        let placements: Vec<Placement> = pieces
            .iter()
            .zip(&motions)
            .map(|(p, &(dx, dy, rot, refl))| Placement::new(&p.id, a * (1.0 + dx), a * (0.5 + dy / 6.0), rot, refl))
            .collect();
        let region = goal_region(layout, a).unwrap();
        let r = grid_classify(&region, &placements, &pieces, 12, Thresholds::default()).unwrap();
        let exact = 7.0 / 4.0 / (std::f64::consts::PI / 7.0).tan() * a * a;
        prop_assert!((r.placed_area - exact).abs() <= 1e-12 * a * a * 10.0);
        prop_assert!((r.net_uncovered - (11.0 / 3.0 * a * a - exact)).abs() <= 1e-9 * a * a);
        prop_assert!((r.covered_area - r.inside_area).abs() <= 1e-9 * a * a);
        let cell2 = r.cell_size * r.cell_size;
        prop_assert!(r.counts.complete_colored as f64 * 0.99 * cell2 <= r.covered_area + 1e-12);
        // sum minus pairwise overlaps never exceeds the union
        prop_assert!(r.covered_area - r.overlap_area <= r.touched() as f64 * cell2 + 1e-12);
    }
}
