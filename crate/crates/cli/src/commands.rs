use std::path::Path;

use susa_core::ancient;
use susa_core::construction::{
    self as geo, Circle, ClosureMode, Construction, ConstructionError, ConstructionTrace, HeptagonConstruction,
    HeronSide, Point,
};
use susa_core::dissection::{self, DissectionError, Layout, Split, Thresholds};
use susa_core::expr::{eval_sex_expression, ExprError};
use susa_core::polygon_area::{
    self, error_analysis, exact_area_coefficient, AreaError, AreaFormula, CoefficientKind, DerivationTrace,
    DEFAULT_DIGITS,
};
use susa_core::sexagesimal::{parse_sexagesimal, render_sexagesimal, Rational, RenderMode, SexagesimalDigits};

use crate::args::{
    AreasArgs, Closure, Command, ConstructArgs, DeriveCommand, DissectArgs, ErrorsArgs, HeronSideArg, LayoutArg,
    Method, SexaCommand, Shape, SplitArg,
};
use crate::output::{Cell, Output};
use crate::CliError;

/// Decimals for coordinates and lengths.
const GEOMETRY_PLACES: usize = 9;
/// Decimals for areas in the dissection report.
const AREA_PLACES: usize = 12;

pub fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Sexa(SexaCommand::Eval { expr, places, format }) => {
            Ok(sexa_eval(expr, *places)?.render(format.format))
        }
        Command::Areas(args) => Ok(areas(args)?.render(args.format.format)),
        Command::Errors(args) => Ok(errors(args)?.render(args.format.format)),
        Command::Derive(d) => derive(d),
        Command::Constants(f) => Ok(constants().render(f.format)),
        Command::Construct(args) => construct(args),
        Command::Dissect(args) => dissect(args),
    }
}

/// A length given as a sexagesimal literal (it has `;` or `,`) or as a
/// decimal or `p/q` fraction.
pub fn parse_value(flag: &str, text: &str) -> Result<Rational, CliError> {
    let t = text.trim();
    if t.contains([';', ',']) {
        parse_sexagesimal(t).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
    } else {
        t.parse::<Rational>().map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn area_error(e: AreaError) -> CliError {
    domain(e)
}

fn truncated(x: &Rational, places: usize) -> SexagesimalDigits {
    render_sexagesimal(x, places, RenderMode::Truncate).expect("truncation cannot fail")
}

/// Exact when it fits in `places`, truncated otherwise.
fn sexagesimal_of(x: &Rational, places: usize) -> SexagesimalDigits {
    render_sexagesimal(x, places, RenderMode::RequireExact).unwrap_or_else(|_| truncated(x, places))
}

fn sexa_eval(expr: &str, places: usize) -> Result<Output, CliError> {
    let value = eval_sex_expression(expr).map_err(|e| match e {
        ExprError::DivisionByZero { .. } => domain(e),
        other => CliError::Usage(other.to_string()),
    })?;
    let digits = truncated(&value, places);
    Ok(Output::Record(vec![
        ("expression", Cell::text(expr)),
        ("rational", Cell::text(value.to_string())),
        ("sexagesimal", Cell::text(digits.to_string())),
        ("truncated", Cell::Bool(!digits.is_exact())),
    ]))
}

fn areas(args: &AreasArgs) -> Result<Output, CliError> {
    let side = parse_value("side", &args.side)?;
    if !side.is_positive() {
        return Err(domain(AreaError::NonPositiveLength(side)));
    }
    let exact = exact_area_coefficient(args.n, DEFAULT_DIGITS).map_err(area_error)?;
    let exact_q = exact.to_rational();
    let side_sq = side.square();
    let mut rows = Vec::new();
    for formula in AreaFormula::for_n(args.n) {
        let (coef, coef_text) = match formula.coefficient_kind {
            CoefficientKind::Transcendental => (exact_q.clone(), exact.to_decimal_string(30)),
            CoefficientKind::Rational => {
                let c = formula.rational_coefficient.clone().expect("rational formulas carry a coefficient");
                let text = c.to_string();
                (c, text)
            }
        };
        let rel = ((&coef - &exact_q).abs() * Rational::from(100)).checked_div(&exact_q).map_err(domain)?;
        let area = &coef * &side_sq;
        let area_text = match formula.coefficient_kind {
            CoefficientKind::Transcendental => format!("{:.15}", area.to_f64()),
            CoefficientKind::Rational => area.to_string(),
        };
        rows.push(vec![
            Cell::text(formula.id.as_str()),
            Cell::text(sexagesimal_of(&coef, args.places).to_string()),
            Cell::text(coef_text),
            Cell::fixed(rel.to_f64(), 2),
            Cell::text(sexagesimal_of(&area, args.places).to_string()),
            Cell::text(area_text),
        ]);
    }
    Ok(Output::Rows {
        columns: vec![
            "formula_id",
            "coefficient_sexagesimal",
            "coefficient_rational",
            "relative_error_percent",
            "area_sexagesimal",
            "area_rational",
        ],
        rows,
    })
}

fn errors(args: &ErrorsArgs) -> Result<Output, CliError> {
    let reports = error_analysis(args.n).map_err(area_error)?;
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                Cell::text(r.formula_id.as_str()),
                Cell::text(sexagesimal_of(&r.approx_coefficient, 6).to_string()),
                Cell::text(r.approx_coefficient.to_string()),
                Cell::fixed(r.relative_error_percent, 2),
            ]
        })
        .collect();
    Ok(Output::Rows {
        columns: vec!["formula_id", "coefficient_sexagesimal", "coefficient_rational", "relative_error_percent"],
        rows,
    })
}

fn trace_rows(trace: &DerivationTrace) -> Output {
    let rows = trace
        .steps
        .iter()
        .map(|s| {
            vec![
                Cell::text(s.key),
                Cell::text(s.description),
                Cell::text(s.value.to_string()),
                Cell::text(s.sexagesimal.to_string()),
                Cell::Bool(s.sexagesimal.is_exact()),
            ]
        })
        .collect();
    Output::Rows { columns: vec!["step", "description", "rational", "sexagesimal", "exact"], rows }
}

fn derive(cmd: &DeriveCommand) -> Result<String, CliError> {
    let (trace, format) = match cmd {
        DeriveCommand::Smt2 { r, format } => (polygon_area::smt2_derivation(&parse_value("r", r)?), format),
        DeriveCommand::Heron { a, format } => (polygon_area::heron_derivation(&parse_value("a", a)?), format),
        DeriveCommand::Elamite { a, format } => (polygon_area::elamite_instruction(&parse_value("a", a)?), format),
    };
    Ok(trace_rows(&trace.map_err(area_error)?).render(format.format))
}

fn constants() -> Output {
    let rows = ancient::catalog()
        .into_iter()
        .map(|c| {
            let (value, sexa, decimal) = match &c.value {
                Some(v) => (
                    Cell::text(v.to_string()),
                    Cell::text(sexagesimal_of(v, 6).to_string()),
                    Cell::fixed(v.to_f64(), 12),
                ),
                None => (Cell::Null, Cell::Null, Cell::Null),
            };
            vec![
                Cell::text(c.id),
                value,
                sexa,
                decimal,
                c.check_value.map_or(Cell::Null, |v| Cell::fixed(v, 12)),
                Cell::text(c.replaces),
                Cell::text(c.source),
            ]
        })
        .collect();
    Output::Rows { columns: vec!["id", "value", "sexagesimal", "decimal", "target", "replaces", "source"], rows }
}

fn construction_error(e: ConstructionError) -> CliError {
    domain(e)
}

/// Everything a construction run produces.
struct Built {
    vertices: Vec<Point>,
    trace: ConstructionTrace,
    report: Vec<(&'static str, Cell)>,
}

fn plain(c: Construction) -> Built {
    Built { vertices: c.vertices, trace: c.trace, report: Vec::new() }
}

fn heptagon_report(h: HeptagonConstruction, circle: &Circle) -> Result<Built, CliError> {
    let g = &h.gap;
    let reg = geo::polygon_regularity_error(&h.vertices, circle).map_err(construction_error)?;
    let report = vec![
        ("chord_length", Cell::fixed(g.chord_length, GEOMETRY_PLACES)),
        ("per_chord_central_angle_deg", Cell::fixed(g.per_chord_central_angle_deg, GEOMETRY_PLACES)),
        ("chords", Cell::from(g.chords)),
        ("cumulative_angle_deg", Cell::fixed(g.cumulative_angle_deg, GEOMETRY_PLACES)),
        ("gap_deg", Cell::fixed(g.gap_deg, GEOMETRY_PLACES)),
        (
            "closure_mode",
            Cell::text(match g.closure_mode {
                ClosureMode::ConnectToStart => "connect_to_start",
                ClosureMode::MidpointOfGapArc => "midpoint_of_gap_arc",
            }),
        ),
        ("side_error_percent", Cell::fixed(h.side_error_percent(circle), 6)),
        ("regularity_error_percent_of_r", Cell::fixed(reg * 100.0, 6)),
    ];
    Ok(Built { vertices: h.vertices, trace: h.trace, report })
}

fn unsupported(shape: Shape, method: Method) -> CliError {
    let name = |v: &dyn std::fmt::Debug| format!("{v:?}").to_lowercase();
    CliError::Usage(format!("--shape {} does not support --method {}", name(&shape), name(&method)))
}

fn build(args: &ConstructArgs, circle: &Circle) -> Result<Built, CliError> {
    let r = circle.radius;
    let start = circle.point_at(0.0);
    let hexagon = || geo::hexagon_march(circle, start).map_err(construction_error);
    let need_n = |what: &str| args.n.ok_or_else(|| CliError::Usage(format!("--n is required for {what}")));
    let exact = |n: u32| geo::exact_ngon_on(circle, n, args.phase).map(plain).map_err(construction_error);
    match (args.shape, args.method) {
        (Shape::Triangle, Method::Exact) => exact(3),
        (Shape::Square, Method::Exact) => exact(4),
        (Shape::Pentagon, Method::Exact) => exact(5),
        (Shape::Hexagon, Method::Exact) => exact(6),
        (Shape::Heptagon, Method::Exact) => exact(7),
        (Shape::Ngon, Method::Exact) => exact(need_n("--shape ngon")?),
        (Shape::Hexagon, Method::March) => {
            let h = hexagon()?;
            let report = vec![("closure_error", Cell::fixed(h.closure_error, GEOMETRY_PLACES))];
            Ok(Built { vertices: h.vertices, trace: h.trace, report })
        }
        (Shape::Triangle, Method::March) => {
            let h = hexagon()?;
            let vertices = geo::triangle_from_hexagon(&h.vertices).map_err(construction_error)?;
            Ok(Built { vertices, trace: h.trace, report: Vec::new() })
        }
        (Shape::Square, Method::March) => {
            let h = hexagon()?;
            geo::square_from_hexagon(&h.vertices, circle).map(plain).map_err(construction_error)
        }
        (Shape::Pentagon, Method::Ptolemy) => {
            let p = geo::ptolemy_pentagon(circle).map_err(construction_error)?;
            let reference = geo::exact_ngon_on(circle, 5, 90.0).map_err(construction_error)?;
            let deviation = p
                .vertices
                .iter()
                .map(|v| reference.vertices.iter().map(|q| v.distance(*q)).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            let report = vec![
                ("oe", Cell::fixed(p.oe, GEOMETRY_PLACES + 3)),
                ("ratio_oe_ob", Cell::fixed(p.ratio_oe_ob, GEOMETRY_PLACES + 3)),
                ("ratio_ob_eb", Cell::fixed(p.ratio_ob_eb, GEOMETRY_PLACES + 3)),
                ("ratio_eb_oe", Cell::fixed(p.ratio_eb_oe, GEOMETRY_PLACES + 3)),
                ("side_ce", Cell::fixed(p.side, GEOMETRY_PLACES)),
                ("max_deviation_from_exact", Cell::fixed(deviation / r, GEOMETRY_PLACES + 3)),
            ];
            Ok(Built { vertices: p.vertices, trace: p.trace, report })
        }
        (Shape::Heptagon, Method::Heron) => {
            let side = match args.heron_side {
                HeronSideArg::Apothem => HeronSide::Apothem,
                HeronSideArg::SevenEighths => HeronSide::SevenEighths,
            };
            heptagon_report(geo::heron_heptagon(circle, side).map_err(construction_error)?, circle)
        }
        (Shape::Heptagon, Method::Durer) => {
            heptagon_report(geo::durer_heptagon(circle).map_err(construction_error)?, circle)
        }
        (Shape::Heptagon, Method::Elamite) => {
            let mode = match args.closure {
                Closure::Start => ClosureMode::ConnectToStart,
                Closure::Midpoint => ClosureMode::MidpointOfGapArc,
            };
            heptagon_report(geo::elamite_heptagon(circle, mode).map_err(construction_error)?, circle)
        }
        (shape, Method::Double) => {
            let base = match shape {
                Shape::Square => 2,
                Shape::Hexagon => 3,
                Shape::Ngon => need_n("--method double")?,
                _ => return Err(unsupported(shape, Method::Double)),
            };
            if base == 2 {
                // a diameter is the "2-gon" that doubles to a square
                return geo::square_from_hexagon(&hexagon()?.vertices, circle).map(plain).map_err(construction_error);
            }
            let first = geo::exact_ngon_on(circle, base, args.phase).map_err(construction_error)?;
            geo::double_ngon(&first.vertices, circle).map(plain).map_err(construction_error)
        }
        (Shape::Ngon, Method::Compose) => {
            let n = need_n("--method compose")?;
            let m = args.m.ok_or_else(|| CliError::Usage("--m is required for --method compose".into()))?;
            let c = geo::compose_ngon(n, m, circle, start).map_err(construction_error)?;
            let spacing = geo::min_angular_spacing_deg(&c.vertices, circle);
            let mut built = plain(c);
            built.report.push(("min_angular_spacing_deg", Cell::fixed(spacing, GEOMETRY_PLACES)));
            Ok(built)
        }
        (shape, method) => Err(unsupported(shape, method)),
    }
}

fn write_svg(path: &Path, contents: &str) -> Result<(), CliError> {
    susa_core::svg::write_atomic(path, contents)
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

fn construct(args: &ConstructArgs) -> Result<String, CliError> {
    let radius = parse_value("radius", &args.radius)?.to_f64();
    let circle = Circle::new(Point::new(0.0, 0.0), radius).map_err(construction_error)?;
    let built = build(args, &circle)?;

    if let Some(path) = &args.svg {
        write_svg(path, &geo::svg::render(&built.trace, &built.vertices))?;
    }

    let shape = format!("{:?}", args.shape).to_lowercase();
    let method = format!("{:?}", args.method).to_lowercase();
    let mut sections = vec![(
        "construction",
        Output::Record(vec![
            ("shape", Cell::text(shape)),
            ("method", Cell::text(method)),
            ("radius", Cell::fixed(radius, GEOMETRY_PLACES)),
            ("vertices", Cell::from(built.vertices.len())),
            ("steps", Cell::from(built.trace.steps().len())),
        ]),
    )];
    if args.report {
        let n = built.vertices.len();
        let sides: Vec<f64> = (0..n).map(|i| built.vertices[i].distance(built.vertices[(i + 1) % n])).collect();
        let min = sides.iter().copied().fold(f64::INFINITY, f64::min);
        let max = sides.iter().copied().fold(0.0, f64::max);
        let mut report =
            vec![("side_min", Cell::fixed(min, GEOMETRY_PLACES)), ("side_max", Cell::fixed(max, GEOMETRY_PLACES))];
        if args.shape != Shape::Heptagon || args.method == Method::Exact {
            let reg = geo::polygon_regularity_error(&built.vertices, &circle).map_err(construction_error)?;
            report.push(("regularity_error_percent_of_r", Cell::fixed(reg * 100.0, 6)));
        }
        report.extend(built.report);
        sections.push(("report", Output::Record(report)));
    }
    let rows = built
        .vertices
        .iter()
        .enumerate()
        .map(|(i, p)| vec![Cell::from(i + 1), Cell::fixed(p.x, GEOMETRY_PLACES), Cell::fixed(p.y, GEOMETRY_PLACES)])
        .collect();
    sections.push(("vertices", Output::Rows { columns: vec!["index", "x", "y"], rows }));
    Ok(Output::Sections(sections).render(args.format.format))
}

fn dissection_error(e: DissectionError) -> CliError {
    match e {
        DissectionError::Parse(_) => CliError::Usage(e.to_string()),
        other => domain(other),
    }
}

fn dissect(args: &DissectArgs) -> Result<String, CliError> {
    let layout_flag = args.layout.map(|l| match l {
        LayoutArg::Square => Layout::Square,
        LayoutArg::Rectangle => Layout::Rectangle,
    });
    let split_flag = args.split.map(|s| match s {
        SplitArg::Two => Split::Two,
        SplitArg::Four => Split::Four,
    });
    let (file, source) = match &args.placements {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
            (dissection::parse_placement_file(&text).map_err(dissection_error)?, path.display().to_string())
        }
        None => {
            let layout = layout_flag.unwrap_or(Layout::Square);
            let split = split_flag.unwrap_or_default();
            let text = dissection::shipped_placements(layout, split);
            (dissection::parse_placement_file(text).map_err(dissection_error)?, "shipped".to_string())
        }
    };
    if let Some(l) = layout_flag {
        if l != file.layout {
            return Err(CliError::Domain(format!(
                "--layout {l} does not match the placement file's layout {}",
                file.layout
            )));
        }
    }
    if let Some(s) = split_flag {
        if s != file.split() {
            return Err(CliError::Domain(format!(
                "--split {} does not match the placement file's split {}",
                s.as_str(),
                file.split().as_str()
            )));
        }
    }
    let thresholds = Thresholds::new(args.complete, args.almost).map_err(dissection_error)?;
    let region = dissection::goal_region(file.layout, file.a).map_err(dissection_error)?;
    let pieces = file.pieces().map_err(dissection_error)?;
    let report = dissection::grid_classify(&region, &file.placements, &pieces, args.grid, thresholds)
        .map_err(dissection_error)?;
    for w in &report.warnings {
        eprintln!("susa: warning: {w}");
    }
    if let Some(path) = &args.svg {
        write_svg(path, &dissection::svg::render(&region, &report))?;
    }

    let c = &report.counts;
    let f = |v: f64| Cell::fixed(v, AREA_PLACES);
    let summary = Output::Record(vec![
        ("layout", Cell::text(file.layout.as_str())),
        ("split", Cell::text(file.split().as_str())),
        ("placements", Cell::text(source)),
        ("a", Cell::fixed(file.a, GEOMETRY_PLACES)),
        ("grid", Cell::from(args.grid)),
        ("cell_size", Cell::fixed(report.cell_size, AREA_PLACES)),
        ("cells", Cell::from(report.cells)),
        ("complete_colored", Cell::from(c.complete_colored)),
        ("almost_colored", Cell::from(c.almost_colored)),
        ("partial", Cell::from(c.partial)),
        ("almost_blank_half", Cell::from(c.almost_blank_half)),
        ("blank", Cell::from(c.blank)),
        ("goal_area", f(report.goal_area)),
        ("placed_area", f(report.placed_area)),
        ("covered_area", f(report.covered_area)),
        ("inside_area", f(report.inside_area)),
        ("outside_area", f(report.outside_area)),
        ("overlap_area", f(report.overlap_area)),
        ("net_uncovered", f(report.net_uncovered)),
        ("uncovered_in_place", f(report.uncovered_in_place)),
        ("three_cell_residual", f(report.three_cell_residual)),
        ("warnings", Cell::from(report.warnings.len())),
    ]);
    if !args.report {
        return Ok(summary.render(args.format.format));
    }

    let a_exact = Rational::from_f64(file.a).ok_or_else(|| CliError::Domain("side is not finite".into()))?;
    let residual = dissection::residual_identity(&a_exact).map_err(dissection_error)?;
    let residual_out = Output::Record(vec![
        ("three_cells_area", Cell::text(residual.three_cells_area.to_string())),
        ("elamite_goal_area", Cell::text(residual.elamite_goal_area.to_string())),
        ("percent", Cell::text(residual.percent.to_string())),
        ("percent_decimal", Cell::fixed(residual.percent.to_f64(), 3)),
    ]);
    let piece_rows = report
        .placed
        .iter()
        .map(|p| {
            vec![
                Cell::text(p.id.clone()),
                Cell::text(match p.kind {
                    dissection::PieceKind::Isosceles => "isosceles",
                    dissection::PieceKind::Right => "right",
                }),
                f(p.area),
                f(region.clipped_area(&p.vertices)),
            ]
        })
        .collect();
    let warning_rows = report.warnings.iter().map(|w| vec![Cell::text(w.clone())]).collect();
    Ok(Output::Sections(vec![
        ("summary", summary),
        ("residual", residual_out),
        ("pieces", Output::Rows { columns: vec!["piece_id", "kind", "area", "inside_area"], rows: piece_rows }),
        ("warnings", Output::Rows { columns: vec!["warning"], rows: warning_rows }),
    ])
    .render(args.format.format))
}
