use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "susa", version, about = "Sexagesimal arithmetic and the geometry of the regular heptagon")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sexagesimal calculator.
    #[command(subcommand)]
    Sexa(SexaCommand),
    /// Area of a regular polygon by every applicable rule.
    Areas(AreasArgs),
    /// Relative errors of the heptagon area rules.
    Errors(ErrorsArgs),
    /// Worked derivations of the heptagon coefficients.
    #[command(subcommand)]
    Derive(DeriveCommand),
    /// Catalogue of ancient approximations.
    Constants(FormatArg),
    /// Run a compass and straightedge construction.
    Construct(ConstructArgs),
    /// Check a cut-and-paste placement against the a/12 grid.
    Dissect(DissectArgs),
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum SexaCommand {
    /// Evaluate an expression such as `7 * 0;7,55` exactly.
    Eval {
        /// Expression over sexagesimal literals with + - * / and parentheses.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Fractional places shown before truncating.
        #[arg(long, default_value_t = 6)]
        places: usize,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
pub struct AreasArgs {
    /// Number of sides.
    #[arg(long, default_value_t = 7)]
    pub n: u32,
    /// Side length, decimal (`0.5`, `1/2`) or sexagesimal (`0;30`).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub side: String,
    /// Fractional sexagesimal places for inexact values.
    #[arg(long, default_value_t = 6)]
    pub places: usize,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ErrorsArgs {
    /// Number of sides; only the heptagon has recorded rules.
    #[arg(long, default_value_t = 7)]
    pub n: u32,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum DeriveCommand {
    /// From the circumradius, as on the tablet.
    Smt2 {
        /// Circumradius.
        #[arg(long, default_value = "0;35", allow_hyphen_values = true)]
        r: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Heron's 43/12 rule.
    Heron {
        /// Side length.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Four times the square of the side, less a twelfth.
    Elamite {
        /// Side length.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Triangle,
    Square,
    Pentagon,
    Hexagon,
    Heptagon,
    Ngon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    March,
    Ptolemy,
    Heron,
    Durer,
    Elamite,
    Double,
    Compose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Closure {
    /// Join the last mark to the start.
    Start,
    /// Use the midpoint of the leftover arc instead of the start.
    Midpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeronSideArg {
    /// The hexagon's apothem, (sqrt 3 / 2) r.
    Apothem,
    /// Heron's value 7/8 r.
    SevenEighths,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub shape: Shape,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    /// Radius of the given circle, decimal or sexagesimal.
    #[arg(long, default_value = "1")]
    pub radius: String,
    /// How the Elamite march is closed.
    #[arg(long, value_enum, default_value_t = Closure::Start)]
    pub closure: Closure,
    /// Side used by Heron's heptagon.
    #[arg(long, value_enum, default_value_t = HeronSideArg::Apothem)]
    pub heron_side: HeronSideArg,
    /// Sides for `--shape ngon`: the result for `exact`, the base polygon
    /// for `double`, the larger factor for `compose`.
    #[arg(long)]
    pub n: Option<u32>,
    /// Smaller factor for `--method compose`.
    #[arg(long)]
    pub m: Option<u32>,
    /// Angle of the first vertex for exact polygons, in degrees.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phase: f64,
    /// Write an SVG drawing here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Add side lengths, closure gap and regularity measures.
    #[arg(long)]
    pub report: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LayoutArg {
    Square,
    Rectangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitArg {
    Two,
    Four,
}

#[derive(Debug, Args)]
pub struct DissectArgs {
    /// Goal region; taken from the placement file when omitted.
    #[arg(long, value_enum)]
    pub layout: Option<LayoutArg>,
    /// Placement file (JSON). Defaults to the shipped file for the layout
    /// and split.
    #[arg(long)]
    pub placements: Option<PathBuf>,
    /// How many central triangles are halved.
    #[arg(long, value_enum)]
    pub split: Option<SplitArg>,
    /// Cells per side length.
    #[arg(long, default_value_t = 12)]
    pub grid: u32,
    /// Covered fraction for a complete cell.
    #[arg(long, default_value_t = 0.99)]
    pub complete: f64,
    /// Covered fraction for an almost complete cell.
    #[arg(long, default_value_t = 0.80)]
    pub almost: f64,
    /// Write an SVG drawing here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Add the per-piece table, warnings and the residual identity.
    #[arg(long)]
    pub report: bool,
    #[command(flatten)]
    pub format: FormatArg,
}
