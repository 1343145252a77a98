//! Command-line front end for the `ribbonfold` library.
//!
//! Every subcommand renders its complete output into memory before writing
//! anything, so a failing invocation leaves standard output (or `--out`)
//! untouched.

use std::ffi::OsString;
use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ribbonfold::{
    band_type, build_moebius_with, build_torus_with, build_twist_with, comparison_table, crease_pattern,
    default_table_qs, exact_spacing, from_document, optimal_theta, render_crease, render_diagram, report,
    ribbon_linking_number, sixty_degrees, table_csv, to_document, AccordionPolicy, BandType, FoldAngle,
    RibbonDiagram, RibbonError, RibbonlengthReport, SvgOptions, TwistParity, DEFAULT_LAYER_OFFSET,
};
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CONSTRAINT: u8 = 3;
pub const EXIT_NUMERICAL: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "ribboncli", version, about = "Folded ribbon knot constructions and ribbonlength analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a diagram and emit it as a document (or SVG).
    Build(Flags),
    /// Compare a diagram's measured ribbonlength with its closed form.
    Analyze(Flags),
    /// Find the fold angle minimizing the Möbius ribbonlength.
    Optimize(Flags),
    /// Tabulate torus-knot ribbonlength bounds against crossing number.
    Table(Flags),
    /// Emit the crease pattern of a diagram.
    Crease(Flags),
    /// Render a diagram as SVG.
    Render(Flags),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Moebius,
    Torus2q,
    TwistOdd,
    TwistEven,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Doc,
    Csv,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Fold angle in radians, or degrees with a "deg" suffix.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Half-wrap spacing; omitted means exact mode with `--k` folds (default 2).
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    d: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    /// Torus parameter; `table` takes a comma-separated list.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u32>,
    /// Escape-accordion fold count.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    tol: Option<f64>,
    /// Read the diagram from a document instead of building it.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "on")]
    labels: Toggle,
    #[arg(long, value_parser = parse_real, default_value_t = DEFAULT_LAYER_OFFSET)]
    layer_offset: f64,
}

/// Accepts radians (`1.047`) or degrees with a suffix (`60deg`).
pub fn parse_angle(text: &str) -> Result<f64, String> {
    let text = text.trim();
    let (number, degrees) = match text.strip_suffix("deg") {
        Some(rest) => (rest.trim_end(), true),
        None => (text, false),
    };
    let value = parse_real(number)?;
    Ok(if degrees { value * PI / 180.0 } else { value })
}

fn parse_real(text: &str) -> Result<f64, String> {
    let value: f64 = text.trim().parse().map_err(|_| format!("not a number: {text:?}"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("not a finite number: {text:?}"))
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Library(RibbonError),
}

impl From<RibbonError> for Failure {
    fn from(e: RibbonError) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
            Failure::Library(e) => match e {
                RibbonError::Constraint(_) => EXIT_CONSTRAINT,
                RibbonError::Numerical(_) => EXIT_NUMERICAL,
                RibbonError::Domain(_)
                | RibbonError::Unsupported(_)
                | RibbonError::Parse { .. }
                | RibbonError::Version { .. } => EXIT_USAGE,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m.clone(),
            Failure::Library(e) => e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (flags, result) = match &cli.command {
        Command::Build(f) => (f, build(f)),
        Command::Analyze(f) => (f, analyze(f)),
        Command::Optimize(f) => (f, optimize(f)),
        Command::Table(f) => (f, table(f)),
        Command::Crease(f) => (f, crease(f)),
        Command::Render(f) => (f, render(f)),
    };
    let outcome = result.and_then(|text| emit(flags, &text, out));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.exit_code()
        }
    }
}

fn emit(flags: &Flags, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match &flags.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Io(format!("cannot write output: {e}"))),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Library(RibbonError::Numerical(format!("encoding failed: {e}"))))?;
    text.push('\n');
    Ok(text)
}

fn fixed_theta(flags: &Flags) -> Result<(), Failure> {
    match flags.theta {
        Some(t) if (t - PI / 3.0).abs() > 1e-12 => Err(usage(format!(
            "the fold angle is fixed at pi/3 for torus and twist knots (got {t})"
        ))),
        _ => Ok(()),
    }
}

/// Spacing and accordion policy: exact mode when `--d` is absent.
fn spacing(flags: &Flags, theta: FoldAngle) -> Result<(f64, AccordionPolicy), Failure> {
    match flags.d {
        None => {
            let k = flags.k.unwrap_or(2);
            Ok((exact_spacing(theta, k)?, AccordionPolicy::Folds(k)))
        }
        Some(d) => Ok((d, flags.k.map_or(AccordionPolicy::Smallest, AccordionPolicy::Folds))),
    }
}

fn torus_q(flags: &Flags) -> Result<u32, Failure> {
    let from_n = flags.n.map(|n| 2 * u64::from(n) + 1);
    match (flags.q.as_slice(), from_n) {
        ([], None) => Err(usage("torus2q needs --q (odd, at least 3) or --n")),
        ([], Some(q)) => u32::try_from(q).map_err(|_| usage("--n is too large")),
        ([q], None) => Ok(*q),
        ([q], Some(from_n)) if u64::from(*q) == from_n => Ok(*q),
        ([q], Some(_)) => Err(usage(format!("--q {q} and --n disagree; q must equal 2n + 1"))),
        _ => Err(usage("build takes a single --q value")),
    }
}

fn build_from_flags(flags: &Flags) -> Result<RibbonDiagram, Failure> {
    let family = flags.family.ok_or_else(|| usage("--family is required (moebius, torus2q, twist-odd, twist-even)"))?;
    let diagram = match family {
        FamilyArg::Moebius => {
            if !flags.q.is_empty() {
                return Err(usage("--q applies only to torus2q"));
            }
            let theta = FoldAngle::new(flags.theta.unwrap_or(PI / 3.0))?;
            let (d, policy) = spacing(flags, theta)?;
            build_moebius_with(theta, d, flags.n.unwrap_or(0), policy)?
        }
        FamilyArg::Torus2q => {
            fixed_theta(flags)?;
            let q = torus_q(flags)?;
            let (d, policy) = spacing(flags, sixty_degrees())?;
            build_torus_with(q, d, policy)?
        }
        FamilyArg::TwistOdd | FamilyArg::TwistEven => {
            fixed_theta(flags)?;
            if !flags.q.is_empty() {
                return Err(usage("--q applies only to torus2q"));
            }
            let n = flags.n.ok_or_else(|| usage("twist knots need --n (at least 1)"))?;
            let parity = if family == FamilyArg::TwistOdd { TwistParity::Odd } else { TwistParity::Even };
            let (d, policy) = spacing(flags, sixty_degrees())?;
            build_twist_with(n, parity, d, policy)?
        }
    };
    Ok(diagram)
}

/// The diagram named by `--input`, or one built from the family flags.
fn diagram(flags: &Flags) -> Result<RibbonDiagram, Failure> {
    match &flags.input {
        Some(path) => {
            if flags.family.is_some() {
                return Err(usage("--input and --family are mutually exclusive"));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(from_document(&text)?.diagram)
        }
        None => build_from_flags(flags),
    }
}

fn svg_options(flags: &Flags) -> SvgOptions {
    SvgOptions { labels: flags.labels == Toggle::On, layer_offset: flags.layer_offset }
}

fn build(flags: &Flags) -> Result<String, Failure> {
    let diagram = diagram(flags)?;
    match flags.format.unwrap_or(Format::Doc) {
        Format::Doc => Ok(to_document(&diagram, None)?),
        Format::Svg => Ok(render_diagram(&diagram, &svg_options(flags))),
        Format::Csv => Err(usage("build emits doc or svg")),
    }
}

#[derive(Serialize)]
struct Analysis {
    report: RibbonlengthReport,
    ribbon_linking_number: i64,
    linking_sign_convention: &'static str,
    band_type: BandType,
    fold_vertices: usize,
}

fn analyze(flags: &Flags) -> Result<String, Failure> {
    if !matches!(flags.format, None | Some(Format::Doc)) {
        return Err(usage("analyze emits doc only"));
    }
    let diagram = diagram(flags)?;
    let analysis = Analysis {
        report: report(&diagram)?,
        ribbon_linking_number: ribbon_linking_number(&diagram)?,
        linking_sign_convention: "each half-wrap counts +1",
        band_type: band_type(&diagram)?,
        fold_vertices: diagram.fold_vertex_count(),
    };
    json(&analysis)
}

fn optimize(flags: &Flags) -> Result<String, Failure> {
    if !matches!(flags.format, None | Some(Format::Doc)) {
        return Err(usage("optimize emits doc only"));
    }
    json(&optimal_theta(flags.tol.unwrap_or(1e-9))?)
}

fn table(flags: &Flags) -> Result<String, Failure> {
    let qs = if flags.q.is_empty() { default_table_qs() } else { flags.q.clone() };
    let rows = comparison_table(&qs)?;
    match flags.format.unwrap_or(Format::Csv) {
        Format::Csv => Ok(table_csv(&rows)?),
        Format::Doc => json(&rows),
        Format::Svg => Err(usage("table emits csv or doc")),
    }
}

fn crease(flags: &Flags) -> Result<String, Failure> {
    let pattern = crease_pattern(&diagram(flags)?);
    match flags.format.unwrap_or(Format::Doc) {
        Format::Doc => json(&pattern),
        Format::Svg => Ok(render_crease(&pattern, &svg_options(flags))),
        Format::Csv => Err(usage("crease emits doc or svg")),
    }
}

fn render(flags: &Flags) -> Result<String, Failure> {
    if !matches!(flags.format, None | Some(Format::Svg)) {
        return Err(usage("render emits svg only"));
    }
    Ok(render_diagram(&diagram(flags)?, &svg_options(flags)))
}
