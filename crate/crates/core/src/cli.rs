//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on invalid input or an unmet precondition,
//! 2 when a recomputed value disagrees with its reference.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{self, GluingReport, SignedMatching};
use crate::counting::{self, CountBig, GenusCounts, KNOWN_COUNTS};
use crate::diagram::ChordDiagram;
use crate::error::Error;
use crate::oracle::{self, AxisType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Column labels, in the order of [`KNOWN_COUNTS`].
pub const COLUMN_NAMES: [&str; 4] = ["d_star", "d_type1", "d_type2", "d_all"];

#[derive(Debug, Parser)]
#[command(
    name = "maxchord",
    version,
    about = "Count and enumerate maximal chord diagrams"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Lift the desk-scale size limits of brute-force commands.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Dstar,
    D1,
    D2,
    Dcircle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    Type1,
    Type2,
}

impl From<AxisArg> for AxisType {
    fn from(a: AxisArg) -> Self {
        match a {
            AxisArg::Type1 => AxisType::TypeOne,
            AxisArg::Type2 => AxisType::TypeTwo,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the four counts for one genus.
    Count {
        /// Genus of the diagrams (at least 1).
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
    },
    /// Recompute the published table and report any difference.
    VerifyTable {
        /// Check rows 1..=max-genus; rows past the table are checked for integrality.
        #[arg(long, allow_negative_numbers = true)]
        max_genus: i64,
    },
    /// Compare brute-force counts with the closed forms.
    Oracle {
        /// Genus to check by brute force.
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        /// Which count to check.
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Stream diagrams in enumeration order, one mate sequence per line.
    Enumerate {
        /// Number of chords (the circle carries twice as many points).
        #[arg(long)]
        chords: usize,
        /// Keep only diagrams with a single face walk.
        #[arg(long)]
        maximal: bool,
        /// Keep only diagrams of this genus.
        #[arg(long)]
        genus: Option<usize>,
        /// Keep only diagrams fixed by the reflection through point 0.
        #[arg(long)]
        type1: bool,
        /// Keep only diagrams fixed by the reflection through arc (2n-1, 0).
        #[arg(long)]
        type2: bool,
        /// Stop after this many matching diagrams.
        #[arg(long)]
        limit: Option<usize>,
        /// Print only the number of matching diagrams.
        #[arg(long)]
        count_only: bool,
    },
    /// Fold a diagram onto its quotient map, or unfold a signed matching.
    #[command(group(ArgGroup::new("direction").required(true).args(["fold", "unfold"])))]
    Bijection {
        /// Input is a diagram; print its signed matching.
        #[arg(long)]
        fold: bool,
        /// Input is a signed matching `g; u-v:t ...`; print its diagram.
        #[arg(long)]
        unfold: bool,
        input: String,
    },
    /// Draw a diagram as SVG.
    Render {
        /// Diagram as a mate sequence or a pair list such as `0-2 1-3`.
        diagram: String,
        /// Path of the SVG file to write.
        #[arg(long, short)]
        output: PathBuf,
        /// Draw the given reflection axis.
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
    },
}

/// Exit code plus everything written to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
    pub diagnostics: String,
}

/// Runs the CLI with captured output.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let exit_code = run_with(args, &mut out, &mut err);
    CommandResult {
        exit_code,
        payload: String::from_utf8_lossy(&out).into_owned(),
        diagnostics: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Runs the CLI against arbitrary writers and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Why a command stopped before producing its result.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

pub type CmdResult = Result<i32, Failure>;

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Count { genus } => cmd_count(*genus, format, out),
        Command::VerifyTable { max_genus } => {
            cmd_verify_table(*max_genus, &KNOWN_COUNTS, format, out)
        }
        Command::Oracle { genus, which } => cmd_oracle(*genus, *which, cli.force, format, out),
        Command::Enumerate {
            chords,
            maximal,
            genus,
            type1,
            type2,
            limit,
            count_only,
        } => {
            let filters = Filters {
                maximal: *maximal,
                genus: *genus,
                type1: *type1,
                type2: *type2,
            };
            cmd_enumerate(
                *chords,
                filters,
                *limit,
                *count_only,
                cli.force,
                format,
                out,
            )
        }
        Command::Bijection { fold, input, .. } => cmd_bijection(input, *fold, format, out),
        Command::Render {
            diagram,
            output,
            axis,
        } => cmd_render(diagram, output, axis.map(AxisType::from), format, out),
    }
}

fn genus_arg(genus: i64) -> Result<u32, Failure> {
    if genus < 1 {
        return Err(Failure::Invalid(format!(
            "genus must be at least 1, got {genus}"
        )));
    }
    u32::try_from(genus).map_err(|_| Failure::Invalid(format!("genus {genus} is too large")))
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct CountRow {
    g: u32,
    d_star: String,
    d_type1: String,
    d_type2: String,
    d_all: String,
}

impl From<&GenusCounts> for CountRow {
    fn from(c: &GenusCounts) -> Self {
        Self {
            g: c.g,
            d_star: c.d_star.to_string(),
            d_type1: c.d_vertical.to_string(),
            d_type2: c.d_parallel.to_string(),
            d_all: c.d_circle.to_string(),
        }
    }
}

fn plain_row(c: &GenusCounts) -> String {
    let mut line = format!("g={}", c.g);
    for (name, value) in COLUMN_NAMES.iter().zip(c.columns()) {
        let _ = write!(line, " {name}={value}");
    }
    line
}

pub fn cmd_count(genus: i64, format: Format, out: &mut dyn Write) -> CmdResult {
    let g = genus_arg(genus)?;
    let counts = GenusCounts::compute(g)?;
    match format {
        Format::Plain => writeln!(out, "{}", plain_row(&counts))?,
        Format::Json => write_json(out, &CountRow::from(&counts))?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Mismatch {
    g: u32,
    column: &'static str,
    computed: String,
    expected: String,
}

#[derive(Serialize)]
struct VerifyReport {
    max_genus: u32,
    compared: usize,
    consistency_checked: u32,
    mismatches: Vec<Mismatch>,
    errors: Vec<String>,
}

/// Recomputes `g = 1..=max_genus` and compares against `reference` where it
/// has a row; beyond it only the exact divisions are checked.
pub fn cmd_verify_table(
    max_genus: i64,
    reference: &[[&str; 4]],
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let max = genus_arg(max_genus)?;
    let mut report = VerifyReport {
        max_genus: max,
        compared: 0,
        consistency_checked: 0,
        mismatches: Vec::new(),
        errors: Vec::new(),
    };
    let mut lines = Vec::new();
    for g in 1..=max {
        let counts = match GenusCounts::compute(g) {
            Ok(c) => c,
            Err(e) => {
                report.errors.push(format!("g={g}: {e}"));
                lines.push(format!("g={g} ERROR {e}"));
                continue;
            }
        };
        let Some(row) = reference.get(g as usize - 1) else {
            report.consistency_checked += 1;
            lines.push(format!("{} consistent", plain_row(&counts)));
            continue;
        };
        let mut row_ok = true;
        for ((name, value), expected) in COLUMN_NAMES.iter().zip(counts.columns()).zip(row) {
            report.compared += 1;
            if value.to_string() != *expected {
                row_ok = false;
                report.mismatches.push(Mismatch {
                    g,
                    column: name,
                    computed: value.to_string(),
                    expected: expected.to_string(),
                });
            }
        }
        lines.push(format!(
            "{} {}",
            plain_row(&counts),
            if row_ok { "ok" } else { "MISMATCH" }
        ));
    }
    let failed = !report.mismatches.is_empty() || !report.errors.is_empty();
    match format {
        Format::Plain => {
            for line in &lines {
                writeln!(out, "{line}")?;
            }
            for m in &report.mismatches {
                writeln!(
                    out,
                    "mismatch at g={} {}: computed {}, expected {}",
                    m.g, m.column, m.computed, m.expected
                )?;
            }
            let matched = report.compared - report.mismatches.len();
            writeln!(
                out,
                "{matched} of {} values match{}",
                report.compared,
                if report.consistency_checked > 0 {
                    format!(
                        ", {} rows checked for integrality",
                        report.consistency_checked
                    )
                } else {
                    String::new()
                }
            )?;
        }
        Format::Json => write_json(out, &report)?,
    }
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

#[derive(Serialize)]
struct OracleLine {
    name: &'static str,
    oracle: String,
    formula: String,
    agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical_classes: Option<String>,
}

pub fn cmd_oracle(
    genus: i64,
    which: Which,
    force: bool,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let g = genus_arg(genus)?;
    let gu = g as usize;
    let wants = |w: Which| which == w || which == Which::All;

    // Check every guard before running anything.
    if wants(Which::Dstar) {
        check_guard(2 * gu, oracle::MAX_FULL_CHORDS, "chords", force)?;
    }
    if wants(Which::D1) || wants(Which::D2) {
        check_guard(gu, oracle::MAX_SYMMETRIC_GENUS, "genus", force)?;
    }
    if wants(Which::Dcircle) {
        check_guard(gu, oracle::MAX_DIHEDRAL_GENUS, "genus", force)?;
    }

    let mut lines = Vec::new();
    let line = |name, oracle: CountBig, formula: CountBig| OracleLine {
        name,
        agree: oracle == formula,
        oracle: oracle.to_string(),
        formula: formula.to_string(),
        canonical_classes: None,
    };
    if wants(Which::Dstar) {
        lines.push(line(
            "d_star",
            oracle::d_star_oracle(gu, force)?,
            counting::d_star(g)?,
        ));
    }
    if wants(Which::D1) {
        lines.push(line(
            "d_type1",
            oracle::reflection_fixed_oracle(gu, AxisType::TypeOne, force)?,
            counting::d_vertical(g)?,
        ));
    }
    if wants(Which::D2) {
        lines.push(line(
            "d_type2",
            oracle::reflection_fixed_oracle(gu, AxisType::TypeTwo, force)?,
            counting::d_parallel(g)?,
        ));
    }
    if wants(Which::Dcircle) {
        match oracle::d_circle_oracle(gu, force) {
            Ok(count) => {
                let mut l = line("d_all", count.burnside, counting::d_circle(g)?);
                l.canonical_classes = Some(count.canonical_classes.to_string());
                lines.push(l);
            }
            Err(Error::InvariantViolation(msg)) => {
                writeln!(out, "d_all: oracle methods disagree: {msg}")?;
                return Ok(EXIT_MISMATCH);
            }
            Err(e) => return Err(e.into()),
        }
    }

    let all_agree = lines.iter().all(|l| l.agree);
    match format {
        Format::Plain => {
            for l in &lines {
                let rel = if l.agree { "=" } else { "!=" };
                write!(
                    out,
                    "g={g} {}: oracle {} {rel} formula {}",
                    l.name, l.oracle, l.formula
                )?;
                if let Some(c) = &l.canonical_classes {
                    write!(out, " (canonical forms {c})")?;
                }
                writeln!(out, "{}", if l.agree { "" } else { " MISMATCH" })?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                g: u32,
                results: &'a [OracleLine],
                agree: bool,
            }
            write_json(
                out,
                &Doc {
                    g,
                    results: &lines,
                    agree: all_agree,
                },
            )?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn check_guard(value: usize, limit: usize, what: &'static str, force: bool) -> Result<(), Failure> {
    if value > limit && !force {
        return Err(Error::GuardExceeded { what, value, limit }.into());
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Filters {
    pub maximal: bool,
    pub genus: Option<usize>,
    pub type1: bool,
    pub type2: bool,
}

impl Filters {
    fn validate(&self, chords: usize) -> Result<(), Failure> {
        if let Some(g) = self.genus {
            if 2 * g > chords {
                return Err(Failure::Invalid(format!(
                    "genus {g} is impossible with {chords} chords (at most {})",
                    chords / 2
                )));
            }
            if self.maximal && 2 * g != chords {
                return Err(Failure::Invalid(format!(
                    "--maximal with {chords} chords forces genus {}, not {g}",
                    chords as f64 / 2.0
                )));
            }
        }
        Ok(())
    }

    fn accepts(&self, d: &ChordDiagram) -> bool {
        let points = d.points();
        (!self.maximal || d.is_maximal())
            && self.genus.is_none_or(|g| d.genus() == g)
            && (!self.type1
                || d.is_fixed_by(&AxisType::TypeOne.canonical_axis(points))
                    .unwrap_or(false))
            && (!self.type2
                || d.is_fixed_by(&AxisType::TypeTwo.canonical_axis(points))
                    .unwrap_or(false))
    }
}

pub fn cmd_enumerate(
    chords: usize,
    filters: Filters,
    limit: Option<usize>,
    count_only: bool,
    force: bool,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    if chords == 0 {
        return Err(Failure::Invalid("--chords must be at least 1".into()));
    }
    filters.validate(chords)?;
    let diagrams = oracle::enumerate_diagrams(chords, force)?
        .filter(|d| filters.accepts(d))
        .take(limit.unwrap_or(usize::MAX));
    if count_only {
        let count = diagrams.count();
        match format {
            Format::Plain => writeln!(out, "{count}")?,
            Format::Json => {
                #[derive(Serialize)]
                struct Doc {
                    chords: usize,
                    count: String,
                }
                write_json(
                    out,
                    &Doc {
                        chords,
                        count: count.to_string(),
                    },
                )?
            }
        }
    } else {
        let mut out = io::BufWriter::new(out);
        for d in diagrams {
            match format {
                Format::Plain => writeln!(out, "{d}")?,
                Format::Json => write_json(&mut out, &d.mate())?,
            }
        }
        out.flush()?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BijectionDoc {
    diagram: String,
    matching: String,
    vertex_count: usize,
    face_count: usize,
    orientable: bool,
    euler_genus: usize,
}

pub fn cmd_bijection(input: &str, fold: bool, format: Format, out: &mut dyn Write) -> CmdResult {
    let (diagram, matching) = if fold {
        let d: ChordDiagram = input.parse()?;
        let sm = bijection::to_quotient(&d)?;
        (d, sm)
    } else {
        let sm: SignedMatching = input.parse()?;
        let d = bijection::from_quotient(&sm)?;
        (d, sm)
    };
    let report: GluingReport = matching.glue();
    match format {
        Format::Plain => {
            if fold {
                writeln!(out, "{matching}")?;
            } else {
                writeln!(out, "{diagram}")?;
            }
            writeln!(out, "{report}")?;
        }
        Format::Json => write_json(
            out,
            &BijectionDoc {
                diagram: diagram.to_string(),
                matching: matching.to_string(),
                vertex_count: report.vertex_count,
                face_count: report.face_count,
                orientable: report.orientable,
                euler_genus: report.euler_genus,
            },
        )?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_render(
    diagram: &str,
    output: &PathBuf,
    axis: Option<AxisType>,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let d: ChordDiagram = diagram.parse()?;
    let svg = render_svg(&d, axis);
    std::fs::write(output, svg)
        .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", output.display())))?;
    match format {
        Format::Plain => writeln!(out, "wrote {}", output.display())?,
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                path: String,
                points: usize,
                chords: usize,
            }
            write_json(
                out,
                &Doc {
                    path: output.display().to_string(),
                    points: d.points(),
                    chords: d.n(),
                },
            )?
        }
    }
    Ok(EXIT_OK)
}

const SIZE: f64 = 400.0;
const RADIUS: f64 = 150.0;

fn on_circle(angle: f64, radius: f64) -> (f64, f64) {
    (
        SIZE / 2.0 + radius * angle.cos(),
        SIZE / 2.0 + radius * angle.sin(),
    )
}

/// Point 0 sits at the top; labels run clockwise from 1.
pub fn render_svg(d: &ChordDiagram, axis: Option<AxisType>) -> String {
    let points = d.points();
    let angle = |i: f64| -PI / 2.0 + 2.0 * PI * i / points.max(1) as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        r#"<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        c = SIZE / 2.0
    );
    if let (Some(axis), true) = (axis, points > 0) {
        let start = match axis {
            AxisType::TypeOne => angle(0.0),
            AxisType::TypeTwo => angle(-0.5),
        };
        let (x1, y1) = on_circle(start, RADIUS * 1.12);
        let (x2, y2) = on_circle(start + PI, RADIUS * 1.12);
        let _ = writeln!(
            svg,
            r##"<line class="axis" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#999999" stroke-dasharray="6 4"/>"##
        );
    }
    for (a, b) in d.chords() {
        let (x1, y1) = on_circle(angle(a as f64), RADIUS);
        let (x2, y2) = on_circle(angle(b as f64), RADIUS);
        let _ = writeln!(
            svg,
            r##"<line class="chord" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#1f4e99" stroke-width="1.5"/>"##
        );
    }
    for i in 0..points {
        let (x, y) = on_circle(angle(i as f64), RADIUS);
        let (lx, ly) = on_circle(angle(i as f64), RADIUS + 18.0);
        let _ = writeln!(
            svg,
            r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-size="12" text-anchor="middle" dominant-baseline="central">{}</text>"#,
            i + 1
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        run(std::iter::once("maxchord").chain(args.iter().copied()))
    }

    #[test]
    fn count_plain_and_json() {
        let r = run_args(&["count", "--genus", "4"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(
            r.payload,
            "g=4 d_star=14118 d_type1=287 d_type2=509 d_all=7258\n"
        );
        let r = run_args(&["count", "--genus", "1", "--format", "json"]);
        assert_eq!(
            r.payload,
            "{\"g\":1,\"d_star\":\"1\",\"d_type1\":\"1\",\"d_type2\":\"1\",\"d_all\":\"1\"}\n"
        );
        assert_eq!(run_args(&["count", "--genus", "0"]).exit_code, 1);
        assert_eq!(run_args(&["count", "--genus", "-3"]).exit_code, 1);
    }

    #[test]
    fn verify_table_detects_a_perturbed_cell() {
        let mut table = KNOWN_COUNTS;
        table[2][3] = "83";
        let mut out = Vec::new();
        let code = cmd_verify_table(4, &table, Format::Plain, &mut out).unwrap();
        assert_eq!(code, EXIT_MISMATCH);
        let text = String::from_utf8(out).unwrap();
        assert!(
            text.contains("mismatch at g=3 d_all: computed 82, expected 83"),
            "{text}"
        );
        assert!(text.contains("15 of 16 values match"));
    }

    #[test]
    fn parse_errors_exit_with_one() {
        assert_eq!(run_args(&["count"]).exit_code, 1);
        assert_eq!(run_args(&["frobnicate"]).exit_code, 1);
        assert_eq!(run_args(&["bijection", "1; 0-1:1"]).exit_code, 1);
        assert_eq!(run_args(&["--help"]).exit_code, 0);
    }

    #[test]
    fn svg_structure() {
        let d: ChordDiagram = "2 3 0 1".parse().unwrap();
        let svg = render_svg(&d, Some(AxisType::TypeTwo));
        assert_eq!(svg.matches(r#"class="point""#).count(), 4);
        assert_eq!(svg.matches(r#"class="chord""#).count(), 2);
        assert_eq!(svg.matches(r#"class="axis""#).count(), 1);
        assert!(svg.contains(">4</text>"));
        assert!(!svg.contains(">0</text>"));
        assert!(!render_svg(&d, None).contains("axis"));
    }
}
