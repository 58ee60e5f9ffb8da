//! `ratbez` command line.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 for I/O failures.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ratbez_core::maximizer::{DEFAULT_GRID_SIZE, DEFAULT_TOLERANCE};
use ratbez_core::norm::l2;
use ratbez_core::{
    conjecture_bound, counterexample_family, elevation_bound, eval_derivative_sederberg,
    finite_difference, maximize_derivative_norm, BoundMethod, BoundReport, DerivativeForm,
    NormOrder,
};

use crate::curve_file::{read_curve, write_curve};
use crate::error::{Error, Result};
use crate::experiments::{run_table1, violation_summary, TableConfig};
use crate::format;
use crate::plot::{self, PlotKind, PlotSpec};
use crate::table_csv;

#[derive(Debug, Parser)]
#[command(name = "ratbez", version, about = "Rational Bézier derivative bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Conjecture,
    Elevation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DerivativeRoute {
    /// Degree-2n rational form.
    Explicit,
    /// Numerator over squared weight.
    Sederberg,
    /// Central finite difference, h = 1e-6.
    Fd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "kebab-case")]
pub enum KindArg {
    Curve,
    DerivativeNorm,
    BoundComparison,
    Runtime,
}

impl From<KindArg> for PlotKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Curve => PlotKind::Curve,
            KindArg::DerivativeNorm => PlotKind::DerivativeNorm,
            KindArg::BoundComparison => PlotKind::BoundComparison,
            KindArg::Runtime => PlotKind::Runtime,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print r(t).
    Eval {
        /// Curve JSON file, or `-` for standard input.
        curve: PathBuf,
        #[arg(allow_negative_numbers = true)]
        t: f64,
    },
    /// Print r'(t).
    Derivative {
        curve: PathBuf,
        #[arg(allow_negative_numbers = true)]
        t: f64,
        #[arg(long, value_enum, default_value = "explicit")]
        route: DerivativeRoute,
    },
    /// Print an upper bound on |r'(t)| over [0, 1].
    Bound {
        curve: PathBuf,
        #[arg(long, value_enum, default_value = "elevation")]
        method: Method,
        /// Number of degree elevations.
        #[arg(long = "e", default_value_t = 1000)]
        e: usize,
        /// Vector norm: 1, 2 or inf.
        #[arg(long = "p-norm", default_value = "2")]
        p_norm: NormOrder,
    },
    /// Locate max |r'(t)| and its parameter.
    Maximize {
        curve: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Sweep the counterexample family and write the results table as CSV.
    Table1 {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long = "e", default_value_t = 1000)]
        e: usize,
        #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// CSV output path, or `-` for standard output.
        #[arg(long)]
        out: PathBuf,
    },
    /// Write an SVG chart from a curve file or a table CSV.
    Plot {
        /// Curve JSON for `curve`/`derivative-norm`, table CSV otherwise.
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
        /// Horizontal reference line (derivative-norm plots).
        #[arg(long, allow_negative_numbers = true)]
        overlay_bound: Option<f64>,
    },
    /// Write a member of the counterexample family as curve JSON.
    Family {
        n: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::io("<stdout>", e))
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Eval { curve, t } => {
            let curve = read_curve(&curve)?;
            emit(out, &format::vector(&curve.eval_point(t)?))
        }
        Command::Derivative { curve, t, route } => {
            let curve = read_curve(&curve)?;
            let d = match route {
                DerivativeRoute::Explicit => DerivativeForm::new(&curve)?.eval(t)?,
                DerivativeRoute::Sederberg => eval_derivative_sederberg(&curve, t)?,
                DerivativeRoute::Fd => finite_difference(&curve, t, 1e-6)?,
            };
            emit(
                out,
                &format!("{}  |r'| = {}", format::vector(&d), format::significant(l2(&d), 12)),
            )
        }
        Command::Bound { curve, method, e, p_norm } => {
            let curve = read_curve(&curve)?;
            let report = match method {
                Method::Conjecture => conjecture_bound(&curve, p_norm)?,
                Method::Elevation => elevation_bound(&DerivativeForm::new(&curve)?, e, p_norm),
            };
            emit(out, &describe_bound(&report))
        }
        Command::Maximize { curve, grid, tol } => {
            let curve = read_curve(&curve)?;
            let r = maximize_derivative_norm(&curve, grid, tol)?;
            emit(out, &format!("{:.6} @ t={:.6}", r.max_value, r.argmax_t))
        }
        Command::Table1 { n_min, n_max, e, grid, tol, out: path } => {
            let config = TableConfig { elevation_steps: e, grid_size: grid, tol };
            let rows = run_table1(n_min..=n_max, &config)?;
            if path == Path::new("-") {
                table_csv::write_table(&rows, &mut *out)?;
            } else {
                let file = File::create(&path).map_err(|err| Error::io(&path, err))?;
                let mut w = BufWriter::new(file);
                table_csv::write_table(&rows, &mut w)?;
                w.flush().map_err(|err| Error::io(&path, err))?;
            }
            emit(out, &violation_summary(&rows))
        }
        Command::Plot { input, kind, samples, out: path, overlay_bound } => {
            let spec = PlotSpec::new(kind.into(), samples, path, overlay_bound)?;
            let svg = render_plot(&input, &spec)?;
            std::fs::write(&spec.output_path, svg).map_err(|e| Error::io(&spec.output_path, e))?;
            emit(out, &format!("wrote {}", spec.output_path.display()))
        }
        Command::Family { n, out: path } => write_curve(&path, &counterexample_family(n)?),
    }
}

fn describe_bound(report: &BoundReport) -> String {
    let head =
        format!("method={} value={:.6} p={}", report.method_name(), report.value, report.norm);
    match report.method {
        BoundMethod::Conjecture { weight_ratio } => {
            format!("{head} weight_ratio={}", format::significant(weight_ratio, 12))
        }
        BoundMethod::Elevation { steps, argmax_index } => {
            format!("{head} e={steps} argmax_index={argmax_index}")
        }
    }
}

pub fn render_plot(input: &Path, spec: &PlotSpec) -> Result<String> {
    let chart = if spec.kind.needs_curve() {
        let curve = read_curve(input).map_err(|e| {
            if e.exit_code() == 3 {
                e
            } else {
                kind_mismatch(spec.kind, e)
            }
        })?;
        match spec.kind {
            PlotKind::Curve => plot::curve_chart(&curve, spec.samples)?,
            _ => plot::derivative_norm_chart(&curve, spec.samples, spec.overlay_bound)?,
        }
    } else {
        let file = File::open(input).map_err(|e| Error::io(input, e))?;
        let rows = table_csv::read_table(file).map_err(|e| kind_mismatch(spec.kind, e))?;
        match spec.kind {
            PlotKind::BoundComparison => plot::bound_comparison_chart(&rows),
            _ => plot::runtime_chart(&rows),
        }
    };
    Ok(plot::render_svg(&chart))
}

fn kind_mismatch(kind: PlotKind, cause: Error) -> Error {
    let wanted = if kind.needs_curve() { "a curve JSON file" } else { "a table CSV file" };
    Error::Plot(format!("{kind:?} plots need {wanted}: {cause}"))
}
