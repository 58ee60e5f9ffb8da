//! Standalone SVG line charts.
//!
//! Series are drawn inside a group whose transform maps data coordinates to
//! the plot area, so every `<polyline>` carries raw data values in its
//! `points` attribute and an optional horizontal reference line sits at its
//! data `y`. Labels, ticks and the legend are plain `<text>` elements.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use ratbez_core::norm::l2;
use ratbez_core::{DerivativeForm, RationalBezierCurve};

use crate::error::{Error, Result};
use crate::experiments::Table1Row;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    /// The curve `r(t)` itself.
    Curve,
    /// `||r'(t)||` against `t`.
    DerivativeNorm,
    /// Maximum derivative, conjectured bound and elevation bound against `n`.
    BoundComparison,
    /// Elevation-bound runtime against `n`.
    Runtime,
}

impl PlotKind {
    /// Whether this kind is drawn from a curve file (as opposed to a table CSV).
    pub fn needs_curve(self) -> bool {
        matches!(self, PlotKind::Curve | PlotKind::DerivativeNorm)
    }
}

impl FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "curve" => Ok(PlotKind::Curve),
            "derivative-norm" | "derivative_norm" => Ok(PlotKind::DerivativeNorm),
            "bound-comparison" | "bound_comparison" => Ok(PlotKind::BoundComparison),
            "runtime" => Ok(PlotKind::Runtime),
            other => Err(Error::Plot(format!("unknown plot kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub kind: PlotKind,
    pub samples: usize,
    pub output_path: PathBuf,
    pub overlay_bound: Option<f64>,
}

impl PlotSpec {
    pub fn new(
        kind: PlotKind,
        samples: usize,
        output_path: impl Into<PathBuf>,
        overlay_bound: Option<f64>,
    ) -> Result<Self> {
        let output_path = output_path.into();
        if samples < 2 {
            return Err(Error::Plot(format!("need at least 2 samples, got {samples}")));
        }
        if output_path.as_os_str().is_empty() {
            return Err(Error::Plot("empty output path".into()));
        }
        if let Some(y) = overlay_bound {
            if !y.is_finite() {
                return Err(Error::Plot(format!("overlay bound {y} is not finite")));
            }
        }
        Ok(PlotSpec { kind, samples, output_path, overlay_bound })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Overlay {
    pub label: String,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    pub overlay: Option<Overlay>,
}

fn uniform(samples: usize) -> impl Iterator<Item = f64> {
    let last = (samples - 1) as f64;
    (0..samples).map(move |k| k as f64 / last)
}

/// `r(t)` sampled uniformly. One-dimensional curves plot `(t, x(t))`,
/// otherwise the first two coordinates.
pub fn curve_chart(curve: &RationalBezierCurve, samples: usize) -> Result<Chart> {
    let mut points = Vec::with_capacity(samples);
    for t in uniform(samples) {
        let r = curve.eval_point(t)?;
        points.push(if r.len() == 1 { (t, r[0]) } else { (r[0], r[1]) });
    }
    let (x_label, y_label) = if curve.dim() == 1 { ("t", "x") } else { ("x", "y") };
    Ok(Chart {
        title: format!("Rational Bézier curve, degree {}", curve.degree()),
        x_label: x_label.into(),
        y_label: y_label.into(),
        series: vec![Series { label: "r(t)".into(), points }],
        overlay: None,
    })
}

pub fn derivative_norm_chart(
    curve: &RationalBezierCurve,
    samples: usize,
    overlay_bound: Option<f64>,
) -> Result<Chart> {
    let form = DerivativeForm::new(curve)?;
    let mut points = Vec::with_capacity(samples);
    for t in uniform(samples) {
        points.push((t, l2(&form.eval(t)?)));
    }
    Ok(Chart {
        title: format!("Derivative norm, degree {}", curve.degree()),
        x_label: "t".into(),
        y_label: "|r'(t)|".into(),
        series: vec![Series { label: "|r'(t)|".into(), points }],
        overlay: overlay_bound.map(|y| Overlay { label: format!("bound {y}"), y }),
    })
}

pub fn bound_comparison_chart(rows: &[Table1Row]) -> Chart {
    let column = |f: fn(&Table1Row) -> f64| -> Vec<(f64, f64)> {
        rows.iter().map(|r| (r.degree as f64, f(r))).collect()
    };
    Chart {
        title: "Maximum derivative and bounds".into(),
        x_label: "n".into(),
        y_label: "value".into(),
        series: vec![
            Series { label: "max derivative".into(), points: column(|r| r.max_first_derivative) },
            Series { label: "conjectured bound".into(), points: column(|r| r.conjectured_bound) },
            Series { label: "elevation bound".into(), points: column(|r| r.elevation_bound) },
        ],
        overlay: None,
    }
}

pub fn runtime_chart(rows: &[Table1Row]) -> Chart {
    Chart {
        title: "Elevation bound running time".into(),
        x_label: "n".into(),
        y_label: "seconds".into(),
        series: vec![Series {
            label: "runtime".into(),
            points: rows.iter().map(|r| (r.degree as f64, r.runtime_seconds)).collect(),
        }],
        overlay: None,
    }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 180.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let span = hi - lo;
    if span <= f64::EPSILON * hi.abs().max(1.0) {
        return (lo - 1.0, hi + 1.0);
    }
    (lo - 0.05 * span, hi + 0.05 * span)
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

pub fn render_svg(chart: &Chart) -> String {
    let (x0, x1) = padded_range(chart.series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let (y0, y1) = padded_range(
        chart
            .series
            .iter()
            .flat_map(|s| s.points.iter().map(|p| p.1))
            .chain(chart.overlay.as_ref().map(|o| o.y)),
    );
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = plot_w / (x1 - x0);
    let sy = plot_h / (y1 - y0);
    let px = |x: f64| LEFT + (x - x0) * sx;
    let py = |y: f64| TOP + plot_h - (y - y0) * sy;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        TOP - 15.0,
        escape(&chart.title)
    );
    let _ = writeln!(
        svg,
        r#"<rect class="frame" x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );
    for k in 0..=4 {
        let f = k as f64 / 4.0;
        let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
        let _ = writeln!(
            svg,
            r#"<text class="tick" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            px(xv),
            TOP + plot_h + 18.0,
            tick_label(xv)
        );
        let _ = writeln!(
            svg,
            r#"<text class="tick" x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            py(yv) + 4.0,
            tick_label(yv)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text class="axis-label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0,
        escape(&chart.x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text class="axis-label" x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        escape(&chart.y_label)
    );

    // Data group: inside it, coordinates are data values.
    let _ = writeln!(
        svg,
        r#"<g class="data" transform="translate({} {}) scale({} {})">"#,
        LEFT - x0 * sx,
        TOP + plot_h + y0 * sy,
        sx,
        -sy
    );
    for (k, series) in chart.series.iter().enumerate() {
        let points: Vec<String> = series.points.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="series" data-label="{}" fill="none" stroke="{}" stroke-width="1.5" vector-effect="non-scaling-stroke" points="{}"/>"#,
            escape(&series.label),
            COLORS[k % COLORS.len()],
            points.join(" ")
        );
    }
    if let Some(o) = &chart.overlay {
        let _ = writeln!(
            svg,
            r#"<line class="overlay" data-label="{}" x1="{x0}" y1="{}" x2="{x1}" y2="{}" stroke="black" stroke-dasharray="6 4" vector-effect="non-scaling-stroke"/>"#,
            escape(&o.label),
            o.y,
            o.y
        );
    }
    let _ = writeln!(svg, "</g>");

    let legend_x = WIDTH - RIGHT + 15.0;
    let mut entries: Vec<(String, &str)> = chart
        .series
        .iter()
        .enumerate()
        .map(|(k, s)| (s.label.clone(), COLORS[k % COLORS.len()]))
        .collect();
    if let Some(o) = &chart.overlay {
        entries.push((o.label.clone(), "black"));
    }
    for (k, (label, color)) in entries.iter().enumerate() {
        let y = TOP + 15.0 + 20.0 * k as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{legend_x}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2"/>"#,
            y - 4.0,
            legend_x + 20.0,
            y - 4.0
        );
        let _ = writeln!(
            svg,
            r#"<text class="legend" x="{}" y="{y}">{}</text>"#,
            legend_x + 26.0,
            escape(label)
        );
    }
    svg.push_str("</svg>\n");
    svg
}
