//! Grid search plus golden-section refinement for `sup ||r'(t)||` on `[0, 1]`.

use crate::curve::RationalBezierCurve;
use crate::derivative::DerivativeForm;
use crate::error::{Error, Result};
use crate::norm::l2;

pub const DEFAULT_GRID_SIZE: usize = 100_000;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Golden-section iterations are capped so that a tolerance below the
/// floating-point spacing of the bracket still terminates.
const MAX_GOLDEN_ITERATIONS: usize = 200;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaximizerResult {
    pub max_value: f64,
    pub argmax_t: f64,
    /// Number of grid intervals; the grid has `grid_size + 1` points.
    pub grid_size: usize,
    /// Whether golden-section refinement ran.
    pub refined: bool,
    /// Golden-section iterations.
    pub iterations: usize,
}

/// Maximizes `||r'(t)||_2`, evaluated through the degree-`2n` derivative form.
pub fn maximize_derivative_norm(
    curve: &RationalBezierCurve,
    grid_size: usize,
    tol: f64,
) -> Result<MaximizerResult> {
    let form = DerivativeForm::new(curve)?;
    maximize_form_norm(&form, grid_size, tol)
}

pub fn maximize_form_norm(
    form: &DerivativeForm,
    grid_size: usize,
    tol: f64,
) -> Result<MaximizerResult> {
    let net = form.homogeneous();
    let d = form.dim();
    maximize_on_unit_interval(
        |t| {
            let h = net.eval(t);
            l2(&h[..d]) / h[d]
        },
        grid_size,
        tol,
    )
}

/// Maximizes `f` over `[0, 1]`: best point of a uniform grid of
/// `grid_size + 1` samples, then golden section on the grid cells around it
/// until the bracket is narrower than `tol`.
///
/// The returned value is never below any sample taken, and the search is
/// deterministic.
pub fn maximize_on_unit_interval<F>(mut f: F, grid_size: usize, tol: f64) -> Result<MaximizerResult>
where
    F: FnMut(f64) -> f64,
{
    if grid_size < 3 {
        return Err(Error::InvalidGridSize(grid_size));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let spacing = 1.0 / grid_size as f64;
    let mut best_k = 0;
    let mut best_value = f(0.0);
    for k in 1..=grid_size {
        let v = f(k as f64 * spacing);
        if v > best_value {
            best_k = k;
            best_value = v;
        }
    }
    let best_t = best_k as f64 * spacing;
    let lo = (best_t - spacing).max(0.0);
    let hi = (best_t + spacing).min(1.0);
    if hi - lo < tol {
        return Ok(MaximizerResult {
            max_value: best_value,
            argmax_t: best_t,
            grid_size,
            refined: false,
            iterations: 0,
        });
    }

    let golden = golden_section_max(&mut f, lo, hi, tol);
    let (mut argmax_t, mut max_value) = (golden.argmax, golden.max);
    if best_value > max_value {
        argmax_t = best_t;
        max_value = best_value;
    }
    Ok(MaximizerResult {
        max_value,
        argmax_t,
        grid_size,
        refined: true,
        iterations: golden.iterations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenResult {
    pub argmax: f64,
    pub max: f64,
    pub iterations: usize,
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
///
/// Returns the best of the final bracket midpoint and the two interior
/// points. If every sample was equal (a plateau) the midpoint of the
/// starting bracket is returned.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> GoldenResult
where
    F: FnMut(f64) -> f64,
{
    let start_mid = 0.5 * (lo + hi);
    let mut seen_min = f64::INFINITY;
    let mut seen_max = f64::NEG_INFINITY;
    let mut f = |x: f64| {
        let v = f(x);
        seen_min = seen_min.min(v);
        seen_max = seen_max.max(v);
        v
    };
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while hi - lo >= tol && iterations < MAX_GOLDEN_ITERATIONS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        iterations += 1;
    }
    let mid = 0.5 * (lo + hi);
    let mut best = GoldenResult { argmax: mid, max: f(mid), iterations };
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v > best.max {
            best.argmax = x;
            best.max = v;
        }
    }
    if seen_min == seen_max {
        best.argmax = start_mid;
    }
    best
}
