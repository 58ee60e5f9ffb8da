//! The degree sweep over the counterexample family: one [`Table1Row`] per degree.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use ratbez_core::maximizer::{DEFAULT_GRID_SIZE, DEFAULT_TOLERANCE};
use ratbez_core::{
    conjecture_bound, counterexample_family, elevation_bound, maximize_derivative_norm,
    DerivativeForm, NormOrder, Verdict,
};

use crate::error::{Error, Result};

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableConfig {
    pub elevation_steps: usize,
    pub grid_size: usize,
    pub tol: f64,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig { elevation_steps: 1000, grid_size: DEFAULT_GRID_SIZE, tol: DEFAULT_TOLERANCE }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub degree: usize,
    pub max_first_derivative: f64,
    pub argmax_t: f64,
    pub conjectured_bound: f64,
    pub elevation_bound: f64,
    pub elevation_steps: usize,
    /// Wall-clock time of building the derivative form and its elevation bound.
    pub runtime_seconds: f64,
    pub verdict: Verdict,
}

pub fn table1_row(n: usize, config: &TableConfig) -> Result<Table1Row> {
    let curve = counterexample_family(n)?;
    let maximum = maximize_derivative_norm(&curve, config.grid_size, config.tol)?;
    let conjectured = conjecture_bound(&curve, NormOrder::L2)?.value;

    let start = Instant::now();
    let form = DerivativeForm::new(&curve)?;
    let bound = elevation_bound(&form, config.elevation_steps, NormOrder::L2).value;
    let runtime_seconds = start.elapsed().as_secs_f64();

    let verdict = if maximum.max_value > conjectured { Verdict::Violated } else { Verdict::Holds };
    Ok(Table1Row {
        degree: n,
        max_first_derivative: maximum.max_value,
        argmax_t: maximum.argmax_t,
        conjectured_bound: conjectured,
        elevation_bound: bound,
        elevation_steps: config.elevation_steps,
        runtime_seconds,
        verdict,
    })
}

/// Computes one row per degree, spread over the available cores. Rows come
/// back in degree order; the first failing degree (in that order) aborts the
/// run.
pub fn run_table1(degrees: RangeInclusive<usize>, config: &TableConfig) -> Result<Vec<Table1Row>> {
    let (min, max) = (*degrees.start(), *degrees.end());
    if min < MIN_DEGREE || max > MAX_DEGREE || min > max {
        return Err(Error::DegreeRange { min, max });
    }
    let count = max - min + 1;
    let workers = std::thread::available_parallelism().map_or(1, usize::from).min(count);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<Table1Row>>>> =
        Mutex::new((0..count).map(|_| None).collect());

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= count {
                    break;
                }
                let row = table1_row(min + k, config);
                results.lock().expect("no worker panics while holding the lock")[k] = Some(row);
            });
        }
    });

    results
        .into_inner()
        .expect("workers have finished")
        .into_iter()
        .enumerate()
        .map(|(k, row)| {
            row.expect("every degree was claimed by a worker")
                .map_err(|e| Error::Row { degree: min + k, source: Box::new(e) })
        })
        .collect()
}

/// Degrees whose conjectured bound is violated.
pub fn violated_degrees(rows: &[Table1Row]) -> Vec<usize> {
    rows.iter().filter(|r| r.verdict == Verdict::Violated).map(|r| r.degree).collect()
}

/// `"0 violations"`, `"1 violation (n = 11)"`, `"10 violations (n = 11..20)"`,
/// or an explicit list when the degrees are not contiguous.
pub fn violation_summary(rows: &[Table1Row]) -> String {
    let degrees = violated_degrees(rows);
    let noun = if degrees.len() == 1 { "violation" } else { "violations" };
    match degrees.as_slice() {
        [] => "0 violations".to_string(),
        [only] => format!("1 violation (n = {only})"),
        [first, .., last] if last - first + 1 == degrees.len() => {
            format!("{} {noun} (n = {first}..{last})", degrees.len())
        }
        _ => {
            let list: Vec<String> = degrees.iter().map(usize::to_string).collect();
            format!("{} {noun} (n = {})", degrees.len(), list.join(", "))
        }
    }
}
