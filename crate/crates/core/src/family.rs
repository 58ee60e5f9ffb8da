//! The counterexample family and conjecture verdicts.
//!
//! Degree `n` curves with weights `2^-i` for `i < n`, last weight `2^-(n-2)`,
//! and control points `(i, 0)`. The conjectured bound fails from `n = 11` on.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bounds::conjecture_bound;
use crate::curve::RationalBezierCurve;
use crate::error::{Error, Result};
use crate::maximizer::{maximize_derivative_norm, MaximizerResult};
use crate::norm::NormOrder;

pub fn counterexample_family(n: usize) -> Result<RationalBezierCurve> {
    if n < 2 {
        return Err(Error::FamilyDegree(n));
    }
    let mut weights: Vec<f64> = (0..n).map(|i| libm::ldexp(1.0, -(i as i32))).collect();
    weights.push(libm::ldexp(1.0, -((n - 2) as i32)));
    let points: Vec<[f64; 2]> = (0..=n).map(|i| [i as f64, 0.0]).collect();
    RationalBezierCurve::new(&points, weights)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseVerdictError;

impl fmt::Display for ParseVerdictError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("verdict must be `holds` or `violated`")
    }
}

impl core::error::Error for ParseVerdictError {}

impl FromStr for Verdict {
    type Err = ParseVerdictError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "holds" => Ok(Verdict::Holds),
            "violated" => Ok(Verdict::Violated),
            _ => Err(ParseVerdictError),
        }
    }
}

/// Outcome of checking the conjectured bound against the located maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureVerdict {
    pub verdict: Verdict,
    /// `conjectured_bound - maximum.max_value`; negative when violated.
    pub margin: f64,
    pub conjectured_bound: f64,
    pub maximum: MaximizerResult,
}

pub fn conjecture_verdict(
    curve: &RationalBezierCurve,
    grid_size: usize,
    tol: f64,
) -> Result<ConjectureVerdict> {
    let bound = conjecture_bound(curve, NormOrder::L2)?.value;
    let maximum = maximize_derivative_norm(curve, grid_size, tol)?;
    let margin = bound - maximum.max_value;
    let verdict = if margin < 0.0 { Verdict::Violated } else { Verdict::Holds };
    Ok(ConjectureVerdict { verdict, margin, conjectured_bound: bound, maximum })
}
