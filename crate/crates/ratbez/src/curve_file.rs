//! JSON curve interchange: `{ "degree": n, "points": [[x, y, ...], ...], "weights": [...] }`.

use std::io::{Read, Write};
use std::path::Path;

use ratbez_core::{DerivativeForm, RationalBezierCurve};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub degree: usize,
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl CurveDocument {
    pub fn from_curve(curve: &RationalBezierCurve) -> Self {
        CurveDocument {
            degree: curve.degree(),
            points: curve.points().map(<[f64]>::to_vec).collect(),
            weights: curve.weights().to_vec(),
        }
    }

    /// The degree-`2n` derivative form as a curve: control points `Q_i`,
    /// weights `w^[1]_i`.
    pub fn from_derivative_form(form: &DerivativeForm) -> Self {
        CurveDocument {
            degree: form.degree(),
            points: form.control_points().iter().map(<[f64]>::to_vec).collect(),
            weights: form.weights().to_vec(),
        }
    }

    pub fn into_curve(self) -> Result<RationalBezierCurve> {
        Ok(RationalBezierCurve::with_degree(self.degree, &self.points, self.weights)?)
    }
}

pub fn parse_curve(json: &str) -> Result<RationalBezierCurve> {
    serde_json::from_str::<CurveDocument>(json)?.into_curve()
}

pub fn curve_to_json(curve: &RationalBezierCurve) -> String {
    serde_json::to_string_pretty(&CurveDocument::from_curve(curve))
        .expect("curve documents always serialize")
}

/// Reads a curve from `path`, or from standard input when `path` is `-`.
pub fn read_curve(path: &Path) -> Result<RationalBezierCurve> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::io(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    }
    parse_curve(&text)
}

/// Writes a curve to `path`, or to standard output when `path` is `-`.
pub fn write_curve(path: &Path, curve: &RationalBezierCurve) -> Result<()> {
    let mut text = curve_to_json(curve);
    text.push('\n');
    if path == Path::new("-") {
        std::io::stdout().write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
    } else {
        std::fs::write(path, text).map_err(|e| Error::io(path, e))
    }
}
