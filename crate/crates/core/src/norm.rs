//! Vector norms used for derivative magnitudes and bounds.

use core::fmt;
use core::str::FromStr;

/// Order `p` of the `l^p` vector norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NormOrder {
    L1,
    #[default]
    L2,
    Inf,
}

impl NormOrder {
    pub fn norm(self, v: &[f64]) -> f64 {
        match self {
            NormOrder::L1 => v.iter().map(|x| libm::fabs(*x)).sum(),
            NormOrder::L2 => libm::sqrt(v.iter().map(|x| x * x).sum()),
            NormOrder::Inf => v.iter().fold(0.0, |m, x| f64::max(m, libm::fabs(*x))),
        }
    }
}

/// Euclidean norm.
pub fn l2(v: &[f64]) -> f64 {
    NormOrder::L2.norm(v)
}

impl fmt::Display for NormOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormOrder::L1 => "1",
            NormOrder::L2 => "2",
            NormOrder::Inf => "inf",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseNormError;

impl fmt::Display for ParseNormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("norm order must be one of 1, 2, inf")
    }
}

impl core::error::Error for ParseNormError {}

impl FromStr for NormOrder {
    type Err = ParseNormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "l1" => Ok(NormOrder::L1),
            "2" | "l2" => Ok(NormOrder::L2),
            "inf" | "infinity" | "linf" => Ok(NormOrder::Inf),
            _ => Err(ParseNormError),
        }
    }
}
