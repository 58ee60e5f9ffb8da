use alloc::vec::Vec;
use core::fmt;

use crate::curve::CurveIssue;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `k > n` in a binomial coefficient.
    BinomialDomain {
        n: usize,
        k: usize,
    },
    /// The exact binomial coefficient does not fit in a `u128`.
    BinomialOverflow {
        n: usize,
        k: usize,
    },
    /// A basis index above the degree.
    IndexOutOfRange {
        index: usize,
        degree: usize,
    },
    /// Curve parameter outside `[0, 1]` (or NaN).
    ParameterOutOfRange(f64),
    EmptyCoefficients,
    /// Coefficient storage whose length is not a multiple of the dimension,
    /// or vectors of differing dimension.
    RaggedCoefficients,
    /// Derivative requested for a degree-0 curve.
    DerivativeOfPoint,
    /// Finite-difference step that is not positive, or too wide for the stencil.
    InvalidStep(f64),
    InvalidTolerance(f64),
    InvalidGridSize(usize),
    /// The counterexample family is defined for degree 2 and up.
    FamilyDegree(usize),
    /// An elevation schedule that is not strictly increasing at `position`.
    ScheduleNotIncreasing {
        position: usize,
    },
    InvalidCurve(Vec<CurveIssue>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BinomialDomain { n, k } => {
                write!(f, "binomial coefficient C({n}, {k}) requires k <= n")
            }
            Error::BinomialOverflow { n, k } => {
                write!(f, "binomial coefficient C({n}, {k}) overflows a 128-bit integer")
            }
            Error::IndexOutOfRange { index, degree } => {
                write!(f, "basis index {index} exceeds degree {degree}")
            }
            Error::ParameterOutOfRange(t) => write!(f, "parameter t = {t} is outside [0, 1]"),
            Error::EmptyCoefficients => f.write_str("empty coefficient list"),
            Error::RaggedCoefficients => f.write_str("coefficients do not share one dimension"),
            Error::DerivativeOfPoint => f.write_str("derivative of a point (degree 0 curve)"),
            Error::InvalidStep(h) => write!(f, "invalid finite-difference step {h}"),
            Error::InvalidTolerance(tol) => write!(f, "tolerance {tol} must lie in (0, 1)"),
            Error::InvalidGridSize(g) => write!(f, "grid size {g} must be at least 3"),
            Error::FamilyDegree(n) => {
                write!(f, "counterexample family needs degree >= 2, got {n}")
            }
            Error::ScheduleNotIncreasing { position } => {
                write!(f, "elevation schedule is not strictly increasing at position {position}")
            }
            Error::InvalidCurve(issues) => {
                f.write_str("invalid curve: ")?;
                for (k, issue) in issues.iter().enumerate() {
                    if k > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{issue}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for Error {}
