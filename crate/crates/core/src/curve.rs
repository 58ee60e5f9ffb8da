//! Rational Bézier curves `r(t) = sum w_i p_i B_i^n(t) / sum w_i B_i^n(t)`.

use alloc::vec::Vec;
use core::fmt;

use crate::bernstein::{check_parameter, de_casteljau_in_place, BernsteinCoefficients};
use crate::error::{Error, Result};

/// A violated curve invariant, as reported by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum CurveIssue {
    /// No weights at all, so no degree can be inferred.
    Empty,
    LengthMismatch {
        degree: usize,
        points: usize,
        weights: usize,
    },
    /// Points must have at least one coordinate.
    ZeroDimension,
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    NonPositiveWeight {
        index: usize,
    },
    NonFiniteWeight {
        index: usize,
    },
    NonFinitePoint {
        index: usize,
    },
}

impl fmt::Display for CurveIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveIssue::Empty => f.write_str("empty curve"),
            CurveIssue::LengthMismatch { degree, points, weights } => write!(
                f,
                "length mismatch: degree {degree} needs {} points and weights, got {points} points and {weights} weights",
                degree + 1
            ),
            CurveIssue::ZeroDimension => f.write_str("points have zero dimension"),
            CurveIssue::DimensionMismatch { index, expected, found } => write!(
                f,
                "dimension mismatch at index {index}: expected {expected}, found {found}"
            ),
            CurveIssue::NonPositiveWeight { index } => {
                write!(f, "nonpositive weight at index {index}")
            }
            CurveIssue::NonFiniteWeight { index } => write!(f, "non-finite weight at index {index}"),
            CurveIssue::NonFinitePoint { index } => write!(f, "non-finite point at index {index}"),
        }
    }
}

/// Reports every violated invariant of the raw parts of a degree-`degree` curve.
pub fn validate<P: AsRef<[f64]>>(
    degree: usize,
    points: &[P],
    weights: &[f64],
) -> core::result::Result<(), Vec<CurveIssue>> {
    let mut issues = Vec::new();
    if points.len() != degree + 1 || weights.len() != degree + 1 {
        issues.push(CurveIssue::LengthMismatch {
            degree,
            points: points.len(),
            weights: weights.len(),
        });
    }
    if let Some(first) = points.first() {
        let dim = first.as_ref().len();
        if dim == 0 {
            issues.push(CurveIssue::ZeroDimension);
        }
        for (index, p) in points.iter().enumerate() {
            let p = p.as_ref();
            if p.len() != dim {
                issues.push(CurveIssue::DimensionMismatch { index, expected: dim, found: p.len() });
            } else if p.iter().any(|x| !x.is_finite()) {
                issues.push(CurveIssue::NonFinitePoint { index });
            }
        }
    }
    for (index, &w) in weights.iter().enumerate() {
        if !w.is_finite() {
            issues.push(CurveIssue::NonFiniteWeight { index });
        } else if w <= 0.0 {
            issues.push(CurveIssue::NonPositiveWeight { index });
        }
    }
    if issues.is_empty() {
        Ok(())
    } else {
        Err(issues)
    }
}

/// A rational Bézier curve with validated control points and positive weights.
///
/// Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalBezierCurve {
    dim: usize,
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl RationalBezierCurve {
    /// Builds a curve whose degree is `weights.len() - 1`.
    pub fn new<P: AsRef<[f64]>>(points: &[P], weights: Vec<f64>) -> Result<Self> {
        match weights.len().checked_sub(1) {
            Some(degree) => Self::with_degree(degree, points, weights),
            None => Err(Error::InvalidCurve(alloc::vec![CurveIssue::Empty])),
        }
    }

    pub fn with_degree<P: AsRef<[f64]>>(
        degree: usize,
        points: &[P],
        weights: Vec<f64>,
    ) -> Result<Self> {
        validate(degree, points, &weights).map_err(Error::InvalidCurve)?;
        let dim = points[0].as_ref().len();
        let mut flat = Vec::with_capacity(dim * points.len());
        for p in points {
            flat.extend_from_slice(p.as_ref());
        }
        Ok(RationalBezierCurve { dim, points: flat, weights })
    }

    pub fn degree(&self) -> usize {
        self.weights.len() - 1
    }

    /// Dimension `d` of the control points.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> core::slice::ChunksExact<'_, f64> {
        self.points.chunks_exact(self.dim)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// Homogeneous control net `(w_i p_i, w_i)` with `dim + 1` components.
    pub fn homogeneous(&self) -> BernsteinCoefficients {
        let mut data = Vec::with_capacity((self.dim + 1) * self.weights.len());
        for (p, &w) in self.points().zip(&self.weights) {
            data.extend(p.iter().map(|x| w * x));
            data.push(w);
        }
        BernsteinCoefficients::from_flat(self.dim + 1, data)
            .expect("validated curve has a nonempty net")
    }

    /// Denominator `w(t) = sum w_i B_i^n(t)`, always positive on `[0, 1]`.
    pub fn eval_weight(&self, t: f64) -> Result<f64> {
        check_parameter(t)?;
        let mut work = self.weights.clone();
        de_casteljau_in_place(&mut work, 1, t);
        Ok(work[0])
    }

    /// Curve point `r(t)`, dividing the homogeneous de Casteljau result once.
    /// The endpoints return `p_0` and `p_n` exactly.
    pub fn eval_point(&self, t: f64) -> Result<Vec<f64>> {
        check_parameter(t)?;
        if t == 0.0 {
            return Ok(self.point(0).to_vec());
        }
        if t == 1.0 {
            return Ok(self.point(self.degree()).to_vec());
        }
        Ok(project(self.homogeneous().eval(t)))
    }

    /// Same curve with every weight multiplied by `factor > 0`.
    pub fn with_scaled_weights(&self, factor: f64) -> Result<Self> {
        let weights = self.weights.iter().map(|w| w * factor).collect();
        let points: Vec<&[f64]> = self.points().collect();
        Self::new(&points, weights)
    }
}

/// Divides the spatial part of a homogeneous vector by its last component.
pub(crate) fn project(mut h: Vec<f64>) -> Vec<f64> {
    let w = h.pop().expect("homogeneous vector has a weight component");
    for x in &mut h {
        *x /= w;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn segment() -> RationalBezierCurve {
        RationalBezierCurve::new(&[[0.0, 0.0], [1.0, 0.0]], vec![1.0, 2.0]).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(segment().eval_weight(0.5).unwrap(), 1.5);
        let flat = RationalBezierCurve::new(&[[0.0], [3.0], [-1.0], [2.0]], vec![0.7; 4]).unwrap();
        for t in [0.0, 0.13, 0.5, 0.91, 1.0] {
            assert!((flat.eval_weight(t).unwrap() - 0.7).abs() < 1e-15);
        }
    }

    #[test]
    fn point_examples() {
        let r = segment().eval_point(0.5).unwrap();
        assert!((r[0] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r[1], 0.0);
        assert_eq!(segment().eval_point(1.0).unwrap(), vec![1.0, 0.0]);
        assert!(segment().eval_point(-0.1).is_err());
    }

    #[test]
    fn validate_reports_every_issue() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]];
        assert_eq!(validate(3, &pts, &[1.0, 1.0, 1.0, 1.0]), Ok(()));

        let issues = validate(3, &pts, &[1.0, 1.0, 1.0, 0.0]).unwrap_err();
        assert_eq!(issues, vec![CurveIssue::NonPositiveWeight { index: 3 }]);
        assert_eq!(issues[0].to_string(), "nonpositive weight at index 3");

        let issues = validate(3, &pts, &[1.0, 1.0, 1.0]).unwrap_err();
        assert!(issues[0].to_string().starts_with("length mismatch"));

        let ragged: [&[f64]; 3] = [&[0.0, 0.0], &[1.0], &[f64::NAN, 0.0]];
        let issues = validate(2, &ragged, &[1.0, -2.0, f64::INFINITY]).unwrap_err();
        assert_eq!(
            issues,
            vec![
                CurveIssue::DimensionMismatch { index: 1, expected: 2, found: 1 },
                CurveIssue::NonFinitePoint { index: 2 },
                CurveIssue::NonPositiveWeight { index: 1 },
                CurveIssue::NonFiniteWeight { index: 2 },
            ]
        );

        let empty: [[f64; 2]; 0] = [];
        assert_eq!(
            RationalBezierCurve::new(&empty, vec![]),
            Err(Error::InvalidCurve(vec![CurveIssue::Empty]))
        );
        let zero_dim: [[f64; 0]; 1] = [[]];
        assert!(RationalBezierCurve::new(&zero_dim, vec![1.0]).is_err());
    }

    fn arb_curve() -> impl Strategy<Value = RationalBezierCurve> {
        (1usize..=12, 1usize..=3).prop_flat_map(|(n, d)| {
            (
                prop::collection::vec(prop::collection::vec(-10.0f64..10.0, d), n + 1),
                prop::collection::vec(-6.0f64..4.0, n + 1),
            )
                .prop_map(|(pts, log_w)| {
                    let w = log_w.into_iter().map(libm::exp2).collect();
                    RationalBezierCurve::new(&pts, w).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn endpoints_interpolate(c in arb_curve()) {
            prop_assert_eq!(c.eval_point(0.0).unwrap(), c.point(0).to_vec());
            prop_assert_eq!(c.eval_point(1.0).unwrap(), c.point(c.degree()).to_vec());
            // The homogeneous path itself also lands on the endpoints.
            let h0 = project(c.homogeneous().eval(0.0));
            let h1 = project(c.homogeneous().eval(1.0));
            for (a, b) in h0.iter().zip(c.point(0)).chain(h1.iter().zip(c.point(c.degree()))) {
                prop_assert!((a - b).abs() <= 1e-14 * (1.0 + b.abs()));
            }
        }

        #[test]
        fn weight_is_positive(c in arb_curve(), t in 0.0f64..=1.0) {
            prop_assert!(c.eval_weight(t).unwrap() > 0.0);
        }

        #[test]
        fn invariant_under_common_weight_scale(
            c in arb_curve(),
            t in 0.0f64..=1.0,
            scale in 0.01f64..100.0,
        ) {
            let a = c.eval_point(t).unwrap();
            let b = c.with_scaled_weights(scale).unwrap().eval_point(t).unwrap();
            let size = crate::norm::l2(&a);
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-13 * (1.0 + size));
            }
        }
    }
}
