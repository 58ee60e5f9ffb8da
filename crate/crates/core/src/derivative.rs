//! Closed forms of the first derivative `r'(t)` of a rational Bézier curve.
//!
//! Two independent representations are provided:
//!
//! * [`SederbergNumerator`]: a degree `2n - 2` Bernstein numerator over the
//!   squared weight function `w(t)^2`.
//! * [`DerivativeForm`]: a degree `2n` rational Bézier form with weights
//!   `w^[1]_i` (the Bernstein coefficients of `w(t)^2`) and control points
//!   `Q_i = n P̂_i / w^[1]_i`. Its control net is what the elevation bound
//!   in [`crate::bounds`] works on.
//!
//! [`finite_difference`] is a third, formula-free route used for checking.

use alloc::vec::Vec;

use crate::bernstein::{binomial_f64, check_parameter, BernsteinCoefficients};
use crate::curve::{project, RationalBezierCurve};
use crate::error::{Error, Result};

fn source_degree(curve: &RationalBezierCurve) -> Result<usize> {
    match curve.degree() {
        0 => Err(Error::DerivativeOfPoint),
        n => Ok(n),
    }
}

/// Numerator terms `D_0 .. D_{2n-2}` of
/// `r'(t) = sum D_i B_i^{2n-2}(t) / w(t)^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SederbergNumerator {
    terms: BernsteinCoefficients,
}

impl SederbergNumerator {
    /// Degree `2n - 2` of the numerator.
    pub fn degree(&self) -> usize {
        self.terms.degree()
    }

    pub fn terms(&self) -> &BernsteinCoefficients {
        &self.terms
    }

    /// Numerator value `sum D_i B_i^{2n-2}(t)`.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        self.terms.eval(t)
    }
}

/// Computes
/// `D_i = 1/C(2n-2, i) sum_{j=max(0, i-n+1)}^{floor(i/2)} (i - 2j + 1) C(n, j) C(n, i-j+1) w_j w_{i-j+1} (p_{i-j+1} - p_j)`.
///
/// The subtrahend is `p_j`. Writing `p_i` there only agrees for `n = 1`.
pub fn sederberg_terms(curve: &RationalBezierCurve) -> Result<SederbergNumerator> {
    let n = source_degree(curve)?;
    let d = curve.dim();
    let w = curve.weights();
    let top = 2 * n - 2;
    let mut data = alloc::vec![0.0; (top + 1) * d];
    for i in 0..=top {
        let acc = &mut data[i * d..(i + 1) * d];
        for j in (i + 1).saturating_sub(n)..=i / 2 {
            let k = i - j + 1;
            let c =
                (i - 2 * j + 1) as f64 * binomial_f64(n, j)? * binomial_f64(n, k)? * w[j] * w[k];
            for ((a, pk), pj) in acc.iter_mut().zip(curve.point(k)).zip(curve.point(j)) {
                *a += c * (pk - pj);
            }
        }
        let scale = binomial_f64(top, i)?;
        for a in acc.iter_mut() {
            *a /= scale;
        }
    }
    Ok(SederbergNumerator { terms: BernsteinCoefficients::from_flat(d, data)? })
}

/// `r'(t)` from the numerator-over-squared-weight form.
pub fn eval_derivative_sederberg(curve: &RationalBezierCurve, t: f64) -> Result<Vec<f64>> {
    check_parameter(t)?;
    let numerator = sederberg_terms(curve)?;
    let w = curve.eval_weight(t)?;
    let w2 = w * w;
    Ok(numerator.eval(t).into_iter().map(|x| x / w2).collect())
}

/// Degree-`2n` Bernstein coefficients of `w(t)^2`:
/// `w^[1]_i = sum_j C(n, j) C(n, i-j) / C(2n, i) w_j w_{i-j}`.
pub fn derivative_weights(curve: &RationalBezierCurve) -> Result<Vec<f64>> {
    let n = source_degree(curve)?;
    let w = curve.weights();
    (0..=2 * n)
        .map(|i| {
            let denom = binomial_f64(2 * n, i)?;
            let mut acc = 0.0;
            for j in i.saturating_sub(n)..=i.min(n) {
                acc += binomial_f64(n, j)? * binomial_f64(n, i - j)? / denom * w[j] * w[i - j];
            }
            Ok(acc)
        })
        .collect()
}

/// Degree-`(2n - 1)` intermediate points
/// `P_j = sum_h C(n-1, h) C(n, j-h) / C(2n-1, j) [w_{h+1} w_{j-h} (p_{h+1} - p_{j-h}) + w_h w_{j-h} (p_{j-h} - p_h)]`
/// for `h` from `max(0, j - n)` to `min(n - 1, j)`.
pub fn intermediate_points(curve: &RationalBezierCurve) -> Result<BernsteinCoefficients> {
    let n = source_degree(curve)?;
    let d = curve.dim();
    let w = curve.weights();
    let top = 2 * n - 1;
    let mut data = alloc::vec![0.0; (top + 1) * d];
    for j in 0..=top {
        let denom = binomial_f64(top, j)?;
        let acc = &mut data[j * d..(j + 1) * d];
        for h in j.saturating_sub(n)..=(n - 1).min(j) {
            let m = j - h;
            let c = binomial_f64(n - 1, h)? * binomial_f64(n, m)? / denom;
            let a = w[h + 1] * w[m];
            let b = w[h] * w[m];
            let (ph, ph1, pm) = (curve.point(h), curve.point(h + 1), curve.point(m));
            for (k, slot) in acc.iter_mut().enumerate() {
                *slot += c * (a * (ph1[k] - pm[k]) + b * (pm[k] - ph[k]));
            }
        }
    }
    BernsteinCoefficients::from_flat(d, data)
}

/// The degree-`2n` rational form
/// `r'(t) = n sum P̂_i B_i^{2n}(t) / sum w^[1]_i B_i^{2n}(t)`
/// `      = sum Q_i w^[1]_i B_i^{2n}(t) / sum w^[1]_i B_i^{2n}(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeForm {
    source_degree: usize,
    weights: Vec<f64>,
    intermediate: BernsteinCoefficients,
    numerator: BernsteinCoefficients,
    control_points: BernsteinCoefficients,
    /// `(n P̂_i, w^[1]_i)`, evaluated by de Casteljau.
    homogeneous: BernsteinCoefficients,
}

impl DerivativeForm {
    pub fn new(curve: &RationalBezierCurve) -> Result<Self> {
        let n = source_degree(curve)?;
        let d = curve.dim();
        let weights = derivative_weights(curve)?;
        let intermediate = intermediate_points(curve)?;
        // P̂ is P elevated once from degree 2n-1 to 2n.
        let numerator = intermediate.elevate_once();
        let nf = n as f64;

        let mut q = Vec::with_capacity(numerator.as_flat().len());
        let mut h = Vec::with_capacity((d + 1) * weights.len());
        for (p_hat, &w) in numerator.iter().zip(&weights) {
            q.extend(p_hat.iter().map(|x| nf * x / w));
            h.extend(p_hat.iter().map(|x| nf * x));
            h.push(w);
        }
        Ok(DerivativeForm {
            source_degree: n,
            weights,
            intermediate,
            numerator,
            control_points: BernsteinCoefficients::from_flat(d, q)?,
            homogeneous: BernsteinCoefficients::from_flat(d + 1, h)?,
        })
    }

    /// Degree `n` of the curve this form differentiates.
    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    /// Degree `2n` of the form itself.
    pub fn degree(&self) -> usize {
        2 * self.source_degree
    }

    pub fn dim(&self) -> usize {
        self.numerator.dim()
    }

    /// `w^[1]_i`, i = 0..=2n.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `P_j`, j = 0..=2n-1.
    pub fn intermediate_points(&self) -> &BernsteinCoefficients {
        &self.intermediate
    }

    /// `P̂_i`, i = 0..=2n.
    pub fn numerator_points(&self) -> &BernsteinCoefficients {
        &self.numerator
    }

    /// `Q_i = n P̂_i / w^[1]_i`, i = 0..=2n.
    pub fn control_points(&self) -> &BernsteinCoefficients {
        &self.control_points
    }

    /// Homogeneous net `(n P̂_i, w^[1]_i)`.
    pub fn homogeneous(&self) -> &BernsteinCoefficients {
        &self.homogeneous
    }

    /// `r'(t)` by de Casteljau on the homogeneous net.
    pub fn eval(&self, t: f64) -> Result<Vec<f64>> {
        check_parameter(t)?;
        Ok(project(self.homogeneous.eval(t)))
    }
}

pub fn build_derivative_form(curve: &RationalBezierCurve) -> Result<DerivativeForm> {
    DerivativeForm::new(curve)
}

pub fn eval_derivative_explicit(form: &DerivativeForm, t: f64) -> Result<Vec<f64>> {
    form.eval(t)
}

/// Second-order finite difference of `r` at `t` with step `h`.
///
/// Central `(r(t+h) - r(t-h)) / 2h` when the stencil fits in `[0, 1]`,
/// otherwise the one-sided three-point formula pointing into the interval.
pub fn finite_difference(curve: &RationalBezierCurve, t: f64, h: f64) -> Result<Vec<f64>> {
    check_parameter(t)?;
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidStep(h));
    }
    let r = |s: f64| curve.eval_point(s);
    let combine = |terms: &[(f64, Vec<f64>)]| -> Vec<f64> {
        let mut out = alloc::vec![0.0; curve.dim()];
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out.iter_mut().for_each(|o| *o /= 2.0 * h);
        out
    };
    if t - h >= 0.0 && t + h <= 1.0 {
        Ok(combine(&[(1.0, r(t + h)?), (-1.0, r(t - h)?)]))
    } else if t + 2.0 * h <= 1.0 {
        Ok(combine(&[(-3.0, r(t)?), (4.0, r(t + h)?), (-1.0, r(t + 2.0 * h)?)]))
    } else if t - 2.0 * h >= 0.0 {
        Ok(combine(&[(3.0, r(t)?), (-4.0, r(t - h)?), (1.0, r(t - 2.0 * h)?)]))
    } else {
        Err(Error::InvalidStep(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::l2;
    use alloc::vec;
    use proptest::prelude::*;

    fn segment() -> RationalBezierCurve {
        RationalBezierCurve::new(&[[0.0, 0.0], [1.0, 0.0]], vec![1.0, 2.0]).unwrap()
    }

    fn line(n: usize) -> RationalBezierCurve {
        let pts: Vec<[f64; 2]> = (0..=n).map(|i| [i as f64, 0.0]).collect();
        RationalBezierCurve::new(&pts, vec![1.0; n + 1]).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn degree_zero_has_no_derivative() {
        let point = RationalBezierCurve::new(&[[1.0, 2.0]], vec![3.0]).unwrap();
        assert_eq!(sederberg_terms(&point), Err(Error::DerivativeOfPoint));
        assert_eq!(DerivativeForm::new(&point), Err(Error::DerivativeOfPoint));
    }

    #[test]
    fn sederberg_examples() {
        let c = RationalBezierCurve::new(&[[0.5, -1.0], [2.0, 3.0]], vec![0.25, 3.0]).unwrap();
        let s = sederberg_terms(&c).unwrap();
        assert_eq!(s.degree(), 0);
        assert!(close(s.terms().coefficient(0), &[0.75 * 1.5, 0.75 * 4.0], 1e-15));

        let s = sederberg_terms(&segment()).unwrap();
        assert_eq!(s.terms().as_flat(), &[2.0, 0.0]);
        assert_eq!(eval_derivative_sederberg(&segment(), 0.0).unwrap(), vec![2.0, 0.0]);

        let s = sederberg_terms(&line(2)).unwrap();
        assert_eq!(s.degree(), 2);
        for d in s.terms().iter() {
            assert!(close(d, &[2.0, 0.0], 1e-15));
        }
        for t in [0.1, 0.5, 0.77] {
            let fd = finite_difference(&line(2), t, 1e-5).unwrap();
            assert!(close(&fd, &[2.0, 0.0], 1e-8));
        }
    }

    #[test]
    fn derivative_weight_examples() {
        let c = RationalBezierCurve::new(&[[0.0], [1.0]], vec![0.3, 1.7]).unwrap();
        let w = derivative_weights(&c).unwrap();
        assert!(close(&w, &[0.09, 0.3 * 1.7, 1.7 * 1.7], 1e-15));
        assert_eq!(derivative_weights(&segment()).unwrap(), vec![1.0, 2.0, 4.0]);
    }

    #[test]
    fn derivative_weights_square_the_weight_function() {
        let c =
            RationalBezierCurve::new(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]], vec![1.0, 0.5, 1.0])
                .unwrap();
        let w1 = BernsteinCoefficients::from_scalars(derivative_weights(&c).unwrap()).unwrap();
        for k in 0..20 {
            let t = (k as f64 + 0.37) / 20.0;
            let w = c.eval_weight(t).unwrap();
            assert!((w1.eval_scalar(t) - w * w).abs() <= 1e-14 * w * w);
        }
    }

    #[test]
    fn intermediate_point_examples() {
        let c = RationalBezierCurve::new(&[[0.5, -1.0], [2.0, 3.0]], vec![0.25, 3.0]).unwrap();
        let p = intermediate_points(&c).unwrap();
        assert_eq!(p.len(), 2);
        for v in p.iter() {
            assert!(close(v, &[0.75 * 1.5, 0.75 * 4.0], 1e-15));
        }
        let p = intermediate_points(&segment()).unwrap();
        assert_eq!(p.as_flat(), &[2.0, 0.0, 2.0, 0.0]);
    }

    #[test]
    fn intermediate_points_give_the_derivative() {
        let c =
            RationalBezierCurve::new(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]], vec![1.0, 0.5, 1.0])
                .unwrap();
        let p = intermediate_points(&c).unwrap().elevate_once();
        for k in 0..16 {
            let t = (k as f64 + 0.5) / 16.0;
            let w = c.eval_weight(t).unwrap();
            let via_p: Vec<f64> = p.eval(t).iter().map(|x| 2.0 * x / (w * w)).collect();
            let sed = eval_derivative_sederberg(&c, t).unwrap();
            assert!(close(&via_p, &sed, 1e-12));
        }
    }

    #[test]
    fn form_examples() {
        let f = DerivativeForm::new(&segment()).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.numerator_points().as_flat(), &[2.0, 0.0, 2.0, 0.0, 2.0, 0.0]);
        assert_eq!(f.weights(), &[1.0, 2.0, 4.0]);
        assert_eq!(f.control_points().as_flat(), &[2.0, 0.0, 1.0, 0.0, 0.5, 0.0]);
        assert_eq!(eval_derivative_explicit(&f, 0.0).unwrap(), vec![2.0, 0.0]);
        assert_eq!(eval_derivative_explicit(&f, 1.0).unwrap(), vec![0.5, 0.0]);
        assert!(f.eval(1.01).is_err());

        for n in 1..=9 {
            let f = DerivativeForm::new(&line(n)).unwrap();
            for q in f.control_points().iter() {
                assert!(close(q, &[n as f64, 0.0], 1e-12), "n={n}: {q:?}");
            }
        }
    }

    #[test]
    fn coincident_points_give_zero_derivative() {
        let c = RationalBezierCurve::new(&[[1.0, 1.0]; 5], vec![1.0, 3.0, 0.2, 2.0, 1.0]).unwrap();
        let f = DerivativeForm::new(&c).unwrap();
        assert!(f.numerator_points().as_flat().iter().all(|x| *x == 0.0));
        assert!(sederberg_terms(&c).unwrap().terms().as_flat().iter().all(|x| *x == 0.0));
        assert_eq!(f.eval(0.4).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn finite_difference_examples() {
        // r'(t) = w0 w1 (p1 - p0) / w(t)^2 with w(t) = 1 + t.
        for t in [0.0, 0.5, 1.0] {
            let fd = finite_difference(&segment(), t, 1e-5).unwrap();
            let exact = 2.0 / ((1.0 + t) * (1.0 + t));
            assert!(close(&fd, &[exact, 0.0], 1e-8), "t={t}: {fd:?}");
        }
        for t in [0.0, 0.3, 1.0] {
            let fd = finite_difference(&line(6), t, 1e-5).unwrap();
            assert!(close(&fd, &[6.0, 0.0], 1e-8));
        }
        assert_eq!(finite_difference(&segment(), 0.5, 0.0), Err(Error::InvalidStep(0.0)));
        assert_eq!(finite_difference(&segment(), 0.5, -1e-3), Err(Error::InvalidStep(-1e-3)));
        assert_eq!(finite_difference(&segment(), 0.5, 0.6), Err(Error::InvalidStep(0.6)));
    }

    fn arb_curve() -> impl Strategy<Value = RationalBezierCurve> {
        (1usize..=12, 1usize..=3).prop_flat_map(|(n, d)| {
            (
                prop::collection::vec(prop::collection::vec(-10.0f64..10.0, d), n + 1),
                prop::collection::vec(-10.0f64..4.0, n + 1),
            )
                .prop_map(|(pts, log_w)| {
                    let w = log_w.into_iter().map(libm::exp2).collect();
                    RationalBezierCurve::new(&pts, w).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn two_closed_forms_agree(c in arb_curve(), t in 0.0f64..=1.0) {
            let a = eval_derivative_sederberg(&c, t).unwrap();
            let b = DerivativeForm::new(&c).unwrap().eval(t).unwrap();
            let scale = 1.0 + l2(&a);
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-10 * scale, "{:?} vs {:?}", a, b);
            }
        }

        #[test]
        fn endpoint_derivatives(c in arb_curve()) {
            let n = c.degree();
            let f = DerivativeForm::new(&c).unwrap();
            let w = c.weights();
            let (p0, p1) = (c.point(0), c.point(1));
            let (pm, pn) = (c.point(n - 1), c.point(n));
            let start: Vec<f64> = p0.iter().zip(p1)
                .map(|(a, b)| n as f64 * w[1] / w[0] * (b - a)).collect();
            let end: Vec<f64> = pm.iter().zip(pn)
                .map(|(a, b)| n as f64 * w[n - 1] / w[n] * (b - a)).collect();
            let d0 = f.eval(0.0).unwrap();
            let d1 = f.eval(1.0).unwrap();
            prop_assert!(close(&d0, &start, 1e-12 * (1.0 + l2(&start))));
            prop_assert!(close(&d1, &end, 1e-12 * (1.0 + l2(&end))));
        }

        #[test]
        fn q_points_times_weights_recover_numerator(c in arb_curve()) {
            let f = DerivativeForm::new(&c).unwrap();
            let n = c.degree() as f64;
            for ((q, p), w) in f.control_points().iter()
                .zip(f.numerator_points().iter())
                .zip(f.weights())
            {
                for (qk, pk) in q.iter().zip(p) {
                    let target = n * pk;
                    prop_assert!((qk * w - target).abs() <= 1e-15 * target.abs());
                }
            }
        }
    }
}
