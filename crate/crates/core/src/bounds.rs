//! Upper bounds on `||r'(t)||` over `[0, 1]`.
//!
//! Two bounds are computed:
//!
//! * the conjectured bound `n * w * max ||p_{i+1} - p_i||`, where `w` is the
//!   largest adjacent weight ratio, which does not hold in general;
//! * the elevation bound: the largest ratio `||n P̂_i|| / w^[1]_i` over the
//!   control net of the degree-`2n` derivative form after `e` degree
//!   elevations. It is sound for every `e` and non-increasing in `e`.
//!
//! The elevation bound is computed by `e` one-step elevations of the
//! homogeneous net. The equivalent closed form needs `C(2n + e, i)`, which
//! leaves every integer type long before `e = 1000`.

use alloc::vec::Vec;

use crate::bernstein::BernsteinCoefficients;
use crate::curve::RationalBezierCurve;
use crate::derivative::DerivativeForm;
use crate::error::{Error, Result};
use crate::norm::NormOrder;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundMethod {
    Conjecture { weight_ratio: f64 },
    Elevation { steps: usize, argmax_index: usize },
}

/// A derivative-norm bound and how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub value: f64,
    pub norm: NormOrder,
    pub method: BoundMethod,
}

impl BoundReport {
    pub fn method_name(&self) -> &'static str {
        match self.method {
            BoundMethod::Conjecture { .. } => "conjecture",
            BoundMethod::Elevation { .. } => "elevation",
        }
    }
}

/// Largest ratio between adjacent weights, taken in both directions. Always `>= 1`.
pub fn weight_ratio(curve: &RationalBezierCurve) -> Result<f64> {
    if curve.degree() == 0 {
        return Err(Error::DerivativeOfPoint);
    }
    Ok(curve.weights().windows(2).map(|w| f64::max(w[0] / w[1], w[1] / w[0])).fold(1.0, f64::max))
}

/// `n * weight_ratio * max_i ||p_{i+1} - p_i||`.
pub fn conjecture_bound(curve: &RationalBezierCurve, norm: NormOrder) -> Result<BoundReport> {
    let ratio = weight_ratio(curve)?;
    let mut diff = alloc::vec![0.0; curve.dim()];
    let mut longest: f64 = 0.0;
    for i in 0..curve.degree() {
        for ((d, a), b) in diff.iter_mut().zip(curve.point(i)).zip(curve.point(i + 1)) {
            *d = b - a;
        }
        longest = longest.max(norm.norm(&diff));
    }
    Ok(BoundReport {
        value: curve.degree() as f64 * ratio * longest,
        norm,
        method: BoundMethod::Conjecture { weight_ratio: ratio },
    })
}

/// Homogeneous control net `(n P̂_i, w^[1]_i)` of a derivative form, elevated
/// step by step.
#[derive(Debug, Clone)]
pub struct ElevatedNet {
    net: BernsteinCoefficients,
    steps: usize,
}

impl ElevatedNet {
    pub fn new(form: &DerivativeForm) -> Self {
        ElevatedNet { net: form.homogeneous().clone(), steps: 0 }
    }

    /// Elevations applied so far.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn net(&self) -> &BernsteinCoefficients {
        &self.net
    }

    pub fn elevate(&mut self, times: usize) {
        self.net.elevate(times);
        self.steps += times;
    }

    /// Largest `||numerator_i|| / weight_i` and the smallest index attaining it.
    pub fn max_ratio(&self, norm: NormOrder) -> (f64, usize) {
        let d = self.net.dim() - 1;
        let mut best = (f64::NEG_INFINITY, 0);
        for (i, c) in self.net.iter().enumerate() {
            let ratio = norm.norm(&c[..d]) / c[d];
            if ratio > best.0 {
                best = (ratio, i);
            }
        }
        best
    }

    pub fn report(&self, norm: NormOrder) -> BoundReport {
        let (value, argmax_index) = self.max_ratio(norm);
        BoundReport {
            value,
            norm,
            method: BoundMethod::Elevation { steps: self.steps, argmax_index },
        }
    }
}

/// Bound from the derivative form's control net after `e` elevations.
pub fn elevation_bound(form: &DerivativeForm, e: usize, norm: NormOrder) -> BoundReport {
    let mut net = ElevatedNet::new(form);
    net.elevate(e);
    net.report(norm)
}

/// Elevation bounds at each `e` of a strictly increasing schedule, elevating
/// incrementally from one entry to the next.
pub fn bound_profile(
    form: &DerivativeForm,
    schedule: &[usize],
    norm: NormOrder,
) -> Result<Vec<(usize, f64)>> {
    if let Some(position) = schedule.windows(2).position(|w| w[1] <= w[0]) {
        return Err(Error::ScheduleNotIncreasing { position: position + 1 });
    }
    let mut net = ElevatedNet::new(form);
    let mut out = Vec::with_capacity(schedule.len());
    for &e in schedule {
        net.elevate(e - net.steps());
        out.push((e, net.max_ratio(norm).0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::counterexample_family;
    use alloc::vec;

    fn segment() -> RationalBezierCurve {
        RationalBezierCurve::new(&[[0.0, 0.0], [1.0, 0.0]], vec![1.0, 2.0]).unwrap()
    }

    fn line(n: usize) -> RationalBezierCurve {
        let pts: Vec<[f64; 2]> = (0..=n).map(|i| [i as f64, 0.0]).collect();
        RationalBezierCurve::new(&pts, vec![1.0; n + 1]).unwrap()
    }

    /// The closed form of the bound after `e` elevations, with exact binomials.
    fn closed_form_bound(form: &DerivativeForm, e: usize, norm: NormOrder) -> f64 {
        let m = form.degree();
        let n = form.source_degree() as f64;
        let c = |a: usize, b: usize| crate::bernstein::binomial(a, b).unwrap() as f64;
        let mut best = f64::NEG_INFINITY;
        for i in 0..=m + e {
            let mut num = vec![0.0; form.dim()];
            let mut den = 0.0;
            for j in i.saturating_sub(e)..=m.min(i) {
                let k = c(m, j) * c(e, i - j);
                for (acc, x) in num.iter_mut().zip(form.numerator_points().coefficient(j)) {
                    *acc += k * n * x;
                }
                den += k * form.weights()[j];
            }
            best = best.max(norm.norm(&num) / den);
        }
        best
    }

    #[test]
    fn weight_ratio_examples() {
        assert_eq!(weight_ratio(&line(4)).unwrap(), 1.0);
        assert_eq!(weight_ratio(&counterexample_family(11).unwrap()).unwrap(), 2.0);
        let c = RationalBezierCurve::new(&[[0.0], [1.0], [2.0]], vec![1.0, 3.0, 1.0]).unwrap();
        assert_eq!(weight_ratio(&c).unwrap(), 3.0);
        let p = RationalBezierCurve::new(&[[0.0]], vec![1.0]).unwrap();
        assert_eq!(weight_ratio(&p), Err(Error::DerivativeOfPoint));
    }

    #[test]
    fn conjecture_examples() {
        let b = conjecture_bound(&counterexample_family(11).unwrap(), NormOrder::L2).unwrap();
        assert_eq!(b.value, 22.0);
        assert_eq!(b.method, BoundMethod::Conjecture { weight_ratio: 2.0 });
        let b = conjecture_bound(&counterexample_family(2).unwrap(), NormOrder::L2).unwrap();
        assert_eq!(b.value, 4.0);
        for n in 1..6 {
            assert_eq!(conjecture_bound(&line(n), NormOrder::L2).unwrap().value, n as f64);
        }
    }

    #[test]
    fn elevation_on_segment_is_tight() {
        let form = DerivativeForm::new(&segment()).unwrap();
        let b = elevation_bound(&form, 0, NormOrder::L2);
        assert_eq!(b.value, 2.0);
        assert_eq!(b.method, BoundMethod::Elevation { steps: 0, argmax_index: 0 });
        let profile = bound_profile(&form, &[0, 10, 100], NormOrder::L2).unwrap();
        assert_eq!(profile.len(), 3);
        for (_, v) in profile {
            assert!((v - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn argmax_ties_pick_the_smallest_index() {
        let form = DerivativeForm::new(&line(3)).unwrap();
        let b = elevation_bound(&form, 5, NormOrder::L2);
        assert!((b.value - 3.0).abs() < 1e-12);
        match b.method {
            BoundMethod::Elevation { steps: 5, argmax_index } => assert!(argmax_index <= 6 + 5),
            other => panic!("{other:?}"),
        }
        let net = ElevatedNet::new(&form);
        let d = net.net().dim() - 1;
        let ratios: Vec<f64> = net.net().iter().map(|c| c[0] / c[d]).collect();
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let first = ratios.iter().position(|r| *r == max).unwrap();
        assert_eq!(net.max_ratio(NormOrder::L2).1, first);
    }

    #[test]
    fn iterated_elevation_matches_closed_form() {
        let curve = RationalBezierCurve::new(
            &[[0.0, 1.0], [2.0, -1.0], [3.5, 0.5], [1.0, 4.0]],
            vec![1.0, 0.25, 3.0, 0.5],
        )
        .unwrap();
        let form = DerivativeForm::new(&curve).unwrap();
        for e in 0..=8 {
            for norm in [NormOrder::L1, NormOrder::L2, NormOrder::Inf] {
                let a = elevation_bound(&form, e, norm).value;
                let b = closed_form_bound(&form, e, norm);
                assert!((a - b).abs() <= 1e-13 * b, "e={e}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn profile_examples() {
        let form = DerivativeForm::new(&counterexample_family(11).unwrap()).unwrap();
        let profile = bound_profile(&form, &[0, 10, 100, 1000], NormOrder::L2).unwrap();
        for w in profile.windows(2) {
            assert!(w[1].1 <= w[0].1 + 1e-12);
        }
        assert!((profile[3].1 - 22.285016).abs() < 1e-6);
        assert!(profile[0].1 >= 22.285016);
        assert_eq!(profile[3].1, elevation_bound(&form, 1000, NormOrder::L2).value);

        assert!(bound_profile(&form, &[], NormOrder::L2).unwrap().is_empty());
        assert_eq!(
            bound_profile(&form, &[0, 5, 5], NormOrder::L2),
            Err(Error::ScheduleNotIncreasing { position: 2 })
        );
    }

    #[test]
    fn norms_coincide_in_one_dimension() {
        let c = RationalBezierCurve::new(&[[0.0], [2.0], [-1.0], [3.0]], vec![1.0, 0.3, 2.0, 0.9])
            .unwrap();
        let form = DerivativeForm::new(&c).unwrap();
        for e in [0, 1, 10, 100] {
            let l1 = elevation_bound(&form, e, NormOrder::L1).value;
            let l2 = elevation_bound(&form, e, NormOrder::L2).value;
            let li = elevation_bound(&form, e, NormOrder::Inf).value;
            assert!((l1 - l2).abs() <= 1e-12 && (l2 - li).abs() <= 1e-12);
        }
    }
}
