//! Rational Bézier curves, closed-form first derivatives and bounds on the
//! derivative norm.
//!
//! * [`bernstein`]: exact binomials, Bernstein basis, de Casteljau evaluation
//!   and degree elevation of coefficient sequences.
//! * [`curve`]: [`RationalBezierCurve`] and its validation.
//! * [`derivative`]: two closed forms of `r'(t)` and a finite-difference check.
//! * [`bounds`]: the conjectured adjacent-weight-ratio bound and the
//!   degree-elevation bound.
//! * [`maximizer`]: grid plus golden-section search for `max ||r'(t)||`.
//! * [`family`]: the counterexample family and conjecture verdicts.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bernstein;
pub mod bounds;
pub mod curve;
pub mod derivative;
mod error;
pub mod family;
pub mod maximizer;
pub mod norm;

pub use bernstein::{bernstein, binomial, BernsteinCoefficients};
pub use bounds::{
    bound_profile, conjecture_bound, elevation_bound, weight_ratio, BoundMethod, BoundReport,
    ElevatedNet,
};
pub use curve::{validate, CurveIssue, RationalBezierCurve};
pub use derivative::{
    build_derivative_form, derivative_weights, eval_derivative_explicit, eval_derivative_sederberg,
    finite_difference, intermediate_points, sederberg_terms, DerivativeForm, SederbergNumerator,
};
pub use error::{Error, Result};
pub use family::{conjecture_verdict, counterexample_family, ConjectureVerdict, Verdict};
pub use maximizer::{maximize_derivative_norm, MaximizerResult};
pub use norm::NormOrder;
