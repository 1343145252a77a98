use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::dd::DoubleDouble;
use crate::error::{domain, Result, RibbonError};
use crate::geometry::FoldAngle;

/// Search interval for the optimal Möbius fold angle.
pub const THETA_BRACKET: (f64, f64) = (0.1, PI - 0.1);

const MAX_ITERATIONS: u32 = 500;

/// Derivative in θ of the d-independent part of the Möbius ribbonlength,
/// `(s+1)²(2s−1) / (2c²s²)` with `s = sin(θ/2)`, `c = cos(θ/2)`.
pub fn rib_theta_derivative(theta: FoldAngle) -> f64 {
    let (s, c) = (theta.half_sin(), theta.half_cos());
    (s + 1.0).powi(2) * (2.0 * s - 1.0) / (2.0 * c * c * s * s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimalTheta {
    pub theta: f64,
    /// Möbius ribbonlength at `theta` in the `d → 0` limit.
    pub value: f64,
    /// Bisection steps on the derivative.
    pub iterations: u32,
    /// Minimizer found by golden-section search on the ribbonlength itself.
    pub cross_check: f64,
    pub cross_check_iterations: u32,
}

/// Finds the fold angle minimizing the Möbius ribbonlength.
///
/// Bisection on [`rib_theta_derivative`] is the answer; golden-section search
/// on the ribbonlength, evaluated in double-double precision so the flat
/// bottom of the curve stays resolvable, must land within `tolerance` of it.
/// Tolerances finer than a few ulps of the root are raised to that floor.
pub fn optimal_theta(tolerance: f64) -> Result<OptimalTheta> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tolerance}")));
    }
    let tol = tolerance.max(8.0 * f64::EPSILON);
    let (theta, iterations) = bisect_derivative(tol)?;
    let (cross_check, cross_check_iterations) = golden_section(tol)?;
    if (theta - cross_check).abs() > tol {
        return Err(RibbonError::Numerical(format!(
            "optimizers disagree: derivative root {theta} vs direct minimum {cross_check}"
        )));
    }
    let value = crate::construction::moebius_rib_formula(FoldAngle::new(theta)?, 0.0, 0)?;
    Ok(OptimalTheta { theta, value, iterations, cross_check, cross_check_iterations })
}

fn derivative_at(theta: f64) -> Result<f64> {
    Ok(rib_theta_derivative(FoldAngle::new(theta)?))
}

fn bisect_derivative(tol: f64) -> Result<(f64, u32)> {
    let (mut lo, mut hi) = THETA_BRACKET;
    let (f_lo, f_hi) = (derivative_at(lo)?, derivative_at(hi)?);
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(RibbonError::Numerical(format!(
            "derivative does not change sign on [{lo}, {hi}]: {f_lo}, {f_hi}"
        )));
    }
    let mut iterations = 0;
    while hi - lo > tol / 2.0 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if iterations > MAX_ITERATIONS {
            return Err(RibbonError::Numerical("bisection did not converge".into()));
        }
        let f = derivative_at(mid)?;
        if f == 0.0 {
            return Ok((mid, iterations));
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), iterations))
}

fn rib_dd(theta: f64) -> DoubleDouble {
    let half = DoubleDouble::from_f64(theta / 2.0);
    let (s, c) = (half.sin(), half.cos());
    let two = DoubleDouble::from_f64(2.0);
    let one = DoubleDouble::from_f64(1.0);
    two / c + one / (c * s) + s / c
}

fn golden_section(tol: f64) -> Result<(f64, u32)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = THETA_BRACKET;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (rib_dd(x1), rib_dd(x2));
    let mut iterations = 0;
    while b - a > tol / 2.0 {
        iterations += 1;
        if iterations > MAX_ITERATIONS {
            return Err(RibbonError::Numerical("golden-section search did not converge".into()));
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = rib_dd(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = rib_dd(x2);
        }
        if !(a < x1 && x1 <= x2 && x2 < b) {
            break;
        }
    }
    Ok((0.5 * (a + b), iterations))
}
