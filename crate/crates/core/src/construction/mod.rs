//! Builders and closed-form ribbonlength evaluators for the knot families:
//! multi-twist Möbius bands, (2,q)-torus knots and twist knots.
//!
//! Every builder returns a [`RibbonDiagram`]: a closed planar centerline with
//! one [`FoldRecord`] per vertex, named landmark points and a ledger of the
//! segment lengths that make up the total. The ledger is computed from closed
//! forms while the centerline is laid out from coordinates, so the two are
//! independent routes to the same ribbonlength.
//!
//! The escape accordion is always built at its tightest: for `k` folds the
//! accordion spacing is `escape_min_kd(θ) / k`, which makes the entering and
//! leaving ribbon exactly one width apart. The half-wraps (and the V-units
//! extending the second ribbon piece) use the caller's spacing `d`.

mod clasp;
mod diagram;
mod layout;
mod moebius;
mod torus;
mod twist;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result, RibbonError};
use crate::geometry::{clearance_check, escape_min_kd, FoldAngle};

pub use clasp::{clasp_distances, ClaspDistances};
pub use diagram::{FoldRecord, FoldRole, Landmark, LedgerEntry, RibbonDiagram, LEDGER_TOLERANCE};
pub use moebius::{build_moebius, build_moebius_with, moebius_rib_formula};
pub use torus::{build_torus, build_torus_with, torus_rib_formula};
pub use twist::{build_twist, build_twist_with, twist_rib_formula};

pub(crate) const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Upper bound on the number of fold vertices a builder will lay out.
pub const MAX_FOLD_VERTICES: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Moebius,
    Torus2q,
    TwistOdd,
    TwistEven,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Moebius => "moebius",
            Family::Torus2q => "torus2q",
            Family::TwistOdd => "twist_odd",
            Family::TwistEven => "twist_even",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistParity {
    Odd,
    Even,
}

impl TwistParity {
    pub fn family(self) -> Family {
        match self {
            TwistParity::Odd => Family::TwistOdd,
            TwistParity::Even => Family::TwistEven,
        }
    }
}

/// How many folds the escape accordion gets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AccordionPolicy {
    /// The smallest even `k` with `k·d·sin(θ/2) ≥ 1/cos(θ/2)`.
    #[default]
    Smallest,
    /// A caller-chosen even `k`; it must clear with spacing `d`.
    Folds(usize),
}

/// Parameters a diagram was built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub family: Family,
    pub theta: FoldAngle,
    /// Half-wrap spacing.
    pub d: f64,
    pub n: u32,
    /// Escape-accordion fold count.
    pub k: usize,
}

impl ConstructionParams {
    /// Vertex spacing inside the escape accordions.
    pub fn accordion_spacing(&self) -> f64 {
        escape_min_kd(self.theta) / self.k as f64
    }

    pub fn half_wraps(&self) -> u32 {
        match self.family {
            Family::TwistEven => 2 * self.n,
            _ => 2 * self.n + 1,
        }
    }

    /// The torus parameter q = 2n + 1, for the torus family.
    pub fn q(&self) -> Option<u32> {
        (self.family == Family::Torus2q).then_some(2 * self.n + 1)
    }
}

/// Torus and twist constructions use fold angle π/3 throughout.
pub fn sixty_degrees() -> FoldAngle {
    FoldAngle::new(PI / 3.0).expect("pi/3 is a valid fold angle")
}

pub(crate) fn check_spacing(d: f64) -> Result<()> {
    if d.is_finite() && d > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("vertex spacing d must be positive, got {d}")))
    }
}

pub(crate) fn check_formula_spacing(d: f64) -> Result<()> {
    if d.is_finite() && d >= 0.0 {
        Ok(())
    } else {
        Err(domain(format!("vertex spacing d must be non-negative, got {d}")))
    }
}

/// Spacing for the "exact" mode: the accordion with `k` folds of this spacing
/// clears by exactly one width.
pub fn exact_spacing(theta: FoldAngle, k: usize) -> Result<f64> {
    if k < 2 || k % 2 == 1 {
        return Err(domain(format!(
            "an escape accordion has an even number of folds, at least 2 (got {k})"
        )));
    }
    Ok(escape_min_kd(theta) / k as f64)
}

/// Resolves the accordion fold count for spacing `d`.
pub fn resolve_folds(theta: FoldAngle, d: f64, policy: AccordionPolicy) -> Result<usize> {
    check_spacing(d)?;
    let k = match policy {
        AccordionPolicy::Folds(k) => k,
        AccordionPolicy::Smallest => {
            let half = escape_min_kd(theta) / (2.0 * d);
            if !(half < MAX_FOLD_VERTICES as f64) {
                return Err(domain(format!(
                    "spacing d = {d} needs more than {MAX_FOLD_VERTICES} accordion folds"
                )));
            }
            // shave rounding noise so that d = min_kd / k resolves to k
            let mut k = 2 * ((half * (1.0 - 1e-12)).ceil() as usize).max(1);
            while !clearance_check(theta, d, k)?.satisfied {
                k += 2;
            }
            k
        }
    };
    let clearance = clearance_check(theta, d, k)?;
    if !clearance.satisfied {
        return Err(RibbonError::Constraint(format!(
            "escape accordion clearance: {k} folds of spacing {d} separate the ribbon by {:.6} \
             width(s); k*d*sin(theta/2) must be at least 1/cos(theta/2)",
            clearance.clearance
        )));
    }
    Ok(k)
}

pub(crate) fn check_vertex_budget(count: usize) -> Result<()> {
    if count > MAX_FOLD_VERTICES {
        Err(domain(format!(
            "construction needs {count} fold vertices, more than the limit {MAX_FOLD_VERTICES}"
        )))
    } else {
        Ok(())
    }
}
