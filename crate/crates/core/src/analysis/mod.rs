//! Ribbonlength evaluation, fold-angle optimization, linking and topology
//! bookkeeping, and crossing-number bound comparisons.

mod dd;
mod optimize;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

pub use optimize::{optimal_theta, rib_theta_derivative, OptimalTheta, THETA_BRACKET};

use crate::construction::{
    moebius_rib_formula, sixty_degrees, torus_rib_formula, twist_rib_formula, ConstructionParams, Family,
    FoldRecord, FoldRole, LedgerEntry, RibbonDiagram, TwistParity, LEDGER_TOLERANCE, SQRT_3,
};
use crate::error::{domain, Result, RibbonError};
use crate::geometry::{path_length, PolylinePath};

/// Ribbonlength of a diagram: its centerline length, since the width is 1.
pub fn ribbonlength(diagram: &RibbonDiagram) -> f64 {
    path_length(diagram.centerline())
}

/// Closed-form ribbonlength for a parameter set.
pub fn formula_value(params: &ConstructionParams) -> Result<f64> {
    match params.family {
        Family::Moebius => moebius_rib_formula(params.theta, params.d, params.n),
        Family::Torus2q => torus_rib_formula(2 * params.n + 1, params.d),
        Family::TwistOdd => twist_rib_formula(params.n, TwistParity::Odd, params.d),
        Family::TwistEven => twist_rib_formula(params.n, TwistParity::Even, params.d),
    }
}

/// The `d → 0` ribbonlength of a family: the closed form evaluated at zero
/// spacing (π/3 for the Möbius band).
pub fn limit_rib(family: Family) -> f64 {
    let value = match family {
        Family::Moebius => moebius_rib_formula(sixty_degrees(), 0.0, 0),
        Family::Torus2q => torus_rib_formula(3, 0.0),
        Family::TwistOdd => twist_rib_formula(1, TwistParity::Odd, 0.0),
        Family::TwistEven => twist_rib_formula(1, TwistParity::Even, 0.0),
    };
    value.expect("zero spacing is valid for every family")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RibbonlengthReport {
    pub formula_value: f64,
    /// Length measured along the laid-out centerline.
    pub oracle_value: f64,
    pub limit_d_zero: f64,
    pub ledger: Vec<LedgerEntry>,
    pub family: ConstructionParams,
}

/// Compares a builder's diagram against its closed form.
pub fn report(diagram: &RibbonDiagram) -> Result<RibbonlengthReport> {
    let params = *diagram
        .params()
        .ok_or_else(|| RibbonError::Unsupported("diagram carries no construction parameters".into()))?;
    let formula_value = formula_value(&params)?;
    let oracle_value = ribbonlength(diagram);
    if !((formula_value - oracle_value).abs() <= LEDGER_TOLERANCE) {
        return Err(RibbonError::Numerical(format!(
            "centerline length {oracle_value} disagrees with the closed form {formula_value}"
        )));
    }
    Ok(RibbonlengthReport {
        formula_value,
        oracle_value,
        limit_d_zero: limit_rib(params.family),
        ledger: diagram.ledger().to_vec(),
        family: params,
    })
}

/// `min((p−1)q, p(q−1))`, which is `q` for `p = 2`.
pub fn torus_crossing_number(p: u64, q: u64) -> Result<u64> {
    if p < 2 || q < 2 {
        return Err(domain(format!("torus crossing number needs p, q >= 2 (got {p}, {q})")));
    }
    let a = (p - 1).checked_mul(q);
    let b = p.checked_mul(q - 1);
    match (a, b) {
        (Some(a), Some(b)) => Ok(a.min(b)),
        _ => Err(domain("torus parameters overflow")),
    }
}

/// The linear ribbonlength bound `2.5·Cr + 1`.
pub fn kny_bound(crossing_number: u64) -> f64 {
    2.5 * crossing_number as f64 + 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub q: u32,
    pub crossing_number: u64,
    pub construction_bound: f64,
    pub kny_bound: f64,
}

/// Odd `q` from 3 to 1001.
pub fn default_table_qs() -> Vec<u32> {
    (3..=1001).step_by(2).collect()
}

/// Ribbonlength bounds for (2,q)-torus knots: the construction's `d → 0`
/// value against the crossing-number bound.
pub fn comparison_table(q_values: &[u32]) -> Result<Vec<BoundRow>> {
    let construction_bound = limit_rib(Family::Torus2q);
    q_values
        .iter()
        .map(|&q| {
            torus_rib_formula(q, 0.0)?;
            let crossing_number = torus_crossing_number(2, u64::from(q))?;
            Ok(BoundRow { q, crossing_number, construction_bound, kny_bound: kny_bound(crossing_number) })
        })
        .collect()
}

/// Ribbon linking number under the convention that every half-wrap counts
/// `+1`; accordion folds cancel in pairs and closures, clasps and joins
/// contribute nothing.
pub fn ribbon_linking_number(diagram: &RibbonDiagram) -> Result<i64> {
    linking_count(diagram.folds())
}

/// The counting rule of [`ribbon_linking_number`] on a bare fold sequence.
pub fn linking_count(folds: &[FoldRecord]) -> Result<i64> {
    folds.iter().try_fold(0i64, |acc, f| match f.role {
        Some(FoldRole::HalfWrap) => Ok(acc + 1),
        Some(_) => Ok(acc),
        None => Err(RibbonError::Unsupported(
            "linking number needs folds tagged with their construction role".into(),
        )),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BandType {
    MoebiusBand,
    Annulus,
}

impl BandType {
    pub fn name(self) -> &'static str {
        match self {
            BandType::MoebiusBand => "moebius_band",
            BandType::Annulus => "annulus",
        }
    }
}

/// Odd edge count gives a Möbius band, even an annulus.
pub fn band_type(diagram: &RibbonDiagram) -> Result<BandType> {
    band_type_of_path(diagram.centerline())
}

pub fn band_type_of_path(path: &PolylinePath) -> Result<BandType> {
    if !path.is_closed() {
        return Err(domain("band type needs a closed centerline"));
    }
    Ok(if path.edge_count() % 2 == 1 { BandType::MoebiusBand } else { BandType::Annulus })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantKind {
    Fixed,
    /// The value is a coefficient of the ribbon linking number `n`.
    PerLinkingNumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceConstant {
    pub name: &'static str,
    pub value: f64,
    pub citation: &'static str,
    pub kind: ConstantKind,
}

/// Known ribbonlength and aspect-ratio values for comparison.
pub fn reference_constants() -> Vec<ReferenceConstant> {
    use ConstantKind::{Fixed, PerLinkingNumber};
    let c = |name, value, citation, kind| ReferenceConstant { name, value, citation, kind };
    vec![
        c("pentagon_trefoil", 5.0 / (PI / 5.0).tan(), "folded pentagon trefoil, 5 cot(pi/5)", Fixed),
        c("trefoil_construction", 6.0, "folded ribbon trefoil construction", Fixed),
        c("unknot_annulus_lk_n", 2.0, "folded ribbon unknot with linking number n has ribbonlength 2n", PerLinkingNumber),
        c("moebius_lower_bound", SQRT_3, "Schwartz: embedded folded-strip Moebius band aspect ratio exceeds sqrt(3)", Fixed),
        c("three_half_twist_bound", 3.0, "Brown and Schwartz: three half-twist Moebius band", Fixed),
        c("twisted_cylinder_bound", 2.0, "Schwartz and Montgomery: twisted flat cylinder", Fixed),
        c("hennessey_general_bound", 8.0, "Hennessey: multi-twist bands and annuli", Fixed),
        c("hennessey_moebius_bound", 6.5, "Hennessey: multi-twist Moebius band", Fixed),
        c("hennessey_annulus_bound", 7.45, "Hennessey: multi-twist annulus", Fixed),
        c("accordion_moebius_bound", 3.0 * SQRT_3, "escape accordion Moebius band at fold angle pi/3", Fixed),
    ]
}
