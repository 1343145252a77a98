use super::layout::{chain, closure_angle, offset, wrap_kind, wrap_label, LoopBuilder};
use super::{
    check_formula_spacing, check_spacing, check_vertex_budget, resolve_folds, AccordionPolicy, ConstructionParams,
    Family, FoldRole, LedgerEntry, RibbonDiagram,
};
use crate::error::Result;
use crate::geometry::{escape_min_kd, FoldAngle, FoldKind, PlanarPoint};

/// Ribbonlength of the multi-twist Möbius band built from an escape accordion
/// of fold angle θ and `2n + 1` half-wraps of spacing `d`:
///
/// `2/cos(θ/2) + 1/(cos(θ/2)·sin(θ/2)) + tan(θ/2) + 2nd·(1 + sin(θ/2))`.
pub fn moebius_rib_formula(theta: FoldAngle, d: f64, n: u32) -> Result<f64> {
    check_formula_spacing(d)?;
    let (s, c, t) = (theta.half_sin(), theta.half_cos(), theta.half_tan());
    Ok(2.0 / c + escape_min_kd(theta) + t + 2.0 * f64::from(n) * d * (1.0 + s))
}

/// Builds the Möbius band with `2n + 1` half-twists using the smallest escape
/// accordion for spacing `d`.
pub fn build_moebius(theta: FoldAngle, d: f64, n: u32) -> Result<RibbonDiagram> {
    build_moebius_with(theta, d, n, AccordionPolicy::Smallest)
}

/// Lays out the Möbius band: closure vertex `A`, the escape accordion from
/// `v_S` to `v_E = w_1`, the half-wraps `w_1 … w_{2n+1}`, and closure vertex
/// `E`, after which the centerline returns to `A` along the line through
/// `B`, `C`, `D` half a width above the folded edge.
pub fn build_moebius_with(theta: FoldAngle, d: f64, n: u32, policy: AccordionPolicy) -> Result<RibbonDiagram> {
    check_spacing(d)?;
    let k = resolve_folds(theta, d, policy)?;
    let wraps = 2 * n as usize + 1;
    let total = k + wraps + 2;
    check_vertex_budget(total)?;

    let params = ConstructionParams { family: Family::Moebius, theta, d, n, k };
    let d_acc = params.accordion_spacing();
    let (s, c, t) = (theta.half_sin(), theta.half_cos(), theta.half_tan());

    let closure = closure_angle(theta);

    let mut b = LoopBuilder::with_capacity(total);
    let v_s = PlanarPoint::ORIGIN;
    let a = b.fold(offset(v_s, -t / 2.0, 0.5), FoldRole::Closure, FoldKind::Overfold, closure);
    b.mark_fold("A", a);

    let accordion = chain(v_s, theta, d_acc, k);
    for (i, &p) in accordion[..k].iter().enumerate() {
        let v = b.fold(p, FoldRole::EscapeAccordion, FoldKind::Overfold, theta);
        if i == 0 {
            b.mark_fold("v_S", v);
        }
    }
    let v_e = accordion[k];
    let wrap_points = chain(v_e, theta, d, wraps - 1);
    for (i, &p) in wrap_points.iter().enumerate() {
        let v = b.fold(p, FoldRole::HalfWrap, wrap_kind(i), theta);
        b.mark_fold(wrap_label(i + 1), v);
        if i == 0 {
            b.mark_fold("v_E", v);
        }
    }
    let w_last = wrap_points[wraps - 1];
    let e = b.fold(offset(w_last, t / 2.0, 0.5), FoldRole::Closure, FoldKind::Underfold, closure);
    b.mark_fold("E", e);
    b.mark("B", PlanarPoint::new(v_s.x, 0.5));
    b.mark("C", PlanarPoint::new(v_e.x, 0.5));
    b.mark("D", PlanarPoint::new(w_last.x, 0.5));

    let two_nd = 2.0 * f64::from(n) * d;
    let ledger = vec![
        LedgerEntry::new("d_K(v_S,v_E)", 1, k as f64 * d_acc),
        LedgerEntry::new("d_K(w_1,w_{2n+1})", 1, two_nd),
        LedgerEntry::new("d(A,v_S)", 2, 1.0 / (2.0 * c)),
        LedgerEntry::new("d(A,B)", 2, t / 2.0),
        LedgerEntry::new("d(B,C)", 1, k as f64 * d_acc * s),
        LedgerEntry::new("d(C,D)", 1, two_nd * s),
    ];
    b.finish(ledger, params)
}
