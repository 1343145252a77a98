use super::layout::{chain, closure_angle, offset, wrap_kind, wrap_label, LoopBuilder};
use super::{
    check_formula_spacing, check_spacing, check_vertex_budget, resolve_folds, sixty_degrees, AccordionPolicy,
    ConstructionParams, Family, FoldRole, LedgerEntry, RibbonDiagram, SQRT_3,
};
use crate::error::{domain, Result};
use crate::geometry::{FoldKind, PlanarPoint};

fn half_twist_pairs(q: u32) -> Result<u32> {
    if q < 3 || q % 2 == 0 {
        return Err(domain(format!(
            "q must be odd and at least 3 for a (2,q)-torus knot (got {q}); even q gives a two-component link"
        )));
    }
    Ok((q - 1) / 2)
}

/// `8√3 + 6nd` with `q = 2n + 1`.
pub fn torus_rib_formula(q: u32, d: f64) -> Result<f64> {
    let n = half_twist_pairs(q)?;
    check_formula_spacing(d)?;
    Ok(8.0 * SQRT_3 + 6.0 * f64::from(n) * d)
}

pub fn build_torus(q: u32, d: f64) -> Result<RibbonDiagram> {
    build_torus_with(q, d, AccordionPolicy::Smallest)
}

/// Lays out the (2,q)-torus knot from two ribbon pieces sharing one folded
/// edge.
///
/// Piece AB runs `E → v_S`, through its escape accordion and `q` half-wraps
/// to `w_q`, then up to `I`. Piece CD starts again at `E`, follows the same
/// accordion, continues with V-units under the wraps and a second escape
/// accordion to `N`, then climbs to `M`. The joins B–C (at `I`) and A–D (at
/// `M`) run along the line through `E, F, G, H, I, J, M` half a width above
/// the folded edge. Coincident layers share coordinates.
pub fn build_torus_with(q: u32, d: f64, policy: AccordionPolicy) -> Result<RibbonDiagram> {
    let n = half_twist_pairs(q)?;
    check_spacing(d)?;
    let theta = sixty_degrees();
    let k = resolve_folds(theta, d, policy)?;
    let wraps = q as usize;
    let total = 3 * k + 2 * wraps + 5;
    check_vertex_budget(total)?;

    let params = ConstructionParams { family: Family::Torus2q, theta, d, n, k };
    let d_acc = params.accordion_spacing();
    let (s, c, t) = (theta.half_sin(), theta.half_cos(), theta.half_tan());
    let closure = closure_angle(theta);

    let v_s = PlanarPoint::ORIGIN;
    let e_point = offset(v_s, -t / 2.0, 0.5);
    let accordion = chain(v_s, theta, d_acc, k);
    let v_e = accordion[k];
    let wrap_points = chain(v_e, theta, d, wraps - 1);
    let w_q = wrap_points[wraps - 1];
    let second = chain(w_q, theta, d_acc, k);
    let n_point = second[k];

    let mut b = LoopBuilder::with_capacity(total);

    // piece AB, from end A's corner E to end B at I
    let e = b.fold(e_point, FoldRole::Closure, FoldKind::Overfold, closure);
    b.mark_fold("E", e);
    for (i, &p) in accordion[..k].iter().enumerate() {
        let v = b.fold(p, FoldRole::EscapeAccordion, FoldKind::Overfold, theta);
        if i == 0 {
            b.mark_fold("v_S", v);
        }
    }
    for (i, &p) in wrap_points.iter().enumerate() {
        let v = b.fold(p, FoldRole::HalfWrap, wrap_kind(i), theta);
        b.mark_fold(wrap_label(i + 1), v);
        if i == 0 {
            b.mark_fold("v_E", v);
        }
    }
    let i_vertex = b.fold(offset(w_q, t / 2.0, 0.5), FoldRole::Closure, FoldKind::Underfold, closure);
    b.mark_fold("I", i_vertex);

    // piece CD, joined to B at I, from E to end D at M
    b.fold(e_point, FoldRole::Closure, FoldKind::Overfold, closure);
    for &p in &accordion[..k] {
        b.fold(p, FoldRole::EscapeAccordion, FoldKind::Overfold, theta);
    }
    for &p in &wrap_points[..wraps - 1] {
        b.fold(p, FoldRole::AccordionExtension, FoldKind::Overfold, theta);
    }
    for &p in &second[..k] {
        b.fold(p, FoldRole::EscapeAccordion, FoldKind::Overfold, theta);
    }
    let nv = b.fold(n_point, FoldRole::Closure, FoldKind::Underfold, theta);
    b.mark_fold("N", nv);
    let m = b.fold(offset(n_point, t / 2.0, 0.5), FoldRole::Closure, FoldKind::Overfold, closure);
    b.mark_fold("M", m);

    b.mark("F", PlanarPoint::new(v_s.x, 0.5));
    b.mark("G", PlanarPoint::new(v_e.x, 0.5));
    b.mark("H", PlanarPoint::new(w_q.x, 0.5));
    b.mark("J", PlanarPoint::new(n_point.x, 0.5));

    let two_nd = 2.0 * f64::from(n) * d;
    let ledger = vec![
        LedgerEntry::new("d(E,v_S)", 4, 1.0 / (2.0 * c)),
        LedgerEntry::new("d_K(v_S,v_E)", 3, k as f64 * d_acc),
        LedgerEntry::new("d_K(w_1,w_{2n+1})", 2, two_nd),
        LedgerEntry::new("d(E,F)", 4, t / 2.0),
        LedgerEntry::new("d(v_S,v_E)", 3, k as f64 * d_acc * s),
        LedgerEntry::new("d(w_1,w_{2n+1})", 2, two_nd * s),
    ];
    b.finish(ledger, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::exact_spacing;
    use crate::geometry::{interior_angle, path_length};

    #[test]
    fn formula_examples() {
        assert!((torus_rib_formula(3, 0.0).unwrap() - 8.0 * SQRT_3).abs() < 1e-15);
        assert!((torus_rib_formula(3, 0.0).unwrap() - 13.856406).abs() < 1e-6);
        assert!((torus_rib_formula(5, 0.01).unwrap() - (8.0 * SQRT_3 + 0.12)).abs() < 1e-12);
        for q in [3, 7, 101, 1001] {
            assert_eq!(torus_rib_formula(q, 0.0).unwrap(), 8.0 * SQRT_3);
        }
        for q in [0, 1, 2, 4, 100] {
            assert!(torus_rib_formula(q, 0.1).is_err());
        }
    }

    #[test]
    fn tiny_spacing_approaches_limit() {
        let d = exact_spacing(sixty_degrees(), 2).unwrap();
        let k2 = build_torus_with(3, d, AccordionPolicy::Folds(2)).unwrap();
        assert!((path_length(k2.centerline()) - (8.0 * SQRT_3 + 6.0 * d)).abs() < 1e-9);
        let small = build_torus(3, 1e-4).unwrap();
        assert!((path_length(small.centerline()) - 8.0 * SQRT_3).abs() < 6e-4 + 1e-9);
    }

    #[test]
    fn length_matches_formula_and_ledger() {
        for (q, d) in [(3, 0.2), (5, 0.05), (9, 0.5), (101, 0.01)] {
            let k = build_torus(q, d).unwrap();
            let len = path_length(k.centerline());
            assert!((len - torus_rib_formula(q, d).unwrap()).abs() < 1e-9, "q={q}");
            assert!((k.ledger_total() - len).abs() < 1e-9);
        }
    }

    #[test]
    fn ledger_terms() {
        let k = build_torus(7, 0.1).unwrap();
        let term = |name: &str| k.ledger_entry(name).unwrap();
        assert!((term("d(E,F)").length - (std::f64::consts::PI / 6.0).tan() / 2.0).abs() < 1e-12);
        assert!((term("d(v_S,v_E)").length - 2.0 / SQRT_3).abs() < 1e-12);
        assert!((term("d(E,v_S)").length - 1.0 / SQRT_3).abs() < 1e-12);
        assert!((term("d_K(v_S,v_E)").length - 4.0 / SQRT_3).abs() < 1e-12);
        assert!((term("d_K(w_1,w_{2n+1})").length - 0.6).abs() < 1e-12);
        assert!((term("d(w_1,w_{2n+1})").length - 0.3).abs() < 1e-12);
        let mults: Vec<u32> = k.ledger().iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, [4, 3, 2, 4, 3, 2]);
    }

    #[test]
    fn geometry_of_the_joins() {
        let k = build_torus(5, 0.1).unwrap();
        let lm = k.landmarks();
        let pts = k.centerline().distinct_vertices();
        let n = pts.len();
        for i in 0..n {
            let angle = interior_angle(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            assert!((angle - k.folds()[i].fold.angle.radians()).abs() < 1e-9, "vertex {i}");
        }
        // extension to N repeats the escape accordion's planar span
        let span = lm["v_S"].point.distance(&lm["v_E"].point);
        assert!((lm["w_5"].point.distance(&lm["N"].point) - span).abs() < 1e-12);
        for label in ["E", "F", "G", "H", "I", "J", "M"] {
            assert!((lm[label].point.y - 0.5).abs() < 1e-15, "{label}");
        }
        assert!((lm["H"].point.distance(&lm["J"].point) - span).abs() < 1e-12);
        assert!((lm["J"].point.distance(&lm["M"].point) - lm["E"].point.distance(&lm["F"].point)).abs() < 1e-12);
        assert_eq!(k.folds().iter().filter(|f| f.role == Some(FoldRole::HalfWrap)).count(), 5);
    }
}
