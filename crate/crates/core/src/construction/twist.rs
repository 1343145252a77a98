use std::f64::consts::PI;

use super::clasp::clasp_distances;
use super::layout::{chain, closure_angle, offset, wrap_kind, wrap_label, LoopBuilder};
use super::{
    check_formula_spacing, check_spacing, check_vertex_budget, resolve_folds, sixty_degrees, AccordionPolicy,
    ConstructionParams, FoldRole, LedgerEntry, RibbonDiagram, TwistParity, SQRT_3,
};
use crate::error::{domain, Result};
use crate::geometry::{FoldAngle, FoldKind, PlanarPoint};

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(domain("a twist knot needs n >= 1"))
    } else {
        Ok(())
    }
}

/// `9√3 + 2 + 6nd` for odd parity, `8√3 + 2 + 6nd` for even.
pub fn twist_rib_formula(n: u32, parity: TwistParity, d: f64) -> Result<f64> {
    check_n(n)?;
    check_formula_spacing(d)?;
    let base = match parity {
        TwistParity::Odd => 9.0 * SQRT_3,
        TwistParity::Even => 8.0 * SQRT_3,
    };
    Ok(base + 2.0 + 6.0 * f64::from(n) * d)
}

pub fn build_twist(n: u32, parity: TwistParity, d: f64) -> Result<RibbonDiagram> {
    build_twist_with(n, parity, d, AccordionPolicy::Smallest)
}

fn angle(radians: f64) -> FoldAngle {
    FoldAngle::new(radians).expect("clasp fold angles lie in (0, pi)")
}

/// One forward pass over ribbon piece CD: escape accordion from `v_S`,
/// V-units under the wraps, and a second escape accordion ending at the
/// returned point.
struct PieceCd {
    folds: Vec<(PlanarPoint, FoldRole)>,
    end: PlanarPoint,
}

fn piece_cd(accordion: &[PlanarPoint], wrap_points: &[PlanarPoint], second: &[PlanarPoint], k: usize) -> PieceCd {
    let wraps = wrap_points.len();
    let mut folds = Vec::with_capacity(2 * k + wraps);
    folds.extend(accordion[..k].iter().map(|&p| (p, FoldRole::EscapeAccordion)));
    folds.extend(wrap_points[..wraps - 1].iter().map(|&p| (p, FoldRole::AccordionExtension)));
    folds.extend(second[..k].iter().map(|&p| (p, FoldRole::EscapeAccordion)));
    PieceCd { folds, end: second[k] }
}

/// Lays out the twist knot with `2n + 1` (odd) or `2n` (even) half-wraps
/// closed by a clasp.
///
/// The loop starts at `E`, runs along piece AB through its accordion and
/// half-wraps into the clasp, crosses to piece CD with a fold-back join
/// (`U` for odd, `R` for even), traverses CD backwards to `E` and returns to
/// the start through a second fold-back join at `T`. Folds on the reversed
/// piece have their over/under kind swapped, since that distinction follows
/// the orientation of the loop.
pub fn build_twist_with(n: u32, parity: TwistParity, d: f64, policy: AccordionPolicy) -> Result<RibbonDiagram> {
    check_n(n)?;
    check_spacing(d)?;
    let theta = sixty_degrees();
    let k = resolve_folds(theta, d, policy)?;
    let total = match parity {
        TwistParity::Odd => 3 * k + 4 * n as usize + 9,
        TwistParity::Even => 3 * k + 4 * n as usize + 8,
    };
    check_vertex_budget(total)?;

    let params = ConstructionParams { family: parity.family(), theta, d, n, k };
    let d_acc = params.accordion_spacing();
    let (s, c, t) = (theta.half_sin(), theta.half_cos(), theta.half_tan());
    let clasp = clasp_distances();

    // both pieces share the accordion and wrap positions; the wrap chain
    // always runs to w_{2n+1}
    let v_s = PlanarPoint::ORIGIN;
    let e_point = offset(v_s, -t / 2.0, 0.5);
    let accordion = chain(v_s, theta, d_acc, k);
    let v_e = accordion[k];
    let wrap_points = chain(v_e, theta, d, 2 * n as usize);
    let w_last = wrap_points[2 * n as usize];
    let second = chain(w_last, theta, d_acc, k);
    let cd = piece_cd(&accordion, &wrap_points, &second, k);

    let mut b = LoopBuilder::with_capacity(total);
    let e = b.fold(e_point, FoldRole::Closure, FoldKind::Overfold, closure_angle(theta));
    b.mark_fold("E", e);
    for (i, &p) in accordion[..k].iter().enumerate() {
        let v = b.fold(p, FoldRole::EscapeAccordion, FoldKind::Overfold, theta);
        if i == 0 {
            b.mark_fold("v_S", v);
        }
    }
    let wrap_folds = params.half_wraps() as usize;
    for (i, &p) in wrap_points[..wrap_folds].iter().enumerate() {
        let v = b.fold(p, FoldRole::HalfWrap, wrap_kind(i), theta);
        b.mark_fold(wrap_label(i + 1), v);
        if i == 0 {
            b.mark_fold("v_E", v);
        }
    }
    if parity == TwistParity::Even {
        b.mark(wrap_label(2 * n as usize + 1), w_last);
    }
    b.mark("F", PlanarPoint::new(v_s.x, 0.5));
    b.mark("G", PlanarPoint::new(v_e.x, 0.5));

    let join = FoldAngle::fold_back();
    let right = angle(PI / 2.0);
    let sixth = angle(PI / 6.0);
    let (t_point, ledger) = match parity {
        TwistParity::Odd => {
            // end B climbs past P, turns down at N and is joined to end D at U
            let p = offset(w_last, t, 1.0);
            let m = offset(p, clasp.d_pm, 0.0);
            let nv = b.fold(offset(m, 0.0, clasp.d_mn), FoldRole::Clasp, FoldKind::Overfold, sixth);
            b.mark_fold("N", nv);
            let u = b.fold(PlanarPoint::new(m.x, 0.0), FoldRole::Join, FoldKind::Overfold, join);
            b.mark_fold("U", u);
            let sv = b.fold(PlanarPoint::new(m.x, 0.5), FoldRole::Clasp, FoldKind::Underfold, right);
            b.mark_fold("S", sv);
            let t_point = PlanarPoint::new(m.x + 0.5, 0.5);
            let j = b.fold(offset(t_point, clasp.d_jt, 0.0), FoldRole::Clasp, FoldKind::Underfold, theta);
            b.mark_fold("J", j);
            let v = b.fold(cd.end, FoldRole::Clasp, FoldKind::Underfold, theta);
            b.mark_fold("V", v);
            b.mark("P", p);
            b.mark("M", m);
            b.mark("Q", offset(m, 0.5, 0.0));
            b.mark("R", PlanarPoint::new(p.x, 0.5));

            let d_rt = clasp.d_pm + 0.5;
            let ledger = vec![
                LedgerEntry::new("d(E,v_S)", 5, 1.0 / (2.0 * c)),
                LedgerEntry::new("d_K(v_S,v_E)", 3, k as f64 * d_acc),
                LedgerEntry::new("d_K(w_1,w_{2n+1})", 2, 2.0 * f64::from(n) * d),
                LedgerEntry::new("d(E,F)", 6, t / 2.0),
                LedgerEntry::new("d(R,T)", 2, d_rt),
                LedgerEntry::new("d(v_S,v_E)", 2, k as f64 * d_acc * s),
                LedgerEntry::new("d(w_1,w_{2n+1})", 2, 2.0 * f64::from(n) * d * s),
                LedgerEntry::new("d_K(P,M)", 1, clasp.dk_mp),
                LedgerEntry::new("d(M,U)", 1, 1.0),
                LedgerEntry::new("d(J,T)", 1, clasp.d_jt),
                LedgerEntry::new("d_K(T,U)", 1, 1.0),
            ];
            (t_point, ledger)
        }
        TwistParity::Even => {
            // end B runs on below the folded edge to Y, climbs to R and is
            // joined to end D, which drops through S, U and W
            let x = offset(w_last, clasp.d_pm, 0.0);
            let y = b.fold(offset(x, 0.0, -clasp.d_mn), FoldRole::Clasp, FoldKind::Overfold, sixth);
            b.mark_fold("Y", y);
            let r = b.fold(offset(x, 0.0, 1.0), FoldRole::Join, FoldKind::Overfold, join);
            b.mark_fold("R", r);
            let sv = b.fold(offset(x, 0.0, 0.5), FoldRole::Clasp, FoldKind::Underfold, right);
            b.mark_fold("S", sv);
            let z = cd.end;
            let w = offset(z, clasp.d_pm, -clasp.d_mn);
            let u = b.fold(PlanarPoint::new(w.x, 0.5), FoldRole::Clasp, FoldKind::Underfold, right);
            b.mark_fold("U", u);
            let wv = b.fold(w, FoldRole::Clasp, FoldKind::Underfold, sixth);
            b.mark_fold("W", wv);
            b.mark("X", x);
            b.mark("Z", z);
            b.mark("V", PlanarPoint::new(w.x, 0.0));

            let ledger = vec![
                LedgerEntry::new("d(E,v_S)", 2, 1.0 / (2.0 * c)),
                LedgerEntry::new("d_K(v_S,v_E)", 3, k as f64 * d_acc),
                LedgerEntry::new("d_K(w_1,w_{2n+1})", 2, 2.0 * f64::from(n) * d),
                LedgerEntry::new("d(E,F)", 2, t / 2.0),
                LedgerEntry::new("d_K(M,P)", 2, clasp.dk_mp),
                LedgerEntry::new("d(v_S,v_E)", 3, k as f64 * d_acc * s),
                LedgerEntry::new("d(w_1,w_{2n+1})", 2, 2.0 * f64::from(n) * d * s),
                LedgerEntry::new("d(X,R)", 1, 1.0),
                LedgerEntry::new("d(P,M)", 2, clasp.d_pm),
                LedgerEntry::new("d(S,T)", 4, 0.5),
            ];
            (offset(x, 0.5, 0.5), ledger)
        }
    };

    for &(p, role) in cd.folds.iter().rev() {
        b.fold(p, role, FoldKind::Underfold, theta);
    }
    b.fold(e_point, FoldRole::Closure, FoldKind::Underfold, closure_angle(theta));
    let tv = b.fold(t_point, FoldRole::Join, FoldKind::Overfold, join);
    b.mark_fold("T", tv);
    b.finish(ledger, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::exact_spacing;
    use crate::geometry::{interior_angle, path_length};

    const ODD_LIMIT: f64 = 9.0 * SQRT_3 + 2.0;
    const EVEN_LIMIT: f64 = 8.0 * SQRT_3 + 2.0;

    #[test]
    fn formula_values() {
        assert!((twist_rib_formula(4, TwistParity::Odd, 0.0).unwrap() - 17.588457).abs() < 1e-6);
        assert!((twist_rib_formula(4, TwistParity::Even, 0.0).unwrap() - 15.856406).abs() < 1e-6);
        assert!((twist_rib_formula(2, TwistParity::Odd, 0.1).unwrap() - (ODD_LIMIT + 1.2)).abs() < 1e-12);
        assert!(twist_rib_formula(0, TwistParity::Odd, 0.1).is_err());
        assert!(build_twist(0, TwistParity::Even, 0.1).is_err());
    }

    #[test]
    fn lengths_match_formula() {
        for parity in [TwistParity::Odd, TwistParity::Even] {
            for (n, d) in [(1, 0.3), (2, 0.05), (5, 0.5), (17, 0.02)] {
                let knot = build_twist(n, parity, d).unwrap();
                let len = path_length(knot.centerline());
                let expected = twist_rib_formula(n, parity, d).unwrap();
                assert!((len - expected).abs() < 1e-9, "{parity:?} n={n} d={d}: {len} vs {expected}");
            }
        }
    }

    #[test]
    fn exact_mode_with_tiny_wraps() {
        let t = sixty_degrees();
        let d = exact_spacing(t, 2).unwrap();
        for (parity, limit) in [(TwistParity::Odd, ODD_LIMIT), (TwistParity::Even, EVEN_LIMIT)] {
            let knot = build_twist_with(1, parity, d, AccordionPolicy::Folds(2)).unwrap();
            assert!((path_length(knot.centerline()) - (limit + 6.0 * d)).abs() < 1e-9);
        }
    }

    #[test]
    fn recorded_angles_match_geometry() {
        for parity in [TwistParity::Odd, TwistParity::Even] {
            let knot = build_twist(3, parity, 0.1).unwrap();
            let pts = knot.centerline().distinct_vertices();
            let n = pts.len();
            for i in 0..n {
                let geometric = interior_angle(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
                let recorded = knot.folds()[i].fold.angle.radians();
                assert!((geometric - recorded).abs() < 1e-7, "{parity:?} vertex {i}: {geometric} vs {recorded}");
            }
        }
    }

    #[test]
    fn odd_clasp_landmarks() {
        let knot = build_twist(2, TwistParity::Odd, 0.1).unwrap();
        let lm = knot.landmarks();
        let clasp = clasp_distances();
        let (m, u, t, j, q) = (lm["M"].point, lm["U"].point, lm["T"].point, lm["J"].point, lm["Q"].point);
        assert!((m.distance(&u) - 1.0).abs() < 1e-12);
        assert!((j.distance(&t) - clasp.d_jt).abs() < 1e-12);
        assert!((lm["P"].point.distance(&m) - clasp.d_pm).abs() < 1e-12);
        // Q sits half a width beside M and half a width above T
        assert!((q.x - t.x).abs() < 1e-12 && (q.y - t.y - 0.5).abs() < 1e-12);
        // J lies on the second accordion's last rise from V
        let v = lm["V"].point;
        assert!((j.distance(&v) - 1.0 / SQRT_3).abs() < 1e-12);
        assert_eq!(knot.folds().iter().filter(|f| f.role == Some(FoldRole::HalfWrap)).count(), 5);
        assert_eq!(knot.fold_vertex_count(), 3 * knot.params().unwrap().k + 4 * 2 + 9);
    }

    #[test]
    fn even_clasp_landmarks() {
        let knot = build_twist(2, TwistParity::Even, 0.1).unwrap();
        let lm = knot.landmarks();
        let (s, u, x, r) = (lm["S"].point, lm["U"].point, lm["X"].point, lm["R"].point);
        assert!((x.distance(&r) - 1.0).abs() < 1e-12);
        assert!((s.distance(&lm["T"].point) - 0.5).abs() < 1e-12);
        assert!((s.distance(&u) - 2.0 / SQRT_3).abs() < 1e-12);
        assert!((lm["Y"].point.y + clasp_distances().d_mn).abs() < 1e-12);
        assert!((lm["W"].point.y - lm["Y"].point.y).abs() < 1e-12);
        assert_eq!(knot.folds().iter().filter(|f| f.role == Some(FoldRole::HalfWrap)).count(), 4);
        let joins: Vec<_> = knot.folds().iter().filter(|f| f.role == Some(FoldRole::Join)).collect();
        assert_eq!(joins.len(), 2);
        assert!(joins.iter().all(|f| f.fold.angle.radians() == 0.0));
    }

    #[test]
    fn ledger_sums() {
        for (parity, limit) in [(TwistParity::Odd, ODD_LIMIT), (TwistParity::Even, EVEN_LIMIT)] {
            let knot = build_twist(3, parity, 0.2).unwrap();
            assert!((knot.ledger_total() - (limit + 3.6)).abs() < 1e-9);
            let mults: u32 = knot.ledger().iter().map(|e| e.multiplicity).sum();
            assert_eq!(mults, if parity == TwistParity::Odd { 26 } else { 23 });
        }
    }
}
