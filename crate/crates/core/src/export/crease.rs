use std::f64::consts::FRAC_PI_2;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::construction::{FoldRole, RibbonDiagram};
use crate::geometry::{compensated_sum, FoldSide};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CreaseParity {
    Mountain,
    Valley,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crease {
    /// Distance along the unfolded strip's centerline.
    pub position: f64,
    /// Angle between the crease and the strip edge, in radians.
    pub angle: f64,
    pub parity: CreaseParity,
    pub role: Option<FoldRole>,
}

/// The unfolded strip: one crease per fold vertex, in centerline order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CreasePattern {
    pub strip_length: f64,
    pub creases: Vec<Crease>,
}

impl CreasePattern {
    /// Index ranges of maximal runs of consecutive creases sharing a role.
    pub fn runs(&self) -> Vec<Range<usize>> {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 1..=self.creases.len() {
            if i == self.creases.len() || self.creases[i].role != self.creases[start].role {
                runs.push(start..i);
                start = i;
            }
        }
        runs
    }
}

/// Unfolds a diagram into its crease pattern.
///
/// The strip is cut at the midpoint of the closing edge that enters vertex 0
/// (the closure vertex before `v_S`), so every crease sits strictly inside
/// the strip. A fold of angle θ creases the strip at π/2 − θ/2 to its edge;
/// left folds are mountains and right folds valleys.
pub fn crease_pattern(diagram: &RibbonDiagram) -> CreasePattern {
    let lengths: Vec<f64> = diagram.centerline().edge_lengths().collect();
    let strip_length = crate::analysis::ribbonlength(diagram);
    let seam = lengths.last().copied().unwrap_or(0.0) / 2.0;
    // summing each prefix afresh would be quadratic; a running compensated
    // sum keeps the positions as accurate as the total
    let mut sum = 0.0;
    let mut carry = 0.0;
    let creases = diagram
        .folds()
        .iter()
        .enumerate()
        .map(|(i, record)| {
            let position = compensated_sum([seam, sum, carry]);
            let edge = lengths[i];
            let t = sum + edge;
            carry += if sum.abs() >= edge.abs() { (sum - t) + edge } else { (edge - t) + sum };
            sum = t;
            Crease {
                position,
                angle: FRAC_PI_2 - record.fold.angle.radians() / 2.0,
                parity: match record.fold.side {
                    FoldSide::Left => CreaseParity::Mountain,
                    FoldSide::Right => CreaseParity::Valley,
                },
                role: record.role,
            }
        })
        .collect();
    CreasePattern { strip_length, creases }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::construction::{build_moebius, sixty_degrees};
    use crate::geometry::FoldAngle;

    #[test]
    fn right_angle_accordion_creases_at_quarter_pi() {
        let m = build_moebius(FoldAngle::new(PI / 2.0).unwrap(), 0.2, 1).unwrap();
        let p = crease_pattern(&m);
        for c in p.creases.iter().filter(|c| c.role == Some(FoldRole::EscapeAccordion)) {
            assert!((c.angle - PI / 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn positions_and_runs() {
        let m = build_moebius(sixty_degrees(), 0.1, 2).unwrap();
        let p = crease_pattern(&m);
        let k = m.params().unwrap().k;
        assert_eq!(p.creases.len(), k + 5 + 2);
        assert!(p.creases.windows(2).all(|w| w[0].position < w[1].position));
        assert!(p.creases[0].position > 0.0 && p.creases.last().unwrap().position < p.strip_length);
        let runs = p.runs();
        assert_eq!(runs.len(), 4);
        let wraps = &p.creases[runs[2].clone()];
        for w in wraps.windows(2) {
            assert!((w[1].position - w[0].position - 0.1).abs() < 1e-12);
            assert_ne!(w[0].parity, w[1].parity);
        }
        assert!((p.creases[1].angle - PI / 3.0).abs() < 1e-15);
    }
}
