use std::collections::BTreeMap;

use super::{ConstructionParams, FoldRecord, FoldRole, Landmark, LedgerEntry, RibbonDiagram};
use crate::error::Result;
use crate::geometry::{FoldAngle, FoldKind, FoldSide, FoldSpec, PlanarPoint, PlanarVector, PolylinePath};

/// Below this |sin| of the turn, a vertex counts as not turning (fold-back or
/// straight) and its side falls back to the recorded default.
const TURN_EPSILON: f64 = 1e-9;

struct Pending {
    role: FoldRole,
    kind: FoldKind,
    angle: FoldAngle,
}

/// Accumulates the fold vertices of a closed centerline in traversal order.
pub(super) struct LoopBuilder {
    points: Vec<PlanarPoint>,
    pending: Vec<Pending>,
    landmarks: BTreeMap<String, Landmark>,
}

impl LoopBuilder {
    pub(super) fn with_capacity(capacity: usize) -> Self {
        Self {
            points: Vec::with_capacity(capacity),
            pending: Vec::with_capacity(capacity),
            landmarks: BTreeMap::new(),
        }
    }

    pub(super) fn fold(&mut self, point: PlanarPoint, role: FoldRole, kind: FoldKind, angle: FoldAngle) -> usize {
        self.points.push(point);
        self.pending.push(Pending { role, kind, angle });
        self.points.len() - 1
    }

    /// Labels a point that is not a centerline vertex.
    pub(super) fn mark(&mut self, label: impl Into<String>, point: PlanarPoint) {
        self.landmarks.insert(label.into(), Landmark { point, vertex: None });
    }

    pub(super) fn mark_fold(&mut self, label: impl Into<String>, vertex: usize) {
        let point = self.points[vertex];
        self.landmarks.insert(label.into(), Landmark { point, vertex: Some(vertex) });
    }

    /// Fold sides are read off the geometry: a counterclockwise turn is a
    /// left fold.
    pub(super) fn finish(self, ledger: Vec<LedgerEntry>, params: ConstructionParams) -> Result<RibbonDiagram> {
        let n = self.points.len();
        let pts = &self.points;
        let folds = self
            .pending
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let incoming = (pts[i] - pts[(i + n - 1) % n]).normalized();
                let outgoing = (pts[(i + 1) % n] - pts[i]).normalized();
                let turn = incoming.cross(&outgoing);
                let side = if turn < -TURN_EPSILON { FoldSide::Right } else { FoldSide::Left };
                FoldRecord { fold: FoldSpec::new(side, p.kind, p.angle), role: Some(p.role) }
            })
            .collect();
        let centerline = PolylinePath::closed_loop(self.points)?;
        RibbonDiagram::new(centerline, folds, self.landmarks, ledger, Some(params))
    }
}

/// Vertices of a zigzag that starts at a vertex on the lower line and climbs
/// first. Point 0 is `start`; there are `edges + 1` points, those with odd
/// index on the upper line `start.y + spacing·cos(θ/2)`.
pub(super) fn chain(start: PlanarPoint, theta: FoldAngle, spacing: f64, edges: usize) -> Vec<PlanarPoint> {
    let dx = spacing * theta.half_sin();
    let upper = start.y + spacing * theta.half_cos();
    (0..=edges)
        .map(|j| PlanarPoint::new(start.x + j as f64 * dx, if j % 2 == 1 { upper } else { start.y }))
        .collect()
}

/// Fold angle at a closure vertex, where the ribbon leaves a zigzag vertex
/// and turns onto a line parallel to the folded edge.
pub(super) fn closure_angle(theta: FoldAngle) -> FoldAngle {
    FoldAngle::new((std::f64::consts::PI - theta.radians()) / 2.0).expect("(pi - theta)/2 lies in (0, pi/2)")
}

pub(super) fn offset(p: PlanarPoint, dx: f64, dy: f64) -> PlanarPoint {
    p + PlanarVector::new(dx, dy)
}

/// Label `w_i` of the i-th half-wrap vertex.
pub(super) fn wrap_label(i: usize) -> String {
    format!("w_{i}")
}

/// Left underfold / right overfold alternation of a half-wrap sequence,
/// indexed from the first wrap.
pub(super) fn wrap_kind(i: usize) -> FoldKind {
    if i % 2 == 0 {
        FoldKind::Underfold
    } else {
        FoldKind::Overfold
    }
}
