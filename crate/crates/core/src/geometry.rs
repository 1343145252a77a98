//! Planar primitives and the zigzag geometry shared by every construction.
//!
//! All lengths are measured in ribbon widths (the ribbon has width 1), so the
//! length of a centerline is its ribbonlength.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result, RibbonError};

/// Tolerance used when deciding whether a vector is unit length.
const UNIT_TOLERANCE: f64 = 1e-9;

/// A point of the plane, in ribbon-width units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const ORIGIN: PlanarPoint = PlanarPoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &PlanarPoint) -> f64 {
        (*other - *self).norm()
    }
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarVector {
    pub x: f64,
    pub y: f64,
}

impl PlanarVector {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(&self, other: &PlanarVector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` lies
    /// counterclockwise of `self`.
    pub fn cross(&self, other: &PlanarVector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn normalized(&self) -> PlanarVector {
        let n = self.norm();
        PlanarVector::new(self.x / n, self.y / n)
    }

    /// Counterclockwise rotation by `angle` radians.
    pub fn rotated(&self, angle: f64) -> PlanarVector {
        let (s, c) = angle.sin_cos();
        PlanarVector::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Counterclockwise perpendicular.
    pub fn perp(&self) -> PlanarVector {
        PlanarVector::new(-self.y, self.x)
    }
}

impl Sub for PlanarPoint {
    type Output = PlanarVector;
    fn sub(self, rhs: PlanarPoint) -> PlanarVector {
        PlanarVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<PlanarVector> for PlanarPoint {
    type Output = PlanarPoint;
    fn add(self, rhs: PlanarVector) -> PlanarPoint {
        PlanarPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<PlanarVector> for PlanarPoint {
    type Output = PlanarPoint;
    fn sub(self, rhs: PlanarVector) -> PlanarPoint {
        PlanarPoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for PlanarVector {
    type Output = PlanarVector;
    fn add(self, rhs: PlanarVector) -> PlanarVector {
        PlanarVector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Neg for PlanarVector {
    type Output = PlanarVector;
    fn neg(self) -> PlanarVector {
        PlanarVector::new(-self.x, -self.y)
    }
}

impl Mul<f64> for PlanarVector {
    type Output = PlanarVector;
    fn mul(self, rhs: f64) -> PlanarVector {
        PlanarVector::new(self.x * rhs, self.y * rhs)
    }
}

/// Interior angle of the centerline at a fold vertex, in radians.
///
/// Ordinary folds lie strictly inside (0, π). Two degenerate values can only be
/// obtained through dedicated constructors: [`FoldAngle::straight`] (π, no
/// turn), used to probe the zigzag code, and [`FoldAngle::fold_back`] (0, the
/// ribbon doubles back on itself), which is how the clasp constructions join
/// two ribbon ends lying on top of each other.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct FoldAngle(f64);

impl FoldAngle {
    pub fn new(theta: f64) -> Result<Self> {
        if theta.is_finite() && theta > 0.0 && theta < PI {
            Ok(Self(theta))
        } else {
            Err(domain(format!(
                "fold angle must lie in the open interval (0, pi), got {theta}"
            )))
        }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        Self::new(degrees.to_radians())
    }

    /// θ = π: the ribbon continues straight through the vertex.
    pub const fn straight() -> Self {
        Self(PI)
    }

    /// θ = 0: the ribbon is folded straight back onto itself.
    pub const fn fold_back() -> Self {
        Self(0.0)
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn is_degenerate(self) -> bool {
        self.0 <= 0.0 || self.0 >= PI
    }

    pub fn half_sin(self) -> f64 {
        (self.0 / 2.0).sin()
    }

    pub fn half_cos(self) -> f64 {
        (self.0 / 2.0).cos()
    }

    pub fn half_tan(self) -> f64 {
        (self.0 / 2.0).tan()
    }
}

impl TryFrom<f64> for FoldAngle {
    type Error = RibbonError;

    fn try_from(value: f64) -> Result<Self> {
        if value == 0.0 {
            Ok(Self::fold_back())
        } else if value == PI {
            Ok(Self::straight())
        } else {
            Self::new(value)
        }
    }
}

impl From<FoldAngle> for f64 {
    fn from(angle: FoldAngle) -> f64 {
        angle.0
    }
}

impl fmt::Display for FoldAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rad", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FoldSide {
    Left,
    Right,
}

impl FoldSide {
    pub fn opposite(self) -> FoldSide {
        match self {
            FoldSide::Left => FoldSide::Right,
            FoldSide::Right => FoldSide::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FoldKind {
    Overfold,
    Underfold,
}

impl FoldKind {
    pub fn opposite(self) -> FoldKind {
        match self {
            FoldKind::Overfold => FoldKind::Underfold,
            FoldKind::Underfold => FoldKind::Overfold,
        }
    }
}

/// One fold event of an oriented ribbon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldSpec {
    pub side: FoldSide,
    pub kind: FoldKind,
    pub angle: FoldAngle,
}

impl FoldSpec {
    pub fn new(side: FoldSide, kind: FoldKind, angle: FoldAngle) -> Self {
        Self { side, kind, angle }
    }
}

/// Parameters of an accordion zigzag: fold angle, vertex spacing and fold count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZigzagParams {
    pub theta: FoldAngle,
    pub d: f64,
    pub count: usize,
}

impl ZigzagParams {
    pub fn new(theta: FoldAngle, d: f64, count: usize) -> Result<Self> {
        if !(d.is_finite() && d > 0.0) {
            return Err(domain(format!("vertex spacing d must be positive, got {d}")));
        }
        if count == 0 {
            return Err(domain("a zigzag needs at least one fold"));
        }
        Ok(Self { theta, d, count })
    }
}

/// An ordered list of planar vertices. A closed path repeats its first vertex
/// at the end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct PolylinePath {
    vertices: Vec<PlanarPoint>,
    closed: bool,
}

#[derive(Deserialize)]
struct RawPath {
    vertices: Vec<PlanarPoint>,
    closed: bool,
}

impl TryFrom<RawPath> for PolylinePath {
    type Error = RibbonError;

    fn try_from(raw: RawPath) -> Result<Self> {
        PolylinePath::new(raw.vertices, raw.closed)
    }
}

/// Closure tolerance between the first and last vertex of a closed path.
pub const CLOSURE_TOLERANCE: f64 = 1e-12;

impl PolylinePath {
    pub fn new(vertices: Vec<PlanarPoint>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(domain("a path needs at least two vertices"));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(domain(format!("non-finite vertex {p:?}")));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(domain(format!("vertices {i} and {} coincide", i + 1)));
        }
        if closed {
            let first = vertices[0];
            let last = vertices[vertices.len() - 1];
            if first.distance(&last) > CLOSURE_TOLERANCE {
                return Err(domain(format!(
                    "closed path ends at {last:?}, which is not its start {first:?}"
                )));
            }
        }
        Ok(Self { vertices, closed })
    }

    /// Closes a cycle of distinct vertices by repeating the first one.
    pub fn closed_loop(mut cycle: Vec<PlanarPoint>) -> Result<Self> {
        let first = *cycle
            .first()
            .ok_or_else(|| domain("a closed path needs vertices"))?;
        cycle.push(first);
        Self::new(cycle, true)
    }

    pub fn vertices(&self) -> &[PlanarPoint] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Distinct vertices: for a closed path the repeated endpoint is dropped.
    pub fn distinct_vertices(&self) -> &[PlanarPoint] {
        if self.closed {
            &self.vertices[..self.vertices.len() - 1]
        } else {
            &self.vertices
        }
    }

    pub fn edge_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.vertices.windows(2).map(|w| w[0].distance(&w[1]))
    }
}

/// Neumaier-compensated sum; centerlines can have millions of short edges.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Sum of the Euclidean lengths of the path's segments.
pub fn path_length(path: &PolylinePath) -> f64 {
    compensated_sum(path.edge_lengths())
}

/// Direction leaving a fold vertex, given the unit direction arriving at it.
///
/// The outgoing segment makes interior angle `fold.angle` with the incoming
/// one, turning counterclockwise for a left fold and clockwise for a right one.
pub fn turn_at_fold(incoming: PlanarVector, fold: &FoldSpec) -> Result<PlanarVector> {
    let norm = incoming.norm();
    if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(domain(format!(
            "incoming direction must be a unit vector, has norm {norm}"
        )));
    }
    let turn = PI - fold.angle.radians();
    let signed = match fold.side {
        FoldSide::Left => turn,
        FoldSide::Right => -turn,
    };
    Ok(incoming.rotated(signed))
}

/// Planar distance between the first and last vertex of a V-unit.
pub fn v_unit_span(theta: FoldAngle, d: f64) -> Result<f64> {
    if !(d.is_finite() && d > 0.0) {
        return Err(domain(format!("vertex spacing d must be positive, got {d}")));
    }
    Ok(2.0 * d * theta.half_sin())
}

/// Unit direction of the zigzag edges that climb toward the fold vertices on
/// the upper line; descending edges mirror it in the x-axis.
pub(crate) fn ascending(theta: FoldAngle) -> PlanarVector {
    PlanarVector::new(theta.half_sin(), theta.half_cos())
}

pub(crate) fn descending(theta: FoldAngle) -> PlanarVector {
    PlanarVector::new(theta.half_sin(), -theta.half_cos())
}

/// Builds an open zigzag of `params.count` folds and `count + 1` edges of
/// length `d`, starting at `start`.
///
/// Vertex 0 is the start point and the folds sit on vertices `1..=count`.
/// Edges alternate between the two directions `(sin θ/2, ∓cos θ/2)`; when the
/// first fold is a left fold the entering edge descends, so the fold vertices
/// with odd index lie on the lower line. Fold sides alternate from
/// `start_side`, and `fold_kinds[i]` is the kind of fold `i`.
pub fn build_zigzag(
    params: &ZigzagParams,
    start: PlanarPoint,
    start_side: FoldSide,
    fold_kinds: &[FoldKind],
) -> Result<(PolylinePath, Vec<FoldSpec>)> {
    if fold_kinds.len() != params.count {
        return Err(domain(format!(
            "expected {} fold kinds, got {}",
            params.count,
            fold_kinds.len()
        )));
    }
    if !(params.d.is_finite() && params.d > 0.0) {
        return Err(domain(format!(
            "vertex spacing d must be positive, got {}",
            params.d
        )));
    }
    if !start.is_finite() {
        return Err(domain("start point must be finite"));
    }
    let (first, second) = match start_side {
        FoldSide::Left => (descending(params.theta), ascending(params.theta)),
        FoldSide::Right => (ascending(params.theta), descending(params.theta)),
    };
    debug_assert_eq!(first.y, -second.y);
    // Every edge has the same horizontal advance, so coordinates are computed
    // from the index rather than accumulated.
    let dx = params.d * params.theta.half_sin();
    let off_line = start.y + params.d * first.y;
    let vertices = (0..=params.count + 1)
        .map(|j| {
            let y = if j % 2 == 1 { off_line } else { start.y };
            PlanarPoint::new(start.x + j as f64 * dx, y)
        })
        .collect();
    let folds = fold_kinds
        .iter()
        .enumerate()
        .map(|(i, &kind)| {
            let side = if i % 2 == 0 { start_side } else { start_side.opposite() };
            FoldSpec::new(side, kind, params.theta)
        })
        .collect();
    Ok((PolylinePath::new(vertices, false)?, folds))
}

/// Smallest product k·d for which an escape accordion clears itself by one
/// ribbon width.
pub fn escape_min_kd(theta: FoldAngle) -> f64 {
    1.0 / (theta.half_cos() * theta.half_sin())
}

/// Outcome of [`clearance_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Clearance {
    pub satisfied: bool,
    /// Perpendicular separation between the ribbon entering and the ribbon
    /// leaving the accordion, `k·d·sin(θ/2)·cos(θ/2)`.
    pub clearance: f64,
    /// `clearance − 1`; zero at the tightest escape accordion.
    pub margin: f64,
}

/// Relative slack allowed when comparing a clearance with one width.
const CLEARANCE_SLACK: f64 = 1e-12;

/// Checks that `k` folds of spacing `d` separate the entering and leaving
/// ribbon by at least one width.
pub fn clearance_check(theta: FoldAngle, d: f64, k: usize) -> Result<Clearance> {
    if k < 2 || k % 2 == 1 {
        return Err(domain(format!(
            "an escape accordion has an even number of folds, at least 2 (got {k})"
        )));
    }
    if !(d.is_finite() && d > 0.0) {
        return Err(domain(format!("vertex spacing d must be positive, got {d}")));
    }
    let clearance = k as f64 * d * theta.half_sin() * theta.half_cos();
    let margin = clearance - 1.0;
    Ok(Clearance {
        satisfied: margin >= -CLEARANCE_SLACK,
        clearance,
        margin,
    })
}

/// Interior angle at `vertex` between the segments to `prev` and `next`.
pub fn interior_angle(prev: PlanarPoint, vertex: PlanarPoint, next: PlanarPoint) -> f64 {
    let a = prev - vertex;
    let b = next - vertex;
    a.cross(&b).abs().atan2(a.dot(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn left(theta: FoldAngle) -> FoldSpec {
        FoldSpec::new(FoldSide::Left, FoldKind::Overfold, theta)
    }

    #[test]
    fn fold_angle_rejects_endpoints() {
        assert!(FoldAngle::new(0.0).is_err());
        assert!(FoldAngle::new(PI).is_err());
        assert!(FoldAngle::new(f64::NAN).is_err());
        assert!(FoldAngle::new(-0.5).is_err());
        assert!(FoldAngle::new(1.0).is_ok());
        assert!(FoldAngle::straight().is_degenerate());
        assert!(FoldAngle::fold_back().is_degenerate());
    }

    #[test]
    fn straight_fold_does_not_turn() {
        let out = turn_at_fold(PlanarVector::new(1.0, 0.0), &left(FoldAngle::straight())).unwrap();
        assert!((out.x - 1.0).abs() < 1e-15 && out.y.abs() < 1e-15);
    }

    #[test]
    fn quarter_turn() {
        let theta = FoldAngle::new(PI / 2.0).unwrap();
        let out = turn_at_fold(PlanarVector::new(1.0, 0.0), &left(theta)).unwrap();
        assert!(out.x.abs() < 1e-15 && (out.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sixty_degree_left_fold() {
        let theta = FoldAngle::new(PI / 3.0).unwrap();
        let incoming = PlanarVector::new((PI / 6.0).sin(), -(PI / 6.0).cos());
        let out = turn_at_fold(incoming, &left(theta)).unwrap();
        assert!((out.x - (PI / 6.0).sin()).abs() < 1e-15);
        assert!((out.y - (PI / 6.0).cos()).abs() < 1e-15);
        // interior angle: reversed incoming against outgoing
        assert!(((-incoming).dot(&out) - (PI / 3.0).cos()).abs() < 1e-15);
    }

    #[test]
    fn turn_rejects_non_unit_direction() {
        let theta = FoldAngle::new(1.0).unwrap();
        assert!(matches!(
            turn_at_fold(PlanarVector::new(2.0, 0.0), &left(theta)),
            Err(RibbonError::Domain(_))
        ));
    }

    #[test]
    fn path_length_examples() {
        let seg = PolylinePath::new(vec![PlanarPoint::new(0.0, 0.0), PlanarPoint::new(3.0, 0.0)], false)
            .unwrap();
        assert_eq!(path_length(&seg), 3.0);
        let square = PolylinePath::closed_loop(vec![
            PlanarPoint::new(0.0, 0.0),
            PlanarPoint::new(1.0, 0.0),
            PlanarPoint::new(1.0, 1.0),
            PlanarPoint::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(path_length(&square), 4.0);
        let params = ZigzagParams::new(FoldAngle::new(PI / 3.0).unwrap(), 0.5, 4).unwrap();
        let (zz, _) = build_zigzag(&params, PlanarPoint::ORIGIN, FoldSide::Left, &[FoldKind::Overfold; 4])
            .unwrap();
        assert!((path_length(&zz) - 2.5).abs() < 1e-12);
    }

    #[test]
    fn path_rejects_bad_input() {
        assert!(PolylinePath::new(vec![PlanarPoint::ORIGIN], false).is_err());
        assert!(PolylinePath::new(vec![PlanarPoint::ORIGIN, PlanarPoint::ORIGIN], false).is_err());
        assert!(PolylinePath::new(
            vec![PlanarPoint::ORIGIN, PlanarPoint::new(1.0, 0.0), PlanarPoint::new(1.0, 1.0)],
            true
        )
        .is_err());
        assert!(PolylinePath::new(vec![PlanarPoint::ORIGIN, PlanarPoint::new(f64::INFINITY, 0.0)], false)
            .is_err());
    }

    #[test]
    fn v_unit_span_examples() {
        let t = FoldAngle::new(PI / 3.0).unwrap();
        assert!((v_unit_span(t, 0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((v_unit_span(FoldAngle::straight(), 0.7).unwrap() - 1.4).abs() < 1e-15);
        let right_angle = FoldAngle::new(PI / 2.0).unwrap();
        // chord of an actual two-edge polyline with one quarter-turn fold
        let (path, _) = build_zigzag(
            &ZigzagParams::new(right_angle, 1.0, 1).unwrap(),
            PlanarPoint::ORIGIN,
            FoldSide::Left,
            &[FoldKind::Overfold],
        )
        .unwrap();
        let v = path.vertices();
        let chord = v[0].distance(&v[2]);
        assert!((chord - 1.414214).abs() < 1e-6);
        assert!((v_unit_span(right_angle, 1.0).unwrap() - chord).abs() < 1e-12);
        assert!(v_unit_span(t, 0.0).is_err());
        assert!(v_unit_span(t, -1.0).is_err());
    }

    #[test]
    fn zigzag_examples() {
        let t = FoldAngle::new(PI / 3.0).unwrap();
        let (path, folds) = build_zigzag(
            &ZigzagParams::new(t, 1.0, 2).unwrap(),
            PlanarPoint::ORIGIN,
            FoldSide::Left,
            &[FoldKind::Overfold, FoldKind::Overfold],
        )
        .unwrap();
        let v = path.vertices();
        assert_eq!(v.len(), 4);
        for (i, p) in v.iter().enumerate() {
            assert!((p.x - 0.5 * i as f64).abs() < 1e-15);
        }
        assert!((v[3].x - 1.5).abs() < 1e-15);
        assert_eq!(folds[0].side, FoldSide::Left);
        assert_eq!(folds[1].side, FoldSide::Right);

        let (straight, _) = build_zigzag(
            &ZigzagParams::new(FoldAngle::straight(), 0.25, 1).unwrap(),
            PlanarPoint::ORIGIN,
            FoldSide::Left,
            &[FoldKind::Underfold],
        )
        .unwrap();
        assert!((path_length(&straight) - 0.5).abs() < 1e-15);
        assert!(straight.vertices().iter().all(|p| p.y.abs() < 1e-15));
    }

    #[test]
    fn zigzag_fold_kind_mismatch() {
        let t = FoldAngle::new(1.0).unwrap();
        let params = ZigzagParams::new(t, 1.0, 3).unwrap();
        assert!(build_zigzag(&params, PlanarPoint::ORIGIN, FoldSide::Left, &[FoldKind::Overfold]).is_err());
    }

    #[test]
    fn zigzag_turns_match_fold_specs() {
        let t = FoldAngle::new(1.2).unwrap();
        let kinds = [FoldKind::Underfold, FoldKind::Overfold, FoldKind::Underfold];
        let (path, folds) =
            build_zigzag(&ZigzagParams::new(t, 0.3, 3).unwrap(), PlanarPoint::ORIGIN, FoldSide::Left, &kinds)
                .unwrap();
        let v = path.vertices();
        for (i, fold) in folds.iter().enumerate() {
            let incoming = (v[i + 1] - v[i]).normalized();
            let expected = (v[i + 2] - v[i + 1]).normalized();
            let out = turn_at_fold(incoming, fold).unwrap();
            assert!((out.x - expected.x).abs() < 1e-12 && (out.y - expected.y).abs() < 1e-12);
            assert_eq!(fold.kind, kinds[i]);
        }
    }

    #[test]
    fn escape_min_kd_examples() {
        let t = FoldAngle::new(PI / 3.0).unwrap();
        assert!((escape_min_kd(t) - 4.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((escape_min_kd(t) - 2.309401).abs() < 1e-6);
        assert!((escape_min_kd(FoldAngle::new(PI / 2.0).unwrap()) - 2.0).abs() < 1e-12);
        assert!(escape_min_kd(FoldAngle::new(1e-9).unwrap()) > 1e8);
        assert!(escape_min_kd(FoldAngle::new(PI - 1e-9).unwrap()) > 1e8);
    }

    #[test]
    fn escape_min_kd_is_smallest_at_right_angle() {
        let best = (1..2000)
            .map(|i| i as f64 * PI / 2000.0)
            .map(|th| (th, escape_min_kd(FoldAngle::new(th).unwrap())))
            .fold((0.0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
        assert!((best.0 - PI / 2.0).abs() < 1e-12);
        assert!((best.1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn clearance_examples() {
        let t = FoldAngle::new(PI / 3.0).unwrap();
        for k in [2, 4, 10, 64] {
            let d = 4.0 / (3f64.sqrt() * k as f64);
            let c = clearance_check(t, d, k).unwrap();
            assert!(c.satisfied);
            assert!(c.margin.abs() < 1e-12);
        }
        let loose = clearance_check(t, 10.0, 2).unwrap();
        assert!(loose.satisfied && loose.clearance > 5.0);
        let tight = clearance_check(t, 0.01, 2).unwrap();
        assert!(!tight.satisfied);
        assert!(matches!(clearance_check(t, 1.0, 3), Err(RibbonError::Domain(_))));
        assert!(clearance_check(t, 1.0, 0).is_err());
    }

    proptest! {
        #[test]
        fn turn_preserves_norm(a in 0.0..(2.0 * PI), th in 0.01..(PI - 0.01), left_side: bool) {
            let incoming = PlanarVector::new(a.cos(), a.sin());
            let side = if left_side { FoldSide::Left } else { FoldSide::Right };
            let fold = FoldSpec::new(side, FoldKind::Overfold, FoldAngle::new(th).unwrap());
            let out = turn_at_fold(incoming, &fold).unwrap();
            prop_assert!((out.norm() - incoming.norm()).abs() <= 1e-15);
            prop_assert!(((-incoming).dot(&out) - th.cos()).abs() < 1e-12);
        }

        #[test]
        fn v_unit_chord(th in 0.01..(PI - 0.01), d in 1e-3..10.0) {
            let t = FoldAngle::new(th).unwrap();
            let (path, _) = build_zigzag(&ZigzagParams::new(t, d, 1).unwrap(), PlanarPoint::ORIGIN,
                FoldSide::Left, &[FoldKind::Overfold]).unwrap();
            let v = path.vertices();
            prop_assert!((v[0].distance(&v[2]) - v_unit_span(t, d).unwrap()).abs() < 1e-12);
        }

        #[test]
        fn even_zigzag_separation(th in 0.01..(PI - 0.01), d in 1e-3..2.0, m in 1usize..40) {
            let t = FoldAngle::new(th).unwrap();
            let k = 2 * m;
            let kinds = vec![FoldKind::Overfold; k];
            let (path, _) = build_zigzag(&ZigzagParams::new(t, d, k).unwrap(), PlanarPoint::ORIGIN,
                FoldSide::Left, &kinds).unwrap();
            let v = path.vertices();
            prop_assert!((v[0].distance(&v[k]) - k as f64 * d * t.half_sin()).abs() < 1e-12);
            prop_assert!((path_length(&path) - (k + 1) as f64 * d).abs() < 1e-12);
        }
    }
}
