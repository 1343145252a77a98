use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ConstructionParams;
use crate::error::{domain, Result, RibbonError};
use crate::geometry::{path_length, FoldAngle, FoldKind, FoldSide, FoldSpec, PlanarPoint, PolylinePath};

/// Maximum disagreement between a ledger total and the centerline length.
pub const LEDGER_TOLERANCE: f64 = 1e-9;

/// What part of a construction a fold belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FoldRole {
    EscapeAccordion,
    /// V-units lengthening an accordion alongside the half-wraps.
    AccordionExtension,
    HalfWrap,
    /// Folds carrying the ribbon ends behind the accordion.
    Closure,
    Clasp,
    /// Fold line joining two ribbon ends that lie on top of each other.
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldRecord {
    pub fold: FoldSpec,
    /// `None` for diagrams that were not produced by a family builder.
    pub role: Option<FoldRole>,
}

/// A labelled point; `vertex` is set when the point is a centerline vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Landmark {
    pub point: PlanarPoint,
    pub vertex: Option<usize>,
}

/// One named term of a ribbonlength sum, counted `multiplicity` times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub name: String,
    pub multiplicity: u32,
    pub length: f64,
}

impl LedgerEntry {
    pub fn new(name: impl Into<String>, multiplicity: u32, length: f64) -> Self {
        Self { name: name.into(), multiplicity, length }
    }

    pub fn total(&self) -> f64 {
        f64::from(self.multiplicity) * self.length
    }
}

/// A closed folded-ribbon knot diagram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct RibbonDiagram {
    centerline: PolylinePath,
    folds: Vec<FoldRecord>,
    landmarks: BTreeMap<String, Landmark>,
    ledger: Vec<LedgerEntry>,
    params: Option<ConstructionParams>,
}

#[derive(Deserialize)]
struct RawDiagram {
    centerline: PolylinePath,
    folds: Vec<FoldRecord>,
    landmarks: BTreeMap<String, Landmark>,
    ledger: Vec<LedgerEntry>,
    params: Option<ConstructionParams>,
}

impl TryFrom<RawDiagram> for RibbonDiagram {
    type Error = RibbonError;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        RibbonDiagram::new(raw.centerline, raw.folds, raw.landmarks, raw.ledger, raw.params)
    }
}

impl RibbonDiagram {
    /// Assembles a diagram, checking closure, fold count, landmark indices and
    /// (when a ledger is present) that the ledger adds up to the centerline
    /// length.
    pub fn new(
        centerline: PolylinePath,
        folds: Vec<FoldRecord>,
        landmarks: BTreeMap<String, Landmark>,
        ledger: Vec<LedgerEntry>,
        params: Option<ConstructionParams>,
    ) -> Result<Self> {
        if !centerline.is_closed() {
            return Err(domain("a ribbon diagram needs a closed centerline"));
        }
        let vertex_count = centerline.distinct_vertices().len();
        if folds.len() != vertex_count {
            return Err(domain(format!(
                "{} fold records for {vertex_count} centerline vertices",
                folds.len()
            )));
        }
        for (label, mark) in &landmarks {
            if !mark.point.is_finite() {
                return Err(domain(format!("landmark {label} is not finite")));
            }
            if let Some(v) = mark.vertex {
                if v >= vertex_count {
                    return Err(domain(format!("landmark {label} refers to missing vertex {v}")));
                }
            }
        }
        if !ledger.is_empty() {
            let total = ledger_total(&ledger);
            let length = path_length(&centerline);
            if !((total - length).abs() <= LEDGER_TOLERANCE) {
                return Err(domain(format!(
                    "ledger total {total} disagrees with centerline length {length}"
                )));
            }
        }
        Ok(Self { centerline, folds, landmarks, ledger, params })
    }

    /// A diagram for a bare closed polygon: every vertex is a left overfold
    /// with its geometric interior angle and no construction role.
    pub fn from_polygon(cycle: Vec<PlanarPoint>) -> Result<Self> {
        let centerline = PolylinePath::closed_loop(cycle)?;
        let pts = centerline.distinct_vertices();
        let n = pts.len();
        let folds = (0..n)
            .map(|i| {
                let theta = crate::geometry::interior_angle(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
                let angle = FoldAngle::try_from(theta)?;
                let turn = (pts[i] - pts[(i + n - 1) % n]).cross(&(pts[(i + 1) % n] - pts[i]));
                let side = if turn < 0.0 { FoldSide::Right } else { FoldSide::Left };
                Ok(FoldRecord { fold: FoldSpec::new(side, FoldKind::Overfold, angle), role: None })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(centerline, folds, BTreeMap::new(), Vec::new(), None)
    }

    pub fn centerline(&self) -> &PolylinePath {
        &self.centerline
    }

    pub fn folds(&self) -> &[FoldRecord] {
        &self.folds
    }

    pub fn landmarks(&self) -> &BTreeMap<String, Landmark> {
        &self.landmarks
    }

    pub fn landmark(&self, label: &str) -> Option<&Landmark> {
        self.landmarks.get(label)
    }

    pub fn ledger(&self) -> &[LedgerEntry] {
        &self.ledger
    }

    pub fn ledger_entry(&self, name: &str) -> Option<&LedgerEntry> {
        self.ledger.iter().find(|e| e.name == name)
    }

    pub fn params(&self) -> Option<&ConstructionParams> {
        self.params.as_ref()
    }

    pub fn ledger_total(&self) -> f64 {
        ledger_total(&self.ledger)
    }

    pub fn fold_vertex_count(&self) -> usize {
        self.folds.len()
    }
}

fn ledger_total(ledger: &[LedgerEntry]) -> f64 {
    crate::geometry::compensated_sum(ledger.iter().map(LedgerEntry::total))
}
