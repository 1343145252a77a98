use serde::{Deserialize, Serialize};

use crate::analysis::RibbonlengthReport;
use crate::construction::RibbonDiagram;
use crate::error::{Result, RibbonError};

pub const SCHEMA_VERSION: &str = "1";

/// The JSON file format for diagrams.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub schema_version: String,
    pub diagram: RibbonDiagram,
    pub reports: Option<RibbonlengthReport>,
}

/// Serializes a diagram, with an optional report, as pretty-printed JSON.
/// Floats are written in shortest round-trip form.
pub fn to_document(diagram: &RibbonDiagram, report: Option<&RibbonlengthReport>) -> Result<String> {
    let doc = DiagramDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        diagram: diagram.clone(),
        reports: report.cloned(),
    };
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| RibbonError::Numerical(format!("document encoding failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn parse_error(e: serde_json::Error) -> RibbonError {
    RibbonError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Parses a document, checking its schema version before its contents and
/// revalidating every diagram invariant.
pub fn from_document(text: &str) -> Result<DiagramDocument> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    match value.get("schema_version") {
        Some(serde_json::Value::String(v)) if v == SCHEMA_VERSION => {}
        other => {
            let found = match other {
                Some(serde_json::Value::String(v)) => v.clone(),
                Some(v) => format!("non-string {v}"),
                None => "<missing>".to_string(),
            };
            return Err(RibbonError::Version { found, expected: SCHEMA_VERSION.to_string() });
        }
    }
    // parse again from the text so that errors carry a location
    serde_json::from_str(text).map_err(parse_error)
}
