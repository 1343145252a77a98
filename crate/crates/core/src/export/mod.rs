//! Crease patterns and every file format the library emits: SVG renderings,
//! JSON diagram documents and CSV bound tables.

mod crease;
mod document;
mod svg;
mod table;

pub use crease::{crease_pattern, Crease, CreaseParity, CreasePattern};
pub use document::{from_document, to_document, DiagramDocument, SCHEMA_VERSION};
pub use svg::{render_crease, render_diagram, SvgOptions, DEFAULT_LAYER_OFFSET};
pub use table::{table_csv, TABLE_HEADER};
