use crate::analysis::BoundRow;
use crate::error::{Result, RibbonError};

pub const TABLE_HEADER: [&str; 4] = ["q", "crossing_number", "construction_bound", "kny_bound"];

/// CSV with six decimals on the real-valued columns. Rust's fixed-precision
/// formatting rounds exact ties to even.
pub fn table_csv(rows: &[BoundRow]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| RibbonError::Numerical(format!("csv output failed: {e}"));
    writer.write_record(TABLE_HEADER).map_err(io)?;
    for row in rows {
        writer
            .write_record([
                row.q.to_string(),
                row.crossing_number.to_string(),
                format!("{:.6}", row.construction_bound),
                format!("{:.6}", row.kny_bound),
            ])
            .map_err(io)?;
    }
    let bytes = writer.into_inner().map_err(|e| RibbonError::Numerical(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}
