//! CSV rows for benchmark sweeps.

use crate::error::Result;
use serde::Serialize;
use std::io::Write;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub construction: String,
    pub n: usize,
    pub phi: f64,
    pub eps: f64,
    pub delta: f64,
    pub edges: usize,
    #[serde(rename = "maxDilation")]
    pub max_dilation: f64,
    pub seconds: f64,
}

/// Writes a header line and one line per row.
pub fn write_bench_csv<W: Write>(out: W, rows: &[BenchRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
