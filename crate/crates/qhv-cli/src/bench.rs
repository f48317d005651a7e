//! Timing records and their CSV form.

use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};

/// One benchmark measurement. Failed measurements keep their row with
/// `seconds` and `value` empty and the message in `error`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub dataset: String,
    pub family: String,
    pub d: usize,
    pub n: usize,
    pub algo: String,
    pub run: usize,
    pub seconds: Option<f64>,
    pub value: Option<f64>,
    pub error: Option<String>,
    /// Recursion counters from exact runs; not part of the CSV.
    #[serde(skip)]
    pub stats: Option<qhv::RecursionStats>,
}

pub fn write_records<P: AsRef<Path>>(path: P, records: &[TimingRecord]) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_path(&path)
        .with_context(|| format!("cannot create {}", path.as_ref().display()))?;
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_records<P: AsRef<Path>>(path: P) -> anyhow::Result<Vec<TimingRecord>> {
    let mut reader = csv::Reader::from_path(&path)
        .with_context(|| format!("cannot open {}", path.as_ref().display()))?;
    let mut records = Vec::new();
    for row in reader.deserialize() {
        records.push(row?);
    }
    Ok(records)
}
