use std::io::Write;

use serde::Serialize;
use tourneylab_core::sampling::BoundSpec;
use tourneylab_core::structure::{
    CleanOutcome, CutResult, GoodnessReport, MatchingCover, Partition,
};
use tourneylab_core::EstimateReport;

use crate::config::ExperimentConfig;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub report: EstimateReport,
    pub bound: BoundSpec,
    /// `estimate - bound`
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub version: &'static str,
    pub config: ExperimentConfig,
    pub n: usize,
    pub t: usize,
    pub rows: Vec<SweepRow>,
}

const CSV_HEADER: [&str; 6] = ["p", "estimate", "ci_low", "ci_high", "bound", "gap"];

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per row: `p,estimate,ci_low,ci_high,bound,gap`, each value in
    /// shortest round-trip form so it parses back to the JSON value.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for row in &self.rows {
            let r = &row.report;
            let cells = [r.p, r.point_estimate, r.ci_low, r.ci_high, row.bound.bound_value, row.gap];
            w.write_record(cells.iter().map(f64::to_string))?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactRow {
    pub p: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactReport {
    pub version: &'static str,
    pub n: usize,
    /// Entry `k` counts Hamiltonian subsets of size `k`.
    pub hamiltonian_subsets_by_size: Vec<u64>,
    pub rows: Vec<ExactRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "almost-directed cut")]
    AlmostDirectedCut,
    #[serde(rename = "no almost-directed cut")]
    NoAlmostDirectedCut,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub clean_eps: f64,
    pub cleaned: CleanOutcome,
    pub refined: Partition,
    pub moved_to_x: Vec<usize>,
    pub short_circuit: bool,
    pub refined_goodness: GoodnessReport,
    pub connectors: Vec<usize>,
    pub connector_count: usize,
    pub matching: MatchingCover,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub version: &'static str,
    pub n: usize,
    pub eps: f64,
    pub k: usize,
    pub t: usize,
    pub min_semidegree: usize,
    pub branch: Branch,
    pub cut: CutResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub min_semidegree: usize,
    pub components: usize,
    pub hamiltonian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
