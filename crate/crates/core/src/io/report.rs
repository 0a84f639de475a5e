//! Machine-readable report documents (JSON) with stable key names.

use serde::{Deserialize, Serialize};

use crate::cost::CostReport;
use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::pipeline::{MemoryRegion, PipelineTrace};

/// Counters and per-region totals of a pipeline run, without the event list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub n: u64,
    pub m: u64,
    pub dft_points: u64,
    pub ext_mem_points: u64,
    pub event_count: u64,
    pub regions: Vec<MemoryRegion>,
}

impl TraceSummary {
    pub fn from_trace(trace: &PipelineTrace) -> Self {
        let (n, m) = trace.dims();
        let OpCounter {
            dft_points,
            ext_mem_points,
        } = trace.counter();
        Self {
            n: n as u64,
            m: m as u64,
            dft_points,
            ext_mem_points,
            event_count: trace.events().len() as u64,
            regions: trace.regions().to_vec(),
        }
    }
}

pub fn write_report<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("report types serialize infallibly")
}

pub fn parse_cost_report(doc: &str) -> Result<CostReport> {
    parse(doc)
}

pub fn parse_trace_summary(doc: &str) -> Result<TraceSummary> {
    parse(doc)
}

fn parse<T: for<'de> Deserialize<'de>>(doc: &str) -> Result<T> {
    serde_json::from_str(doc).map_err(|e| {
        // serde_json reports 1-based line/column; map to a byte offset
        let offset = doc
            .lines()
            .take(e.line().saturating_sub(1))
            .map(|l| l.len() + 1)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::format(offset, e.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Algorithm;
    use crate::pipeline::PipelineConfig;

    #[test]
    fn cost_report_document() {
        let r = CostReport::for_algorithm(Algorithm::Opsd, 512, 512).unwrap();
        let doc = write_report(&r);
        assert!(doc.contains("\"dram_points\": 787455"));
        assert!(doc.contains("\"algorithm\": \"opsd\""));
        assert_eq!(parse_cost_report(&doc).unwrap(), r);
    }

    #[test]
    fn empty_trace_document() {
        let trace = PipelineTrace::new(4, 4, &PipelineConfig::default()).unwrap();
        let summary = TraceSummary::from_trace(&trace);
        assert_eq!(
            (
                summary.dft_points,
                summary.ext_mem_points,
                summary.event_count
            ),
            (0, 0, 0)
        );
        assert!(summary
            .regions
            .iter()
            .all(|r| r.read_count == 0 && r.write_count == 0));
        let doc = write_report(&summary);
        assert_eq!(parse_trace_summary(&doc).unwrap(), summary);
    }

    #[test]
    fn parse_errors_are_format_errors() {
        assert!(matches!(
            parse_cost_report("{\"algorithm\": 3}"),
            Err(Error::Format { .. })
        ));
    }
}
