//! Closed-form DRAM-access and DFT-point costs, and reconciliation with counters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counter::OpCounter;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Mirroring,
    Psd,
    Opsd,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Mirroring, Algorithm::Psd, Algorithm::Opsd];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Mirroring => "mirroring",
            Algorithm::Psd => "psd",
            Algorithm::Opsd => "opsd",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostReport {
    pub algorithm: Algorithm,
    pub n: u64,
    pub m: u64,
    pub dram_points: u64,
    pub dft_points: u64,
}

impl CostReport {
    /// mirroring: 8nm / 8nm; psd: 4nm / 4nm; opsd: 3nm+n+m-1 / 3nm+m.
    pub fn for_algorithm(algorithm: Algorithm, n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::size(format!(
                "cost model needs n, m >= 1, got {n}x{m}"
            )));
        }
        let nm = n * m;
        let (dram_points, dft_points) = match algorithm {
            Algorithm::Mirroring => (8 * nm, 8 * nm),
            Algorithm::Psd => (4 * nm, 4 * nm),
            Algorithm::Opsd => (3 * nm + n + m - 1, 3 * nm + m),
        };
        Ok(Self {
            algorithm,
            n,
            m,
            dram_points,
            dft_points,
        })
    }

    /// `key=value` lines, one per field.
    pub fn to_kv_text(&self) -> String {
        format!(
            "algorithm={}\nn={}\nm={}\ndram_points={}\ndft_points={}\n",
            self.algorithm, self.n, self.m, self.dram_points, self.dft_points
        )
    }
}

/// Rows of the comparison table, in mirroring, psd, opsd order.
pub fn cost_table(n: u64, m: u64) -> Result<[CostReport; 3]> {
    Ok([
        CostReport::for_algorithm(Algorithm::Mirroring, n, m)?,
        CostReport::for_algorithm(Algorithm::Psd, n, m)?,
        CostReport::for_algorithm(Algorithm::Opsd, n, m)?,
    ])
}

/// Counters from a finished run, tagged with what produced them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub n: u64,
    pub m: u64,
    pub counter: OpCounter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconciliation {
    pub algorithm: Algorithm,
    pub n: u64,
    pub m: u64,
    /// counted - formula
    pub dft_delta: i64,
    /// counted - formula
    pub dram_delta: i64,
}

impl Reconciliation {
    pub fn is_exact(&self) -> bool {
        self.dft_delta == 0 && self.dram_delta == 0
    }
}

impl fmt::Display for Reconciliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "exact match")
        } else {
            write!(
                f,
                "mismatch (dft_delta={}, dram_delta={})",
                self.dft_delta, self.dram_delta
            )
        }
    }
}

/// Compares counted points against the closed forms. Metadata must match.
pub fn reconcile(report: &CostReport, run: &RunRecord) -> Result<Reconciliation> {
    if report.algorithm != run.algorithm || report.n != run.n || report.m != run.m {
        return Err(Error::param(format!(
            "report is {} {}x{} but run is {} {}x{}",
            report.algorithm, report.n, report.m, run.algorithm, run.n, run.m
        )));
    }
    Ok(Reconciliation {
        algorithm: report.algorithm,
        n: report.n,
        m: report.m,
        dft_delta: run.counter.dft_points as i64 - report.dft_points as i64,
        dram_delta: run.counter.ext_mem_points as i64 - report.dram_points as i64,
    })
}
