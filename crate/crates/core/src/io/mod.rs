//! Image, matrix and report I/O.

mod pgm;
mod report;
mod spectrum;

pub use pgm::{read_pgm, write_pgm};
pub use report::{parse_cost_report, parse_trace_summary, write_report, TraceSummary};
pub use spectrum::{
    complex_matrix_csv, export_spectrum, fft_shift, real_matrix_csv, Rescale, SpectrumExport,
    SpectrumMode,
};
