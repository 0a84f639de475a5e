//! Spectrum rendering, intensity rescaling and CSV matrix dumps.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::matrix::{ComplexMatrix, Matrix, RealMatrix, Sample};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    Magnitude,
    /// `ln(1 + |X|)`
    LogMagnitude,
    Phase,
    Real,
    Imag,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumExport {
    pub mode: SpectrumMode,
    /// DC moved to `(n/2, m/2)`.
    pub shift: bool,
    pub data: RealMatrix,
}

pub fn export_spectrum(x: &ComplexMatrix, mode: SpectrumMode, shift: bool) -> SpectrumExport {
    let data = x.map(|c| match mode {
        SpectrumMode::Magnitude => c.norm(),
        SpectrumMode::LogMagnitude => c.norm().ln_1p(),
        SpectrumMode::Phase => c.arg(),
        SpectrumMode::Real => c.re,
        SpectrumMode::Imag => c.im,
    });
    let data = if shift { fft_shift(&data) } else { data };
    SpectrumExport { mode, shift, data }
}

/// Rotates by `(n/2, m/2)` so index `(0,0)` lands at `(n/2, m/2)`.
/// An involution for even dims.
pub fn fft_shift<T: Sample>(x: &Matrix<T>) -> Matrix<T> {
    let (n, m) = x.dims();
    let (dn, dm) = (n / 2, m / 2);
    Matrix::from_fn(n, m, |i, j| x[((i + n - dn) % n, (j + m - dm) % m)]).expect("same shape")
}

/// Affine map applied before writing a real matrix as an image: `out = (v + offset) * gain`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rescale {
    pub offset: f64,
    pub gain: f64,
}

impl Rescale {
    /// Maps `[min, max]` of `x` onto `[0, maxval]`. A constant matrix maps to 0.
    pub fn fit(x: &RealMatrix, maxval: f64) -> Self {
        let lo = x.as_slice().iter().copied().fold(f64::INFINITY, f64::min);
        let hi = x
            .as_slice()
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let gain = if hi > lo { maxval / (hi - lo) } else { 1.0 };
        Self { offset: -lo, gain }
    }

    pub fn apply(&self, x: &RealMatrix) -> RealMatrix {
        x.map(|v| (v + self.offset) * self.gain)
    }
}

/// One row per line, comma-separated, shortest round-trip float formatting.
pub fn real_matrix_csv(x: &RealMatrix) -> String {
    let mut out = String::new();
    for i in 0..x.rows() {
        let line: Vec<String> = x.row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// One row per line; each entry occupies a `re,im` column pair.
pub fn complex_matrix_csv(x: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..x.rows() {
        for (j, c) in x.row(i).iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "{},{}", c.re, c.im).expect("write to string");
        }
        out.push('\n');
    }
    out
}
