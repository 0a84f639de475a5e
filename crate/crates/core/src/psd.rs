//! Periodic-plus-smooth decomposition `I = P + S`.
//!
//! The smooth component is determined entirely by the border image `B`, which
//! is nonzero only on the outer rows and columns. Every interior column of `B`
//! is `b * (e_0 - e_{n-1})`, so its column FFT is `b * ν` with
//! `ν_k = 1 - w^{-k}`. The optimized path ([`opsd_boundary_spectrum`]) uses this
//! to replace `m` column FFTs with a single one.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::fft::{root_of_unity, Direction, Radix2Fft};
use crate::fft2d::{check_fft_dims, fft_2d, ifft_2d};
use crate::matrix::{ComplexMatrix, RealMatrix};

/// Imaginary residue allowed on `p` and `s`, relative to `max|I|`.
const RESIDUE_TOL: f64 = 1e-9;

/// Full border image `B = R + C`. Interior entries are exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderImage(RealMatrix);

impl BorderImage {
    pub fn as_matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RealMatrix {
        self.0
    }
}

/// The part of `B` the optimized path needs: its first row, first column and
/// `corner_sum = B(0,0) + B(0,m-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryData {
    first_row: Vec<f64>,
    first_col: Vec<f64>,
    corner_sum: f64,
}

impl BoundaryData {
    /// Both vectors need length >= 2 and must agree on the shared corner `B(0,0)`.
    pub fn from_parts(first_row: Vec<f64>, first_col: Vec<f64>) -> Result<Self> {
        if first_row.len() < 2 || first_col.len() < 2 {
            return Err(Error::size(format!(
                "boundary vectors need length >= 2, got row {} col {}",
                first_row.len(),
                first_col.len()
            )));
        }
        if first_row[0] != first_col[0] {
            return Err(Error::param(format!(
                "corner mismatch: first_row[0] = {} but first_col[0] = {}",
                first_row[0], first_col[0]
            )));
        }
        if first_row.iter().chain(&first_col).any(|v| !v.is_finite()) {
            return Err(Error::Numerical("non-finite boundary value".into()));
        }
        let corner_sum = first_row[0] + first_row[first_row.len() - 1];
        Ok(Self {
            first_row,
            first_col,
            corner_sum,
        })
    }

    pub fn zeros(n: usize, m: usize) -> Result<Self> {
        Self::from_parts(vec![0.0; m], vec![0.0; n])
    }

    /// Image height `n`.
    pub fn rows(&self) -> usize {
        self.first_col.len()
    }

    /// Image width `m`.
    pub fn cols(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[f64] {
        &self.first_row
    }

    pub fn first_col(&self) -> &[f64] {
        &self.first_col
    }

    pub fn corner_sum(&self) -> f64 {
        self.corner_sum
    }

    /// Distinct points stored: the corner is shared by both vectors.
    pub fn unique_points(&self) -> usize {
        self.rows() + self.cols() - 1
    }
}

/// `ν = (0, 1 - w^{n-1}, 1 - w^{n-2}, ..., 1 - w)`, the column FFT of `e_0 - e_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct NuVector(Vec<Complex64>);

impl NuVector {
    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_min_dims(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(Error::size(format!("image dims must be >= 2, got {n}x{m}")));
    }
    Ok(())
}

/// Row-wise discontinuity term R(i,j).
fn row_jump(img: &RealMatrix, i: usize, j: usize) -> f64 {
    let n = img.rows();
    let mut v = 0.0;
    if i == 0 {
        v += img[(n - 1, j)] - img[(0, j)];
    }
    if i == n - 1 {
        v += img[(0, j)] - img[(n - 1, j)];
    }
    v
}

/// Column-wise discontinuity term C(i,j).
fn col_jump(img: &RealMatrix, i: usize, j: usize) -> f64 {
    let m = img.cols();
    let mut v = 0.0;
    if j == 0 {
        v += img[(i, m - 1)] - img[(i, 0)];
    }
    if j == m - 1 {
        v += img[(i, 0)] - img[(i, m - 1)];
    }
    v
}

pub fn border_image(img: &RealMatrix) -> Result<BorderImage> {
    let (n, m) = img.dims();
    check_min_dims(n, m)?;
    let b = RealMatrix::from_fn(n, m, |i, j| row_jump(img, i, j) + col_jump(img, i, j))?;
    Ok(BorderImage(b))
}

/// First row and column of `border_image(img)`, without building the full matrix.
pub fn boundary_data(img: &RealMatrix) -> Result<BoundaryData> {
    let (n, m) = img.dims();
    check_min_dims(n, m)?;
    let first_row = (0..m)
        .map(|j| row_jump(img, 0, j) + col_jump(img, 0, j))
        .collect();
    let first_col = (0..n)
        .map(|i| row_jump(img, i, 0) + col_jump(img, i, 0))
        .collect();
    BoundaryData::from_parts(first_row, first_col)
}

pub fn nu_vector(n: usize) -> Result<NuVector> {
    if n < 2 {
        return Err(Error::size(format!("nu vector needs n >= 2, got {n}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut elems = vec![Complex64::new(0.0, 0.0); n];
    for k in 1..=n / 2 {
        // position k holds 1 - w^{n-k}
        elems[k] = one - root_of_unity(n - k, n);
        elems[n - k] = elems[k].conj();
    }
    Ok(NuVector(elems))
}

/// Full 2D spectrum of the border image from its boundary data.
///
/// Column stage: one FFT of the first column; interior columns are
/// `first_row[j] * ν`; the last column is `-B̂_{·0} + corner_sum * ν`. Each row
/// of that intermediate is assembled while it is read for the row FFT, so the
/// column-stage matrix is never stored.
///
/// Counts `n + nm` DFT points. External memory: the `n + m - 1` distinct
/// boundary points are loaded once, and the `nm` row-pass outputs are staged
/// and read back for the spectrum combination.
pub fn opsd_boundary_spectrum(bd: &BoundaryData, counter: &mut OpCounter) -> Result<ComplexMatrix> {
    let (n, m) = (bd.rows(), bd.cols());
    check_fft_dims(n, m)?;
    counter.add_ext_mem_points(bd.unique_points());

    let nu = nu_vector(n)?;
    let col_plan = Radix2Fft::new(n)?;
    let mut first_col_hat: Vec<Complex64> = bd
        .first_col
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    col_plan.process(&mut first_col_hat, Direction::Forward);
    counter.add_dft_points(n);

    let row_plan = Radix2Fft::new(m)?;
    let mut out = ComplexMatrix::zeros(n, m)?;
    for (i, (&col_i, &nu_i)) in first_col_hat.iter().zip(&nu.0).enumerate() {
        let row = out.row_mut(i);
        row[0] = col_i;
        for (dst, &r) in row[1..m - 1].iter_mut().zip(&bd.first_row[1..m - 1]) {
            *dst = nu_i * r;
        }
        row[m - 1] = -col_i + nu_i * bd.corner_sum;
        row_plan.process(row, Direction::Forward);
    }
    counter.add_dft_points(n * m);
    counter.add_ext_mem_points(n * m);
    Ok(out)
}

/// `Ŝ(s,t) = B̂(s,t) / (2cos(2πs/n) + 2cos(2πt/m) - 4)`, with `Ŝ(0,0) = 0`.
pub fn smooth_spectrum(bhat: &ComplexMatrix) -> ComplexMatrix {
    let (n, m) = bhat.dims();
    let row_terms: Vec<f64> = (0..n).map(|s| cos_term(s, n)).collect();
    let col_terms: Vec<f64> = (0..m).map(|t| cos_term(t, m)).collect();
    let mut out = bhat.clone();
    for s in 0..n {
        for t in 0..m {
            out[(s, t)] = if s == 0 && t == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                bhat[(s, t)] / (row_terms[s] + col_terms[t] - 4.0)
            };
        }
    }
    out
}

/// `2cos(2πk/len)`, exact where the cosine is 0 or ±1.
fn cos_term(k: usize, len: usize) -> f64 {
    if (4 * k).is_multiple_of(len) {
        return match 4 * k / len {
            0 => 2.0,
            1 | 3 => 0.0,
            _ => -2.0,
        };
    }
    2.0 * (2.0 * PI * k as f64 / len as f64).cos()
}

/// `P̂ = Î - Ŝ`.
pub fn periodic_spectrum(ihat: &ComplexMatrix, shat: &ComplexMatrix) -> Result<ComplexMatrix> {
    ihat.sub(shat)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Border-image spectrum from boundary data via the ν shortcut.
    Opsd,
    /// Border-image spectrum by a full 2D FFT of the materialized border image.
    NaivePsd,
}

#[derive(Clone, Debug)]
pub struct Spectra {
    pub ihat: ComplexMatrix,
    pub bhat: ComplexMatrix,
    pub shat: ComplexMatrix,
    pub phat: ComplexMatrix,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub spectra: Spectra,
    pub p: RealMatrix,
    pub s: RealMatrix,
}

impl Decomposition {
    pub fn phat(&self) -> &ComplexMatrix {
        &self.spectra.phat
    }

    pub fn shat(&self) -> &ComplexMatrix {
        &self.spectra.shat
    }
}

/// Spectral half of [`decompose`]: `Î`, `B̂`, `Ŝ`, `P̂` without the inverse transforms.
pub fn decompose_spectra(
    img: &RealMatrix,
    method: Method,
    counter: &mut OpCounter,
) -> Result<Spectra> {
    let (n, m) = img.dims();
    check_fft_dims(n, m)?;
    let ihat = fft_2d(&img.to_complex(), counter)?;
    let bhat = match method {
        Method::Opsd => opsd_boundary_spectrum(&boundary_data(img)?, counter)?,
        Method::NaivePsd => fft_2d(&border_image(img)?.0.to_complex(), counter)?,
    };
    let shat = smooth_spectrum(&bhat);
    let phat = periodic_spectrum(&ihat, &shat)?;
    Ok(Spectra {
        ihat,
        bhat,
        shat,
        phat,
    })
}

/// Splits `img` into periodic `p` and smooth `s` with `p + s = img`.
pub fn decompose(
    img: &RealMatrix,
    method: Method,
    counter: &mut OpCounter,
) -> Result<Decomposition> {
    let spectra = decompose_spectra(img, method, counter)?;
    let scale = img.max_abs();
    let p = real_part_checked(&ifft_2d(&spectra.phat)?, scale, "p")?;
    let s = real_part_checked(&ifft_2d(&spectra.shat)?, scale, "s")?;
    Ok(Decomposition { spectra, p, s })
}

fn real_part_checked(x: &ComplexMatrix, scale: f64, name: &str) -> Result<RealMatrix> {
    let residue = x.im().max_abs();
    if residue > RESIDUE_TOL * scale.max(1.0) {
        return Err(Error::Numerical(format!(
            "imaginary residue {residue:e} in {name} exceeds tolerance"
        )));
    }
    Ok(x.re())
}
