//! Two-dimensional transforms by row-column decomposition, plus the direct double-sum DFT.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::fft::{check_power_of_two, Direction, Radix2Fft};
use crate::matrix::ComplexMatrix;

/// Which 1D pass runs first. Both give the same transform.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PassOrder {
    #[default]
    RowsFirst,
    ColumnsFirst,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Fft2dOptions {
    pub order: PassOrder,
    /// Run the 1D transforms of each pass on the current rayon pool.
    pub parallel: bool,
}

/// Forward 2D FFT, rows then columns, sequential.
///
/// Each pass produces `n*m` DFT points and reads `n*m` points from external
/// memory, so `counter` grows by `2nm` in both fields.
pub fn fft_2d(input: &ComplexMatrix, counter: &mut OpCounter) -> Result<ComplexMatrix> {
    fft_2d_with(input, Fft2dOptions::default(), counter)
}

pub fn fft_2d_with(
    input: &ComplexMatrix,
    opts: Fft2dOptions,
    counter: &mut OpCounter,
) -> Result<ComplexMatrix> {
    transform_2d(input, Direction::Forward, opts, counter)
}

/// Inverse 2D FFT with `1/(nm)` normalization.
pub fn ifft_2d(input: &ComplexMatrix) -> Result<ComplexMatrix> {
    let mut scratch = OpCounter::default();
    transform_2d(
        input,
        Direction::Inverse,
        Fft2dOptions::default(),
        &mut scratch,
    )
}

fn transform_2d(
    input: &ComplexMatrix,
    dir: Direction,
    opts: Fft2dOptions,
    counter: &mut OpCounter,
) -> Result<ComplexMatrix> {
    let (n, m) = input.dims();
    check_power_of_two(n, "row count")?;
    check_power_of_two(m, "column count")?;

    let mut work = input.clone();
    match opts.order {
        PassOrder::RowsFirst => {
            *counter += row_pass(&mut work, dir, opts.parallel);
            *counter += column_pass(&mut work, dir, opts.parallel);
        }
        PassOrder::ColumnsFirst => {
            *counter += column_pass(&mut work, dir, opts.parallel);
            *counter += row_pass(&mut work, dir, opts.parallel);
        }
    }
    Ok(work)
}

/// Transforms every row in place. A length-1 row is its own transform.
pub(crate) fn row_pass(mat: &mut ComplexMatrix, dir: Direction, parallel: bool) -> OpCounter {
    let (n, m) = mat.dims();
    let mut pass = if m >= 2 {
        let plan = Radix2Fft::new(m).expect("power-of-two checked by caller");
        let rows = mat.as_mut_slice().chunks_mut(m);
        if parallel {
            rows.collect::<Vec<_>>()
                .into_par_iter()
                .map(|row| {
                    plan.process(row, dir);
                    OpCounter::dft(row.len())
                })
                .sum()
        } else {
            rows.map(|row| {
                plan.process(row, dir);
                OpCounter::dft(row.len())
            })
            .sum()
        }
    } else {
        OpCounter::dft(n * m)
    };
    pass.add_ext_mem_points(n * m);
    pass
}

pub(crate) fn column_pass(mat: &mut ComplexMatrix, dir: Direction, parallel: bool) -> OpCounter {
    let mut t = mat.transpose();
    let counter = row_pass(&mut t, dir, parallel);
    *mat = t.transpose();
    counter
}

/// Direct evaluation of `X(s,t) = Σ_i Σ_j I(i,j) exp(-2πi(si/n + tj/m))`, any dims.
///
/// O(n²m²). Phases are looked up in a table of `lcm(n, m)` roots so every term
/// costs one complex multiply-add.
pub fn naive_dft_2d(input: &ComplexMatrix) -> ComplexMatrix {
    let (n, m) = input.dims();
    let period = lcm(n, m);
    let (row_step, col_step) = (period / n, period / m);
    let roots: Vec<Complex64> = (0..period)
        .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / period as f64))
        .collect();

    let data = input.as_slice();
    let mut out = Vec::with_capacity(n * m);
    for s in 0..n {
        for t in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..n {
                let base = (s * i % n) * row_step;
                let inc = (t % m) * col_step;
                let mut phase = base;
                for &x in &data[i * m..(i + 1) * m] {
                    acc += x * roots[phase];
                    phase += inc;
                    if phase >= period {
                        phase -= period;
                    }
                }
            }
            out.push(acc);
        }
    }
    ComplexMatrix::from_vec(n, m, out).expect("shape preserved")
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Dims accepted by the decomposition and pipeline: powers of two, at least 2.
pub fn check_fft_dims(n: usize, m: usize) -> Result<()> {
    check_power_of_two(n, "row count")?;
    check_power_of_two(m, "column count")?;
    if n < 2 || m < 2 {
        return Err(Error::size(format!("dims must be >= 2, got {n}x{m}")));
    }
    Ok(())
}
