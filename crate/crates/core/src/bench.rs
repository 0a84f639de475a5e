//! Wall-clock throughput of the optimized decomposition.
//!
//! Timing results are reported only; nothing here feeds a correctness check.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cost::{Algorithm, CostReport};
use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::fft2d::{check_fft_dims, fft_2d_with, Fft2dOptions};
use crate::matrix::RealMatrix;
use crate::psd::{boundary_data, opsd_boundary_spectrum, periodic_spectrum, smooth_spectrum};
use crate::synth::random_image;

/// Frame rate regarded as real-time for a 512x512 stream.
pub const REALTIME_FPS: f64 = 23.0;

/// Distinct frames cycled through during a run.
const FRAME_POOL: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub n: usize,
    pub m: usize,
    pub frames: usize,
    pub runs: usize,
    pub seed: u64,
    /// Worker threads for the row and column passes; 0 runs them sequentially.
    pub threads: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n: 512,
            m: 512,
            frames: 100,
            runs: 3,
            seed: 0,
            threads: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: usize,
    pub m: usize,
    pub frames: usize,
    pub ms_per_frame: Vec<f64>,
    pub mean_ms_per_frame: f64,
    /// Sample standard deviation over mean, across runs.
    pub coefficient_of_variation: f64,
    pub frames_per_second: f64,
    pub realtime_threshold_fps: f64,
    /// Counted DFT points per frame.
    pub opsd_dft_points: u64,
    pub psd_dft_points: u64,
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    check_fft_dims(config.n, config.m)?;
    if config.frames == 0 || config.runs == 0 {
        return Err(Error::param("bench needs at least one frame and one run"));
    }
    let pool_frames: Vec<RealMatrix> = (0..FRAME_POOL as u64)
        .map(|k| random_image(config.n, config.m, config.seed.wrapping_add(k)))
        .collect::<Result<_>>()?;
    let opts = Fft2dOptions {
        parallel: config.threads > 0,
        ..Default::default()
    };
    if config.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::param(format!("cannot start {} threads: {e}", config.threads)))?;
        return pool.install(|| timed_runs(config, &pool_frames, opts));
    }
    timed_runs(config, &pool_frames, opts)
}

fn timed_runs(
    config: &BenchConfig,
    pool: &[RealMatrix],
    opts: Fft2dOptions,
) -> Result<BenchReport> {
    // warm-up, and the per-frame count
    let mut per_frame = OpCounter::default();
    process_frame(&pool[0], opts, &mut per_frame)?;

    let mut ms_per_frame = Vec::with_capacity(config.runs);
    for _ in 0..config.runs {
        let mut counter = OpCounter::default();
        let start = Instant::now();
        for k in 0..config.frames {
            process_frame(&pool[k % FRAME_POOL], opts, &mut counter)?;
        }
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        ms_per_frame.push(elapsed / config.frames as f64);
    }

    let runs = ms_per_frame.len() as f64;
    let mean = ms_per_frame.iter().sum::<f64>() / runs;
    let cv = if ms_per_frame.len() > 1 {
        let var = ms_per_frame.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (runs - 1.0);
        var.sqrt() / mean
    } else {
        0.0
    };
    let psd = CostReport::for_algorithm(Algorithm::Psd, config.n as u64, config.m as u64)?;
    Ok(BenchReport {
        n: config.n,
        m: config.m,
        frames: config.frames,
        ms_per_frame,
        mean_ms_per_frame: mean,
        coefficient_of_variation: cv,
        frames_per_second: 1e3 / mean,
        realtime_threshold_fps: REALTIME_FPS,
        opsd_dft_points: per_frame.dft_points,
        psd_dft_points: psd.dft_points,
    })
}

fn process_frame(img: &RealMatrix, opts: Fft2dOptions, counter: &mut OpCounter) -> Result<()> {
    let ihat = fft_2d_with(&img.to_complex(), opts, counter)?;
    let bhat = opsd_boundary_spectrum(&boundary_data(img)?, counter)?;
    let phat = periodic_spectrum(&ihat, &smooth_spectrum(&bhat))?;
    std::hint::black_box(phat);
    Ok(())
}
