//! 2D discrete Fourier transforms with edge-artifact removal by
//! periodic-plus-smooth decomposition.
//!
//! The crate provides:
//!
//! - a radix-2 FFT and row-column 2D transforms with work counters ([`fft`], [`fft2d`]),
//! - the decomposition `I = P + S`, including the optimized border-image
//!   spectrum that needs one column FFT instead of `m` ([`psd`]),
//! - mirroring and apodization baselines ([`baselines`]),
//! - closed-form memory and DFT-point costs ([`cost`]) reconciled against a
//!   functional simulator of the streaming accelerator dataflow ([`pipeline`]),
//! - PGM, CSV and JSON I/O ([`io`]) and a throughput benchmark ([`bench`]).

pub mod baselines;
pub mod bench;
pub mod cost;
pub mod counter;
pub mod error;
pub mod fft;
pub mod fft2d;
pub mod io;
pub mod matrix;
pub mod metrics;
pub mod pipeline;
pub mod psd;
pub mod synth;

pub use num_complex::Complex64;

pub use counter::OpCounter;
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, Matrix, RealMatrix};
