use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "psdfft",
    version,
    about = "2D FFT with periodic-plus-smooth edge artifact removal"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split an image into periodic and smooth parts; write spectra, images and a report.
    Decompose(DecomposeArgs),
    /// Export one spectrum of an image, optionally after an artifact-removal method.
    Spectrum(SpectrumArgs),
    /// Cross-axis artifact energy of the raw, opsd, mirrored and windowed spectra.
    Compare(CompareArgs),
    /// Print DRAM-access and DFT-point costs for an n x m frame.
    Cost(CostArgs),
    /// Run the dataflow simulator on one frame and reconcile its trace with the cost model.
    PipelineSim(PipelineArgs),
    /// Time the optimized decomposition on a stream of frames.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Opsd,
    Psd,
    Mirror,
    Window,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WindowArg {
    Tukey,
    Hamming,
    Rect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Magnitude,
    LogMagnitude,
    Phase,
    Real,
    Imag,
}

#[derive(Debug, Args)]
pub struct WindowOpts {
    #[arg(long, value_enum, default_value_t = WindowArg::Tukey)]
    pub window: WindowArg,
    /// Tukey taper fraction in [0, 1].
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Input PGM (P2 or P5).
    pub input: PathBuf,
    /// opsd or psd.
    #[arg(long, value_enum, default_value_t = MethodArg::Opsd)]
    pub method: MethodArg,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Output PGM maxval, 255 or 65535.
    #[arg(long, default_value_t = 255)]
    pub maxval: u32,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub input: PathBuf,
    /// Spectrum of the raw image when omitted.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum, default_value_t = ModeArg::LogMagnitude)]
    pub mode: ModeArg,
    /// Keep DC at (0, 0) instead of centering it.
    #[arg(long)]
    pub no_shift: bool,
    #[command(flatten)]
    pub window: WindowOpts,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 255)]
    pub maxval: u32,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub window: WindowOpts,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Also write cost.json here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// Frame to simulate; a seeded random frame of --n x --m otherwise.
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[arg(long, default_value_t = 64)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    #[arg(long, default_value_t = 512)]
    pub m: usize,
    #[arg(long, default_value_t = 100)]
    pub frames: usize,
    #[arg(long, default_value_t = 3)]
    pub runs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write bench.json here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
