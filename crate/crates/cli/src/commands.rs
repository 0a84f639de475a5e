use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use psdfft::baselines::{apodize, mirror_image, WindowKind, WindowSpec};
use psdfft::bench::{run_bench, BenchConfig};
use psdfft::cost::{cost_table, reconcile, Algorithm, CostReport};
use psdfft::fft2d::fft_2d;
use psdfft::io::{
    complex_matrix_csv, export_spectrum, read_pgm, real_matrix_csv, write_pgm, write_report,
    Rescale, SpectrumMode, TraceSummary,
};
use psdfft::metrics::cross_axis_energy;
use psdfft::pipeline::{pack_frame, run_pipeline};
use psdfft::psd::{self, decompose_spectra, Method};
use psdfft::synth::random_image;
use psdfft::{ComplexMatrix, OpCounter, RealMatrix};
use serde_json::json;

use crate::args::{
    BenchArgs, CompareArgs, CostArgs, DecomposeArgs, MethodArg, ModeArg, PipelineArgs,
    SpectrumArgs, WindowArg, WindowOpts,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Lib(psdfft::Error),
}

impl CliError {
    pub const USAGE: u8 = 2;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => 1,
            CliError::Usage(_) => Self::USAGE,
            CliError::Lib(psdfft::Error::Format { .. }) => 3,
            CliError::Lib(psdfft::Error::Size(_)) => 4,
            CliError::Lib(psdfft::Error::Parameter(_)) => 5,
            CliError::Lib(_) => 6,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<psdfft::Error> for CliError {
    fn from(e: psdfft::Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult = Result<(), CliError>;

fn load(path: &Path) -> Result<RealMatrix, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
    Ok(read_pgm(&bytes)?)
}

fn save(dir: &Path, name: &str, contents: impl AsRef<[u8]>) -> CliResult {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_owned(), e))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| CliError::Io(path, e))
}

/// Rescales to the full output range, writes a P5 image and returns the mapping used.
fn save_image(dir: &Path, name: &str, img: &RealMatrix, maxval: u32) -> Result<Rescale, CliError> {
    let rescale = Rescale::fit(img, maxval as f64);
    save(dir, name, write_pgm(&rescale.apply(img), maxval)?)?;
    Ok(rescale)
}

fn check_maxval(maxval: u32) -> CliResult {
    if maxval != 255 && maxval != 65535 {
        return Err(CliError::Usage(format!(
            "--maxval must be 255 or 65535, got {maxval}"
        )));
    }
    Ok(())
}

fn window_spec(opts: &WindowOpts) -> Result<WindowSpec, CliError> {
    let kind = match opts.window {
        WindowArg::Tukey => WindowKind::Tukey,
        WindowArg::Hamming => WindowKind::Hamming,
        WindowArg::Rect => WindowKind::Rect,
    };
    Ok(WindowSpec::new(kind, opts.alpha)?)
}

fn rescale_json(r: &Rescale) -> serde_json::Value {
    json!({ "offset": r.offset, "gain": r.gain })
}

pub fn decompose(args: &DecomposeArgs) -> CliResult {
    let method = match args.method {
        MethodArg::Opsd => Method::Opsd,
        MethodArg::Psd => Method::NaivePsd,
        other => {
            return Err(CliError::Usage(format!(
                "decompose supports --method opsd or psd, not {other:?}"
            )))
        }
    };
    check_maxval(args.maxval)?;
    let img = load(&args.input)?;
    let mut counter = OpCounter::default();
    let d = psd::decompose(&img, method, &mut counter)?;

    let out = &args.out;
    let log_spectrum =
        |x: &ComplexMatrix| export_spectrum(x, SpectrumMode::LogMagnitude, true).data;
    let r_ihat = save_image(
        out,
        "spectrum_original.pgm",
        &log_spectrum(&d.spectra.ihat),
        args.maxval,
    )?;
    let r_phat = save_image(
        out,
        "spectrum_periodic.pgm",
        &log_spectrum(d.phat()),
        args.maxval,
    )?;
    let r_shat = save_image(
        out,
        "spectrum_smooth.pgm",
        &log_spectrum(d.shat()),
        args.maxval,
    )?;
    let r_p = save_image(out, "periodic.pgm", &d.p, args.maxval)?;
    let r_s = save_image(out, "smooth.pgm", &d.s, args.maxval)?;
    save(out, "phat.csv", complex_matrix_csv(d.phat()))?;
    save(out, "shat.csv", complex_matrix_csv(d.shat()))?;

    let energy_original = cross_axis_energy(&d.spectra.ihat);
    let energy_periodic = cross_axis_energy(d.phat());
    let artifact_energy = cross_axis_energy(d.shat());
    let (n, m) = img.dims();
    let report = json!({
        "method": match method { Method::Opsd => "opsd", Method::NaivePsd => "psd" },
        "n": n,
        "m": m,
        "dft_points": counter.dft_points,
        "ext_mem_points": counter.ext_mem_points,
        "cross_axis_energy_original": energy_original,
        "cross_axis_energy_periodic": energy_periodic,
        "artifact_energy": artifact_energy,
        "max_abs_smooth": d.s.max_abs(),
        // out = (v + offset) * gain
        "rescale": {
            "spectrum_original": rescale_json(&r_ihat),
            "spectrum_periodic": rescale_json(&r_phat),
            "spectrum_smooth": rescale_json(&r_shat),
            "periodic": rescale_json(&r_p),
            "smooth": rescale_json(&r_s),
        },
    });
    save(out, "report.json", write_report(&report) + "\n")?;

    println!("method={}", report["method"].as_str().unwrap_or_default());
    println!("size={n}x{m}");
    println!("cross_axis_energy_original={energy_original:e}");
    println!("cross_axis_energy_periodic={energy_periodic:e}");
    println!("artifact_energy={artifact_energy:e}");
    println!("max_abs_smooth={:e}", d.s.max_abs());
    Ok(())
}

pub fn spectrum(args: &SpectrumArgs) -> CliResult {
    check_maxval(args.maxval)?;
    let img = load(&args.input)?;
    let mut counter = OpCounter::default();
    let x = match args.method {
        None => fft_2d(&img.to_complex(), &mut counter)?,
        Some(MethodArg::Opsd) => decompose_spectra(&img, Method::Opsd, &mut counter)?.phat,
        Some(MethodArg::Psd) => decompose_spectra(&img, Method::NaivePsd, &mut counter)?.phat,
        Some(MethodArg::Mirror) => fft_2d(&mirror_image(&img).to_complex(), &mut counter)?,
        Some(MethodArg::Window) => fft_2d(
            &apodize(&img, &window_spec(&args.window)?)?.to_complex(),
            &mut counter,
        )?,
    };
    let mode = match args.mode {
        ModeArg::Magnitude => SpectrumMode::Magnitude,
        ModeArg::LogMagnitude => SpectrumMode::LogMagnitude,
        ModeArg::Phase => SpectrumMode::Phase,
        ModeArg::Real => SpectrumMode::Real,
        ModeArg::Imag => SpectrumMode::Imag,
    };
    let export = export_spectrum(&x, mode, !args.no_shift);
    let rescale = save_image(&args.out, "spectrum.pgm", &export.data, args.maxval)?;
    save(&args.out, "spectrum.csv", real_matrix_csv(&export.data))?;
    println!("size={}x{}", x.rows(), x.cols());
    println!("cross_axis_energy={:e}", cross_axis_energy(&x));
    println!("dft_points={}", counter.dft_points);
    println!("rescale_offset={}", rescale.offset);
    println!("rescale_gain={}", rescale.gain);
    Ok(())
}

pub fn compare(args: &CompareArgs) -> CliResult {
    let img = load(&args.input)?;
    let window = window_spec(&args.window)?;

    let mut rows = Vec::new();
    let mut raw_counter = OpCounter::default();
    let raw = fft_2d(&img.to_complex(), &mut raw_counter)?;
    rows.push(("raw", cross_axis_energy(&raw), raw_counter.dft_points));

    let mut opsd_counter = OpCounter::default();
    let opsd = decompose_spectra(&img, Method::Opsd, &mut opsd_counter)?;
    rows.push((
        "opsd",
        cross_axis_energy(&opsd.phat),
        opsd_counter.dft_points,
    ));

    let mut mirror_counter = OpCounter::default();
    let mirrored = fft_2d(&mirror_image(&img).to_complex(), &mut mirror_counter)?;
    rows.push((
        "mirror",
        cross_axis_energy(&mirrored),
        mirror_counter.dft_points,
    ));

    let mut window_counter = OpCounter::default();
    let windowed = fft_2d(&apodize(&img, &window)?.to_complex(), &mut window_counter)?;
    rows.push((
        "window",
        cross_axis_energy(&windowed),
        window_counter.dft_points,
    ));

    let base = rows[0].1;
    let mut table = String::from("method,cross_axis_energy,ratio_to_raw,dft_points\n");
    for (name, energy, points) in &rows {
        let ratio = if base > 0.0 { energy / base } else { 0.0 };
        table.push_str(&format!("{name},{energy:e},{ratio:e},{points}\n"));
    }
    save(&args.out, "compare.csv", &table)?;
    print!("{table}");
    Ok(())
}

pub fn cost(args: &CostArgs) -> CliResult {
    let table = cost_table(args.n, args.m)?;
    for (k, report) in table.iter().enumerate() {
        if k > 0 {
            println!();
        }
        print!("{}", report.to_kv_text());
    }
    if let Some(dir) = &args.out {
        save(dir, "cost.json", write_report(&table) + "\n")?;
    }
    Ok(())
}

pub fn pipeline_sim(args: &PipelineArgs) -> CliResult {
    let img = match &args.input {
        Some(path) => load(path)?,
        None => random_image(args.n, args.m, args.seed)?,
    };
    let (n, m) = img.dims();
    let (phat, trace) = run_pipeline(&pack_frame(&img)?)?;
    let report = CostReport::for_algorithm(Algorithm::Opsd, n as u64, m as u64)?;
    let rec = reconcile(&report, &trace.run_record())?;

    save(&args.out, "trace.csv", trace.to_csv())?;
    save(
        &args.out,
        "trace_summary.json",
        write_report(&TraceSummary::from_trace(&trace)) + "\n",
    )?;
    save(&args.out, "reconciliation.json", write_report(&rec) + "\n")?;
    save(&args.out, "phat.csv", complex_matrix_csv(&phat))?;

    println!("size={n}x{m}");
    println!(
        "dft_points={} (formula {})",
        trace.counter().dft_points,
        report.dft_points
    );
    println!(
        "ext_mem_points={} (formula {})",
        trace.counter().ext_mem_points,
        report.dram_points
    );
    println!("reconciliation: {rec}");
    Ok(())
}

/// `PSDFFT_THREADS`: 0 runs sequentially, N caps the pool at N threads,
/// unset uses every core.
fn bench_threads() -> Result<usize, CliError> {
    match std::env::var("PSDFFT_THREADS") {
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "PSDFFT_THREADS must be a non-negative integer, got {v:?}"
            ))
        }),
    }
}

pub fn bench(args: &BenchArgs) -> CliResult {
    let config = BenchConfig {
        n: args.n,
        m: args.m,
        frames: args.frames,
        runs: args.runs,
        seed: args.seed,
        threads: bench_threads()?,
    };
    let report = run_bench(&config)?;

    println!(
        "size={}x{} frames={} runs={} threads={}",
        report.n,
        report.m,
        report.frames,
        report.ms_per_frame.len(),
        config.threads
    );
    for (k, ms) in report.ms_per_frame.iter().enumerate() {
        println!("run {k}: {ms:.3} ms/frame");
    }
    println!("mean_ms_per_frame={:.3}", report.mean_ms_per_frame);
    println!(
        "coefficient_of_variation={:.4}",
        report.coefficient_of_variation
    );
    println!("frames_per_second={:.2}", report.frames_per_second);
    let verdict = if report.frames_per_second >= report.realtime_threshold_fps {
        "at or above"
    } else {
        "below"
    };
    println!(
        "realtime_threshold_fps={} ({verdict} threshold; informational)",
        report.realtime_threshold_fps
    );
    println!(
        "opsd_dft_points={} psd_dft_points={}",
        report.opsd_dft_points, report.psd_dft_points
    );
    if let Some(dir) = &args.out {
        save(dir, "bench.json", write_report(&report) + "\n")?;
    }
    Ok(())
}
