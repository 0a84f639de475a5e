//! Functional simulator of the streaming accelerator dataflow.
//!
//! The host computes the boundary vectors and appends them to each frame, so a
//! frame carries `nm + n + m` points. On the device the image lives in external
//! memory (DRAM) while the boundary vectors and `ν` live in block RAM (BRAM).
//! Every transfer is logged as a trace event; DRAM reads are what the cost
//! model calls DRAM access points.
//!
//! Passes and their external-memory reads:
//!
//! | pass            | DRAM reads  | notes                                       |
//! |-----------------|-------------|---------------------------------------------|
//! | `host_transfer` | 0           | writes the frame                            |
//! | `boundary_load` | n + m - 1   | shared corner is read once                  |
//! | `boundary_col`  | 0           | one column FFT, ν generation, all in BRAM   |
//! | `boundary_row`  | 0           | rows assembled from BRAM, B̂ staged to DRAM |
//! | `image_row`     | nm          |                                             |
//! | `image_col`     | nm          | column FFTs of the image                    |
//! | `combine`       | nm          | reads B̂, writes P̂ = Î - Ŝ                  |
//!
//! Boundary and image passes share no data until `combine`, so the simulator
//! runs them in a fixed order and models concurrency only through labels.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cost::{Algorithm, RunRecord};
use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::fft::{Direction, Radix2Fft};
use crate::fft2d::check_fft_dims;
use crate::matrix::{ComplexMatrix, RealMatrix};
use crate::psd::{boundary_data, nu_vector, smooth_spectrum, BoundaryData};

const PACKET_MAGIC: &[u8; 4] = b"OPSD";
const PACKET_HEADER_LEN: usize = 12;

/// Host-to-device payload: the image followed by the boundary row and column.
#[derive(Clone, Debug, PartialEq)]
pub struct FramePacket {
    n: usize,
    m: usize,
    image: Vec<f64>,
    boundary_row: Vec<f64>,
    boundary_col: Vec<f64>,
}

pub fn pack_frame(img: &RealMatrix) -> Result<FramePacket> {
    let bd = boundary_data(img)?;
    Ok(FramePacket {
        n: img.rows(),
        m: img.cols(),
        image: img.as_slice().to_vec(),
        boundary_row: bd.first_row().to_vec(),
        boundary_col: bd.first_col().to_vec(),
    })
}

impl FramePacket {
    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// Always `nm + n + m`.
    pub fn payload_len(&self) -> usize {
        self.image.len() + self.boundary_row.len() + self.boundary_col.len()
    }

    /// Image (row-major), then boundary row, then boundary column.
    pub fn payload(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.payload_len());
        out.extend_from_slice(&self.image);
        out.extend_from_slice(&self.boundary_row);
        out.extend_from_slice(&self.boundary_col);
        out
    }

    pub fn boundary_row(&self) -> &[f64] {
        &self.boundary_row
    }

    pub fn boundary_col(&self) -> &[f64] {
        &self.boundary_col
    }

    pub fn unpack(&self) -> Result<(RealMatrix, Vec<f64>, Vec<f64>)> {
        Ok((
            RealMatrix::from_vec(self.n, self.m, self.image.clone())?,
            self.boundary_row.clone(),
            self.boundary_col.clone(),
        ))
    }

    /// `"OPSD"`, u32 n, u32 m, then the payload as little-endian f64.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(PACKET_HEADER_LEN + 8 * self.payload_len());
        out.extend_from_slice(PACKET_MAGIC);
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&(self.m as u32).to_le_bytes());
        for v in self.payload() {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < PACKET_HEADER_LEN {
            return Err(Error::format(
                bytes.len(),
                format!(
                    "frame header needs {PACKET_HEADER_LEN} bytes, got {}",
                    bytes.len()
                ),
            ));
        }
        if &bytes[..4] != PACKET_MAGIC {
            return Err(Error::format(0, "bad frame magic, expected \"OPSD\""));
        }
        let n = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
        let m = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes")) as usize;
        if n < 2 || m < 2 {
            return Err(Error::format(
                4,
                format!("frame dims must be >= 2, got {n}x{m}"),
            ));
        }
        let count = n * m + n + m;
        let body = &bytes[PACKET_HEADER_LEN..];
        if body.len() != 8 * count {
            return Err(Error::format(
                bytes.len(),
                format!(
                    "frame payload needs {} bytes, got {}",
                    8 * count,
                    body.len()
                ),
            ));
        }
        let mut values = Vec::with_capacity(count);
        for (k, chunk) in body.chunks_exact(8).enumerate() {
            let v = f64::from_le_bytes(chunk.try_into().expect("8 bytes"));
            if !v.is_finite() {
                return Err(Error::format(
                    PACKET_HEADER_LEN + 8 * k,
                    "non-finite sample",
                ));
            }
            values.push(v);
        }
        let boundary_col = values.split_off(n * m + m);
        let boundary_row = values.split_off(n * m);
        if boundary_row[0] != boundary_col[0] {
            return Err(Error::format(
                PACKET_HEADER_LEN + 8 * n * m,
                "boundary row and column disagree on the shared corner",
            ));
        }
        Ok(Self {
            n,
            m,
            image: values,
            boundary_row,
            boundary_col,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Dram,
    Bram,
    LocalRead,
    LocalWrite,
}

impl RegionKind {
    pub const ALL: [RegionKind; 4] = [
        RegionKind::Dram,
        RegionKind::Bram,
        RegionKind::LocalRead,
        RegionKind::LocalWrite,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RegionKind::Dram => "dram",
            RegionKind::Bram => "bram",
            RegionKind::LocalRead => "local_read",
            RegionKind::LocalWrite => "local_write",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AccessOp {
    Read,
    Write,
}

impl AccessOp {
    pub fn as_str(&self) -> &'static str {
        match self {
            AccessOp::Read => "read",
            AccessOp::Write => "write",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PassLabel {
    HostTransfer,
    BoundaryLoad,
    BoundaryCol,
    BoundaryRow,
    ImageRow,
    ImageCol,
    Combine,
}

impl PassLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            PassLabel::HostTransfer => "host_transfer",
            PassLabel::BoundaryLoad => "boundary_load",
            PassLabel::BoundaryCol => "boundary_col",
            PassLabel::BoundaryRow => "boundary_row",
            PassLabel::ImageRow => "image_row",
            PassLabel::ImageCol => "image_col",
            PassLabel::Combine => "combine",
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(
            self,
            PassLabel::BoundaryLoad | PassLabel::BoundaryCol | PassLabel::BoundaryRow
        )
    }
}

impl fmt::Display for PassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemoryRegion {
    pub kind: RegionKind,
    /// Points the region can hold at once.
    pub capacity: usize,
    pub occupied: usize,
    pub read_count: u64,
    pub write_count: u64,
}

impl MemoryRegion {
    fn new(kind: RegionKind, capacity: usize) -> Self {
        Self {
            kind,
            capacity,
            occupied: 0,
            read_count: 0,
            write_count: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub pass: PassLabel,
    pub region: RegionKind,
    pub op: AccessOp,
    pub points: u64,
}

/// Region sizes. `None` picks the default for the frame size.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Default `2n + 2m`.
    pub bram_capacity: Option<usize>,
    /// Staging buffer size for each of the local read/write regions. Default `m` (one row).
    pub local_buffer_points: Option<usize>,
}

/// Ordered access log of one pipeline run.
///
/// Consecutive accesses with the same (pass, region, op) are merged into one event.
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineTrace {
    n: usize,
    m: usize,
    events: Vec<TraceEvent>,
    regions: [MemoryRegion; 4],
    counter: OpCounter,
}

impl PipelineTrace {
    /// Empty trace with region capacities resolved for an `n x m` frame.
    pub fn new(n: usize, m: usize, config: &PipelineConfig) -> Result<Self> {
        let bram = config.bram_capacity.unwrap_or(2 * n + 2 * m);
        let local = config.local_buffer_points.unwrap_or(m);
        if local == 0 {
            return Err(Error::param("local buffer must hold at least one point"));
        }
        Ok(Self {
            n,
            m,
            events: Vec::new(),
            regions: [
                // frame + boundary vectors + row-pass intermediate + staged B̂
                MemoryRegion::new(RegionKind::Dram, 3 * n * m + n + m),
                MemoryRegion::new(RegionKind::Bram, bram),
                MemoryRegion::new(RegionKind::LocalRead, local),
                MemoryRegion::new(RegionKind::LocalWrite, local),
            ],
            counter: OpCounter::default(),
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn region(&self, kind: RegionKind) -> &MemoryRegion {
        &self.regions[kind.index()]
    }

    pub fn regions(&self) -> &[MemoryRegion; 4] {
        &self.regions
    }

    pub fn counter(&self) -> OpCounter {
        self.counter
    }

    pub fn run_record(&self) -> RunRecord {
        RunRecord {
            algorithm: Algorithm::Opsd,
            n: self.n as u64,
            m: self.m as u64,
            counter: self.counter,
        }
    }

    /// Sum of event points matching the filter.
    pub fn points_where(&self, mut f: impl FnMut(&TraceEvent) -> bool) -> u64 {
        self.events.iter().filter(|e| f(e)).map(|e| e.points).sum()
    }

    /// `pass_label,region,op,points` records, header first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pass_label,region,op,points\n");
        for e in &self.events {
            out.push_str(&format!(
                "{},{},{},{}\n",
                e.pass,
                e.region,
                e.op.as_str(),
                e.points
            ));
        }
        out
    }

    fn allocate(&mut self, kind: RegionKind, points: usize) -> Result<()> {
        let region = &mut self.regions[kind.index()];
        let requested = region.occupied + points;
        if requested > region.capacity {
            return Err(Error::Capacity {
                region: kind.to_string(),
                capacity: region.capacity,
                requested,
            });
        }
        region.occupied = requested;
        Ok(())
    }

    fn access(&mut self, pass: PassLabel, kind: RegionKind, op: AccessOp, points: usize) {
        if points == 0 {
            return;
        }
        let points = points as u64;
        let region = &mut self.regions[kind.index()];
        match op {
            AccessOp::Read => region.read_count += points,
            AccessOp::Write => region.write_count += points,
        }
        if kind == RegionKind::Dram && op == AccessOp::Read {
            self.counter.ext_mem_points += points;
        }
        match self.events.last_mut() {
            Some(e) if e.pass == pass && e.region == kind && e.op == op => e.points += points,
            _ => self.events.push(TraceEvent {
                pass,
                region: kind,
                op,
                points,
            }),
        }
    }

    fn read(&mut self, pass: PassLabel, kind: RegionKind, points: usize) {
        self.access(pass, kind, AccessOp::Read, points);
    }

    fn write(&mut self, pass: PassLabel, kind: RegionKind, points: usize) {
        self.access(pass, kind, AccessOp::Write, points);
    }

    /// Moves `points` from DRAM through the local read buffer into an FFT core.
    fn stage_in(&mut self, pass: PassLabel, points: usize) {
        self.read(pass, RegionKind::Dram, points);
        self.through_local(pass, RegionKind::LocalRead, points);
    }

    /// Moves `points` from an FFT core through the local write buffer into DRAM.
    fn stage_out(&mut self, pass: PassLabel, points: usize) {
        self.through_local(pass, RegionKind::LocalWrite, points);
        self.write(pass, RegionKind::Dram, points);
    }

    /// Bursts of at most the buffer capacity; each point is written once and read once.
    fn through_local(&mut self, pass: PassLabel, kind: RegionKind, points: usize) {
        let cap = self.regions[kind.index()].capacity;
        let mut left = points;
        while left > 0 {
            let burst = left.min(cap);
            self.write(pass, kind, burst);
            self.read(pass, kind, burst);
            left -= burst;
        }
    }
}

pub fn run_pipeline(pkt: &FramePacket) -> Result<(ComplexMatrix, PipelineTrace)> {
    run_pipeline_with(pkt, &PipelineConfig::default())
}

/// Runs the optimized decomposition over one frame and returns `P̂` with the access trace.
pub fn run_pipeline_with(
    pkt: &FramePacket,
    config: &PipelineConfig,
) -> Result<(ComplexMatrix, PipelineTrace)> {
    let (n, m) = pkt.dims();
    check_fft_dims(n, m)?;
    let mut trace = PipelineTrace::new(n, m, config)?;

    // Frame lands in DRAM: image, row-pass intermediate, staged B̂.
    trace.allocate(RegionKind::Dram, pkt.payload_len())?;
    trace.allocate(RegionKind::Dram, 2 * n * m)?;
    trace.write(PassLabel::HostTransfer, RegionKind::Dram, pkt.payload_len());

    let bhat = boundary_passes(pkt, &mut trace)?;
    let intermediate = image_row_pass(pkt, &mut trace)?;
    let phat = image_col_and_combine(intermediate, &bhat, &mut trace)?;
    Ok((phat, trace))
}

/// Boundary load, column stage and row stage. Returns `B̂` as staged in DRAM.
fn boundary_passes(pkt: &FramePacket, trace: &mut PipelineTrace) -> Result<ComplexMatrix> {
    let (n, m) = pkt.dims();
    let bd = BoundaryData::from_parts(pkt.boundary_row.clone(), pkt.boundary_col.clone())?;

    // first_row (m), first_col (n, later overwritten by its FFT), corner sum
    trace.allocate(RegionKind::Bram, m + n + 1)?;
    trace.read(
        PassLabel::BoundaryLoad,
        RegionKind::Dram,
        bd.unique_points(),
    );
    trace.write(PassLabel::BoundaryLoad, RegionKind::Bram, m + n);
    trace.write(PassLabel::BoundaryLoad, RegionKind::Bram, 1);

    trace.read(PassLabel::BoundaryCol, RegionKind::Bram, n);
    let mut col_hat: Vec<Complex64> = bd
        .first_col()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    Radix2Fft::new(n)?.process(&mut col_hat, Direction::Forward);
    trace.counter.add_dft_points(n);
    trace.write(PassLabel::BoundaryCol, RegionKind::Bram, n);

    trace.allocate(RegionKind::Bram, n)?;
    let nu = nu_vector(n)?;
    trace.write(PassLabel::BoundaryCol, RegionKind::Bram, n);

    let row_plan = Radix2Fft::new(m)?;
    let mut bhat = ComplexMatrix::zeros(n, m)?;
    let nu = nu.as_slice();
    for i in 0..n {
        // B̂_{i0}, ν_i, interior first_row, corner sum
        trace.read(PassLabel::BoundaryRow, RegionKind::Bram, 2 + (m - 2) + 1);
        let row = bhat.row_mut(i);
        row[0] = col_hat[i];
        for (dst, &r) in row[1..m - 1].iter_mut().zip(&bd.first_row()[1..m - 1]) {
            *dst = nu[i] * r;
        }
        row[m - 1] = -col_hat[i] + nu[i] * bd.corner_sum();
        row_plan.process(row, Direction::Forward);
        trace.counter.add_dft_points(m);
        trace.stage_out(PassLabel::BoundaryRow, m);
    }
    Ok(bhat)
}

fn image_row_pass(pkt: &FramePacket, trace: &mut PipelineTrace) -> Result<ComplexMatrix> {
    let (n, m) = pkt.dims();
    let plan = Radix2Fft::new(m)?;
    let mut out = ComplexMatrix::zeros(n, m)?;
    for i in 0..n {
        trace.stage_in(PassLabel::ImageRow, m);
        let row = out.row_mut(i);
        for (dst, &src) in row.iter_mut().zip(&pkt.image[i * m..(i + 1) * m]) {
            *dst = Complex64::new(src, 0.0);
        }
        plan.process(row, Direction::Forward);
        trace.counter.add_dft_points(m);
        trace.stage_out(PassLabel::ImageRow, m);
    }
    Ok(out)
}

/// Column FFTs of the image; each finished column of `Î` is combined with the
/// matching column of `Ŝ` and written back as `P̂`.
fn image_col_and_combine(
    intermediate: ComplexMatrix,
    bhat: &ComplexMatrix,
    trace: &mut PipelineTrace,
) -> Result<ComplexMatrix> {
    let (n, m) = intermediate.dims();
    let plan = Radix2Fft::new(n)?;
    let shat = smooth_spectrum(bhat);
    let mut phat = ComplexMatrix::zeros(n, m)?;
    for j in 0..m {
        trace.stage_in(PassLabel::ImageCol, n);
        let mut col = intermediate.column(j);
        plan.process(&mut col, Direction::Forward);
        trace.counter.add_dft_points(n);

        trace.stage_in(PassLabel::Combine, n);
        for (i, v) in col.iter_mut().enumerate() {
            *v -= shat[(i, j)];
        }
        phat.set_column(j, &col);
        trace.stage_out(PassLabel::Combine, n);
    }
    Ok(phat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{reconcile, CostReport};
    use crate::matrix::max_abs_diff;

    fn hand() -> RealMatrix {
        RealMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap()
    }

    #[test]
    fn pack_hand_example() {
        let pkt = pack_frame(&hand()).unwrap();
        assert_eq!(pkt.payload(), vec![1.0, 2.0, 3.0, 4.0, 3.0, 1.0, 3.0, -1.0]);
        assert_eq!(pkt.payload_len(), 8);
        let (img, row, col) = pkt.unpack().unwrap();
        assert_eq!(img, hand());
        assert_eq!(row, vec![3.0, 1.0]);
        assert_eq!(col, vec![3.0, -1.0]);
    }

    #[test]
    fn pack_size_error() {
        assert!(matches!(
            pack_frame(&RealMatrix::zeros(1, 8).unwrap()),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn packet_bytes_round_trip() {
        let img = RealMatrix::from_fn(4, 8, |i, j| (i * 8 + j) as f64 * 0.5 - 3.0).unwrap();
        let pkt = pack_frame(&img).unwrap();
        let bytes = pkt.to_bytes();
        assert_eq!(&bytes[..4], b"OPSD");
        assert_eq!(bytes.len(), 12 + 8 * (32 + 4 + 8));
        assert_eq!(FramePacket::from_bytes(&bytes).unwrap(), pkt);
    }

    #[test]
    fn packet_bytes_errors() {
        let bytes = pack_frame(&hand()).unwrap().to_bytes();
        let mut bad_magic = bytes.clone();
        bad_magic[0] = b'X';
        assert!(matches!(
            FramePacket::from_bytes(&bad_magic),
            Err(Error::Format { offset: 0, .. })
        ));
        assert!(matches!(
            FramePacket::from_bytes(&bytes[..bytes.len() - 3]),
            Err(Error::Format { .. })
        ));
        assert!(FramePacket::from_bytes(&bytes[..6]).is_err());
        let mut bad_corner = bytes.clone();
        // boundary_col[0] lives after the image (4) and row (2) values
        let off = 12 + 8 * 6;
        bad_corner[off..off + 8].copy_from_slice(&9.0f64.to_le_bytes());
        assert!(FramePacket::from_bytes(&bad_corner).is_err());
    }

    #[test]
    fn hand_example_spectrum_and_trace() {
        let (phat, trace) = run_pipeline(&pack_frame(&hand()).unwrap()).unwrap();
        let expected = RealMatrix::from_rows(&[[10.0, -1.0], [-2.0, 0.0]])
            .unwrap()
            .to_complex();
        assert!(max_abs_diff(&phat, &expected) < 1e-14);
        assert_eq!(trace.counter().ext_mem_points, 3 * 4 + 2 + 2 - 1);
        assert_eq!(trace.counter().dft_points, 3 * 4 + 2);
    }

    #[test]
    fn reconciles_at_64() {
        let img = RealMatrix::from_fn(64, 64, |i, j| ((i * 31 + j * 17) % 23) as f64).unwrap();
        let (_, trace) = run_pipeline(&pack_frame(&img).unwrap()).unwrap();
        assert_eq!(trace.counter().ext_mem_points, 12_415);
        let report = CostReport::for_algorithm(Algorithm::Opsd, 64, 64).unwrap();
        assert!(reconcile(&report, &trace.run_record()).unwrap().is_exact());
    }

    #[test]
    fn boundary_column_pass_never_touches_dram() {
        let img = RealMatrix::from_fn(8, 16, |i, j| (i * j) as f64).unwrap();
        let (_, trace) = run_pipeline(&pack_frame(&img).unwrap()).unwrap();
        assert_eq!(
            trace
                .points_where(|e| e.pass == PassLabel::BoundaryCol && e.region == RegionKind::Dram),
            0
        );
        assert!(trace.points_where(|e| e.pass == PassLabel::BoundaryCol) > 0);
    }

    #[test]
    fn event_sums_match_region_counters() {
        let img = RealMatrix::from_fn(16, 4, |i, j| (i + 3 * j) as f64).unwrap();
        let (_, trace) = run_pipeline(&pack_frame(&img).unwrap()).unwrap();
        for kind in RegionKind::ALL {
            let r = trace.region(kind);
            let reads = trace.points_where(|e| e.region == kind && e.op == AccessOp::Read);
            let writes = trace.points_where(|e| e.region == kind && e.op == AccessOp::Write);
            assert_eq!((reads, writes), (r.read_count, r.write_count), "{kind}");
        }
        assert!(trace.region(RegionKind::Bram).occupied <= 2 * 16 + 2 * 4);
    }

    #[test]
    fn bram_capacity_error() {
        let pkt = pack_frame(&RealMatrix::zeros(8, 8).unwrap()).unwrap();
        let config = PipelineConfig {
            bram_capacity: Some(10),
            ..Default::default()
        };
        assert!(matches!(
            run_pipeline_with(&pkt, &config),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn small_local_buffer_bursts() {
        let img = RealMatrix::from_fn(8, 8, |i, j| (i ^ j) as f64).unwrap();
        let pkt = pack_frame(&img).unwrap();
        let (a, ta) = run_pipeline(&pkt).unwrap();
        let config = PipelineConfig {
            local_buffer_points: Some(3),
            ..Default::default()
        };
        let (b, tb) = run_pipeline_with(&pkt, &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta.counter(), tb.counter());
        assert_eq!(
            ta.region(RegionKind::LocalRead).read_count,
            tb.region(RegionKind::LocalRead).read_count
        );
        let zero = PipelineConfig {
            local_buffer_points: Some(0),
            ..Default::default()
        };
        assert!(matches!(
            run_pipeline_with(&pkt, &zero),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn non_power_of_two_rejected() {
        let pkt = pack_frame(&RealMatrix::zeros(6, 8).unwrap()).unwrap();
        assert!(matches!(run_pipeline(&pkt), Err(Error::Size(_))));
    }

    #[test]
    fn csv_export() {
        let (_, trace) = run_pipeline(&pack_frame(&hand()).unwrap()).unwrap();
        let csv = trace.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("pass_label,region,op,points"));
        assert_eq!(lines.next(), Some("host_transfer,dram,write,8"));
        assert!(csv.contains("boundary_load,dram,read,3\n"));
    }
}
