//! Portable GrayMap (P2 ASCII / P5 binary) codec.
//!
//! Samples are returned as-is in `0..=maxval`; no rescaling happens here.
//! 16-bit P5 samples are big-endian.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn next_uint(&mut self, what: &str) -> Result<u64> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::format(start, format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::format(start, format!("{what} out of range")))
    }
}

pub fn read_pgm(bytes: &[u8]) -> Result<RealMatrix> {
    if bytes.len() < 2 {
        return Err(Error::format(0, "missing magic number"));
    }
    let binary = match &bytes[..2] {
        b"P5" => true,
        b"P2" => false,
        other => {
            return Err(Error::format(
                0,
                format!("unsupported magic {:?}", String::from_utf8_lossy(other)),
            ))
        }
    };
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.next_uint("width")? as usize;
    let height = cur.next_uint("height")? as usize;
    let maxval_at = cur.pos;
    let maxval = cur.next_uint("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::format(
            2,
            format!("image dims must be >= 1, got {width}x{height}"),
        ));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(Error::format(
            maxval_at,
            format!("maxval {maxval} outside 1..=65535"),
        ));
    }
    let count = width * height;

    let data = if binary {
        // exactly one whitespace byte separates the header from the raster
        if cur.pos >= bytes.len() || !bytes[cur.pos].is_ascii_whitespace() {
            return Err(Error::format(cur.pos, "expected whitespace after maxval"));
        }
        let start = cur.pos + 1;
        let sample_bytes = if maxval > 255 { 2 } else { 1 };
        let expected = count * sample_bytes;
        let actual = bytes.len() - start;
        if actual < expected {
            return Err(Error::format(
                bytes.len(),
                format!("truncated raster: expected {expected} bytes, got {actual}"),
            ));
        }
        let raster = &bytes[start..start + expected];
        let values: Vec<u64> = if sample_bytes == 2 {
            raster
                .chunks_exact(2)
                .map(|c| u16::from_be_bytes([c[0], c[1]]) as u64)
                .collect()
        } else {
            raster.iter().map(|&b| b as u64).collect()
        };
        if let Some(k) = values.iter().position(|&v| v > maxval) {
            return Err(Error::format(
                start + k * sample_bytes,
                format!("sample {} exceeds maxval {maxval}", values[k]),
            ));
        }
        values.into_iter().map(|v| v as f64).collect()
    } else {
        let mut values = Vec::with_capacity(count);
        for _ in 0..count {
            let at = cur.pos;
            let v = cur.next_uint("sample").map_err(|e| match e {
                Error::Format { offset, .. } if offset >= bytes.len() => Error::format(
                    offset,
                    format!(
                        "truncated raster: expected {count} samples, got {}",
                        values.len()
                    ),
                ),
                other => other,
            })?;
            if v > maxval {
                return Err(Error::format(
                    at,
                    format!("sample {v} exceeds maxval {maxval}"),
                ));
            }
            values.push(v as f64);
        }
        values
    };
    RealMatrix::from_vec(height, width, data)
}

/// Encodes as binary P5. Values are clamped to `[0, maxval]` and rounded half away from zero.
pub fn write_pgm(img: &RealMatrix, maxval: u32) -> Result<Vec<u8>> {
    if maxval != 255 && maxval != 65535 {
        return Err(Error::param(format!(
            "maxval must be 255 or 65535, got {maxval}"
        )));
    }
    let (n, m) = img.dims();
    let mut out = format!("P5\n{m} {n}\n{maxval}\n").into_bytes();
    for &v in img.as_slice() {
        let q = v.clamp(0.0, maxval as f64).round() as u16;
        if maxval > 255 {
            out.extend_from_slice(&q.to_be_bytes());
        } else {
            out.push(q as u8);
        }
    }
    Ok(out)
}
