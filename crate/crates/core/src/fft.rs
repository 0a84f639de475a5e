//! One-dimensional transforms: radix-2 iterative FFT and the direct O(n²) DFT.
//!
//! Forward transforms are unnormalized, `X_k = Σ_j v_j w^{jk}` with
//! `w = exp(-2πi/n)`. Inverse transforms use conjugate twiddles and scale by `1/n`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `exp(-2πi k / n)`, exact at multiples of a quarter turn.
pub fn root_of_unity(k: usize, n: usize) -> Complex64 {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        return match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
    }
    let theta = -2.0 * PI * k as f64 / n as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// The `n` powers `w^k = exp(-2πi k/n)` for `k = 0..n`.
#[derive(Clone, Debug)]
pub struct TwiddleTable {
    n: usize,
    factors: Vec<Complex64>,
}

impl TwiddleTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::size("twiddle table length must be >= 1"));
        }
        let mut factors: Vec<Complex64> = (0..n).map(|k| root_of_unity(k, n)).collect();
        // w^{n-k} = conj(w^k) exactly
        for k in 1..n.div_ceil(2) {
            factors[n - k] = factors[k].conj();
        }
        Ok(Self { n, factors })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `w^k` for any integer exponent; `w^{k + l n} = w^k`.
    pub fn get(&self, k: i64) -> Complex64 {
        self.factors[k.rem_euclid(self.n as i64) as usize]
    }

    pub fn factors(&self) -> &[Complex64] {
        &self.factors
    }
}

/// One butterfly stage: butterflies span `2 * half` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stage {
    pub half: usize,
    pub butterflies: usize,
}

/// A planned radix-2 decimation-in-time FFT of fixed power-of-two length.
#[derive(Clone, Debug)]
pub struct Radix2Fft {
    n: usize,
    twiddles: TwiddleTable,
}

impl Radix2Fft {
    pub fn new(n: usize) -> Result<Self> {
        check_power_of_two(n, "FFT length")?;
        if n < 2 {
            return Err(Error::size("FFT length must be >= 2"));
        }
        Ok(Self {
            n,
            twiddles: TwiddleTable::new(n)?,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// log2(n) stages of n/2 butterflies each; the kernel executes exactly this schedule.
    pub fn stages(&self) -> impl Iterator<Item = Stage> + '_ {
        let n = self.n;
        std::iter::successors(Some(1usize), move |&h| (h * 2 < n).then_some(h * 2)).map(
            move |half| Stage {
                half,
                butterflies: n / 2,
            },
        )
    }

    pub fn process(&self, buf: &mut [Complex64], dir: Direction) {
        assert_eq!(buf.len(), self.n, "buffer length does not match plan");
        bit_reverse_permute(buf);

        let n = self.n;
        for stage in self.stages() {
            let half = stage.half;
            let stride = n / (2 * half);
            for start in (0..n).step_by(2 * half) {
                for k in 0..half {
                    let mut w = self.twiddles.factors[k * stride];
                    if dir == Direction::Inverse {
                        w = w.conj();
                    }
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
        }

        if dir == Direction::Inverse {
            let scale = 1.0 / n as f64;
            buf.iter_mut().for_each(|v| *v *= scale);
        }
    }
}

fn bit_reverse_permute(buf: &mut [Complex64]) {
    let n = buf.len();
    let shift = usize::BITS - n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if i < j {
            buf.swap(i, j);
        }
    }
}

pub(crate) fn check_power_of_two(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::size(format!("{what} must be non-zero")));
    }
    if !n.is_power_of_two() {
        return Err(Error::size(format!("{what} {n} is not a power of two")));
    }
    Ok(())
}

/// Radix-2 FFT of `v`. Length must be a power of two and at least 2.
pub fn fft_1d(v: &[Complex64], dir: Direction) -> Result<Vec<Complex64>> {
    let plan = Radix2Fft::new(v.len())?;
    let mut out = v.to_vec();
    plan.process(&mut out, dir);
    Ok(out)
}

/// Direct evaluation of the DFT sum, any length >= 1. Reference for the fast paths.
pub fn naive_dft_1d(v: &[Complex64], dir: Direction) -> Result<Vec<Complex64>> {
    let n = v.len();
    if n == 0 {
        return Err(Error::size("DFT input must be non-empty"));
    }
    let sign = match dir {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, x) in v.iter().enumerate() {
            let theta = sign * 2.0 * PI * ((j * k) % n) as f64 / n as f64;
            acc += x * Complex64::from_polar(1.0, theta);
        }
        out.push(acc);
    }
    if dir == Direction::Inverse {
        let scale = 1.0 / n as f64;
        out.iter_mut().for_each(|x| *x *= scale);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn reals(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn impulse_gives_all_ones() {
        let out = fft_1d(&reals(&[1.0, 0.0, 0.0, 0.0]), Direction::Forward).unwrap();
        assert_eq!(out, reals(&[1.0; 4]));
    }

    #[test]
    fn constant_gives_dc_only() {
        let k = c(2.5, -1.0);
        let out = fft_1d(&[k; 4], Direction::Forward).unwrap();
        assert!(max_diff(&out, &[k * 4.0, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]) < 1e-15);
    }

    #[test]
    fn random_length_8_matches_naive() {
        // fixed pseudo-random input
        let v: Vec<Complex64> = (0..8)
            .map(|i| {
                c(
                    ((i * 37 + 11) % 17) as f64 / 7.0 - 1.0,
                    ((i * 53 + 5) % 13) as f64 / 5.0,
                )
            })
            .collect();
        let fast = fft_1d(&v, Direction::Forward).unwrap();
        let slow = naive_dft_1d(&v, Direction::Forward).unwrap();
        assert!(max_diff(&fast, &slow) < 1e-12);
    }

    #[test]
    fn naive_small_cases() {
        assert_eq!(
            naive_dft_1d(&reals(&[1.0, 0.0]), Direction::Forward).unwrap(),
            reals(&[1.0, 1.0])
        );
        let two = naive_dft_1d(&reals(&[1.0, 1.0]), Direction::Forward).unwrap();
        assert!(max_diff(&two, &reals(&[2.0, 0.0])) < 1e-15);
        // exp(-2πik/4) for k = 0..3
        let shifted = naive_dft_1d(&reals(&[0.0, 1.0, 0.0, 0.0]), Direction::Forward).unwrap();
        let expected = [c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)];
        assert!(max_diff(&shifted, &expected) < 1e-15);
    }

    #[test]
    fn naive_handles_odd_lengths() {
        let v = reals(&[1.0, 2.0, 3.0]);
        let back = naive_dft_1d(
            &naive_dft_1d(&v, Direction::Forward).unwrap(),
            Direction::Inverse,
        )
        .unwrap();
        assert!(max_diff(&back, &v) < 1e-14);
        assert!(naive_dft_1d(&[], Direction::Forward).is_err());
    }

    #[test]
    fn size_errors() {
        assert!(matches!(
            fft_1d(&[], Direction::Forward),
            Err(Error::Size(_))
        ));
        assert!(matches!(
            fft_1d(&reals(&[1.0; 6]), Direction::Forward),
            Err(Error::Size(_))
        ));
        assert!(matches!(
            fft_1d(&reals(&[1.0]), Direction::Forward),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn stage_schedule() {
        for log_n in 1..=10 {
            let n = 1usize << log_n;
            let plan = Radix2Fft::new(n).unwrap();
            let stages: Vec<Stage> = plan.stages().collect();
            assert_eq!(stages.len(), log_n);
            assert!(stages.iter().all(|s| s.butterflies == n / 2));
            assert_eq!(stages.last().unwrap().half, n / 2);
        }
    }

    #[test]
    fn twiddle_table_properties() {
        for n in [1usize, 2, 3, 8, 12, 64] {
            let t = TwiddleTable::new(n).unwrap();
            assert_eq!(t.factors()[0], c(1.0, 0.0));
            for k in 0..n as i64 {
                assert!((t.get(k).norm() - 1.0).abs() < 1e-12);
                assert_eq!(t.get(k + n as i64), t.get(k));
                assert_eq!(t.get(k - 3 * n as i64), t.get(k));
            }
        }
        let t4 = TwiddleTable::new(4).unwrap();
        assert_eq!(
            t4.factors(),
            &[c(1.0, 0.0), c(0.0, -1.0), c(-1.0, 0.0), c(0.0, 1.0)]
        );
    }
}
