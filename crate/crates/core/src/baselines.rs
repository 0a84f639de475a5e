//! Conventional edge-artifact remedies: mirroring to 2n x 2m and apodization windows.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

/// Reflects `img` into a `2n x 2m` image laid out as `[I, flipH; flipV, flipHV]`.
/// Opposing edges of the result are equal, so its border image vanishes.
pub fn mirror_image(img: &RealMatrix) -> RealMatrix {
    let (n, m) = img.dims();
    RealMatrix::from_fn(2 * n, 2 * m, |i, j| {
        let src_i = if i < n { i } else { 2 * n - 1 - i };
        let src_j = if j < m { j } else { 2 * m - 1 - j };
        img[(src_i, src_j)]
    })
    .expect("finite input stays finite")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowKind {
    Tukey,
    Hamming,
    Rect,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowSpec {
    kind: WindowKind,
    alpha: f64,
}

impl WindowSpec {
    /// `alpha` is the Tukey taper fraction and must lie in `[0, 1]`; other kinds ignore it.
    pub fn new(kind: WindowKind, alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::param(format!(
                "window alpha must be in [0, 1], got {alpha}"
            )));
        }
        Ok(Self { kind, alpha })
    }

    pub fn tukey(alpha: f64) -> Result<Self> {
        Self::new(WindowKind::Tukey, alpha)
    }

    pub fn hamming() -> Self {
        Self {
            kind: WindowKind::Hamming,
            alpha: 0.0,
        }
    }

    pub fn rect() -> Self {
        Self {
            kind: WindowKind::Rect,
            alpha: 0.0,
        }
    }

    pub fn kind(&self) -> WindowKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Symmetric window of length `len`. Values lie in `[0, 1]`.
    pub fn samples(&self, len: usize) -> Vec<f64> {
        if len == 1 {
            return vec![1.0];
        }
        let last = (len - 1) as f64;
        (0..len)
            .map(|k| match self.kind {
                WindowKind::Rect => 1.0,
                WindowKind::Hamming => 0.54 - 0.46 * (2.0 * PI * k as f64 / last).cos(),
                WindowKind::Tukey => tukey_sample(k as f64 / last, self.alpha),
            })
            .collect()
    }
}

/// Tapered cosine at normalized position `x` in `[0, 1]`.
fn tukey_sample(x: f64, alpha: f64) -> f64 {
    if alpha <= 0.0 {
        return 1.0;
    }
    let edge = x.min(1.0 - x);
    if edge < alpha / 2.0 {
        0.5 * (1.0 - (2.0 * PI * edge / alpha).cos())
    } else {
        1.0
    }
}

/// Multiplies `img` by the separable window `w(i) * w(j)`.
pub fn apodize(img: &RealMatrix, window: &WindowSpec) -> Result<RealMatrix> {
    let (n, m) = img.dims();
    if n < 2 || m < 2 {
        return Err(Error::size(format!("apodize needs dims >= 2, got {n}x{m}")));
    }
    let wr = window.samples(n);
    let wc = window.samples(m);
    RealMatrix::from_fn(n, m, |i, j| img[(i, j)] * wr[i] * wc[j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psd::border_image;

    #[test]
    fn mirror_hand_example() {
        let img = RealMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let expected = RealMatrix::from_rows(&[
            [1.0, 2.0, 2.0, 1.0],
            [3.0, 4.0, 4.0, 3.0],
            [3.0, 4.0, 4.0, 3.0],
            [1.0, 2.0, 2.0, 1.0],
        ])
        .unwrap();
        assert_eq!(mirror_image(&img), expected);
    }

    #[test]
    fn mirrored_border_image_vanishes() {
        let img = RealMatrix::from_fn(3, 5, |i, j| (i * 7 + j * j) as f64 - 4.5).unwrap();
        let b = border_image(&mirror_image(&img)).unwrap();
        assert_eq!(b.as_matrix().max_abs(), 0.0);
    }

    #[test]
    fn mirror_of_single_pixel() {
        let img = RealMatrix::from_vec(1, 1, vec![9.0]).unwrap();
        assert_eq!(
            mirror_image(&img),
            RealMatrix::from_vec(2, 2, vec![9.0; 4]).unwrap()
        );
    }

    #[test]
    fn rect_is_identity() {
        let img = RealMatrix::from_fn(4, 6, |i, j| (i + 2 * j) as f64).unwrap();
        assert_eq!(apodize(&img, &WindowSpec::rect()).unwrap(), img);
    }

    #[test]
    fn tukey_alpha_one_endpoints() {
        let w = WindowSpec::tukey(1.0).unwrap().samples(16);
        assert_eq!(w[0], 0.0);
        assert_eq!(w[15], 0.0);
        let img = RealMatrix::from_vec(4, 8, vec![5.0; 32]).unwrap();
        let out = apodize(&img, &WindowSpec::tukey(1.0).unwrap()).unwrap();
        assert!(out.row(0).iter().all(|&v| v == 0.0));
        assert!(out.column(7).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn odd_length_centers_are_one() {
        for spec in [
            WindowSpec::hamming(),
            WindowSpec::tukey(0.5).unwrap(),
            WindowSpec::tukey(1.0).unwrap(),
        ] {
            let w = spec.samples(9);
            assert_eq!(w[4], 1.0, "{spec:?}");
        }
        let img = RealMatrix::from_fn(5, 7, |i, j| 1.0 + (i * 7 + j) as f64).unwrap();
        let out = apodize(&img, &WindowSpec::tukey(0.5).unwrap()).unwrap();
        assert_eq!(out[(2, 3)], img[(2, 3)]);
    }

    #[test]
    fn hamming_endpoints() {
        let w = WindowSpec::hamming().samples(5);
        assert!((w[0] - 0.08).abs() < 1e-15);
        assert!((w[1] - 0.54).abs() < 1e-15);
    }

    #[test]
    fn invalid_alpha() {
        assert!(matches!(WindowSpec::tukey(1.5), Err(Error::Parameter(_))));
        assert!(matches!(WindowSpec::tukey(-0.1), Err(Error::Parameter(_))));
        assert!(WindowSpec::tukey(f64::NAN).is_err());
    }

    #[test]
    fn apodize_size_error() {
        let img = RealMatrix::zeros(1, 4).unwrap();
        assert!(matches!(
            apodize(&img, &WindowSpec::hamming()),
            Err(Error::Size(_))
        ));
    }
}
