use proptest::prelude::*;
use psdfft::baselines::{apodize, mirror_image, WindowKind, WindowSpec};
use psdfft::fft2d::naive_dft_2d;
use psdfft::matrix::{max_abs_diff, relative_error};
use psdfft::metrics::cross_axis_energy;
use psdfft::psd::{border_image, boundary_data, decompose, opsd_boundary_spectrum, Method};
use psdfft::{OpCounter, RealMatrix};

fn image(min_log: u32, max_log: u32) -> impl Strategy<Value = RealMatrix> {
    (min_log..=max_log, min_log..=max_log).prop_flat_map(|(a, b)| {
        let (n, m) = (1usize << a, 1usize << b);
        prop::collection::vec(0.0..255.0f64, n * m)
            .prop_map(move |d| RealMatrix::from_vec(n, m, d).unwrap())
    })
}

fn any_image() -> impl Strategy<Value = RealMatrix> {
    (2usize..9, 2usize..9).prop_flat_map(|(n, m)| {
        prop::collection::vec(-1e3..1e3f64, n * m)
            .prop_map(move |d| RealMatrix::from_vec(n, m, d).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn opsd_equals_naive_border_spectrum(img in image(1, 6)) {
        let fast = opsd_boundary_spectrum(&boundary_data(&img).unwrap(), &mut OpCounter::default()).unwrap();
        let border = border_image(&img).unwrap().into_matrix().to_complex();
        prop_assert!(relative_error(&fast, &naive_dft_2d(&border), &border) < 1e-9);
    }

    #[test]
    fn boundary_data_matches_border_image(img in any_image()) {
        let b = border_image(&img).unwrap().into_matrix();
        let bd = boundary_data(&img).unwrap();
        let (n, m) = img.dims();
        prop_assert_eq!(bd.first_row(), b.row(0));
        prop_assert_eq!(bd.first_col(), &b.column(0)[..]);
        prop_assert_eq!(bd.first_row()[0], bd.first_col()[0]);
        prop_assert_eq!(bd.corner_sum(), b[(0, 0)] + b[(0, m - 1)]);
        // corner identity
        let corner = -(b[(0, 0)] + b[(0, m - 1)] + b[(n - 1, 0)]);
        prop_assert!((b[(n - 1, m - 1)] - corner).abs() <= 1e-12 * img.max_abs().max(1.0));
    }

    #[test]
    fn border_image_structure(img in any_image()) {
        let b = border_image(&img).unwrap().into_matrix();
        let (n, m) = b.dims();
        for i in 1..n - 1 {
            for j in 1..m - 1 {
                prop_assert_eq!(b[(i, j)], 0.0);
            }
            prop_assert_eq!(b[(i, m - 1)], -b[(i, 0)]);
        }
        for j in 1..m - 1 {
            prop_assert_eq!(b[(n - 1, j)], -b[(0, j)]);
        }
    }

    #[test]
    fn reconstruction_and_dc(img in image(1, 5)) {
        let mut counter = OpCounter::default();
        let d = decompose(&img, Method::Opsd, &mut counter).unwrap();
        let scale = img.max_abs().max(1.0);
        prop_assert!(max_abs_diff(&d.p.add(&d.s).unwrap(), &img) < 1e-9 * scale);
        prop_assert!(d.s.mean().abs() < 1e-9 * scale);
        prop_assert!((d.p.mean() - img.mean()).abs() < 1e-9 * scale);
        let ihat = &d.spectra.ihat;
        prop_assert!(relative_error(&d.phat().add(d.shat()).unwrap(), ihat, ihat) < 1e-12);
        prop_assert_eq!(d.phat()[(0, 0)], ihat[(0, 0)]);
    }

    #[test]
    fn smooth_and_periodic_spectra_are_hermitian(img in image(1, 4)) {
        let d = decompose(&img, Method::Opsd, &mut OpCounter::default()).unwrap();
        let (n, m) = img.dims();
        let tol = 1e-9 * d.spectra.ihat.max_abs().max(1.0);
        for x in [d.shat(), d.phat()] {
            for s in 0..n {
                for t in 0..m {
                    prop_assert!((x[(s, t)] - x[((n - s) % n, (m - t) % m)].conj()).norm() < tol);
                }
            }
        }
    }

    #[test]
    fn methods_agree(img in image(1, 5)) {
        let a = decompose(&img, Method::Opsd, &mut OpCounter::default()).unwrap();
        let b = decompose(&img, Method::NaivePsd, &mut OpCounter::default()).unwrap();
        let scale = img.max_abs().max(1.0);
        prop_assert!(max_abs_diff(&a.p, &b.p) < 1e-9 * scale);
        prop_assert!(max_abs_diff(&a.s, &b.s) < 1e-9 * scale);
    }

    #[test]
    fn mirrored_images_have_no_smooth_part(img in image(0, 4)) {
        let mirrored = mirror_image(&img);
        prop_assert_eq!(border_image(&mirrored).unwrap().as_matrix().max_abs(), 0.0);
        let d = decompose(&mirrored, Method::Opsd, &mut OpCounter::default()).unwrap();
        prop_assert!(d.shat().max_abs() < 1e-10);
    }

    #[test]
    fn mirror_symmetry(img in any_image()) {
        let x = mirror_image(&img);
        let (n2, m2) = x.dims();
        for i in 0..n2 {
            for j in 0..m2 {
                prop_assert_eq!(x[(i, j)], x[(i, m2 - 1 - j)]);
                prop_assert_eq!(x[(i, j)], x[(n2 - 1 - i, j)]);
            }
        }
    }

    #[test]
    fn apodize_never_amplifies(
        img in any_image(),
        kind in prop_oneof![Just(WindowKind::Tukey), Just(WindowKind::Hamming), Just(WindowKind::Rect)],
        alpha in 0.0..=1.0f64,
    ) {
        let spec = WindowSpec::new(kind, alpha).unwrap();
        let out = apodize(&img, &spec).unwrap();
        for (o, i) in out.as_slice().iter().zip(img.as_slice()) {
            prop_assert!(o.abs() <= i.abs());
        }
    }
}

#[test]
fn counters_for_both_methods_at_64() {
    let img = psdfft::synth::random_image(64, 64, 3).unwrap();
    let mut opsd = OpCounter::default();
    decompose(&img, Method::Opsd, &mut opsd).unwrap();
    assert_eq!(opsd.dft_points, 12_352);
    assert_eq!(opsd.ext_mem_points, 12_415);
    let mut psd = OpCounter::default();
    decompose(&img, Method::NaivePsd, &mut psd).unwrap();
    assert_eq!(psd.dft_points, 16_384);
    assert_eq!(psd.ext_mem_points, 16_384);
}

#[test]
fn ramp_artifact_energy_drops() {
    let img = psdfft::synth::ramp_image(64, 64).unwrap();
    let d = decompose(&img, Method::NaivePsd, &mut OpCounter::default()).unwrap();
    assert!(cross_axis_energy(d.phat()) < cross_axis_energy(&d.spectra.ihat));
}

#[test]
fn random_32_methods_agree() {
    let img = psdfft::synth::random_image(32, 32, 11).unwrap();
    let a = decompose(&img, Method::Opsd, &mut OpCounter::default()).unwrap();
    let b = decompose(&img, Method::NaivePsd, &mut OpCounter::default()).unwrap();
    assert!(max_abs_diff(&a.p, &b.p) < 1e-9);
    assert!(max_abs_diff(&a.s, &b.s) < 1e-9);
}
