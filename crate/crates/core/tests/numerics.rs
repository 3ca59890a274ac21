mod common;

use common::*;
use proptest::prelude::*;
use qconv_core::numerics::energy;
use qconv_core::{circular_convolve, dft, idft, Signal, Spectrum};

#[test]
fn dft_matches_reference_sum() {
    let mut r = rng(1);
    for len in [2, 4, 8, 16, 32] {
        let f = random_complex(&mut r, len);
        let got = dft(&Signal::new(f.clone()).unwrap());
        assert!(max_dev(got.values(), &naive_dft(&f)) < 1e-12, "N = {len}");
    }
}

#[test]
fn parseval_on_100_signals() {
    let mut r = rng(2);
    for i in 0..100 {
        let len = 1 << (1 + i % 5);
        let f = Signal::new(random_complex(&mut r, len)).unwrap();
        let lhs = dft(&f).energy();
        let rhs = len as f64 * energy(f.samples());
        assert!((lhs - rhs).abs() <= 1e-10 * rhs, "{lhs} vs {rhs}");
    }
}

#[test]
fn lowpass_impulse_from_idft() {
    // h_n = (1 + 2 cos(pi n / 4 + pi / 12)) / 8
    let h = qconv_core::convolution::FrequencyResponse::ideal_lowpass().impulse_response();
    let expect = [
        2.9319, 2.0000, 0.4824, -0.7321, -0.9319, 0.0, 1.5176, 2.7321,
    ];
    for (got, want) in h.samples().iter().zip(expect) {
        assert!((got.re - want / 8.0).abs() < 2e-5, "{got} vs {want}/8");
        assert!(got.im.abs() < 1e-15);
    }
}

proptest! {
    #[test]
    fn idft_inverts_dft(f in pow2_len(1..=5).prop_flat_map(complex_vec)) {
        let sig = Signal::new(f.clone()).unwrap();
        let back = idft(&dft(&sig));
        prop_assert!(max_dev(back.samples(), &f) <= 1e-12);
    }

    #[test]
    fn dft_inverts_idft(values in pow2_len(1..=5).prop_flat_map(complex_vec)) {
        let spec = Spectrum::natural(values.clone()).unwrap();
        prop_assert!(max_dev(dft(&idft(&spec)).values(), &values) <= 1e-12);
    }

    #[test]
    fn convolution_theorem(
        (f, h) in pow2_len(1..=5).prop_flat_map(|n| (complex_vec(n), complex_vec(n)))
    ) {
        let (fs, hs) = (Signal::new(f).unwrap(), Signal::new(h).unwrap());
        let y = circular_convolve(&fs, &hs).unwrap();
        let lhs = dft(&y);
        let product: Vec<_> = dft(&fs).values().iter().zip(dft(&hs).values()).map(|(a, b)| a * b).collect();
        prop_assert!(max_dev(lhs.values(), &product) <= 1e-10);
    }

    #[test]
    fn double_loop_matches_dft_route((f, h) in (unit_vec(8), unit_vec(8))) {
        let y = circular_convolve(&Signal::new(f.clone()).unwrap(), &Signal::new(h.clone()).unwrap()).unwrap();
        let product: Vec<_> = naive_dft(&f).iter().zip(naive_dft(&h)).map(|(a, b)| a * b).collect();
        let via_dft = idft(&Spectrum::natural(product).unwrap());
        prop_assert!(max_dev(y.samples(), via_dft.samples()) <= 1e-10);
        prop_assert!(max_dev(y.samples(), &naive_convolve(&f, &h)) <= 1e-14);
    }

    #[test]
    fn convolution_is_linear(
        (f, g, h) in (complex_vec(16), complex_vec(16), complex_vec(16)),
        a in -2.0..2.0f64,
    ) {
        let combo: Vec<_> = f.iter().zip(&g).map(|(x, y)| x * a + y).collect();
        let conv = |x: &[qconv_core::C64]| {
            circular_convolve(&Signal::new(x.to_vec()).unwrap(), &Signal::new(h.clone()).unwrap())
                .unwrap()
                .into_samples()
        };
        let lhs = conv(&combo);
        let rhs: Vec<_> = conv(&f).iter().zip(conv(&g)).map(|(x, y)| x * a + y).collect();
        prop_assert!(max_dev(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn convolution_commutes_with_shift((f, h) in (complex_vec(8), complex_vec(8)), shift in 0usize..8) {
        let rotate = |v: &[qconv_core::C64]| -> Vec<_> { (0..8).map(|n| v[(n + 8 - shift) % 8]).collect() };
        let hs = Signal::new(h).unwrap();
        let y = circular_convolve(&Signal::new(f.clone()).unwrap(), &hs).unwrap();
        let shifted = circular_convolve(&Signal::new(rotate(&f)).unwrap(), &hs).unwrap();
        prop_assert!(max_dev(shifted.samples(), &rotate(y.samples())) <= 1e-14);
    }

    #[test]
    fn normalize_scales_back(v in pow2_len(1..=5).prop_flat_map(complex_vec)) {
        let (u, norm) = qconv_core::normalize(&v).unwrap();
        prop_assert!((energy(&u) - 1.0).abs() <= 1e-12);
        let back: Vec<_> = u.iter().map(|x| x * norm).collect();
        prop_assert!(max_dev(&back, &v) <= 1e-15);
    }
}
