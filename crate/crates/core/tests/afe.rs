use std::f64::consts::TAU;

use ezeta_core::afe::{afe_meansquare_profile, afe_remainder, afe_sample, afe_sum};
use ezeta_core::divisor::divisor_sieve;
use ezeta_core::mean_square::zeta_sq_integral;
use ezeta_core::quadrature::integrate_panels;
use ezeta_core::zeta::{zeta_sq, ZetaEvalConfig};

#[test]
fn sum_matches_oracle() {
    let t = divisor_sieve(100).unwrap();
    assert!((afe_sum(50.0, &t).unwrap() + 0.983_249_625_560_306_2).abs() < 1e-10);
}

#[test]
fn reconstruction_on_grid() {
    let t = divisor_sieve(1000).unwrap();
    let cfg = ZetaEvalConfig::default();
    for i in 0..100 {
        let x = 1.0 + f64::from(i) * 39.7;
        let s = afe_sample(x, &t, &cfg).unwrap();
        assert!((s.afe_sum + s.remainder - zeta_sq(x, &cfg).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn jump_at_four_pi() {
    let t = divisor_sieve(10).unwrap();
    let cfg = ZetaEvalConfig::default();
    let c = 2.0 * TAU;
    let jump = afe_remainder(c + 1e-9, &t, &cfg).unwrap() - afe_remainder(c - 1e-9, &t, &cfg).unwrap();
    // 2 d(2) 2^(-1/2) cos(-4 pi - pi/4), with the sum gaining what R loses
    let want = -2.0 * 2.0 / 2f64.sqrt() * (-2.0 * TAU - std::f64::consts::FRAC_PI_4).cos();
    assert!((jump - want).abs() < 1e-6, "{jump} vs {want}");
}

#[test]
fn remainder_cancels_on_average() {
    let t = divisor_sieve(100).unwrap();
    let cfg = ZetaEvalConfig::default();
    let mut f = |x: f64| afe_remainder(x, &t, &cfg).map(|r| [r]);
    let mut r_int = 0.0;
    let mut lo = 100.0;
    for n in 16..=32 {
        let hi = (TAU * f64::from(n)).min(200.0);
        if hi > lo {
            r_int += integrate_panels(&mut f, lo, hi, 1e-8, 100.0).unwrap()[0];
            lo = hi;
        }
    }
    r_int += integrate_panels(&mut f, lo, 200.0, 1e-8, 100.0).unwrap()[0];
    let z_int = zeta_sq_integral(100.0, 200.0, &cfg, 1e-8).unwrap();
    assert!(r_int.abs() < 0.1 * z_int, "{r_int} vs {z_int}");
}

#[test]
fn mean_square_nondecreasing() {
    let t = divisor_sieve(100).unwrap();
    let ts: Vec<f64> = (0..12).map(|i| 1.0 + 40.0 * f64::from(i)).collect();
    let v = afe_meansquare_profile(&ts, &t, &ZetaEvalConfig::default(), 1e-8).unwrap();
    assert_eq!(v[0], 0.0);
    assert!(v.windows(2).all(|w| w[1] >= w[0]));
}
