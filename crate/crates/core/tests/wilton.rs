use ezeta_core::cf::cf_expand;
use ezeta_core::divisor::divisor_sieve;
use ezeta_core::wilton::{
    quotient_envelope, envelope_report, theorem1_ratio, transform_residual, wilton_sine_sum, wilton_sum, Eta,
};
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn enumerated_values() {
    let t = divisor_sieve(10).unwrap();
    let zero = Eta::from_f64(0.0).unwrap();
    assert_eq!(wilton_sum(3.0, &zero, &t).unwrap().value, Complex64::new(5.0, 0.0));
    let half = Eta::ratio(1, 2, 64).unwrap();
    assert_eq!(wilton_sum(4.0, &half, &t).unwrap().value, Complex64::new(2.0, 0.0));
}

#[test]
fn identities_on_e_minus_two_pi() {
    let t = divisor_sieve(100_000).unwrap();
    let eta = Eta::exp_neg_two_pi(1, 60).unwrap();
    for x in [1e3, 1e4, 1e5] {
        let a = wilton_sum(x, &eta, &t).unwrap().value;
        assert_eq!(wilton_sum(x, &eta.neg(), &t).unwrap().value, a.conj());
        assert_eq!(wilton_sum(x, &eta.shifted(1), &t).unwrap().value, a);
        assert!(a.norm() <= t.prefix(x as u64) as f64);
        assert_eq!(wilton_sine_sum(x, &eta.neg(), &t).unwrap(), -a.im);
    }
}

#[test]
fn half_precision_changes_little() {
    let t = divisor_sieve(30_000).unwrap();
    let eta = Eta::frac_exp_two_pi(1, 80).unwrap();
    let full = wilton_sum(30_000.0, &eta, &t).unwrap().value;
    let half = eta.truncated(eta.value().bits() / 2);
    let trunc = wilton_sum(30_000.0, &half, &t).unwrap().value;
    assert!((full - trunc).norm() < 1e-6);
}

#[test]
fn transform_ratio_bounded() {
    let t = divisor_sieve(30_000).unwrap();
    let eta = Eta::frac_exp_two_pi(1, 60).unwrap();
    let ratios: Vec<f64> = [1e3, 3e3, 1e4, 3e4]
        .iter()
        .map(|&x| transform_residual(x, &eta, &t).unwrap().ratio)
        .collect();
    let mut sorted = ratios.clone();
    sorted.sort_by(f64::total_cmp);
    let median = 0.5 * (sorted[1] + sorted[2]);
    assert!(ratios.iter().all(|&r| r <= 10.0 * median), "{ratios:?}");
}

#[test]
fn theorem1_weak_form_decreases() {
    let t = divisor_sieve(100_000).unwrap();
    let rows: Vec<_> = [1e3, 1e4, 1e5]
        .iter()
        .map(|&x| theorem1_ratio(x, 1, &t, 0.01).unwrap())
        .collect();
    assert!(rows.windows(2).all(|w| w[1].weak_ratio < w[0].weak_ratio), "{rows:?}");
    assert!(rows.iter().all(|r| r.weak_ratio <= 1.0 && r.ratio.is_finite()));
    assert!(theorem1_ratio(999.0, 1, &t, 0.01).is_err());
    assert!(theorem1_ratio(1e3, 3, &t, 0.01).is_err());
}

#[test]
fn envelope_scan() {
    let t = divisor_sieve(10_000).unwrap();
    let cf = cf_expand(2, 30).unwrap();
    // a_5(2) = 1: the first branch is x^(1/2) log x
    let x: f64 = 1e4;
    let v = quotient_envelope(x, 1, 5, &cf).unwrap();
    let want = x.sqrt() * x.ln().powi(2) + x.sqrt() * x.ln();
    assert!((v - want).abs() < 1e-9 * want);
    let r = envelope_report(x, 1, &t, &cf).unwrap();
    for n in 1..cf.certified_len {
        assert!(quotient_envelope(x, 1, n, &cf).unwrap() >= r.envelope);
    }
    assert!(quotient_envelope(x, 2, 5, &cf).is_err());
    assert!(quotient_envelope(x, 1, cf.certified_len, &cf).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn conjugation_exact(num in 1i64..10_000, x in 1.0f64..5000.0) {
        let t = divisor_sieve(5000).unwrap();
        let eta = Eta::ratio(num, 10_007, 128).unwrap();
        let a = wilton_sum(x, &eta, &t).unwrap().value;
        let b = wilton_sum(x, &eta.neg(), &t).unwrap().value;
        prop_assert_eq!(a.conj(), b);
        prop_assert!(a.norm() <= t.prefix(x as u64) as f64 * (1.0 + 1e-12));
    }
}
