use std::f64::consts::PI;

use cauchy_beta::gamma::log_beta;
use cauchy_beta::{
    add1_coefficient, add2_beta, euler_beta_closed, integrate_1d, integrate_cube, log1_beta, log2_beta,
    mult_beta_closed, sine_add_beta, PositiveReal, QuadConfig,
};
use proptest::prelude::*;

fn pr(x: f64) -> PositiveReal {
    PositiveReal::new(x).unwrap()
}

#[test]
fn beta_recurrence_on_grid() {
    let grid: Vec<f64> = (0..40).map(|i| 0.25 + i as f64 * (19.75 / 39.0)).collect();
    for &x in &grid {
        for &y in &grid {
            let lhs = euler_beta_closed(pr(x + 1.0), pr(y));
            let rhs = euler_beta_closed(pr(x), pr(y)) * x / (x + y);
            assert!(((lhs - rhs) / rhs).abs() <= 1e-12, "x={x} y={y}");
        }
    }
}

#[test]
fn additive_coefficient_signs() {
    assert!(add1_coefficient(2).unwrap() > 0.0);
    for k in 3..=6 {
        assert!(add1_coefficient(k).unwrap() < 0.0, "k={k}");
    }
}

#[test]
fn mult_diagonal_continuity() {
    for x in [1.5, 2.0, 5.0, 17.0, 123.25] {
        let v = mult_beta_closed(x, x + 1e-9).unwrap();
        assert!((v - (x - 1.0)).abs() <= 1e-8, "x={x}");
    }
}

#[test]
fn cube_and_interval_agree_on_smooth_integrands() {
    let config = QuadConfig::default();
    let cases: [&(dyn Fn(f64) -> f64 + Sync); 3] = [&|t| (PI * t).sin(), &|t| t.exp(), &|t| 1.0 / (1.0 + t * t)];
    for f in cases {
        let a = integrate_1d(f, &config).unwrap();
        let b = integrate_cube(|p| f(p[0]), 1, &config).unwrap();
        assert!((a.value - b.value).abs() <= a.abs_error_estimate + b.abs_error_estimate);
    }
}

proptest! {
    #[test]
    fn beta_symmetric_exactly(x in 0.01f64..100.0, y in 0.01f64..100.0) {
        prop_assert_eq!(log_beta(pr(x), pr(y)).to_bits(), log_beta(pr(y), pr(x)).to_bits());
    }

    #[test]
    fn beta_boundary_law(x in 0.05f64..150.0) {
        let v = euler_beta_closed(pr(x), pr(1.0));
        prop_assert!((v * x - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn pair_pendants_symmetric(x in 1.0001f64..50.0, y in 1.0001f64..50.0) {
        let swap = |f: fn(f64, f64) -> cauchy_beta::Result<f64>| {
            let (a, b) = (f(x, y).unwrap(), f(y, x).unwrap());
            (a - b).abs() <= 1e-14 * a.abs().max(f64::MIN_POSITIVE)
        };
        prop_assert!(swap(mult_beta_closed));
        prop_assert!(swap(add2_beta));
        prop_assert!(swap(log1_beta));
        prop_assert!(swap(log2_beta));
        prop_assert!(swap(sine_add_beta));
    }

    #[test]
    fn mult_is_a_strict_mean(x in 1.0001f64..1e3, y in 1.0001f64..1e3) {
        let m = mult_beta_closed(x, y).unwrap();
        let (lo, hi) = (x.min(y) - 1.0, x.max(y) - 1.0);
        prop_assert!(lo <= m && m <= hi);
        if (x - y).abs() > 1e-6 {
            prop_assert!(lo < m && m < hi);
        }
    }

    #[test]
    fn mult_shift_homogeneous(a in 0.1f64..10.0, b in 0.1f64..10.0, t in 0.1f64..10.0) {
        let lhs = mult_beta_closed(1.0 + t * a, 1.0 + t * b).unwrap();
        let rhs = t * mult_beta_closed(1.0 + a, 1.0 + b).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() <= 1e-12);
    }

    #[test]
    fn add2_translation_equivariant(x in -1e3f64..1e3, y in -1e3f64..1e3, c in -1e3f64..1e3) {
        let lhs = add2_beta(x + c, y + c).unwrap();
        let rhs = add2_beta(x, y).unwrap() + c;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (x.abs() + y.abs() + c.abs() + 1.0));
    }

    #[test]
    fn log2_geometric_mean(x in 1.0001f64..1e6, y in 1.0001f64..1e6) {
        let lhs = log2_beta(x, y).unwrap().exp();
        let rhs = ((x - 1.0) * (y - 1.0)).sqrt();
        prop_assert!(((lhs - rhs) / rhs).abs() <= 1e-12);
    }

    #[test]
    fn sine_periodic(x in -10.0f64..10.0, y in -10.0f64..10.0) {
        let a = sine_add_beta(x + 2.0 * PI, y).unwrap();
        let b = sine_add_beta(x, y).unwrap();
        prop_assert!((a - b).abs() <= 1e-12);
    }
}
