use morrey_orlicz::potential::{ball_average, hedberg_gap, maximal_function, riesz_potential};
use morrey_orlicz::{OperatorParams, TestFunction};
use proptest::prelude::*;

fn piece(n: usize) -> impl Strategy<Value = TestFunction> {
    prop_oneof![
        (0.2f64..3.0, 0.2f64..3.0).prop_map(move |(t, k)| TestFunction::indicator(n, t).unwrap().scaled(k)),
        (0.1f64..2.0, 0.1f64..2.0, 0.2f64..3.0).prop_map(move |(a, w, v)| TestFunction::step(n, a, a + w, v).unwrap()),
        (-3.0f64..3.0, 0.2f64..1.5).prop_map(move |(c, t)| TestFunction::translated_indicator(n, c, t).unwrap()),
        (-0.3f64..1.5, 0.3f64..3.0).prop_map(move |(b, t)| TestFunction::radial_power(n, b, t).unwrap()),
    ]
}

fn point(n: usize, x0: f64) -> Vec<f64> {
    let mut x = vec![0.0; n];
    x[0] = x0;
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hedberg_estimate(
        (n, f) in (1usize..=2).prop_flat_map(|n| (Just(n), piece(n))),
        x0 in -4.0f64..4.0, r in 0.05f64..8.0, a in 0.05f64..0.95,
    ) {
        let prm = OperatorParams::new(a * n as f64, n).unwrap();
        let g = hedberg_gap(&f, &point(n, x0), r, &prm).unwrap();
        prop_assert!(g.lhs <= g.rhs * (1.0 + 1e-6), "{g:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn maximal_dominates_averages(
        (n, f) in (1usize..=2).prop_flat_map(|n| (Just(n), piece(n))),
        x0 in -4.0f64..4.0, r in 0.01f64..20.0,
    ) {
        let m = maximal_function(&f, &point(n, x0)).unwrap();
        prop_assert!(ball_average(&f, x0, r).unwrap() <= m + 1e-9);
    }

    #[test]
    fn maximal_is_sublinear(
        (n, f, g) in (1usize..=2).prop_flat_map(|n| (Just(n), piece(n), piece(n))),
        x0 in -4.0f64..4.0,
    ) {
        let x = point(n, x0);
        let sum = maximal_function(&f.add(&g).unwrap(), &x).unwrap();
        let parts = maximal_function(&f, &x).unwrap() + maximal_function(&g, &x).unwrap();
        prop_assert!(sum <= parts + 1e-9, "{sum} > {parts}");
    }

    #[test]
    fn riesz_is_monotone(
        (n, f, g) in (1usize..=2).prop_flat_map(|n| (Just(n), piece(n), piece(n))),
        x0 in -4.0f64..4.0, a in 0.05f64..0.95,
    ) {
        // f + g >= g >= 0
        let prm = OperatorParams::new(a * n as f64, n).unwrap();
        let x = point(n, x0);
        let big = riesz_potential(&f.add(&g).unwrap(), &x, &prm).unwrap();
        let small = riesz_potential(&g, &x, &prm).unwrap();
        prop_assert!(small >= 0.0);
        prop_assert!(big >= small - 1e-9, "{big} < {small}");
    }
}

#[test]
fn hedberg_reference_case() {
    let prm = OperatorParams::new(0.5, 1).unwrap();
    let chi = TestFunction::indicator(1, 1.0).unwrap();
    let g = hedberg_gap(&chi, &[0.0], 1.0, &prm).unwrap();
    assert!((g.lhs - 4.0).abs() < 1e-6);
    assert!((g.rhs - 4.0 / (2f64.sqrt() - 1.0)).abs() < 1e-10);
}

#[test]
fn riesz_is_linear() {
    let prm = OperatorParams::new(0.5, 2).unwrap();
    let f = TestFunction::translated_indicator(2, 1.5, 0.7)
        .unwrap()
        .add(&TestFunction::indicator(2, 1.0).unwrap())
        .unwrap();
    for x0 in [0.0, 0.4, 1.5, 3.0] {
        let one = riesz_potential(&f, &[x0, 0.0], &prm).unwrap();
        let two = riesz_potential(&f.scaled(2.0), &[x0, 0.0], &prm).unwrap();
        assert!((two - 2.0 * one).abs() <= 1e-12 * two);
    }
}
