use morrey_orlicz::morrey::{
    central_norm, chi_central_norm_closed, chi_norm_closed, holder_gap, luxemburg_norm, modular, weak_norm,
};
use morrey_orlicz::{Ball, MorreyParams, OrliczSpec, TestFunction};
use proptest::prelude::*;

fn piece(n: usize) -> impl Strategy<Value = TestFunction> {
    prop_oneof![
        (0.2f64..3.0, 0.2f64..3.0).prop_map(move |(t, k)| TestFunction::indicator(n, t).unwrap().scaled(k)),
        (0.1f64..2.0, 0.1f64..2.0, 0.2f64..3.0).prop_map(move |(a, w, v)| TestFunction::step(n, a, a + w, v).unwrap()),
        (0.0f64..3.0, 0.2f64..1.5).prop_map(move |(c, t)| TestFunction::translated_indicator(n, c, t).unwrap()),
        (-0.3f64..1.5, 0.3f64..3.0).prop_map(move |(b, t)| TestFunction::radial_power(n, b, t).unwrap()),
    ]
}

fn function() -> impl Strategy<Value = TestFunction> {
    (1usize..=2).prop_flat_map(|n| {
        prop::collection::vec(piece(n), 1..=3)
            .prop_map(|ps| ps.iter().skip(1).fold(ps[0].clone(), |acc, p| acc.add(p).unwrap()))
    })
}

fn prm(n: usize, p: f64, lambda: f64) -> MorreyParams {
    MorreyParams::new(OrliczSpec::power(p).unwrap(), lambda, n).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn indicator_norms_match_closed_forms(
        p in 1.1f64..4.0, lambda in 0.0f64..0.9, t in 0.1f64..10.0, r in 0.1f64..10.0, n in 1usize..=2,
    ) {
        let m = prm(n, p, lambda);
        let chi = TestFunction::indicator(n, t).unwrap();
        let num = luxemburg_norm(&chi, &m, &Ball::centered(n, r).unwrap()).unwrap();
        prop_assert!(rel(num, chi_norm_closed(&m, t, r).unwrap()) <= 1e-6);
        let c = central_norm(&chi, &m, None).unwrap().value;
        prop_assert!(rel(c, chi_central_norm_closed(&m, t).unwrap()) <= 1e-5);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_homogeneous(f in function(), p in 1.2f64..3.0, lambda in 0.0f64..0.9, r in 0.3f64..4.0) {
        let m = prm(f.dim(), p, lambda);
        let b = Ball::centered(f.dim(), r).unwrap();
        let base = luxemburg_norm(&f, &m, &b).unwrap();
        for c in [0.5, 2.0, 10.0] {
            let scaled = luxemburg_norm(&f.scaled(c), &m, &b).unwrap();
            prop_assert!((scaled - c * base).abs() <= 1e-8 * c * base.max(1e-300), "c={c}: {scaled} vs {}", c * base);
        }
    }

    #[test]
    fn modular_at_the_norm_is_one(f in function(), p in 1.2f64..3.0, lambda in 0.0f64..0.9, r in 0.3f64..4.0) {
        let m = prm(f.dim(), p, lambda);
        let b = Ball::centered(f.dim(), r).unwrap();
        let nrm = luxemburg_norm(&f, &m, &b).unwrap();
        prop_assume!(nrm > 0.0 && nrm.is_finite());
        let md = modular(&f, &m, &b, nrm).unwrap();
        prop_assert!((md - 1.0).abs() <= 1e-6, "modular {md}");
    }

    #[test]
    fn weak_never_exceeds_strong(f in function(), p in 1.2f64..3.0, lambda in 0.0f64..0.9, r in 0.3f64..4.0) {
        let m = prm(f.dim(), p, lambda);
        let b = Ball::centered(f.dim(), r).unwrap();
        let strong = luxemburg_norm(&f, &m, &b).unwrap();
        let weak = weak_norm(&f, &m, &b).unwrap();
        prop_assert!(weak <= strong * (1.0 + 1e-8) + 1e-8, "weak {weak} > strong {strong}");
    }
}

#[test]
fn weak_equals_strong_on_indicators() {
    for n in 1..=2 {
        for (t, r) in [(1.0, 1.0), (0.5, 2.0), (3.0, 1.5)] {
            let m = prm(n, 2.0, 0.3);
            let chi = TestFunction::indicator(n, t).unwrap();
            let b = Ball::centered(n, r).unwrap();
            let (w, s) = (weak_norm(&chi, &m, &b).unwrap(), luxemburg_norm(&chi, &m, &b).unwrap());
            assert!(rel(w, s) < 1e-8, "n={n} t={t} r={r}: {w} vs {s}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn holder_inequality(
        (f, g) in (1usize..=2).prop_flat_map(|n| (piece(n), piece(n))),
        p in 1.2f64..3.0, lambda in 0.0f64..0.9, r in 0.3f64..4.0,
    ) {
        let m = prm(f.dim(), p, lambda);
        let gap = holder_gap(&f, &g, &m, &Ball::centered(f.dim(), r).unwrap()).unwrap();
        prop_assert!(gap.lhs <= gap.rhs * (1.0 + 1e-8) + 1e-8, "{gap:?}");
    }
}
