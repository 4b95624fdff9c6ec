use morrey_orlicz::grid::log_grid;
use morrey_orlicz::orlicz::{OrliczSpec, PowerLogInverse};
use morrey_orlicz::verify::{example_preset, PresetParams};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = OrliczSpec> {
    prop_oneof![
        (1.1f64..4.0).prop_map(|p| OrliczSpec::power(p).unwrap()),
        (1.1f64..3.0, 0.1f64..2.0).prop_map(|(p1, d)| OrliczSpec::max_power(p1, p1 + d).unwrap()),
        (1.5f64..4.0, 0.0f64..1.0).prop_map(|(p, s)| {
            let t = 1.0 - 1.0 / p;
            let a = s * (t.sqrt() - t);
            OrliczSpec::power_log_inverse(PowerLogInverse::damped_above(p, a)).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_undoes_evaluate(phi in family(), e in -6.0f64..6.0) {
        let u = 10f64.powf(e);
        let back = phi.inverse(phi.evaluate(u).unwrap()).unwrap();
        prop_assert!((back - u).abs() <= 1e-8 * (1.0 + u), "u={u} back={back}");
    }

    #[test]
    fn chords_lie_above(phi in family()) {
        let g = log_grid(1e-3, 1e3, 97);
        let v: Vec<f64> = g.iter().map(|&u| phi.evaluate(u).unwrap()).collect();
        for i in 1..g.len() - 1 {
            for j in [1usize, 3, 7] {
                if i < j || i + j >= g.len() {
                    continue;
                }
                let (a, b) = (i - j, i + j);
                let chord = v[a] + (v[b] - v[a]) * (g[i] - g[a]) / (g[b] - g[a]);
                prop_assert!(v[i] <= chord * (1.0 + 1e-10), "u={} phi={} chord={chord}", g[i], v[i]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn young_product_between_one_and_two(phi in family()) {
        let r = phi.young_product_check(&log_grid(1e-6, 1e6, 64)).unwrap();
        prop_assert!(r.min_ratio >= 1.0 - 1e-4 && r.max_ratio <= 2.0 + 1e-4, "{r:?}");
    }
}

#[test]
fn biconjugate_recovers_phi() {
    let specs = [
        OrliczSpec::power(1.5).unwrap(),
        OrliczSpec::power(3.0).unwrap(),
        OrliczSpec::max_power(4.0 / 3.0, 1.6).unwrap(),
        OrliczSpec::power_log_inverse(PowerLogInverse::damped_above(2.0, 0.1)).unwrap(),
    ];
    for phi in &specs {
        let bi = phi.conjugate().unwrap().conjugate().unwrap();
        for u in log_grid(1e-2, 1e2, 17) {
            let (a, b) = (bi.evaluate(u).unwrap(), phi.evaluate(u).unwrap());
            assert!((a - b).abs() <= 1e-4 * (1.0 + b), "{phi:?} u={u}: {a} vs {b}");
        }
    }
}

#[test]
fn young_product_on_presets() {
    let grid = log_grid(1e-6, 1e6, 64);
    for id in [1, 3] {
        let p = example_preset(&PresetParams::default_for(id).unwrap()).unwrap();
        for spec in [&p.phi, &p.psi] {
            let r = spec.young_product_check(&grid).unwrap();
            assert!(r.min_ratio >= 1.0 - 1e-4 && r.max_ratio <= 2.0 + 1e-4, "family {id}: {r:?}");
        }
    }
    let r = OrliczSpec::power(2.0).unwrap().young_product_check(&grid).unwrap();
    assert!((r.min_ratio - 2.0).abs() < 1e-6 && (r.max_ratio - 2.0).abs() < 1e-6);
}

#[test]
fn delta2_for_powers_is_exact() {
    let grid = log_grid(1e-4, 1e4, 33);
    for p in [1.0, 1.5, 2.0, 3.0] {
        let d = OrliczSpec::power(p).unwrap().delta2_estimate(&grid).unwrap();
        assert!(d.satisfied);
        assert!((d.d2 - 2f64.powf(p)).abs() < 1e-12 * d.d2);
    }
    let ind = OrliczSpec::power(1.0).unwrap().conjugate().unwrap();
    let d = ind.delta2_estimate(&grid).unwrap();
    assert!(!d.satisfied && d.d2.is_infinite());
}
