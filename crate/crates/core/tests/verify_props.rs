use morrey_orlicz::verify::{
    balanced_power_preset, boundedness_experiment, check_condition_1, check_condition_2, check_condition_3,
    constant_ledger, example_preset, ledger_from_reports, power_case_relations, power_preset, unbalanced_power_preset,
    ConditionReport, GridSpec, LedgerInputs, Preset, PresetParams,
};
use morrey_orlicz::TestFunction;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scan(p: &Preset) -> [ConditionReport; 3] {
    let g = GridSpec::default();
    [
        check_condition_1(&p.phi, &p.psi, p.params, &g).unwrap(),
        check_condition_2(&p.phi, &p.psi, p.params, &g, &g).unwrap(),
        check_condition_3(&p.phi, &p.psi, p.params, &g, &g).unwrap(),
    ]
}

#[test]
fn third_condition_controls_the_second() {
    let factor = 1.0 + 2.0 / std::f64::consts::LN_2;
    let ex1 = example_preset(&PresetParams::default_for(1).unwrap()).unwrap();
    for p in [ex1, balanced_power_preset().unwrap()] {
        let [_, c2, c3] = scan(&p);
        assert!(c3.passed(), "{}: third condition should pass", p.name);
        assert!(c2.passed(), "{}: second condition should pass", p.name);
        let bound = factor * c3.best_constant + 1e-6;
        assert!(c2.best_constant <= bound, "{}: {} > {bound}", p.name, c2.best_constant);
    }
}

#[test]
fn zero_lambda_second_within_five_times_first() {
    let ex1 = example_preset(&PresetParams::default_for(1).unwrap()).unwrap();
    for p in [ex1, unbalanced_power_preset().unwrap()] {
        assert_eq!(p.params.lambda, 0.0);
        let [c1, c2, _] = scan(&p);
        assert!(c1.passed() && c2.passed(), "{}", p.name);
        assert!(c2.best_constant <= 5.0 * c1.best_constant, "{}: {} vs {}", p.name, c2.best_constant, c1.best_constant);
    }
}

#[test]
fn classical_first_condition_implies_second() {
    // λ = μ = 0 with Sobolev exponents
    for (n, alpha, p) in [(1usize, 0.5, 1.5), (1, 0.25, 2.0), (2, 0.5, 1.5), (2, 1.0, 1.25)] {
        let q = 1.0 / (1.0 / p - alpha / n as f64);
        let pr = power_preset(n, alpha, 0.0, 0.0, p, q).unwrap();
        let [c1, c2, _] = scan(&pr);
        assert!(c1.passed(), "n={n} alpha={alpha} p={p}");
        assert!(c2.passed(), "n={n} alpha={alpha} p={p}");
    }
}

#[test]
fn ledger_is_monotone_in_its_inputs() {
    let levels = [1.0, 2.5, 7.0];
    let c3 = |c0: f64, c1: f64, c2: f64| {
        let l = constant_ledger(LedgerInputs {
            n: 2,
            alpha: 0.5,
            lambda: 0.5,
            mu: 0.8,
            c0_strong: c0,
            c0_weak: c0,
            c1,
            c2,
        })
        .unwrap();
        (l.c3, l.c3_weak)
    };
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let base = c3(levels[i], levels[j], levels[k]);
                for (di, dj, dk) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
                    let (a, b, c) = (i + di, j + dj, k + dk);
                    if a > 2 || b > 2 || c > 2 {
                        continue;
                    }
                    let up = c3(levels[a], levels[b], levels[c]);
                    assert!(up.0 >= base.0 && up.1 >= base.1, "({i},{j},{k}) -> ({a},{b},{c})");
                }
            }
        }
    }
}

struct Sample {
    n: usize,
    alpha: f64,
    lambda: f64,
    mu: f64,
    p: f64,
    q: f64,
}

impl Sample {
    /// Every nonzero exponent gap the scan must resolve is at least `gap`.
    fn resolvable(&self, gap: f64) -> bool {
        let a = self.alpha / self.n as f64;
        let (ip, iq) = (1.0 / self.p, 1.0 / self.q);
        let tail = a + (self.lambda - 1.0) * ip;
        let scaling = tail - (self.mu - 1.0) * iq;
        let balance = self.lambda * ip - self.mu * iq;
        let sobolev = iq - ip + a;
        let ok = |x: f64| x.abs() < 1e-12 || x.abs() >= gap;
        ok(scaling) && ok(balance) && ok(sobolev) && tail.abs() >= gap
    }
}

fn candidates() -> Vec<Sample> {
    let mut out = Vec::new();
    for n in [1usize, 2] {
        for alpha in [0.25, 0.5] {
            for lambda in [0.0, 0.25, 0.5] {
                for p in [1.25, 1.5, 2.0] {
                    let iq = 1.0 / p - alpha / n as f64;
                    if iq <= 0.05 {
                        continue;
                    }
                    let q = 1.0 / iq;
                    let mu = lambda * q / p;
                    for (dmu, diq) in [(0.0, 0.0), (0.2, 0.0), (-0.2, 0.0), (0.0, 0.15), (0.0, -0.15)] {
                        let (mu, iq) = (mu + dmu, iq + diq);
                        if !(0.0..1.0).contains(&mu) || !(iq > 0.0 && iq < 1.0) {
                            continue;
                        }
                        let s = Sample { n, alpha, lambda, mu, p, q: 1.0 / iq };
                        if s.resolvable(0.08) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn power_relations_agree_with_scans() {
    let mut pool = candidates();
    pool.shuffle(&mut ChaCha8Rng::seed_from_u64(11));
    pool.truncate(20);
    assert_eq!(pool.len(), 20);
    let (mut holds, mut fails) = (0, 0);
    for s in &pool {
        let rel = power_case_relations(s.p, s.q, s.lambda, s.mu, s.alpha, s.n).unwrap();
        let pr = power_preset(s.n, s.alpha, s.lambda, s.mu, s.p, s.q).unwrap();
        let [c1, c2, c3] = scan(&pr);
        let predicted = [rel.predicts.condition_1, rel.predicts.condition_2, rel.predicts.condition_3];
        for (r, want) in [c1, c2, c3].iter().zip(predicted) {
            let label = format!(
                "n={} alpha={} lambda={} mu={} p={} q={} condition {}",
                s.n, s.alpha, s.lambda, s.mu, s.p, s.q, r.condition_id
            );
            assert_eq!(!r.divergence_flag, want, "{label}: {:?}", r.boundary_margins);
            if want {
                holds += 1;
            } else {
                fails += 1;
            }
        }
    }
    assert!(holds > 0 && fails > 0, "sample exercises one verdict only");
}

#[test]
fn boundedness_stays_below_ledger_bound() {
    let p = balanced_power_preset().unwrap();
    let [c1, c2, _] = scan(&p);
    let ledger = ledger_from_reports(&c1, &c2, 1.0, 1.0).unwrap();
    let tests: Vec<TestFunction> =
        [0.5, 1.0, 2.0].iter().map(|&t| TestFunction::indicator(p.params.n, t).unwrap()).collect();
    let rep = boundedness_experiment(&p.phi, &p.psi, p.params, &tests, None, Some(&ledger)).unwrap();
    assert!(rep.per_function.iter().all(|f| f.ratio.is_some()));
    assert!(rep.max_ratio > 0.0);
    assert_eq!(rep.within_bound, Some(true), "{} vs {}", rep.max_ratio, ledger.c3);
}
