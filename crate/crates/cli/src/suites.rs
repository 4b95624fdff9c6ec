//! Seeded verification suites. Each suite draws from its own ChaCha stream,
//! so `all` reproduces the individual suites case for case.

use morrey_orlicz::grid::log_grid;
use morrey_orlicz::morrey::{central_norm, chi_central_norm_closed, chi_norm_closed, luxemburg_norm};
use morrey_orlicz::potential::hedberg_gap;
use morrey_orlicz::verify::{embedding_check, example_preset, nontriviality_check, GridSpec, PresetParams};
use morrey_orlicz::{Ball, MorreyParams, OperatorParams, OrliczSpec, TestFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Indicator norms against their closed forms.
    #[value(alias = "indicator-norms")]
    Lemma1,
    Hedberg,
    Young,
    Embedding,
    Witness,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Hedberg => "hedberg",
            Suite::Young => "young",
            Suite::Embedding => "embedding",
            Suite::Witness => "witness",
            Suite::All => "all",
        }
    }

    pub fn anchor_key(self) -> &'static str {
        match self {
            Suite::Lemma1 => "indicator_norm",
            Suite::Hedberg => "hedberg",
            Suite::Young => "young_product",
            Suite::Embedding => "embedding",
            Suite::Witness => "witness",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Lemma1, Suite::Hedberg, Suite::Young, Suite::Embedding, Suite::Witness],
            s => vec![s],
        }
    }
}

/// Outcome of one suite. `worst` is the largest error divided by its
/// tolerance, so a suite passes when `worst <= 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub worst: f64,
    pub failures: Vec<String>,
}

struct Tally {
    suite: &'static str,
    cases: usize,
    passed: usize,
    worst: f64,
    failures: Vec<String>,
}

const MAX_LISTED_FAILURES: usize = 5;

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally { suite, cases: 0, passed: 0, worst: 0.0, failures: Vec::new() }
    }

    /// Records a case whose normalised error is `score` (pass iff `<= 1`).
    fn score(&mut self, score: f64, label: impl FnOnce() -> String) {
        self.cases += 1;
        let score = if score.is_nan() { f64::INFINITY } else { score };
        self.worst = self.worst.max(score);
        if score <= 1.0 {
            self.passed += 1;
        } else if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(label());
        }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.score(if ok { 0.0 } else { f64::INFINITY }, label);
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            suite: self.suite,
            cases: self.cases,
            passed: self.passed,
            failed: self.cases - self.passed,
            worst: self.worst,
            failures: self.failures,
        }
    }
}

fn rng(seed: u64, suite: Suite) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(suite.stream());
    r
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

pub fn run_suite(suite: Suite, seed: u64) -> CliResult<Vec<SuiteResult>> {
    suite
        .members()
        .into_iter()
        .map(|s| match s {
            Suite::Lemma1 => indicator_norms(seed),
            Suite::Hedberg => hedberg(seed),
            Suite::Young => young(seed),
            Suite::Embedding => embedding(seed),
            Suite::Witness => witness(seed),
            Suite::All => unreachable!("expanded by members()"),
        })
        .collect()
}

pub const INDICATOR_CASES: usize = 100;
pub const HEDBERG_CASES: usize = 200;

/// Numeric Luxemburg and central norms of `χ_{B_t}` against closed forms,
/// at 1e-6 and 1e-5 relative.
fn indicator_norms(seed: u64) -> CliResult<SuiteResult> {
    let mut g = rng(seed, Suite::Lemma1);
    let mut t = Tally::new("lemma1");
    for _ in 0..INDICATOR_CASES {
        let p = g.gen_range(1.1..=4.0);
        let lambda = g.gen_range(0.0..=0.9);
        let tt = g.gen_range(0.1..=10.0);
        let r = g.gen_range(0.1..=10.0);
        let n = g.gen_range(1..=2usize);
        let prm = MorreyParams::new(OrliczSpec::power(p)?, lambda, n)?;
        let chi = TestFunction::indicator(n, tt)?;
        let lux = luxemburg_norm(&chi, &prm, &Ball::centered(n, r)?)?;
        let e1 = rel(lux, chi_norm_closed(&prm, tt, r)?) / 1e-6;
        let cen = central_norm(&chi, &prm, None)?.value;
        let e2 = rel(cen, chi_central_norm_closed(&prm, tt)?) / 1e-5;
        t.score(e1.max(e2), || format!("p={p} lambda={lambda} t={tt} r={r} n={n}"));
    }
    Ok(t.finish())
}

fn random_piece(g: &mut ChaCha8Rng, n: usize) -> CliResult<TestFunction> {
    Ok(match g.gen_range(0..4) {
        0 => TestFunction::indicator(n, g.gen_range(0.2..3.0))?.scaled(g.gen_range(0.2..3.0)),
        1 => {
            let a = g.gen_range(0.1..2.0);
            TestFunction::step(n, a, a + g.gen_range(0.1..2.0), g.gen_range(0.2..3.0))?
        }
        2 => TestFunction::translated_indicator(n, g.gen_range(-3.0..3.0), g.gen_range(0.2..1.5))?,
        _ => TestFunction::radial_power(n, g.gen_range(-0.3..1.5), g.gen_range(0.3..3.0))?,
    })
}

/// Hedberg's estimate on random `(f, x, r, α)` plus the `χ_{(-1,1)}`
/// reference case (`lhs = 4`, `rhs = 4/(√2 - 1)`).
fn hedberg(seed: u64) -> CliResult<SuiteResult> {
    let mut g = rng(seed, Suite::Hedberg);
    let mut t = Tally::new("hedberg");
    for _ in 0..HEDBERG_CASES {
        let n = g.gen_range(1..=2usize);
        let f = random_piece(&mut g, n)?;
        let x0 = g.gen_range(-4.0..4.0);
        let r = g.gen_range(0.05..8.0);
        let alpha = g.gen_range(0.05..0.95) * n as f64;
        let mut x = vec![0.0; n];
        x[0] = x0;
        let gap = hedberg_gap(&f, &x, r, &OperatorParams::new(alpha, n)?)?;
        t.score(gap.lhs / (gap.rhs * (1.0 + 1e-6)), || format!("n={n} f={f:?} x0={x0} r={r} alpha={alpha}: {gap:?}"));
    }
    let gap = hedberg_gap(&TestFunction::indicator(1, 1.0)?, &[0.0], 1.0, &OperatorParams::new(0.5, 1)?)?;
    let score = ((gap.lhs - 4.0).abs() / 1e-6).max((gap.rhs - 4.0 / (2f64.sqrt() - 1.0)).abs() / 1e-4);
    t.score(score, || format!("reference case: {gap:?}"));
    Ok(t.finish())
}

/// `Φ⁻¹(u) Φ*⁻¹(u) / u ∈ [1 - 1e-4, 2 + 1e-4]` on 64 points of
/// `[1e-6, 1e6]`, and `≡ 2` for `u²`.
fn young(seed: u64) -> CliResult<SuiteResult> {
    let mut g = rng(seed, Suite::Young);
    let mut t = Tally::new("young");
    let grid = log_grid(1e-6, 1e6, 64);
    let mut specs: Vec<(String, OrliczSpec)> = Vec::new();
    for p in [1.0, 1.5, 2.0, 3.0] {
        specs.push((format!("power p={p}"), OrliczSpec::power(p)?));
    }
    for _ in 0..6 {
        let p = g.gen_range(1.1..4.0);
        specs.push((format!("power p={p}"), OrliczSpec::power(p)?));
    }
    for _ in 0..4 {
        let p1 = g.gen_range(1.1..3.0);
        let p2 = p1 + g.gen_range(0.1..2.0);
        specs.push((format!("maxpow p1={p1} p2={p2}"), OrliczSpec::max_power(p1, p2)?));
    }
    for id in [1, 3] {
        let pr = example_preset(&PresetParams::default_for(id).expect("families 1 and 3 exist"))?;
        specs.push((format!("family {id} phi"), pr.phi));
        specs.push((format!("family {id} psi"), pr.psi));
    }
    for (label, spec) in &specs {
        let y = spec.young_product_check(&grid)?;
        let score = ((1.0 - 1e-4) / y.min_ratio).max(y.max_ratio / (2.0 + 1e-4));
        t.score(score, || format!("{label}: {y:?}"));
    }
    let y = OrliczSpec::power(2.0)?.young_product_check(&grid)?;
    let score = ((y.min_ratio - 2.0).abs().max((y.max_ratio - 2.0).abs())) / 1e-6;
    t.score(score, || format!("power p=2 not identically 2: {y:?}"));
    Ok(t.finish())
}

/// `u²` with `λ = 1/2` against `u⁴` with `μ = 0`: `A₁ = A₂ = 1` and the
/// measured constant stays below 2. The reversed pair must fail.
fn embedding(seed: u64) -> CliResult<SuiteResult> {
    let mut g = rng(seed, Suite::Embedding);
    let mut t = Tally::new("embedding");
    let mut tests = Vec::new();
    for _ in 0..6 {
        tests.push(TestFunction::indicator(1, g.gen_range(0.1..10.0))?);
    }
    for _ in 0..2 {
        tests.push(TestFunction::translated_indicator(1, g.gen_range(2.0..5.0), 1.0)?);
    }
    let grid = GridSpec::default();
    let (u2, u4) = (OrliczSpec::power(2.0)?, OrliczSpec::power(4.0)?);
    let rep = embedding_check(&u2, &u4, 0.5, 0.0, 1, &grid, &grid, &tests)?;
    t.check(rep.holds, || format!("embedding reported as failing: {rep:?}"));
    t.score((rep.a1 - 1.0).abs() / 1e-3, || format!("A1 = {}", rep.a1));
    t.score((rep.a2 - 1.0).abs() / 1e-3, || format!("A2 = {}", rep.a2));
    t.score(rep.measured_constant / (2.0 * (1.0 + 1e-6)), || format!("measured {}", rep.measured_constant));
    let bad = embedding_check(&u4, &u2, 0.5, 0.0, 1, &grid, &grid, &tests)?;
    t.check(!bad.holds, || "reversed pair reported as embedding".into());
    Ok(t.finish())
}

/// Witness norms below their closed-form bound, the increasing ratio
/// sequence for `u²`, `λ = 1/2`, `α = 1/2`, and triviality for `λ < 0`.
fn witness(seed: u64) -> CliResult<SuiteResult> {
    let mut g = rng(seed, Suite::Witness);
    let mut t = Tally::new("witness");
    let u2 = OrliczSpec::power(2.0)?;
    let rep = nontriviality_check(&u2, 0.5, 1, &[2.0, 4.0, 8.0, 16.0], Some((0.5, &u2)))?;
    let s = rep.ratio_sequence.clone();
    t.check(s.len() == 4 && s.windows(2).all(|w| w[1] > w[0]), || format!("ratio sequence not increasing: {s:?}"));
    let neg = nontriviality_check(&u2, -0.5, 1, &[2.0], None)?;
    t.check(!neg.nontrivial, || "lambda = -0.5 reported nontrivial".into());
    for _ in 0..12 {
        let n = g.gen_range(1..=2usize);
        let lambda = g.gen_range(0.0..0.9);
        let p = g.gen_range(1.1..3.0);
        let shift = g.gen_range(2.0..20.0);
        let rep = nontriviality_check(&OrliczSpec::power(p)?, lambda, n, &[shift], None)?;
        let w = rep.witnesses[0];
        t.score(w.norm / (w.upper_bound * (1.0 + 1e-9)), || format!("n={n} lambda={lambda} p={p} R={shift}: {w:?}"));
    }
    Ok(t.finish())
}
