//! Numerical experiments on Riesz-potential boundedness: measured operator
//! ratios against the constant ledger, the off-centre indicator witness of
//! nontriviality, and the two-condition embedding criterion.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Result};
use crate::function::{Annulus, PowerTerm, TestFunction};
use crate::geometry::{intersection_volume, unit_ball_volume, volume_of_radius, Ball};
use crate::grid::log_grid;
use crate::morrey::{central_norm, MorreyParams};
use crate::orlicz::OrliczSpec;
use crate::potential::{riesz_potential, OperatorParams};
use crate::quad::{bisect_predicate, golden_max};

use super::conditions::{margins, BoundaryMargins, ConditionParams, GridSpec, MarginPoint, GROWTH_THRESHOLD};
use super::ledger::ConstantLedger;

const ENVELOPE_POINTS: usize = 200;
const NORM_RADII: usize = 161;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FunctionRatio {
    pub index: usize,
    pub norm_f: f64,
    pub norm_potential: f64,
    pub ratio: Option<f64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundednessReport {
    pub max_ratio: f64,
    pub ledger_c3: Option<f64>,
    /// `None` when no ledger was supplied.
    pub within_bound: Option<bool>,
    pub per_function: Vec<FunctionRatio>,
}

/// Step majorant of `|x| -> sup_{|y| = |x|} I_α f(y)` with a power tail.
///
/// For nonnegative `f` whose translated pieces sit on the positive
/// x₁-axis, the sphere supremum is attained at `ρ e₁`. The profile is
/// sampled on a log grid; each cell takes the maximum of the four nearest
/// samples, raised by a golden-section search around sampled local maxima.
/// Beyond `ρ_K >= 2 supp f` the bound `|x - y| >= |x|/2` gives
/// `I_α f(x) <= 2^{n-α} ‖f‖₁ |x|^{α-n}`.
pub fn potential_envelope(f: &TestFunction, op: &OperatorParams) -> Result<TestFunction> {
    let n = op.dim;
    if f.dim() != n {
        return Err(crate::error::Error::DimensionMismatch(f.dim(), n));
    }
    if f.is_zero() {
        return TestFunction::zero(n);
    }
    if !f.is_nonnegative() || f.indicators().iter().any(|i| i.center < 0.0) {
        return Err(crate::error::Error::Unsupported(
            "the envelope needs a nonnegative function with translated pieces on the positive axis".into(),
        ));
    }
    let s = f.support_radius();
    if !s.is_finite() {
        return Err(crate::error::Error::Unsupported("the envelope needs a function of bounded support".into()));
    }
    let (lo, hi) = (1e-4 * s, 2e3 * s);
    let mut rho = log_grid(lo, hi, ENVELOPE_POINTS);
    rho.extend(f.rho_breaks(0.0).into_iter().filter(|&r| r > lo && r < hi));
    rho.extend(f.indicators().iter().map(|i| i.center).filter(|&r| r > lo && r < hi));
    rho.sort_by(f64::total_cmp);
    rho.dedup();
    let at = |r: f64| {
        let mut x = vec![0.0; n];
        x[0] = r;
        riesz_potential(f, &x, op)
    };
    let g0 = at(0.0)?;
    let g: Vec<f64> = rho.iter().map(|&r| at(r)).collect::<Result<_>>()?;
    let k = g.len();
    let window = |i: usize, j: usize| g[i..=j.min(k - 1)].iter().copied().fold(0.0, f64::max);
    // cell i is [ρ_i, ρ_{i+1}); local maxima of the samples are refined
    let mut raised = vec![0.0f64; k];
    for i in 1..k - 1 {
        if g[i] >= g[i - 1] && g[i] >= g[i + 1] {
            let mut failure = None;
            let (_, v) = golden_max(
                |r| match at(r) {
                    Ok(v) => v,
                    Err(e) => {
                        failure = Some(e);
                        f64::NEG_INFINITY
                    }
                },
                rho[i - 1],
                rho[i + 1],
                1e-12,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            raised[i - 1] = raised[i - 1].max(v);
            raised[i] = raised[i].max(v);
        }
    }
    let mut annuli = Vec::with_capacity(k + 1);
    annuli.push(Annulus { inner: 0.0, outer: rho[0], constant: g0.max(window(0, 1)), powers: Vec::new() });
    for i in 0..k - 1 {
        let v = window(i.saturating_sub(1), i + 2).max(raised[i]);
        annuli.push(Annulus { inner: rho[i], outer: rho[i + 1], constant: v, powers: Vec::new() });
    }
    let l1 = f.ball_integral(&Ball::centered(n, s * (1.0 + 1e-9))?, f64::abs)?;
    let e = op.alpha - n as f64;
    let rk = rho[k - 1];
    let coef = (l1 * 2f64.powf(-e)).max(g[k - 1] * rk.powf(-e));
    annuli.push(Annulus { inner: rk, outer: f64::INFINITY, constant: 0.0, powers: vec![PowerTerm { coef, beta: e }] });
    TestFunction::from_annuli(n, annuli)
}

/// Measures `‖I_α f‖_{M^{Ψ,μ}(0)} / ‖f‖_{M^{Φ,λ}(0)}` on a test set, with
/// the potential replaced by [`potential_envelope`].
pub fn boundedness_experiment(
    phi: &OrliczSpec,
    psi: &OrliczSpec,
    params: ConditionParams,
    test_set: &[TestFunction],
    radius_grid: Option<&[f64]>,
    ledger: Option<&ConstantLedger>,
) -> Result<BoundednessReport> {
    let op = OperatorParams::new(params.alpha, params.n)?;
    let from = MorreyParams::new(phi.clone(), params.lambda, params.n)?;
    let to = MorreyParams::new(psi.clone(), params.mu, params.n)?;
    let mut per_function = Vec::with_capacity(test_set.len());
    let mut max_ratio: f64 = 0.0;
    for (index, f) in test_set.iter().enumerate() {
        if f.is_zero() {
            per_function.push(FunctionRatio { index, norm_f: 0.0, norm_potential: 0.0, ratio: Some(0.0), note: None });
            continue;
        }
        let skip = |note: String| FunctionRatio {
            index,
            norm_f: f64::NAN,
            norm_potential: f64::NAN,
            ratio: None,
            note: Some(note),
        };
        let env = match potential_envelope(f, &op) {
            Ok(env) => env,
            Err(e) => {
                per_function.push(skip(format!("skipped: {e}")));
                continue;
            }
        };
        let own;
        let radii = match radius_grid {
            Some(r) => r,
            None => {
                let s = f.support_radius();
                own = log_grid(1e-3 * s, 1e4 * s, NORM_RADII);
                &own
            }
        };
        let norm_f = central_norm(f, &from, Some(radii))?.value;
        let norm_potential = central_norm(&env, &to, Some(radii))?.value;
        let ratio = norm_potential / norm_f;
        max_ratio = max_ratio.max(ratio);
        per_function.push(FunctionRatio { index, norm_f, norm_potential, ratio: Some(ratio), note: None });
    }
    let ledger_c3 = ledger.map(|l| l.c3);
    Ok(BoundednessReport { max_ratio, ledger_c3, within_bound: ledger_c3.map(|c3| max_ratio <= c3), per_function })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Witness {
    pub shift: f64,
    /// `‖χ_{B(R e₁, 1)}‖_{M^{Φ,λ}(0)}`.
    pub norm: f64,
    pub argmax_radius: f64,
    /// `1 / Φ⁻¹(v_n^λ R^{λn} / (2^n v_{n-1}))`.
    pub upper_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NontrivialityReport {
    pub nontrivial: bool,
    pub witnesses: Vec<Witness>,
    /// `2^{α-n} v_n / Ψ⁻¹(1/v_n)`, a lower bound for `‖I_α f_R‖_{L^Ψ}`.
    pub potential_lower_bound: Option<f64>,
    /// Lower bound divided by the witness norm, one entry per shift.
    pub ratio_sequence: Vec<f64>,
}

/// `sup_{r > R-1} 1/Φ⁻¹(|B_r|^λ / |B_r ∩ B(R e₁, 1)|)`.
fn witness_norm(phi: &OrliczSpec, lambda: f64, n: usize, shift: f64) -> Result<(f64, f64)> {
    let target = Ball::on_axis(n, shift, 1.0)?;
    let q = |r: f64| -> Result<f64> {
        let meet = intersection_volume(&Ball::centered(n, r)?, &target)?;
        if meet <= 0.0 {
            return Ok(0.0);
        }
        Ok(1.0 / phi.inverse(volume_of_radius(n, r).powf(lambda) / meet)?)
    };
    // the intersection saturates at R + 1, after which only |B_r|^λ moves
    let mut rs: Vec<f64> = (1..=400).map(|k| shift - 1.0 + 2.0 * (k as f64 / 400.0).powi(2)).collect();
    rs.extend([2.0 * (shift + 1.0), 10.0 * (shift + 1.0)]);
    let vals: Vec<f64> = rs.iter().map(|&r| q(r)).collect::<Result<_>>()?;
    let (mut k, mut best) = (0, vals[0]);
    for (i, &v) in vals.iter().enumerate() {
        if v > best {
            k = i;
            best = v;
        }
    }
    let mut arg = rs[k];
    if k + 1 < rs.len() {
        let a = if k == 0 { shift - 1.0 + 1e-12 } else { rs[k - 1] };
        let mut failure = None;
        let (x, v) = golden_max(
            |r| match q(r) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e);
                    f64::NEG_INFINITY
                }
            },
            a,
            rs[k + 1],
            1e-12,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        if v > best {
            best = v;
            arg = x;
        }
    }
    Ok((best, arg))
}

/// Off-centre indicators `χ_{B(R e₁, 1)}` as witnesses that the central
/// space is nontrivial for `λ >= 0`; for `λ < 0` the space is `{0}`.
pub fn nontriviality_check(
    phi: &OrliczSpec,
    lambda: f64,
    n: usize,
    shifts: &[f64],
    potential: Option<(f64, &OrliczSpec)>,
) -> Result<NontrivialityReport> {
    if n == 0 {
        return Err(constraint("dimension must be at least 1"));
    }
    if let Some(&r) = shifts.iter().find(|&&r| !(r > 1.0)) {
        return Err(constraint(format!("witness shifts must exceed 1, got {r}")));
    }
    if lambda < 0.0 {
        return Ok(NontrivialityReport {
            nontrivial: false,
            witnesses: Vec::new(),
            potential_lower_bound: None,
            ratio_sequence: Vec::new(),
        });
    }
    let vn = unit_ball_volume(n);
    let vn1 = if n == 1 { 1.0 } else { unit_ball_volume(n - 1) };
    let nf = n as f64;
    let mut witnesses = Vec::with_capacity(shifts.len());
    for &shift in shifts {
        let (norm, argmax_radius) = witness_norm(phi, lambda, n, shift)?;
        let arg = vn.powf(lambda) * shift.powf(lambda * nf) / (2f64.powi(n as i32) * vn1);
        witnesses.push(Witness { shift, norm, argmax_radius, upper_bound: 1.0 / phi.inverse(arg)? });
    }
    let potential_lower_bound = match potential {
        Some((alpha, psi)) => {
            OperatorParams::new(alpha, n)?;
            Some(2f64.powf(alpha - nf) * vn / psi.inverse(1.0 / vn)?)
        }
        None => None,
    };
    let ratio_sequence = match potential_lower_bound {
        Some(lb) => witnesses.iter().map(|w| lb / w.norm).collect(),
        None => Vec::new(),
    };
    Ok(NontrivialityReport { nontrivial: true, witnesses, potential_lower_bound, ratio_sequence })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EmbeddingReport {
    pub holds: bool,
    pub a1: f64,
    pub a2: f64,
    /// `2 max(A₁, A₂)`.
    pub embedding_constant: f64,
    /// Largest `‖f‖_{M^{Φ,λ}(0)} / ‖f‖_{M^{Ψ,μ}(0)}` over the test set.
    pub measured_constant: f64,
    pub a1_divergent: bool,
    pub a2_divergent: bool,
    pub a1_margins: BoundaryMargins,
    pub a2_margins: BoundaryMargins,
}

/// Smallest `A` with `Φ(u/A) <= target`, by bisection in `A`.
fn minimal_scale(phi: &OrliczSpec, u: f64, target: f64) -> Result<f64> {
    let mut failure = None;
    let mut ok = |a: f64| match phi.evaluate(u / a) {
        Ok(v) => v <= target * (1.0 + 1e-12),
        Err(e) => {
            failure = Some(e);
            true
        }
    };
    let (mut lo, mut hi) = (1.0, 1.0);
    while ok(lo) && lo > 1e-300 {
        lo *= 0.5;
    }
    while !ok(hi) {
        if hi > 1e300 {
            return Ok(f64::INFINITY);
        }
        hi *= 2.0;
    }
    if lo == hi {
        lo = 0.5 * hi;
    }
    let a = bisect_predicate(lo, hi, &mut ok, 1e-12, 400);
    match failure {
        Some(e) => Err(e),
        None => Ok(a),
    }
}

/// Estimates the smallest constants in the two pointwise conditions that
/// characterise `M^{Ψ,μ}(0) ↪ M^{Φ,λ}(0)` and spot-checks the embedding.
#[allow(clippy::too_many_arguments)]
pub fn embedding_check(
    phi: &OrliczSpec,
    psi: &OrliczSpec,
    lambda: f64,
    mu: f64,
    n: usize,
    u_grid: &GridSpec,
    r_grid: &GridSpec,
    test_set: &[TestFunction],
) -> Result<EmbeddingReport> {
    if !(0.0..1.0).contains(&lambda) || !(0.0..1.0).contains(&mu) {
        return Err(constraint(format!("need 0 <= lambda, mu < 1, got lambda={lambda}, mu={mu}")));
    }
    let expo = (lambda - 1.0) / (mu - 1.0);
    let mut p1 = Vec::with_capacity(u_grid.count);
    let mut p2 = Vec::new();
    let rs = r_grid.points();
    for u in u_grid.points() {
        let psi_u = psi.evaluate(u)?;
        let a1 = minimal_scale(phi, u, psi_u.powf(expo))?;
        p1.push(MarginPoint { u, r: None, lhs: a1, rhs: 1.0, ratio: a1 });
        // Ψ⁻¹(r^{μ-1}) < u holds just above r_min = Ψ(u)^{1/(μ-1)}
        let r_min = psi_u.powf(1.0 / (mu - 1.0));
        let near = [1e-9, 1e-6, 1e-3].map(|d| r_min * (1.0 + d));
        for r in rs.iter().copied().chain(near) {
            if psi.inverse(r.powf(mu - 1.0))? < u {
                let a2 = minimal_scale(phi, u, psi_u * r.powf(lambda - mu))?;
                p2.push(MarginPoint { u, r: Some(r), lhs: a2, rhs: 1.0, ratio: a2 });
            }
        }
    }
    let a1_margins = margins(&p1, u_grid, None);
    // the r-points hugging the constraint boundary are interior by design
    let a2_margins = margins(&p2, u_grid, Some(r_grid));
    let a1 = a1_margins.full_max;
    let a2 = a2_margins.full_max;
    let a1_divergent = !a1.is_finite() || a1_margins.growth_decades > GROWTH_THRESHOLD;
    let a2_divergent = !a2.is_finite() || a2_margins.growth_decades > GROWTH_THRESHOLD;
    let from = MorreyParams::new(phi.clone(), lambda, n)?;
    let to = MorreyParams::new(psi.clone(), mu, n)?;
    let mut measured_constant: f64 = 0.0;
    for f in test_set.iter().filter(|f| !f.is_zero()) {
        let num = central_norm(f, &from, None)?.value;
        let den = central_norm(f, &to, None)?.value;
        measured_constant = measured_constant.max(num / den);
    }
    let embedding_constant = 2.0 * a1.max(a2);
    let holds = !a1_divergent && !a2_divergent && measured_constant <= embedding_constant * (1.0 + 1e-6);
    Ok(EmbeddingReport {
        holds,
        a1,
        a2,
        embedding_constant,
        measured_constant,
        a1_divergent,
        a2_divergent,
        a1_margins,
        a2_margins,
    })
}
