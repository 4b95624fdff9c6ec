//! Centred Hardy–Littlewood maximal function, Riesz potential and the
//! Hedberg pointwise estimate.
//!
//! Both operators are evaluated at points `x₀ e₁` on the symmetry axis of
//! the test class. In polar coordinates about `x₀ e₁`,
//!
//! ```text
//! I_α f(x) = n v_n ∫_0^∞ ρ^{α-1} m(ρ) dρ,
//! ```
//!
//! where `m(ρ)` is the sphere mean of `f`. The sphere mean is exact for step
//! pieces and uses angular quadrature elsewhere.

use alloc::format;
use alloc::vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Error, Result};
use crate::function::{axial_coordinate, TestFunction};
use crate::geometry::{intersection_volume, unit_ball_volume, volume_of_radius, Ball};
use crate::quad::{golden_max, integrate_singular_ends, QuadTol};

const RHO_TOL: QuadTol = QuadTol::rel(1e-11).with_abs(1e-300);
const SHELL_STOP: f64 = 1e-10;
const MAX_SHELLS: usize = 400;

/// Order `α` of the Riesz potential in dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OperatorParams {
    pub alpha: f64,
    pub dim: usize,
}

impl OperatorParams {
    pub fn new(alpha: f64, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(constraint("dimension must be at least 1"));
        }
        if !(alpha > 0.0 && alpha < dim as f64) {
            return Err(constraint(format!("need 0 < alpha < n, got alpha={alpha}, n={dim}")));
        }
        Ok(OperatorParams { alpha, dim })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HedbergGap {
    pub lhs: f64,
    pub rhs: f64,
}

/// `C_H = 2^n v_n / (2^α - 1)`.
pub fn hedberg_constant(n: usize, alpha: f64) -> f64 {
    2f64.powi(n as i32) * unit_ball_volume(n) / (2f64.powf(alpha) - 1.0)
}

/// Average of `|f|` over `B(x₀ e₁, r)`.
pub fn ball_average(f: &TestFunction, x0: f64, r: f64) -> Result<f64> {
    let ball = Ball::on_axis(f.dim(), x0, r)?;
    let total = if f.is_nonnegative() && !f.indicators().is_empty() {
        // |f| = f splits into the radial part and one lens per indicator
        let mut t = f.radial_part().ball_integral(&ball, |v| v)?;
        for ind in f.indicators() {
            t += ind.coef * intersection_volume(&ball, &Ball::on_axis(f.dim(), ind.center, ind.radius)?)?;
        }
        t
    } else {
        f.ball_integral(&ball, f64::abs)?
    };
    Ok(total / volume_of_radius(f.dim(), r))
}

/// `Mf(x) = sup_r` of the averages of `|f|` over `B(x, r)`.
///
/// Candidate radii are the distances at which the ball meets a boundary of
/// `f`, plus a tiny and a huge radius; between consecutive candidates a
/// golden-section search in `ln r` refines the maximum.
pub fn maximal_function(f: &TestFunction, x: &[f64]) -> Result<f64> {
    let x0 = axial_coordinate(x, f.dim())?;
    if f.is_zero() {
        return Ok(0.0);
    }
    let supp = f.support_radius();
    let scale = if supp.is_finite() { supp.max(x0.abs()) } else { x0.abs().max(1.0) };
    let mut cands = f.rho_breaks(x0);
    cands.push(1e-9 * scale);
    cands.push(1e6 * scale);
    cands.retain(|r| *r > 0.0);
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    let mut best = 0.0f64;
    for &r in &cands {
        best = best.max(ball_average(f, x0, r)?);
    }
    let mut failure = None;
    for w in cands.windows(2) {
        let (_, v) = golden_max(
            |lr: f64| match ball_average(f, x0, lr.exp()) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e);
                    f64::NEG_INFINITY
                }
            },
            w[0].ln(),
            w[1].ln(),
            1e-9,
        );
        best = best.max(v);
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

/// `n v_n ∫_0^{upper} ρ^{α-1} m(ρ) dρ` with `m` the sphere mean of `f` (or
/// `|f|`) about `x₀ e₁`.
fn kernel_integral(f: &TestFunction, x0: f64, alpha: f64, upper: Option<f64>, abs: bool) -> Result<f64> {
    let n = f.dim();
    let mean = |rho: f64| f.sphere_mean_with(None, x0, rho, |v, _| if abs { v.abs() } else { v });
    let mut breaks = f.rho_breaks(x0);
    let end = upper.unwrap_or(f64::INFINITY);
    breaks.retain(|&b| b < end);
    let inner = breaks.first().copied().unwrap_or(1.0).min(1.0).min(end);
    // τ = ρ^α absorbs the kernel singularity at ρ = 0
    let k = 1.0 / alpha;
    let mut total = integrate_singular_ends(
        |tau: f64| if tau <= 0.0 { 0.0 } else { mean(tau.powf(k)) },
        0.0,
        inner.powf(alpha),
        RHO_TOL,
    )? / alpha;
    let mut pts = vec![inner];
    pts.extend(breaks.into_iter().filter(|&b| b > inner));
    if end.is_finite() {
        pts.push(end);
    }
    let integrand = |rho: f64| rho.powf(alpha - 1.0) * mean(rho);
    for w in pts.windows(2) {
        total += integrate_singular_ends(integrand, w[0], w[1], RHO_TOL)?;
    }
    if end.is_infinite() && f.far_field_exponent().is_some() {
        let mut a = *pts.last().unwrap_or(&inner);
        let mut prev = f64::NAN;
        let mut converged = false;
        for _ in 0..MAX_SHELLS {
            let shell = integrate_singular_ends(integrand, a, 2.0 * a, RHO_TOL)?;
            total += shell;
            a *= 2.0;
            if shell.abs() <= SHELL_STOP * total.abs() {
                let q = shell / prev;
                if q.is_finite() && q.abs() < 1.0 {
                    total += shell * q / (1.0 - q);
                }
                converged = true;
                break;
            }
            prev = shell;
        }
        if !converged {
            return Err(Error::Divergence("far-field shells of the Riesz integral do not decay".into()));
        }
    }
    Ok(n as f64 * unit_ball_volume(n) * total)
}

/// `I_α f(x) = ∫ f(y) |x - y|^{α-n} dy`.
pub fn riesz_potential(f: &TestFunction, x: &[f64], prm: &OperatorParams) -> Result<f64> {
    if f.dim() != prm.dim {
        return Err(Error::DimensionMismatch(f.dim(), prm.dim));
    }
    let x0 = axial_coordinate(x, prm.dim)?;
    if f.is_zero() {
        return Ok(0.0);
    }
    if let Some(e) = f.far_field_exponent() {
        if prm.alpha + e >= 0.0 {
            return Err(Error::Divergence(format!(
                "f grows like |y|^{e} at infinity, so the kernel |y|^(alpha-n) is not integrable"
            )));
        }
    }
    kernel_integral(f, x0, prm.alpha, None, false)
}

/// Truncated Riesz integral of `|f|` over `B(x, r)` against
/// `C_H r^α Mf(x)`.
pub fn hedberg_gap(f: &TestFunction, x: &[f64], r: f64, prm: &OperatorParams) -> Result<HedbergGap> {
    if f.dim() != prm.dim {
        return Err(Error::DimensionMismatch(f.dim(), prm.dim));
    }
    if !(r > 0.0) {
        return Err(constraint("truncation radius must be positive"));
    }
    let x0 = axial_coordinate(x, prm.dim)?;
    if f.is_zero() {
        return Ok(HedbergGap { lhs: 0.0, rhs: 0.0 });
    }
    let lhs = kernel_integral(f, x0, prm.alpha, Some(r), true)?;
    let rhs = hedberg_constant(prm.dim, prm.alpha) * r.powf(prm.alpha) * maximal_function(f, x)?;
    Ok(HedbergGap { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn maximal_examples() {
        let chi = TestFunction::indicator(1, 1.0).unwrap();
        assert!(close(maximal_function(&chi, &[0.0]).unwrap(), 1.0, 1e-12));
        assert!(close(maximal_function(&chi, &[2.0]).unwrap(), 1.0 / 3.0, 1e-9));
        let c = TestFunction::constant(2, 2.5).unwrap();
        assert!(close(maximal_function(&c, &[1.0, 0.0]).unwrap(), 2.5, 1e-12));
    }

    #[test]
    fn riesz_examples() {
        let prm = OperatorParams::new(0.5, 1).unwrap();
        let chi = TestFunction::indicator(1, 1.0).unwrap();
        assert!(close(riesz_potential(&chi, &[0.0], &prm).unwrap(), 4.0, 1e-10));
        assert!(close(riesz_potential(&chi, &[2.0], &prm).unwrap(), 2.0 * (3f64.sqrt() - 1.0), 1e-10));
        let two = chi.scaled(2.0);
        assert!(close(riesz_potential(&two, &[2.0], &prm).unwrap(), 4.0 * (3f64.sqrt() - 1.0), 1e-10));
        let c = TestFunction::constant(1, 1.0).unwrap();
        assert!(matches!(riesz_potential(&c, &[0.0], &prm), Err(Error::Divergence(_))));
    }

    #[test]
    fn riesz_far_field_tail() {
        // |y|^{-1} on |y| >= 1 in R^1 with α = 1/2 at x = 0: 2 ∫_1^∞ s^{-3/2} ds = 4
        let prm = OperatorParams::new(0.5, 1).unwrap();
        let f = TestFunction::power_on(1, 1.0, f64::INFINITY, 1.0, -1.0).unwrap();
        assert!(close(riesz_potential(&f, &[0.0], &prm).unwrap(), 4.0, 1e-8));
    }

    #[test]
    fn riesz_in_three_dimensions() {
        // at the centre of B_1 in R^3 with α = 2: 4π ∫_0^1 ρ dρ = 2π
        let prm = OperatorParams::new(2.0, 3).unwrap();
        let chi = TestFunction::indicator(3, 1.0).unwrap();
        assert!(close(riesz_potential(&chi, &[0.0, 0.0, 0.0], &prm).unwrap(), 2.0 * PI, 1e-10));
    }

    #[test]
    fn singular_power_in_shifted_ball_on_the_line() {
        let (beta, t, x0) = (-0.27, 2.63, -2.15);
        let f = TestFunction::radial_power(1, beta, t).unwrap();
        for r in [2.15, 3.0, 4.37] {
            let (lo, hi) = ((r - x0).min(t), (x0 + r).min(t));
            let exact = (lo.powf(1.0 + beta) + hi.powf(1.0 + beta)) / (1.0 + beta) / (2.0 * r);
            assert!(close(ball_average(&f, x0, r).unwrap(), exact, 1e-9));
        }
        let prm = OperatorParams::new(0.75, 1).unwrap();
        let g = hedberg_gap(&f, &[x0], 4.37, &prm).unwrap();
        assert!(g.lhs.is_finite() && g.lhs <= g.rhs);
    }

    #[test]
    fn maximal_with_singular_power_just_past_the_origin() {
        let f = TestFunction::step(1, 0.1, 1.26, 2.0).unwrap();
        let g = TestFunction::radial_power(1, -0.1, 1.66).unwrap();
        let x = [1.27];
        let sum = maximal_function(&f.add(&g).unwrap(), &x).unwrap();
        let parts = maximal_function(&f, &x).unwrap() + maximal_function(&g, &x).unwrap();
        assert!(sum.is_finite() && sum <= parts + 1e-9, "{sum} > {parts}");
    }

    #[test]
    fn hedberg_constants() {
        assert!(close(hedberg_constant(1, 0.5), 4.0 / (2f64.sqrt() - 1.0), 1e-14));
        assert!(close(hedberg_constant(2, 1.0), 4.0 * PI, 1e-14));
        assert!(close(hedberg_constant(3, 1.0), 8.0 * 4.0 * PI / 3.0, 1e-14));
    }

    #[test]
    fn hedberg_examples() {
        let prm = OperatorParams::new(0.5, 1).unwrap();
        let chi = TestFunction::indicator(1, 1.0).unwrap();
        let g = hedberg_gap(&chi, &[0.0], 1.0, &prm).unwrap();
        assert!(close(g.lhs, 4.0, 1e-10) && close(g.rhs, 9.656_854_249, 1e-9));
        let g = hedberg_gap(&chi, &[2.0], 4.0, &prm).unwrap();
        assert!(close(g.lhs, 2.0 * (3f64.sqrt() - 1.0), 1e-10));
        assert!(close(g.rhs, hedberg_constant(1, 0.5) * 2.0 / 3.0, 1e-8));
        let z = TestFunction::zero(1).unwrap();
        assert_eq!(hedberg_gap(&z, &[0.0], 1.0, &prm).unwrap(), HedbergGap { lhs: 0.0, rhs: 0.0 });
    }
}
