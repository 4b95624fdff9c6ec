//! Grid scans of the three integral conditions relating `(Φ, λ)` and
//! `(Ψ, μ)`:
//!
//! ```text
//! c1:  ∫_u^∞ t^{α/n} Φ⁻¹(t^{λ-1}) dt/t                      <= C Ψ⁻¹(u^{μ-1})
//! c2:  u^{α/n} Φ⁻¹(r^λ/u) + ∫_u^r t^{α/n} Φ⁻¹(r^λ/t) dt/t    <= C Ψ⁻¹(r^μ/u),  r > u
//! c3:  ∫_u^∞ t^{α/n} Φ⁻¹(r^λ/t) dt/t                        <= C Ψ⁻¹(r^μ/u)
//! ```
//!
//! With `s = ln t` every integrand has the form `e^{a s} Φ⁻¹(e^{c0 + c1 s})`.
//! Semi-infinite integrals are cut where a slope probe says the remainder
//! is negligible, and the analytic tail `g(S)/|β|` is added. A probed slope
//! `β >= -1e-3` marks the integral as divergent.

use alloc::format;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Result};
use crate::grid::{default_scan_grid, log_grid};
use crate::orlicz::OrliczSpec;
use crate::quad::{gauss_kronrod, QuadTol};

/// Growth of the margin curve, in decades, from the interior grid to the
/// full grid, above which a condition is declared divergent.
pub const GROWTH_THRESHOLD: f64 = 0.03;
const DIVERGENT_SLOPE: f64 = -1e-3;
const TAIL_SPAN: f64 = 60.0;
const EXP_ROOM: f64 = 650.0;
const TOL: QuadTol = QuadTol::rel(1e-10).with_abs(1e-300);

/// Operator and space exponents shared by all three conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionParams {
    pub alpha: f64,
    pub n: usize,
    pub lambda: f64,
    pub mu: f64,
}

impl ConditionParams {
    pub fn new(alpha: f64, n: usize, lambda: f64, mu: f64) -> Result<Self> {
        if n == 0 || !(alpha > 0.0 && alpha < n as f64) {
            return Err(constraint(format!("need 0 < alpha < n, got alpha={alpha}, n={n}")));
        }
        if !(0.0..1.0).contains(&lambda) || !(0.0..1.0).contains(&mu) {
            return Err(constraint(format!("need 0 <= lambda, mu < 1, got lambda={lambda}, mu={mu}")));
        }
        Ok(ConditionParams { alpha, n, lambda, mu })
    }

    fn a(&self) -> f64 {
        self.alpha / self.n as f64
    }
}

/// A log-spaced axis of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        log_grid(self.lo, self.hi, self.count)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        let g = default_scan_grid();
        GridSpec { lo: g[0], hi: g[g.len() - 1], count: g.len() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MarginPoint {
    pub u: f64,
    pub r: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Maxima of the margin curve over the full grid and over the grid with
/// its outermost decade removed on each side.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundaryMargins {
    pub full_max: f64,
    pub inner_max: f64,
    pub growth_decades: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionReport {
    pub condition_id: u8,
    pub params: ConditionParams,
    /// Largest ratio seen on the grid. Always a lower bound for the true
    /// constant; meaningless as a bound when `divergence_flag` is set.
    pub best_constant: f64,
    pub divergence_flag: bool,
    pub best_is_lower_bound: bool,
    pub boundary_margins: BoundaryMargins,
    pub grid_spec: ScanSpec,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub margin_curve: Vec<MarginPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanSpec {
    pub u: GridSpec,
    pub r: Option<GridSpec>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        !self.divergence_flag && self.best_constant.is_finite()
    }
}

/// `g(s) = e^{a s} Φ⁻¹(e^{c0 + c1 s})`.
struct LogIntegrand<'a> {
    phi: &'a OrliczSpec,
    a: f64,
    c0: f64,
    c1: f64,
}

impl LogIntegrand<'_> {
    fn eval(&self, s: f64) -> Result<f64> {
        let inv = self.phi.inverse((self.c0 + self.c1 * s).exp())?;
        Ok(if inv == 0.0 { 0.0 } else { (self.a * s).exp() * inv })
    }

    /// Points where the argument of Φ⁻¹ crosses a kink of Φ⁻¹.
    fn breaks(&self) -> Vec<f64> {
        let mut b: Vec<f64> = self.phi.inverse_breakpoints();
        b.push(1.0);
        b.into_iter().map(|v| (v.ln() - self.c0) / self.c1).collect()
    }

    /// Largest `s` before `e^{a s}` or the argument leaves the double range.
    fn room(&self) -> f64 {
        let mut s = f64::INFINITY;
        if self.a > 0.0 {
            s = s.min(EXP_ROOM / self.a);
        }
        if self.c1 < 0.0 {
            s = s.min((EXP_ROOM + self.c0) / -self.c1);
        } else if self.c1 > 0.0 {
            s = s.min((EXP_ROOM - self.c0) / self.c1);
        }
        s
    }

    fn integrate(&self, s0: f64, s1: f64) -> Result<f64> {
        let mut pts = Vec::with_capacity(4);
        pts.push(s0);
        pts.extend(self.breaks().into_iter().filter(|&b| b > s0 && b < s1));
        pts.push(s1);
        pts.sort_by(f64::total_cmp);
        let mut failure = None;
        let mut total = 0.0;
        for w in pts.windows(2) {
            total += gauss_kronrod(
                |s| match self.eval(s) {
                    Ok(v) => v,
                    Err(e) => {
                        failure = Some(e);
                        0.0
                    }
                },
                w[0],
                w[1],
                TOL,
            )
            .0;
        }
        match failure {
            Some(e) => Err(e),
            None => Ok(total),
        }
    }

    /// `∫_{s0}^∞ g`, `+inf` when the probed tail slope is not negative.
    fn integrate_to_infinity(&self, s0: f64) -> Result<f64> {
        let base = self.breaks().into_iter().fold(s0, f64::max);
        let room = self.room();
        if base + 2.0 >= room {
            return Err(constraint("integration range exceeds double precision"));
        }
        let probe = (base + 300.0).min(room - 1.0);
        let g0 = self.eval(probe)?;
        let g1 = self.eval(probe + 1.0)?;
        if g0 == 0.0 || g1 == 0.0 {
            // super-exponential decay: the finite part is everything
            return self.integrate(s0, probe);
        }
        let slope = (g1 / g0).ln();
        if !(slope < DIVERGENT_SLOPE) {
            return Ok(f64::INFINITY);
        }
        let end = (base + TAIL_SPAN / -slope).min(room - 1.0).max(base + 1.0);
        let body = self.integrate(s0, end)?;
        Ok(body + self.eval(end)? / -slope)
    }
}

pub(crate) fn margins(points: &[MarginPoint], u: &GridSpec, r: Option<&GridSpec>) -> BoundaryMargins {
    let inner = |x: f64, g: &GridSpec| x >= g.lo * 10.0 * (1.0 - 1e-9) && x <= g.hi / 10.0 * (1.0 + 1e-9);
    let mut full_max: f64 = 0.0;
    let mut inner_max: f64 = 0.0;
    for p in points {
        full_max = full_max.max(p.ratio);
        let in_r = match (p.r, r) {
            (Some(rv), Some(rg)) => inner(rv, rg),
            _ => true,
        };
        if inner(p.u, u) && in_r {
            inner_max = inner_max.max(p.ratio);
        }
    }
    let growth_decades = if inner_max > 0.0 && full_max.is_finite() {
        (full_max / inner_max).log10()
    } else if full_max.is_infinite() {
        f64::INFINITY
    } else {
        0.0
    };
    BoundaryMargins { full_max, inner_max, growth_decades }
}

fn finish(
    id: u8,
    params: ConditionParams,
    points: Vec<MarginPoint>,
    u: GridSpec,
    r: Option<GridSpec>,
) -> ConditionReport {
    let boundary_margins = margins(&points, &u, r.as_ref());
    let best_constant = boundary_margins.full_max;
    let divergence_flag = !best_constant.is_finite() || boundary_margins.growth_decades > GROWTH_THRESHOLD;
    ConditionReport {
        condition_id: id,
        params,
        best_constant,
        best_is_lower_bound: true,
        divergence_flag,
        boundary_margins,
        grid_spec: ScanSpec { u, r },
        margin_curve: points,
    }
}

fn point(u: f64, r: Option<f64>, lhs: f64, rhs: f64) -> MarginPoint {
    MarginPoint { u, r, lhs, rhs, ratio: lhs / rhs }
}

pub fn check_condition_1(
    phi: &OrliczSpec,
    psi: &OrliczSpec,
    params: ConditionParams,
    u_grid: &GridSpec,
) -> Result<ConditionReport> {
    let g = LogIntegrand { phi, a: params.a(), c0: 0.0, c1: params.lambda - 1.0 };
    let mut points = Vec::with_capacity(u_grid.count);
    for u in u_grid.points() {
        let lhs = g.integrate_to_infinity(u.ln())?;
        let rhs = psi.inverse(u.powf(params.mu - 1.0))?;
        points.push(point(u, None, lhs, rhs));
    }
    Ok(finish(1, params, points, *u_grid, None))
}

pub fn check_condition_2(
    phi: &OrliczSpec,
    psi: &OrliczSpec,
    params: ConditionParams,
    u_grid: &GridSpec,
    r_grid: &GridSpec,
) -> Result<ConditionReport> {
    let a = params.a();
    let mut points = Vec::new();
    let rs = r_grid.points();
    for u in u_grid.points() {
        for &r in rs.iter().filter(|&&r| r > u) {
            let rl = r.powf(params.lambda);
            let g = LogIntegrand { phi, a, c0: rl.ln(), c1: -1.0 };
            let lhs = u.powf(a) * phi.inverse(rl / u)? + g.integrate(u.ln(), r.ln())?;
            let rhs = psi.inverse(r.powf(params.mu) / u)?;
            points.push(point(u, Some(r), lhs, rhs));
        }
    }
    Ok(finish(2, params, points, *u_grid, Some(*r_grid)))
}

pub fn check_condition_3(
    phi: &OrliczSpec,
    psi: &OrliczSpec,
    params: ConditionParams,
    u_grid: &GridSpec,
    r_grid: &GridSpec,
) -> Result<ConditionReport> {
    let a = params.a();
    let mut points = Vec::new();
    let rs = r_grid.points();
    for u in u_grid.points() {
        for &r in &rs {
            let g = LogIntegrand { phi, a, c0: params.lambda * r.ln(), c1: -1.0 };
            let lhs = g.integrate_to_infinity(u.ln())?;
            let rhs = psi.inverse(r.powf(params.mu) / u)?;
            points.push(point(u, Some(r), lhs, rhs));
        }
    }
    Ok(finish(3, params, points, *u_grid, Some(*r_grid)))
}
