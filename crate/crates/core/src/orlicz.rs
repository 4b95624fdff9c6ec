//! Young and Orlicz functions.
//!
//! A function is described symbolically by [`OrliczSpec`]. Evaluation,
//! right-continuous inversion and convex conjugation are provided for every
//! variant, with closed forms where they exist and bracketed numerics
//! otherwise. `+inf` is an ordinary return value (`f64::INFINITY`).

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::cell::Cell;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Error, Result};
use crate::grid::log_grid;
use crate::quad::{bisect_predicate, golden_max};

/// Bisection tolerance used when Φ is recovered from a stored inverse.
const INVERT_REL_TOL: f64 = 1e-12;
const INVERT_MAX_ITER: usize = 200;

/// Conjugation grid: log-spaced u on [1e-8, 1e8].
const CONJ_GRID_LO: f64 = 1e-8;
const CONJ_GRID_HI: f64 = 1e8;
const CONJ_GRID_POINTS: usize = 512;
const CONJ_GOLDEN_WIDTH: f64 = 1e-10;

/// Piecewise power-log inverse, the primitive for the log-perturbed
/// families:
///
/// ```text
/// Φ⁻¹(v) = v^{1/p_low} (1 - k_low ln v)^{a_low}    for 0 <= v <= 1
/// Φ⁻¹(v) = v^{1/p_high} (1 + ln v)^{-b_high}        for v >= 1
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerLogInverse {
    pub p_low: f64,
    pub a_low: f64,
    pub k_low: f64,
    pub p_high: f64,
    pub b_high: f64,
}

impl PowerLogInverse {
    /// Pure power below 1, log-damped power above 1.
    pub fn damped_above(p: f64, a: f64) -> Self {
        PowerLogInverse { p_low: p, a_low: 0.0, k_low: 1.0, p_high: p, b_high: a }
    }

    pub fn eval(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        if v.is_infinite() {
            return f64::INFINITY;
        }
        if v <= 1.0 {
            let base = v.powf(1.0 / self.p_low);
            if self.a_low == 0.0 {
                base
            } else {
                base * (1.0 - self.k_low * v.ln()).powf(self.a_low)
            }
        } else {
            let base = v.powf(1.0 / self.p_high);
            if self.b_high == 0.0 {
                base
            } else {
                base * (1.0 + v.ln()).powf(-self.b_high)
            }
        }
    }
}

/// Piecewise-linear Φ through strictly increasing abscissae, starting at
/// `(0, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    u: Vec<f64>,
    phi: Vec<f64>,
}

impl Table {
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.u.iter().copied().zip(self.phi.iter().copied())
    }

    fn range(&self) -> (f64, f64) {
        (self.u[0], self.u[self.u.len() - 1])
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.range();
        if !(lo..=hi).contains(&x) {
            return Err(Error::Extrapolation { at: x, lo, hi });
        }
        let i = self.u.partition_point(|&t| t <= x);
        if i == self.u.len() {
            return Ok(self.phi[i - 1]);
        }
        let (u0, u1) = (self.u[i - 1], self.u[i]);
        let (f0, f1) = (self.phi[i - 1], self.phi[i]);
        Ok(f0 + (f1 - f0) * (x - u0) / (u1 - u0))
    }

    fn inverse(&self, v: f64) -> Result<f64> {
        let i = self.phi.partition_point(|&f| f <= v);
        if i == self.phi.len() {
            return Err(Error::Extrapolation { at: v, lo: self.phi[0], hi: self.phi[i - 1] });
        }
        let (u0, u1) = (self.u[i - 1], self.u[i]);
        let (f0, f1) = (self.phi[i - 1], self.phi[i]);
        Ok(u0 + (v - f0) / (f1 - f0) * (u1 - u0))
    }
}

/// How a conjugate is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ConjugateForm {
    /// `(1 - 1/p) p^{-1/(p-1)} v^{p/(p-1)}`.
    Power { p: f64 },
    /// 0 on `[0, at]`, `+inf` beyond.
    Indicator { at: f64 },
    /// Maximum of `u v - Φ(u)` over the vertices of a table.
    TableVertices,
    /// Grid scan plus golden-section refinement.
    Numeric,
}

/// Evaluation data for Φ*.
///
/// `samples` holds `(u, Φ(u))` on the conjugation grid (empty for closed
/// forms). `breakpoint` is the value past which Φ* is `+inf`, present when Φ
/// grows at most linearly.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateRep {
    pub breakpoint: Option<f64>,
    pub form: ConjugateForm,
    pub samples: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Conjugate {
    pub of: OrliczSpec,
    pub rep: ConjugateRep,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OrliczKind {
    Power { p: f64 },
    MaxPower { p1: f64, p2: f64 },
    InversePowerLog(PowerLogInverse),
    Tabulated(Table),
    Conjugate(Box<Conjugate>),
}

/// A Young function, possibly jumping to `+inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrliczSpec {
    kind: OrliczKind,
    allows_infinity: bool,
}

/// Result of a Δ₂ scan.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Delta2 {
    pub satisfied: bool,
    pub d2: f64,
}

/// Extremes of `Φ⁻¹(u) Φ*⁻¹(u) / u` over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct YoungRatio {
    pub min_ratio: f64,
    pub max_ratio: f64,
}

impl OrliczSpec {
    pub fn power(p: f64) -> Result<Self> {
        if !(p >= 1.0 && p.is_finite()) {
            return Err(constraint(format!("power exponent must satisfy 1 <= p < inf, got {p}")));
        }
        Ok(OrliczSpec { kind: OrliczKind::Power { p }, allows_infinity: false })
    }

    pub fn max_power(p1: f64, p2: f64) -> Result<Self> {
        if !(p1 >= 1.0 && p1 < p2 && p2.is_finite()) {
            return Err(constraint(format!("max-of-powers needs 1 <= p1 < p2 < inf, got p1={p1}, p2={p2}")));
        }
        Ok(OrliczSpec { kind: OrliczKind::MaxPower { p1, p2 }, allows_infinity: false })
    }

    /// Builds Φ from its stored inverse, checking on a grid that the inverse
    /// is strictly increasing and concave.
    pub fn power_log_inverse(inv: PowerLogInverse) -> Result<Self> {
        let PowerLogInverse { p_low, a_low, k_low, p_high, b_high } = inv;
        if !(p_low >= 1.0 && p_high >= 1.0 && p_low.is_finite() && p_high.is_finite()) {
            return Err(constraint(format!("power-log exponents must be >= 1, got p1={p_low}, p2={p_high}")));
        }
        if !(a_low >= 0.0 && b_high >= 0.0 && k_low >= 0.0) {
            return Err(constraint("power-log log exponents and scale must be nonnegative"));
        }
        let grid = log_grid(1e-12, 1e12, 481);
        let vals: Vec<f64> = grid.iter().map(|&v| inv.eval(v)).collect();
        if vals.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(constraint("stored inverse must be strictly increasing"));
        }
        for i in 1..grid.len() - 1 {
            let (x0, x1, x2) = (grid[i - 1], grid[i], grid[i + 1]);
            let chord = vals[i - 1] + (vals[i + 1] - vals[i - 1]) * (x1 - x0) / (x2 - x0);
            if vals[i] < chord - 1e-10 * vals[i + 1].abs() {
                return Err(constraint(format!("stored inverse is not concave near v = {x1:e}")));
            }
        }
        Ok(OrliczSpec { kind: OrliczKind::InversePowerLog(inv), allows_infinity: false })
    }

    /// Piecewise-linear Φ. The first sample must be `(0, 0)`; abscissae
    /// strictly increasing; values nondecreasing with nondecreasing slopes.
    pub fn tabulated(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.len() < 2 {
            return Err(constraint("table needs at least two samples"));
        }
        if samples[0] != (0.0, 0.0) {
            return Err(constraint("table must start at (0, 0)"));
        }
        let mut prev_slope = 0.0;
        for w in samples.windows(2) {
            let (u0, f0) = w[0];
            let (u1, f1) = w[1];
            if !(u1 > u0) || !f1.is_finite() {
                return Err(constraint("table abscissae must be strictly increasing and values finite"));
            }
            let slope = (f1 - f0) / (u1 - u0);
            if slope < prev_slope - 1e-12 * slope.abs().max(1.0) {
                return Err(constraint("table must be nondecreasing and convex"));
            }
            prev_slope = slope;
        }
        if samples[samples.len() - 1].1 <= 0.0 {
            return Err(constraint("table is identically zero"));
        }
        let (u, phi) = samples.iter().copied().unzip();
        Ok(OrliczSpec { kind: OrliczKind::Tabulated(Table { u, phi }), allows_infinity: false })
    }

    pub fn kind(&self) -> &OrliczKind {
        &self.kind
    }

    pub fn allows_infinity(&self) -> bool {
        self.allows_infinity
    }

    /// Finite-valued, continuous and strictly increasing.
    pub fn is_orlicz(&self) -> bool {
        match &self.kind {
            OrliczKind::Power { .. } | OrliczKind::MaxPower { .. } | OrliczKind::InversePowerLog(_) => true,
            OrliczKind::Tabulated(t) => t.phi.windows(2).all(|w| w[1] > w[0]),
            OrliczKind::Conjugate(c) => {
                !self.allows_infinity && c.rep.samples.iter().all(|&(u, f)| u <= 0.0 || f > 0.0)
            }
        }
    }

    /// Arguments at which Φ⁻¹ has a kink, for splitting quadratures.
    pub fn inverse_breakpoints(&self) -> Vec<f64> {
        match &self.kind {
            OrliczKind::MaxPower { .. } | OrliczKind::InversePowerLog(_) => alloc::vec![1.0],
            OrliczKind::Tabulated(t) => t.phi.iter().copied().filter(|&f| f > 0.0).collect(),
            _ => Vec::new(),
        }
    }

    /// Φ(u) for u >= 0.
    pub fn evaluate(&self, u: f64) -> Result<f64> {
        if u < 0.0 || u.is_nan() {
            return Err(constraint(format!("Young functions are evaluated at u >= 0, got {u}")));
        }
        match &self.kind {
            OrliczKind::Power { p } => Ok(if *p == 1.0 { u } else { u.powf(*p) }),
            OrliczKind::MaxPower { p1, p2 } => Ok(if u <= 1.0 { u.powf(*p1) } else { u.powf(*p2) }),
            OrliczKind::InversePowerLog(inv) => Ok(invert_increasing(|v| inv.eval(v), u, inv.p_low, inv.p_high)),
            OrliczKind::Tabulated(t) => t.eval(u),
            OrliczKind::Conjugate(c) => c.evaluate(u),
        }
    }

    /// Right-continuous inverse `inf{u >= 0 : Φ(u) > v}`, `+inf` when the
    /// set is empty.
    pub fn inverse(&self, v: f64) -> Result<f64> {
        if v < 0.0 || v.is_nan() {
            return Err(constraint(format!("inverse is defined for v >= 0, got {v}")));
        }
        if v.is_infinite() {
            return Ok(f64::INFINITY);
        }
        match &self.kind {
            OrliczKind::Power { p } => Ok(if *p == 1.0 { v } else { v.powf(1.0 / *p) }),
            OrliczKind::MaxPower { p1, p2 } => Ok(if v <= 1.0 { v.powf(1.0 / *p1) } else { v.powf(1.0 / *p2) }),
            OrliczKind::InversePowerLog(inv) => Ok(inv.eval(v)),
            OrliczKind::Tabulated(t) => t.inverse(v),
            OrliczKind::Conjugate(c) => c.inverse(v),
        }
    }

    /// The complementary function Φ*(v) = sup_{u>0} [uv - Φ(u)].
    pub fn conjugate(&self) -> Result<OrliczSpec> {
        let rep = match &self.kind {
            OrliczKind::Power { p } if *p == 1.0 => {
                ConjugateRep { breakpoint: Some(1.0), form: ConjugateForm::Indicator { at: 1.0 }, samples: Vec::new() }
            }
            OrliczKind::Power { p } => {
                ConjugateRep { breakpoint: None, form: ConjugateForm::Power { p: *p }, samples: Vec::new() }
            }
            OrliczKind::Tabulated(t) => {
                ConjugateRep { breakpoint: None, form: ConjugateForm::TableVertices, samples: t.samples().collect() }
            }
            _ => {
                let grid = log_grid(CONJ_GRID_LO, CONJ_GRID_HI, CONJ_GRID_POINTS);
                let mut samples = Vec::with_capacity(grid.len());
                for &u in &grid {
                    samples.push((u, self.evaluate(u)?));
                }
                let breakpoint = detect_linear_growth(&samples);
                ConjugateRep { breakpoint, form: ConjugateForm::Numeric, samples }
            }
        };
        let allows_infinity = rep.breakpoint.is_some();
        Ok(OrliczSpec { kind: OrliczKind::Conjugate(Box::new(Conjugate { of: self.clone(), rep })), allows_infinity })
    }

    /// `D2 = sup Φ(2u)/Φ(u)` over `u_grid`.
    pub fn delta2_estimate(&self, u_grid: &[f64]) -> Result<Delta2> {
        if u_grid.is_empty() {
            return Err(constraint("delta2 scan needs a nonempty grid"));
        }
        if let OrliczKind::Power { p } = self.kind {
            return Ok(Delta2 { satisfied: true, d2: 2f64.powf(p) });
        }
        let mut d2: f64 = 0.0;
        for &u in u_grid {
            let a = self.evaluate(u)?;
            let b = self.evaluate(2.0 * u)?;
            if a <= 0.0 || a.is_infinite() || b.is_infinite() {
                return Ok(Delta2 { satisfied: false, d2: f64::INFINITY });
            }
            d2 = d2.max(b / a);
        }
        Ok(Delta2 { satisfied: d2.is_finite(), d2 })
    }

    /// Extremes of `Φ⁻¹(u) Φ*⁻¹(u) / u` over `u_grid`; both lie in [1, 2] for
    /// every Young function.
    pub fn young_product_check(&self, u_grid: &[f64]) -> Result<YoungRatio> {
        let conj = self.conjugate()?;
        let mut min_ratio = f64::INFINITY;
        let mut max_ratio = f64::NEG_INFINITY;
        for &u in u_grid {
            let r = self.inverse(u)? * conj.inverse(u)? / u;
            min_ratio = min_ratio.min(r);
            max_ratio = max_ratio.max(r);
        }
        Ok(YoungRatio { min_ratio, max_ratio })
    }
}

/// Solves `inv(x) = u` for a continuous strictly increasing `inv` with
/// `inv(0) = 0`, `inv(1) = 1`, by bisection in `ln x`.
fn invert_increasing<F: Fn(f64) -> f64>(inv: F, u: f64, p_low: f64, p_high: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u.is_infinite() {
        return f64::INFINITY;
    }
    let guess = if u <= 1.0 { u.powf(p_low) } else { u.powf(p_high) };
    let (mut lo, mut hi) = (guess, guess);
    let mut steps = 0;
    while inv(hi) < u {
        hi *= 4.0;
        steps += 1;
        if hi.is_infinite() || steps > 2000 {
            return f64::INFINITY;
        }
    }
    while inv(lo) > u {
        lo *= 0.25;
        if lo <= 0.0 {
            return 0.0;
        }
    }
    if lo == hi {
        return hi;
    }
    let (mut a, mut b) = (lo.ln(), hi.ln());
    for _ in 0..INVERT_MAX_ITER {
        let m = 0.5 * (a + b);
        if inv(m.exp()) < u {
            a = m;
        } else {
            b = m;
        }
        if b - a <= INVERT_REL_TOL * 0.25 {
            break;
        }
    }
    (0.5 * (a + b)).exp()
}

/// Φ(u)/u nondecreasing for convex Φ; a flat tail of that slope marks
/// linear growth and hence a jump of Φ* to `+inf`.
fn detect_linear_growth(samples: &[(f64, f64)]) -> Option<f64> {
    if samples.iter().any(|&(_, f)| f.is_infinite()) {
        return None;
    }
    let n = samples.len();
    let (u_top, f_top) = samples[n - 1];
    let (u_prev, f_prev) = samples[n - 1 - n / 16];
    let s_top = f_top / u_top;
    let s_prev = f_prev / u_prev;
    if s_top > 0.0 && (s_top - s_prev) <= 1e-9 * s_top {
        Some(s_top)
    } else {
        None
    }
}

impl Conjugate {
    fn evaluate(&self, v: f64) -> Result<f64> {
        if v == 0.0 {
            return Ok(0.0);
        }
        match self.rep.form {
            ConjugateForm::Power { p } => {
                let q = p / (p - 1.0);
                Ok((1.0 - 1.0 / p) * p.powf(-1.0 / (p - 1.0)) * v.powf(q))
            }
            ConjugateForm::Indicator { at } => Ok(if v <= at { 0.0 } else { f64::INFINITY }),
            ConjugateForm::TableVertices => {
                let s = &self.rep.samples;
                let n = s.len();
                let last_slope = (s[n - 1].1 - s[n - 2].1) / (s[n - 1].0 - s[n - 2].0);
                if v > last_slope * (1.0 + 1e-12) {
                    return Err(Error::UnresolvedSupremum(v));
                }
                Ok(s.iter().map(|&(u, f)| u * v - f).fold(0.0, f64::max))
            }
            ConjugateForm::Numeric => self.evaluate_numeric(v),
        }
    }

    fn evaluate_numeric(&self, v: f64) -> Result<f64> {
        if let Some(l) = self.rep.breakpoint {
            if v > l * (1.0 + 1e-12) {
                return Ok(f64::INFINITY);
            }
        }
        let failure: Cell<Option<Error>> = Cell::new(None);
        let objective = |u: f64| -> f64 {
            match self.of.evaluate(u) {
                Ok(f) if f.is_infinite() => f64::NEG_INFINITY,
                Ok(f) => u * v - f,
                Err(e) => {
                    failure.set(Some(e));
                    f64::NEG_INFINITY
                }
            }
        };
        let s = &self.rep.samples;
        let (mut idx, mut best) = (0usize, f64::NEG_INFINITY);
        for (i, &(u, f)) in s.iter().enumerate() {
            let val = if f.is_infinite() { f64::NEG_INFINITY } else { u * v - f };
            if val > best {
                best = val;
                idx = i;
            }
        }
        let (lo, hi) = if idx + 1 == s.len() {
            // still rising at the grid top: march outward (the objective is concave)
            let mut u = s[idx].0;
            let mut cur = best;
            loop {
                let next = objective(2.0 * u);
                if next <= cur {
                    break;
                }
                u *= 2.0;
                cur = next;
                if u > 1e300 {
                    return Ok(f64::INFINITY);
                }
            }
            (0.5 * u, 2.0 * u)
        } else if idx == 0 {
            (0.0, s[1].0)
        } else {
            (s[idx - 1].0, s[idx + 1].0)
        };
        let (_, val) = golden_max(&objective, lo, hi, CONJ_GOLDEN_WIDTH);
        if let Some(e) = failure.take() {
            return Err(e);
        }
        Ok(val.max(best).max(0.0))
    }

    fn inverse(&self, w: f64) -> Result<f64> {
        match self.rep.form {
            ConjugateForm::Power { p } => {
                let q = p / (p - 1.0);
                let c = (1.0 - 1.0 / p) * p.powf(-1.0 / (p - 1.0));
                Ok((w / c).powf(1.0 / q))
            }
            ConjugateForm::Indicator { at } => Ok(at),
            _ => {
                let failure: Cell<Option<Error>> = Cell::new(None);
                let above = |v: f64| match self.evaluate(v) {
                    Ok(f) => f > w,
                    Err(e) => {
                        failure.set(Some(e));
                        true
                    }
                };
                let mut hi = 1.0;
                while !above(hi) {
                    hi *= 2.0;
                    if hi > 1e300 {
                        return Ok(f64::INFINITY);
                    }
                }
                let mut lo = 0.5 * hi;
                while above(lo) {
                    lo *= 0.5;
                    if lo < 1e-300 {
                        return Ok(0.0);
                    }
                }
                let root = bisect_predicate(lo, lo.max(hi).max(2.0 * lo), &above, 1e-13, 200);
                if let Some(e) = failure.take() {
                    return Err(e);
                }
                Ok(root)
            }
        }
    }
}
