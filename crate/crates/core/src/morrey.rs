//! Modulars, Luxemburg norms on balls, and central (weak) Morrey–Orlicz
//! norms.
//!
//! For step functions every quantity is a finite sum over the exact value
//! distribution on the ball ([`TestFunction::atoms`]); otherwise the modular
//! is a ball quadrature. Norms are found by bisection in `ε` on the
//! monotone predicate `modular(ε) <= 1`.

use alloc::format;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Error, Result};
use crate::function::{Atom, TestFunction};
use crate::geometry::{ball_volume, intersection_volume, volume_of_radius, Ball};
use crate::grid::log_grid;
use crate::orlicz::OrliczSpec;
use crate::quad::{bisect_predicate, golden_max};

const NORM_REL_TOL: f64 = 1e-12;
const NORM_MAX_ITER: usize = 400;
const CENTRAL_GRID_POINTS: usize = 129;
const WEAK_LEVELS: usize = 64;

/// `(Φ, λ, n)`: the data of a central Morrey–Orlicz space.
#[derive(Debug, Clone, PartialEq)]
pub struct MorreyParams {
    pub phi: OrliczSpec,
    pub lambda: f64,
    pub dim: usize,
}

impl MorreyParams {
    pub fn new(phi: OrliczSpec, lambda: f64, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(constraint("dimension must be at least 1"));
        }
        if !lambda.is_finite() {
            return Err(constraint("lambda must be finite"));
        }
        Ok(MorreyParams { phi, lambda, dim })
    }

    fn with_phi(&self, phi: OrliczSpec) -> Self {
        MorreyParams { phi, lambda: self.lambda, dim: self.dim }
    }

    fn check(&self, f: &TestFunction, ball: &Ball) -> Result<()> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch(f.dim(), self.dim));
        }
        if ball.dim() != self.dim {
            return Err(Error::DimensionMismatch(ball.dim(), self.dim));
        }
        Ok(())
    }

    fn check_range(&self) -> Result<()> {
        if (0.0..=1.0).contains(&self.lambda) {
            Ok(())
        } else {
            Err(constraint(format!("closed forms need 0 <= lambda <= 1, got {}", self.lambda)))
        }
    }
}

/// `sup_r` of the ball norms together with the maximizing radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CentralNorm {
    pub value: f64,
    pub argmax_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConjugateBound {
    pub bound: f64,
    pub measured: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HolderGap {
    pub lhs: f64,
    pub rhs: f64,
}

/// `f` restricted to one ball, with its value distribution when exact.
struct OnBall<'a> {
    f: &'a TestFunction,
    ball: &'a Ball,
    atoms: Option<Vec<Atom>>,
    weight: f64,
}

impl<'a> OnBall<'a> {
    fn new(f: &'a TestFunction, prm: &MorreyParams, ball: &'a Ball) -> Result<Self> {
        prm.check(f, ball)?;
        let atoms = f.atoms(ball)?;
        Ok(OnBall { f, ball, atoms, weight: ball_volume(ball).powf(prm.lambda) })
    }

    fn vanishes(&self) -> Result<bool> {
        match &self.atoms {
            Some(a) => Ok(a.iter().all(|a| a.value == 0.0 || a.measure == 0.0)),
            None => Ok(self.f.ball_integral(self.ball, f64::abs)? == 0.0),
        }
    }

    /// `|B|^{-λ} ∫_B Φ(|f|/ε)`, `+inf` when the integral diverges.
    fn modular(&self, phi: &OrliczSpec, eps: f64) -> Result<f64> {
        let mut failure = None;
        let mut h = |v: f64| match phi.evaluate(v.abs() / eps) {
            Ok(x) => x,
            Err(e) => {
                failure = Some(e);
                f64::NAN
            }
        };
        let integral = match &self.atoms {
            Some(atoms) => atoms.iter().filter(|a| a.measure > 0.0).map(|a| h(a.value) * a.measure).sum(),
            None => match self.f.ball_integral(self.ball, &mut h) {
                Ok(v) => v,
                Err(Error::Divergence(_)) => f64::INFINITY,
                Err(e) => return Err(e),
            },
        };
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(integral / self.weight)
    }

    /// Levels `w` (descending) with `measure{|f| >= w}` for the weak norm.
    fn superlevels(&self) -> Result<Vec<(f64, f64)>> {
        if let Some(atoms) = &self.atoms {
            let mut abs: Vec<Atom> = atoms
                .iter()
                .filter(|a| a.value != 0.0 && a.measure > 0.0)
                .map(|a| Atom { value: a.value.abs(), measure: a.measure })
                .collect();
            abs.sort_by(|a, b| b.value.total_cmp(&a.value));
            let mut out: Vec<(f64, f64)> = Vec::new();
            let mut acc = 0.0;
            for a in abs {
                acc += a.measure;
                match out.last_mut() {
                    Some(last) if last.0 == a.value => last.1 = acc,
                    _ => out.push((a.value, acc)),
                }
            }
            return Ok(out);
        }
        let top = self.sup_abs();
        if !(top > 0.0) {
            return Ok(Vec::new());
        }
        let top = top.min(1e12);
        let mut out = Vec::new();
        for &w in log_grid(top * 1e-6, top, WEAK_LEVELS).iter().rev() {
            let d = self.f.ball_integral(self.ball, |v| if v.abs() >= w { 1.0 } else { 0.0 })?;
            out.push((w, d));
        }
        Ok(out)
    }

    /// Crude upper estimate of `sup |f|` over the ball.
    fn sup_abs(&self) -> f64 {
        let reach = self.ball.center()[0].abs() + self.ball.radius();
        let radial =
            log_grid(reach * 1e-9, reach, 512).into_iter().map(|s| self.f.radial_value(s).abs()).fold(0.0, f64::max);
        radial + self.f.indicators().iter().map(|i| i.coef.abs()).sum::<f64>()
    }
}

/// `inf{ε > 0 : ok(ε)}` for a predicate monotone in `ε`; `+inf` when no
/// `ε` works.
fn smallest_scale<P: FnMut(f64) -> Result<bool>>(mut ok: P) -> Result<f64> {
    let mut failure = None;
    let mut pred = |e: f64| match ok(e) {
        Ok(b) => b,
        Err(err) => {
            failure = Some(err);
            true
        }
    };
    let (lo, hi) = if pred(1.0) {
        let mut lo = 0.5;
        while pred(lo) {
            lo *= 0.5;
            if lo < 1e-300 {
                return Ok(0.0);
            }
        }
        (lo, 2.0 * lo)
    } else {
        let mut hi = 2.0;
        while !pred(hi) {
            hi *= 2.0;
            if hi > 1e300 {
                return Ok(f64::INFINITY);
            }
        }
        (0.5 * hi, hi)
    };
    let eps = bisect_predicate(lo, hi, &mut pred, NORM_REL_TOL, NORM_MAX_ITER);
    match failure {
        Some(e) => Err(e),
        None => Ok(eps),
    }
}

pub fn modular(f: &TestFunction, prm: &MorreyParams, ball: &Ball, eps: f64) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(constraint(format!("modular scale must be positive, got {eps}")));
    }
    OnBall::new(f, prm, ball)?.modular(&prm.phi, eps)
}

/// `‖f‖_{Φ,λ,B}`; `+inf` when the modular diverges for every `ε`.
pub fn luxemburg_norm(f: &TestFunction, prm: &MorreyParams, ball: &Ball) -> Result<f64> {
    let on = OnBall::new(f, prm, ball)?;
    if on.vanishes()? {
        return Ok(0.0);
    }
    smallest_scale(|eps| Ok(on.modular(&prm.phi, eps)? <= 1.0))
}

/// `‖f‖_{Φ,λ,B,∞}`.
pub fn weak_norm(f: &TestFunction, prm: &MorreyParams, ball: &Ball) -> Result<f64> {
    let on = OnBall::new(f, prm, ball)?;
    let levels = on.superlevels()?;
    if levels.iter().all(|&(_, d)| d == 0.0) {
        return Ok(0.0);
    }
    smallest_scale(|eps| {
        for &(w, d) in &levels {
            if d > 0.0 && prm.phi.evaluate(w / eps)? * d > on.weight {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// `d(f χ_B, u) = |{x ∈ B : |f(x)| > u}|`.
pub fn distribution_function(f: &TestFunction, ball: &Ball, u: f64) -> Result<f64> {
    if u < 0.0 {
        return Err(constraint("distribution level must be nonnegative"));
    }
    match f.atoms(ball)? {
        Some(atoms) => Ok(atoms.iter().filter(|a| a.value.abs() > u).map(|a| a.measure).sum()),
        None => f.ball_integral(ball, |v| if v.abs() > u { 1.0 } else { 0.0 }),
    }
}

/// Default radii for central norms: 129 log-spaced points on
/// `[1e-3, 1e3]` times the support radius of `f`.
pub fn default_radius_grid(f: &TestFunction) -> Vec<f64> {
    let s = f.support_radius();
    let scale = if s.is_finite() && s > 0.0 { s } else { 1.0 };
    log_grid(1e-3 * scale, 1e3 * scale, CENTRAL_GRID_POINTS)
}

fn sup_over_radii<N: FnMut(f64) -> Result<f64>>(f: &TestFunction, radii: &[f64], mut norm: N) -> Result<CentralNorm> {
    if radii.is_empty() {
        return Err(constraint("radius grid must be nonempty"));
    }
    let mut pts: Vec<f64> = radii.to_vec();
    let (lo, hi) = (radii.iter().copied().fold(f64::INFINITY, f64::min), radii.iter().copied().fold(0.0, f64::max));
    pts.extend(f.rho_breaks(0.0).into_iter().filter(|r| (lo..=hi).contains(r)));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut vals = Vec::with_capacity(pts.len());
    for &r in &pts {
        let v = norm(r)?;
        if v.is_infinite() {
            return Ok(CentralNorm { value: f64::INFINITY, argmax_radius: r });
        }
        vals.push(v);
    }
    let (mut k, mut best) = (0, vals[0]);
    for (i, &v) in vals.iter().enumerate() {
        if v > best {
            best = v;
            k = i;
        }
    }
    let mut arg = pts[k];
    if pts.len() > 1 {
        let a = pts[k.saturating_sub(1)].ln();
        let b = pts[(k + 1).min(pts.len() - 1)].ln();
        let mut failure = None;
        let (x, v) = golden_max(
            |lr: f64| match norm(lr.exp()) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e);
                    f64::NEG_INFINITY
                }
            },
            a,
            b,
            1e-10,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        if v > best {
            best = v;
            arg = x.exp();
        }
    }
    Ok(CentralNorm { value: best, argmax_radius: arg })
}

/// `sup_r ‖f‖_{Φ,λ,B_r}` over `radii` (default grid when `None`) with one
/// golden-section refinement around the discrete maximum.
pub fn central_norm(f: &TestFunction, prm: &MorreyParams, radii: Option<&[f64]>) -> Result<CentralNorm> {
    if f.is_zero() {
        return Ok(CentralNorm { value: 0.0, argmax_radius: 0.0 });
    }
    let grid;
    let radii = match radii {
        Some(r) => r,
        None => {
            grid = default_radius_grid(f);
            &grid
        }
    };
    sup_over_radii(f, radii, |r| luxemburg_norm(f, prm, &Ball::centered(prm.dim, r)?))
}

pub fn weak_central_norm(f: &TestFunction, prm: &MorreyParams, radii: Option<&[f64]>) -> Result<CentralNorm> {
    if f.is_zero() {
        return Ok(CentralNorm { value: 0.0, argmax_radius: 0.0 });
    }
    let grid;
    let radii = match radii {
        Some(r) => r,
        None => {
            grid = default_radius_grid(f);
            &grid
        }
    };
    sup_over_radii(f, radii, |r| weak_norm(f, prm, &Ball::centered(prm.dim, r)?))
}

/// `‖χ_{B_t}‖_{Φ,λ,B_r} = 1 / Φ⁻¹(|B_r|^λ / |B_r ∩ B_t|)`.
pub fn chi_norm_closed(prm: &MorreyParams, t: f64, r: f64) -> Result<f64> {
    prm.check_range()?;
    if !(t > 0.0 && r > 0.0) {
        return Err(constraint("radii must be positive"));
    }
    let n = prm.dim;
    let meet = volume_of_radius(n, t.min(r));
    Ok(1.0 / prm.phi.inverse(volume_of_radius(n, r).powf(prm.lambda) / meet)?)
}

/// `‖χ_{B_t}‖_{M^{Φ,λ}(0)} = 1 / Φ⁻¹(|B_t|^{λ-1})`.
pub fn chi_central_norm_closed(prm: &MorreyParams, t: f64) -> Result<f64> {
    prm.check_range()?;
    if !(t > 0.0) {
        return Err(constraint("radius must be positive"));
    }
    Ok(1.0 / prm.phi.inverse(volume_of_radius(prm.dim, t).powf(prm.lambda - 1.0))?)
}

fn indicator_of(b: &Ball) -> Result<TestFunction> {
    match b.axial_center() {
        Some(c) => TestFunction::translated_indicator(b.dim(), c, b.radius()),
        None => Err(Error::Unsupported("indicator balls must be centred on the x1-axis".into())),
    }
}

/// Closed-form bound on `‖χ_b‖_{Φ*,λ,B_r}` and the measured norm.
pub fn chi_conjugate_bound(prm: &MorreyParams, b: &Ball, r: f64) -> Result<ConjugateBound> {
    prm.check_range()?;
    let br = Ball::centered(prm.dim, r)?;
    let meet = intersection_volume(&br, b)?;
    if meet <= 0.0 {
        return Err(Error::EmptyIntersection);
    }
    let w = ball_volume(&br).powf(prm.lambda);
    let bound = meet / w * prm.phi.inverse(w / meet)?;
    let conj = prm.with_phi(prm.phi.conjugate()?);
    let measured = luxemburg_norm(&indicator_of(b)?, &conj, &br)?;
    Ok(ConjugateBound { bound, measured })
}

/// `∫_B |fg|` against `2 |B|^λ ‖f‖_{Φ,λ,B} ‖g‖_{Φ*,λ,B}`.
pub fn holder_gap(f: &TestFunction, g: &TestFunction, prm: &MorreyParams, ball: &Ball) -> Result<HolderGap> {
    prm.check(f, ball)?;
    prm.check(g, ball)?;
    let lhs = f.ball_integral_pair(g, ball, |a, b| (a * b).abs())?;
    let nf = luxemburg_norm(f, prm, ball)?;
    let ng = luxemburg_norm(g, &prm.with_phi(prm.phi.conjugate()?), ball)?;
    let rhs = if nf == 0.0 || ng == 0.0 { 0.0 } else { 2.0 * ball_volume(ball).powf(prm.lambda) * nf * ng };
    Ok(HolderGap { lhs, rhs })
}
