//! Piecewise-radial functions plus translated indicators.
//!
//! A [`TestFunction`] is a finite sum of
//!
//! * radial pieces about the origin: on an annulus `inner <= |x| < outer`
//!   the value is `constant + Σ c_j |x|^{β_j}`;
//! * indicators `coef · χ_{B(c e₁, τ)}` of balls centred on the x₁-axis.
//!
//! Everything is therefore symmetric about the x₁-axis, and integrals over
//! balls centred on that axis reduce to a radius and one polar angle. Balls
//! and evaluation points off the axis are rejected with
//! [`Error::Unsupported`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Error, Result};
use crate::geometry::{intersection_volume, sphere_cos_cdf, sphere_cos_tail, unit_ball_volume, volume_of_radius, Ball};
use crate::quad::{gauss_kronrod, integrate_singular_ends, QuadTol};
use crate::special::beta;

const RHO_TOL: QuadTol = QuadTol::rel(1e-11).with_abs(1e-300);
const THETA_TOL: QuadTol = QuadTol::rel(1e-11).with_abs(1e-300);
const MAX_INDICATORS_FOR_ATOMS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerTerm {
    pub coef: f64,
    pub beta: f64,
}

/// `constant + Σ powers` on `inner <= |x| < outer` (`outer` may be `inf`).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Annulus {
    pub inner: f64,
    pub outer: f64,
    pub constant: f64,
    pub powers: Vec<PowerTerm>,
}

impl Annulus {
    pub fn value(&self, s: f64) -> f64 {
        self.constant + self.powers.iter().map(|p| p.coef * s.powf(p.beta)).sum::<f64>()
    }

    pub fn is_flat(&self) -> bool {
        self.powers.is_empty()
    }

    fn is_zero(&self) -> bool {
        self.constant == 0.0 && self.powers.iter().all(|p| p.coef == 0.0)
    }
}

/// `coef · χ_{B(center e₁, radius)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TranslatedIndicator {
    pub center: f64,
    pub radius: f64,
    pub coef: f64,
}

/// A value together with the measure of the set where it is taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub value: f64,
    pub measure: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TestFunction {
    dim: usize,
    annuli: Vec<Annulus>,
    indicators: Vec<TranslatedIndicator>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(constraint("dimension must be at least 1"))
    } else {
        Ok(())
    }
}

fn check_radius(t: f64) -> Result<()> {
    if t > 0.0 {
        Ok(())
    } else {
        Err(constraint(format!("radius must be positive, got {t}")))
    }
}

impl TestFunction {
    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(TestFunction { dim, annuli: Vec::new(), indicators: Vec::new() })
    }

    /// `χ_{B_t}`.
    pub fn indicator(dim: usize, t: f64) -> Result<Self> {
        TestFunction::step(dim, 0.0, t, 1.0)
    }

    /// `value` on the annulus `inner <= |x| < outer`, zero elsewhere.
    pub fn step(dim: usize, inner: f64, outer: f64, value: f64) -> Result<Self> {
        check_dim(dim)?;
        if !(inner >= 0.0 && outer > inner) || !value.is_finite() {
            return Err(constraint(format!("invalid annulus [{inner}, {outer}) with value {value}")));
        }
        Ok(TestFunction::zero(dim)?.with_annuli(vec![Annulus { inner, outer, constant: value, powers: Vec::new() }]))
    }

    /// `χ_{B(c e₁, t)}`.
    pub fn translated_indicator(dim: usize, c: f64, t: f64) -> Result<Self> {
        check_dim(dim)?;
        check_radius(t)?;
        if !c.is_finite() {
            return Err(constraint("indicator center must be finite"));
        }
        if c == 0.0 {
            return TestFunction::indicator(dim, t);
        }
        Ok(TestFunction {
            dim,
            annuli: Vec::new(),
            indicators: vec![TranslatedIndicator { center: c, radius: t, coef: 1.0 }],
        })
    }

    /// `|x|^β χ_{B_t}` (`t` may be `inf`).
    pub fn radial_power(dim: usize, beta: f64, t: f64) -> Result<Self> {
        TestFunction::power_on(dim, 0.0, t, 1.0, beta)
    }

    /// `coef |x|^β` on `inner <= |x| < outer`.
    pub fn power_on(dim: usize, inner: f64, outer: f64, coef: f64, beta: f64) -> Result<Self> {
        check_dim(dim)?;
        if !(inner >= 0.0 && outer > inner) || !beta.is_finite() || !coef.is_finite() {
            return Err(constraint(format!("invalid power piece {coef}|x|^{beta} on [{inner}, {outer})")));
        }
        Ok(TestFunction::zero(dim)?.with_annuli(vec![Annulus {
            inner,
            outer,
            constant: 0.0,
            powers: vec![PowerTerm { coef, beta }],
        }]))
    }

    /// Radial function from ordered, disjoint annuli.
    pub fn from_annuli(dim: usize, annuli: Vec<Annulus>) -> Result<Self> {
        check_dim(dim)?;
        let mut prev = 0.0;
        for a in &annuli {
            if !(a.inner >= prev && a.outer > a.inner) {
                return Err(constraint(format!("annuli must be ordered and disjoint, got [{}, {})", a.inner, a.outer)));
            }
            if !a.constant.is_finite() || a.powers.iter().any(|p| !p.coef.is_finite() || !p.beta.is_finite()) {
                return Err(constraint("annulus coefficients must be finite"));
            }
            prev = a.outer;
        }
        Ok(TestFunction::zero(dim)?.with_annuli(annuli))
    }

    pub fn constant(dim: usize, c: f64) -> Result<Self> {
        TestFunction::step(dim, 0.0, f64::INFINITY, c)
    }

    fn with_annuli(mut self, annuli: Vec<Annulus>) -> Self {
        self.annuli = annuli.into_iter().filter(|a| !a.is_zero()).collect();
        self
    }

    pub fn scaled(&self, k: f64) -> Self {
        let annuli = self
            .annuli
            .iter()
            .map(|a| Annulus {
                inner: a.inner,
                outer: a.outer,
                constant: k * a.constant,
                powers: a.powers.iter().map(|p| PowerTerm { coef: k * p.coef, beta: p.beta }).collect(),
            })
            .collect();
        let indicators = self
            .indicators
            .iter()
            .map(|i| TranslatedIndicator { coef: k * i.coef, ..*i })
            .filter(|i| i.coef != 0.0)
            .collect();
        TestFunction { dim: self.dim, annuli: Vec::new(), indicators }.with_annuli(annuli)
    }

    pub fn add(&self, other: &TestFunction) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut cuts: Vec<f64> = self.annuli.iter().chain(&other.annuli).flat_map(|a| [a.inner, a.outer]).collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut annuli = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mut piece = Annulus { inner: lo, outer: hi, constant: 0.0, powers: Vec::new() };
            for a in self.annuli.iter().chain(&other.annuli) {
                if a.inner <= lo && hi <= a.outer {
                    piece.constant += a.constant;
                    for p in &a.powers {
                        match piece.powers.iter_mut().find(|q| q.beta == p.beta) {
                            Some(q) => q.coef += p.coef,
                            None => piece.powers.push(*p),
                        }
                    }
                }
            }
            piece.powers.retain(|p| p.coef != 0.0);
            annuli.push(piece);
        }
        let indicators = self.indicators.iter().chain(&other.indicators).copied().collect();
        Ok(TestFunction { dim: self.dim, annuli: Vec::new(), indicators }.with_annuli(annuli))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn annuli(&self) -> &[Annulus] {
        &self.annuli
    }

    pub fn indicators(&self) -> &[TranslatedIndicator] {
        &self.indicators
    }

    pub fn is_zero(&self) -> bool {
        self.annuli.is_empty() && self.indicators.is_empty()
    }

    /// No power terms: the function takes finitely many values.
    pub fn is_step(&self) -> bool {
        self.annuli.iter().all(Annulus::is_flat)
    }

    /// The annuli alone, without the translated indicators.
    pub fn radial_part(&self) -> TestFunction {
        TestFunction { dim: self.dim, annuli: self.annuli.clone(), indicators: Vec::new() }
    }

    pub fn is_radial(&self) -> bool {
        self.indicators.is_empty()
    }

    /// Sufficient check: every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.annuli.iter().all(|a| a.constant >= 0.0 && a.powers.iter().all(|p| p.coef >= 0.0))
            && self.indicators.iter().all(|i| i.coef >= 0.0)
    }

    /// Some power term blows up at the origin.
    pub fn singular_at_origin(&self) -> bool {
        self.annuli.iter().any(|a| a.inner == 0.0 && a.powers.iter().any(|p| p.beta < 0.0))
    }

    /// Radius of the smallest origin-centred ball containing the support
    /// (`inf` for unbounded support, 0 for the zero function).
    pub fn support_radius(&self) -> f64 {
        let radial = self.annuli.iter().map(|a| a.outer).fold(0.0, f64::max);
        let ind = self.indicators.iter().map(|i| i.center.abs() + i.radius).fold(0.0, f64::max);
        radial.max(ind)
    }

    /// Growth exponent on an unbounded annulus, `None` for compact support.
    pub fn far_field_exponent(&self) -> Option<f64> {
        let last = self.annuli.iter().find(|a| a.outer.is_infinite())?;
        let mut e = f64::NEG_INFINITY;
        if last.constant != 0.0 {
            e = 0.0;
        }
        for p in &last.powers {
            e = e.max(p.beta);
        }
        Some(e)
    }

    /// Finite positive annulus boundaries.
    pub fn radial_breaks(&self) -> Vec<f64> {
        let mut b: Vec<f64> =
            self.annuli.iter().flat_map(|a| [a.inner, a.outer]).filter(|s| *s > 0.0 && s.is_finite()).collect();
        b.sort_by(f64::total_cmp);
        b.dedup();
        b
    }

    fn annulus_at(&self, s: f64) -> Option<&Annulus> {
        let i = self.annuli.partition_point(|a| a.outer <= s);
        self.annuli.get(i).filter(|a| a.inner <= s)
    }

    pub fn radial_value(&self, s: f64) -> f64 {
        self.annulus_at(s).map_or(0.0, |a| a.value(s))
    }

    /// Value at the point with x₁-coordinate `a` and norm `s`.
    pub fn value_axial(&self, a: f64, s: f64) -> f64 {
        let mut v = self.radial_value(s);
        for ind in &self.indicators {
            let d2 = s * s - 2.0 * a * ind.center + ind.center * ind.center;
            if d2 < ind.radius * ind.radius {
                v += ind.coef;
            }
        }
        v
    }

    pub fn value(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(x.len(), self.dim));
        }
        let s = x.iter().map(|c| c * c).sum::<f64>().sqrt();
        Ok(self.value_axial(x[0], s))
    }

    fn flat_at(&self, s: f64) -> bool {
        self.annulus_at(s).is_none_or(Annulus::is_flat)
    }

    /// Radii about `x0 e₁` at which the sphere picture changes.
    pub(crate) fn rho_breaks(&self, x0: f64) -> Vec<f64> {
        let ax = x0.abs();
        let mut b = Vec::new();
        if ax > 0.0 {
            b.push(ax);
        }
        for s in self.radial_breaks() {
            b.push((s - ax).abs());
            b.push(s + ax);
        }
        for ind in &self.indicators {
            let d = (x0 - ind.center).abs();
            b.push(d + ind.radius);
            b.push((d - ind.radius).abs());
        }
        b.retain(|r| *r > 0.0 && r.is_finite());
        b.sort_by(f64::total_cmp);
        b.dedup();
        b
    }

    /// Cosines `t ∈ (-1, 1)` where a sphere of radius `rho` about `x0 e₁`
    /// crosses a boundary.
    fn t_cuts(&self, x0: f64, rho: f64, out: &mut Vec<f64>) {
        if x0 != 0.0 {
            for s in self.radial_breaks() {
                out.push((s * s - x0 * x0 - rho * rho) / (2.0 * x0 * rho));
            }
        }
        for ind in &self.indicators {
            let d = x0 - ind.center;
            if d != 0.0 {
                out.push((ind.radius * ind.radius - d * d - rho * rho) / (2.0 * d * rho));
            }
        }
    }

    /// Exact value distribution over `ball`, or `None` when the function
    /// has power terms. The zero value is included as an atom.
    pub fn atoms(&self, ball: &Ball) -> Result<Option<Vec<Atom>>> {
        self.check_ball(ball)?;
        if !self.is_step() {
            return Ok(None);
        }
        let total = crate::geometry::ball_volume(ball);
        let mut atoms: Vec<Atom> = Vec::new();
        if self.indicators.is_empty() {
            let lens = |s: f64| -> Result<f64> {
                if s <= 0.0 {
                    Ok(0.0)
                } else if s.is_infinite() {
                    Ok(total)
                } else if ball.is_centered() {
                    Ok(volume_of_radius(self.dim, s.min(ball.radius())))
                } else {
                    intersection_volume(&Ball::centered(self.dim, s)?, ball)
                }
            };
            for a in &self.annuli {
                let m = lens(a.outer)? - lens(a.inner)?;
                if m > 0.0 {
                    atoms.push(Atom { value: a.constant, measure: m });
                }
            }
        } else if self.annuli.is_empty() && self.indicators_disjoint() {
            for ind in &self.indicators {
                let b = Ball::on_axis(self.dim, ind.center, ind.radius)?;
                let m = intersection_volume(ball, &b)?;
                if m > 0.0 {
                    atoms.push(Atom { value: ind.coef, measure: m });
                }
            }
        } else {
            if self.indicators.len() > MAX_INDICATORS_FOR_ATOMS {
                return Err(Error::Unsupported(format!("more than {MAX_INDICATORS_FOR_ATOMS} overlapping indicators")));
            }
            for v in self.candidate_values() {
                let m = self.polar_integral(None, ball, |fv, _| if fv == v { 1.0 } else { 0.0 })?;
                if m > 0.0 {
                    atoms.push(Atom { value: v, measure: m });
                }
            }
            atoms.retain(|a| a.value != 0.0);
        }
        atoms = merge_atoms(atoms);
        let used: f64 = atoms.iter().map(|a| a.measure).sum();
        atoms.push(Atom { value: 0.0, measure: (total - used).max(0.0) });
        Ok(Some(atoms))
    }

    fn indicators_disjoint(&self) -> bool {
        let ind = &self.indicators;
        (0..ind.len())
            .all(|i| (i + 1..ind.len()).all(|j| (ind[i].center - ind[j].center).abs() >= ind[i].radius + ind[j].radius))
    }

    /// Every value a step function can take, computed in the same order as
    /// [`Self::value_axial`] so equal values compare bitwise equal.
    fn candidate_values(&self) -> Vec<f64> {
        let mut bases = vec![0.0];
        bases.extend(self.annuli.iter().map(|a| a.constant));
        let k = self.indicators.len();
        let mut out = Vec::new();
        for base in bases {
            for mask in 0u32..(1u32 << k) {
                let mut v = base;
                for (j, ind) in self.indicators.iter().enumerate() {
                    if mask & (1 << j) != 0 {
                        v += ind.coef;
                    }
                }
                out.push(v);
            }
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }

    fn check_ball(&self, ball: &Ball) -> Result<()> {
        if ball.dim() != self.dim {
            return Err(Error::DimensionMismatch(ball.dim(), self.dim));
        }
        if ball.axial_center().is_none() {
            return Err(Error::Unsupported("balls must be centred on the x1-axis".into()));
        }
        Ok(())
    }

    /// `∫_ball h(f(y)) dy`.
    pub fn ball_integral<H: FnMut(f64) -> f64>(&self, ball: &Ball, mut h: H) -> Result<f64> {
        if let Some(atoms) = self.atoms(ball)? {
            return Ok(atoms.iter().map(|a| if a.measure > 0.0 { h(a.value) * a.measure } else { 0.0 }).sum());
        }
        if self.indicators.is_empty() {
            if ball.is_centered() {
                return self.radial_ball_integral(ball.radius(), h);
            }
            if let (Some(x0), true) = (ball.axial_center(), self.dim > 1) {
                return self.shifted_radial_ball_integral(x0, ball.radius(), h);
            }
        }
        self.polar_integral(None, ball, |fv, _| h(fv))
    }

    /// `∫_ball h(f(y), g(y)) dy`.
    pub fn ball_integral_pair<H: FnMut(f64, f64) -> f64>(&self, g: &TestFunction, ball: &Ball, h: H) -> Result<f64> {
        if g.dim != self.dim {
            return Err(Error::DimensionMismatch(g.dim, self.dim));
        }
        self.check_ball(ball)?;
        self.polar_integral(Some(g), ball, h)
    }

    fn radial_ball_integral<H: FnMut(f64) -> f64>(&self, r: f64, mut h: H) -> Result<f64> {
        let n = self.dim;
        let surface = n as f64 * unit_ball_volume(n);
        let mut total = 0.0;
        let mut covered = 0.0;
        for a in &self.annuli {
            let hi = a.outer.min(r);
            if hi <= a.inner {
                continue;
            }
            let m = volume_of_radius(n, hi) - volume_of_radius(n, a.inner);
            covered += m;
            if a.is_flat() {
                total += h(a.constant) * m;
            } else {
                let piece = integrate_singular_ends(|s| h(a.value(s)) * s.powi(n as i32 - 1), a.inner, hi, RHO_TOL)?;
                total += surface * piece;
            }
        }
        let rest = volume_of_radius(n, r) - covered;
        if rest > 0.0 {
            let h0 = h(0.0);
            if h0 != 0.0 {
                total += h0 * rest;
            }
        }
        Ok(total)
    }

    /// Radial `f` over `B(x₀ e₁, r)`, `n >= 2`: flat annuli use lens volumes,
    /// the rest integrate in `|y|` against the fraction of the sphere of
    /// that radius lying inside the ball.
    fn shifted_radial_ball_integral<H: FnMut(f64) -> f64>(&self, x0: f64, r: f64, mut h: H) -> Result<f64> {
        let n = self.dim;
        let ax = x0.abs();
        let surface = n as f64 * unit_ball_volume(n);
        let ball = Ball::on_axis(n, ax, r)?;
        let lens = |s: f64| -> Result<f64> {
            if s <= 0.0 {
                return Ok(0.0);
            }
            if s.is_infinite() {
                return Ok(volume_of_radius(n, r));
            }
            intersection_volume(&Ball::centered(n, s)?, &ball)
        };
        // fraction of the sphere |y| = ax + d inside the ball, with 1 - cos
        // of the cutoff angle written as (r - d)(r + d) / (2 s ax)
        let inside = |d: f64| {
            let s = ax + d;
            if s <= 0.0 {
                return if r >= ax { 1.0 } else { 0.0 };
            }
            sphere_cos_tail(n, (r - d) * (r + d) / (2.0 * s * ax))
        };
        let (lo, hi) = ((ax - r).max(0.0), ax + r);
        let mut total = 0.0;
        let mut covered = 0.0;
        for a in &self.annuli {
            let (s0, s1) = (a.inner.max(lo), a.outer.min(hi));
            if s1 <= s0 {
                continue;
            }
            let m = lens(a.outer)? - lens(a.inner)?;
            covered += m;
            if a.is_flat() {
                total += h(a.constant) * m;
                continue;
            }
            let mut pts = vec![s0];
            pts.extend([r - ax].into_iter().filter(|&b| b > s0 && b < s1));
            pts.push(s1);
            for w in pts.windows(2) {
                let piece = if w[1] <= r - ax {
                    integrate_singular_ends(|s| h(a.value(s)) * s.powi(n as i32 - 1), w[0], w[1], RHO_TOL)?
                } else {
                    // offsets from ax keep their precision when r << ax
                    integrate_singular_ends(
                        |d| {
                            let s = ax + d;
                            h(a.value(s)) * s.powi(n as i32 - 1) * inside(d)
                        },
                        w[0] - ax,
                        w[1] - ax,
                        RHO_TOL,
                    )?
                };
                total += surface * piece;
            }
        }
        let rest = volume_of_radius(n, r) - covered;
        if rest > 0.0 {
            let h0 = h(0.0);
            if h0 != 0.0 {
                total += h0 * rest;
            }
        }
        Ok(total)
    }

    /// Polar integral about the (axial) ball center.
    fn polar_integral<H: FnMut(f64, f64) -> f64>(
        &self,
        g: Option<&TestFunction>,
        ball: &Ball,
        mut h: H,
    ) -> Result<f64> {
        let x0 = ball.axial_center().ok_or_else(|| Error::Unsupported("off-axis ball".into()))?;
        let r = ball.radius();
        let n = self.dim;
        let mut breaks = vec![0.0];
        breaks.extend(self.rho_breaks(x0).into_iter().filter(|&b| b < r));
        if let Some(g) = g {
            breaks.extend(g.rho_breaks(x0).into_iter().filter(|&b| b < r));
        }
        breaks.push(r);
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        let zero = TestFunction::zero(n)?;
        let g = g.unwrap_or(&zero);
        let mut total = 0.0;
        let mut scratch = Vec::new();
        for w in breaks.windows(2) {
            total += integrate_singular_ends(
                |rho| rho.powi(n as i32 - 1) * sphere_mean(self, g, x0, rho, &mut h, &mut scratch),
                w[0],
                w[1],
                RHO_TOL,
            )?;
        }
        Ok(n as f64 * unit_ball_volume(n) * total)
    }

    /// Average of `h(f, g)` over the sphere of radius `rho` about `x0 e₁`.
    pub(crate) fn sphere_mean_with<H: FnMut(f64, f64) -> f64>(
        &self,
        g: Option<&TestFunction>,
        x0: f64,
        rho: f64,
        mut h: H,
    ) -> f64 {
        let zero;
        let g = match g {
            Some(g) => g,
            None => {
                zero = TestFunction { dim: self.dim, annuli: Vec::new(), indicators: Vec::new() };
                &zero
            }
        };
        let mut scratch = Vec::new();
        sphere_mean(self, g, x0, rho, &mut h, &mut scratch)
    }
}

fn merge_atoms(mut atoms: Vec<Atom>) -> Vec<Atom> {
    atoms.sort_by(|a, b| a.value.total_cmp(&b.value));
    let mut out: Vec<Atom> = Vec::with_capacity(atoms.len());
    for a in atoms {
        match out.last_mut() {
            Some(last) if last.value == a.value => last.measure += a.measure,
            _ => out.push(a),
        }
    }
    out
}

fn sphere_mean<H: FnMut(f64, f64) -> f64>(
    f: &TestFunction,
    g: &TestFunction,
    x0: f64,
    rho: f64,
    h: &mut H,
    cuts: &mut Vec<f64>,
) -> f64 {
    let n = f.dim;
    let at = |t: f64| {
        let a = x0 + rho * t;
        let s = (x0 * x0 + rho * rho + 2.0 * x0 * rho * t).max(0.0).sqrt();
        (a, s)
    };
    if n == 1 {
        let (a1, a2) = (x0 + rho, x0 - rho);
        let (s1, s2) = (a1.abs(), a2.abs());
        return 0.5
            * (h(f.value_axial(a1, s1), g.value_axial(a1, s1)) + h(f.value_axial(a2, s2), g.value_axial(a2, s2)));
    }
    cuts.clear();
    f.t_cuts(x0, rho, cuts);
    g.t_cuts(x0, rho, cuts);
    cuts.retain(|t| *t > -1.0 && *t < 1.0);
    cuts.push(-1.0);
    cuts.push(1.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut mean = 0.0;
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        let (am, sm) = at(0.5 * (t0 + t1));
        if f.flat_at(sm) && g.flat_at(sm) {
            let weight = sphere_cos_cdf(n, t1) - sphere_cos_cdf(n, t0);
            if weight > 0.0 {
                mean += h(f.value_axial(am, sm), g.value_axial(am, sm)) * weight;
            }
        } else {
            let norm = beta(0.5, 0.5 * (n as f64 - 1.0));
            let (th0, th1) = (t1.acos(), t0.acos());
            let piece = gauss_kronrod(
                |th: f64| {
                    let (a, s) = at(th.cos());
                    h(f.value_axial(a, s), g.value_axial(a, s)) * th.sin().powi(n as i32 - 2)
                },
                th0,
                th1,
                THETA_TOL,
            )
            .0;
            mean += piece / norm;
        }
    }
    mean
}

/// First coordinate of a point on the x₁-axis.
pub fn axial_coordinate(x: &[f64], dim: usize) -> Result<f64> {
    if x.len() != dim {
        return Err(Error::DimensionMismatch(x.len(), dim));
    }
    if x[1..].iter().any(|&c| c != 0.0) {
        return Err(Error::Unsupported("evaluation points must lie on the x1-axis".into()));
    }
    Ok(x[0])
}
