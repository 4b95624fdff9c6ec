//! Balls in R^n: volumes, pairwise intersections and radial reduction.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Error, Result};
use crate::quad::{adaptive_simpson, endpoint_slope};
use crate::special::{inc_beta, ln_gamma};

/// Open ball `B(center, radius)`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Ball {
    center: Vec<f64>,
    radius: f64,
}

impl Ball {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        if center.is_empty() {
            return Err(constraint("ball dimension must be at least 1"));
        }
        if !(radius > 0.0) {
            return Err(constraint(format!("ball radius must be positive, got {radius}")));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(constraint("ball center must be finite"));
        }
        Ok(Ball { center, radius })
    }

    /// `B_r`, the ball about the origin.
    pub fn centered(dim: usize, radius: f64) -> Result<Self> {
        Ball::new(vec![0.0; dim.max(1)], radius).and_then(|b| {
            if dim == 0 {
                Err(constraint("ball dimension must be at least 1"))
            } else {
                Ok(b)
            }
        })
    }

    /// Ball centred at `c e₁`.
    pub fn on_axis(dim: usize, c: f64, radius: f64) -> Result<Self> {
        let mut b = Ball::centered(dim, radius)?;
        b.center[0] = c;
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// First coordinate of the center when the center lies on the x₁-axis.
    pub fn axial_center(&self) -> Option<f64> {
        if self.center[1..].iter().all(|&c| c == 0.0) {
            Some(self.center[0])
        } else {
            None
        }
    }

    pub fn is_centered(&self) -> bool {
        self.center.iter().all(|&c| c == 0.0)
    }

    pub fn distance_to(&self, other: &Ball) -> f64 {
        self.center.iter().zip(&other.center).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }
}

/// `v_n = π^{n/2} / Γ(n/2 + 1)`.
pub fn unit_ball_volume(n: usize) -> f64 {
    match n {
        1 => 2.0,
        2 => PI,
        3 => 4.0 * PI / 3.0,
        _ => {
            let h = 0.5 * n as f64;
            (h * PI.ln() - ln_gamma(h + 1.0)).exp()
        }
    }
}

/// Volume of `B(0, r)` in R^n.
pub fn volume_of_radius(n: usize, r: f64) -> f64 {
    unit_ball_volume(n) * r.powi(n as i32)
}

pub fn ball_volume(b: &Ball) -> f64 {
    volume_of_radius(b.dim(), b.radius)
}

/// Volume of the part of an n-ball of radius `r` lying beyond a hyperplane
/// at signed distance `a` from its center.
pub fn cap_volume(n: usize, r: f64, a: f64) -> f64 {
    cap_by_height(n, r, r - a)
}

/// Cap of height `h = r - a`, `0 <= h <= 2r`.
fn cap_by_height(n: usize, r: f64, h: f64) -> f64 {
    if h <= 0.0 {
        return 0.0;
    }
    if h >= 2.0 * r {
        return volume_of_radius(n, r);
    }
    if h > r {
        return volume_of_radius(n, r) - cap_by_height(n, r, 2.0 * r - h);
    }
    match n {
        1 => h,
        2 => {
            // 1 - cos θ = h / r, kept away from acos near 1
            let theta = 2.0 * (0.5 * h / r).sqrt().asin();
            r * r * (theta - 0.5 * (2.0 * theta).sin())
        }
        3 => PI * h * h * (3.0 * r - h) / 3.0,
        _ => {
            let x = h * (2.0 * r - h) / (r * r);
            0.5 * volume_of_radius(n, r) * inc_beta(x, 0.5 * (n as f64 + 1.0), 0.5)
        }
    }
}

/// `|B(x₁, r₁) ∩ B(x₂, r₂)|` in R^n given the center distance `d`.
pub fn lens_volume(n: usize, r1: f64, r2: f64, d: f64) -> f64 {
    if d >= r1 + r2 {
        return 0.0;
    }
    if d <= (r1 - r2).abs() {
        return volume_of_radius(n, r1.min(r2));
    }
    if n == 1 {
        return r1 + r2 - d;
    }
    // cap heights in factored form, exact up to rounding near tangency
    let outer = r1 + r2 - d;
    let h1 = outer * (r2 - r1 + d) / (2.0 * d);
    let h2 = outer * (r1 - r2 + d) / (2.0 * d);
    cap_by_height(n, r1, h1) + cap_by_height(n, r2, h2)
}

pub fn intersection_volume(b1: &Ball, b2: &Ball) -> Result<f64> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch(b1.dim(), b2.dim()));
    }
    Ok(lens_volume(b1.dim(), b1.radius, b2.radius, b1.distance_to(b2)))
}

/// Probability that `⟨ω, e₁⟩ <= t` for `ω` uniform on `S^{n-1}`, `n >= 2`.
pub fn sphere_cos_cdf(n: usize, t: f64) -> f64 {
    if t <= -1.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    match n {
        2 => 1.0 - t.acos() / PI,
        3 => 0.5 * (1.0 + t),
        _ => {
            let h = 0.5 * (n as f64 - 1.0);
            inc_beta(0.5 * (1.0 + t), h, h)
        }
    }
}

/// `P(⟨ω, e₁⟩ > 1 - u)` for `ω` uniform on `S^{n-1}`, from `u = 1 - t`
/// directly so that thresholds near 1 keep their precision.
pub fn sphere_cos_tail(n: usize, u: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u >= 2.0 {
        return 1.0;
    }
    match n {
        1 => 0.5,
        2 => 2.0 * (0.5 * u).sqrt().asin() / PI,
        3 => 0.5 * u,
        _ => {
            let h = 0.5 * (n as f64 - 1.0);
            inc_beta(0.5 * u, h, h)
        }
    }
}

/// `∫_{B_r} g(|x|) dx = n v_n ∫_0^r g(s) s^{n-1} ds`, relative tolerance
/// 1e-9.
///
/// An integrable singularity `g(s) s^{n-1} ~ s^β`, `-1 < β < 0`, at the
/// origin is removed by `s = r τ^{1/(β+1)}`; `β <= -1` is reported as
/// divergence.
pub fn radial_integral<G: FnMut(f64) -> f64>(mut g: G, r: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(constraint("dimension must be at least 1"));
    }
    if !(r > 0.0) {
        return Ok(0.0);
    }
    let scale = n as f64 * unit_ball_volume(n);
    let mut h = |s: f64| g(s) * s.powi(n as i32 - 1);
    let beta = endpoint_slope(&mut h, 0.0, r, 1.0).unwrap_or(0.0);
    if beta <= -1.0 + 1e-3 {
        return Err(Error::Divergence(format!("radial integrand ~ s^{beta:.3} at the origin")));
    }
    let value = if beta < -1e-3 {
        let k = 1.0 / (beta + 1.0);
        adaptive_simpson(
            |tau| {
                if tau <= 0.0 {
                    0.0
                } else {
                    h(r * tau.powf(k)) * r * k * tau.powf(k - 1.0)
                }
            },
            0.0,
            1.0,
            1e-11,
            0.0,
        )
    } else {
        adaptive_simpson(h, 0.0, r, 1e-11, 0.0)
    };
    Ok(scale * value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn cos_tail_is_the_complementary_cdf() {
        for n in [2, 3, 4, 7] {
            for t in [-0.9, -0.3, 0.0, 0.4, 0.95] {
                assert!((sphere_cos_tail(n, 1.0 - t) - (1.0 - sphere_cos_cdf(n, t))).abs() < 1e-12);
            }
        }
        // u below one ulp of 1 still resolves: 2 asin(sqrt(u/2))/π ~ sqrt(2u)/π
        let u = 1e-20;
        assert!(close(sphere_cos_tail(2, u), (2.0 * u).sqrt() / PI, 1e-9));
    }

    #[test]
    fn lens_near_internal_tangency() {
        // a small ball just poking out of a large one loses only a sliver
        for n in [2, 3, 5] {
            let (big, small, gap) = (1.4, 0.0247, 1e-15);
            let d = big - small + gap;
            let v = lens_volume(n, big, small, d);
            let full = volume_of_radius(n, small);
            assert!(v <= full && v >= full * (1.0 - 1e-10), "n={n}: {v} vs {full}");
        }
    }

    #[test]
    fn caps_by_height_match_the_symmetric_lens() {
        // two unit discs at distance 1: 2π/3 - √3/2
        let v = lens_volume(2, 1.0, 1.0, 1.0);
        assert!(close(v, 2.0 * PI / 3.0 - 3f64.sqrt() / 2.0, 1e-14));
    }

    #[test]
    fn unit_volumes() {
        assert_eq!(unit_ball_volume(1), 2.0);
        assert!(close(unit_ball_volume(2), core::f64::consts::PI, 1e-15));
        assert!(close(unit_ball_volume(3), 4.188_790_20, 1e-8));
        // general path agrees with the table
        let via_gamma = |n: usize| {
            let h = 0.5 * n as f64;
            (h * PI.ln() - ln_gamma(h + 1.0)).exp()
        };
        for n in 1..=3 {
            assert!(close(via_gamma(n), unit_ball_volume(n), 1e-13));
        }
        assert!(close(unit_ball_volume(4), PI * PI / 2.0, 1e-13));
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(&Ball::centered(1, 1.0).unwrap()), 2.0);
        assert!(close(ball_volume(&Ball::centered(2, 2.0).unwrap()), 4.0 * PI, 1e-15));
        assert!(close(ball_volume(&Ball::centered(3, 0.5).unwrap()), PI / 6.0, 1e-15));
    }

    #[test]
    fn intersections() {
        let big = Ball::centered(3, 2.0).unwrap();
        let small = Ball::centered(3, 1.0).unwrap();
        assert!(close(intersection_volume(&big, &small).unwrap(), 4.0 * PI / 3.0, 1e-15));
        let a = Ball::centered(1, 2.0).unwrap();
        let b = Ball::on_axis(1, 3.0, 2.0).unwrap();
        assert_eq!(intersection_volume(&a, &b).unwrap(), 1.0);
        let p = Ball::centered(2, 1.0).unwrap();
        let q = Ball::on_axis(2, 1.0, 1.0).unwrap();
        let lens = 2.0 * PI / 3.0 - 3f64.sqrt() / 2.0;
        assert!(close(intersection_volume(&p, &q).unwrap(), lens, 1e-14));
        assert!(matches!(intersection_volume(&p, &a), Err(Error::DimensionMismatch(2, 1))));
    }

    #[test]
    fn cap_beta_path_matches_closed_forms() {
        // compare the incomplete-beta cap with the n = 2, 3 closed forms
        for &(r, a) in &[(1.0, 0.3), (2.0, 1.5), (1.0, 0.0), (3.0, 0.01)] {
            for n in [2usize, 3] {
                let x = 1.0 - (a * a) / (r * r);
                let beta_form = 0.5 * volume_of_radius(n, r) * inc_beta(x, 0.5 * (n as f64 + 1.0), 0.5);
                assert!(close(beta_form, cap_volume(n, r, a), 1e-12), "n={n} r={r} a={a}");
            }
        }
    }

    #[test]
    fn sphere_cdf_closed_forms() {
        for t in [-0.9, -0.2, 0.0, 0.4, 0.99] {
            let h2 = 0.5;
            assert!((inc_beta(0.5 * (1.0 + t), h2, h2) - sphere_cos_cdf(2, t)).abs() < 1e-12);
            assert!((inc_beta(0.5 * (1.0 + t), 1.0, 1.0) - sphere_cos_cdf(3, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn radial_integrals() {
        assert!(close(radial_integral(|_| 1.0, 2.0, 2).unwrap(), 4.0 * PI, 1e-12));
        assert!(close(radial_integral(|s| s.powf(-0.5), 1.0, 1).unwrap(), 4.0, 1e-9));
        assert!(close(radial_integral(|s| s * s, 1.0, 1).unwrap(), 2.0 / 3.0, 1e-12));
        assert!(matches!(radial_integral(|s| 1.0 / s, 1.0, 1), Err(Error::Divergence(_))));
        for n in 1..=3 {
            for r in [0.1, 1.0, 10.0] {
                let v = radial_integral(|_| 1.0, r, n).unwrap();
                assert!(close(v, volume_of_radius(n, r), 1e-10));
            }
        }
    }
}
