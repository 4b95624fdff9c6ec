//! Parameter families with known behaviour under the three conditions.
//!
//! The three log-perturbed and max-of-powers families derive their
//! dependent exponents from the free ones and validate every stated
//! constraint before building `Φ` and `Ψ`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::orlicz::{OrliczSpec, PowerLogInverse};

use super::conditions::ConditionParams;

/// Free parameters of a family.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum PresetParams {
    /// Power `Ψ`, `Φ⁻¹` a power damped by `(1 + ln u)^{-a}` above 1.
    LogDamped { n: usize, alpha: f64, lambda: f64, p: f64, a: f64 },
    /// `Φ = max(u^{p1}, u^{p2})`, `Ψ = max(u^{q1}, u^{q2})`.
    MaxPowers { n: usize, alpha: f64, lambda: f64, p1: f64, p2: f64 },
    /// Power-log inverses on both sides of 1 for `Φ` and below 1 for `Ψ`.
    PowerLog { n: usize, alpha: f64, lambda: f64, p1: f64, p2: f64, a: f64, b: f64 },
}

impl PresetParams {
    /// Default free parameters for family 1, 2 or 3.
    pub fn default_for(id: u8) -> Option<Self> {
        match id {
            1 => Some(PresetParams::LogDamped { n: 1, alpha: 0.25, lambda: 0.0, p: 2.0, a: 0.1 }),
            2 => Some(PresetParams::MaxPowers { n: 1, alpha: 0.25, lambda: 0.5, p1: 4.0 / 3.0, p2: 1.6 }),
            3 => Some(PresetParams::PowerLog {
                n: 1,
                alpha: 0.25,
                lambda: 0.5,
                p1: 4.0 / 3.0,
                p2: 1.6,
                a: 1.0 / 24.0,
                b: 0.2,
            }),
            _ => None,
        }
    }

    pub fn id(&self) -> u8 {
        match self {
            PresetParams::LogDamped { .. } => 1,
            PresetParams::MaxPowers { .. } => 2,
            PresetParams::PowerLog { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConstraintCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub phi: OrliczSpec,
    pub psi: OrliczSpec,
    pub params: ConditionParams,
    /// Dependent exponents, in derivation order.
    pub derived: Vec<(String, f64)>,
    pub constraint_report: Vec<ConstraintCheck>,
}

struct Checks(Vec<ConstraintCheck>);

impl Checks {
    fn push(&mut self, name: &str, holds: bool) {
        self.0.push(ConstraintCheck { name: name.to_string(), holds });
    }

    fn into_result(self) -> Result<Vec<ConstraintCheck>> {
        match self.0.iter().find(|c| !c.holds) {
            Some(c) => Err(Error::Constraint(format!("violated: {}", c.name))),
            None => Ok(self.0),
        }
    }
}

fn sobolev(p: f64, alpha: f64, n: usize) -> f64 {
    1.0 / (1.0 / p - alpha / n as f64)
}

// slack for constraints that the default presets meet with equality
const EPS: f64 = 1e-12;

pub fn example_preset(params: &PresetParams) -> Result<Preset> {
    let mut c = Checks(Vec::new());
    match *params {
        PresetParams::LogDamped { n, alpha, lambda, p, a } => {
            let nf = n as f64;
            c.push("0 < alpha < n", n > 0 && alpha > 0.0 && alpha < nf);
            c.push("0 <= lambda < 1", (0.0..1.0).contains(&lambda));
            c.push("1 < p < n(1-lambda)/alpha", p > 1.0 && p < nf * (1.0 - lambda) / alpha);
            let s = 1.0 - 1.0 / p;
            c.push("0 <= a <= sqrt(1-1/p) - (1-1/p)", a >= 0.0 && a <= s.sqrt() - s + EPS);
            let checks = c.into_result()?;
            let q = sobolev(p, alpha, n);
            let mu = lambda * q / p;
            Ok(Preset {
                name: "log-damped power".into(),
                phi: OrliczSpec::power_log_inverse(PowerLogInverse::damped_above(p, a))?,
                psi: OrliczSpec::power(q)?,
                params: ConditionParams::new(alpha, n, lambda, mu)?,
                derived: alloc::vec![("q".into(), q), ("mu".into(), mu)],
                constraint_report: checks,
            })
        }
        PresetParams::MaxPowers { n, alpha, lambda, p1, p2 } => {
            let nf = n as f64;
            c.push("0 < alpha < n", n > 0 && alpha > 0.0 && alpha < nf);
            c.push("0 < lambda < 1", lambda > 0.0 && lambda < 1.0);
            c.push("1 < p1 < p2 < n(1-lambda)/alpha", 1.0 < p1 && p1 < p2 && p2 < nf * (1.0 - lambda) / alpha);
            let checks = c.into_result()?;
            let (q1, q2) = (sobolev(p1, alpha, n), sobolev(p2, alpha, n));
            let mu = lambda * q2 / p2;
            let mut c = Checks(checks);
            c.push("1 < q1 < q2", 1.0 < q1 && q1 < q2);
            c.push("0 < mu < 1", mu > 0.0 && mu < 1.0);
            c.push("lambda/p1 < mu/q1", lambda / p1 < mu / q1);
            let checks = c.into_result()?;
            Ok(Preset {
                name: "max of powers".into(),
                phi: OrliczSpec::max_power(p1, p2)?,
                psi: OrliczSpec::max_power(q1, q2)?,
                params: ConditionParams::new(alpha, n, lambda, mu)?,
                derived: alloc::vec![("q1".into(), q1), ("q2".into(), q2), ("mu".into(), mu)],
                constraint_report: checks,
            })
        }
        PresetParams::PowerLog { n, alpha, lambda, p1, p2, a, b } => {
            let nf = n as f64;
            c.push("0 < alpha < n", n > 0 && alpha > 0.0 && alpha < nf);
            c.push("0 < lambda < 1", lambda > 0.0 && lambda < 1.0);
            c.push("1 < p1 < p2", 1.0 < p1 && p1 < p2);
            c.push("alpha/n < 1/p1", alpha / nf < 1.0 / p1);
            let checks = c.into_result()?;
            let (q1, q2) = (sobolev(p1, alpha, n), sobolev(p2, alpha, n));
            let mu = lambda * q2 / p2;
            let mut c = Checks(checks);
            c.push("1 < q1 < q2", 1.0 < q1 && q1 < q2);
            c.push("0 < mu < 1", mu > 0.0 && mu < 1.0);
            c.push("lambda/p1 < mu/q1", lambda / p1 < mu / q1);
            let a_max = (1.0 - mu) / (1.0 - lambda) * (1.0 / q1 - 1.0 / q2);
            c.push("0 < a <= (1-mu)/(1-lambda) (1/q1 - 1/q2)", a > 0.0 && a <= a_max * (1.0 + EPS));
            c.push("0 < b <= 1/p2", b > 0.0 && b <= 1.0 / p2);
            let checks = c.into_result()?;
            let phi_inv = PowerLogInverse { p_low: p1, a_low: a, k_low: 1.0, p_high: p2, b_high: b };
            let psi_inv =
                PowerLogInverse { p_low: q1, a_low: a, k_low: (1.0 - lambda) / (1.0 - mu), p_high: q2, b_high: 0.0 };
            Ok(Preset {
                name: "two-sided power-log".into(),
                phi: OrliczSpec::power_log_inverse(phi_inv)?,
                psi: OrliczSpec::power_log_inverse(psi_inv)?,
                params: ConditionParams::new(alpha, n, lambda, mu)?,
                derived: alloc::vec![("q1".into(), q1), ("q2".into(), q2), ("mu".into(), mu)],
                constraint_report: checks,
            })
        }
    }
}

/// `Φ = u^p`, `Ψ = u^q` with the exponents taken as given.
pub fn power_preset(n: usize, alpha: f64, lambda: f64, mu: f64, p: f64, q: f64) -> Result<Preset> {
    Ok(Preset {
        name: format!("powers p={p}, q={q}"),
        phi: OrliczSpec::power(p)?,
        psi: OrliczSpec::power(q)?,
        params: ConditionParams::new(alpha, n, lambda, mu)?,
        derived: Vec::new(),
        constraint_report: Vec::new(),
    })
}

/// `λ = 0`, `μ = 1/2`: the first two conditions hold, the third fails.
pub fn unbalanced_power_preset() -> Result<Preset> {
    power_preset(1, 0.5, 0.0, 0.5, 4.0 / 3.0, 2.0)
}

/// Sobolev and balance relations both hold: every condition passes.
pub fn balanced_power_preset() -> Result<Preset> {
    power_preset(2, 0.5, 0.5, 0.8, 1.5, 2.4)
}

/// `λ = μ` with `Φ = Ψ = u²`: the second condition fails.
pub fn equal_exponent_preset() -> Result<Preset> {
    power_preset(1, 0.25, 0.3, 0.3, 2.0, 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn derived(p: &Preset, name: &str) -> f64 {
        p.derived.iter().find(|(n, _)| n == name).unwrap().1
    }

    #[test]
    fn log_damped_defaults() {
        let p = example_preset(&PresetParams::default_for(1).unwrap()).unwrap();
        assert!((derived(&p, "q") - 4.0).abs() < 1e-12);
        assert_eq!(p.params.mu, 0.0);
        assert!(p.constraint_report.iter().all(|c| c.holds));
        let bad = PresetParams::LogDamped { n: 1, alpha: 0.25, lambda: 0.0, p: 2.0, a: 0.25 };
        let err = example_preset(&bad).unwrap_err();
        assert!(format!("{err}").contains("sqrt(1-1/p)"));
    }

    #[test]
    fn max_power_defaults() {
        let p = example_preset(&PresetParams::default_for(2).unwrap()).unwrap();
        assert!((derived(&p, "q1") - 2.0).abs() < 1e-12);
        assert!((derived(&p, "q2") - 8.0 / 3.0).abs() < 1e-12);
        assert!((p.params.mu - 5.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn power_log_rejects_large_a() {
        let ok = example_preset(&PresetParams::default_for(3).unwrap()).unwrap();
        assert!(ok.constraint_report.iter().all(|c| c.holds));
        let bad = PresetParams::PowerLog { n: 1, alpha: 0.25, lambda: 0.5, p1: 4.0 / 3.0, p2: 1.6, a: 1.0, b: 0.2 };
        let err = example_preset(&bad).unwrap_err();
        assert!(format!("{err}").contains("(1-mu)/(1-lambda)"));
    }

    #[test]
    fn fixed_power_presets_build() {
        assert!(unbalanced_power_preset().is_ok());
        assert!(balanced_power_preset().is_ok());
        assert!(equal_exponent_preset().is_ok());
    }
}
