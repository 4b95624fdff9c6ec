//! Exact exponent bookkeeping for the pure power pair `Φ = u^p`, `Ψ = u^q`.
//!
//! For powers every condition collapses to linear relations between
//! `1/p`, `1/q`, `λ`, `μ` and `α/n`, which are checked in rational
//! arithmetic after rounding each input to the simplest fraction within
//! `1e-12` of it.

use alloc::format;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{constraint, Result};

type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Relation {
    pub name: &'static str,
    pub statement: &'static str,
    pub holds: bool,
}

/// Which conditions the exact relations say must pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerPredictions {
    pub condition_1: bool,
    pub condition_2: bool,
    pub condition_3: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerRelations {
    /// Sobolev, balance and admissibility relations all hold.
    pub valid: bool,
    pub relations: Vec<Relation>,
    pub predicts: PowerPredictions,
}

/// Simplest fraction within `1e-12` relative of `x`, by continued fractions.
fn rational(name: &str, x: f64) -> Result<Q> {
    if !x.is_finite() {
        return Err(constraint(format!("{name}={x} is not finite")));
    }
    let tol = 1e-12 * x.abs().max(1.0);
    let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol || k1 > 1_000_000_000 {
            break;
        }
        let frac = r - a;
        if frac == 0.0 {
            break;
        }
        r = 1.0 / frac;
    }
    Ok(Q::new(h1, k1))
}

pub fn power_case_relations(p: f64, q: f64, lambda: f64, mu: f64, alpha: f64, n: usize) -> Result<PowerRelations> {
    if !(p > 1.0 && q > 1.0) {
        return Err(constraint(format!("need p, q > 1, got p={p}, q={q}")));
    }
    if !(0.0..1.0).contains(&lambda) || !(0.0..1.0).contains(&mu) {
        return Err(constraint(format!("need 0 <= lambda, mu < 1, got lambda={lambda}, mu={mu}")));
    }
    if n == 0 || !(alpha > 0.0 && alpha < n as f64) {
        return Err(constraint(format!("need 0 < alpha < n, got alpha={alpha}, n={n}")));
    }
    let (p, q) = (rational("p", p)?, rational("q", q)?);
    let (l, m, al) = (rational("lambda", lambda)?, rational("mu", mu)?, rational("alpha", alpha)?);
    let nn = Q::from_integer(n as i128);
    let one = Q::one();
    let a = al / nn;

    let sobolev = q.recip() == p.recip() - a;
    let balance = l / p == m / q;
    let admissible = p < nn * (one - l) / al;
    let scaling = a + (l - one) / p == (m - one) / q;
    let ordered = l / p <= m / q;
    let positive = p.recip() - a > Q::zero();

    let relations = alloc::vec![
        Relation { name: "sobolev", statement: "1/q = 1/p - alpha/n", holds: sobolev },
        Relation { name: "balance", statement: "lambda/p = mu/q", holds: balance },
        Relation { name: "admissible", statement: "p < n(1-lambda)/alpha", holds: admissible },
        Relation { name: "scaling", statement: "alpha/n + (lambda-1)/p = (mu-1)/q", holds: scaling },
        Relation { name: "ordered", statement: "lambda/p <= mu/q", holds: ordered },
        Relation { name: "subcritical", statement: "alpha/n < 1/p", holds: positive },
    ];
    Ok(PowerRelations {
        valid: sobolev && balance && admissible,
        relations,
        predicts: PowerPredictions {
            condition_1: admissible && scaling,
            condition_2: scaling && ordered,
            condition_3: sobolev && balance,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(r: &PowerRelations, name: &str) -> bool {
        r.relations.iter().find(|x| x.name == name).unwrap().holds
    }

    #[test]
    fn float_noise_rounds_to_fractions() {
        let q = 1.0 / (1.0 / 1.5 - 0.25);
        assert_eq!(rational("q", q).unwrap(), Q::new(12, 5));
        assert_eq!(rational("mu", 0.5 * q / 1.5).unwrap(), Q::new(4, 5));
        assert_eq!(rational("x", 3.0).unwrap(), Q::from_integer(3));
        assert_eq!(rational("x", 0.0).unwrap(), Q::zero());
    }

    #[test]
    fn classical_pair() {
        let r = power_case_relations(1.5, 2.4, 0.5, 0.8, 0.5, 2).unwrap();
        assert!(r.valid);
        assert!(r.relations.iter().all(|x| x.holds));
        assert!(r.predicts.condition_1 && r.predicts.condition_2 && r.predicts.condition_3);
    }

    #[test]
    fn perturbed_mu() {
        let r = power_case_relations(1.5, 2.4, 0.5, 0.7, 0.5, 2).unwrap();
        assert!(!holds(&r, "balance"));
        assert!(holds(&r, "sobolev"));
        assert!(!r.valid);
    }

    #[test]
    fn admissibility_boundary() {
        let r = power_case_relations(2.0, 4.0, 0.0, 0.0, 0.5, 1).unwrap();
        assert!(!holds(&r, "admissible"));
        assert!(!r.predicts.condition_1);
    }

    #[test]
    fn zero_lambda_pattern() {
        // λ = 0 with μ > 0: the first two conditions hold, the third does not
        let r = power_case_relations(4.0 / 3.0, 2.0, 0.0, 0.5, 0.5, 1).unwrap();
        assert!(r.predicts.condition_1 && r.predicts.condition_2 && !r.predicts.condition_3);
    }
}
