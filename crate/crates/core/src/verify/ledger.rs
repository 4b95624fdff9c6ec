//! Closed-form chain of constants behind the strong and weak boundedness
//! estimates for `I_α` between central Morrey–Orlicz spaces.

use alloc::format;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{constraint, Result};
use crate::geometry::unit_ball_volume;
use crate::potential::hedberg_constant;

use super::conditions::ConditionReport;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LedgerInputs {
    pub n: usize,
    pub alpha: f64,
    pub lambda: f64,
    pub mu: f64,
    /// Strong-type bound of the maximal operator.
    pub c0_strong: f64,
    /// Weak-type bound of the maximal operator.
    pub c0_weak: f64,
    pub c1: f64,
    pub c2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConstantLedger {
    pub inputs: LedgerInputs,
    pub c_h: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c3: f64,
    pub c7_weak: f64,
    pub c9_weak: f64,
    pub c3_weak: f64,
}

pub fn constant_ledger(inputs: LedgerInputs) -> Result<ConstantLedger> {
    let LedgerInputs { n, alpha, lambda, c0_strong, c0_weak, c1, c2, .. } = inputs;
    if n == 0 || !(alpha > 0.0 && alpha < n as f64) {
        return Err(constraint(format!("need 0 < alpha < n, got alpha={alpha}, n={n}")));
    }
    for (name, v) in [("C0", c0_strong), ("c0", c0_weak), ("C1", c1), ("C2", c2)] {
        if !(v >= 1.0) || !v.is_finite() {
            return Err(constraint(format!("{name} must be a finite value >= 1, got {v}")));
        }
    }
    let nf = n as f64;
    let vn = unit_ball_volume(n);
    let a = alpha / nf;
    let c_h = hedberg_constant(n, alpha);
    let c5 = c_h * 3f64.powf(alpha) * vn.powf(-a);
    // one exponent of two, so n = 1 lands on an exact power
    let c6 = ((2.0 * nf - alpha + 2.0) + (1.0 - a) * vn.log2()).exp2();
    let two_n = 2f64.powi(n as i32);
    let c7 = c1 * (4.0 * two_n * c0_strong * c5).max(c6);
    let c8 = 4f64.powf(lambda * nf) * 2.0 * two_n * vn.powf(1.0 - a) / (nf * core::f64::consts::LN_2);
    let c9 = vn.powf(-a) * c0_strong * c2 * c_h + c8 * (c1 + c2);
    let c3 = 2.0 * (2.0 * c7).max(c9);
    let c7_weak = c1 * (4.0 * two_n * c0_weak * c5).max(c6);
    let c9_weak = vn.powf(-a) * c0_weak * c2 * c_h + c8 * (c1 + c2);
    let c3_weak = 2.0 * (4.0 * c7_weak).max(2.0 * c9_weak);
    Ok(ConstantLedger { inputs, c_h, c5, c6, c7, c8, c9, c3, c7_weak, c9_weak, c3_weak })
}

/// Ledger fed by scanned constants; each scanned constant is raised to 1.
pub fn ledger_from_reports(
    cond1: &ConditionReport,
    cond2: &ConditionReport,
    c0_strong: f64,
    c0_weak: f64,
) -> Result<ConstantLedger> {
    let p = cond1.params;
    for r in [cond1, cond2] {
        if !r.passed() {
            return Err(constraint(format!("condition {} did not pass", r.condition_id)));
        }
    }
    constant_ledger(LedgerInputs {
        n: p.n,
        alpha: p.alpha,
        lambda: p.lambda,
        mu: p.mu,
        c0_strong,
        c0_weak,
        c1: cond1.best_constant.max(1.0),
        c2: cond2.best_constant.max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inputs(n: usize, alpha: f64, c0: f64, c1: f64, c2: f64) -> LedgerInputs {
        LedgerInputs { n, alpha, lambda: 0.0, mu: 0.0, c0_strong: c0, c0_weak: c0, c1, c2 }
    }

    #[test]
    fn one_dimensional_chain() {
        let l = constant_ledger(inputs(1, 0.5, 2.0, 4.0, 5.0)).unwrap();
        assert_eq!(l.c6, 16.0);
        assert!((l.c_h - 9.656_854_25).abs() < 1e-8);
        assert!((l.c5 - l.c_h * 3f64.sqrt() / 2f64.sqrt()).abs() < 1e-12);
        assert!((l.c5 - 11.827_18).abs() < 1e-5);
        assert!((l.c7 / 756.95 - 1.0).abs() < 1e-4, "{}", l.c7);
        assert!((l.c8 - 4.0 * 2f64.sqrt() / core::f64::consts::LN_2).abs() < 1e-12);
        assert!((l.c9 - 141.734).abs() < 1e-3, "{}", l.c9);
        assert!((l.c3 - 3027.8).abs() < 0.05, "{}", l.c3);
        assert_eq!(l.c3, 2.0 * (2.0 * l.c7).max(l.c9));
    }

    #[test]
    fn rejects_small_inputs() {
        assert!(constant_ledger(inputs(1, 0.5, 0.5, 1.0, 1.0)).is_err());
        assert!(constant_ledger(inputs(1, 1.5, 1.0, 1.0, 1.0)).is_err());
    }
}
