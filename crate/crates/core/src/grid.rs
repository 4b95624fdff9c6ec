//! Log-spaced sampling grids.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// `count` points spaced uniformly in `ln` between `lo` and `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo && count >= 1);
    if count == 1 {
        return alloc::vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / (count - 1) as f64;
    (0..count)
        .map(|i| {
            if i == count - 1 {
                hi
            } else if i == 0 {
                lo
            } else {
                (a + step * i as f64).exp()
            }
        })
        .collect()
}

/// Default scan grid for condition checks: 64 points on [1e-6, 1e6].
pub fn default_scan_grid() -> Vec<f64> {
    log_grid(1e-6, 1e6, 64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_exact() {
        let g = log_grid(1e-3, 1e3, 129);
        assert_eq!(g.len(), 129);
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[128], 1e3);
        assert!((g[64] - 1.0).abs() < 1e-12);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
