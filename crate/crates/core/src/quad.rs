//! One-dimensional quadrature, bracketing root search and golden-section
//! maximization.

use alloc::collections::BinaryHeap;
use alloc::format;
use core::cmp::Ordering;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

// Gauss–Kronrod 7/15 nodes and weights (QUADPACK).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances for the adaptive integrators.
#[derive(Debug, Clone, Copy)]
pub struct QuadTol {
    pub rel: f64,
    pub abs: f64,
    pub max_intervals: usize,
}

impl QuadTol {
    pub const fn rel(rel: f64) -> Self {
        QuadTol { rel, abs: 0.0, max_intervals: 4000 }
    }

    pub const fn with_abs(mut self, abs: f64) -> Self {
        self.abs = abs;
        self
    }
}

impl Default for QuadTol {
    fn default() -> Self {
        QuadTol::rel(1e-10)
    }
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Globally adaptive Gauss–Kronrod 7/15 integration of `f` over `[a, b]`.
///
/// Returns the estimate and the summed error estimate. Splits the interval
/// with the largest error until the total error meets the tolerance or the
/// interval budget runs out.
pub fn gauss_kronrod<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: QuadTol) -> (f64, f64) {
    if a == b {
        return (0.0, 0.0);
    }
    let (value, err) = gk15(&mut f, a, b);
    let mut total = value;
    let mut total_err = err;
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, err });
    while total_err > tol.abs.max(tol.rel * total.abs()) && heap.len() < tol.max_intervals {
        let seg = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            heap.push(seg);
            break;
        }
        let (v1, e1) = gk15(&mut f, seg.a, mid);
        let (v2, e2) = gk15(&mut f, mid, seg.b);
        total += v1 + v2 - seg.value;
        total_err += e1 + e2 - seg.err;
        heap.push(Segment { a: seg.a, b: mid, value: v1, err: e1 });
        heap.push(Segment { a: mid, b: seg.b, value: v2, err: e2 });
    }
    // re-sum to shed accumulated cancellation in the running totals
    let mut sum = 0.0;
    let mut esum = 0.0;
    let mut segs: alloc::vec::Vec<Segment> = heap.into_vec();
    segs.sort_by(|x, y| x.a.total_cmp(&y.a));
    for s in &segs {
        sum += s.value;
        esum += s.err;
    }
    (sum, esum)
}

/// Integrates over consecutive breakpoints `points[0] < points[1] < ...`.
pub fn gauss_kronrod_split<F: FnMut(f64) -> f64>(mut f: F, points: &[f64], tol: QuadTol) -> f64 {
    let mut total = 0.0;
    for w in points.windows(2) {
        if w[1] > w[0] {
            total += gauss_kronrod(&mut f, w[0], w[1], tol).0;
        }
    }
    total
}

const SIMPSON_MAX_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature with Richardson correction.
///
/// The local tolerance is derived from `rel` times the magnitude of the
/// first whole-interval estimate (floored by `abs`).
pub fn adaptive_simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, rel: f64, abs: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // a coarse 16-panel pass gives a better scale than a single panel
    let mut coarse = 0.0;
    let n = 16;
    let h = (b - a) / n as f64;
    for i in 0..n {
        let x0 = a + i as f64 * h;
        let x1 = x0 + h;
        let xm = 0.5 * (x0 + x1);
        coarse += h / 6.0 * (f(x0) + 4.0 * f(xm) + f(x1));
    }
    let scale = coarse.abs().max(whole.abs());
    let eps = abs.max(rel * scale);
    simpson_rec(&mut f, a, b, fa, fm, fb, whole, eps, SIMPSON_MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps || m <= a || m >= b {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
///
/// Stops when the bracket width falls below `rel_width` times the bracket
/// magnitude. `f` may return `-inf`. Returns `(argmax, max)`, including the
/// end points as candidates.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, rel_width: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (a.min(b), a.max(b));
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iter = 0;
    while (hi - lo) > rel_width * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE) && iter < 300 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        }
        iter += 1;
    }
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for x in [a, b] {
        let fx = f(x);
        if fx > best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Locates the switch point of a monotone predicate: `pred(lo)` is false,
/// `pred(hi)` is true. Returns the final upper end once `hi / lo - 1` (or
/// the absolute width when `lo == 0`) drops below `rel_tol`.
pub fn bisect_predicate<P: FnMut(f64) -> bool>(
    mut lo: f64,
    mut hi: f64,
    mut pred: P,
    rel_tol: f64,
    max_iter: usize,
) -> f64 {
    for _ in 0..max_iter {
        let mid = if lo > 0.0 && hi / lo > 4.0 { (lo * hi).sqrt() } else { 0.5 * (lo + hi) };
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= rel_tol * hi.abs() {
            break;
        }
    }
    hi
}

/// Log-log slope of `|h|` at the end `x0` of an interval of width `w`,
/// approached from the inside (`dir` is `+1` at a left end, `-1` at a right
/// end). `None` when the probe values are zero or not finite.
pub fn endpoint_slope<F: FnMut(f64) -> f64>(h: &mut F, x0: f64, w: f64, dir: f64) -> Option<f64> {
    // offsets stay a few ulps clear of the end on short intervals
    let d1 = (1e-12 * w).max(16.0 * f64::EPSILON * x0.abs());
    let d2 = (100.0 * d1).min(0.5 * w);
    let (x1, x2) = (x0 + dir * d1, x0 + dir * d2);
    let (d1, d2) = ((x1 - x0).abs(), (x2 - x0).abs());
    if !(d2 > d1 && d1 > 0.0) {
        return None;
    }
    let v1 = h(x1).abs();
    let v2 = h(x2).abs();
    if v1 > 0.0 && v2 > 0.0 && v1.is_finite() && v2.is_finite() {
        Some((v1 / v2).ln() / (d1 / d2).ln())
    } else {
        None
    }
}

/// Slopes below this are treated as endpoint singularities.
const SINGULAR_SLOPE: f64 = -1e-3;

/// Integrates `h` over `[a, b]` where either end may carry an algebraic
/// singularity `|x - end|^β`.
///
/// A probe estimates β at each end; singular ends are flattened by the
/// substitution `x - end = w τ^{1/(β+1)}`. Returns [`Error::Divergence`] when
/// `β <= -1`. At a nonzero end the mass within one ulp of it is lost, a
/// relative error of order `ulp^{β+1}`.
pub fn integrate_singular_ends<F: FnMut(f64) -> f64>(mut h: F, a: f64, b: f64, tol: QuadTol) -> Result<f64> {
    if !(b > a) {
        return Ok(0.0);
    }
    let w = b - a;
    let left = endpoint_slope(&mut h, a, w, 1.0).filter(|&s| s < SINGULAR_SLOPE);
    let right = endpoint_slope(&mut h, b, w, -1.0).filter(|&s| s < SINGULAR_SLOPE);
    for beta in [left, right].into_iter().flatten() {
        if beta <= -1.0 + 1e-3 {
            return Err(Error::Divergence(format!("integrand behaves like |x - x0|^{beta:.3} at an endpoint")));
        }
    }
    match (left, right) {
        (None, None) => Ok(gauss_kronrod(&mut h, a, b, tol).0),
        (Some(bl), None) => Ok(flattened(&mut h, a, w, bl, tol)),
        (None, Some(br)) => Ok(flattened(&mut h, b, -w, br, tol)),
        (Some(bl), Some(br)) => Ok(flattened(&mut h, a, 0.5 * w, bl, tol) + flattened(&mut h, b, -0.5 * w, br, tol)),
    }
}

/// `∫ h` over the interval from `x0` to `x0 + w` (`w` may be negative, the
/// result is the integral with positive orientation) after `x = x0 + w τ^{1/θ}`.
fn flattened<F: FnMut(f64) -> f64>(h: &mut F, x0: f64, w: f64, beta: f64, tol: QuadTol) -> f64 {
    // erring towards a stronger singularity leaves a harmless τ^{+small} factor
    let theta = (beta + 1.0 - 5e-3).max(1e-3);
    let k = 1.0 / theta;
    let g = |tau: f64| {
        if tau <= 0.0 {
            return 0.0;
        }
        let x = x0 + w * tau.powf(k);
        if x == x0 {
            // the offset is below one ulp of the endpoint
            return 0.0;
        }
        h(x) * w.abs() * k * tau.powf(k - 1.0)
    };
    gauss_kronrod(g, 0.0, 1.0, tol).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_polynomial_exact() {
        let (v, _) = gauss_kronrod(|x| x * x * x - 2.0 * x, 0.0, 3.0, QuadTol::default());
        assert!((v - (81.0 / 4.0 - 9.0)).abs() < 1e-12);
    }

    #[test]
    fn gk_sqrt_endpoint_singularity() {
        let (v, _) = gauss_kronrod(|x| 1.0 / x.sqrt(), 0.0, 1.0, QuadTol::rel(1e-10));
        assert!((v - 2.0).abs() < 1e-8, "{v}");
    }

    #[test]
    fn slope_probe_on_a_short_interval_away_from_zero() {
        // |x - 1.27|^{-1/2} on [1.27, 1.27 + 4e-5]: 1e-12 w is below one ulp of the end
        let (a, w) = (1.27, 4e-5);
        let s = endpoint_slope(&mut |x: f64| (x - a).abs().powf(-0.5), a, w, 1.0).unwrap();
        assert!((s + 0.5).abs() < 1e-6, "{s}");
        let v = integrate_singular_ends(|x: f64| (x - a).abs().powf(-0.5), a, a + w, QuadTol::rel(1e-10)).unwrap();
        // the mass within one ulp of the end is lost: (ulp / w)^{1/2} ~ 2.4e-6
        assert!((v - 2.0 * w.sqrt()).abs() < 1e-5 * 2.0 * w.sqrt(), "{v}");
    }

    #[test]
    fn simpson_smooth() {
        let v = adaptive_simpson(|x| x.exp(), 0.0, 1.0, 1e-12, 0.0);
        assert!((v - (core::f64::consts::E - 1.0)).abs() < 1e-11);
    }

    #[test]
    fn golden_finds_interior_and_edge() {
        let (x, fx) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6 && fx.abs() < 1e-12);
        let (x, _) = golden_max(|x| x, 0.0, 2.0, 1e-12);
        assert_eq!(x, 2.0);
        // -inf past a jump
        let (x, _) = golden_max(|x| if x > 1.0 { f64::NEG_INFINITY } else { x }, 0.5, 2.0, 1e-12);
        assert!((x - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bisect_locates_threshold() {
        let t = bisect_predicate(0.0, 10.0, |x| x * x > 2.0, 1e-14, 400);
        assert!((t - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn singular_ends_are_flattened() {
        let tol = QuadTol::rel(1e-12);
        let v = integrate_singular_ends(|x| x.powf(-0.7), 0.0, 1.0, tol).unwrap();
        assert!((v - 1.0 / 0.3).abs() < 1e-9, "{v}");
        // the last ulp below x = 1 carries ~2e-8 of the mass and cannot be sampled
        let v = integrate_singular_ends(|x| (1.0 - x).powf(-0.5) + x.powf(-0.5), 0.0, 1.0, tol).unwrap();
        assert!((v - 4.0).abs() < 5e-8, "{v}");
        assert!(matches!(integrate_singular_ends(|x| 1.0 / x, 0.0, 1.0, tol), Err(Error::Divergence(_))));
    }
}
