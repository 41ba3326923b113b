//! Numerical integration utilities for conditionally convergent oscillatory
//! integrals with power-law envelopes.
//!
//! The integrands of this crate behave like `t^{-a} e^{i w t}` with
//! `Re a = 1/2` (weight-function transforms) or `3/2` (singular tractions)
//! near endpoints. Plain panel quadrature cannot resolve the `t^{+- i eps}`
//! factor near t = 0 (it oscillates in log t), and truncation at a finite
//! upper limit diverges too slowly, so both endpoints get analytic
//! treatment:
//!
//! * [`power_head_series`] expands `e^{iwt}` and integrates the powers
//!   exactly on `[0, x0]` (also serving as the analytic continuation when
//!   `Re a > 1`, i.e. the finite-part value of a non-integrable endpoint);
//! * [`power_tail_series`] integrates `[L, inf)` by repeated integration by
//!   parts, accurate once `|w| L` is large;
//! * [`adaptive_gk`] (Gauss-Kronrod 15-7) covers the smooth middle.

use crate::complex2::{c, cr, real_pow, C64};

const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: C64,
    pub abs_error: f64,
    pub evaluations: usize,
}

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64, usize) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * cr(WGK[7]);
    let mut gauss = f_center * cr(WG[3]);
    for (i, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let fsum = f(center - dx) + f(center + dx);
        kronrod += fsum * cr(WGK[i]);
        if i % 2 == 1 {
            gauss += fsum * cr(WG[i / 2]);
        }
    }
    let value = kronrod * cr(half);
    let err = ((kronrod - gauss) * cr(half)).norm();
    // QUADPACK-style sharpening of the raw difference
    let scaled = if err > 0.0 {
        err.min(err * (200.0 * err / value.norm().max(f64::MIN_POSITIVE)).sqrt().min(1.0))
    } else {
        0.0
    };
    (value, scaled.max(err * 1e-3), 15)
}

/// Adaptive Gauss-Kronrod integration of a complex-valued function.
///
/// Splits the worst interval until the summed error estimate drops below
/// `abs_tol` or the interval budget is exhausted; the returned
/// `abs_error` is the final estimate either way.
pub fn adaptive_gk<F: Fn(f64) -> C64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> QuadResult {
    let (v, e, n) = gk15(&f, a, b);
    let mut intervals = vec![(a, b, v, e)];
    let mut evals = n;
    loop {
        let total_err: f64 = intervals.iter().map(|x| x.3).sum();
        if total_err <= abs_tol || intervals.len() >= max_intervals {
            let value = intervals.iter().fold(C64::ZERO, |acc, x| acc + x.2);
            return QuadResult {
                value,
                abs_error: total_err,
                evaluations: evals,
            };
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1, n1) = gk15(&f, lo, mid);
        let (v2, e2, n2) = gk15(&f, mid, hi);
        evals += n1 + n2;
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
    }
}

/// integral_0^x0 t^{-a} e^{i w t} dt by term-wise integration of the
/// exponential series; exact analytic continuation in `a` (finite-part
/// value when `Re a >= 1`). Requires |w| x0 small enough for fast
/// convergence; callers keep |w| x0 <= 2.
pub fn power_head_series(a: C64, w: f64, x0: f64) -> C64 {
    let iw = c(0.0, w);
    let mut coeff = cr(1.0); // (iw)^k / k!
    let mut acc = C64::ZERO;
    for k in 0..90 {
        let kf = k as f64;
        let expo = cr(kf + 1.0) - a;
        let term = coeff * real_pow(x0, expo) / expo;
        acc += term;
        coeff = coeff * iw / cr(kf + 1.0);
        if k > 3 && term.norm() < 1e-18 * acc.norm().max(1e-300) {
            break;
        }
    }
    acc
}

/// integral_L^inf t^{-a} e^{i w t} dt (w != 0) by repeated integration by
/// parts. Returns the value and a truncation bound (the magnitude of the
/// first omitted term). Accurate when |w| L >> |a|.
pub fn power_tail_series(a: C64, w: f64, big_l: f64) -> (C64, f64) {
    let iw = c(0.0, w);
    let phase = (iw * cr(big_l)).exp();
    let mut coeff = cr(1.0);
    let mut acc = C64::ZERO;
    let mut trunc = 0.0;
    for k in 0..60 {
        let term = coeff * (-real_pow(big_l, -(a + cr(k as f64))) * phase / iw);
        acc += term;
        coeff = coeff * (a + cr(k as f64)) / iw;
        trunc = (coeff * real_pow(big_l, -(a + cr(k as f64 + 1.0))) / iw).norm();
        if trunc < 1e-18 * acc.norm().max(1e-300) {
            trunc = 0.0;
            break;
        }
    }
    (acc, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gk_integrates_polynomial_exactly() {
        let r = adaptive_gk(|x| cr(x * x * x - 2.0 * x + 1.0), -1.0, 3.0, 1e-12, 100);
        // integral = [x^4/4 - x^2 + x] from -1 to 3
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert!((r.value.re - exact).abs() < 1e-12);
        assert!(r.value.im.abs() < 1e-14);
    }

    #[test]
    fn gk_oscillatory() {
        let r = adaptive_gk(|x| c(0.0, 40.0 * x).exp(), 0.0, 2.0, 1e-12, 2000);
        let exact = (c(0.0, 80.0).exp() - cr(1.0)) / c(0.0, 40.0);
        assert!((r.value - exact).norm() < 1e-11, "{:?}", r);
        assert!(r.abs_error < 1e-10);
    }

    #[test]
    fn head_series_matches_closed_form() {
        // integral_0^x0 t^{-1/2} e^{i w t} dt against erf-free reference:
        // compare with adaptive quadrature after u = sqrt(t) substitution
        let (a, w, x0) = (cr(0.5), 1.3, 1.0);
        let head = power_head_series(a, w, x0);
        let r = adaptive_gk(
            |u| c(0.0, w * u * u).exp() * cr(2.0),
            0.0,
            x0.sqrt(),
            1e-14,
            200,
        );
        assert!((head - r.value).norm() < 1e-13);
    }

    #[test]
    fn head_series_finite_part_recursion() {
        // the finite-part value obeys the exact recursion from integration
        // by parts: I(a) = x0^{1-a}/(1-a) e??  simpler: I(a) for Re a=3/2
        // relates to I(a-1): d/dx0 check instead. Verify against direct
        // series with complex a and the identity I'(x0) = x0^{-a} e^{i w x0}.
        let a = c(1.5, 0.2);
        let w = 0.9;
        let x0 = 1.1;
        let h = 1e-5;
        let deriv = (power_head_series(a, w, x0 + h) - power_head_series(a, w, x0 - h))
            / cr(2.0 * h);
        let expect = real_pow(x0, -a) * c(0.0, w * x0).exp();
        assert!((deriv - expect).norm() < 1e-9);
    }

    #[test]
    fn tail_series_against_fresnel() {
        // integral_0^inf t^{-1/2} e^{i t} dt = sqrt(pi) e^{i pi/4}
        let big_l = 150.0;
        let head = power_head_series(cr(0.5), 1.0, 1.0);
        let mid = adaptive_gk(
            |t| cr(t.powf(-0.5)) * c(0.0, t).exp(),
            1.0,
            big_l,
            1e-13,
            4000,
        );
        let (tail, trunc) = power_tail_series(cr(0.5), 1.0, big_l);
        let total = head + mid.value + tail;
        let exact = cr(PI.sqrt()) * c(0.0, PI / 4.0).exp();
        assert!(trunc < 1e-14);
        assert!((total - exact).norm() < 1e-11, "{total} vs {exact}");
    }

    #[test]
    fn tail_series_negative_frequency() {
        // conjugate symmetry: T(a, -w) = conj(T(conj a, w))
        let a = c(0.5, -0.17);
        let (t1, _) = power_tail_series(a, -2.0, 80.0);
        let (t2, _) = power_tail_series(a.conj(), 2.0, 80.0);
        assert!((t1 - t2.conj()).norm() < 1e-14);
    }
}
