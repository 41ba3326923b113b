//! Singular tractions and the symmetric / skew-symmetric weight-function
//! matrices, in Fourier space and in physical space.
//!
//! The weight functions are traces of the traction-free singular solution
//! whose crack occupies x1 > 0. Two independent solutions exist (the complex
//! constant C of the singular traction set to 1 and to i); each operation
//! takes the mode selector. Fourier transforms use the convention
//! `f^(xi) = integral f(x) e^{i xi x} dx`, with `xi_-` powers evaluated on
//! the branch arg in (-pi, 0] and `xi_+` powers on arg in [0, pi).
//!
//! The transforms are exact two-power combinations
//! `P |xi|^{1/2 - i eps} + Q |xi|^{1/2 + i eps}` on each half-line; the
//! space-domain forms below are their exact inversions (real-valued, with
//! the symmetric kind supported on x1 > 0 and the skew kind adding a tail on
//! x1 < 0).

use crate::complex2::{c, cr, real_pow, C64, Mat2c, Vec2c, I};
use crate::stroh::BimaterialSystem;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Selector for the two independent singular solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// C = 1 (unit mode-I content of the singular traction).
    One,
    /// C = i (unit mode-II content).
    Two,
}

/// Which weight-function matrix to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WfKind {
    /// Jump of the singular displacement across the interface line.
    Symmetric,
    /// Average of the singular displacement across the interface line.
    Skew,
}

/// xi^s on the branch with arg(xi) in (-pi, 0].
pub fn xi_minus_pow(xi: f64, s: C64) -> C64 {
    if xi > 0.0 {
        real_pow(xi, s)
    } else {
        (s * c((-xi).ln(), -PI)).exp()
    }
}

/// xi^s on the branch with arg(xi) in [0, pi).
pub fn xi_plus_pow(xi: f64, s: C64) -> C64 {
    if xi > 0.0 {
        real_pow(xi, s)
    } else {
        (s * c((-xi).ln(), PI)).exp()
    }
}

/// Singular interface traction in physical space; supported on x1 < 0,
/// zero (by the support convention, including at x1 = 0) otherwise.
pub fn singular_traction_space(system: &BimaterialSystem, mode: Mode, x1: f64) -> [f64; 2] {
    if x1 >= 0.0 {
        return [0.0, 0.0];
    }
    let t = -x1;
    let eps = system.epsilon();
    let osc = real_pow(t, I * cr(eps));
    let occ = osc.conj();
    let pre = t.powf(-1.5) / (2.0 * (2.0 * PI).sqrt());
    let r12 = system.h_ratio();
    let v = match mode {
        Mode::One => Vec2c::new(I * (osc - occ), cr(r12) * (osc + occ)),
        Mode::Two => Vec2c::new(-(osc + occ), I * cr(r12) * (osc - occ)),
    };
    debug_assert!(v.im_max() < 1e-12 * v.norm_max().max(1.0));
    [pre * v.x.re, pre * v.y.re]
}

/// The two scalar blocks shared by all transform components.
fn sigma_blocks(system: &BimaterialSystem, xi: f64) -> (C64, C64) {
    let eps = system.epsilon();
    let p = cr(system.e0()) * xi_minus_pow(xi, -I * cr(eps)) / system.cplus() * c(-0.5, -eps);
    let m = xi_minus_pow(xi, I * cr(eps)) / (cr(system.e0()) * system.cminus()) * c(-0.5, eps);
    (p, m)
}

/// Fourier transform of the singular traction, the boundary value from the
/// lower half-plane (analytic for Im xi < 0).
pub fn singular_traction_transform(
    system: &BimaterialSystem,
    mode: Mode,
    xi: f64,
) -> Result<Vec2c> {
    if xi == 0.0 {
        return Err(Error::DomainError(
            "singular traction transform undefined at xi = 0".into(),
        ));
    }
    let (p, m) = sigma_blocks(system, xi);
    let eps = system.epsilon();
    let pre = xi_minus_pow(xi, cr(0.5)) / cr(1.0 + 4.0 * eps * eps);
    let r12 = cr(system.h_ratio());
    Ok(match mode {
        Mode::One => Vec2c::new(pre * (-p + m), pre * I * r12 * (p + m)),
        Mode::Two => Vec2c::new(pre * -I * (p + m), pre * r12 * (-p + m)),
    })
}

fn sym_weight_matrix(system: &BimaterialSystem, sign: f64) -> Mat2c {
    let off = system.beta() * system.sqrt_h() * sign;
    Mat2c::new(
        cr(system.h11()),
        c(0.0, off),
        c(0.0, -off),
        cr(system.h22()),
    )
}

fn skew_weight_matrix(system: &BimaterialSystem, sign: f64) -> Mat2c {
    let r12 = system.h_ratio();
    Mat2c::new(
        cr(system.delta1() * r12),
        c(0.0, -system.gamma() * sign),
        c(0.0, system.gamma() * sign),
        cr(system.delta2() / r12),
    )
    .scale(cr(system.sqrt_h() / 2.0))
}

/// Fourier transform of the requested weight-function column.
pub fn wf_transform(system: &BimaterialSystem, kind: WfKind, mode: Mode, xi: f64) -> Result<Vec2c> {
    if xi == 0.0 {
        return Err(Error::DomainError(
            "weight-function transform undefined at xi = 0".into(),
        ));
    }
    let sigma = singular_traction_transform(system, mode, xi)?;
    let sign = if xi > 0.0 { 1.0 } else { -1.0 };
    let (w, denom) = match kind {
        WfKind::Symmetric => (sym_weight_matrix(system, sign), xi.abs()),
        WfKind::Skew => (skew_weight_matrix(system, sign), xi.abs()),
    };
    Ok(w.mul_vec(&sigma).scale(cr(-1.0 / denom)))
}

/// Skew transform through the decomposition
/// `<U^> = A [U^]+ + (i/xi) B Sigma^-`; must agree with the direct
/// evaluation, which the property suite checks.
pub fn wf_skew_transform_decomposed(
    system: &BimaterialSystem,
    mode: Mode,
    xi: f64,
) -> Result<Vec2c> {
    let u = wf_transform(system, WfKind::Symmetric, mode, xi)?;
    let sigma = singular_traction_transform(system, mode, xi)?;
    let a = system.cal_a();
    let b = system.cal_b();
    let f = I / cr(xi);
    Ok(Vec2c::new(
        cr(a[0]) * u.x + f * b.m12 * sigma.y,
        cr(a[1]) * u.y + f * b.m21 * sigma.x,
    ))
}

/// General anisotropic weight-function transforms from the surface matrices
/// alone: works for any bonded pair, orthotropic or not.
///
/// Returns ([U^], <U^>) given the two Hermitian Y matrices and the
/// transformed singular traction.
pub fn general_wf_transforms(
    y1: &Mat2c,
    y2: &Mat2c,
    sigma_hat: &Vec2c,
    xi: f64,
) -> Result<(Vec2c, Vec2c)> {
    if xi == 0.0 {
        return Err(Error::DomainError(
            "general transforms undefined at xi = 0".into(),
        ));
    }
    for y in [y1, y2] {
        let defect = y.hermitian_defect();
        if defect > 1e-10 * y.norm_max().max(1.0) {
            return Err(Error::HermiticityViolation { defect });
        }
    }
    let sign = if xi > 0.0 { 1.0 } else { -1.0 };
    let isign = c(0.0, sign);
    let jump_m = y1
        .sub(y2)
        .im_part()
        .scale(isign)
        .sub(&y1.add(y2).re_part());
    let avg_m = y1
        .add(y2)
        .im_part()
        .scale(isign)
        .sub(&y1.sub(y2).re_part());
    Ok((
        jump_m.mul_vec(sigma_hat).scale(cr(1.0 / xi.abs())),
        avg_m.mul_vec(sigma_hat).scale(cr(0.5 / xi.abs())),
    ))
}

/// Physical-space weight functions; exact inversions of [`wf_transform`].
///
/// The symmetric kind vanishes identically for x1 < 0; the skew kind equals
/// A [U](x1) for x1 > 0 and has the B-driven tail for x1 < 0. Both return
/// zero at exactly x1 = 0 by convention.
pub fn wf_space(system: &BimaterialSystem, kind: WfKind, mode: Mode, x1: f64) -> [f64; 2] {
    if x1 == 0.0 {
        return [0.0, 0.0];
    }
    let eps = system.epsilon();
    let h11 = system.h11();
    let sqh = system.sqrt_h();
    if x1 > 0.0 {
        // E+- = (1/2 -+ i eps) x^{-+ i eps}
        let ep = c(0.5, -eps) * real_pow(x1, -I * cr(eps));
        let em = ep.conj();
        let d = cr(x1.powf(-0.5) / ((2.0 * PI).sqrt() * (1.0 + 4.0 * eps * eps)))
            / (system.cplus() * system.cminus());
        let jump = match mode {
            Mode::One => Vec2c::new(cr(h11) * d * (ep - em), I * cr(sqh) * d * (ep + em)),
            Mode::Two => Vec2c::new(-I * cr(h11) * d * (ep + em), cr(sqh) * d * (ep - em)),
        };
        let v = match kind {
            WfKind::Symmetric => jump,
            WfKind::Skew => {
                let a = system.cal_a();
                Vec2c::new(cr(a[0]) * jump.x, cr(a[1]) * jump.y)
            }
        };
        debug_assert!(v.im_max() < 1e-12 * v.norm_max().max(1.0));
        [v.x.re, v.y.re]
    } else {
        match kind {
            WfKind::Symmetric => [0.0, 0.0],
            WfKind::Skew => {
                let t = -x1;
                let ep = c(0.5, -eps) * real_pow(t, -I * cr(eps));
                let em = ep.conj();
                let f = cr(t.powf(-0.5) / ((2.0 * PI).sqrt() * (1.0 + 4.0 * eps * eps)));
                let g1 = system.gamma() + system.beta() * system.delta1();
                let g2 = system.gamma() + system.beta() * system.delta2();
                let v = match mode {
                    Mode::One => Vec2c::new(
                        cr(h11 * g1) * f * (ep + em),
                        I * cr(sqh * g2) * f * (ep - em),
                    ),
                    Mode::Two => Vec2c::new(
                        -I * cr(h11 * g1) * f * (ep - em),
                        cr(sqh * g2) * f * (ep + em),
                    ),
                };
                debug_assert!(v.im_max() < 1e-12 * v.norm_max().max(1.0));
                [v.x.re, v.y.re]
            }
        }
    }
}

/// Exact power-law structure of a transform on one half-line:
/// value(xi) = p |xi|^{-1/2 - i eps} + q |xi|^{-1/2 + i eps} componentwise.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PowerPair {
    /// Coefficient vector on |xi|^{-1/2 - i eps}.
    pub p: Vec2c,
    /// Coefficient vector on |xi|^{-1/2 + i eps}.
    pub q: Vec2c,
}

/// Power coefficients of Sigma^(xi) on one half-line, where
/// Sigma^ = p_dir |xi|^{1/2 - i eps} + q_dir |xi|^{1/2 + i eps}.
fn sigma_power_coeffs(system: &BimaterialSystem, mode: Mode, positive: bool) -> (Vec2c, Vec2c) {
    let eps = system.epsilon();
    let denom = 1.0 + 4.0 * eps * eps;
    let cp = cr(system.e0()) / system.cplus() * c(-0.5, -eps) / cr(denom);
    let cm = cr(1.0) / (cr(system.e0()) * system.cminus()) * c(-0.5, eps) / cr(denom);
    let r12 = cr(system.h_ratio());
    let (dir_p, dir_q) = match mode {
        Mode::One => (Vec2c::new(-cp, I * r12 * cp), Vec2c::new(cm, I * r12 * cm)),
        Mode::Two => (
            Vec2c::new(-I * cp, -r12 * cp),
            Vec2c::new(-I * cm, r12 * cm),
        ),
    };
    if positive {
        (dir_p, dir_q)
    } else {
        // xi_-^s branch factors for xi < 0: e^{-i pi (1/2 -+ i eps)}
        let br_p = c(0.0, -1.0) * cr((-PI * eps).exp());
        let br_q = c(0.0, -1.0) * cr((PI * eps).exp());
        (dir_p.scale(br_p), dir_q.scale(br_q))
    }
}

/// Exact power structure of the requested weight-function transform on one
/// half-line. Used for analytic head/tail treatment in oscillatory
/// integrals.
pub(crate) fn transform_power_coeffs(
    system: &BimaterialSystem,
    kind: WfKind,
    mode: Mode,
    positive: bool,
) -> PowerPair {
    let (sp, sq) = sigma_power_coeffs(system, mode, positive);
    let sign = if positive { 1.0 } else { -1.0 };
    let w = match kind {
        WfKind::Symmetric => sym_weight_matrix(system, sign),
        WfKind::Skew => skew_weight_matrix(system, sign),
    };
    PowerPair {
        p: w.mul_vec(&sp).scale(cr(-1.0)),
        q: w.mul_vec(&sq).scale(cr(-1.0)),
    }
}

/// Exact power structure of the space-domain weight functions:
/// on x1 > 0, value = p x^{-1/2 - i eps} + q x^{-1/2 + i eps}; for the skew
/// kind on x1 < 0 the same with t = -x1.
pub(crate) fn space_power_coeffs(
    system: &BimaterialSystem,
    kind: WfKind,
    mode: Mode,
    positive: bool,
) -> PowerPair {
    let eps = system.epsilon();
    let h11 = cr(system.h11());
    let sqh = cr(system.sqrt_h());
    let ep = c(0.5, -eps);
    let em = c(0.5, eps);
    if positive {
        let d = cr(1.0 / ((2.0 * PI).sqrt() * (1.0 + 4.0 * eps * eps)))
            / (system.cplus() * system.cminus());
        let pair = match mode {
            Mode::One => PowerPair {
                p: Vec2c::new(h11 * d * ep, I * sqh * d * ep),
                q: Vec2c::new(-h11 * d * em, I * sqh * d * em),
            },
            Mode::Two => PowerPair {
                p: Vec2c::new(-I * h11 * d * ep, sqh * d * ep),
                q: Vec2c::new(-I * h11 * d * em, -sqh * d * em),
            },
        };
        match kind {
            WfKind::Symmetric => pair,
            WfKind::Skew => {
                let a = system.cal_a();
                PowerPair {
                    p: Vec2c::new(cr(a[0]) * pair.p.x, cr(a[1]) * pair.p.y),
                    q: Vec2c::new(cr(a[0]) * pair.q.x, cr(a[1]) * pair.q.y),
                }
            }
        }
    } else {
        match kind {
            WfKind::Symmetric => PowerPair {
                p: Vec2c::zero(),
                q: Vec2c::zero(),
            },
            WfKind::Skew => {
                let f = cr(1.0 / ((2.0 * PI).sqrt() * (1.0 + 4.0 * eps * eps)));
                let g1 = cr(system.gamma() + system.beta() * system.delta1());
                let g2 = cr(system.gamma() + system.beta() * system.delta2());
                match mode {
                    Mode::One => PowerPair {
                        p: Vec2c::new(h11 * g1 * f * ep, I * sqh * g2 * f * ep),
                        q: Vec2c::new(h11 * g1 * f * em, -I * sqh * g2 * f * em),
                    },
                    Mode::Two => PowerPair {
                        p: Vec2c::new(-I * h11 * g1 * f * ep, sqh * g2 * f * ep),
                        q: Vec2c::new(I * h11 * g1 * f * em, sqh * g2 * f * em),
                    },
                }
            }
        }
    }
}
