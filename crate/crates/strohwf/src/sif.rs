//! Complex stress intensity factors for self-balanced crack-face loadings.
//!
//! Two routes are provided. The closed route evaluates the space-domain
//! weight functions at the force locations (exact for point forces; the
//! three-point configuration additionally has explicit formulas). The
//! quadrature route integrates the Betti identity
//!
//! ```text
//! (K, conj K) = (1/(2 pi i)) M1^{-1} *
//!     integral { [U^]^T R <p^> + <U^>^T R [p^] } d eta,   R = diag(-1, 1)
//! ```
//!
//! over the real line, exercising the Fourier-space weight functions; the
//! two must agree, which is the engine's primary acceptance check. The
//! integrand decays like |eta|^{-1/2} and is conditionally convergent, so
//! the quadrature splits each point-force contribution into an analytic
//! head near eta = 0, an adaptive middle, and an analytic
//! |eta|^{-1/2 -+ i eps} e^{-i eta d} tail.

use crate::complex2::{c, cr, real_pow, C64, Vec2c, I};
use crate::quadrature::{adaptive_gk, power_head_series, power_tail_series};
use crate::stroh::{BimaterialSystem, ComplexSIF};
use crate::weights::{transform_power_coeffs, wf_transform, wf_space, Mode, WfKind};
use crate::{Error, Result};
use std::f64::consts::PI;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const BALANCE_TOL: f64 = 1e-12;

/// A point force applied on a crack face at x1 < 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointForce {
    pub x1: f64,
    pub force: [f64; 2],
}

impl PointForce {
    pub fn new(x1: f64, force: [f64; 2]) -> Self {
        Self { x1, force }
    }
}

/// Point forces on the upper and lower crack faces.
///
/// Forces are face tractions: the same vector on both faces is a
/// skew-symmetric (same-direction) load, opposite vectors pull the faces
/// apart. Self-balance requires the jump resultant `sum_up f - sum_lo f`
/// and its moment about the tip to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct PointForceLoading {
    upper: Vec<PointForce>,
    lower: Vec<PointForce>,
}

impl PointForceLoading {
    pub fn new(upper: Vec<PointForce>, lower: Vec<PointForce>) -> Result<Self> {
        let mut scale: f64 = 0.0;
        for p in upper.iter().chain(lower.iter()) {
            if !(p.x1 < 0.0) {
                return Err(Error::DomainError(format!(
                    "point forces must sit behind the tip (x1 < 0), got x1 = {}",
                    p.x1
                )));
            }
            scale = scale
                .max(p.force[0].abs())
                .max(p.force[1].abs())
                .max(p.x1.abs());
        }
        let mut jump = [0.0f64; 2];
        let mut moment = 0.0f64;
        for p in &upper {
            jump[0] += p.force[0];
            jump[1] += p.force[1];
            moment += p.x1 * p.force[1];
        }
        for p in &lower {
            jump[0] -= p.force[0];
            jump[1] -= p.force[1];
            moment -= p.x1 * p.force[1];
        }
        let tol = BALANCE_TOL * scale.max(1.0);
        if jump[0].abs() > tol || jump[1].abs() > tol {
            return Err(Error::UnbalancedLoading(format!(
                "resultant jump force ({}, {})",
                jump[0], jump[1]
            )));
        }
        if moment.abs() > BALANCE_TOL * scale.max(1.0) * scale.max(1.0) {
            return Err(Error::UnbalancedLoading(format!(
                "resultant jump moment {moment}"
            )));
        }
        Ok(Self { upper, lower })
    }

    /// The paper's worked example: force F on the upper face at distance a
    /// behind the tip, balanced by two forces F/2 on the lower face at
    /// distances a -+ b. Normal (component-2) forces.
    pub fn three_point(f: f64, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !(0.0 <= b && b < a) {
            return Err(Error::DomainError(format!(
                "three-point loading requires a > 0 and 0 <= b < a, got a = {a}, b = {b}"
            )));
        }
        Self::new(
            vec![PointForce::new(-a, [0.0, -f])],
            vec![
                PointForce::new(-(a + b), [0.0, -f / 2.0]),
                PointForce::new(-(a - b), [0.0, -f / 2.0]),
            ],
        )
    }

    pub fn upper(&self) -> &[PointForce] {
        &self.upper
    }
    pub fn lower(&self) -> &[PointForce] {
        &self.lower
    }

    /// Scales every force, preserving balance.
    pub fn scaled(&self, s: f64) -> Self {
        let scale = |v: &[PointForce]| {
            v.iter()
                .map(|p| PointForce::new(p.x1, [p.force[0] * s, p.force[1] * s]))
                .collect()
        };
        Self {
            upper: scale(&self.upper),
            lower: scale(&self.lower),
        }
    }

    /// Per-force decomposition into (distance behind tip, symmetric weight,
    /// skew weight): <p> collects f/2 from either face, [p] collects +f from
    /// the upper face and -f from the lower one.
    fn decomposed(&self) -> Vec<(f64, Vec2c, Vec2c)> {
        let mut out = Vec::with_capacity(self.upper.len() + self.lower.len());
        for (list, skew_sign) in [(&self.upper, 1.0), (&self.lower, -1.0)] {
            for p in list.iter() {
                let f = Vec2c::new(cr(p.force[0]), cr(p.force[1]));
                out.push((-p.x1, f.scale(cr(0.5)), f.scale(cr(skew_sign))));
            }
        }
        out
    }
}

/// Fourier transforms (<p^>, [p^]) of the loading decomposition at xi.
pub fn load_transforms(loading: &PointForceLoading, xi: f64) -> (Vec2c, Vec2c) {
    let mut avg = Vec2c::zero();
    let mut jump = Vec2c::zero();
    for (d, ws, wa) in loading.decomposed() {
        let phase = c(0.0, -xi * d).exp();
        avg = avg.add(&ws.scale(phase));
        jump = jump.add(&wa.scale(phase));
    }
    (avg, jump)
}

/// How a stress intensity factor was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SifMethod {
    ClosedForm,
    BettiQuadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureDiagnostics {
    pub estimated_error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SifResult {
    pub k: ComplexSIF,
    pub method: SifMethod,
    pub diagnostics: Option<QuadratureDiagnostics>,
}

/// R = diag(-1, 1) applied through a dot product: u . R v.
fn dot_r(u: &Vec2c, v: &Vec2c) -> C64 {
    -u.x * v.x + u.y * v.y
}

fn kvec_to_k(system: &BimaterialSystem, integral: &Vec2c) -> Result<C64> {
    let m1 = system.m1_matrix()?;
    let inv = m1.inverse().ok_or(Error::SingularM1 {
        det: m1.det().norm(),
    })?;
    let kvec = inv.mul_vec(integral);
    let k = kvec.x;
    let mismatch = (kvec.y - kvec.x.conj()).norm();
    if mismatch > 1e-8 * k.norm().max(1e-300) {
        return Err(Error::QuadratureNonConvergence {
            estimated_error: mismatch,
            tolerance: 1e-8 * k.norm(),
        });
    }
    Ok(k)
}

/// Closed-route stress intensity factor for an arbitrary point-force
/// loading: the Betti integral collapses to weight-function values at the
/// force distances,
///
/// ```text
/// (K, conj K) = (1/i) M1^{-1} sum_j { [U]^T(d_j) R <f>_j + <U>^T(d_j) R [f]_j }.
/// ```
pub fn sif_point_closed(system: &BimaterialSystem, loading: &PointForceLoading) -> Result<SifResult> {
    let mut vs = Vec2c::zero();
    let mut va = Vec2c::zero();
    for (d, ws, wa) in loading.decomposed() {
        for (slot, mode) in [Mode::One, Mode::Two].into_iter().enumerate() {
            let jump = wf_space(system, WfKind::Symmetric, mode, d);
            let avg = wf_space(system, WfKind::Skew, mode, d);
            let jump = Vec2c::new(cr(jump[0]), cr(jump[1]));
            let avg = Vec2c::new(cr(avg[0]), cr(avg[1]));
            let contrib_s = dot_r(&jump, &ws);
            let contrib_a = dot_r(&avg, &wa);
            if slot == 0 {
                vs.x += contrib_s;
                va.x += contrib_a;
            } else {
                vs.y += contrib_s;
                va.y += contrib_a;
            }
        }
    }
    let ks = kvec_to_k(system, &vs.scale(-I))?; // 1/i = -i
    let ka = kvec_to_k(system, &va.scale(-I)).or_else(|e| {
        // an identically-zero skew integral has no conjugate structure to check
        if va.norm_max() < 1e-300 {
            Ok(C64::ZERO)
        } else {
            Err(e)
        }
    })?;
    Ok(SifResult {
        k: ComplexSIF::new(ks, ka),
        method: SifMethod::ClosedForm,
        diagnostics: None,
    })
}

/// Relative tolerance targeted by [`sif_betti`].
pub const BETTI_DEFAULT_REL_TOL: f64 = 1e-10;

/// Stress intensity factor through quadrature of the Betti identity in
/// Fourier space.
pub fn sif_betti(system: &BimaterialSystem, loading: &PointForceLoading) -> Result<SifResult> {
    sif_betti_with_tol(system, loading, BETTI_DEFAULT_REL_TOL)
}

/// [`sif_betti`] with an explicit relative tolerance on K.
pub fn sif_betti_with_tol(
    system: &BimaterialSystem,
    loading: &PointForceLoading,
    rel_tol: f64,
) -> Result<SifResult> {
    let eps = system.epsilon();
    let mut is = Vec2c::zero();
    let mut ia = Vec2c::zero();
    let mut err_total = 0.0f64;
    let mut evals = 0usize;

    for (d, ws, wa) in loading.decomposed() {
        let eta0 = (2.0 / d).min(1.0);
        let big_l = (200.0 / d).max(40.0).max(2.0 * eta0);
        for (kind, weight, acc) in [
            (WfKind::Symmetric, &ws, &mut is),
            (WfKind::Skew, &wa, &mut ia),
        ] {
            if weight.norm_max() == 0.0 {
                continue;
            }
            for (slot, mode) in [Mode::One, Mode::Two].into_iter().enumerate() {
                let mut total = C64::ZERO;
                // analytic heads and tails from the exact power structure
                for positive in [true, false] {
                    let pair = transform_power_coeffs(system, kind, mode, positive);
                    let cp = dot_r(&pair.p, weight);
                    let cq = dot_r(&pair.q, weight);
                    // on the negative half-line eta = -u the phase flips sign
                    let w_freq = if positive { -d } else { d };
                    total += cp * power_head_series(c(0.5, eps), w_freq, eta0)
                        + cq * power_head_series(c(0.5, -eps), w_freq, eta0);
                    let (tp, ep) = power_tail_series(c(0.5, eps), w_freq, big_l);
                    let (tq, eq) = power_tail_series(c(0.5, -eps), w_freq, big_l);
                    total += cp * tp + cq * tq;
                    err_total += ep * cp.norm() + eq * cq.norm();
                }
                // adaptive middle on both half-lines through the transforms
                let scale = weight.norm_max();
                let abs_tol = rel_tol * scale * 0.05;
                for (lo, hi) in [(eta0, big_l), (-big_l, -eta0)] {
                    let r = adaptive_gk(
                        |eta| {
                            let u = wf_transform(system, kind, mode, eta)
                                .expect("eta != 0 inside quadrature");
                            dot_r(&u, weight) * c(0.0, -eta * d).exp()
                        },
                        lo,
                        hi,
                        abs_tol,
                        4000,
                    );
                    total += r.value;
                    err_total += r.abs_error;
                    evals += r.evaluations;
                }
                if slot == 0 {
                    acc.x += total;
                } else {
                    acc.y += total;
                }
            }
        }
    }

    let pre = cr(1.0) / (cr(2.0 * PI) * I);
    let ks = kvec_to_k(system, &is.scale(pre))?;
    let ka = if ia.norm_max() < 1e-300 {
        C64::ZERO
    } else {
        kvec_to_k(system, &ia.scale(pre))?
    };
    let k = ks + ka;

    let m1_inv_norm = system
        .m1_matrix()?
        .inverse()
        .map(|m| m.norm_max())
        .unwrap_or(f64::INFINITY);
    let estimated_error = err_total * m1_inv_norm / (2.0 * PI);
    let tolerance = rel_tol * k.norm().max(1e-300) * 100.0;
    if estimated_error > tolerance {
        return Err(Error::QuadratureNonConvergence {
            estimated_error,
            tolerance,
        });
    }
    Ok(SifResult {
        k: ComplexSIF::new(ks, ka),
        method: SifMethod::BettiQuadrature,
        diagnostics: Some(QuadratureDiagnostics {
            estimated_error,
            evaluations: evals,
        }),
    })
}

/// Closed-form stress intensity factor for the three-point loading.
///
/// With r = b/a and s = -1/2 - i eps,
///
/// ```text
/// K^S = (e0^2 / (1 - beta))    F sqrt(H22/H11) sqrt(2/pi) a^s
///       { 1/2 + (1/4)(1-r)^s + (1/4)(1+r)^s }
/// K^A = (e0^2 delta2 / (1 - beta)) F sqrt(H22/H11) sqrt(2/pi) a^s
///       { 1/2 - (1/4)(1-r)^s - (1/4)(1+r)^s }
/// ```
///
/// The K^A coefficient is delta2/(1-beta): the skew-symmetric weight
/// function meets point forces only through its A [U] branch, so gamma
/// drops out of the stress intensity factor (and K^A vanishes for identical
/// materials, as it must). This is confirmed against the Betti quadrature
/// by the acceptance suite.
pub fn sif_three_point_closed(
    system: &BimaterialSystem,
    f: f64,
    a: f64,
    b: f64,
) -> Result<SifResult> {
    if !(a > 0.0) || !(0.0 <= b && b < a) {
        return Err(Error::DomainError(format!(
            "three-point closed form requires a > 0 and 0 <= b < a, got a = {a}, b = {b}"
        )));
    }
    let eps = system.epsilon();
    let s = c(-0.5, -eps);
    let r = b / a;
    let e02 = system.e0() * system.e0();
    let common = cr(e02 / (1.0 - system.beta()) * f / system.h_ratio() * (2.0 / PI).sqrt())
        * real_pow(a, s);
    let half_sum = cr(0.25) * (real_pow(1.0 - r, s) + real_pow(1.0 + r, s));
    let ks = common * (cr(0.5) + half_sum);
    let ka = common * cr(system.delta2()) * (cr(0.5) - half_sum);
    Ok(SifResult {
        k: ComplexSIF::new(ks, ka),
        method: SifMethod::ClosedForm,
        diagnostics: None,
    })
}

/// One row of a normalized three-point sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub b_over_a: f64,
    pub beta: f64,
    /// K^S a^{1/2 + i eps} / F (the full a-power stripped; equals the value
    /// at unit force and unit distance).
    pub ks: C64,
    /// K^A normalized the same way.
    pub ka: C64,
    /// Re K^A / Re K^S.
    pub ratio: f64,
}

fn sweep_row(system: &BimaterialSystem, beta: f64, r: f64) -> Result<SweepRow> {
    let sys = system.with_beta(beta)?;
    if !(0.0 <= r && r < 1.0) {
        return Err(Error::DomainError(format!(
            "sweep grid values must lie in [0, 1), got {r}"
        )));
    }
    let res = sif_three_point_closed(&sys, 1.0, 1.0, r)?;
    let ratio = if res.k.ks.re != 0.0 {
        res.k.ka.re / res.k.ks.re
    } else {
        f64::NAN
    };
    Ok(SweepRow {
        b_over_a: r,
        beta,
        ks: res.k.ks,
        ka: res.k.ka,
        ratio,
    })
}

/// Normalized K^S, K^A and their mode-I ratio over a (beta, b/a) grid.
///
/// Rows are ordered beta-major in the order given, then by grid point; the
/// output is deterministic and identical whether or not the parallel
/// feature is enabled.
pub fn ratio_sweep(
    system: &BimaterialSystem,
    betas: &[f64],
    grid: &[f64],
) -> Result<Vec<SweepRow>> {
    let cells: Vec<(f64, f64)> = betas
        .iter()
        .flat_map(|&b| grid.iter().map(move |&r| (b, r)))
        .collect();
    #[cfg(feature = "parallel")]
    {
        cells
            .par_iter()
            .map(|&(b, r)| sweep_row(system, b, r))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cells
            .iter()
            .map(|&(b, r)| sweep_row(system, b, r))
            .collect()
    }
}

/// Sequential evaluation of the same sweep, kept callable under all
/// feature sets for benchmarking against the parallel path.
pub fn ratio_sweep_sequential(
    system: &BimaterialSystem,
    betas: &[f64],
    grid: &[f64],
) -> Result<Vec<SweepRow>> {
    betas
        .iter()
        .flat_map(|&b| grid.iter().map(move |&r| (b, r)))
        .map(|(b, r)| sweep_row(system, b, r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::material::OrthotropicMaterial;

    fn section5_system() -> BimaterialSystem {
        let alu = OrthotropicMaterial::from_anisotropy("alu", 1.0, 0.74, 0.5, 1.0).unwrap();
        let bor =
            OrthotropicMaterial::from_anisotropy_relaxed("bor", 1.0 / 14.3, 4.91, 2.0, 6.4)
                .unwrap();
        BimaterialSystem::new(&alu, &bor).unwrap()
    }

    #[test]
    fn loading_validation() {
        assert!(PointForceLoading::new(
            vec![PointForce::new(1.0, [0.0, -1.0])],
            vec![PointForce::new(-1.0, [0.0, -1.0])],
        )
        .is_err());
        assert!(matches!(
            PointForceLoading::new(vec![PointForce::new(-1.0, [0.0, -1.0])], vec![]),
            Err(Error::UnbalancedLoading(_))
        ));
        // unbalanced moment
        assert!(matches!(
            PointForceLoading::new(
                vec![PointForce::new(-1.0, [0.0, -1.0])],
                vec![PointForce::new(-2.0, [0.0, -1.0])],
            ),
            Err(Error::UnbalancedLoading(_))
        ));
        assert!(PointForceLoading::three_point(1.0, 1.0, 0.5).is_ok());
        assert!(PointForceLoading::three_point(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn load_transform_values() {
        // b = 0: both lower forces coincide with the upper one
        let l = PointForceLoading::three_point(1.0, 1.0, 0.0).unwrap();
        let (avg, jump) = load_transforms(&l, 0.9);
        let expect = -c(0.0, -0.9).exp();
        assert!((avg.y - expect).norm() < 1e-15);
        assert!(avg.x.norm() < 1e-15);
        assert!(jump.norm_max() < 1e-15);

        // F = 1, a = 1, b = 1/2
        let l = PointForceLoading::three_point(1.0, 1.0, 0.5).unwrap();
        for xi in [0.3, -2.0] {
            let (avg, _) = load_transforms(&l, xi);
            let expect = cr(-0.5) * c(0.0, -xi).exp()
                + cr(-0.25) * c(0.0, -1.5 * xi).exp()
                + cr(-0.25) * c(0.0, -0.5 * xi).exp();
            assert!((avg.y - expect).norm() < 1e-15);
        }

        // xi = 0: minus the total mean force; jump zero by balance
        let (avg, jump) = load_transforms(&l, 0.0);
        assert!((avg.y - cr(-1.0)).norm() < 1e-15);
        assert!(jump.norm_max() < 1e-15);
    }

    #[test]
    fn three_point_closed_structure() {
        let sys = section5_system();
        // b = 0: K^A exactly zero, K^S collapses
        let r = sif_three_point_closed(&sys, 2.0, 1.5, 0.0).unwrap();
        assert_eq!(r.k.ka, C64::ZERO);
        let eps = sys.epsilon();
        let expect = cr(sys.e0().powi(2) / (1.0 - sys.beta()) * 2.0 / sys.h_ratio()
            * (2.0 / PI).sqrt())
            * real_pow(1.5, c(-0.5, -eps));
        assert!((r.k.ks - expect).norm() < 1e-14 * expect.norm());
        assert!(sif_three_point_closed(&sys, 1.0, 0.0, 0.0).is_err());
        assert!(sif_three_point_closed(&sys, 1.0, 1.0, -0.1).is_err());
    }

    #[test]
    fn beta_zero_makes_k_real_and_matches_wedge_formula() {
        // identical isotropic-like materials: K^S = F sqrt(2/(pi a))
        let m = OrthotropicMaterial::from_anisotropy("iso", 1.0, 1.0, -0.3, 1.0).unwrap();
        let sys = BimaterialSystem::new(&m, &m).unwrap();
        let r = sif_three_point_closed(&sys, 1.0, 2.0, 1.0).unwrap();
        assert!(r.k.ks.im.abs() < 1e-15);
        assert!(r.k.ka.im.abs() < 1e-15);
        // identical materials: delta2 = 0 kills the skew part entirely
        assert_eq!(r.k.ka, C64::ZERO);
        let r0 = sif_three_point_closed(&sys, 1.0, 2.0, 0.0).unwrap();
        let expect = (2.0 / (PI * 2.0)).sqrt();
        assert!((r0.k.ks.re - expect).abs() < 1e-14);
    }

    #[test]
    fn closed_point_route_matches_three_point_formula() {
        let sys = section5_system();
        for (f, a, b) in [(1.0, 1.0, 0.0), (2.0, 1.3, 0.6), (0.7, 2.0, 1.9)] {
            let formula = sif_three_point_closed(&sys, f, a, b).unwrap();
            let loading = PointForceLoading::three_point(f, a, b).unwrap();
            let general = sif_point_closed(&sys, &loading).unwrap();
            assert!(
                (formula.k.ks - general.k.ks).norm() < 1e-12 * formula.k.ks.norm(),
                "KS mismatch at ({f},{a},{b})"
            );
            assert!(
                (formula.k.ka - general.k.ka).norm()
                    < 1e-12 * formula.k.ka.norm().max(formula.k.ks.norm() * 1e-10),
                "KA mismatch at ({f},{a},{b})"
            );
        }
    }

    #[test]
    fn betti_matches_closed_for_section5_pair() {
        let sys = section5_system();
        let loading = PointForceLoading::three_point(1.0, 1.0, 0.5).unwrap();
        let quad = sif_betti(&sys, &loading).unwrap();
        let closed = sif_point_closed(&sys, &loading).unwrap();
        let rel = (quad.k.k() - closed.k.k()).norm() / closed.k.k().norm();
        assert!(rel < 1e-9, "rel = {rel}");
        let d = quad.diagnostics.unwrap();
        assert!(d.evaluations > 0);
    }

    #[test]
    fn betti_symmetric_only_has_no_skew_part() {
        let sys = section5_system();
        let loading = PointForceLoading::three_point(1.0, 1.0, 0.0).unwrap();
        let quad = sif_betti(&sys, &loading).unwrap();
        assert!(quad.k.ka.norm() < 1e-10 * quad.k.ks.norm());
    }

    #[test]
    fn betti_is_linear_in_the_loading() {
        let sys = section5_system();
        let loading = PointForceLoading::three_point(1.0, 1.0, 0.4).unwrap();
        let k1 = sif_betti(&sys, &loading).unwrap();
        let k2 = sif_betti(&sys, &loading.scaled(2.0)).unwrap();
        assert!((k2.k.k() - cr(2.0) * k1.k.k()).norm() < 1e-12 * k1.k.k().norm());
    }

    #[test]
    fn shear_force_loading_through_both_routes() {
        let sys = section5_system();
        // skew-symmetric shear pair: same tangential force on both faces
        let loading = PointForceLoading::new(
            vec![PointForce::new(-1.0, [0.3, -1.0])],
            vec![
                PointForce::new(-0.5, [0.15, -0.5]),
                PointForce::new(-1.5, [0.15, -0.5]),
            ],
        )
        .unwrap();
        let quad = sif_betti(&sys, &loading).unwrap();
        let closed = sif_point_closed(&sys, &loading).unwrap();
        let rel = (quad.k.k() - closed.k.k()).norm() / closed.k.k().norm();
        assert!(rel < 1e-8, "rel = {rel}");
    }

    #[test]
    fn sweep_rows_are_deterministic_and_match_sequential() {
        let sys = section5_system();
        let betas = [-0.5, 0.0, 0.5];
        let grid = [0.0, 0.3, 0.9];
        let par = ratio_sweep(&sys, &betas, &grid).unwrap();
        let seq = ratio_sweep_sequential(&sys, &betas, &grid).unwrap();
        assert_eq!(par, seq);
        assert_eq!(par.len(), 9);
        assert_eq!(par[0].beta, -0.5);
        assert_eq!(par[0].b_over_a, 0.0);
        // b/a = 0 rows have zero skew part and ratio 0
        for row in par.iter().filter(|r| r.b_over_a == 0.0) {
            assert_eq!(row.ka, C64::ZERO);
            assert_eq!(row.ratio, 0.0);
        }
        // beta = 0 rows are real
        for row in par.iter().filter(|r| r.beta == 0.0) {
            assert!(row.ks.im.abs() < 1e-15);
            assert!(row.ka.im.abs() < 1e-15);
        }
    }

    #[test]
    fn sweep_rejects_bad_grid() {
        let sys = section5_system();
        assert!(ratio_sweep(&sys, &[0.0], &[1.0]).is_err());
        assert!(ratio_sweep(&sys, &[1.0], &[0.0]).is_err());
    }
}
