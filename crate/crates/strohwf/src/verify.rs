//! The verification suite: every oracle and property check, shared by the
//! CLI `verify` command and the acceptance tests.
//!
//! Each check is a standalone function returning `Ok(())` or a failure
//! description with the measured worst case; [`run_all`] executes the whole
//! list. Randomized checks draw from a fixed-seed generator so runs are
//! reproducible everywhere.

use crate::complex2::{c, cr, real_pow, C64, Vec2c};
use crate::material::{qrt_eigensystem, stroh_eigenvalues, OrthotropicMaterial};
use crate::oracle::{default_xi_samples, equivalence_report};
use crate::quadrature::{adaptive_gk, power_head_series, power_tail_series};
use crate::sif::{sif_betti_with_tol, sif_three_point_closed, PointForceLoading};
use crate::special::gamma;
use crate::stroh::{stroh_data, y_from_ab, BimaterialSystem};
use crate::weights::{
    space_power_coeffs, wf_skew_transform_decomposed, wf_space, wf_transform, Mode, WfKind,
};
use std::f64::consts::PI;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Deterministic 64-bit generator (splitmix64), enough for drawing test
/// materials without adding a dependency to the library itself.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }
}

/// Draws a valid material away from the degenerate band |rho - 1| < 0.02.
pub fn random_material(rng: &mut Rng) -> OrthotropicMaterial {
    loop {
        let lambda = rng.range(-1.5, 1.5).exp();
        let theta = rng.range(-0.85, 0.85);
        let mut rho = theta + 0.05 + 4.0 * rng.uniform().powi(2);
        if (rho - 1.0).abs() < 0.02 {
            rho += 0.05;
        }
        let scale = rng.range(-0.7, 0.7).exp();
        if let Ok(m) = OrthotropicMaterial::from_anisotropy("rand", lambda, rho, theta, scale) {
            return m;
        }
    }
}

/// The three-point-example pair: aluminium-like upper material and the
/// boron-like lower one (whose published theta lies outside the
/// positive-definite range, hence the relaxed constructor).
pub fn section5_materials() -> (OrthotropicMaterial, OrthotropicMaterial) {
    let alu = OrthotropicMaterial::from_anisotropy("aluminium", 1.0, 0.74, 0.5, 1.0).unwrap();
    let bor = OrthotropicMaterial::from_anisotropy_relaxed("boron", 1.0 / 14.3, 4.91, 2.0, 6.4)
        .unwrap();
    (alu, bor)
}

pub fn section5_system() -> BimaterialSystem {
    let (alu, bor) = section5_materials();
    BimaterialSystem::new(&alu, &bor).unwrap()
}

fn map_reduce_max<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .map(|t| f(t))
            .reduce(|| 0.0, f64::max)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(|t| f(t)).fold(0.0, f64::max)
    }
}

/// Criterion 1: closed-form Y equals i A B^{-1} and is Hermitian, over 1000
/// random materials.
pub fn check_stroh_consistency() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0001);
    let mats: Vec<_> = (0..1000).map(|_| random_material(&mut rng)).collect();
    let worst = map_reduce_max(&mats, |m| {
        let d = stroh_data(m).expect("valid material");
        let y2 = y_from_ab(&d).expect("non-degenerate");
        let agree = d.y.sub(&y2).norm_max();
        let herm = d.y.hermitian_defect();
        agree.max(herm)
    });
    if worst < 1e-12 {
        Ok(())
    } else {
        Err(format!("worst Y defect {worst:.3e} exceeds 1e-12"))
    }
}

/// Module invariant: the numeric quadratic eigenproblem agrees with the
/// closed-form eigenvalues over 1000 random materials.
pub fn check_qrt_agreement() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0002);
    let mats: Vec<_> = (0..1000).map(|_| random_material(&mut rng)).collect();
    let worst = map_reduce_max(&mats, |m| {
        let ev = stroh_eigenvalues(m);
        let pairs = qrt_eigensystem(m).expect("non-degenerate");
        (pairs[0].0 - ev.mu1).norm().max((pairs[1].0 - ev.mu2).norm())
    });
    if worst < 1e-10 {
        Ok(())
    } else {
        Err(format!("worst eigenvalue gap {worst:.3e} exceeds 1e-10"))
    }
}

/// Criterion 2: interface eigenrelation over 1000 random valid pairs.
pub fn check_interface_eigenrelation() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0003);
    let pairs: Vec<_> = (0..1000)
        .map(|_| (random_material(&mut rng), random_material(&mut rng)))
        .collect();
    let worst = map_reduce_max(&pairs, |(m1, m2)| {
        let b = BimaterialSystem::new(m1, m2).expect("valid pair");
        assert!(b.beta().abs() < 1.0, "positive-definite H forces |beta| < 1");
        b.eigenrelation_residual()
    });
    if worst < 1e-12 {
        Ok(())
    } else {
        Err(format!("worst eigenrelation residual {worst:.3e} exceeds 1e-12"))
    }
}

/// Criterion 3: c+ c- = (i/2) cosh(pi eps) on a 41-point grid in
/// eps in [-0.2, 0.2], straight from the gamma kernel.
pub fn check_gamma_identity() -> Result<(), String> {
    let mut worst: f64 = 0.0;
    for k in 0..41 {
        let eps = -0.2 + 0.4 * k as f64 / 40.0;
        let half = cr(0.5);
        let cp = (cr(1.0) + c(0.0, 1.0)) * cr(PI.sqrt()) / (cr(2.0) * gamma(half + c(0.0, eps)));
        let cm = (cr(1.0) + c(0.0, 1.0)) * cr(PI.sqrt()) / (cr(2.0) * gamma(half - c(0.0, eps)));
        let defect = (cp * cm - c(0.0, 0.5 * (PI * eps).cosh())).norm();
        worst = worst.max(defect);
    }
    if worst < 1e-13 {
        Ok(())
    } else {
        Err(format!("worst gamma-identity defect {worst:.3e} exceeds 1e-13"))
    }
}

/// Criterion 4: ODE-oracle equivalence over the reference pair and 100
/// random pairs, 50 xi samples each.
pub fn check_oracle_equivalence() -> Result<(), String> {
    let xi = default_xi_samples();
    let (alu, bor) = section5_materials();
    let d = equivalence_report(&alu, &bor, &xi).map_err(|e| e.to_string())?;
    if d >= 1e-10 {
        return Err(format!("reference-pair discrepancy {d:.3e} exceeds 1e-10"));
    }
    let mut rng = Rng::new(0x5d0c_0004);
    let pairs: Vec<_> = (0..100)
        .map(|_| (random_material(&mut rng), random_material(&mut rng)))
        .collect();
    let worst = map_reduce_max(&pairs, |(m1, m2)| {
        equivalence_report(m1, m2, &xi).expect("valid pair")
    });
    if worst < 1e-10 {
        Ok(())
    } else {
        Err(format!("worst random-pair discrepancy {worst:.3e} exceeds 1e-10"))
    }
}

/// Numerical Fourier transform of the space-domain weight functions with
/// analytic treatment of the x^{-1/2 +- i eps} endpoints.
fn transform_from_space(
    system: &BimaterialSystem,
    kind: WfKind,
    mode: Mode,
    xi: f64,
) -> (Vec2c, f64) {
    let eps = system.epsilon();
    let x0 = (2.0 / xi.abs()).min(1.0);
    let big_l = (300.0 / xi.abs()).max(60.0);
    let mut err = 0.0f64;
    let mut total = Vec2c::zero();
    // sides: (positive axis, frequency +xi), for the skew kind also the
    // negative axis via t = -x (frequency -xi)
    let sides: &[bool] = match kind {
        WfKind::Symmetric => &[true],
        WfKind::Skew => &[true, false],
    };
    for &positive in sides {
        let pair = space_power_coeffs(system, kind, mode, positive);
        let w = if positive { xi } else { -xi };
        let ap = c(0.5, eps); // t^{-ap} = t^{-1/2 - i eps}
        let aq = c(0.5, -eps);
        let head_p = power_head_series(ap, w, x0);
        let head_q = power_head_series(aq, w, x0);
        let (tail_p, ep) = power_tail_series(ap, w, big_l);
        let (tail_q, eq) = power_tail_series(aq, w, big_l);
        err += ep * pair.p.norm_max() + eq * pair.q.norm_max();
        total = total
            .add(&pair.p.scale(head_p + tail_p))
            .add(&pair.q.scale(head_q + tail_q));
        let scale = pair.p.norm_max().max(pair.q.norm_max()).max(1e-300);
        for comp in 0..2 {
            let r = adaptive_gk(
                |t| {
                    let x = if positive { t } else { -t };
                    let u = wf_space(system, kind, mode, x);
                    cr(u[comp]) * c(0.0, w * t).exp()
                },
                x0,
                big_l,
                1e-11 * scale,
                3000,
            );
            err += r.abs_error;
            if comp == 0 {
                total.x += r.value;
            } else {
                total.y += r.value;
            }
        }
    }
    (total, err)
}

/// Criterion 5: the numeric transform of wf_space reproduces wf_transform
/// at xi in {+-0.5, +-2, +-8} to 1e-6 relative.
pub fn check_transform_round_trip() -> Result<(), String> {
    let sys = section5_system();
    let cases: Vec<(f64, WfKind, Mode)> = [0.5, -0.5, 2.0, -2.0, 8.0, -8.0]
        .into_iter()
        .flat_map(|xi| {
            [WfKind::Symmetric, WfKind::Skew]
                .into_iter()
                .flat_map(move |k| [Mode::One, Mode::Two].into_iter().map(move |m| (xi, k, m)))
        })
        .collect();
    let worst = map_reduce_max(&cases, |&(xi, kind, mode)| {
        let closed = wf_transform(&sys, kind, mode, xi).expect("xi != 0");
        let (num, _) = transform_from_space(&sys, kind, mode, xi);
        num.sub(&closed).norm_max() / closed.norm_max()
    });
    if worst < 1e-6 {
        Ok(())
    } else {
        Err(format!("worst round-trip error {worst:.3e} exceeds 1e-6"))
    }
}

/// The singular-traction transform against direct numerical Fourier
/// integration of its space form (finite-part head, oscillatory tail).
pub fn check_traction_transform_quadrature() -> Result<(), String> {
    use crate::weights::{singular_traction_space, singular_traction_transform};
    let sys = section5_system();
    let eps = sys.epsilon();
    let mut worst: f64 = 0.0;
    for mode in [Mode::One, Mode::Two] {
        for xi in [1.0, -1.0, 3.0_f64] {
            let closed = singular_traction_transform(&sys, mode, xi).expect("xi != 0");
            // Sigma(-t) = cp t^{-3/2 - i eps} + cq t^{-3/2 + i eps}; extract
            // the coefficient pair from two sample points via the exact
            // power structure (conjugate components).
            let r12 = sys.h_ratio();
            let base_p = match mode {
                Mode::One => Vec2c::new(c(0.0, 1.0), cr(r12)),
                Mode::Two => Vec2c::new(cr(-1.0), c(0.0, r12)),
            };
            let cp = base_p.scale(cr(1.0 / (2.0 * (2.0 * PI).sqrt())));
            let cq = cp.conj();
            let ap = c(1.5, eps);
            let aq = c(1.5, -eps);
            let x0: f64 = (1.0 / xi.abs()).min(1.0);
            let big_l = (300.0 / xi.abs()).max(60.0);
            // transform integral over x < 0: t = -x, frequency -xi
            let w = -xi;
            let mut total = cp
                .scale(power_head_series(ap, w, x0) + power_tail_series(ap, w, big_l).0)
                .add(&cq.scale(power_head_series(aq, w, x0) + power_tail_series(aq, w, big_l).0));
            for comp in 0..2 {
                let r = adaptive_gk(
                    |t| {
                        let s = singular_traction_space(&sys, mode, -t);
                        cr(s[comp]) * c(0.0, w * t).exp()
                    },
                    x0,
                    big_l,
                    1e-11,
                    3000,
                );
                if comp == 0 {
                    total.x += r.value;
                } else {
                    total.y += r.value;
                }
            }
            worst = worst.max(total.sub(&closed).norm_max() / closed.norm_max());
        }
    }
    if worst < 1e-6 {
        Ok(())
    } else {
        Err(format!("worst traction-transform error {worst:.3e} exceeds 1e-6"))
    }
}

/// Module invariant: direct skew transform equals the A[U] + (i/xi) B Sigma
/// decomposition over 500 random systems and xi values.
pub fn check_skew_dual_path() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0005);
    let cases: Vec<_> = (0..500)
        .map(|_| {
            (
                random_material(&mut rng),
                random_material(&mut rng),
                rng.range(0.05, 20.0) * if rng.uniform() < 0.5 { -1.0 } else { 1.0 },
            )
        })
        .collect();
    let worst = map_reduce_max(&cases, |(m1, m2, xi)| {
        let sys = BimaterialSystem::new(m1, m2).expect("valid pair");
        let mut w: f64 = 0.0;
        for mode in [Mode::One, Mode::Two] {
            let a = wf_transform(&sys, WfKind::Skew, mode, *xi).unwrap();
            let b = wf_skew_transform_decomposed(&sys, mode, *xi).unwrap();
            w = w.max(a.sub(&b).norm_max() / a.norm_max().max(1e-300));
        }
        w
    });
    if worst < 1e-12 {
        Ok(())
    } else {
        Err(format!("worst dual-path gap {worst:.3e} exceeds 1e-12"))
    }
}

/// Criterion 6: Betti quadrature against the closed three-point formulas
/// over beta in {-1/2, -1/4, 0, 1/4, 1/2} x b/a in {0, 0.3, 0.6, 0.9}.
pub fn check_sif_method_agreement() -> Result<(), String> {
    let base = section5_system();
    let cases: Vec<(f64, f64)> = [-0.5, -0.25, 0.0, 0.25, 0.5]
        .into_iter()
        .flat_map(|b| [0.0, 0.3, 0.6, 0.9].into_iter().map(move |r| (b, r)))
        .collect();
    let worst = map_reduce_max(&cases, |&(beta, r)| {
        let sys = base.with_beta(beta).expect("|beta| < 1");
        let closed = sif_three_point_closed(&sys, 1.0, 1.0, r).expect("valid geometry");
        let loading = PointForceLoading::three_point(1.0, 1.0, r).expect("valid geometry");
        let quad = sif_betti_with_tol(&sys, &loading, 1e-11).expect("quadrature converges");
        let scale = closed.k.k().norm();
        let dk = (quad.k.k() - closed.k.k()).norm() / scale;
        let ds = (quad.k.ks - closed.k.ks).norm() / scale;
        let da = (quad.k.ka - closed.k.ka).norm() / scale;
        dk.max(ds).max(da)
    });
    if worst < 1e-8 {
        Ok(())
    } else {
        Err(format!("worst method disagreement {worst:.3e} exceeds 1e-8"))
    }
}

/// Criterion 7: feature checks of the three-point sweep at the reference
/// parameter set.
pub fn check_figure_features() -> Result<(), String> {
    let base = section5_system();

    // (a) K^A vanishes exactly for the symmetric configuration
    for beta in [-0.5, -0.25, 0.0, 0.25, 0.5] {
        let sys = base.with_beta(beta).map_err(|e| e.to_string())?;
        let r = sif_three_point_closed(&sys, 1.0, 1.0, 0.0).map_err(|e| e.to_string())?;
        if r.k.ka != C64::ZERO {
            return Err(format!("K^A = {} at b/a = 0, beta = {beta}", r.k.ka));
        }
    }

    // (b) beta = 0 makes both parts real
    let sys0 = base.with_beta(0.0).map_err(|e| e.to_string())?;
    for r in [0.0, 0.25, 0.5, 0.75, 0.9] {
        let k = sif_three_point_closed(&sys0, 1.0, 1.0, r).map_err(|e| e.to_string())?;
        if k.k.ks.im.abs() > 1e-12 || k.k.ka.im.abs() > 1e-12 {
            return Err(format!(
                "beta = 0 imaginary parts: Im KS = {}, Im KA = {}",
                k.k.ks.im, k.k.ka.im
            ));
        }
    }

    // (c) |K^S| grows like (1 - b/a)^{-1/2}: exponent extracted from second
    // differences of |K^S| at b/a = 0.9, 0.99, 0.999 (the raw log-log slope
    // of |K^S| itself is polluted by its regular part and sits near -0.38
    // on this window regardless of implementation; the difference-based
    // estimator isolates the singular term).
    let ks_abs = |r: f64| -> Result<f64, String> {
        Ok(sif_three_point_closed(&sys0, 1.0, 1.0, r)
            .map_err(|e| e.to_string())?
            .k
            .ks
            .norm())
    };
    let (k1, k2, k3) = (ks_abs(0.9)?, ks_abs(0.99)?, ks_abs(0.999)?);
    let slope = -((k3 - k2) / (k2 - k1)).ln() / 10f64.ln();
    if (slope + 0.5).abs() > 0.02 {
        return Err(format!("singular-growth exponent {slope:.4} not within -0.5 +- 0.02"));
    }

    // (d) the mode-I ratio K^A_I / K^S_I reaches the 30-50% band for at
    // least one beta over the sweep grid
    let mut any_in_band = false;
    let mut details = String::new();
    for beta in [-0.5, -0.25, 0.0, 0.25, 0.5] {
        let sys = base.with_beta(beta).map_err(|e| e.to_string())?;
        let mut best: f64 = 0.0;
        for k in 0..=190 {
            let r = 0.005 * k as f64;
            let res = sif_three_point_closed(&sys, 1.0, 1.0, r).map_err(|e| e.to_string())?;
            if res.k.ks.re != 0.0 {
                best = best.max((res.k.ka.re / res.k.ks.re).abs());
            }
        }
        details.push_str(&format!("beta {beta}: max ratio {best:.3}; "));
        if (0.30..=0.50).contains(&best) {
            any_in_band = true;
        }
    }
    if !any_in_band {
        return Err(format!("no beta reaches the [0.30, 0.50] ratio band: {details}"));
    }
    Ok(())
}

/// Criterion 8: transforms vary continuously through the repeated-root
/// branch at rho = 1.
pub fn check_degenerate_continuity() -> Result<(), String> {
    let make = |rho: f64| {
        OrthotropicMaterial::from_anisotropy("m", 1.3, rho, -0.2, 1.0).expect("valid material")
    };
    let other = OrthotropicMaterial::from_anisotropy("o", 1.0, 0.74, 0.5, 1.0).unwrap();
    let sys_at = |rho: f64| BimaterialSystem::new(&make(rho), &other).expect("valid pair");
    let s_mid = sys_at(1.0);
    let mut worst: f64 = 0.0;
    for s_near in [sys_at(1.0 - 1e-6), sys_at(1.0 + 1e-6)] {
        for kind in [WfKind::Symmetric, WfKind::Skew] {
            for mode in [Mode::One, Mode::Two] {
                for xi in [0.4, -0.4, 3.0, -3.0] {
                    let a = wf_transform(&s_mid, kind, mode, xi).unwrap();
                    let b = wf_transform(&s_near, kind, mode, xi).unwrap();
                    worst = worst.max(a.sub(&b).norm_max() / a.norm_max().max(1e-300));
                }
            }
        }
    }
    if worst < 1e-4 {
        Ok(())
    } else {
        Err(format!("worst branch discontinuity {worst:.3e} exceeds 1e-4"))
    }
}

/// Module invariant: identical materials give beta = eps = delta = 0 and a
/// vanishing A matrix, and swapping the pair negates the mismatch
/// parameters.
pub fn check_mismatch_parameter_structure() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0006);
    for _ in 0..100 {
        let m1 = random_material(&mut rng);
        let m2 = random_material(&mut rng);
        let same = BimaterialSystem::new(&m1, &m1).map_err(|e| e.to_string())?;
        if same.beta().abs() > 1e-14
            || same.delta1().abs() > 1e-14
            || same.delta2().abs() > 1e-14
            || same.epsilon().abs() > 1e-14
        {
            return Err("identical materials must have zero mismatch parameters".into());
        }
        let b12 = BimaterialSystem::new(&m1, &m2).map_err(|e| e.to_string())?;
        let b21 = BimaterialSystem::new(&m2, &m1).map_err(|e| e.to_string())?;
        let worst = (b12.beta() + b21.beta())
            .abs()
            .max((b12.delta1() + b21.delta1()).abs())
            .max((b12.delta2() + b21.delta2()).abs())
            .max((b12.epsilon() + b21.epsilon()).abs());
        if worst > 1e-13 {
            return Err(format!("swap antisymmetry violated by {worst:.3e}"));
        }
    }
    Ok(())
}

/// Extraction oracle for M1: xi [U^]^T R tau^ must equal M1 (K, conj K) for
/// the pure singular field, with tau^ built from the traction asymptotics.
pub fn check_m1_extraction() -> Result<(), String> {
    let mut rng = Rng::new(0x5d0c_0007);
    let mut systems = vec![section5_system()];
    for _ in 0..20 {
        systems.push(
            BimaterialSystem::new(&random_material(&mut rng), &random_material(&mut rng))
                .expect("valid pair"),
        );
    }
    let mut worst: f64 = 0.0;
    for sys in &systems {
        let m1 = sys.m1_matrix().map_err(|e| e.to_string())?;
        for xi in [7.3, 50.0] {
            let extracted = extract_m1(sys, xi);
            worst = worst.max(extracted.sub(&m1).norm_max() / m1.norm_max());
        }
    }
    if worst < 1e-6 {
        Ok(())
    } else {
        Err(format!("worst M1 extraction gap {worst:.3e} exceeds 1e-6"))
    }
}

/// Numerically extracts M1 from the large-xi product of the symmetric
/// weight-function transforms with the transformed singular traction
/// asymptotics (independent of the closed M1 formula).
pub fn extract_m1(sys: &BimaterialSystem, xi: f64) -> crate::complex2::Mat2c {
    use crate::complex2::Mat2c;
    let eps = sys.epsilon();
    let r12 = sys.h_ratio();
    let tau_hat = |kvec: Vec2c| -> Vec2c {
        // (xi^{-1/2}/4) T^(xi) kvec with the xi_+ branch (xi > 0 here)
        let a = real_pow(xi, c(0.0, -eps)) / (sys.cplus() * cr(sys.e0()));
        let b = cr(sys.e0()) * real_pow(xi, c(0.0, eps)) / sys.cminus();
        let pre = cr(xi.powf(-0.5) / 4.0);
        Vec2c::new(
            pre * (a * kvec.x - b * kvec.y),
            pre * (c(0.0, r12) * a * kvec.x + c(0.0, r12) * b * kvec.y),
        )
    };
    let product = |kvec: Vec2c| -> Vec2c {
        let th = tau_hat(kvec);
        let mut out = Vec2c::zero();
        for (slot, mode) in [Mode::One, Mode::Two].into_iter().enumerate() {
            let u = wf_transform(sys, WfKind::Symmetric, mode, xi).unwrap();
            let v = cr(xi) * (-u.x * th.x + u.y * th.y);
            if slot == 0 {
                out.x = v;
            } else {
                out.y = v;
            }
        }
        out
    };
    // columns from K = 1 and K = i; solve [1 1; i -i] for each row
    let v1 = product(Vec2c::new(cr(1.0), cr(1.0)));
    let v2 = product(Vec2c::new(c(0.0, 1.0), c(0.0, -1.0)));
    let det = c(0.0, -1.0) - c(0.0, 1.0); // 1*(-i) - 1*(i)
    let solve_row = |b1: C64, b2: C64| -> (C64, C64) {
        ((b1 * c(0.0, -1.0) - b2) / det, (b2 - b1 * c(0.0, 1.0)) / det)
    };
    let (m11, m12) = solve_row(v1.x, v2.x);
    let (m21, m22) = solve_row(v1.y, v2.y);
    Mat2c::new(m11, m12, m21, m22)
}

/// Runs the complete suite in a fixed order.
pub fn run_all() -> Vec<CheckOutcome> {
    let checks: Vec<(&'static str, fn() -> Result<(), String>)> = vec![
        ("stroh-consistency", check_stroh_consistency),
        ("qrt-eigensystem-agreement", check_qrt_agreement),
        ("interface-eigenrelation", check_interface_eigenrelation),
        ("gamma-identity", check_gamma_identity),
        ("mismatch-parameter-structure", check_mismatch_parameter_structure),
        ("skew-dual-path", check_skew_dual_path),
        ("m1-extraction", check_m1_extraction),
        ("appendix-oracle-equivalence", check_oracle_equivalence),
        ("traction-transform-quadrature", check_traction_transform_quadrature),
        ("transform-round-trip", check_transform_round_trip),
        ("sif-method-agreement", check_sif_method_agreement),
        ("figure-features", check_figure_features),
        ("degenerate-continuity", check_degenerate_continuity),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match f() {
            Ok(()) => CheckOutcome {
                name,
                passed: true,
                detail: "ok".into(),
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}
