//! Independent verification path: half-plane elasticity solved as an ODE
//! boundary-value problem in the Fourier variable.
//!
//! For each half-plane the transformed stress component sigma_22 satisfies
//!
//! ```text
//! s11 sigma'''' - xi^2 (s66 + 2 s12) sigma'' + xi^4 s22 sigma = 0,
//! ```
//!
//! whose decaying solutions are exp(-+ |xi| nu_j x2) with
//! `lambda nu^4 - 2 rho sqrt(lambda) nu^2 + 1 = 0`, Re nu > 0. Matching the
//! singular traction on the interface determines the coefficients, and the
//! boundary displacement transforms follow from the strain relations alone:
//! no Stroh matrices, no Y, no eigenvector normalization. Agreement of the
//! reconstructed jump/average with the closed-form weight-function
//! transforms is the strongest end-to-end check in the crate.
//!
//! (The only objects shared with the main path are the material type and the
//! transformed singular traction that both formulations take as data.)

use crate::complex2::{c, cr, C64, Vec2c, I};
use crate::material::OrthotropicMaterial;
use crate::stroh::BimaterialSystem;
use crate::weights::{singular_traction_transform, wf_transform, Mode, WfKind};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Which half-plane a boundary-value solution lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// x2 > 0, material (1).
    Upper,
    /// x2 < 0, material (2).
    Lower,
}

/// ODE eigenvalues with positive real part, per the two branches
/// (rho > 1 gives a real pair, -1 < rho < 1 a conjugate pair). These
/// coincide with {-i mu1, -i mu2} as sets.
pub fn ode_eigenvalues(material: &OrthotropicMaterial) -> Result<(C64, C64)> {
    if material.is_degenerate() {
        return Err(Error::DegenerateMaterial);
    }
    let a = material.aniso();
    let l4 = a.lambda.powf(-0.25);
    if a.rho > 1.0 {
        Ok((cr(l4 * (a.n + a.m)), cr(l4 * (a.n - a.m))))
    } else {
        Ok((c(l4 * a.n, l4 * a.m), c(l4 * a.n, -l4 * a.m)))
    }
}

/// Residuals of the ODE characteristic polynomial and the symbol
/// identities nu1^2 + nu2^2 = (2 s12 + s66)/s11, nu1^2 nu2^2 = s22/s11.
pub fn symbol_residuals(material: &OrthotropicMaterial) -> Result<[f64; 2]> {
    let (n1, n2) = ode_eigenvalues(material)?;
    let sum = n1 * n1 + n2 * n2;
    let prod = n1 * n1 * n2 * n2;
    let r1 = (sum - cr((2.0 * material.s12() + material.s66()) / material.s11())).norm();
    let r2 = (prod - cr(material.s22() / material.s11())).norm();
    Ok([r1, r2])
}

/// Boundary-value displacement transform at depth x2 for one half-plane
/// loaded by the transformed traction `sigma_hat` on its boundary.
///
/// The sign of x2 must match the side (x2 <= 0 for the lower half-plane,
/// x2 >= 0 for the upper one).
pub fn halfplane_displacement_transform(
    material: &OrthotropicMaterial,
    side: Side,
    sigma_hat: &Vec2c,
    xi: f64,
    x2: f64,
) -> Result<Vec2c> {
    if xi == 0.0 {
        return Err(Error::DomainError(
            "half-plane transform undefined at xi = 0".into(),
        ));
    }
    match side {
        Side::Lower if x2 > 0.0 => {
            return Err(Error::DomainError(format!(
                "lower half-plane requires x2 <= 0, got {x2}"
            )))
        }
        Side::Upper if x2 < 0.0 => {
            return Err(Error::DomainError(format!(
                "upper half-plane requires x2 >= 0, got {x2}"
            )))
        }
        _ => {}
    }
    let (n1, n2) = ode_eigenvalues(material)?;
    if (n1 - n2).norm() < 1e-12 * n1.norm() {
        return Err(Error::SingularCoefficientSystem { nu: n1 });
    }
    let s = if xi > 0.0 { 1.0 } else { -1.0 };
    let (s11, s12, s22) = (material.s11(), material.s12(), material.s22());

    // traction match on the boundary: sigma22 = Sigma2, sigma21 = Sigma1
    let (a1, a2) = match side {
        Side::Lower => {
            let a1 = (n2 * sigma_hat.y - c(0.0, s) * sigma_hat.x) / (n2 - n1);
            (a1, sigma_hat.y - a1)
        }
        Side::Upper => {
            let a1 = (n2 * sigma_hat.y + c(0.0, s) * sigma_hat.x) / (n2 - n1);
            (a1, sigma_hat.y - a1)
        }
    };

    // decaying exponentials exp(-+ |xi| nu_j |x2|)
    let decay = |nu: C64| -> C64 { (-cr(xi.abs() * x2.abs()) * nu).exp() };
    let (e1, e2) = (decay(n1), decay(n2));

    // u1 from eps11 = s11 sigma11 + s12 sigma22, with sigma11 = -(1/xi^2) sigma22''
    let u1 = (I / cr(xi))
        * (a1 * (cr(s12) - cr(s11) * n1 * n1) * e1 + a2 * (cr(s12) - cr(s11) * n2 * n2) * e2);

    // u2 from integrating eps22 = s12 sigma11 + s22 sigma22 in x2
    let g = |nu: C64| -> C64 { (cr(s22) - cr(s12) * nu * nu) / nu };
    let sign_u2 = match side {
        Side::Lower => 1.0,
        Side::Upper => -1.0,
    };
    let u2 = cr(sign_u2 / xi.abs()) * (a1 * g(n1) * e1 + a2 * g(n2) * e2);
    Ok(Vec2c::new(u1, u2))
}

/// Largest relative discrepancy between the weight-function transforms
/// computed from the closed forms and reconstructed from the two half-plane
/// ODE solutions, over the given xi samples and both traction modes.
pub fn equivalence_report(
    mat1: &OrthotropicMaterial,
    mat2: &OrthotropicMaterial,
    xi_samples: &[f64],
) -> Result<f64> {
    let system = BimaterialSystem::new(mat1, mat2)?;
    let eval = |&xi: &f64| -> Result<f64> {
        let mut worst = 0.0f64;
        for mode in [Mode::One, Mode::Two] {
            let sigma = singular_traction_transform(&system, mode, xi)?;
            let up = halfplane_displacement_transform(mat1, Side::Upper, &sigma, xi, 0.0)?;
            let lo = halfplane_displacement_transform(mat2, Side::Lower, &sigma, xi, 0.0)?;
            let jump_ode = up.sub(&lo);
            let avg_ode = up.add(&lo).scale(cr(0.5));
            let jump = wf_transform(&system, WfKind::Symmetric, mode, xi)?;
            let avg = wf_transform(&system, WfKind::Skew, mode, xi)?;
            let dj = jump_ode.sub(&jump).norm_max()
                / jump.norm_max().max(jump_ode.norm_max()).max(1e-300);
            let da = avg_ode.sub(&avg).norm_max()
                / avg.norm_max().max(avg_ode.norm_max()).max(jump.norm_max() * 1e-6);
            worst = worst.max(dj).max(da);
        }
        Ok(worst)
    };
    #[cfg(feature = "parallel")]
    let acc: Result<Vec<f64>> = xi_samples.par_iter().map(eval).collect();
    #[cfg(not(feature = "parallel"))]
    let acc: Result<Vec<f64>> = xi_samples.iter().map(eval).collect();
    Ok(acc?.into_iter().fold(0.0, f64::max))
}

/// Default xi sample set: 25 log-spaced magnitudes in [1e-2, 1e2] on each
/// side of the origin.
pub fn default_xi_samples() -> Vec<f64> {
    let n = 25;
    let (lo, hi) = (1e-2f64.ln(), 1e2f64.ln());
    let mut out = Vec::with_capacity(2 * n);
    for k in 0..n {
        let t = lo + (hi - lo) * k as f64 / (n - 1) as f64;
        out.push(t.exp());
        out.push(-t.exp());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::material::stroh_eigenvalues;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn alu() -> OrthotropicMaterial {
        OrthotropicMaterial::from_anisotropy("alu", 1.0, 0.74, 0.5, 1.0).unwrap()
    }

    fn boron() -> OrthotropicMaterial {
        OrthotropicMaterial::from_anisotropy_relaxed("bor", 1.0 / 14.3, 4.91, 2.0, 6.4).unwrap()
    }

    #[test]
    fn nu_branches() {
        // lambda = 1, rho = 0: nu^4 + 1 = 0, roots (1 +- i)/sqrt(2)
        let m = OrthotropicMaterial::from_anisotropy("m", 1.0, 0.0, -0.5, 1.0).unwrap();
        let (n1, n2) = ode_eigenvalues(&m).unwrap();
        assert!((n1 - c(FRAC_1_SQRT_2, FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((n2 - c(FRAC_1_SQRT_2, -FRAC_1_SQRT_2)).norm() < 1e-15);

        let (n1, _) = ode_eigenvalues(&alu()).unwrap();
        assert!((n1 - c(0.93274, 0.36056)).norm() < 1e-5);

        let (n1, n2) = ode_eigenvalues(&boron()).unwrap();
        assert!((n1.re - 6.06190).abs() < 5e-5 && n1.im.abs() < 1e-15);
        assert!((n2.re - 0.62388).abs() < 5e-5);
    }

    #[test]
    fn nu_equals_minus_i_mu_as_sets() {
        for m in [alu(), boron()] {
            let (n1, n2) = ode_eigenvalues(&m).unwrap();
            let ev = stroh_eigenvalues(&m);
            let (c1, c2) = (-I * ev.mu1, -I * ev.mu2);
            let direct = (n1 - c1).norm() + (n2 - c2).norm();
            let crossed = (n1 - c2).norm() + (n2 - c1).norm();
            assert!(direct.min(crossed) < 1e-12);
        }
    }

    #[test]
    fn rejects_degenerate() {
        let m = OrthotropicMaterial::from_anisotropy("iso", 1.0, 1.0, -0.3, 1.0).unwrap();
        assert!(matches!(ode_eigenvalues(&m), Err(Error::DegenerateMaterial)));
    }

    #[test]
    fn symbol_identities() {
        for m in [alu(), boron()] {
            let [r1, r2] = symbol_residuals(&m).unwrap();
            assert!(r1 < 1e-12 && r2 < 1e-12);
        }
    }

    #[test]
    fn homogeneous_data_and_decay() {
        let m = alu();
        let zero = Vec2c::zero();
        let u = halfplane_displacement_transform(&m, Side::Lower, &zero, 1.3, -0.5).unwrap();
        assert_eq!(u.norm_max(), 0.0);

        let sys = BimaterialSystem::new(&alu(), &boron()).unwrap();
        let sigma = singular_traction_transform(&sys, Mode::One, 1.3).unwrap();
        let (_, n2) = ode_eigenvalues(&m).unwrap();
        let surface = halfplane_displacement_transform(&m, Side::Lower, &sigma, 1.3, 0.0).unwrap();
        let deep_x2 = -50.0 / (1.3 * n2.re);
        let deep = halfplane_displacement_transform(&m, Side::Lower, &sigma, 1.3, deep_x2).unwrap();
        assert!(deep.norm_max() < 1e-15 * surface.norm_max());
    }

    #[test]
    fn side_domain_checks() {
        let m = alu();
        let s = Vec2c::new(cr(1.0), cr(0.5));
        assert!(halfplane_displacement_transform(&m, Side::Lower, &s, 1.0, 0.5).is_err());
        assert!(halfplane_displacement_transform(&m, Side::Upper, &s, 1.0, -0.5).is_err());
        assert!(halfplane_displacement_transform(&m, Side::Upper, &s, 0.0, 0.5).is_err());
    }

    #[test]
    fn lower_trace_matches_y_form() {
        // at x2 = 0 the ODE trace must equal
        // {-(1/(2 xi))(Y - conj Y) ... } written with the Y matrix of the
        // material; equivalently (i Im Y / xi + Re Y / |xi|) sigma for the
        // lower side.
        let m = boron();
        let y = crate::stroh::y_closed_form(&m);
        let sys = BimaterialSystem::new(&alu(), &m).unwrap();
        for xi in [0.7, -3.0] {
            for mode in [Mode::One, Mode::Two] {
                let sigma = singular_traction_transform(&sys, mode, xi).unwrap();
                let ode = halfplane_displacement_transform(&m, Side::Lower, &sigma, xi, 0.0).unwrap();
                let expect = y
                    .im_part()
                    .scale(I / cr(xi))
                    .add(&y.re_part().scale(cr(1.0 / xi.abs())))
                    .mul_vec(&sigma);
                assert!(
                    ode.sub(&expect).norm_max() < 1e-10 * expect.norm_max(),
                    "xi={xi} mode={mode:?}"
                );
            }
        }
    }

    #[test]
    fn equivalence_identical_materials() {
        let m = alu();
        let d = equivalence_report(&m, &m, &[1.0, -1.0]).unwrap();
        assert!(d < 1e-12, "{d}");
    }

    #[test]
    fn equivalence_section5_pair() {
        let d = equivalence_report(&alu(), &boron(), &[0.1, -0.1, 1.0, -1.0, 10.0, -10.0]).unwrap();
        assert!(d < 1e-10, "{d}");
    }
}
