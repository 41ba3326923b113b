//! Orthotropic plane-elasticity materials: validation, anisotropy parameters
//! and Stroh eigenvalues.
//!
//! A material is described by the four plane compliance constants s11, s12,
//! s22, s66. Two nondimensional parameters capture the anisotropy,
//!
//! ```text
//! lambda = s11/s22,     rho = (2 s12 + s66) / (2 sqrt(s11 s22)),
//! ```
//!
//! and the Stroh eigenvalues are the roots with positive imaginary part of
//! `lambda mu^4 + 2 rho sqrt(lambda) mu^2 + 1 = 0`.

use crate::complex2::{c, cr, C64, Vec2c};
use crate::{Error, Result, DEGENERACY_THRESHOLD};

/// Nondimensional anisotropy parameters derived from the compliances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnisotropyParams {
    pub lambda: f64,
    pub rho: f64,
    /// n = sqrt((1+rho)/2)
    pub n: f64,
    /// m = sqrt(|1-rho|/2)
    pub m: f64,
}

/// A validated orthotropic material in plane deformation.
///
/// The library does not convert between plane stress and plane strain;
/// compliances are taken as already reduced to the relevant 2D regime.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthotropicMaterial {
    name: String,
    s11: f64,
    s12: f64,
    s22: f64,
    s66: f64,
    aniso: AnisotropyParams,
}

/// The two Stroh eigenvalues with positive imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrohEigenvalues {
    pub mu1: C64,
    pub mu2: C64,
    /// True when rho = 1 (repeated root mu1 = mu2 = i lambda^{-1/4}).
    pub degenerate: bool,
}

impl OrthotropicMaterial {
    /// Validates the compliance constants and computes the derived
    /// anisotropy parameters.
    ///
    /// Rejects input whose strain energy density is not positive definite:
    /// s11, s22, s66 must be positive and s11 s22 - s12^2 > 0 (which also
    /// forces lambda > 0 and rho > -1).
    pub fn new(name: impl Into<String>, s11: f64, s12: f64, s22: f64, s66: f64) -> Result<Self> {
        for (label, v) in [("s11", s11), ("s12", s12), ("s22", s22), ("s66", s66)] {
            if !v.is_finite() {
                return Err(Error::DefinitenessViolation(format!(
                    "{label} = {v} is not finite"
                )));
            }
        }
        if s11 <= 0.0 || s22 <= 0.0 {
            return Err(Error::DefinitenessViolation(format!(
                "s11 = {s11}, s22 = {s22} must be positive"
            )));
        }
        if s66 <= 0.0 {
            return Err(Error::DefinitenessViolation(format!(
                "s66 = {s66} must be positive"
            )));
        }
        let det = s11 * s22 - s12 * s12;
        if det <= 0.0 {
            return Err(Error::DefinitenessViolation(format!(
                "s11 s22 - s12^2 = {det} must be positive"
            )));
        }
        let lambda = s11 / s22;
        let rho = 0.5 * (2.0 * s12 + s66) / (s11 * s22).sqrt();
        if rho <= -1.0 {
            return Err(Error::DefinitenessViolation(format!(
                "rho = {rho} must exceed -1"
            )));
        }
        let aniso = AnisotropyParams {
            lambda,
            rho,
            n: (0.5 * (1.0 + rho)).sqrt(),
            m: (0.5 * (1.0 - rho).abs()).sqrt(),
        };
        Ok(Self {
            name: name.into(),
            s11,
            s12,
            s22,
            s66,
            aniso,
        })
    }

    /// Builds a material from the anisotropy parameters instead of raw
    /// compliances: s11 = scale sqrt(lambda), s22 = scale / sqrt(lambda),
    /// s12 = theta scale, s66 = 2 scale (rho - theta), where
    /// scale = sqrt(s11 s22).
    pub fn from_anisotropy(
        name: impl Into<String>,
        lambda: f64,
        rho: f64,
        theta: f64,
        scale: f64,
    ) -> Result<Self> {
        let (s11, s12, s22, s66) = Self::compliances_from_anisotropy(lambda, rho, theta, scale)?;
        Self::new(name, s11, s12, s22, s66)
    }

    /// Like [`from_anisotropy`](Self::from_anisotropy) but without the
    /// s11 s22 - s12^2 > 0 check.
    ///
    /// Published three-point-load parameter studies use theta values outside
    /// the positive-definite range; every formula in this crate is algebraic
    /// in the compliances and evaluates there, so such parameter bundles are
    /// admitted through this constructor only.
    pub fn from_anisotropy_relaxed(
        name: impl Into<String>,
        lambda: f64,
        rho: f64,
        theta: f64,
        scale: f64,
    ) -> Result<Self> {
        let (s11, s12, s22, s66) = Self::compliances_from_anisotropy(lambda, rho, theta, scale)?;
        let aniso = AnisotropyParams {
            lambda,
            rho,
            n: (0.5 * (1.0 + rho)).sqrt(),
            m: (0.5 * (1.0 - rho).abs()).sqrt(),
        };
        Ok(Self {
            name: name.into(),
            s11,
            s12,
            s22,
            s66,
            aniso,
        })
    }

    fn compliances_from_anisotropy(
        lambda: f64,
        rho: f64,
        theta: f64,
        scale: f64,
    ) -> Result<(f64, f64, f64, f64)> {
        if !(lambda > 0.0) || !(scale > 0.0) || !(rho > -1.0) || rho <= theta {
            return Err(Error::DefinitenessViolation(format!(
                "anisotropy parameters out of range: lambda = {lambda}, rho = {rho}, \
                 theta = {theta}, scale = {scale}"
            )));
        }
        Ok((
            scale * lambda.sqrt(),
            theta * scale,
            scale / lambda.sqrt(),
            2.0 * scale * (rho - theta),
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn s11(&self) -> f64 {
        self.s11
    }
    pub fn s12(&self) -> f64 {
        self.s12
    }
    pub fn s22(&self) -> f64 {
        self.s22
    }
    pub fn s66(&self) -> f64 {
        self.s66
    }
    pub fn aniso(&self) -> AnisotropyParams {
        self.aniso
    }

    /// sqrt(s11 s22), the compliance scale shared by Y entries.
    pub fn compliance_scale(&self) -> f64 {
        (self.s11 * self.s22).sqrt()
    }

    /// |rho - 1| below the degeneracy threshold.
    pub fn is_degenerate(&self) -> bool {
        (self.aniso.rho - 1.0).abs() < DEGENERACY_THRESHOLD
    }
}

/// Stroh eigenvalues from the closed-form branches of the characteristic
/// quartic.
///
/// mu1 is the root with the larger imaginary part; the tie on the
/// -1 < rho < 1 branch is broken in favour of positive real part. Within
/// `DEGENERACY_THRESHOLD` of rho = 1 the repeated-root branch is taken and
/// `degenerate` is set.
pub fn stroh_eigenvalues(material: &OrthotropicMaterial) -> StrohEigenvalues {
    let AnisotropyParams { lambda, rho, n, m } = material.aniso();
    let l4 = lambda.powf(-0.25);
    if material.is_degenerate() {
        let mu = c(0.0, l4);
        StrohEigenvalues {
            mu1: mu,
            mu2: mu,
            degenerate: true,
        }
    } else if rho > 1.0 {
        StrohEigenvalues {
            mu1: c(0.0, l4 * (n + m)),
            mu2: c(0.0, l4 * (n - m)),
            degenerate: false,
        }
    } else {
        StrohEigenvalues {
            mu1: c(l4 * m, l4 * n),
            mu2: c(-l4 * m, l4 * n),
            degenerate: false,
        }
    }
}

/// Residual of the normalized characteristic quartic at mu.
pub fn quartic_residual(material: &OrthotropicMaterial, mu: C64) -> f64 {
    let AnisotropyParams { lambda, rho, .. } = material.aniso();
    let mu2 = mu * mu;
    (cr(lambda) * mu2 * mu2 + cr(2.0 * rho * lambda.sqrt()) * mu2 + cr(1.0)).norm()
}

/// Solves the quadratic eigenproblem |Q + (R + R^T) mu + T mu^2| = 0
/// numerically and returns the two (mu, a) pairs with Im mu > 0.
///
/// Q, R, T are rebuilt from the stiffness constants, and the quartic is
/// solved by a Durand-Kerner iteration, so this route shares nothing with
/// the closed-form branches of [`stroh_eigenvalues`]; the two must agree,
/// which is exercised by the property suite.
pub fn qrt_eigensystem(material: &OrthotropicMaterial) -> Result<Vec<(C64, Vec2c)>> {
    if material.is_degenerate() {
        let l4 = material.aniso().lambda.powf(-0.25);
        return Err(Error::DegenerateEigenproblem { root: c(0.0, l4) });
    }
    let (s11, s12, s22, s66) = (
        material.s11(),
        material.s12(),
        material.s22(),
        material.s66(),
    );
    let den = s12 * s12 - s11 * s22; // negative for valid materials
    let c11 = -s22 / den;
    let c12 = s12 / den;
    let c22 = -s11 / den;
    let c66 = 1.0 / s66;

    // det[Q + (R+R^T) mu + T mu^2] expanded in powers of mu
    let a4 = c66 * c22;
    let a2 = c11 * c22 + c66 * c66 - (c12 + c66) * (c12 + c66);
    let a0 = c11 * c66;
    let roots = durand_kerner(&[cr(a0), C64::ZERO, cr(a2), C64::ZERO, cr(a4)]);

    let mut upper: Vec<C64> = roots.into_iter().filter(|r| r.im > 0.0).collect();
    if upper.len() != 2 {
        // should not happen for validated materials
        return Err(Error::DefinitenessViolation(format!(
            "expected 2 upper-half-plane roots, found {}",
            upper.len()
        )));
    }
    let scale = upper[0].norm().max(upper[1].norm());
    upper.sort_by(|a, b| {
        let tie = (a.im - b.im).abs() < 1e-9 * scale;
        if tie {
            b.re.partial_cmp(&a.re).unwrap()
        } else {
            b.im.partial_cmp(&a.im).unwrap()
        }
    });

    Ok(upper
        .into_iter()
        .map(|mu| {
            // null vector of [[c11 + c66 mu^2, (c12+c66) mu], [(c12+c66) mu, c66 + c22 mu^2]]
            let a = Vec2c::new(-cr(c12 + c66) * mu, cr(c11) + cr(c66) * mu * mu);
            let n = a.norm_max();
            (mu, a.scale(cr(1.0 / n)))
        })
        .collect())
}

/// Durand-Kerner root finder for a polynomial given by coefficients
/// low-to-high degree. Leading coefficient must be nonzero.
fn durand_kerner(coeffs: &[C64]) -> Vec<C64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<C64> = coeffs.iter().map(|&a| a / lead).collect();
    let eval = |z: C64| -> C64 {
        let mut acc = C64::ZERO;
        for &a in monic.iter().rev() {
            acc = acc * z + a;
        }
        acc
    };
    let seed = c(0.4, 0.9);
    let mut z: Vec<C64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..200 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut denom = cr(1.0);
            for j in 0..deg {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(s11: f64, s12: f64, s22: f64, s66: f64) -> OrthotropicMaterial {
        OrthotropicMaterial::new("t", s11, s12, s22, s66).unwrap()
    }

    #[test]
    fn transversely_isotropic_case() {
        // rho = (2(-1/3) + 8/3)/2 = 1, lambda = 1
        let m = mat(1.0, -1.0 / 3.0, 1.0, 8.0 / 3.0);
        let a = m.aniso();
        assert!((a.lambda - 1.0).abs() < 1e-15);
        assert!((a.rho - 1.0).abs() < 1e-15);
        assert!(m.is_degenerate());
    }

    #[test]
    fn rho_back_solved_from_s66() {
        // s66 = 2*0.74 + 2/3 so that rho = 0.74 with s12 = -1/3
        let m = mat(1.0, -1.0 / 3.0, 1.0, 2.0 * 0.74 + 2.0 / 3.0);
        let a = m.aniso();
        assert!((a.lambda - 1.0).abs() < 1e-15);
        assert!((a.rho - 0.74).abs() < 1e-14);
    }

    #[test]
    fn rejects_indefinite_input() {
        let e = OrthotropicMaterial::new("bad", 1.0, 0.0, 1.0, -2.5).unwrap_err();
        assert!(matches!(e, Error::DefinitenessViolation(_)));
        let e = OrthotropicMaterial::new("bad", 1.0, 1.1, 1.0, 1.0).unwrap_err();
        assert!(matches!(e, Error::DefinitenessViolation(_)));
        let e = OrthotropicMaterial::new("bad", -1.0, 0.0, 1.0, 1.0).unwrap_err();
        assert!(matches!(e, Error::DefinitenessViolation(_)));
        let e = OrthotropicMaterial::new("bad", f64::NAN, 0.0, 1.0, 1.0).unwrap_err();
        assert!(matches!(e, Error::DefinitenessViolation(_)));
    }

    #[test]
    fn isotropic_repeated_root() {
        let m = mat(1.0, -1.0 / 3.0, 1.0, 8.0 / 3.0);
        let ev = stroh_eigenvalues(&m);
        assert!(ev.degenerate);
        assert!((ev.mu1 - c(0.0, 1.0)).norm() < 1e-15);
        assert!((ev.mu2 - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn aluminium_like_roots() {
        let m = mat(1.0, -1.0 / 3.0, 1.0, 2.0 * 0.74 + 2.0 / 3.0);
        let ev = stroh_eigenvalues(&m);
        // n = sqrt(0.87), m = sqrt(0.13)
        assert!((ev.mu1 - c(0.13f64.sqrt(), 0.87f64.sqrt())).norm() < 1e-15);
        assert!((ev.mu2 - c(-(0.13f64.sqrt()), 0.87f64.sqrt())).norm() < 1e-15);
        assert!((ev.mu1.re - 0.36056).abs() < 5e-6);
        assert!((ev.mu1.im - 0.93274).abs() < 5e-6);
        assert!(quartic_residual(&m, ev.mu1) < 1e-12);
        assert!(quartic_residual(&m, ev.mu2) < 1e-12);
    }

    #[test]
    fn boron_like_roots() {
        // lambda = 1/14.3, rho = 4.91; sqrt(s11 s22) = 1
        let lam: f64 = 1.0 / 14.3;
        let s11 = lam.sqrt();
        let s22 = 1.0 / lam.sqrt();
        let s12 = 0.0;
        let s66 = 2.0 * 4.91;
        let m = mat(s11, s12, s22, s66);
        let ev = stroh_eigenvalues(&m);
        assert!((ev.mu1.im - 6.06190).abs() < 5e-5);
        assert!((ev.mu2.im - 0.62388).abs() < 5e-5);
        assert!(ev.mu1.re.abs() < 1e-15 && ev.mu2.re.abs() < 1e-15);
        assert!(quartic_residual(&m, ev.mu1) < 1e-11);
        assert!(quartic_residual(&m, ev.mu2) < 1e-12);
    }

    #[test]
    fn qrt_matches_closed_form() {
        for m in [
            mat(1.0, -1.0 / 3.0, 1.0, 2.0 * 0.74 + 2.0 / 3.0),
            mat((1.0f64 / 14.3).sqrt(), 0.0, 14.3f64.sqrt(), 2.0 * 4.91),
            mat(2.0, -0.4, 0.7, 1.3),
        ] {
            let ev = stroh_eigenvalues(&m);
            let pairs = qrt_eigensystem(&m).unwrap();
            assert!((pairs[0].0 - ev.mu1).norm() < 1e-10, "{:?}", pairs[0].0);
            assert!((pairs[1].0 - ev.mu2).norm() < 1e-10);
            // eigenvector residual in the original quadratic pencil
            for (mu, a) in pairs {
                let den = m.s12() * m.s12() - m.s11() * m.s22();
                let (c11, c12, c22, c66) = (-m.s22() / den, m.s12() / den, -m.s11() / den, 1.0 / m.s66());
                let r1 = (cr(c11) + cr(c66) * mu * mu) * a.x + cr(c12 + c66) * mu * a.y;
                let r2 = cr(c12 + c66) * mu * a.x + (cr(c66) + cr(c22) * mu * mu) * a.y;
                assert!(r1.norm().max(r2.norm()) < 1e-9);
            }
        }
    }

    #[test]
    fn qrt_rejects_degenerate() {
        let m = mat(1.0, -1.0 / 3.0, 1.0, 8.0 / 3.0);
        assert!(matches!(
            qrt_eigensystem(&m),
            Err(Error::DegenerateEigenproblem { .. })
        ));
    }
}
