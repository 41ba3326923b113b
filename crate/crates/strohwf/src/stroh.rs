//! Per-material Stroh matrices and the bimaterial interface objects.
//!
//! For one orthotropic half-plane the Hwu-normalized matrices A, B and the
//! Hermitian surface matrix Y = i A B^{-1} are built both from the eigenvalue
//! representation and from the closed form
//!
//! ```text
//! Y = [ 2 n lambda^{1/4} sqrt(s11 s22)      i (sqrt(s11 s22) + s12) ]
//!     [ -i (sqrt(s11 s22) + s12)       2 n lambda^{-1/4} sqrt(s11 s22) ]
//! ```
//!
//! For a bonded pair the bimaterial matrix is H = Y^(1) + conj(Y^(2)), whose
//! structure is captured by H11, H22 and the Dundurs-type parameters beta,
//! delta1, delta2, gamma. The interface eigenvector w satisfies
//! `conj(H) w = e^{2 pi eps} H w` with the oscillation index
//! `eps = ln((1-beta)/(1+beta)) / (2 pi)`.

use crate::complex2::{c, cr, real_pow, C64, Mat2c, Vec2c, I};
use crate::material::{stroh_eigenvalues, OrthotropicMaterial};
use crate::special::gamma;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Stroh matrices and the surface matrix Y for one material.
#[derive(Debug, Clone)]
pub struct StrohData {
    pub mu1: C64,
    pub mu2: C64,
    /// A and B in the Hwu normalization; absent for the repeated-root case
    /// where the column normalizers vanish.
    pub ab: Option<(Mat2c, Mat2c)>,
    /// Hermitian surface matrix Y.
    pub y: Mat2c,
}

/// Builds A, B (Hwu normalization) and Y for one material.
///
/// Y is computed both as i A B^{-1} and from the closed form; for degenerate
/// materials (rho = 1) the closed form alone is used since the A, B columns
/// coincide. Agreement between the two routes is part of the acceptance
/// suite rather than a runtime check.
pub fn stroh_data(material: &OrthotropicMaterial) -> Result<StrohData> {
    let ev = stroh_eigenvalues(material);
    let y = y_closed_form(material);
    if ev.degenerate {
        return Ok(StrohData {
            mu1: ev.mu1,
            mu2: ev.mu2,
            ab: None,
            y,
        });
    }
    let (s11, s12, s22) = (material.s11(), material.s12(), material.s22());
    let norm = |mu: C64| -> Result<C64> {
        let n2 = (cr(2.0) / mu) * (cr(s22) - cr(s11) * mu.powu(4));
        let n = n2.sqrt();
        if n.norm() < 1e-14 {
            return Err(Error::NormalizerBranchFailure { mu });
        }
        Ok(n)
    };
    let n1 = norm(ev.mu1)?;
    let n2 = norm(ev.mu2)?;
    let a = Mat2c::new(
        (cr(s11) * ev.mu1 * ev.mu1 + cr(s12)) / n1,
        (cr(s11) * ev.mu2 * ev.mu2 + cr(s12)) / n2,
        (cr(s12) * ev.mu1 + cr(s22) / ev.mu1) / n1,
        (cr(s12) * ev.mu2 + cr(s22) / ev.mu2) / n2,
    );
    let b = Mat2c::new(-ev.mu1 / n1, -ev.mu2 / n2, cr(1.0) / n1, cr(1.0) / n2);
    Ok(StrohData {
        mu1: ev.mu1,
        mu2: ev.mu2,
        ab: Some((a, b)),
        y,
    })
}

/// Closed-form Y, valid on all rho branches including the repeated root.
pub fn y_closed_form(material: &OrthotropicMaterial) -> Mat2c {
    let a = material.aniso();
    let s = material.compliance_scale();
    let y11 = 2.0 * a.n * a.lambda.powf(0.25) * s;
    let y22 = 2.0 * a.n * a.lambda.powf(-0.25) * s;
    let y12 = s + material.s12();
    Mat2c::new(cr(y11), c(0.0, y12), c(0.0, -y12), cr(y22))
}

/// Y recomputed as i A B^{-1}; None for degenerate materials.
pub fn y_from_ab(data: &StrohData) -> Option<Mat2c> {
    let (a, b) = data.ab.as_ref()?;
    Some(a.mul_mat(&b.inverse()?).scale(I))
}

/// A complex stress intensity factor split into the parts produced by the
/// symmetric and skew-symmetric loading components; K = KS + KA by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSIF {
    pub ks: C64,
    pub ka: C64,
}

impl ComplexSIF {
    pub fn new(ks: C64, ka: C64) -> Self {
        Self { ks, ka }
    }

    /// K = K_I + i K_II.
    pub fn k(&self) -> C64 {
        self.ks + self.ka
    }
}

/// The bonded orthotropic pair: H-matrix data, oscillation index, Dundurs
/// type parameters, interface eigenvector and derived constants.
///
/// Immutable after construction; all evaluation routines take `&self`.
#[derive(Debug, Clone)]
pub struct BimaterialSystem {
    h11: f64,
    h22: f64,
    beta: f64,
    epsilon: f64,
    delta1: f64,
    delta2: f64,
    gamma: f64,
    /// sqrt(s11 s22)^(2) / sqrt(s11 s22)^(1); None when built from raw
    /// interface parameters.
    phi: Option<f64>,
    e0: f64,
    cplus: C64,
    cminus: C64,
}

impl BimaterialSystem {
    /// Builds the interface data for upper material 1 bonded to lower
    /// material 2.
    pub fn new(mat1: &OrthotropicMaterial, mat2: &OrthotropicMaterial) -> Result<Self> {
        let y1 = y_closed_form(mat1);
        let y2 = y_closed_form(mat2);
        let h11 = y1.m11.re + y2.m11.re;
        let h22 = y1.m22.re + y2.m22.re;
        let y12_1 = y1.m12.im;
        let y12_2 = y2.m12.im;
        let beta = (y12_2 - y12_1) / (h11 * h22).sqrt();
        let delta1 = (y1.m11.re - y2.m11.re) / h11;
        let delta2 = (y1.m22.re - y2.m22.re) / h22;
        let gamma = (y12_1 + y12_2) / (h11 * h22).sqrt();
        let phi = mat2.compliance_scale() / mat1.compliance_scale();
        Self::assemble(h11, h22, beta, delta1, delta2, gamma, Some(phi))
    }

    /// Builds a system directly from the interface parameters, bypassing the
    /// materials. Used for parameter sweeps where beta is varied while the
    /// H-structure of a reference pair is held fixed.
    pub fn from_parameters(
        h11: f64,
        h22: f64,
        beta: f64,
        delta1: f64,
        delta2: f64,
        gamma: f64,
    ) -> Result<Self> {
        Self::assemble(h11, h22, beta, delta1, delta2, gamma, None)
    }

    /// Same interface structure with a different oscillation parameter.
    ///
    /// gamma scales proportionally to beta (their ratio is a fixed
    /// compliance combination for a given pair), matching how the reference
    /// sweeps treat beta as a free parameter.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        let gamma = if self.beta.abs() > 1e-12 {
            beta * self.gamma / self.beta
        } else {
            0.0
        };
        Self::assemble(
            self.h11,
            self.h22,
            beta,
            self.delta1,
            self.delta2,
            gamma,
            self.phi,
        )
    }

    fn assemble(
        h11: f64,
        h22: f64,
        beta: f64,
        delta1: f64,
        delta2: f64,
        gamma: f64,
        phi: Option<f64>,
    ) -> Result<Self> {
        if !(h11 > 0.0 && h22 > 0.0) {
            return Err(Error::DefinitenessViolation(format!(
                "H11 = {h11}, H22 = {h22} must be positive"
            )));
        }
        if beta.abs() >= 1.0 {
            return Err(Error::OscillationOutOfRange { beta });
        }
        let epsilon = ((1.0 - beta) / (1.0 + beta)).ln() / (2.0 * PI);
        let e0 = (epsilon * PI / 2.0).exp();
        let half = cr(0.5);
        let cplus = (cr(1.0) + I) * cr(PI.sqrt()) / (cr(2.0) * gamma(half + I * cr(epsilon)));
        let cminus = (cr(1.0) + I) * cr(PI.sqrt()) / (cr(2.0) * gamma(half - I * cr(epsilon)));
        Ok(Self {
            h11,
            h22,
            beta,
            epsilon,
            delta1,
            delta2,
            gamma,
            phi,
            e0,
            cplus,
            cminus,
        })
    }

    pub fn h11(&self) -> f64 {
        self.h11
    }
    pub fn h22(&self) -> f64 {
        self.h22
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    pub fn delta1(&self) -> f64 {
        self.delta1
    }
    pub fn delta2(&self) -> f64 {
        self.delta2
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn phi(&self) -> Option<f64> {
        self.phi
    }
    /// e0 = exp(eps pi / 2).
    pub fn e0(&self) -> f64 {
        self.e0
    }
    /// c+ = (1+i) sqrt(pi) / (2 Gamma(1/2 + i eps)).
    pub fn cplus(&self) -> C64 {
        self.cplus
    }
    /// c- = (1+i) sqrt(pi) / (2 Gamma(1/2 - i eps)).
    pub fn cminus(&self) -> C64 {
        self.cminus
    }
    /// sqrt(H11 H22).
    pub fn sqrt_h(&self) -> f64 {
        (self.h11 * self.h22).sqrt()
    }
    /// sqrt(H11 / H22).
    pub fn h_ratio(&self) -> f64 {
        (self.h11 / self.h22).sqrt()
    }

    /// The bimaterial matrix H.
    pub fn h_matrix(&self) -> Mat2c {
        let off = self.beta * self.sqrt_h();
        Mat2c::new(cr(self.h11), c(0.0, -off), c(0.0, off), cr(self.h22))
    }

    /// Interface eigenvector w = (-i/2, (1/2) sqrt(H11/H22))^T.
    pub fn w_vector(&self) -> Vec2c {
        Vec2c::new(c(0.0, -0.5), cr(0.5 * self.h_ratio()))
    }

    /// Diagonal of the matrix A = (1/2) diag(delta1, delta2) in the
    /// skew-symmetric decomposition.
    pub fn cal_a(&self) -> [f64; 2] {
        [0.5 * self.delta1, 0.5 * self.delta2]
    }

    /// Off-diagonal matrix B in the skew-symmetric decomposition.
    pub fn cal_b(&self) -> Mat2c {
        let s = 0.5 * self.sqrt_h();
        Mat2c::new(
            C64::ZERO,
            cr(s * (self.gamma + self.beta * self.delta1)),
            cr(-s * (self.gamma + self.beta * self.delta2)),
            C64::ZERO,
        )
    }

    /// First-order asymptotics matrix M1 relating the Betti integral to the
    /// K-vector (K, conj K).
    ///
    /// The scalar denominator carries 1 + 4 eps^2 = (1 - 2 i eps)(1 + 2 i eps),
    /// confirmed against the large-xi extraction oracle in the test suite.
    pub fn m1_matrix(&self) -> Result<Mat2c> {
        let eps = self.epsilon;
        let e02 = cr(self.e0 * self.e0);
        let q = c(1.0, 2.0 * eps);
        let qb = c(1.0, -2.0 * eps);
        let f = cr(-self.h11) / (cr(4.0 * (1.0 + 4.0 * eps * eps)) * self.cplus * self.cminus);
        let bm = cr(self.beta - 1.0);
        let bp = cr(self.beta + 1.0);
        let m = Mat2c::new(
            f * (-bm * qb / e02),
            f * (e02 * bp * q),
            f * (I * bm * qb / e02),
            f * (I * e02 * bp * q),
        );
        let det = m.det().norm();
        let scale = m.norm_max().powi(2).max(f64::MIN_POSITIVE);
        if det < 1e-14 * scale {
            return Err(Error::SingularM1 { det });
        }
        Ok(m)
    }

    /// Interface traction ahead of the physical crack tip,
    /// tau(x1) = Re(K x1^{i eps} w) / sqrt(2 pi x1) for x1 > 0.
    pub fn traction_ahead(&self, k: C64, x1: f64) -> Result<[f64; 2]> {
        if !(x1 > 0.0) {
            return Err(Error::DomainError(format!(
                "traction_ahead requires x1 > 0, got {x1}"
            )));
        }
        let osc = k * real_pow(x1, I * cr(self.epsilon));
        let w = self.w_vector();
        let pre = 1.0 / (2.0 * PI * x1).sqrt();
        Ok([pre * (osc * w.x).re, pre * (osc * w.y).re])
    }

    /// Crack-face displacement jump behind the physical tip,
    /// [u](x1) = sqrt(2(-x1)/pi) (H + conj H)/cosh(pi eps)
    ///           Re(K (-x1)^{i eps} w / (1 + 2 i eps)) for x1 < 0.
    pub fn displacement_jump_ahead(&self, k: C64, x1: f64) -> Result<[f64; 2]> {
        if !(x1 < 0.0) {
            return Err(Error::DomainError(format!(
                "displacement_jump_ahead requires x1 < 0, got {x1}"
            )));
        }
        let t = -x1;
        let osc = k * real_pow(t, I * cr(self.epsilon)) / c(1.0, 2.0 * self.epsilon);
        let w = self.w_vector();
        let pre = (2.0 * t / PI).sqrt() / (PI * self.epsilon).cosh();
        // H + conj(H) = 2 diag(H11, H22)
        Ok([
            pre * 2.0 * self.h11 * (osc * w.x).re,
            pre * 2.0 * self.h22 * (osc * w.y).re,
        ])
    }

    /// Residual of the interface eigenrelation conj(H) w - e^{2 pi eps} H w.
    pub fn eigenrelation_residual(&self) -> f64 {
        let h = self.h_matrix();
        let w = self.w_vector();
        let lhs = h.conj().mul_vec(&w);
        let rhs = h.mul_vec(&w).scale(cr((2.0 * PI * self.epsilon).exp()));
        lhs.sub(&rhs).norm_max()
    }
}
