//! Weight functions and complex stress intensity factors for semi-infinite
//! interfacial cracks between dissimilar orthotropic elastic materials.
//!
//! The crack lies on the interface between two orthotropic half-planes. The
//! library builds the Stroh surface matrices of each half-plane, assembles the
//! bimaterial quantities (H, oscillation index, Dundurs-type parameters),
//! evaluates the symmetric and skew-symmetric weight-function matrices in
//! Fourier and physical space, and converts self-balanced crack-face loadings
//! into complex stress intensity factors, either through closed forms or
//! through quadrature of the Betti integral identity.
//!
//! An independent verification path ([`oracle`]) reconstructs the same
//! weight-function transforms by solving the half-plane elasticity ODE
//! directly, without Stroh matrices.
//!
//! All quantities are nondimensional; callers must supply compliance
//! constants in mutually consistent units.

pub mod complex2;
pub mod material;
pub mod oracle;
pub mod quadrature;
pub mod sif;
pub mod special;
pub mod stroh;
pub mod verify;
pub mod weights;

pub use complex2::{Mat2c, Vec2c, C64};
pub use material::{
    qrt_eigensystem, stroh_eigenvalues, AnisotropyParams, OrthotropicMaterial, StrohEigenvalues,
};
pub use sif::{
    load_transforms, ratio_sweep, ratio_sweep_sequential, sif_betti, sif_point_closed,
    sif_three_point_closed, PointForce, PointForceLoading, QuadratureDiagnostics, SifMethod,
    SifResult, SweepRow,
};
pub use stroh::{stroh_data, BimaterialSystem, ComplexSIF, StrohData};
pub use weights::{
    general_wf_transforms, singular_traction_space, singular_traction_transform, wf_space,
    wf_transform, Mode, WfKind,
};

/// Errors reported by the library.
///
/// Variant names follow the failure they signal; most indicate unphysical
/// input rather than numerical breakdown.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Compliance constants do not define a positive-definite strain energy.
    #[error("definiteness violation: {0}")]
    DefinitenessViolation(String),
    /// The quadratic eigenproblem has a repeated root (rho = 1).
    #[error("degenerate eigenproblem: repeated Stroh root {root}")]
    DegenerateEigenproblem { root: C64 },
    /// A column normalizer sqrt((2/mu)(s22 - s11 mu^4)) vanished.
    #[error("Stroh normalizer vanished for mu = {mu}")]
    NormalizerBranchFailure { mu: C64 },
    /// |beta| >= 1: the bimaterial matrix H is not positive definite.
    #[error("oscillation index out of range: beta = {beta}")]
    OscillationOutOfRange { beta: f64 },
    /// The asymptotics matrix M1 is numerically singular.
    #[error("M1 matrix is singular (|det| = {det})")]
    SingularM1 { det: f64 },
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    DomainError(String),
    /// A surface matrix passed to the general transforms is not Hermitian.
    #[error("Hermiticity violation: defect {defect}")]
    HermiticityViolation { defect: f64 },
    /// The Betti-integral quadrature did not reach the requested tolerance.
    #[error("quadrature did not converge: estimated error {estimated_error}, tolerance {tolerance}")]
    QuadratureNonConvergence {
        estimated_error: f64,
        tolerance: f64,
    },
    /// The ODE oracle declines materials with rho = 1.
    #[error("degenerate material (rho = 1): the ODE oracle requires distinct roots")]
    DegenerateMaterial,
    /// The ODE coefficient system is singular (nu1 = nu2 numerically).
    #[error("singular coefficient system: nu1 = nu2 = {nu}")]
    SingularCoefficientSystem { nu: C64 },
    /// A loading violates the self-balance requirement.
    #[error("loading is not self-balanced: {0}")]
    UnbalancedLoading(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Threshold below which |rho - 1| is treated as the repeated-root case.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;
