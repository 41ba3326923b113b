//! Complex gamma function via the Lanczos approximation.
//!
//! Only Gamma(1/2 +- i*eps) with small |eps| is needed by the rest of the
//! crate, but the implementation is a full complex gamma valid on the
//! principal branch. Coefficients are the g = 7, n = 9 set from the GNU
//! Scientific Library. Accuracy is validated through the reflection identity
//! c+ c- = (i/2) cosh(pi eps) exercised by the acceptance suite.

use crate::complex2::{cr, C64};
use std::f64::consts::PI;

const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma(z) on the principal branch.
pub fn gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = (cr(PI) * z).sin();
        return cr(PI) / (s * gamma(cr(1.0) - z));
    }
    let zm = z - cr(1.0);
    let mut acc = cr(LANCZOS[0]);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        acc += cr(p) / (zm + cr(i as f64));
    }
    let t = zm + cr(G + 0.5);
    cr((2.0 * PI).sqrt()) * t.powc(zm + cr(0.5)) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex2::c;

    #[test]
    fn known_real_values() {
        assert!((gamma(cr(0.5)).re - PI.sqrt()).abs() < 1e-14);
        assert!(gamma(cr(0.5)).im.abs() < 1e-15);
        assert!((gamma(cr(1.0)).re - 1.0).abs() < 1e-14);
        assert!((gamma(cr(5.0)).re - 24.0).abs() < 1e-12);
        // reflection path
        assert!((gamma(cr(-0.5)).re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn modulus_on_critical_line() {
        // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
        for &y in &[0.0, 0.05, 0.1, 0.2, 0.3, 0.5] {
            let g = gamma(c(0.5, y));
            let lhs = g.norm_sqr();
            let rhs = PI / (PI * y).cosh();
            assert!(
                (lhs - rhs).abs() < 1e-14 * rhs.max(1.0),
                "y={y}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let z = c(0.5, 0.17);
        let a = gamma(z);
        let b = gamma(z.conj());
        assert!((a - b.conj()).norm() < 1e-15);
    }
}
