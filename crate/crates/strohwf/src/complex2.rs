//! Minimal complex 2-vector / 2x2-matrix arithmetic.
//!
//! Everything in this crate lives in two dimensions, so a pair of small copy
//! types beats pulling in a matrix library.

use num_complex::Complex64;

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Principal complex power x^s for real x > 0.
pub fn real_pow(x: f64, s: C64) -> C64 {
    (s * x.ln()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2c {
    pub x: C64,
    pub y: C64,
}

impl Vec2c {
    pub fn new(x: C64, y: C64) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(C64::ZERO, C64::ZERO)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.x * s, self.y * s)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.x.conj(), self.y.conj())
    }

    pub fn norm_max(&self) -> f64 {
        self.x.norm().max(self.y.norm())
    }

    pub fn re(&self) -> [f64; 2] {
        [self.x.re, self.y.re]
    }

    pub fn im_max(&self) -> f64 {
        self.x.im.abs().max(self.y.im.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2c {
    pub m11: C64,
    pub m12: C64,
    pub m21: C64,
    pub m22: C64,
}

impl Mat2c {
    pub fn new(m11: C64, m12: C64, m21: C64, m22: C64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn diag(a: C64, b: C64) -> Self {
        Self::new(a, C64::ZERO, C64::ZERO, b)
    }

    pub fn zero() -> Self {
        Self::new(C64::ZERO, C64::ZERO, C64::ZERO, C64::ZERO)
    }

    pub fn mul_vec(&self, v: &Vec2c) -> Vec2c {
        Vec2c::new(
            self.m11 * v.x + self.m12 * v.y,
            self.m21 * v.x + self.m22 * v.y,
        )
    }

    pub fn mul_mat(&self, o: &Self) -> Self {
        Self::new(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )
    }

    pub fn det(&self) -> C64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == 0.0 {
            return None;
        }
        Some(Self::new(
            self.m22 / d,
            -self.m12 / d,
            -self.m21 / d,
            self.m11 / d,
        ))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.m11 + o.m11,
            self.m12 + o.m12,
            self.m21 + o.m21,
            self.m22 + o.m22,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            self.m11 - o.m11,
            self.m12 - o.m12,
            self.m21 - o.m21,
            self.m22 - o.m22,
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.m11.conj(),
            self.m12.conj(),
            self.m21.conj(),
            self.m22.conj(),
        )
    }

    /// Entrywise real part, kept complex for composition.
    pub fn re_part(&self) -> Self {
        Self::new(
            cr(self.m11.re),
            cr(self.m12.re),
            cr(self.m21.re),
            cr(self.m22.re),
        )
    }

    /// Entrywise imaginary part, kept complex for composition.
    pub fn im_part(&self) -> Self {
        Self::new(
            cr(self.m11.im),
            cr(self.m12.im),
            cr(self.m21.im),
            cr(self.m22.im),
        )
    }

    pub fn norm_max(&self) -> f64 {
        self.m11
            .norm()
            .max(self.m12.norm())
            .max(self.m21.norm())
            .max(self.m22.norm())
    }

    /// max |M - M*^T|, zero iff Hermitian.
    pub fn hermitian_defect(&self) -> f64 {
        let a = (self.m11 - self.m11.conj()).norm();
        let b = (self.m12 - self.m21.conj()).norm();
        let d = (self.m22 - self.m22.conj()).norm();
        a.max(b).max(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat2c::new(c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0), c(-2.0, 4.0));
        let inv = m.inverse().unwrap();
        let id = m.mul_mat(&inv);
        assert!((id.m11 - cr(1.0)).norm() < 1e-14);
        assert!(id.m12.norm() < 1e-14);
        assert!(id.m21.norm() < 1e-14);
        assert!((id.m22 - cr(1.0)).norm() < 1e-14);
    }

    #[test]
    fn hermitian_defect_detects() {
        let h = Mat2c::new(cr(2.0), c(0.0, 0.5), c(0.0, -0.5), cr(3.0));
        assert_eq!(h.hermitian_defect(), 0.0);
        let n = Mat2c::new(cr(2.0), c(0.0, 0.5), c(0.0, 0.5), cr(3.0));
        assert!(n.hermitian_defect() > 0.9);
    }
}
