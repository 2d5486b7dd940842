//! Complex numbers carried to first order in the velocity ratio ε = v/c.
//!
//! A [`Jet1`] is `val + ε·eps` with both parts complex. Products drop the ε²
//! term, so any expression assembled from jets is automatically truncated at
//! linear order in the velocity. ε itself is real, which is what makes
//! [`Jet1::conj`] and [`Jet1::norm_sqr`] act part-wise.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Jet1 {
    /// Order-ε⁰ part.
    pub val: Complex64,
    /// Coefficient of ε.
    pub eps: Complex64,
}

impl Jet1 {
    pub const ZERO: Jet1 = Jet1::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    pub const ONE: Jet1 = Jet1::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    /// The velocity ratio itself, `0 + 1·ε`.
    pub const EPSILON: Jet1 = Jet1::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));

    pub const fn new(val: Complex64, eps: Complex64) -> Self {
        Jet1 { val, eps }
    }

    /// A velocity-independent value.
    pub const fn constant(val: Complex64) -> Self {
        Jet1::new(val, Complex64::new(0.0, 0.0))
    }

    pub const fn real(val: f64, eps: f64) -> Self {
        Jet1::new(Complex64::new(val, 0.0), Complex64::new(eps, 0.0))
    }

    /// `1 + s·ε`, the Doppler weights that appear throughout the moving-frame algebra.
    pub const fn one_plus(s: f64) -> Self {
        Jet1::real(1.0, s)
    }

    /// Multiplicative inverse, `(a + εb)⁻¹ = a⁻¹ − ε b a⁻²`.
    pub fn inv(self) -> Result<Jet1> {
        if self.val.norm_sqr() == 0.0 {
            return Err(Error::DivisionByZeroVal);
        }
        let inv = self.val.inv();
        Ok(Jet1::new(inv, -self.eps * inv * inv))
    }

    pub fn checked_div(self, rhs: Jet1) -> Result<Jet1> {
        Ok(self * rhs.inv()?)
    }

    pub fn conj(self) -> Jet1 {
        Jet1::new(self.val.conj(), self.eps.conj())
    }

    /// `|z|²` as a real-valued jet: `|a|² + ε·2 Re(a* b)`.
    pub fn norm_sqr(self) -> Jet1 {
        Jet1::real(self.val.norm_sqr(), 2.0 * (self.val.conj() * self.eps).re)
    }

    /// Real part of both components.
    pub fn re(self) -> Jet1 {
        Jet1::real(self.val.re, self.eps.re)
    }

    /// Imaginary part of both components.
    pub fn im(self) -> Jet1 {
        Jet1::real(self.val.im, self.eps.im)
    }

    pub fn scale(self, k: f64) -> Jet1 {
        Jet1::new(self.val * k, self.eps * k)
    }

    /// Integer power, truncated: `(a + εb)^n = aⁿ + ε n aⁿ⁻¹ b`.
    pub fn powu(self, n: u32) -> Jet1 {
        if n == 0 {
            return Jet1::ONE;
        }
        let lower = self.val.powu(n - 1);
        Jet1::new(lower * self.val, self.eps * lower * n as f64)
    }

    /// Value at a concrete ε, `val + ε·eps`.
    pub fn eval(self, eps: f64) -> Complex64 {
        self.val + self.eps * eps
    }

    pub fn is_finite(self) -> bool {
        self.val.is_finite() && self.eps.is_finite()
    }

    /// Largest absolute difference between matching parts.
    pub fn max_abs_diff(self, other: Jet1) -> f64 {
        (self.val - other.val).norm().max((self.eps - other.eps).norm())
    }
}

impl From<Complex64> for Jet1 {
    fn from(val: Complex64) -> Self {
        Jet1::constant(val)
    }
}

impl From<f64> for Jet1 {
    fn from(val: f64) -> Self {
        Jet1::real(val, 0.0)
    }
}

impl fmt::Display for Jet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ε({})", self.val, self.eps)
    }
}

impl Add for Jet1 {
    type Output = Jet1;
    fn add(self, rhs: Jet1) -> Jet1 {
        Jet1::new(self.val + rhs.val, self.eps + rhs.eps)
    }
}

impl Sub for Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: Jet1) -> Jet1 {
        Jet1::new(self.val - rhs.val, self.eps - rhs.eps)
    }
}

impl Mul for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: Jet1) -> Jet1 {
        Jet1::new(self.val * rhs.val, self.val * rhs.eps + self.eps * rhs.val)
    }
}

/// Unchecked division; a zero value part yields non-finite parts the same way
/// complex division does. Use [`Jet1::checked_div`] where a pole is an error.
impl Div for Jet1 {
    type Output = Jet1;
    fn div(self, rhs: Jet1) -> Jet1 {
        let inv = rhs.val.inv();
        self * Jet1::new(inv, -rhs.eps * inv * inv)
    }
}

impl Neg for Jet1 {
    type Output = Jet1;
    fn neg(self) -> Jet1 {
        Jet1::new(-self.val, -self.eps)
    }
}

impl Add<Complex64> for Jet1 {
    type Output = Jet1;
    fn add(self, rhs: Complex64) -> Jet1 {
        Jet1::new(self.val + rhs, self.eps)
    }
}

impl Sub<Complex64> for Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: Complex64) -> Jet1 {
        Jet1::new(self.val - rhs, self.eps)
    }
}

impl Mul<Complex64> for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: Complex64) -> Jet1 {
        Jet1::new(self.val * rhs, self.eps * rhs)
    }
}

impl Mul<f64> for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: f64) -> Jet1 {
        self.scale(rhs)
    }
}

impl Mul<Jet1> for Complex64 {
    type Output = Jet1;
    fn mul(self, rhs: Jet1) -> Jet1 {
        rhs * self
    }
}

impl Mul<Jet1> for f64 {
    type Output = Jet1;
    fn mul(self, rhs: Jet1) -> Jet1 {
        rhs.scale(self)
    }
}

impl AddAssign for Jet1 {
    fn add_assign(&mut self, rhs: Jet1) {
        *self = *self + rhs;
    }
}

impl SubAssign for Jet1 {
    fn sub_assign(&mut self, rhs: Jet1) {
        *self = *self - rhs;
    }
}

impl MulAssign for Jet1 {
    fn mul_assign(&mut self, rhs: Jet1) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Jet1 {
    fn sum<I: Iterator<Item = Jet1>>(iter: I) -> Jet1 {
        iter.fold(Jet1::ZERO, |acc, x| acc + x)
    }
}

/// Scalars in which a velocity-dependent expression can be written once and
/// evaluated either linearized ([`Jet1`]) or at a finite ε ([`Complex64`]).
pub trait VelocityScalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn lift(c: Complex64) -> Self;
    /// The velocity ratio: the symbolic ε for jets, the number `h` for complex values.
    fn velocity(h: f64) -> Self;
    fn conj(self) -> Self;
}

impl VelocityScalar for Jet1 {
    fn lift(c: Complex64) -> Self {
        Jet1::constant(c)
    }
    fn velocity(_h: f64) -> Self {
        Jet1::EPSILON
    }
    fn conj(self) -> Self {
        Jet1::conj(self)
    }
}

impl VelocityScalar for Complex64 {
    fn lift(c: Complex64) -> Self {
        c
    }
    fn velocity(h: f64) -> Self {
        Complex64::new(h, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
}
