//! The scalar tower: exact rationals, Laurent polynomials in `t`, their
//! fraction field, and complex samples for floating evaluation.

mod laurent;
mod ratfunc;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, Rational};

/// Floating complex value used by the unit-circle checks.
pub type ComplexSample = num_complex::Complex64;

/// Tolerance for floating assertions.
pub const FLOAT_TOL: f64 = 1e-9;
/// Magnitude below which a floating denominator counts as a pole.
pub const POLE_TOL: f64 = 1e-12;

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// `self^e` for any integer exponent; `None` when inverting zero.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * sq.clone();
            }
            sq = sq.clone() * sq;
            n >>= 1;
        }
        Some(acc)
    }
}

/// `(-1)^bit` in any field.
pub fn sign_of<F: Field>(bit: u8) -> F {
    if bit % 2 == 0 {
        F::one()
    } else {
        -F::one()
    }
}

#[cfg(test)]
mod tests;
