use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{LaurentPoly, Rational};

/// Integer polynomial in `z`; `coeffs[k]` is the coefficient of `z^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ConwayPoly {
    coeffs: Vec<BigInt>,
}

impl ConwayPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn has_only_even_powers(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// `z · self`.
    pub fn mul_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(BigInt::zero());
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    /// `∇(u - u^{-1})` as a Laurent polynomial in `u`.
    pub fn eval_u(&self) -> LaurentPoly {
        let z = LaurentPoly::from_int_coeffs(-1, &[-1, 0, 1]);
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &z + LaurentPoly::constant(Rational::from_integer(c.clone()));
        }
        acc
    }

    /// Value at `z^2 = s` for an even polynomial.
    pub fn eval_z_squared(&self, s: &Rational) -> Option<Rational> {
        if !self.has_only_even_powers() {
            return None;
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().step_by(2).rev() {
            acc = acc * s.clone() + Rational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Writes a Laurent polynomial in `u` as a polynomial in `z = u - u^{-1}`.
    /// Fails unless the input is such a polynomial with integer coefficients.
    pub fn from_laurent_in_u(p: &LaurentPoly) -> Result<Self> {
        let fail = || Error::NonPolynomialInZ(p.to_string());
        let mut rest = p.clone();
        let mut coeffs: Vec<BigInt> = Vec::new();
        let z = LaurentPoly::from_int_coeffs(-1, &[-1, 0, 1]);
        while let Some(top) = rest.max_exp() {
            if top < 0 {
                return Err(fail());
            }
            let c = rest.coeff(top);
            if !c.is_integer() {
                return Err(fail());
            }
            let k = top as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] = c.to_integer();
            let mut zk = LaurentPoly::one();
            for _ in 0..k {
                zk = &zk * &z;
            }
            rest = rest - zk.scale(&c);
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConwayPoly({self})")
    }
}
