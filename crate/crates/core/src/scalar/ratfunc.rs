use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::Rational;
use super::{Field, LaurentPoly, POLE_TOL};
use crate::error::{Error, Result};

/// Element of the fraction field `Q(t)`.
///
/// Canonical form: the denominator is an ordinary monic polynomial with
/// nonzero constant term, coprime to the numerator. Any power of `t` lives
/// in the numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Dense polynomial division, `a = q*b + r`. `b` must be nonzero and trimmed.
fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn monic_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lc) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lc;
        }
    }
    x
}

fn exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = divrem(a, b);
    debug_assert!(r.is_empty());
    q
}

impl RatFunc {
    /// Builds `num/den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (dlo, mut dv) = den.to_dense();
        let (nlo, mut nv) = num.shift(-dlo).to_dense();
        trim(&mut dv);
        if dv.len() > 1 {
            let g = monic_gcd(&nv, &dv);
            if g.len() > 1 {
                nv = exact_div(&nv, &g);
                dv = exact_div(&dv, &g);
            }
        }
        let lc = dv.last().unwrap().clone();
        for c in nv.iter_mut() {
            *c /= &lc;
        }
        for c in dv.iter_mut() {
            *c /= &lc;
        }
        Ok(Self {
            num: LaurentPoly::from_dense(nlo, &nv),
            den: LaurentPoly::from_dense(0, &dv),
        })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn t() -> Self {
        Self::from_laurent(LaurentPoly::t_pow(1))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::t_pow(e))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `Some((c, e))` when `self = c t^e`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        self.as_laurent().and_then(|p| p.as_monomial())
    }

    fn map_power(&self, k: i64) -> Self {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
            .expect("t -> t^k keeps a nonzero denominator nonzero")
    }

    /// `t ↦ t^{-1}`.
    pub fn bar(&self) -> Self {
        self.map_power(-1)
    }

    /// `f(t) ↦ f(t^2)`.
    pub fn double_powers(&self) -> Self {
        self.map_power(2)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs).ok_or(Error::DivisionByZero)
    }

    pub fn eval_rational(&self, a: &Rational) -> Result<Rational> {
        let pole = || Error::PoleAtEvaluationPoint(a.to_string());
        let d = self.den.eval_rational(a).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.eval_rational(a).ok_or_else(pole)?;
        Ok(n / d)
    }

    pub fn eval_complex(&self, a: Complex64) -> Result<Complex64> {
        let pole = || Error::PoleAtEvaluationPoint(format!("{a}"));
        if a.norm() <= POLE_TOL && self.num.min_exp().is_some_and(|e| e < 0) {
            return Err(pole());
        }
        let d = self.den.eval_complex(a);
        if d.norm() <= POLE_TOL {
            return Err(pole());
        }
        Ok(self.num.eval_complex(a) / d)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }
}

impl Add for RatFunc {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den).unwrap();
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        Self::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for RatFunc {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(&self.num * &rhs.num);
        }
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).unwrap())
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(r.clone()))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Accepts a bare Laurent polynomial or `(num)/(den)`.
impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let bad = || Error::Parse {
                line: 0,
                msg: format!("invalid rational function `{s}`"),
            };
            let close = rest.find(')').ok_or_else(bad)?;
            let num: LaurentPoly = rest[..close].parse()?;
            let tail = rest[close + 1..].trim();
            if tail.is_empty() {
                return Ok(Self::from_laurent(num));
            }
            let den = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|d| d.strip_prefix('('))
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(bad)?;
            return Self::new(num, den.parse()?);
        }
        Ok(Self::from_laurent(s.parse()?))
    }
}
