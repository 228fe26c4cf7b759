use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{is_integer, parse_rational, to_f64, Rational};
use super::Field;
use crate::error::{Error, Result};

/// Laurent polynomial in one variable `t` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn monomial(coeff: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_i64(c))
    }

    /// `t^exp`
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients `coeffs[i]` on `t^(low + i)`.
    pub fn from_int_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, Rational::from_i64(c))),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((c, e))` when the polynomial is the single term `c t^e`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(is_integer)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Substitutes `t ↦ t^k` (`k = -1` is the bar involution, `k = 2`
    /// doubles all powers).
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "t -> t^0 is not a ring automorphism");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Exact evaluation; `None` when `a = 0` meets a negative power.
    pub fn eval_rational(&self, a: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            acc += c * a.powi(e)?;
        }
        Some(acc)
    }

    pub fn eval_complex(&self, a: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, c)| a.powi(e as i32) * to_f64(c))
            .sum()
    }

    /// Substitutes a field element for `t`.
    pub fn eval_in<F: Field>(&self, a: &F) -> Option<F> {
        let mut acc = F::zero();
        for (&e, c) in &self.terms {
            let c = F::from_rational(c);
            acc = acc + c * a.powi(e)?;
        }
        Some(acc)
    }

    /// Dense coefficient vector of `t^{-min} p` (an ordinary polynomial).
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
                for (&e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub(crate) fn from_dense(low: i64, v: &[Rational]) -> Self {
        Self::from_terms(
            v.iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::t_pow(0)
    }
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, mag: &Rational, e: i64) -> fmt::Result {
    let unit = mag.is_one();
    match (e, unit) {
        (0, _) => write!(f, "{mag}"),
        (_, true) => write_t(f, e),
        (_, false) => {
            if is_integer(mag) {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*")?;
            }
            write_t(f, e)
        }
    }
}

fn write_t(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{e}")
    }
}

/// Descending powers, e.g. `t^2-t+1`, `2t-3/2*t^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            fmt_coeff_term(f, &c.abs(), e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Grammar: `poly := ["+"|"-"] term (("+"|"-") term)*`,
/// `term := coeff | [coeff ["*"]] "t" ["^" ["-"] digits]`,
/// `coeff := digits ["/" digits]`. Whitespace is ignored.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: format!("invalid Laurent polynomial `{s}`: {msg}"),
        };
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let mut negative = false;
            match chars[i] {
                '+' => i += 1,
                '-' => {
                    negative = true;
                    i += 1
                }
                _ if first => {}
                c => return Err(bad(&format!("unexpected `{c}`"))),
            }
            first = false;
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let coeff_str: String = chars[start..i].iter().collect();
            let mut coeff = if coeff_str.is_empty() {
                Rational::one()
            } else {
                parse_rational(&coeff_str).map_err(|_| bad("bad coefficient"))?
            };
            if i < chars.len() && chars[i] == '*' {
                if coeff_str.is_empty() {
                    return Err(bad("`*` needs a coefficient"));
                }
                i += 1;
                if i >= chars.len() || chars[i] != 't' {
                    return Err(bad("`*` must be followed by `t`"));
                }
            }
            let mut exp = 0i64;
            if i < chars.len() && chars[i] == 't' {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e: String = chars[es..i].iter().collect();
                    exp = e.parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if coeff_str.is_empty() {
                return Err(bad("missing term"));
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = p("1-t+2t^-1");
        assert_eq!(f.coeff(0), rat(1, 1));
        assert_eq!(f.coeff(1), rat(-1, 1));
        assert_eq!(f.coeff(-1), rat(2, 1));
        assert_eq!(f.to_string(), "-t+1+2t^-1");
        assert_eq!(p("3/2*t^2").to_string(), "3/2*t^2");
        assert_eq!(p("3/2t^2"), p("3/2*t^2"));
        assert_eq!(p("t - t").to_string(), "0");
        assert_eq!(p("0"), LaurentPoly::zero());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1+*t".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn bar_and_double() {
        assert_eq!(p("t-t^-1").substitute_power(2), p("t^2-t^-2"));
        assert_eq!(p("1-t").bar(), p("1-t^-1"));
        assert_eq!(p("3").substitute_power(2), p("3"));
    }

    #[test]
    fn eval() {
        let f = p("t-1+t^-1");
        assert_eq!(f.eval_rational(&rat(2, 1)).unwrap(), rat(3, 2));
        assert!(f.eval_rational(&rat(0, 1)).is_none());
        let th = 0.7f64;
        let z = f.eval_complex(Complex64::from_polar(1.0, th));
        assert!((z.re - (2.0 * th.cos() - 1.0)).abs() < 1e-12);
        assert!(z.im.abs() < 1e-12);
    }
}
