//! Mod-2 sign bookkeeping for determinant lines.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Element of `Z/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignResidue(u8);

impl SignResidue {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    pub fn new(n: usize) -> Self {
        Self((n % 2) as u8)
    }

    pub fn bit(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    /// `(-1)^self` as an integer.
    pub fn sign(self) -> i64 {
        if self.0 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Add for SignResidue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl Mul for SignResidue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 & rhs.0)
    }
}

impl std::iter::Sum for SignResidue {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for SignResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dimensions of a graded vector space `V_0 ⊕ … ⊕ V_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedDims(Vec<usize>);

impl GradedDims {
    /// Panics on an empty list; there is always a degree 0.
    pub fn new(dims: Vec<usize>) -> Self {
        assert!(!dims.is_empty(), "graded dims need at least degree 0");
        Self(dims)
    }

    pub fn zero(top_degree: usize) -> Self {
        Self(vec![0; top_degree + 1])
    }

    pub fn top_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, q: usize) -> usize {
        self.0.get(q).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `V'_q = (V_{m-q})^*`.
    pub fn dual(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Partial sums `α_q = Σ_{j≤q} dim V_j mod 2`.
    pub fn alpha(&self) -> Vec<SignResidue> {
        let mut acc = 0usize;
        self.0
            .iter()
            .map(|d| {
                acc += d;
                SignResidue::new(acc)
            })
            .collect()
    }
}

impl From<Vec<usize>> for GradedDims {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}

/// `(α(C), β(C))` from chain dimensions and homology ranks.
pub fn alpha_beta(
    chain: &GradedDims,
    homology: &GradedDims,
) -> (Vec<SignResidue>, Vec<SignResidue>) {
    (chain.alpha(), homology.alpha())
}

/// `N(C) = Σ_q α_q(C) β_q(C)`.
pub fn sign_n(chain: &GradedDims, homology: &GradedDims) -> SignResidue {
    let (a, b) = alpha_beta(chain, homology);
    a.into_iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `M(V,W) = Σ_{q=1}^m α_{q-1}(V) α_q(W)`.
pub fn fusion_sign(v: &GradedDims, w: &GradedDims) -> Result<SignResidue> {
    if v.top_degree() != w.top_degree() {
        return Err(Error::DegreeMismatch(v.top_degree(), w.top_degree()));
    }
    let (av, aw) = (v.alpha(), w.alpha());
    Ok((1..=v.top_degree()).map(|q| av[q - 1] * aw[q]).sum())
}

/// `s(V) = Σ_{q=1}^m α_{q-1}(V) α_q(V) + Σ_{q=0}^{(m-1)/2} α_{2q}(V)`, `m` odd.
pub fn duality_sign(v: &GradedDims) -> Result<SignResidue> {
    let m = v.top_degree();
    if m % 2 == 0 {
        return Err(Error::EvenTopDegree(m));
    }
    let a = v.alpha();
    let adjacent: SignResidue = (1..=m).map(|q| a[q - 1] * a[q]).sum();
    let even: SignResidue = (0..=(m - 1) / 2).map(|q| a[2 * q]).sum();
    Ok(adjacent + even)
}
