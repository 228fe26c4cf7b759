use std::collections::BTreeMap;

use super::complex::TwistedCWComplex;
use crate::det_torsion::{ChainComplex, GradedDims};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, LaurentPoly, RatFunc};

/// Flat vector bundle given by monodromy matrices, one per generator of `H`.
#[derive(Clone, PartialEq)]
pub struct FlatBundle<F> {
    monodromy: Vec<Matrix<F>>,
}

impl<F: Field> FlatBundle<F> {
    pub fn new(monodromy: Vec<Matrix<F>>) -> Result<Self> {
        let rank = match monodromy.first() {
            Some(m) => m.rows(),
            None => return Err(Error::InvalidBundle("no generators".into())),
        };
        if rank == 0 {
            return Err(Error::InvalidBundle("rank 0".into()));
        }
        for m in &monodromy {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::InvalidBundle(format!(
                    "monodromy is {}x{}, rank is {rank}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.det()?.is_zero() {
                return Err(Error::InvalidBundle("singular monodromy".into()));
            }
        }
        for (i, a) in monodromy.iter().enumerate() {
            for b in &monodromy[i + 1..] {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::NonCommutingMonodromy);
                }
            }
        }
        Ok(Self { monodromy })
    }

    /// `F_a`: rank one, monodromy `a` around the generator.
    pub fn line(a: F) -> Result<Self> {
        Self::new(vec![Matrix::from_rows(vec![vec![a]])])
    }

    pub fn trivial(rank: usize) -> Result<Self> {
        Self::new(vec![Matrix::identity(rank)])
    }

    pub fn rank(&self) -> usize {
        self.monodromy[0].rows()
    }

    pub fn generators(&self) -> usize {
        self.monodromy.len()
    }

    pub fn monodromy(&self) -> &[Matrix<F>] {
        &self.monodromy
    }

    /// `det_F(h) = Π det(M_i)^{h_i}`.
    pub fn det_f(&self, h: &[i64]) -> Result<F> {
        if h.len() != self.monodromy.len() {
            return Err(Error::InvalidBundle(format!(
                "element of rank {} for {} generators",
                h.len(),
                self.monodromy.len()
            )));
        }
        let mut acc = F::one();
        for (m, &e) in self.monodromy.iter().zip(h) {
            acc = acc * m.det()?.powi(e).ok_or(Error::DivisionByZero)?;
        }
        Ok(acc)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.generators() != other.generators() {
            return Err(Error::InvalidBundle("generator counts differ".into()));
        }
        Self::new(
            self.monodromy
                .iter()
                .zip(&other.monodromy)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        )
    }

    /// Dual bundle `F*`, monodromy `(M^T)^{-1}`.
    pub fn dual(&self) -> Result<Self> {
        let inv: Result<Vec<_>> = self
            .monodromy
            .iter()
            .map(|m| Ok(m.inverse()?.transpose()))
            .collect();
        Self::new(inv?)
    }

    /// Same bundle with entries mapped into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<FlatBundle<G>> {
        FlatBundle::new(self.monodromy.iter().map(|m| m.map(&f)).collect())
    }
}

impl FlatBundle<RatFunc> {
    /// The universal line bundle, monodromy `t` over `Q(t)`.
    pub fn universal() -> Self {
        Self::line(RatFunc::t()).expect("t is a unit")
    }
}

impl<F: Field> std::fmt::Debug for FlatBundle<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("FlatBundle").field(&self.monodromy).finish()
    }
}

/// Power cache for one monodromy matrix.
struct Powers<F> {
    base: Matrix<F>,
    inverse: Matrix<F>,
    cache: BTreeMap<i64, Matrix<F>>,
}

impl<F: Field> Powers<F> {
    fn new(base: &Matrix<F>) -> Result<Self> {
        Ok(Self {
            inverse: base.inverse()?,
            base: base.clone(),
            cache: BTreeMap::new(),
        })
    }

    fn get(&mut self, k: i64) -> Matrix<F> {
        if let Some(m) = self.cache.get(&k) {
            return m.clone();
        }
        let step = if k < 0 { &self.inverse } else { &self.base };
        let mut acc = Matrix::identity(self.base.rows());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(step).expect("square");
        }
        self.cache.insert(k, acc.clone());
        acc
    }

    fn substitute(&mut self, p: &LaurentPoly) -> Matrix<F> {
        let n = self.base.rows();
        let mut acc = Matrix::zeros(n, n);
        for (k, c) in p.terms() {
            let term = self.get(k).scale(&F::from_rational(c));
            acc = acc.add(&term).expect("same shape");
        }
        acc
    }
}

/// `C_*(X; F)`: every group ring entry `p(t)` becomes the block `p(M)`.
/// Cell `i` of degree `q` spans coordinates `i·rank .. (i+1)·rank`.
pub fn twist<F: Field>(x: &TwistedCWComplex, bundle: &FlatBundle<F>) -> Result<ChainComplex<F>> {
    if bundle.generators() != 1 {
        return Err(Error::InvalidBundle(format!(
            "H has rank 1, bundle has {} generators",
            bundle.generators()
        )));
    }
    let r = bundle.rank();
    let mut powers = Powers::new(&bundle.monodromy[0])?;
    let mut mats = Vec::with_capacity(x.boundaries().len());
    for d in x.boundaries() {
        let mut out = Matrix::zeros(d.rows() * r, d.cols() * r);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let p = d.get(i, j);
                if p.is_empty() {
                    continue;
                }
                let block = powers.substitute(p);
                for a in 0..r {
                    for b in 0..r {
                        out[(i * r + a, j * r + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        mats.push(out);
    }
    ChainComplex::new(
        GradedDims::new(x.cells().iter().map(|n| n * r).collect()),
        mats,
    )
}
