use std::fmt;

use super::complex::{ChainComplex, HomologyData};
use super::signs::sign_n;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{sign_of, Field};

/// Scalar coordinate of a determinant-line element against a named frame.
///
/// On odd-degree factors `(det V_q)^{-1}` the frame is the dual of the
/// declared basis, so rescaling a degree-`q` basis by determinant `g`
/// rescales the coordinate by `g^{(-1)^{q+1}}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DetLineCoord<F> {
    pub value: F,
    pub frame: String,
}

impl<F: Field> DetLineCoord<F> {
    pub fn new(value: F, frame: impl Into<String>) -> Self {
        Self {
            value,
            frame: frame.into(),
        }
    }

    pub fn scaled(&self, g: &F) -> Self {
        Self::new(self.value.clone() * g.clone(), self.frame.clone())
    }
}

impl<F: fmt::Display> fmt::Display for DetLineCoord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.value, self.frame)
    }
}

/// Reference bases `ĉ_q` of the chain groups.
#[derive(Clone, PartialEq)]
pub enum CellFrame<F> {
    /// Unit vectors in every degree.
    Standard,
    /// Columns of `bases[q]` form `ĉ_q`.
    Bases(Vec<Matrix<F>>),
}

impl<F: Field> CellFrame<F> {
    fn det(&self, q: usize) -> Result<F> {
        match self {
            CellFrame::Standard => Ok(F::one()),
            CellFrame::Bases(b) => {
                let d = b
                    .get(q)
                    .ok_or_else(|| Error::ShapeMismatch(format!("no frame in degree {q}")))?
                    .det()?;
                if d.is_zero() {
                    return Err(Error::SingularAssembly { degree: q });
                }
                Ok(d)
            }
        }
    }
}

/// `[d(b_{q+1}) ĥ_q b_q / ĉ_q]` for each degree, before the alternating exponent.
pub fn transition_determinants<F: Field>(
    complex: &ChainComplex<F>,
    frame: &CellFrame<F>,
    homology: &HomologyData<F>,
) -> Result<Vec<F>> {
    let m = complex.top_degree();
    if homology.degrees.len() != m + 1 {
        return Err(Error::ShapeMismatch(
            "homology data has wrong length".into(),
        ));
    }
    (0..=m)
        .map(|q| {
            let n = complex.dims().get(q);
            let bounded = match (complex.boundary(q + 1), homology.degrees.get(q + 1)) {
                (Some(d), Some(next)) => d.mul(&next.lifts)?,
                _ => Matrix::zeros(n, 0),
            };
            let h = &homology.degrees[q];
            let assembled = bounded.hcat(&h.reps)?.hcat(&h.lifts)?;
            if assembled.rows() != assembled.cols() {
                return Err(Error::SingularAssembly { degree: q });
            }
            let det = assembled.det()?;
            if det.is_zero() {
                return Err(Error::SingularAssembly { degree: q });
            }
            Ok(det * frame.det(q)?.inv().unwrap())
        })
        .collect()
}

/// Coordinate of `φ_C(c)` relative to the homology volume element fixed by
/// `homology`: `(-1)^{N(C)} [c:h]` times the coordinate of `c`.
pub fn torsion_phi<F: Field>(
    complex: &ChainComplex<F>,
    c: &DetLineCoord<F>,
    frame: &CellFrame<F>,
    homology: &HomologyData<F>,
) -> Result<DetLineCoord<F>> {
    if c.value.is_zero() {
        return Err(Error::ZeroInput);
    }
    let dets = transition_determinants(complex, frame, homology)?;
    let mut acc = c.value.clone();
    for (q, d) in dets.into_iter().enumerate() {
        acc = if q % 2 == 0 {
            acc * d.inv().unwrap()
        } else {
            acc * d
        };
    }
    let n = sign_n(complex.dims(), &homology.ranks());
    Ok(DetLineCoord::new(sign_of::<F>(n.bit()) * acc, "homology"))
}

impl<F: fmt::Display> fmt::Debug for CellFrame<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellFrame::Standard => write!(f, "Standard"),
            CellFrame::Bases(b) => f.debug_tuple("Bases").field(b).finish(),
        }
    }
}
