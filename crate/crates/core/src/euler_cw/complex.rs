use num_traits::Zero;

use crate::det_torsion::{compute_homology, ChainComplex, GradedDims};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{LaurentPoly, RatFunc, Rational};

/// Matrix over the integral group ring `Z[t, t^-1]` of `H ≅ Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl GroupRingMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(p) = entries.iter().find(|p| !p.is_integral()) {
            return Err(Error::ComplexInvalid(format!(
                "non-integral group ring entry {p}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    /// The matrix over `Q(t)`.
    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        Matrix::from_vec(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .cloned()
                .map(RatFunc::from_laurent)
                .collect(),
        )
        .expect("shape checked")
    }

    /// Augmentation `t ↦ 1`.
    pub fn augment(&self) -> Matrix<Rational> {
        let one = Rational::from_integer(1.into());
        Matrix::from_vec(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .map(|p| p.eval_rational(&one).expect("1 is a unit"))
                .collect(),
        )
        .expect("shape checked")
    }
}

/// Cellular chain complex of the maximal free abelian cover of a closed
/// odd-dimensional complex `X` with `H = H_1(X)/Tors ≅ Z`, written over
/// `Z[t, t^-1]`, together with declared topological metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedCWComplex {
    cells: Vec<usize>,
    boundaries: Vec<GroupRingMatrix>,
    orientable: bool,
    betti: Vec<usize>,
    conditions31: bool,
}

impl TwistedCWComplex {
    /// Checks shapes, `d ∘ d = 0`, odd dimension, vanishing Euler
    /// characteristic and the declared Betti numbers against the untwisted
    /// homology.
    pub fn new(
        cells: Vec<usize>,
        boundaries: Vec<GroupRingMatrix>,
        orientable: bool,
        betti: Vec<usize>,
        conditions31: bool,
    ) -> Result<Self> {
        if cells.is_empty() || cells.len() % 2 == 1 {
            return Err(Error::ComplexInvalid(format!(
                "dimension must be odd, got {} cell degrees",
                cells.len()
            )));
        }
        let euler: i64 = cells
            .iter()
            .enumerate()
            .map(|(q, &n)| if q % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum();
        if euler != 0 {
            return Err(Error::ComplexInvalid(format!(
                "Euler characteristic {euler} != 0"
            )));
        }
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::ComplexInvalid(format!(
                "{} boundary maps for dimension {}",
                boundaries.len(),
                cells.len() - 1
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.rows != cells[i] || d.cols != cells[i + 1] {
                return Err(Error::ComplexInvalid(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    i + 1,
                    d.rows,
                    d.cols,
                    cells[i],
                    cells[i + 1]
                )));
            }
        }
        if betti.len() != cells.len() {
            return Err(Error::MetadataMismatch(format!(
                "{} Betti numbers for {} degrees",
                betti.len(),
                cells.len()
            )));
        }
        let x = Self {
            cells,
            boundaries,
            orientable,
            betti,
            conditions31,
        };
        // d ∘ d = 0 over the group ring is checked inside ChainComplex::new.
        x.over_qt()?;
        let untwisted = x.untwisted()?;
        let ranks = compute_homology(&untwisted).ranks();
        if ranks.dims() != x.betti.as_slice() {
            return Err(Error::MetadataMismatch(format!(
                "declared Betti numbers {:?}, homology has {:?}",
                x.betti,
                ranks.dims()
            )));
        }
        Ok(x)
    }

    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn boundaries(&self) -> &[GroupRingMatrix] {
        &self.boundaries
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn conditions31(&self) -> bool {
        self.conditions31
    }

    /// Semi-characteristic `Σ_{2i ≤ (m-1)/2} b_{2i}`.
    pub fn semi_characteristic(&self) -> usize {
        let half = (self.dim() - 1) / 2;
        (0..=half).step_by(2).map(|q| self.betti[q]).sum()
    }

    /// Same complex with every metadata field replaced.
    pub fn with_metadata(&self, orientable: bool, conditions31: bool) -> Self {
        Self {
            orientable,
            conditions31,
            ..self.clone()
        }
    }

    /// The universal twist, `t ↦ t ∈ Q(t)`.
    pub fn over_qt(&self) -> Result<ChainComplex<RatFunc>> {
        ChainComplex::new(
            GradedDims::new(self.cells.clone()),
            self.boundaries
                .iter()
                .map(GroupRingMatrix::to_ratfunc)
                .collect(),
        )
        .map_err(|e| match e {
            Error::ComplexInvalid(msg) => Error::ComplexInvalid(format!("over Z[t,t^-1]: {msg}")),
            e => e,
        })
    }

    /// Real cellular chains, `t ↦ 1`.
    pub fn untwisted(&self) -> Result<ChainComplex<Rational>> {
        ChainComplex::new(
            GradedDims::new(self.cells.clone()),
            self.boundaries
                .iter()
                .map(GroupRingMatrix::augment)
                .collect(),
        )
    }
}
