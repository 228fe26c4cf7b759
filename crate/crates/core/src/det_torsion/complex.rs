use rand::Rng;

use super::signs::GradedDims;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// Finite chain complex `C_m → … → C_0` over a field.
#[derive(Clone, PartialEq)]
pub struct ChainComplex<F> {
    dims: GradedDims,
    /// `boundaries[q - 1]` is `d_q : C_q → C_{q-1}` as a `dim C_{q-1} × dim C_q` matrix.
    boundaries: Vec<Matrix<F>>,
}

impl<F: Field> ChainComplex<F> {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(dims: GradedDims, boundaries: Vec<Matrix<F>>) -> Result<Self> {
        let m = dims.top_degree();
        if boundaries.len() != m {
            return Err(Error::ComplexInvalid(format!(
                "{} boundary matrices for top degree {m}",
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let q = i + 1;
            if d.rows() != dims.get(q - 1) || d.cols() != dims.get(q) {
                return Err(Error::ComplexInvalid(format!(
                    "d_{q} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims.get(q - 1),
                    dims.get(q)
                )));
            }
        }
        for q in 2..=m {
            let dd = boundaries[q - 2].mul(&boundaries[q - 1])?;
            if !dd.is_zero() {
                return Err(Error::ComplexInvalid(format!("d_{} d_{q} != 0", q - 1)));
            }
        }
        Ok(Self { dims, boundaries })
    }

    pub fn zero(top_degree: usize) -> Self {
        let dims = GradedDims::zero(top_degree);
        let boundaries = (0..top_degree).map(|_| Matrix::zeros(0, 0)).collect();
        Self { dims, boundaries }
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.top_degree()
    }

    /// `d_q`, or `None` for `q = 0` and `q > m`.
    pub fn boundary(&self, q: usize) -> Option<&Matrix<F>> {
        if q == 0 {
            None
        } else {
            self.boundaries.get(q - 1)
        }
    }

    pub fn boundaries(&self) -> &[Matrix<F>] {
        &self.boundaries
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ChainComplex<G> {
        ChainComplex {
            dims: self.dims.clone(),
            boundaries: self.boundaries.iter().map(|d| d.map(&f)).collect(),
        }
    }

    /// `C ⊕ C'` with the basis of each degree ordered `C` then `C'`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.top_degree() != other.top_degree() {
            return Err(Error::DegreeMismatch(self.top_degree(), other.top_degree()));
        }
        let dims = self
            .dims
            .dims()
            .iter()
            .zip(other.dims.dims())
            .map(|(a, b)| a + b)
            .collect();
        let boundaries = self
            .boundaries
            .iter()
            .zip(&other.boundaries)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Self::new(GradedDims::new(dims), boundaries)
    }

    pub fn is_acyclic(&self) -> bool {
        compute_homology(self)
            .ranks()
            .dims()
            .iter()
            .all(|&r| r == 0)
    }
}

/// Per-degree homology data: representative cycles and image lifts.
#[derive(Clone, PartialEq)]
pub struct HomologyDegree<F> {
    /// Columns are cycles whose classes form the chosen basis of `H_q`.
    pub reps: Matrix<F>,
    /// Columns `b_q` whose images under `d_q` form a basis of `im d_q`.
    pub lifts: Matrix<F>,
}

#[derive(Clone, PartialEq)]
pub struct HomologyData<F> {
    pub degrees: Vec<HomologyDegree<F>>,
}

impl<F: Field> HomologyData<F> {
    pub fn ranks(&self) -> GradedDims {
        GradedDims::new(self.degrees.iter().map(|d| d.reps.cols()).collect())
    }

    /// Same homology classes, different choices: representatives shifted
    /// by random boundaries, lifts taken from a random pivot order and
    /// shifted by random cycles.
    pub fn rechoose<R: Rng + ?Sized>(&self, complex: &ChainComplex<F>, rng: &mut R) -> Self {
        let m = complex.top_degree();
        let mut degrees = Vec::with_capacity(m + 1);
        for q in 0..=m {
            let n = complex.dims().get(q);
            let old = &self.degrees[q];
            let reps = match complex.boundary(q + 1) {
                Some(d) => {
                    let s = small_random(rng, d.cols(), old.reps.cols());
                    old.reps.add(&d.mul(&s).unwrap()).unwrap()
                }
                None => old.reps.clone(),
            };
            let lifts = match complex.boundary(q) {
                Some(d) => {
                    let ki = d.kernel_image_randomized(rng);
                    let s = small_random(rng, ki.kernel.cols(), ki.rank);
                    ki.image_lift.add(&ki.kernel.mul(&s).unwrap()).unwrap()
                }
                None => Matrix::zeros(n, 0),
            };
            degrees.push(HomologyDegree { reps, lifts });
        }
        Self { degrees }
    }
}

fn small_random<F: Field, R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix<F> {
    let data = (0..rows * cols)
        .map(|_| F::from_i64(rng.gen_range(-2..=2)))
        .collect();
    Matrix::from_vec(rows, cols, data).unwrap()
}

/// Homology with deterministic representatives (leftmost-pivot elimination).
pub fn compute_homology<F: Field>(complex: &ChainComplex<F>) -> HomologyData<F> {
    let m = complex.top_degree();
    let kis: Vec<Option<_>> = (0..=m)
        .map(|q| complex.boundary(q).map(Matrix::kernel_image_bases))
        .collect();
    let mut degrees = Vec::with_capacity(m + 1);
    for q in 0..=m {
        let n = complex.dims().get(q);
        let (cycles, lifts) = match &kis[q] {
            Some(ki) => (ki.kernel.clone(), ki.image_lift.clone()),
            None => (Matrix::identity(n), Matrix::zeros(n, 0)),
        };
        let boundaries = match (complex.boundary(q + 1), &kis.get(q + 1)) {
            (Some(d), Some(Some(ki))) => d.mul(&ki.image_lift).unwrap(),
            _ => Matrix::zeros(n, 0),
        };
        let nb = boundaries.cols();
        let stacked = boundaries.hcat(&cycles).unwrap();
        let pivots = stacked.pivot_columns();
        let chosen: Vec<usize> = pivots
            .into_iter()
            .filter(|&p| p >= nb)
            .map(|p| p - nb)
            .collect();
        degrees.push(HomologyDegree {
            reps: cycles.select_columns(&chosen),
            lifts,
        });
    }
    HomologyData { degrees }
}

/// Random complex over `Q` with top degree `≤ max_top` and `≤ max_dim`
/// cells per degree. `d_1` has entries in `{-2..2}`; each later boundary is
/// an integral kernel basis of the previous one times a `{-2..2}` matrix, so
/// `d ∘ d = 0` holds by construction.
pub fn random_complex<R: Rng + ?Sized>(
    rng: &mut R,
    max_top: usize,
    max_dim: usize,
) -> ChainComplex<crate::scalar::Rational> {
    use crate::scalar::Rational;
    use num_integer::Integer;
    use num_traits::One;

    let m = rng.gen_range(0..=max_top);
    let dims: Vec<usize> = (0..=m).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mut boundaries: Vec<Matrix<Rational>> = Vec::with_capacity(m);
    for q in 1..=m {
        let d = if q == 1 {
            small_random(rng, dims[0], dims[1])
        } else {
            let mut k = boundaries[q - 2].kernel_image_bases().kernel;
            for j in 0..k.cols() {
                let l = (0..k.rows()).fold(num_bigint::BigInt::one(), |acc, i| {
                    acc.lcm(k[(i, j)].denom())
                });
                let l = Rational::from_integer(l);
                for i in 0..k.rows() {
                    k[(i, j)] = k[(i, j)].clone() * l.clone();
                }
            }
            let r = small_random(rng, k.cols(), dims[q]);
            k.mul(&r).unwrap()
        };
        boundaries.push(d);
    }
    ChainComplex::new(GradedDims::new(dims), boundaries).expect("d∘d = 0 by construction")
}

impl<F: std::fmt::Display> std::fmt::Debug for ChainComplex<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChainComplex")
            .field("dims", &self.dims)
            .field("boundaries", &self.boundaries)
            .finish()
    }
}

impl<F: std::fmt::Display> std::fmt::Debug for HomologyDegree<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomologyDegree")
            .field("reps", &self.reps)
            .field("lifts", &self.lifts)
            .finish()
    }
}

impl<F: std::fmt::Display> std::fmt::Debug for HomologyData<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.degrees).finish()
    }
}
