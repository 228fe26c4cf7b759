use super::phi::DetLineCoord;
use super::signs::{duality_sign, fusion_sign, GradedDims};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{sign_of, Field};

/// Coordinate of `μ(v ⊗ w)` in the concatenated frame of `V ⊕ W`
/// (per degree: `V`-basis then `W`-basis).
pub fn fuse<F: Field>(
    v: &DetLineCoord<F>,
    v_dims: &GradedDims,
    w: &DetLineCoord<F>,
    w_dims: &GradedDims,
) -> Result<DetLineCoord<F>> {
    let m = fusion_sign(v_dims, w_dims)?;
    Ok(DetLineCoord::new(
        sign_of::<F>(m.bit()) * v.value.clone() * w.value.clone(),
        format!("{}+{}", v.frame, w.frame),
    ))
}

/// Coordinate of `D(v) ∈ det V'` in the frame of `V'` described by
/// `pairing`.
///
/// `pairing[q]` is the square matrix pairing the chosen basis of `V'_q`
/// (rows) with the basis of `V_{m-q}` underlying `v` (columns). Identity
/// blocks mean the chosen basis is the dual basis.
pub fn dualize<F: Field>(
    v: &DetLineCoord<F>,
    v_dims: &GradedDims,
    pairing: &[Matrix<F>],
) -> Result<DetLineCoord<F>> {
    let s = duality_sign(v_dims)?;
    let m = v_dims.top_degree();
    if pairing.len() != m + 1 {
        return Err(Error::ShapeMismatch(format!(
            "{} pairing blocks for top degree {m}",
            pairing.len()
        )));
    }
    let mut acc = sign_of::<F>(s.bit()) * v.value.clone();
    for (q, p) in pairing.iter().enumerate() {
        let n = v_dims.get(m - q);
        if p.rows() != n || p.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "pairing block {q} is {}x{}, expected {n}x{n}",
                p.rows(),
                p.cols()
            )));
        }
        let det = p.det()?;
        let inv = det.inv().ok_or(Error::DegeneratePairing(q))?;
        acc = if q % 2 == 0 { acc * inv } else { acc * det };
    }
    Ok(DetLineCoord::new(acc, format!("dual({})", v.frame)))
}

/// Identity pairing blocks for `V`.
pub fn identity_pairing<F: Field>(v_dims: &GradedDims) -> Vec<Matrix<F>> {
    v_dims
        .dual()
        .dims()
        .iter()
        .map(|&n| Matrix::identity(n))
        .collect()
}
