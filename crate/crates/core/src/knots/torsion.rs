use num_traits::{One, Zero};

use super::conway::ConwayPoly;
use super::pd::KnotDiagram;
use super::wirtinger::{fox_derivative, fox_matrix, wirtinger, WirtingerPresentation};
use crate::det_torsion::{
    compute_homology, torsion_phi, CellFrame, ChainComplex, DetLineCoord, GradedDims,
};
use crate::error::{Error, Result};
use crate::euler_cw::{
    char_class_of, evaluate_acyclic, universal_torsion, EulerStructure, GroupRingMatrix,
    HomOrientation, TwistedCWComplex,
};
use crate::matrix::Matrix;
use crate::scalar::{ComplexSample, LaurentPoly, RatFunc, Rational, POLE_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Defined up to `±t^k`.
    Raw,
    /// Bar-symmetric with the sign fixed by the Conway constant term.
    Canonical,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorsionRep {
    pub value: RatFunc,
    pub normalization: Normalization,
}

impl TorsionRep {
    pub fn raw(value: RatFunc) -> Self {
        Self {
            value,
            normalization: Normalization::Raw,
        }
    }
}

fn t_minus_one() -> LaurentPoly {
    LaurentPoly::from_int_coeffs(0, &[-1, 1])
}

fn one_minus_t() -> LaurentPoly {
    LaurentPoly::from_int_coeffs(0, &[1, -1])
}

fn to_qt(rows: &[Vec<LaurentPoly>]) -> Matrix<RatFunc> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().cloned().map(RatFunc::from_laurent).collect())
            .collect(),
    )
}

/// Minor of the Fox matrix with generator row `g` and relator column `r`
/// removed.
fn fox_minor(fox: &[Vec<LaurentPoly>], g: usize, r: usize) -> Result<RatFunc> {
    let rows: Vec<Vec<LaurentPoly>> = fox
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != g)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != r)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return Ok(RatFunc::one());
    }
    to_qt(&rows).det()
}

/// Representative `A(t)` of the exterior torsion: a nonzero Fox minor over
/// `t - 1`, so that `(1 - t) A(t)` is the Alexander polynomial up to `±t^k`.
/// The last relator and generator are deleted first; other minors are tried
/// in index order when that one vanishes.
pub fn exterior_torsion(d: &KnotDiagram) -> Result<TorsionRep> {
    let p = wirtinger(d)?;
    let fox = fox_matrix(&p);
    let n = p.generators;
    let m = p.relators.len();
    let mut det = None;
    if m == 0 {
        det = Some(RatFunc::one());
    } else {
        let order =
            std::iter::once((n - 1, m - 1)).chain((0..m).flat_map(|r| (0..n).map(move |g| (g, r))));
        for (g, r) in order {
            let v = fox_minor(&fox, g, r)?;
            if !v.is_zero() {
                det = Some(v);
                break;
            }
        }
    }
    let det = det.ok_or(Error::ZeroMinor)?;
    let value = det.try_div(&RatFunc::from_laurent(t_minus_one()))?;
    Ok(TorsionRep::raw(value))
}

/// `τ_0(X) = (1 - t)^{-1} A(t)` for the 0-surgery.
pub fn surgery_torsion(d: &KnotDiagram) -> Result<TorsionRep> {
    let a = exterior_torsion(d)?;
    Ok(TorsionRep::raw(
        a.value.try_div(&RatFunc::from_laurent(one_minus_t()))?,
    ))
}

/// Cellular chains of the exterior over `Q(t)`: generators in degree 1, all
/// relators but the last in degree 2.
pub fn exterior_complex(d: &KnotDiagram) -> Result<ChainComplex<RatFunc>> {
    let p = wirtinger(d)?;
    let n = p.generators;
    let fox = fox_matrix(&p);
    let d1 = Matrix::from_rows(vec![vec![RatFunc::from_laurent(t_minus_one()); n]]);
    let kept = n - 1;
    let d2 = Matrix::from_rows(
        fox.iter()
            .map(|row| {
                row.iter()
                    .take(kept)
                    .cloned()
                    .map(RatFunc::from_laurent)
                    .collect()
            })
            .collect(),
    );
    ChainComplex::new(GradedDims::new(vec![1, n, kept]), vec![d1, d2])
}

/// Torsion of [`exterior_complex`] from the chain-level definition.
pub fn exterior_torsion_phi(d: &KnotDiagram) -> Result<RatFunc> {
    let c = exterior_complex(d)?;
    if !c.is_acyclic() {
        return Err(Error::ZeroMinor);
    }
    let h = compute_homology(&c);
    let one = DetLineCoord::new(RatFunc::one(), "cells");
    Ok(torsion_phi(&c, &one, &CellFrame::Standard, &h)?.value)
}

/// CW complex of the 0-surgery `X_K` over `Z[t, t^-1]`.
///
/// Degree 2 holds the kept relators and the 2-cell glued along the
/// longitude `λ`; the 3-cell is bounded by `(t - 1) e_λ - T`, where the
/// torus chain `T` solves `d_2(T) = (t - 1) ∂λ` on the relator cells.
pub fn surgery_complex(d: &KnotDiagram) -> Result<TwistedCWComplex> {
    let p = wirtinger(d)?;
    surgery_complex_from(&p)
}

fn surgery_complex_from(p: &WirtingerPresentation) -> Result<TwistedCWComplex> {
    let n = p.generators;
    let kept = n - 1;
    let fox = fox_matrix(p);
    let lambda: Vec<LaurentPoly> = (0..n).map(|g| fox_derivative(&p.longitude, g)).collect();

    let d1 = GroupRingMatrix::from_rows(vec![vec![t_minus_one(); n]])?;
    let mut d2_rows = Vec::with_capacity(n);
    for g in 0..n {
        let mut row: Vec<LaurentPoly> = fox[g].iter().take(kept).cloned().collect();
        row.push(lambda[g].clone());
        d2_rows.push(row);
    }
    let d2 = GroupRingMatrix::from_rows(d2_rows)?;

    let torus = torus_chain(&fox, &lambda, kept)?;
    let mut d3_rows: Vec<Vec<LaurentPoly>> = torus.into_iter().map(|p| vec![-p]).collect();
    d3_rows.push(vec![t_minus_one()]);
    let d3 = GroupRingMatrix::from_rows(d3_rows)?;

    TwistedCWComplex::new(
        vec![1, n, n, 1],
        vec![d1, d2, d3],
        true,
        vec![1, 1, 1, 1],
        true,
    )
}

/// Integral solution `T` of `d_2(T) = (t - 1) ∂λ`.
fn torus_chain(
    fox: &[Vec<LaurentPoly>],
    lambda: &[LaurentPoly],
    kept: usize,
) -> Result<Vec<LaurentPoly>> {
    if kept == 0 {
        return Ok(Vec::new());
    }
    let n = fox.len();
    let a = to_qt(
        &fox.iter()
            .map(|row| row.iter().take(kept).cloned().collect())
            .collect::<Vec<_>>(),
    );
    let b: Vec<RatFunc> = lambda
        .iter()
        .map(|p| RatFunc::from_laurent(p * &t_minus_one()))
        .collect();
    // Overdetermined but consistent; solve on a nonsingular row subset.
    let mut sol = None;
    for skip in (0..n).rev() {
        let rows: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
        let sub = Matrix::from_rows(
            rows.iter()
                .map(|&i| (0..kept).map(|j| a[(i, j)].clone()).collect())
                .collect(),
        );
        if sub.det()?.is_zero() {
            continue;
        }
        let rhs: Vec<RatFunc> = rows.iter().map(|&i| b[i].clone()).collect();
        sol = sub.solve(&rhs);
        break;
    }
    let sol = sol.ok_or(Error::ZeroMinor)?;
    for i in 0..n {
        let mut acc = RatFunc::zero();
        for (j, s) in sol.iter().enumerate() {
            acc = acc + a[(i, j)].clone() * s.clone();
        }
        if acc != b[i] {
            return Err(Error::ComplexInvalid("longitude is not a boundary".into()));
        }
    }
    sol.into_iter()
        .map(|s| {
            s.as_laurent()
                .filter(|p| p.is_integral())
                .cloned()
                .ok_or_else(|| {
                    Error::ComplexInvalid(format!("torus chain entry {s} is not integral"))
                })
        })
        .collect()
}

/// `z^2 τ(u^2)` in `u`, the candidate for `∇(u - u^{-1})`.
fn z_squared_times_doubled(tau: &RatFunc) -> Result<LaurentPoly> {
    let z2 = LaurentPoly::from_int_coeffs(-2, &[1, 0, -2, 0, 1]);
    let p = tau.double_powers() * RatFunc::from_laurent(z2);
    p.as_laurent()
        .cloned()
        .ok_or_else(|| Error::NonPolynomialInZ(p.to_string()))
}

/// Shifts a raw torsion to the bar-symmetric representative and fixes the
/// sign so that the Conway constant term is `+1`. Returns the normalized
/// torsion and the applied sign.
pub fn canonical_normalize(r: &TorsionRep) -> Result<(TorsionRep, i64)> {
    let (c, eps) = char_class_of(&r.value)?;
    if eps != 1 {
        return Err(Error::NotMonomialRatio(format!(
            "bar ratio of {} is -t^{}",
            r.value, -c
        )));
    }
    let shifted = r.value.clone() * RatFunc::t_pow(-c / 2);
    let conway = ConwayPoly::from_laurent_in_u(&z_squared_times_doubled(&shifted)?)?;
    let sign = if conway.coeff(0) < 0.into() { -1 } else { 1 };
    let value = if sign < 0 { -shifted } else { shifted };
    Ok((
        TorsionRep {
            value,
            normalization: Normalization::Canonical,
        },
        sign,
    ))
}

/// Canonical `τ_0(X_K, ξ_can)` from the surgery CW complex, with the
/// homological orientation `η` that the normalization selected.
pub fn canonical_torsion(d: &KnotDiagram) -> Result<(TorsionRep, HomOrientation)> {
    let x = surgery_complex(d)?;
    let raw = universal_torsion(&x, EulerStructure::BASE, HomOrientation::Positive)?;
    let (rep, sign) = canonical_normalize(&TorsionRep::raw(raw))?;
    Ok((rep, HomOrientation::from_sign(sign)))
}

/// `∇_K` from the canonical torsion: `∇(t - t^{-1}) = (t - t^{-1})^2 τ_0(t^2)`.
pub fn conway_from_torsion(d: &KnotDiagram) -> Result<ConwayPoly> {
    let (rep, _) = canonical_torsion(d)?;
    conway_of_canonical(&rep.value)
}

pub fn conway_of_canonical(tau: &RatFunc) -> Result<ConwayPoly> {
    ConwayPoly::from_laurent_in_u(&z_squared_times_doubled(tau)?)
}

/// Alexander polynomial `(1 - t) A(t)` with lowest power `t^0` and value `+1`
/// at `t = 1`; the second entry is the sign removed to get there.
pub fn alexander_poly(d: &KnotDiagram) -> Result<(LaurentPoly, i64)> {
    let a = exterior_torsion(d)?;
    let p = a.value * RatFunc::from_laurent(one_minus_t());
    let p = p
        .as_laurent()
        .cloned()
        .ok_or_else(|| Error::NonPolynomialInZ(format!("Alexander quotient {p}")))?;
    let low = p.min_exp().unwrap_or(0);
    let p = p.shift(-low);
    let at_one = p.eval_rational(&Rational::one()).expect("1 is a unit");
    let sign = if at_one < Rational::zero() { -1 } else { 1 };
    let p = if sign < 0 { -p } else { p };
    Ok((p, sign))
}

/// `T(F_a)` for a rational `a`: the canonical torsion evaluated at `t = a`.
pub fn absolute_torsion_at(d: &KnotDiagram, a: &Rational) -> Result<Rational> {
    let (rep, _) = canonical_torsion(d)?;
    let (alex, _) = alexander_poly(d)?;
    check_acyclic_rational(&alex, a)?;
    rep.value
        .eval_rational(a)
        .map_err(|_| Error::NonAcyclicBundle(format!("a = {a}")))
}

fn check_acyclic_rational(alex: &LaurentPoly, a: &Rational) -> Result<()> {
    if a.is_zero() {
        return Err(Error::NonAcyclicBundle("a = 0 is not a monodromy".into()));
    }
    if a.is_one() {
        return Err(Error::NonAcyclicBundle(
            "a = 1, but acyclicity needs a != 1".into(),
        ));
    }
    if alex.eval_rational(a).is_some_and(|v| v.is_zero()) {
        return Err(Error::NonAcyclicBundle(format!(
            "a = {a} is a root of the Alexander polynomial"
        )));
    }
    Ok(())
}

/// `T(F_a)` for a complex `a`, with the acyclicity test done to `POLE_TOL`.
pub fn absolute_torsion_at_complex(d: &KnotDiagram, a: ComplexSample) -> Result<ComplexSample> {
    let (rep, _) = canonical_torsion(d)?;
    let (alex, _) = alexander_poly(d)?;
    absolute_torsion_from(&rep.value, &alex, a)
}

/// Evaluation behind [`absolute_torsion_at_complex`] for precomputed data.
pub fn absolute_torsion_from(
    tau: &RatFunc,
    alex: &LaurentPoly,
    a: ComplexSample,
) -> Result<ComplexSample> {
    if (a - 1.0).norm() < POLE_TOL {
        return Err(Error::NonAcyclicBundle(
            "a = 1, but acyclicity needs a != 1".into(),
        ));
    }
    if a.norm() < POLE_TOL {
        return Err(Error::NonAcyclicBundle("a = 0 is not a monodromy".into()));
    }
    if alex.eval_complex(a).norm() < POLE_TOL {
        return Err(Error::NonAcyclicBundle(format!(
            "a = {a} is a root of the Alexander polynomial"
        )));
    }
    evaluate_acyclic(tau, a)
}
