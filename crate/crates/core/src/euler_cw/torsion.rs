use std::f64::consts::PI;

use num_traits::One;

use super::bundle::{twist, FlatBundle};
use super::complex::TwistedCWComplex;
use crate::det_torsion::{
    compute_homology, dualize, fuse, torsion_phi, CellFrame, DetLineCoord, GradedDims,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{ComplexSample, Field, RatFunc, Rational, FLOAT_TOL, POLE_TOL};

/// Euler structure `h·ξ_0`, stored as the offset `h ∈ H ≅ Z` from the base
/// structure `ξ_0` carried by the chosen cell lifts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EulerStructure {
    pub offset: i64,
}

impl EulerStructure {
    pub const BASE: Self = Self { offset: 0 };

    pub fn new(offset: i64) -> Self {
        Self { offset }
    }

    /// Torsor action of `h ∈ H`.
    pub fn act(self, h: i64) -> Self {
        Self {
            offset: self.offset + h,
        }
    }
}

/// Orientation of `det H_*(X; R)` relative to the reference frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomOrientation {
    Positive,
    Negative,
}

impl HomOrientation {
    pub fn sign(self) -> i64 {
        match self {
            HomOrientation::Positive => 1,
            HomOrientation::Negative => -1,
        }
    }

    pub fn from_sign(s: i64) -> Self {
        if s < 0 {
            HomOrientation::Negative
        } else {
            HomOrientation::Positive
        }
    }

    pub fn flip(self) -> Self {
        Self::from_sign(-self.sign())
    }
}

/// Torsion at a canonical Euler structure.
#[derive(Clone, Debug, PartialEq)]
pub struct AbsoluteTorsion<F> {
    pub value: DetLineCoord<F>,
    pub euler: EulerStructure,
    pub semi_characteristic: usize,
}

/// `τ(X, ξ; F)` as a coordinate against the standard cell frame and the
/// computed homology basis. For odd rank the result is multiplied by `η`.
pub fn torsion_euler<F: Field>(
    x: &TwistedCWComplex,
    xi: EulerStructure,
    bundle: &FlatBundle<F>,
    eta: HomOrientation,
) -> Result<DetLineCoord<F>> {
    let c = twist(x, bundle)?;
    let h = compute_homology(&c);
    let one = DetLineCoord::new(F::one(), "cells");
    let phi = torsion_phi(&c, &one, &CellFrame::Standard, &h)?;
    let mut value = phi.value * bundle.det_f(&[xi.offset])?;
    if bundle.rank() % 2 == 1 && eta == HomOrientation::Negative {
        value = -value;
    }
    let frame = if c.is_acyclic() {
        "acyclic"
    } else {
        "homology"
    };
    Ok(DetLineCoord::new(value, frame))
}

/// `τ_0(X, ξ) ∈ Q(t)`, the torsion for the universal line bundle.
pub fn universal_torsion(
    x: &TwistedCWComplex,
    xi: EulerStructure,
    eta: HomOrientation,
) -> Result<RatFunc> {
    let bundle = FlatBundle::universal();
    if !twist(x, &bundle)?.is_acyclic() {
        return Err(Error::ZeroTorsion);
    }
    Ok(torsion_euler(x, xi, &bundle, eta)?.value)
}

/// Characteristic class of the base structure, read off from
/// `bar τ_0 = ε t^{-c} τ_0`. Returns `(c, ε)`.
pub fn char_class_base(x: &TwistedCWComplex) -> Result<(i64, i64)> {
    let tau = universal_torsion(x, EulerStructure::BASE, HomOrientation::Positive)?;
    char_class_of(&tau)
}

/// `(c, ε)` with `bar τ = ε t^{-c} τ` for a nonzero `τ ∈ Q(t)`.
pub fn char_class_of(tau: &RatFunc) -> Result<(i64, i64)> {
    let ratio = tau.bar().try_div(tau).map_err(|_| Error::ZeroTorsion)?;
    let (coef, e) = ratio
        .as_monomial()
        .ok_or_else(|| Error::NotMonomialRatio(ratio.to_string()))?;
    let sign = if coef == Rational::one() {
        1
    } else if coef == -Rational::one() {
        -1
    } else {
        return Err(Error::NotMonomialRatio(ratio.to_string()));
    };
    if e % 2 != 0 {
        return Err(Error::ParityError(e));
    }
    Ok((-e, sign))
}

/// The Euler structure with `c(ξ) = 0`, i.e. `c(ξ_0)^{-1/2} ξ_0`.
pub fn canonical_euler(x: &TwistedCWComplex) -> Result<EulerStructure> {
    let (c, _) = char_class_base(x)?;
    canonical_from_class(c)
}

pub fn canonical_from_class(c: i64) -> Result<EulerStructure> {
    if c % 2 != 0 {
        return Err(Error::ParityError(c));
    }
    Ok(EulerStructure::new(-c / 2))
}

/// `T(F) = τ(X, ξ_can; F)` under condition (3.1) and an oriented `X`.
pub fn absolute_torsion<F: Field>(
    x: &TwistedCWComplex,
    bundle: &FlatBundle<F>,
    eta: HomOrientation,
) -> Result<AbsoluteTorsion<F>> {
    if !x.conditions31() || !x.orientable() {
        return Err(Error::Conditions31Violated);
    }
    let euler = canonical_euler(x)?;
    Ok(AbsoluteTorsion {
        value: torsion_euler(x, euler, bundle, eta)?,
        euler,
        semi_characteristic: x.semi_characteristic(),
    })
}

/// `⟨u, v⟩ = μ(u ⊗ D(v)) / τ` on `det H_*` with dimensions `h_dims`, where
/// `pairing` gives the duality between `H_q` and `H_{m-q}` and `tau_double`
/// is the torsion of `F ⊕ F*`.
pub fn pr_product_coords<F: Field>(
    u: &DetLineCoord<F>,
    v: &DetLineCoord<F>,
    h_dims: &GradedDims,
    pairing: &[Matrix<F>],
    tau_double: &F,
) -> Result<F> {
    if tau_double.is_zero() {
        return Err(Error::ZeroDenominatorTorsion);
    }
    let dv = dualize(v, h_dims, pairing)?;
    let fused = fuse(u, h_dims, &dv, &h_dims.dual())?;
    Ok(fused.value * tau_double.inv().expect("nonzero"))
}

/// Poincaré–Reidemeister product of two coordinates on `det H_*(X; F)` for an
/// acyclic `F`; the duality and fusion are then trivial.
pub fn pr_product<F: Field>(
    u: &F,
    v: &F,
    x: &TwistedCWComplex,
    bundle: &FlatBundle<F>,
) -> Result<F> {
    if !twist(x, bundle)?.is_acyclic() {
        return Err(Error::InvalidBundle(
            "the high-level product needs an acyclic bundle; use pr_product_coords".into(),
        ));
    }
    let double = bundle.direct_sum(&bundle.dual()?)?;
    let dc = twist(x, &double)?;
    if !dc.is_acyclic() {
        return Err(Error::ZeroDenominatorTorsion);
    }
    let tau = torsion_euler(x, EulerStructure::BASE, &double, HomOrientation::Positive)?;
    let h_dims = GradedDims::zero(x.dim());
    pr_product_coords(
        &DetLineCoord::new(u.clone(), "acyclic"),
        &DetLineCoord::new(v.clone(), "acyclic"),
        &h_dims,
        &vec![Matrix::zeros(0, 0); x.dim() + 1],
        &tau.value,
    )
}

/// `τ(X, ξ; F_a)` at a complex `a`, evaluated from the exact `τ_0`.
pub fn torsion_at_complex(
    x: &TwistedCWComplex,
    xi: EulerStructure,
    a: ComplexSample,
    eta: HomOrientation,
) -> Result<ComplexSample> {
    let tau = universal_torsion(x, xi, eta)?;
    evaluate_acyclic(&tau, a)
}

/// Value of a torsion function at `a`, rejecting zeros and poles.
pub fn evaluate_acyclic(tau: &RatFunc, a: ComplexSample) -> Result<ComplexSample> {
    let v = tau
        .eval_complex(a)
        .map_err(|_| Error::NonAcyclicBundle(format!("pole at {a}")))?;
    if v.norm() < POLE_TOL {
        return Err(Error::NonAcyclicBundle(format!("torsion vanishes at {a}")));
    }
    Ok(v)
}

fn check_unitary(a: ComplexSample) -> Result<()> {
    if (a.norm() - 1.0).abs() > FLOAT_TOL {
        return Err(Error::NonUnitaryMonodromy);
    }
    Ok(())
}

/// Canonical involution on `det H_*(X; F_a)` for unitary `a`. In the acyclic
/// case this is complex conjugation of the coordinate.
pub fn involution_bar(value: ComplexSample, a: ComplexSample) -> Result<ComplexSample> {
    check_unitary(a)?;
    Ok(value.conj())
}

/// Phase `arg(value) mod π`, in `[0, π)`.
pub fn phase(value: ComplexSample) -> Result<f64> {
    if value.norm() < POLE_TOL {
        return Err(Error::ZeroElement);
    }
    let p = value.arg().rem_euclid(PI);
    // rem_euclid can round up to π itself.
    Ok(if p >= PI { 0.0 } else { p })
}

/// Distance between two angles modulo `π`.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}
