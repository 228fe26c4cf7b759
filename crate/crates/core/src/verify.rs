//! Verification suite: each check recomputes a claim through an independent
//! route and reports a pass/fail line with a reproducible witness.

use std::f64::consts::PI;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::det_torsion::{
    compute_homology, duality_sign, fusion_sign, random_complex, sign_n, torsion_phi, CellFrame,
    ChainComplex, DetLineCoord, GradedDims, HomologyData, HomologyDegree, SignResidue,
};
use crate::error::{Error, Result};
use crate::euler_cw::{
    canonical_from_class, char_class_of, evaluate_acyclic, phase, phase_distance, pr_product,
    torsion_euler, universal_torsion, EulerStructure, FlatBundle, HomOrientation, TwistedCWComplex,
};
use crate::knots::fixtures::{fixture, ACCEPTANCE_KNOTS};
use crate::knots::{
    absolute_torsion_at, absolute_torsion_from, alexander_poly, canonical_normalize,
    conway_of_canonical, conway_skein, surgery_complex, ConwayPoly, KnotDiagram, SkeinReport,
    TorsionRep,
};
use crate::matrix::Matrix;
use crate::scalar::{ComplexSample, Field, LaurentPoly, RatFunc, Rational, FLOAT_TOL};

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    /// Input and intermediate values of the first failure.
    pub witness: Option<String>,
}

impl CheckResult {
    fn from_outcome(
        id: &'static str,
        name: &'static str,
        summary: String,
        failures: Vec<String>,
    ) -> Self {
        let passed = failures.is_empty();
        let summary = if passed {
            summary
        } else {
            format!("{summary}; {} failure(s)", failures.len())
        };
        Self {
            id,
            name,
            passed,
            summary,
            witness: failures.into_iter().next(),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} [{:>2}] {}: {}",
            self.id, self.name, self.summary
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n       witness: {w}")?;
        }
        Ok(())
    }
}

/// Sign functions under test. Swapping in [`SignTable::corrupted`] is the
/// negative control for the suite.
#[derive(Clone, Copy)]
pub struct SignTable {
    pub n: fn(&GradedDims, &GradedDims) -> SignResidue,
    pub m: fn(&GradedDims, &GradedDims) -> Result<SignResidue>,
    pub s: fn(&GradedDims) -> Result<SignResidue>,
}

fn flipped_n(c: &GradedDims, h: &GradedDims) -> SignResidue {
    sign_n(c, h) + SignResidue::ONE
}

impl SignTable {
    pub const STANDARD: Self = Self {
        n: sign_n,
        m: fusion_sign,
        s: duality_sign,
    };

    /// `N(C)` with every value flipped.
    pub fn corrupted() -> Self {
        Self {
            n: flipped_n,
            ..Self::STANDARD
        }
    }
}

impl Default for SignTable {
    fn default() -> Self {
        Self::STANDARD
    }
}

#[derive(Clone, Copy)]
pub struct SuiteOptions {
    pub signs: SignTable,
    pub seed: u64,
    pub random_complexes: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            signs: SignTable::STANDARD,
            seed: 0x7a75_7261_6576,
            random_complexes: 120,
        }
    }
}

/// Shifts applied by the action and phase checks.
pub const SHIFTS: [i64; 4] = [-2, -1, 1, 2];

/// Everything the knot checks need, computed once per diagram.
pub struct KnotData {
    pub name: String,
    pub diagram: KnotDiagram,
    /// Tabulated polynomial, when the diagram is a shipped fixture.
    pub expected: Option<ConwayPoly>,
    pub surgery: TwistedCWComplex,
    /// `τ_0` at the base structure with positive orientation.
    pub raw: RatFunc,
    pub canonical: RatFunc,
    pub eta: HomOrientation,
    pub xi_can: EulerStructure,
    pub alexander: LaurentPoly,
    pub skein: SkeinReport,
    pub conway_torsion: ConwayPoly,
    /// `τ_0(X, ξ_can + h)` for each `h` in [`SHIFTS`], computed from scratch.
    pub shifted: Vec<(i64, RatFunc)>,
}

impl KnotData {
    pub fn new(name: &str, diagram: KnotDiagram, expected: Option<ConwayPoly>) -> Result<Self> {
        let surgery = surgery_complex(&diagram)?;
        let raw = universal_torsion(&surgery, EulerStructure::BASE, HomOrientation::Positive)?;
        let (c, _) = char_class_of(&raw)?;
        let xi_can = canonical_from_class(c)?;
        let (rep, sign) = canonical_normalize(&TorsionRep::raw(raw.clone()))?;
        let eta = HomOrientation::from_sign(sign);
        let shifted = SHIFTS
            .iter()
            .map(|&h| Ok((h, universal_torsion(&surgery, xi_can.act(h), eta)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: name.to_string(),
            conway_torsion: conway_of_canonical(&rep.value)?,
            skein: conway_skein(&diagram)?,
            alexander: alexander_poly(&diagram)?.0,
            diagram,
            expected,
            surgery,
            raw,
            canonical: rep.value,
            eta,
            xi_can,
            shifted,
        })
    }

    pub fn from_fixture(name: &str) -> Result<Self> {
        let f = fixture(name).ok_or_else(|| Error::InvalidBundle(format!("no fixture {name}")))?;
        Self::new(name, f.diagram()?, Some(ConwayPoly::from_i64(f.conway)))
    }
}

/// `(u - u^{-1})^2`.
fn z_squared_in_u() -> LaurentPoly {
    LaurentPoly::from_int_coeffs(-2, &[1, 0, -2, 0, 1])
}

fn unit(theta: f64) -> ComplexSample {
    ComplexSample::from_polar(1.0, theta)
}

/// Unit-circle samples `e^{iθ}`, `θ = 2π(k + offset)/n`, nudged away from
/// roots of `alex`.
pub fn circle_samples(n: usize, offset: f64, alex: &LaurentPoly) -> Vec<ComplexSample> {
    (0..n)
        .map(|k| {
            let mut theta = 2.0 * PI * (k as f64 + offset) / n as f64;
            while alex.eval_complex(unit(theta)).norm() < 1e-6 {
                theta += 1e-3;
            }
            unit(theta)
        })
        .collect()
}

pub fn check_pipeline(k: &KnotData) -> std::result::Result<(), String> {
    let skein = &k.skein.conway;
    if &k.conway_torsion != skein {
        return Err(format!(
            "{}: torsion {} vs skein {skein}",
            k.name, k.conway_torsion
        ));
    }
    match &k.expected {
        Some(e) if e != skein => Err(format!("{}: computed {skein}, tabulated {e}", k.name)),
        _ => Ok(()),
    }
}

/// Renders a function of `u`; the scalar types print their variable as `t`.
fn in_u(x: &impl fmt::Display) -> String {
    x.to_string().replace('t', "u")
}

/// `T(F_a) - ∇(u - u^{-1})` with `a = u^2`.
pub fn symbolic_defect(k: &KnotData) -> RatFunc {
    k.canonical.double_powers() - RatFunc::from_laurent(k.skein.conway.eval_u())
}

pub fn check_symbolic(k: &KnotData) -> std::result::Result<(), String> {
    let defect = symbolic_defect(k);
    if defect.is_zero() {
        Ok(())
    } else {
        Err(format!(
            "{}: T(F_a) = {}, nabla(u - 1/u) = {}, difference {}",
            k.name,
            in_u(&k.canonical.double_powers()),
            in_u(&k.skein.conway.eval_u()),
            in_u(&defect)
        ))
    }
}

pub fn check_symbolic_scaled(k: &KnotData) -> std::result::Result<(), String> {
    let lhs = k.canonical.double_powers() * RatFunc::from_laurent(z_squared_in_u());
    let rhs = RatFunc::from_laurent(k.skein.conway.eval_u());
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!(
            "{}: (u - 1/u)^2 T(F_a) = {}, nabla = {}",
            k.name,
            in_u(&lhs),
            in_u(&rhs)
        ))
    }
}

pub fn check_skein(k: &KnotData) -> std::result::Result<usize, String> {
    match k.skein.triples.iter().find(|t| !t.holds()) {
        Some(t) => Err(format!(
            "{}: nabla(L+) = {}, nabla(L-) = {}, nabla(L0) = {}",
            k.name, t.plus, t.minus, t.zero
        )),
        None => Ok(k.skein.triples.len()),
    }
}

pub fn check_action(k: &KnotData) -> std::result::Result<(), String> {
    let base =
        universal_torsion(&k.surgery, k.xi_can, k.eta).map_err(|e| format!("{}: {e}", k.name))?;
    for (h, tau) in &k.shifted {
        let det = FlatBundle::<RatFunc>::universal()
            .det_f(&[*h])
            .map_err(|e| e.to_string())?;
        if *tau != det.clone() * base.clone() {
            return Err(format!(
                "{}: h = {h}, tau(h xi) = {tau}, det_F(h) tau(xi) = {}",
                k.name,
                det * base.clone()
            ));
        }
    }
    // A rational line bundle, where det_F(h) = a^h.
    let a = Rational::from_i64(3);
    let bundle = FlatBundle::line(a.clone()).map_err(|e| e.to_string())?;
    let at = |xi| torsion_euler(&k.surgery, xi, &bundle, k.eta).map(|c| c.value);
    let base = at(k.xi_can).map_err(|e| format!("{}: {e}", k.name))?;
    for h in SHIFTS {
        let tau = at(k.xi_can.act(h)).map_err(|e| format!("{}: {e}", k.name))?;
        let expected = a.powi(h).expect("a is a unit") * base.clone();
        if tau != expected {
            return Err(format!("{}: a = 3, h = {h}: {tau} vs {expected}", k.name));
        }
    }
    Ok(())
}

pub fn check_realness(k: &KnotData, samples: usize) -> std::result::Result<(), String> {
    if k.canonical.bar() != k.canonical {
        return Err(format!(
            "{}: bar(tau_0) = {} != {}",
            k.name,
            k.canonical.bar(),
            k.canonical
        ));
    }
    for a in circle_samples(samples, 0.5, &k.alexander) {
        let v = absolute_torsion_from(&k.canonical, &k.alexander, a)
            .map_err(|e| format!("{}: a = {a}: {e}", k.name))?;
        if v.im.abs() > FLOAT_TOL {
            return Err(format!("{}: a = {a}, T(F_a) = {v}", k.name));
        }
    }
    Ok(())
}

pub fn check_pr_product(k: &KnotData) -> std::result::Result<(), String> {
    let fail = |e: Error| format!("{}: {e}", k.name);
    let points = [
        Rational::from_i64(2),
        Rational::from_i64(-3),
        Rational::new(5.into(), 7.into()),
    ];
    for a in points
        .into_iter()
        .filter(|a| k.alexander.eval_rational(a).is_some_and(|v| !v.is_zero()))
    {
        let bundle = FlatBundle::line(a.clone()).map_err(fail)?;
        for h in [0, 1] {
            let tau = torsion_euler(&k.surgery, k.xi_can.act(h), &bundle, k.eta)
                .map_err(fail)?
                .value;
            let pr = pr_product(&tau, &tau, &k.surgery, &bundle).map_err(fail)?;
            let expected = bundle.det_f(&[2 * h]).map_err(fail)?;
            if pr != expected {
                return Err(format!(
                    "{}: a = {a}, h = {h}: <tau, tau> = {pr}, expected {expected}",
                    k.name
                ));
            }
        }
    }
    Ok(())
}

pub fn check_phase(k: &KnotData, samples: usize) -> std::result::Result<(), String> {
    let points = circle_samples(samples, 0.3, &k.alexander);
    for (i, a) in points.into_iter().enumerate() {
        let (h, tau) = &k.shifted[i % k.shifted.len()];
        // c(ξ_can + h) = 2h.
        let c = 2 * h;
        let v = evaluate_acyclic(tau, a).map_err(|e| format!("{}: a = {a}: {e}", k.name))?;
        let measured = phase(v).map_err(|e| format!("{}: {e}", k.name))?;
        let expected = (0.5 * a.powi(c as i32).arg()).rem_euclid(PI);
        if phase_distance(measured, expected) > FLOAT_TOL {
            return Err(format!(
                "{}: a = {a}, h = {h}: phase {measured}, expected {expected}",
                k.name
            ));
        }
    }
    Ok(())
}

fn expect_non_acyclic<T: fmt::Debug>(what: String, r: Result<T>) -> Option<String> {
    match r {
        Err(Error::NonAcyclicBundle(_)) => None,
        other => Some(format!("{what}: {other:?}")),
    }
}

pub fn check_error_contracts(k: &KnotData) -> Vec<String> {
    let mut failures = Vec::new();
    let one = ComplexSample::new(1.0, 0.0);
    failures.extend(expect_non_acyclic(
        format!("{} at a = 1", k.name),
        absolute_torsion_from(&k.canonical, &k.alexander, one),
    ));
    failures.extend(expect_non_acyclic(
        format!("{} tau_0 at a = 1", k.name),
        evaluate_acyclic(&k.canonical, one),
    ));
    for root in alexander_roots(&k.alexander) {
        failures.extend(expect_non_acyclic(
            format!("{} at root {root}", k.name),
            absolute_torsion_from(&k.canonical, &k.alexander, root),
        ));
    }
    failures
}

/// Complex roots by Durand–Kerner iteration.
fn alexander_roots(p: &LaurentPoly) -> Vec<ComplexSample> {
    let low = p.min_exp().unwrap_or(0);
    let high = p.max_exp().unwrap_or(0);
    let n = (high - low) as usize;
    if n == 0 {
        return Vec::new();
    }
    let coeffs: Vec<f64> = (low..=high)
        .map(|e| p.coeff(e).to_f64().unwrap_or(f64::NAN))
        .collect();
    let lead = coeffs[n];
    let eval = |z: ComplexSample| {
        coeffs
            .iter()
            .rev()
            .fold(ComplexSample::zero(), |acc, &c| acc * z + c)
            / lead
    };
    let mut roots: Vec<ComplexSample> = (0..n)
        .map(|k| ComplexSample::new(0.4, 0.9).powi(k as i32))
        .collect();
    for _ in 0..500 {
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(ComplexSample::one(), |acc, j| acc * (roots[i] - roots[j]));
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
    }
    roots
}

/// Exhaustive comparison of the sign functions with a direct evaluation of
/// their defining sums in integers, plus a structural check of `N(C)`:
/// on complexes with permutation-matrix boundaries the torsion is the
/// sign of the column permutation times `(-1)^{N(C)}`.
pub fn check_sign_table(table: &SignTable, max_top: usize, max_dim: usize) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in 0..=max_top {
        let all = all_dims(m, max_dim);
        for v in &all {
            let gv = GradedDims::new(v.clone());
            for w in &all {
                let gw = GradedDims::new(w.clone());
                cases += 1;
                let n = (table.n)(&gv, &gw).bit();
                if n != direct_n(v, w) {
                    failures.push(format!(
                        "N(C) with chain dims {v:?}, homology {w:?}: {n}, direct {}",
                        direct_n(v, w)
                    ));
                }
                let mm = (table.m)(&gv, &gw).map(|r| r.bit());
                if mm != Ok(direct_m(v, w)) {
                    failures.push(format!(
                        "M({v:?}, {w:?}): {mm:?}, direct {}",
                        direct_m(v, w)
                    ));
                }
            }
            if m % 2 == 1 {
                cases += 1;
                let s = (table.s)(&gv).map(|r| r.bit());
                if s != Ok(direct_s(v)) {
                    failures.push(format!("s({v:?}): {s:?}, direct {}", direct_s(v)));
                }
            }
            for ranks in rank_sequences(v) {
                cases += 1;
                if let Err(w) = permutation_complex_check(table, v, &ranks) {
                    failures.push(w);
                }
            }
        }
    }
    (cases, failures)
}

fn all_dims(m: usize, max_dim: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..=m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max_dim).map(move |d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    out
}

fn partial_sums(v: &[usize]) -> Vec<usize> {
    v.iter()
        .scan(0, |acc, d| {
            *acc += d;
            Some(*acc)
        })
        .collect()
}

fn direct_n(c: &[usize], h: &[usize]) -> u8 {
    let (a, b) = (partial_sums(c), partial_sums(h));
    let total: usize = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    (total % 2) as u8
}

fn direct_m(v: &[usize], w: &[usize]) -> u8 {
    let (a, b) = (partial_sums(v), partial_sums(w));
    let total: usize = (1..v.len()).map(|q| a[q - 1] * b[q]).sum();
    (total % 2) as u8
}

fn direct_s(v: &[usize]) -> u8 {
    let a = partial_sums(v);
    let m = v.len() - 1;
    let adjacent: usize = (1..=m).map(|q| a[q - 1] * a[q]).sum();
    let even: usize = (0..=(m - 1) / 2).map(|q| a[2 * q]).sum();
    ((adjacent + even) % 2) as u8
}

/// Ranks `r_1..r_m` of the boundaries with `r_q + r_{q+1} ≤ c_q`, padded
/// with `r_0 = r_{m+1} = 0`.
fn rank_sequences(c: &[usize]) -> Vec<Vec<usize>> {
    let m = c.len() - 1;
    let mut out = vec![vec![0]];
    for q in 1..=m {
        out = out
            .into_iter()
            .flat_map(|p| {
                let prev = *p.last().unwrap();
                let cap = c[q - 1].saturating_sub(prev).min(c[q]);
                (0..=cap).map(move |r| {
                    let mut s = p.clone();
                    s.push(r);
                    s
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|r| r[m] <= c[m])
        .map(|mut r| {
            r.push(0);
            r
        })
        .collect()
}

fn inversion_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn unit_columns(n: usize, idx: impl Iterator<Item = usize>) -> Matrix<Rational> {
    let cols: Vec<Vec<Rational>> = idx
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        })
        .collect();
    Matrix::from_columns(n, &cols)
}

fn permutation_complex_check(
    table: &SignTable,
    c: &[usize],
    r: &[usize],
) -> std::result::Result<(), String> {
    let m = c.len() - 1;
    let h: Vec<usize> = (0..=m).map(|q| c[q] - r[q] - r[q + 1]).collect();
    // d_q sends e_{r_{q+1} + i} to e_i for i < r_q.
    let boundaries = (1..=m)
        .map(|q| {
            let mut d = Matrix::<Rational>::zeros(c[q - 1], c[q]);
            for i in 0..r[q] {
                d[(i, r[q + 1] + i)] = Rational::one();
            }
            d
        })
        .collect();
    let complex = ChainComplex::new(GradedDims::new(c.to_vec()), boundaries)
        .map_err(|e| format!("chain dims {c:?}, ranks {r:?}: {e}"))?;
    let degrees = (0..=m)
        .map(|q| HomologyDegree {
            reps: unit_columns(c[q], r[q + 1] + r[q]..c[q]),
            lifts: unit_columns(c[q], r[q + 1]..r[q + 1] + r[q]),
        })
        .collect();
    let homology = HomologyData { degrees };
    let mut expected = 1;
    for q in 0..=m {
        let order: Vec<usize> = (0..r[q + 1])
            .chain(r[q + 1] + r[q]..c[q])
            .chain(r[q + 1]..r[q + 1] + r[q])
            .collect();
        expected *= inversion_sign(&order);
    }
    let n = (table.n)(&GradedDims::new(c.to_vec()), &GradedDims::new(h.clone()));
    expected *= n.sign();
    let one = DetLineCoord::new(Rational::one(), "cells");
    let got = torsion_phi(&complex, &one, &CellFrame::Standard, &homology)
        .map_err(|e| format!("chain dims {c:?}, ranks {r:?}: {e}"))?;
    if got.value != Rational::from_i64(expected) {
        return Err(format!(
            "chain dims {c:?}, homology {h:?}: phi = {}, permutation sign times (-1)^N = {expected}",
            got.value
        ));
    }
    Ok(())
}

/// Choice independence and linearity of the torsion coordinate on random
/// complexes over `Q`.
pub fn check_random_complexes(count: usize, seed: u64) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..count {
        let complex = random_complex(&mut rng, 4, 4);
        let homology = compute_homology(&complex);
        let one = DetLineCoord::new(Rational::one(), "cells");
        let reference = match torsion_phi(&complex, &one, &CellFrame::Standard, &homology) {
            Ok(v) => v.value,
            Err(e) => {
                failures.push(format!("complex #{i} {complex:?}: {e}"));
                continue;
            }
        };
        for _ in 0..3 {
            let other = homology.rechoose(&complex, &mut rng);
            let got = torsion_phi(&complex, &one, &CellFrame::Standard, &other).map(|v| v.value);
            if got.as_ref() != Ok(&reference) {
                failures.push(format!(
                    "complex #{i} {complex:?}: {reference} vs rechosen {got:?}"
                ));
            }
        }
        let g = Rational::new((-7).into(), 3.into());
        let scaled = torsion_phi(&complex, &one.scaled(&g), &CellFrame::Standard, &homology)
            .map(|v| v.value);
        if scaled != Ok(reference.clone() * g.clone()) {
            failures.push(format!(
                "complex #{i}: phi(g c) = {scaled:?}, g phi(c) = {}",
                reference * g
            ));
        }
    }
    failures
}

fn guarded<F>(id: &'static str, name: &'static str, f: F) -> CheckResult
where
    F: FnOnce() -> CheckResult,
{
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        CheckResult::from_outcome(id, name, "panicked".into(), vec![msg])
    })
}

fn per_knot<F>(knots: &[KnotData], names: &[&str], f: F) -> (usize, Vec<String>)
where
    F: Fn(&KnotData) -> std::result::Result<(), String> + Sync,
{
    let chosen: Vec<&KnotData> = knots
        .iter()
        .filter(|k| names.is_empty() || names.contains(&k.name.as_str()))
        .collect();
    let failures = chosen.par_iter().filter_map(|k| f(k).err()).collect();
    (chosen.len(), failures)
}

/// Builds the shared data for the acceptance knots.
pub fn acceptance_knots() -> std::result::Result<Vec<KnotData>, String> {
    ACCEPTANCE_KNOTS
        .par_iter()
        .map(|n| KnotData::from_fixture(n).map_err(|e| format!("{n}: {e}")))
        .collect()
}

/// Knot checks shared by the acceptance suite and single-diagram reports.
pub fn knot_checks(knots: &[KnotData]) -> Vec<CheckResult> {
    let both = ["trefoil-left", "figure-eight"];
    let mut out = Vec::new();
    out.push(guarded("1", "pipeline equality", || {
        let (n, mut f) = per_knot(knots, &[], check_pipeline);
        if let Some(u) = knots.iter().find(|k| k.name == "unknot") {
            if !u.conway_torsion.is_zero() && u.conway_torsion != ConwayPoly::one() {
                f.push(format!("unknot gives {}", u.conway_torsion));
            }
        }
        CheckResult::from_outcome(
            "1",
            "pipeline equality",
            format!("diagrams: {n}, torsion route = skein route"),
            f,
        )
    }));
    out.push(guarded(
        "2",
        "symbolic identity T(F_a) = nabla(u - 1/u)",
        || {
            let (n, f) = per_knot(knots, &[], check_symbolic);
            CheckResult::from_outcome(
                "2",
                "symbolic identity T(F_a) = nabla(u - 1/u)",
                format!("diagrams: {n}"),
                f,
            )
        },
    ));
    out.push(guarded(
        "2b",
        "symbolic identity (u - 1/u)^2 T(F_a) = nabla(u - 1/u)",
        || {
            let (n, f) = per_knot(knots, &[], check_symbolic_scaled);
            CheckResult::from_outcome(
                "2b",
                "symbolic identity (u - 1/u)^2 T(F_a) = nabla(u - 1/u)",
                format!("diagrams: {n}"),
                f,
            )
        },
    ));
    out.push(guarded("3", "skein relation at every node", || {
        let results: Vec<_> = knots.par_iter().map(check_skein).collect();
        let total: usize = results.iter().filter_map(|r| r.as_ref().ok()).sum();
        let mut f: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
        if total == 0 && knots.iter().any(|k| k.diagram.crossing_count() > 0) {
            f.push("no skein nodes were checked".into());
        }
        CheckResult::from_outcome(
            "3",
            "skein relation at every node",
            format!("{total} nodes checked"),
            f,
        )
    }));
    out.push(guarded("6", "Euler structure action", || {
        let (n, f) = per_knot(knots, &[], check_action);
        CheckResult::from_outcome(
            "6",
            "Euler structure action",
            format!("surgeries: {n}, h in {SHIFTS:?}"),
            f,
        )
    }));
    out.push(guarded("7", "bar symmetry and realness", || {
        let (n, f) = per_knot(knots, &[], |k| check_realness(k, 20));
        CheckResult::from_outcome(
            "7",
            "bar symmetry and realness",
            format!("surgeries: {n}, 20 unit-circle samples each"),
            f,
        )
    }));
    out.push(guarded("8", "PR product", || {
        let names: &[&str] = if knots.len() > 2 { &both } else { &[] };
        let (n, f) = per_knot(knots, names, check_pr_product);
        CheckResult::from_outcome(
            "8",
            "PR product",
            format!("surgeries: {n}, <T, T> = 1 and <tau(h xi), tau(h xi)> = a^2"),
            f,
        )
    }));
    out.push(guarded("9", "phase law", || {
        let (n, f) = per_knot(knots, &[], |k| check_phase(k, 10));
        CheckResult::from_outcome(
            "9",
            "phase law",
            format!("surgeries: {n}, 10 unit-circle samples each"),
            f,
        )
    }));
    out.push(guarded("10", "error contracts", || {
        let f: Vec<String> = knots.par_iter().flat_map(check_error_contracts).collect();
        CheckResult::from_outcome(
            "10",
            "error contracts",
            format!("diagrams: {}, a = 1 and Alexander roots", knots.len()),
            f,
        )
    }));
    out
}

const RATIONAL_CONTRACTS: usize = 4;

/// Rational-argument error contracts, which go through the full pipeline.
fn rational_contracts() -> Vec<String> {
    let mut f = Vec::new();
    let cases: [(&str, Rational); RATIONAL_CONTRACTS] = [
        ("unknot", Rational::one()),
        ("trefoil-left", Rational::one()),
        ("6_1", Rational::from_i64(2)),
        ("6_1", Rational::new(1.into(), 2.into())),
    ];
    for (name, a) in cases {
        let r = fixture(name)
            .ok_or(Error::ZeroInput)
            .and_then(|fx| fx.diagram())
            .and_then(|d| absolute_torsion_at(&d, &a));
        f.extend(expect_non_acyclic(format!("{name} at a = {a}"), r));
    }
    f
}

/// The full acceptance suite, in criterion order.
pub fn run_all(opts: &SuiteOptions) -> Vec<CheckResult> {
    let (knots, det) = rayon::join(acceptance_knots, || {
        let signs = guarded("4", "sign functions", || {
            let (cases, f) = check_sign_table(&opts.signs, 5, 2);
            CheckResult::from_outcome(
                "4",
                "sign functions",
                format!("{cases} exhaustive cases, m <= 5, dims <= 2"),
                f,
            )
        });
        let phi = guarded("5", "torsion coordinate well defined", || {
            let f = check_random_complexes(opts.random_complexes, opts.seed);
            CheckResult::from_outcome(
                "5",
                "torsion coordinate well defined",
                format!(
                    "{} random complexes, 3 rechoices each",
                    opts.random_complexes
                ),
                f,
            )
        });
        (signs, phi)
    });
    let mut out = match knots {
        Ok(k) => knot_checks(&k),
        Err(e) => vec![CheckResult::from_outcome(
            "1",
            "knot data",
            "setup".into(),
            vec![e],
        )],
    };
    if let Some(c) = out.iter_mut().find(|c| c.id == "10") {
        let extra = rational_contracts();
        c.summary
            .push_str(&format!(", {} exact rational cases", RATIONAL_CONTRACTS));
        if let Some(first) = extra.first() {
            c.passed = false;
            c.summary
                .push_str(&format!("; {} rational failure(s)", extra.len()));
            c.witness.get_or_insert_with(|| first.clone());
        }
    }
    out.push(det.0);
    out.push(det.1);
    out.sort_by_key(|c| order_key(c.id));
    out
}

fn order_key(id: &str) -> (u32, String) {
    let digits: String = id.chars().take_while(char::is_ascii_digit).collect();
    (digits.parse().unwrap_or(u32::MAX), id.to_string())
}

/// Checks that make sense for a single diagram.
pub const DIAGRAM_CHECKS: [&str; 7] = ["1", "3", "6", "7", "8", "9", "10"];

/// One-diagram report used by `knot verify`.
pub fn verify_diagram(name: &str, d: &KnotDiagram) -> Result<(KnotData, Vec<CheckResult>)> {
    let data = KnotData::new(name, d.clone(), None)?;
    let checks = knot_checks(std::slice::from_ref(&data))
        .into_iter()
        .filter(|c| DIAGRAM_CHECKS.contains(&c.id))
        .collect();
    Ok((data, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_sign_examples() {
        assert_eq!(direct_n(&[1], &[1]), 1);
        assert_eq!(direct_n(&[1, 0], &[1, 0]), 0);
        assert_eq!(direct_m(&[1, 1], &[1, 0]), 1);
        assert_eq!(direct_s(&[1, 0, 0, 1]), 0);
    }

    #[test]
    fn rank_sequences_are_admissible() {
        assert_eq!(rank_sequences(&[1, 1]), vec![vec![0, 0, 0], vec![0, 1, 0]]);
        for r in rank_sequences(&[2, 1, 2]) {
            assert!(r[1] + r[2] <= 1);
        }
    }

    #[test]
    fn sign_table_small_and_corrupted() {
        let (cases, f) = check_sign_table(&SignTable::STANDARD, 3, 1);
        assert!(cases > 0 && f.is_empty(), "{f:?}");
        let (_, f) = check_sign_table(&SignTable::corrupted(), 1, 1);
        assert!(!f.is_empty());
    }

    #[test]
    fn random_complexes_pass() {
        assert_eq!(check_random_complexes(10, 1), Vec::<String>::new());
    }

    #[test]
    fn durand_kerner_finds_roots() {
        let p: LaurentPoly = "t^2-3t+2".parse().unwrap();
        let mut r: Vec<f64> = alexander_roots(&p).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        assert!((r[0] - 1.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn trefoil_report() {
        let d = fixture("trefoil-left").unwrap().diagram().unwrap();
        let (data, report) = verify_diagram("trefoil-left", &d).unwrap();
        assert_eq!(data.conway_torsion.to_string(), "1+z^2");
        assert_eq!(report.len(), DIAGRAM_CHECKS.len());
        assert!(report.iter().all(|c| c.passed), "{report:?}");
        let data = KnotData::from_fixture("6_1").unwrap();
        assert_eq!(check_pr_product(&data), Ok(()));
    }
}
