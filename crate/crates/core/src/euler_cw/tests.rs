use std::f64::consts::PI;

use num_traits::{One, Zero};

use super::*;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{ComplexSample, Field, LaurentPoly, RatFunc, Rational};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn grm(rows: &[&[&str]]) -> GroupRingMatrix {
    GroupRingMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| lp(s)).collect())
            .collect(),
    )
    .unwrap()
}

const S1_S2: &str = "\
# S^1 x S^2
dim 3
cells 1 1 1 1
orientable yes
betti 1 1 1 1
conditions31 yes
boundary 1 1 1
t-1
boundary 2 1 1
0
boundary 3 1 1
t-1
";

fn s1_s2() -> TwistedCWComplex {
    format::parse(S1_S2).unwrap()
}

fn circle(d: &str) -> TwistedCWComplex {
    let g = grm(&[&[d]]);
    let b = if g.augment().is_zero() { 1 } else { 0 };
    TwistedCWComplex::new(vec![1, 1], vec![g], true, vec![b, b], true).unwrap()
}

/// Two-generator complex with `τ_0 ≐ Δ / (t-1)^2` for `Δ = t^2 - t + 1`.
fn trefoil_like() -> TwistedCWComplex {
    TwistedCWComplex::new(
        vec![1, 2, 2, 1],
        vec![
            grm(&[&["t-1", "t-1"]]),
            grm(&[&["t^2-t+1", "0"], &["-t^2+t-1", "0"]]),
            grm(&[&["0"], &["t-1"]]),
        ],
        true,
        vec![1, 1, 1, 1],
        true,
    )
    .unwrap()
}

#[test]
fn format_round_trip() {
    let x = s1_s2();
    let printed = format::print(&x);
    assert_eq!(
        printed,
        S1_S2
            .lines()
            .skip(1)
            .map(|l| format!("{l}\n"))
            .collect::<String>()
    );
    assert_eq!(format::parse(&printed).unwrap(), x);
    let y = trefoil_like();
    assert_eq!(format::parse(&format::print(&y)).unwrap(), y);
}

#[test]
fn format_errors() {
    let bad_flag = S1_S2.replace("orientable yes", "orientable maybe");
    assert!(matches!(
        format::parse(&bad_flag),
        Err(Error::Parse { line: 4, .. })
    ));
    let half = S1_S2.replace("t-1\nboundary 2", "1/2*t\nboundary 2");
    assert!(matches!(
        format::parse(&half),
        Err(Error::Parse { line: 8, .. })
    ));
    let betti = S1_S2.replace("betti 1 1 1 1", "betti 1 0 0 1");
    assert!(matches!(
        format::parse(&betti),
        Err(Error::MetadataMismatch(_))
    ));
    let even = "dim 2\ncells 1 2 1\norientable yes\nbetti 1 2 1\nconditions31 yes\n";
    assert!(matches!(format::parse(even), Err(Error::ComplexInvalid(_))));
}

#[test]
fn twist_examples() {
    let x = circle("t-1");
    let c = twist(&x, &FlatBundle::line(q(3)).unwrap()).unwrap();
    assert_eq!(c.boundary(1).unwrap()[(0, 0)], q(2));
    let c = twist(&x, &FlatBundle::<Rational>::trivial(1).unwrap()).unwrap();
    assert!(c.boundary(1).unwrap().is_zero());

    let ab = FlatBundle::line(q(2))
        .unwrap()
        .direct_sum(&FlatBundle::line(q(5)).unwrap())
        .unwrap();
    let d = twist(&x, &ab).unwrap().boundary(1).unwrap().clone();
    let expected = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(4)]]);
    assert_eq!(d, expected);

    let x = circle("2t^-1-3+t^2");
    let d = twist(&x, &FlatBundle::line(q(2)).unwrap()).unwrap();
    assert_eq!(d.boundary(1).unwrap()[(0, 0)], q(2));
}

#[test]
fn bundle_validation() {
    let a = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(1)]]);
    let b = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(1), q(1)]]);
    assert_eq!(
        FlatBundle::new(vec![a.clone(), b]).unwrap_err(),
        Error::NonCommutingMonodromy
    );
    assert!(FlatBundle::new(vec![a.clone(), a.clone()]).is_ok());
    assert!(matches!(
        FlatBundle::line(q(0)),
        Err(Error::InvalidBundle(_))
    ));
    let two = FlatBundle::new(vec![a.clone(), a]).unwrap();
    assert!(matches!(
        twist(&s1_s2(), &two),
        Err(Error::InvalidBundle(_))
    ));
    let f = FlatBundle::line(q(3)).unwrap();
    assert_eq!(f.det_f(&[-2]).unwrap(), Rational::new(1.into(), 9.into()));
    assert_eq!(
        f.dual().unwrap().det_f(&[1]).unwrap(),
        Rational::new(1.into(), 3.into())
    );
}

#[test]
fn circle_torsion() {
    let x = circle("t-1");
    for a in [2, 3, -1, 5] {
        let v = torsion_euler(
            &x,
            EulerStructure::BASE,
            &FlatBundle::line(q(a)).unwrap(),
            HomOrientation::Positive,
        )
        .unwrap();
        assert_eq!(v.value, Rational::new(1.into(), (a - 1).into()));
    }
    let u = universal_torsion(&x, EulerStructure::BASE, HomOrientation::Positive).unwrap();
    assert_eq!(u, rf("(1)/(t-1)"));
}

#[test]
fn action_law() {
    let xs = [s1_s2(), trefoil_like(), circle("t-1")];
    let bundles = [
        FlatBundle::line(q(2)).unwrap(),
        FlatBundle::line(Rational::new((-3).into(), 7.into())).unwrap(),
        FlatBundle::line(q(2))
            .unwrap()
            .direct_sum(&FlatBundle::line(q(3)).unwrap())
            .unwrap(),
    ];
    for x in &xs {
        for f in &bundles {
            let base = torsion_euler(x, EulerStructure::BASE, f, HomOrientation::Positive).unwrap();
            for h in [-2, -1, 1, 2] {
                let xi = EulerStructure::BASE.act(h);
                let v = torsion_euler(x, xi, f, HomOrientation::Positive).unwrap();
                assert_eq!(v.value, base.value.clone() * f.det_f(&[h]).unwrap());
            }
        }
        let base = universal_torsion(x, EulerStructure::BASE, HomOrientation::Positive).unwrap();
        let shifted =
            universal_torsion(x, EulerStructure::new(3), HomOrientation::Positive).unwrap();
        assert_eq!(shifted, base * RatFunc::t_pow(3));
    }
}

#[test]
fn orientation_only_matters_for_odd_rank() {
    let x = s1_s2();
    let f = FlatBundle::line(q(2)).unwrap();
    let p = torsion_euler(&x, EulerStructure::BASE, &f, HomOrientation::Positive).unwrap();
    let n = torsion_euler(&x, EulerStructure::BASE, &f, HomOrientation::Negative).unwrap();
    assert_eq!(p.value, -n.value);
    let f2 = FlatBundle::<Rational>::trivial(2).unwrap();
    let p = torsion_euler(&x, EulerStructure::BASE, &f2, HomOrientation::Positive).unwrap();
    let n = torsion_euler(&x, EulerStructure::BASE, &f2, HomOrientation::Negative).unwrap();
    assert_eq!(p, n);
    assert_eq!(p.frame, "homology");
}

#[test]
fn characteristic_classes() {
    let x = s1_s2();
    assert_eq!(char_class_base(&x).unwrap(), (-2, 1));
    assert_eq!(canonical_euler(&x).unwrap(), EulerStructure::new(1));
    assert_eq!(char_class_base(&trefoil_like()).unwrap().0 % 2, 0);
    assert_eq!(char_class_base(&circle("t-1")), Err(Error::ParityError(1)));
    assert!(matches!(
        char_class_base(&circle("t-2")),
        Err(Error::NotMonomialRatio(_))
    ));
    assert_eq!(char_class_of(&rf("t^2+2+t^-2")).unwrap(), (0, 1));
    assert_eq!(char_class_of(&rf("t^4+2t^2+1")).unwrap(), (4, 1));
    assert_eq!(canonical_from_class(4).unwrap(), EulerStructure::new(-2));
    assert_eq!(canonical_from_class(0).unwrap(), EulerStructure::BASE);
    assert_eq!(canonical_from_class(3), Err(Error::ParityError(3)));

    // Square law: c(hξ) = c(ξ) + 2h.
    for x in [s1_s2(), trefoil_like()] {
        let (c, _) = char_class_base(&x).unwrap();
        for h in -2..=2 {
            let tau =
                universal_torsion(&x, EulerStructure::new(h), HomOrientation::Positive).unwrap();
            assert_eq!(char_class_of(&tau).unwrap().0, c + 2 * h);
        }
    }

    let degenerate = TwistedCWComplex::new(
        vec![1, 1, 1, 1],
        vec![grm(&[&["0"]]), grm(&[&["0"]]), grm(&[&["0"]])],
        true,
        vec![1, 1, 1, 1],
        true,
    )
    .unwrap();
    assert_eq!(char_class_base(&degenerate), Err(Error::ZeroTorsion));
}

#[test]
fn canonical_torsion_is_bar_symmetric() {
    for x in [s1_s2(), trefoil_like()] {
        let xi = canonical_euler(&x).unwrap();
        let tau = universal_torsion(&x, xi, HomOrientation::Positive).unwrap();
        assert_eq!(tau.bar(), tau);
    }
    let xi = canonical_euler(&s1_s2()).unwrap();
    let tau = universal_torsion(&s1_s2(), xi, HomOrientation::Positive).unwrap();
    assert_eq!(tau, rf("(t)/(t^2-2t+1)"));
}

#[test]
fn absolute_torsion_two_ways() {
    let x = s1_s2();
    let f = FlatBundle::line(q(2)).unwrap();
    let t = absolute_torsion(&x, &f, HomOrientation::Positive).unwrap();
    assert_eq!(t.value.value, q(2));
    assert_eq!(t.semi_characteristic, 1);
    let (c, _) = char_class_base(&x).unwrap();
    let base = torsion_euler(&x, EulerStructure::BASE, &f, HomOrientation::Positive).unwrap();
    assert_eq!(t.value.value, f.det_f(&[-c / 2]).unwrap() * base.value);

    let off = x.with_metadata(true, false);
    assert_eq!(
        absolute_torsion(&off, &f, HomOrientation::Positive),
        Err(Error::Conditions31Violated)
    );
    let unoriented = x.with_metadata(false, true);
    assert_eq!(
        absolute_torsion(&unoriented, &f, HomOrientation::Positive),
        Err(Error::Conditions31Violated)
    );
}

#[test]
fn pr_product_laws() {
    for x in [s1_s2(), trefoil_like()] {
        let can = canonical_euler(&x).unwrap();
        for a in [2, 3, -2] {
            let f = FlatBundle::line(q(a)).unwrap();
            for h in [-1, 0, 1, 2] {
                let tau = torsion_euler(&x, can.act(h), &f, HomOrientation::Positive)
                    .unwrap()
                    .value;
                let p = pr_product(&tau, &tau, &x, &f).unwrap();
                assert_eq!(p, q(a).powi(2 * h).unwrap());
            }
            let g = q(7);
            let u = q(3);
            let v = q(-2);
            assert_eq!(
                pr_product(&(g.clone() * u.clone()), &v, &x, &f).unwrap(),
                g * pr_product(&u, &v, &x, &f).unwrap()
            );
        }
        let uni = FlatBundle::universal();
        let tau = torsion_euler(&x, can, &uni, HomOrientation::Positive)
            .unwrap()
            .value;
        assert_eq!(pr_product(&tau, &tau, &x, &uni).unwrap(), RatFunc::one());
    }
    let f = FlatBundle::<Rational>::trivial(1).unwrap();
    assert!(matches!(
        pr_product(&q(1), &q(1), &s1_s2(), &f),
        Err(Error::InvalidBundle(_))
    ));
}

#[test]
fn pr_product_coords_zero_denominator() {
    let dims = crate::det_torsion::GradedDims::zero(3);
    let one = crate::det_torsion::DetLineCoord::new(q(1), "acyclic");
    let pairing = vec![Matrix::zeros(0, 0); 4];
    assert_eq!(
        pr_product_coords(&one, &one, &dims, &pairing, &Rational::zero()),
        Err(Error::ZeroDenominatorTorsion)
    );
    assert_eq!(
        pr_product_coords(&one, &one, &dims, &pairing, &q(4)).unwrap(),
        Rational::new(1.into(), 4.into())
    );
}

#[test]
fn involution_and_phase() {
    let a = ComplexSample::from_polar(1.0, 0.7);
    let v = ComplexSample::new(1.5, -2.0);
    assert_eq!(involution_bar(v, a).unwrap(), ComplexSample::new(1.5, 2.0));
    assert_eq!(involution_bar(involution_bar(v, a).unwrap(), a).unwrap(), v);
    assert_eq!(
        involution_bar(v, ComplexSample::new(2.0, 0.0)),
        Err(Error::NonUnitaryMonodromy)
    );

    assert!(phase_distance(phase(ComplexSample::new(-3.0, 0.0)).unwrap(), 0.0) < 1e-12);
    assert!((phase(ComplexSample::new(0.0, 2.0)).unwrap() - PI / 2.0).abs() < 1e-12);
    assert_eq!(phase(ComplexSample::new(0.0, 0.0)), Err(Error::ZeroElement));
    let g = ComplexSample::from_polar(2.0, 2.5);
    let p = phase(v * g).unwrap();
    assert!(phase_distance(p, phase(v).unwrap() + 2.5) < 1e-12);
}

#[test]
fn phase_of_shifted_structure() {
    // τ(hξ_can; F_i) = i^h T(F_i) and T is real, so the phase is hπ/2 mod π... halved
    // characteristic class: ½ arg det(c(hξ)) = ½ arg(i^{2h}).
    let x = trefoil_like();
    let can = canonical_euler(&x).unwrap();
    let a = ComplexSample::new(0.0, 1.0);
    for h in [-1, 1, 2] {
        let v = torsion_at_complex(&x, can.act(h), a, HomOrientation::Positive).unwrap();
        let expected = 0.5 * a.powi(2 * h as i32).arg();
        assert!(phase_distance(phase(v).unwrap(), expected) < 1e-9);
    }
    let v = torsion_at_complex(&x, can, a, HomOrientation::Positive).unwrap();
    assert!(v.im.abs() < 1e-9);
    assert!(matches!(
        torsion_at_complex(
            &x,
            can,
            ComplexSample::new(1.0, 0.0),
            HomOrientation::Positive
        ),
        Err(Error::NonAcyclicBundle(_))
    ));
}

#[test]
fn semi_characteristic_of_circle() {
    assert_eq!(circle("t-1").semi_characteristic(), 1);
}

#[test]
fn group_ring_entries_must_be_integral() {
    assert!(matches!(
        GroupRingMatrix::new(1, 1, vec![lp("1/2")]),
        Err(Error::ComplexInvalid(_))
    ));
    let bad = TwistedCWComplex::new(
        vec![1, 1, 1, 1],
        vec![grm(&[&["t-1"]]), grm(&[&["1"]]), grm(&[&["0"]])],
        true,
        vec![1, 1, 1, 1],
        true,
    );
    assert!(matches!(bad, Err(Error::ComplexInvalid(_))));
    let _ = RatFunc::one();
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]

    #[test]
    fn action_law_on_random_bundles(h in -4i64..=4, n in -9i64..=9, d in 1i64..=5) {
        let a = Rational::new(n.into(), d.into());
        proptest::prop_assume!(!a.is_zero() && !a.is_one());
        let x = trefoil_like();
        let bundle = FlatBundle::line(a.clone()).unwrap();
        let xi = EulerStructure::new(3);
        let base = torsion_euler(&x, xi, &bundle, HomOrientation::Positive);
        let moved = torsion_euler(&x, xi.act(h), &bundle, HomOrientation::Positive);
        match (base, moved) {
            (Ok(b), Ok(m)) => proptest::prop_assert_eq!(m.value, a.powi(h).unwrap() * b.value),
            (b, m) => proptest::prop_assert_eq!(b.is_err(), m.is_err()),
        }
    }
}
