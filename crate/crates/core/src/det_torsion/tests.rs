use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{Field, Rational};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    )
}

fn unit() -> DetLineCoord<Rational> {
    DetLineCoord::new(q(1), "cells")
}

fn phi(c: &ChainComplex<Rational>) -> Rational {
    let h = compute_homology(c);
    torsion_phi(c, &unit(), &CellFrame::Standard, &h)
        .unwrap()
        .value
}

#[test]
fn homology_of_isomorphism_complex() {
    let c = ChainComplex::new(GradedDims::new(vec![1, 1]), vec![qm(&[&[5]])]).unwrap();
    assert_eq!(compute_homology(&c).ranks().dims(), &[0, 0]);
}

#[test]
fn homology_with_zero_boundaries() {
    let c: ChainComplex<Rational> =
        ChainComplex::new(GradedDims::new(vec![2, 3]), vec![Matrix::zeros(2, 3)]).unwrap();
    let h = compute_homology(&c);
    assert_eq!(h.ranks().dims(), &[2, 3]);
    assert_eq!(h.degrees[0].reps, Matrix::identity(2));
    assert_eq!(h.degrees[1].reps, Matrix::identity(3));
}

#[test]
fn homology_hand_elimination() {
    let c = ChainComplex::new(GradedDims::new(vec![2, 2]), vec![qm(&[&[1, 0], &[0, 0]])]).unwrap();
    let h = compute_homology(&c);
    assert_eq!(h.ranks().dims(), &[1, 1]);
    assert_eq!(h.degrees[0].reps, qm(&[&[0], &[1]]));
    assert_eq!(h.degrees[1].reps, qm(&[&[0], &[1]]));
}

#[test]
fn phi_of_two_term_complex_is_inverse() {
    for lambda in [2, -3, 7] {
        let c = ChainComplex::new(GradedDims::new(vec![1, 1]), vec![qm(&[&[lambda]])]).unwrap();
        assert_eq!(phi(&c), Rational::new(1.into(), lambda.into()));
    }
}

#[test]
fn phi_of_identity_cones_squares_to_one() {
    for n in 1..4 {
        let c = ChainComplex::new(GradedDims::new(vec![n, n]), vec![Matrix::identity(n)]).unwrap();
        let v = phi(&c);
        assert_eq!(v.clone() * v, q(1));
        let c = ChainComplex::new(
            GradedDims::new(vec![n, n, n, n]),
            vec![
                Matrix::identity(n),
                Matrix::zeros(n, n),
                Matrix::identity(n),
            ],
        )
        .unwrap();
        let v = phi(&c);
        assert_eq!(v.clone() * v, q(1));
    }
}

#[test]
fn phi_of_zero_complex_is_one() {
    for m in 0..4 {
        assert_eq!(phi(&ChainComplex::zero(m)), q(1));
    }
}

#[test]
fn phi_concentrated_in_degree_zero_has_sign() {
    // H_0 = C_0 = k with m = 0: α_0 = β_0 = 1 so N = 1.
    let c = ChainComplex::<Rational>::new(GradedDims::new(vec![1]), vec![]).unwrap();
    assert_eq!(phi(&c), q(-1));
    // Padding with an empty degree flips it back: α = β = (1, 1).
    let c = ChainComplex::new(
        GradedDims::new(vec![1, 0]),
        vec![Matrix::<Rational>::zeros(1, 0)],
    )
    .unwrap();
    assert_eq!(phi(&c), q(1));
    // C_1 = H_1 = k: α = β = (0, 1), N = 1, and the degree-1 factor is inverted.
    let c = ChainComplex::new(
        GradedDims::new(vec![0, 1]),
        vec![Matrix::<Rational>::zeros(0, 1)],
    )
    .unwrap();
    assert_eq!(phi(&c), q(-1));
}

#[test]
fn phi_rejects_zero_and_bad_homology() {
    let c = ChainComplex::new(GradedDims::new(vec![1, 1]), vec![qm(&[&[2]])]).unwrap();
    let h = compute_homology(&c);
    let zero = DetLineCoord::new(Rational::zero(), "cells");
    assert_eq!(
        torsion_phi(&c, &zero, &CellFrame::Standard, &h),
        Err(Error::ZeroInput)
    );
    let mut bad = h.clone();
    bad.degrees[0].reps = qm(&[&[1]]);
    assert!(matches!(
        torsion_phi(&c, &unit(), &CellFrame::Standard, &bad),
        Err(Error::SingularAssembly { .. })
    ));
}

#[test]
fn phi_choice_independence_random() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..150 {
        let c = random_complex(&mut rng, 4, 4);
        let h = compute_homology(&c);
        let base = torsion_phi(&c, &unit(), &CellFrame::Standard, &h).unwrap();
        for _ in 0..3 {
            let h2 = h.rechoose(&c, &mut rng);
            let v = torsion_phi(&c, &unit(), &CellFrame::Standard, &h2).unwrap();
            assert_eq!(v, base);
        }
        let g = q(rng.gen_range(1..5)) * q(if rng.gen_bool(0.5) { 1 } else { -1 });
        let scaled = torsion_phi(&c, &unit().scaled(&g), &CellFrame::Standard, &h).unwrap();
        assert_eq!(scaled.value, base.value.clone() * g);
    }
}

#[test]
fn phi_frame_covariance() {
    let mut rng = StdRng::seed_from_u64(99);
    let mut checked = 0;
    while checked < 30 {
        let c = random_complex(&mut rng, 3, 3);
        let h = compute_homology(&c);
        let base = torsion_phi(&c, &unit(), &CellFrame::Standard, &h).unwrap();
        // Random invertible frames; the element `c` stays the standard
        // volume element, so its coordinate in the new frame is
        // Π det(frame_q)^{-(-1)^{q+1}}... i.e. the inverse transition.
        let frames: Vec<Matrix<Rational>> = c
            .dims()
            .dims()
            .iter()
            .map(|&n| loop {
                let data = (0..n * n).map(|_| q(rng.gen_range(-2..=2))).collect();
                let f = Matrix::from_vec(n, n, data).unwrap();
                if !f.det().unwrap().is_zero() {
                    break f;
                }
            })
            .collect();
        let mut coord = Rational::one();
        for (q_deg, f) in frames.iter().enumerate() {
            let g = f.det().unwrap();
            coord = if q_deg % 2 == 0 { coord / g } else { coord * g };
        }
        let c_new = DetLineCoord::new(coord, "random");
        let v = torsion_phi(&c, &c_new, &CellFrame::Bases(frames), &h).unwrap();
        assert_eq!(v.value, base.value);
        checked += 1;
    }
}

#[test]
fn fuse_examples() {
    let one = unit();
    let v = GradedDims::new(vec![0, 0]);
    let w = GradedDims::new(vec![0, 0]);
    assert_eq!(fuse(&one, &v, &one, &w).unwrap().value, q(1));
    let v = GradedDims::new(vec![1, 1]);
    let w = GradedDims::new(vec![1, 0]);
    assert_eq!(fuse(&one, &v, &one, &w).unwrap().value, q(-1));
    let g = q(5);
    assert_eq!(fuse(&one.scaled(&g), &v, &one, &w).unwrap().value, q(-5));
    assert!(matches!(
        fuse(&one, &GradedDims::new(vec![1]), &one, &w),
        Err(Error::DegreeMismatch(0, 1))
    ));
}

#[test]
fn dualize_examples() {
    let v = GradedDims::new(vec![1, 0, 0, 1]);
    let d = dualize(&unit(), &v, &identity_pairing(&v)).unwrap();
    assert_eq!(d.value, q(1));

    let v = GradedDims::new(vec![1, 1]);
    let s = duality_sign(&v).unwrap();
    let d = dualize(&unit(), &v, &identity_pairing(&v)).unwrap();
    assert_eq!(d.value, q(s.sign()));

    // Doubling the degree-0 basis vector of V halves the dual vector in V'_m.
    let v = GradedDims::new(vec![1, 0, 0, 1]);
    let mut pairing = identity_pairing::<Rational>(&v);
    pairing[3] = qm(&[&[2]]);
    let d = dualize(&unit(), &v, &pairing).unwrap();
    assert_eq!(d.value, q(2));
    pairing[3] = qm(&[&[0]]);
    assert_eq!(
        dualize(&unit(), &v, &pairing),
        Err(Error::DegeneratePairing(3))
    );
    assert!(matches!(
        dualize(&unit(), &GradedDims::new(vec![1, 1, 1]), &[]),
        Err(Error::EvenTopDegree(2))
    ));
}

fn all_dims(m: usize, max: usize) -> Vec<GradedDims> {
    let mut out = vec![vec![]];
    for _ in 0..=m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=max).map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(GradedDims::new).collect()
}

fn add_dims(a: &GradedDims, b: &GradedDims) -> GradedDims {
    GradedDims::new(a.dims().iter().zip(b.dims()).map(|(x, y)| x + y).collect())
}

#[test]
fn fuse_is_associative() {
    let mut rng = StdRng::seed_from_u64(5);
    for m in 0..4 {
        let dims = all_dims(m, 2);
        for _ in 0..200 {
            let u = &dims[rng.gen_range(0..dims.len())];
            let v = &dims[rng.gen_range(0..dims.len())];
            let w = &dims[rng.gen_range(0..dims.len())];
            let (a, b, c) = (
                unit().scaled(&q(2)),
                unit().scaled(&q(3)),
                unit().scaled(&q(-5)),
            );
            let left = fuse(&fuse(&a, u, &b, v).unwrap(), &add_dims(u, v), &c, w).unwrap();
            let right = fuse(&a, u, &fuse(&b, v, &c, w).unwrap(), &add_dims(v, w)).unwrap();
            assert_eq!(left.value, right.value, "{u:?} {v:?} {w:?}");
        }
    }
}

#[test]
fn double_dual_sign() {
    // D ∘ D picks up (-1)^{s(V) + s(V')}, which is trivial for palindromic
    // dimensions but not in general.
    let mut nontrivial = 0;
    for m in [1, 3, 5] {
        for v in all_dims(m, 2) {
            let vd = v.dual();
            let once = dualize(&unit(), &v, &identity_pairing(&v)).unwrap();
            let twice = dualize(&once, &vd, &identity_pairing(&vd)).unwrap();
            let expected = duality_sign(&v).unwrap() + duality_sign(&vd).unwrap();
            assert_eq!(twice.value, q(expected.sign()));
            if v == vd {
                assert_eq!(twice.value, q(1));
            }
            if expected.is_odd() {
                nontrivial += 1;
            }
        }
    }
    assert!(nontrivial > 0);
}
