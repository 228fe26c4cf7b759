use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::matrix::Matrix;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 0..5))
        .prop_map(|(low, c)| LaurentPoly::from_int_coeffs(low, &c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        Matrix::from_vec(n, n, v.into_iter().map(Rational::from_i64).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bar_is_a_field_automorphism(f in ratfunc(), g in ratfunc()) {
        prop_assert_eq!((f.clone() * g.clone()).bar(), f.bar() * g.bar());
        prop_assert_eq!((f.clone() + g.clone()).bar(), f.bar() + g.bar());
        prop_assert_eq!(f.bar().bar(), f.clone());
        if let Some(i) = f.inv() {
            prop_assert_eq!(i.bar(), f.bar().inv().unwrap());
        }
    }

    #[test]
    fn field_axioms(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(f.clone() * (g.clone() + h.clone()), f.clone() * g.clone() + f.clone() * h.clone());
        prop_assert_eq!((f.clone() * g.clone()) * h.clone(), f.clone() * (g.clone() * h.clone()));
        prop_assert!((f.clone() - f.clone()).is_zero());
        if let Some(i) = f.inv() {
            prop_assert!((f * i).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfunc(), g in ratfunc(), a in rational()) {
        if let (Ok(x), Ok(y)) = (f.eval_rational(&a), g.eval_rational(&a)) {
            prop_assert_eq!((f.clone() * g.clone()).eval_rational(&a), Ok(x.clone() * y.clone()));
            prop_assert_eq!((f + g).eval_rational(&a), Ok(x + y));
        }
    }

    #[test]
    fn complex_evaluation_matches_exact(f in ratfunc(), a in rational()) {
        if let Ok(x) = f.eval_rational(&a) {
            use num_traits::ToPrimitive;
            let z = f.eval_complex(ComplexSample::new(a.to_f64().unwrap(), 0.0)).unwrap();
            let x = x.to_f64().unwrap();
            prop_assert!((z.re - x).abs() <= 1e-6 * (1.0 + x.abs()) && z.im.abs() < 1e-9);
        }
    }

    #[test]
    fn laurent_parse_round_trip(p in laurent()) {
        prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn ratfunc_parse_round_trip(f in ratfunc()) {
        prop_assert_eq!(f.to_string().parse::<RatFunc>().unwrap(), f);
    }

    #[test]
    fn det_is_multiplicative(a in matrix(4), b in matrix(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn kernel_image_bases_are_sound(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-2i64..=2, 25)) {
        let m = Matrix::from_vec(rows, cols, seed[..rows * cols].iter().map(|&x| Rational::from_i64(x)).collect()).unwrap();
        let ki = m.kernel_image_bases();
        prop_assert!(m.mul(&ki.kernel).unwrap().is_zero());
        prop_assert_eq!(ki.kernel.rank(), ki.kernel.cols());
        prop_assert_eq!(ki.rank + ki.kernel.cols(), cols);
        prop_assert_eq!(m.mul(&ki.image_lift).unwrap().rank(), ki.rank);
    }
}
