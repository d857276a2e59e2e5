//! Randomized algebraic properties of the arithmetic layers.

use gfp_core::multipoly::MultiPoly;
use gfp_core::rational::Rational;
use gfp_core::weierstrass::{CurvePoint, EllipticCurve};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

proptest! {
    #[test]
    fn rational_field_axioms(p in rational(), q in rational(), r in rational()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &Rational::zero(), p.clone());
        prop_assert_eq!(&p * &Rational::one(), p.clone());
        prop_assert_eq!(&p + &(-&p), Rational::zero());
    }

    #[test]
    fn rational_inverse(p in nonzero_rational()) {
        prop_assert_eq!(&p * &p.recip().unwrap(), Rational::one());
    }

    #[test]
    fn rational_text_round_trip(p in rational()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), p);
    }

    #[test]
    fn rational_sqrt_of_square(p in rational()) {
        let square = &p * &p;
        prop_assert_eq!(square.sqrt_exact().unwrap(), p.abs());
    }

    #[test]
    fn squarefree_multiples_are_never_squares(
        p in nonzero_rational(),
        idx in 0usize..8,
    ) {
        let squarefree = [2i64, 3, 5, 6, 7, 10, 11, 13][idx];
        let value = &Rational::from(squarefree) * &(&p * &p);
        prop_assert!(value.sqrt_exact().is_none());
        prop_assert!(!value.is_square());
    }
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (
        -9i64..=9,
        0u32..=3,
        0u32..=2,
        0u32..=2,
    );
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        let mut poly = MultiPoly::zero();
        for (coeff, ea, ex, ey) in terms {
            let mono = MultiPoly::var("a")
                .pow(ea)
                .mul(&MultiPoly::var("x").pow(ex))
                .mul(&MultiPoly::var("y").pow(ey))
                .scale(&Rational::from(coeff));
            poly = poly.add(&mono);
        }
        poly
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.sub(&p), MultiPoly::zero());
    }

    #[test]
    fn poly_display_parse_round_trip(p in small_poly()) {
        let text = p.to_string();
        let reparsed = MultiPoly::parse(&text, &["a", "x", "y"]).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn poly_eval_is_a_ring_map(
        p in small_poly(),
        q in small_poly(),
        a in rational(),
        x in rational(),
        y in rational(),
    ) {
        let assignment: BTreeMap<String, Rational> = [
            ("a".to_string(), a),
            ("x".to_string(), x),
            ("y".to_string(), y),
        ]
        .into();
        let ev = |poly: &MultiPoly| poly.eval(&assignment).unwrap();
        prop_assert_eq!(ev(&p.mul(&q)), &ev(&p) * &ev(&q));
        prop_assert_eq!(ev(&p.add(&q)), &ev(&p) + &ev(&q));
    }
}

fn sample_curves() -> Vec<(EllipticCurve, CurvePoint)> {
    let r = |s: &str| s.parse::<Rational>().unwrap();
    vec![
        (
            EllipticCurve::new(r("540"), r("3456")).unwrap(),
            CurvePoint::affine(r("12"), r("108")),
        ),
        (
            EllipticCurve::new(r("54"), r("189")).unwrap(),
            CurvePoint::affine(r("6"), r("27")),
        ),
        (
            EllipticCurve::new(r("0"), r("17")).unwrap(),
            CurvePoint::affine(r("-1"), r("4")),
        ),
        (
            EllipticCurve::new(r("-12"), r("9")).unwrap(),
            CurvePoint::affine(r("-2"), r("5")),
        ),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_axioms_on_small_multiples(
        curve_idx in 0usize..4,
        i in -4i64..=4,
        j in -4i64..=4,
        k in -4i64..=4,
    ) {
        let (curve, seed) = &sample_curves()[curve_idx];
        let p = curve.scalar_mul(i, seed).unwrap();
        let q = curve.scalar_mul(j, seed).unwrap();
        let s = curve.scalar_mul(k, seed).unwrap();
        let pq = curve.add(&p, &q).unwrap();
        prop_assert_eq!(&pq, &curve.add(&q, &p).unwrap());
        prop_assert!(curve.on_curve(&pq));
        prop_assert_eq!(
            curve.add(&pq, &s).unwrap(),
            curve.add(&p, &curve.add(&q, &s).unwrap()).unwrap()
        );
        prop_assert_eq!(curve.add(&p, &p.negate()).unwrap(), CurvePoint::Identity);
    }

    #[test]
    fn scalar_multiplication_is_additive(
        curve_idx in 0usize..4,
        m in -6i64..=6,
        n in -6i64..=6,
    ) {
        let (curve, seed) = &sample_curves()[curve_idx];
        let sum = curve.scalar_mul(m + n, seed).unwrap();
        let split = curve
            .add(&curve.scalar_mul(m, seed).unwrap(), &curve.scalar_mul(n, seed).unwrap())
            .unwrap();
        prop_assert_eq!(&sum, &split);
        prop_assert!(curve.on_curve(&sum));
    }
}
