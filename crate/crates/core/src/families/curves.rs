//! Curve construction per family, the published discriminant forms, seed
//! points, special-k detection, and the reduction to the one-parameter curves
//! E_(k).

use super::eval::eval_abc;
use super::{Classification, DegenerateCase, FamilyError, FamilyId, FamilyParams, RankStatus};
use crate::rational::Rational;
use crate::weierstrass::{CurvePoint, EllipticCurve};

fn coefficient_exprs(family: FamilyId) -> (&'static str, &'static str) {
    match family {
        FamilyId::F1 => (
            "27*a^2*b^2*c^2*(3*a*c - b^2)",
            "27*a^3*b^4*c^3*(9*a*c - 2*b^2)",
        ),
        FamilyId::F2 => ("-3*a^4*c^4", "a^4*c^4*(2*a^2*c^2 - 4*a*b^2*c + b^4)"),
        FamilyId::F3 => ("-3*a^2*c^6", "-a^2*c^8*(2*a*c - b^2)"),
        FamilyId::F4 => (
            "-3*a^6*c^2",
            "-a^6*(2*a*c - b^2)*(a^2*c^2 - 4*a*b^2*c + b^4)",
        ),
    }
}

/// The elliptic curve attached to the family at nondegenerate parameters.
pub fn curve_for_family(
    family: FamilyId,
    params: &FamilyParams,
) -> Result<EllipticCurve, FamilyError> {
    if let Some(case) = DegenerateCase::detect(family, params) {
        return Err(FamilyError::DegenerateParams { case });
    }
    let (a_expr, b_expr) = coefficient_exprs(family);
    let a = eval_abc(a_expr, params);
    let b = eval_abc(b_expr, params);
    // The published discriminant vanishes exactly on the degenerate cases,
    // which were just excluded.
    Ok(EllipticCurve::new(a, b)
        .expect("nondegenerate parameters always give a nonsingular curve"))
}

/// The discriminant in the published product form, −(4A³ + 27B²). Zero exactly
/// when the parameters are degenerate for the family.
pub fn paper_discriminant(family: FamilyId, params: &FamilyParams) -> Rational {
    let expr = match family {
        FamilyId::F1 => "-531441*a^8*b^6*c^8*(4*a*c - b^2)",
        FamilyId::F2 => "27*a^8*c^8*b^2*(4*a*c - b^2)*(2*a*c - b^2)^2",
        FamilyId::F3 => "27*a^4*c^16*b^2*(4*a*c - b^2)",
        FamilyId::F4 => "27*a^12*b^2*(4*a*c - b^2)*(3*a*c - b^2)^2*(a*c - b^2)^2",
    };
    eval_abc(expr, params)
}

/// Known rational points on the family curve. The last entry is the seed used
/// for solution generation; F1 and F4 also carry a two-torsion point first.
pub fn seed_points(
    family: FamilyId,
    params: &FamilyParams,
) -> Result<Vec<CurvePoint>, FamilyError> {
    if let Some(case) = DegenerateCase::detect(family, params) {
        return Err(FamilyError::DegenerateParams { case });
    }
    let pairs: &[(&str, &str)] = match family {
        FamilyId::F1 => &[
            ("-3*a*b^2*c", "0"),
            ("6*a*b^2*c", "27*a^2*b^2*c^2"),
        ],
        FamilyId::F2 => &[("-a^2*c^2", "-a^2*c^2*(2*a*c - b^2)")],
        FamilyId::F3 => &[("2*a*c^3", "-a*b*c^4")],
        FamilyId::F4 => &[
            ("2*a^3*c - a^2*b^2", "0"),
            ("-a^3*c", "a^3*b*(3*a*c - b^2)"),
        ],
    };
    Ok(pairs
        .iter()
        .map(|(x, y)| CurvePoint::affine(eval_abc(x, params), eval_abc(y, params)))
        .collect())
}

pub(super) fn special_k_list(family: FamilyId) -> &'static [(i64, i64)] {
    match family {
        FamilyId::F1 => &[(-1, 1), (1, 1), (3, 1)],
        FamilyId::F2 => &[],
        FamilyId::F3 => &[(27, 8), (27, 4)],
        FamilyId::F4 => &[(3, 2)],
    }
}

/// If b² = k·ac for one of the family's recorded rank-0 ratios k, return it.
pub fn special_k(family: FamilyId, params: &FamilyParams) -> Option<Rational> {
    let k = &params.b().pow(2) / &(params.a() * params.c());
    special_k_list(family)
        .iter()
        .map(|&(p, q)| Rational::ratio(p, q))
        .find(|listed| *listed == k)
}

/// Scale divisors (u_div, v_div) with U = Y/u_div, V = X/v_div carrying the
/// family curve onto E_(k). They satisfy u_div² = v_div³, so the image is
/// again in short Weierstrass form.
fn scale_divisors(family: FamilyId, params: &FamilyParams) -> (Rational, Rational) {
    let b = params.b();
    let c = params.c();
    match family {
        FamilyId::F1 => (b.pow(6), b.pow(4)),
        FamilyId::F3 => (&b.pow(3) * &c.pow(3), &b.pow(2) * &c.pow(2)),
        FamilyId::F4 => (&b.pow(9) / &c.pow(3), &b.pow(6) / &c.pow(2)),
        FamilyId::F2 => unreachable!("F2 has no special k"),
    }
}

/// At special k, rescale the family curve to the one-parameter curve E_(k).
/// Returns the reduced curve and the (u_div, v_div) divisors.
pub fn reduce_special(
    family: FamilyId,
    params: &FamilyParams,
) -> Result<(EllipticCurve, (Rational, Rational)), FamilyError> {
    if special_k(family, params).is_none() {
        return Err(FamilyError::NoSpecialK { family });
    }
    let curve = curve_for_family(family, params)?;
    let (u_div, v_div) = scale_divisors(family, params);
    let reduced_a = curve.a() / &v_div.pow(2);
    let reduced_b = curve.b() / &v_div.pow(3);
    let reduced = EllipticCurve::new(reduced_a, reduced_b)
        .expect("rescaling a nonsingular curve preserves nonsingularity");
    Ok((reduced, (u_div, v_div)))
}

/// Classify parameters: degenerate case, or nonsingular curve with the
/// strongest honestly certifiable rank statement.
pub fn classify(family: FamilyId, params: &FamilyParams) -> Classification {
    if let Some(case) = DegenerateCase::detect(family, params) {
        return Classification::Degenerate { case };
    }
    let curve = curve_for_family(family, params).expect("nondegenerate");
    let rank_status = match special_k(family, params) {
        Some(k) => RankStatus::RankZeroCatalog { k },
        None => {
            let seeds = seed_points(family, params).expect("nondegenerate");
            let witness = seeds.last().expect("every family has a seed").clone();
            match curve
                .torsion_order(&witness)
                .expect("seed points lie on the curve")
            {
                None => RankStatus::PositiveRankCertified { witness },
                Some(_) => RankStatus::Undetermined,
            }
        }
    };
    Classification::NonSingular { curve, rank_status }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn params(a: i64, b: i64, c: i64) -> FamilyParams {
        FamilyParams::from_integers(a, b, c).unwrap()
    }

    #[test]
    fn curve_coefficients() {
        let e = curve_for_family(FamilyId::F1, &params(1, 1, 2)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("540"), &r("3456")));

        let e = curve_for_family(FamilyId::F1, &params(1, 1, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("54"), &r("189")));

        let e = curve_for_family(FamilyId::F4, &params(1, 1, 2)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("-12"), &r("9")));

        let e = curve_for_family(FamilyId::F2, &params(1, 1, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("-3"), &r("-1")));
    }

    #[test]
    fn curve_rejects_degenerate() {
        assert!(matches!(
            curve_for_family(FamilyId::F1, &params(1, 2, 1)),
            Err(FamilyError::DegenerateParams {
                case: DegenerateCase::F1FourAc
            })
        ));
    }

    #[test]
    fn discriminants() {
        assert_eq!(
            paper_discriminant(FamilyId::F1, &params(1, 1, 2)),
            Rational::from(-531441i64 * 256 * 7)
        );
        assert_eq!(paper_discriminant(FamilyId::F2, &params(1, 1, 1)), r("81"));
        assert_eq!(paper_discriminant(FamilyId::F1, &params(1, 2, 1)), r("0"));
    }

    #[test]
    fn discriminant_matches_standard_form() {
        for family in FamilyId::ALL {
            let p = params(1, 1, 2);
            let curve = curve_for_family(family, &p).unwrap();
            assert_eq!(
                paper_discriminant(family, &p),
                &curve.discriminant_standard() / &r("16"),
                "family {family}"
            );
        }
    }

    #[test]
    fn seeds_lie_on_curve() {
        let cases = [
            (FamilyId::F1, params(1, 1, 2)),
            (FamilyId::F2, params(1, 1, 1)),
            (FamilyId::F3, params(1, 1, 1)),
            (FamilyId::F4, params(1, 1, 2)),
            (FamilyId::F1, params(2, 3, 5)),
            (FamilyId::F4, params(2, 3, 5)),
        ];
        for (family, p) in cases {
            let curve = curve_for_family(family, &p).unwrap();
            for seed in seed_points(family, &p).unwrap() {
                assert!(curve.on_curve(&seed), "{family} {p} seed {seed}");
            }
        }
    }

    #[test]
    fn seed_examples() {
        assert_eq!(
            seed_points(FamilyId::F1, &params(1, 1, 2)).unwrap(),
            vec![
                CurvePoint::affine(r("-6"), r("0")),
                CurvePoint::affine(r("12"), r("108")),
            ]
        );
        assert_eq!(
            seed_points(FamilyId::F3, &params(1, 1, 1)).unwrap(),
            vec![CurvePoint::affine(r("2"), r("-1"))]
        );
        assert_eq!(
            seed_points(FamilyId::F4, &params(1, 1, 2)).unwrap(),
            vec![
                CurvePoint::affine(r("3"), r("0")),
                CurvePoint::affine(r("-2"), r("5")),
            ]
        );
    }

    #[test]
    fn special_k_detection() {
        assert_eq!(special_k(FamilyId::F1, &params(1, 1, 1)), Some(r("1")));
        assert_eq!(special_k(FamilyId::F1, &params(1, 1, -1)), Some(r("-1")));
        assert_eq!(special_k(FamilyId::F1, &params(1, 3, 3)), Some(r("3")));
        assert_eq!(special_k(FamilyId::F1, &params(1, 1, 2)), None);
        assert_eq!(special_k(FamilyId::F2, &params(1, 1, 1)), None);
        assert_eq!(special_k(FamilyId::F4, &params(2, 3, 3)), Some(r("3/2")));
        // b^2 = (27/8) a c at (a,b,c) = (2, 3, 4/3): 9 = (27/8)*(8/3).
        let p = FamilyParams::new(r("2"), r("3"), r("4/3")).unwrap();
        assert_eq!(special_k(FamilyId::F3, &p), Some(r("27/8")));
    }

    #[test]
    fn reduction_examples() {
        let (e, (u, v)) = reduce_special(FamilyId::F1, &params(1, 1, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("54"), &r("189")));
        assert_eq!((u, v), (r("1"), r("1")));

        let (e, _) = reduce_special(FamilyId::F1, &params(1, 3, 3)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("0"), &r("1")));

        let (e, _) = reduce_special(FamilyId::F1, &params(1, 1, -1)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("-108"), &r("297")));

        let p = FamilyParams::new(r("2"), r("3"), r("4/3")).unwrap();
        let (e, _) = reduce_special(FamilyId::F3, &p).unwrap();
        assert_eq!((e.a(), e.b()), (&r("-64/243"), &r("704/19683")));

        let (e, _) = reduce_special(FamilyId::F4, &params(2, 3, 3)).unwrap();
        assert_eq!((e.a(), e.b()), (&r("-64/243"), &r("704/19683")));

        assert!(matches!(
            reduce_special(FamilyId::F1, &params(1, 1, 2)),
            Err(FamilyError::NoSpecialK { .. })
        ));
    }

    #[test]
    fn reduction_carries_points() {
        // b^2 = k a c with k = 1 at (2, 4, 8); check a seed maps onto E_(1).
        let p = params(2, 4, 8);
        assert_eq!(special_k(FamilyId::F1, &p), Some(r("1")));
        let (reduced, (u_div, v_div)) = reduce_special(FamilyId::F1, &p).unwrap();
        for seed in seed_points(FamilyId::F1, &p).unwrap() {
            let CurvePoint::Affine { x, y } = seed else {
                unreachable!()
            };
            let mapped = CurvePoint::affine(&x / &v_div, &y / &u_div);
            assert!(reduced.on_curve(&mapped));
        }
    }

    #[test]
    fn classification_variants() {
        match classify(FamilyId::F1, &params(1, 1, 2)) {
            Classification::NonSingular { rank_status, .. } => {
                assert!(matches!(
                    rank_status,
                    RankStatus::PositiveRankCertified { .. }
                ));
            }
            other => panic!("unexpected {other:?}"),
        }
        match classify(FamilyId::F1, &params(1, 1, 1)) {
            Classification::NonSingular { rank_status, .. } => {
                assert_eq!(rank_status, RankStatus::RankZeroCatalog { k: r("1") });
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            classify(FamilyId::F1, &params(1, 2, 1)),
            Classification::Degenerate {
                case: DegenerateCase::F1FourAc
            }
        );
    }
}
