//! Rank-0 catalogs. For each recorded special ratio k (with b² = k·ac) the
//! reduced curve E_(k) has rank 0, so its full rational-point set is finite.
//! For the three F1 ratios the complete affine point lists are recorded here;
//! for the F3 and F4 ratios the rank-0 statement comes without a point list,
//! which the `listed` flag reports.

use super::curves::special_k_list;
use super::eval::formula;
use super::{FamilyError, FamilyId};
use crate::rational::Rational;
use crate::weierstrass::{CurvePoint, EllipticCurve};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankZeroCatalog {
    pub family: FamilyId,
    pub k: Rational,
    pub curve: EllipticCurve,
    pub points: Vec<CurvePoint>,
    /// False when rank 0 is recorded without an accompanying point list.
    pub listed: bool,
}

/// All recorded rank-0 (family, k) pairs, in family order.
pub fn rank_zero_pairs() -> Vec<(FamilyId, Rational)> {
    FamilyId::ALL
        .into_iter()
        .flat_map(|family| {
            special_k_list(family)
                .iter()
                .map(move |&(p, q)| (family, Rational::ratio(p, q)))
        })
        .collect()
}

fn eval_k(expr: &str, k: &Rational) -> Rational {
    formula(expr, &["k"]).eval_pairs(&[("k", k)]).unwrap()
}

/// E_(k) from its one-parameter coefficient formulas. Agrees with
/// reduce_special at any parameters with b² = k·ac.
fn special_curve(family: FamilyId, k: &Rational) -> EllipticCurve {
    let (a_num, a_den, b_num, b_den) = match family {
        FamilyId::F1 => ("-27*(k - 3)", "k^3", "-27*(2*k - 9)", "k^4"),
        FamilyId::F3 => ("-3", "k^2", "k - 2", "k^3"),
        FamilyId::F4 => ("-3", "k^6", "(k - 2)*(k^2 - 4*k + 1)", "k^9"),
        FamilyId::F2 => unreachable!("F2 has no special k"),
    };
    let a = &eval_k(a_num, k) / &eval_k(a_den, k);
    let b = &eval_k(b_num, k) / &eval_k(b_den, k);
    EllipticCurve::new(a, b).expect("recorded special curves are nonsingular")
}

fn point_list(family: FamilyId, k: &Rational) -> Option<&'static [(i64, i64)]> {
    if family != FamilyId::F1 {
        return None;
    }
    if *k == Rational::from(1) {
        Some(&[(-3, 0), (6, 27), (6, -27)])
    } else if *k == Rational::from(-1) {
        Some(&[(3, 0), (-6, 27), (-6, -27), (12, 27), (12, -27)])
    } else if *k == Rational::from(3) {
        Some(&[(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)])
    } else {
        None
    }
}

/// The recorded rank-0 data for (family, k): the reduced curve E_(k) and its
/// complete affine point list where one is recorded.
pub fn rank_zero_catalog(family: FamilyId, k: &Rational) -> Result<RankZeroCatalog, FamilyError> {
    let recorded = special_k_list(family)
        .iter()
        .any(|&(p, q)| Rational::ratio(p, q) == *k);
    if !recorded {
        return Err(FamilyError::UnlistedRankZero {
            family,
            k: k.clone(),
        });
    }
    let curve = special_curve(family, k);
    let (points, listed) = match point_list(family, k) {
        Some(coords) => (
            coords
                .iter()
                .map(|&(x, y)| CurvePoint::affine(Rational::from(x), Rational::from(y)))
                .collect(),
            true,
        ),
        None => (Vec::new(), false),
    };
    Ok(RankZeroCatalog {
        family,
        k: k.clone(),
        curve,
        points,
        listed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{reduce_special, FamilyParams};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(x: i64, y: i64) -> CurvePoint {
        CurvePoint::affine(Rational::from(x), Rational::from(y))
    }

    #[test]
    fn pairs_enumeration() {
        let pairs = rank_zero_pairs();
        assert_eq!(
            pairs,
            vec![
                (FamilyId::F1, r("-1")),
                (FamilyId::F1, r("1")),
                (FamilyId::F1, r("3")),
                (FamilyId::F3, r("27/8")),
                (FamilyId::F3, r("27/4")),
                (FamilyId::F4, r("3/2")),
            ]
        );
    }

    #[test]
    fn f1_catalogs() {
        let cat = rank_zero_catalog(FamilyId::F1, &r("1")).unwrap();
        assert_eq!(cat.curve.a(), &r("54"));
        assert_eq!(cat.curve.b(), &r("189"));
        assert!(cat.listed);
        assert_eq!(cat.points, vec![pt(-3, 0), pt(6, 27), pt(6, -27)]);

        let cat = rank_zero_catalog(FamilyId::F1, &r("-1")).unwrap();
        assert_eq!(cat.curve.a(), &r("-108"));
        assert_eq!(cat.curve.b(), &r("297"));
        assert_eq!(
            cat.points,
            vec![pt(3, 0), pt(-6, 27), pt(-6, -27), pt(12, 27), pt(12, -27)]
        );

        let cat = rank_zero_catalog(FamilyId::F1, &r("3")).unwrap();
        assert_eq!(cat.curve.a(), &r("0"));
        assert_eq!(cat.curve.b(), &r("1"));
        assert_eq!(cat.points, vec![pt(-1, 0), pt(0, 1), pt(0, -1), pt(2, 3), pt(2, -3)]);
    }

    #[test]
    fn catalog_points_lie_on_their_curves() {
        for (family, k) in rank_zero_pairs() {
            let cat = rank_zero_catalog(family, &k).unwrap();
            for p in &cat.points {
                assert!(cat.curve.on_curve(p), "{family}, k = {k}: {p}");
            }
            assert_eq!(cat.listed, !cat.points.is_empty());
        }
    }

    #[test]
    fn unlisted_cases_without_point_lists() {
        let cat = rank_zero_catalog(FamilyId::F3, &r("27/8")).unwrap();
        assert!(!cat.listed);
        assert!(cat.points.is_empty());
        assert_eq!(cat.curve.a(), &r("-64/243"));
        assert_eq!(cat.curve.b(), &r("704/19683"));

        let cat = rank_zero_catalog(FamilyId::F3, &r("27/4")).unwrap();
        assert_eq!(cat.curve.a(), &r("-16/243"));
        assert_eq!(cat.curve.b(), &r("304/19683"));

        // F3 at k = 27/8 and F4 at k = 3/2 reduce to the same curve
        let f4 = rank_zero_catalog(FamilyId::F4, &r("3/2")).unwrap();
        assert_eq!(f4.curve.a(), &r("-64/243"));
        assert_eq!(f4.curve.b(), &r("704/19683"));
    }

    #[test]
    fn unrecorded_pairs_error() {
        assert!(matches!(
            rank_zero_catalog(FamilyId::F1, &r("2")),
            Err(FamilyError::UnlistedRankZero { .. })
        ));
        assert!(matches!(
            rank_zero_catalog(FamilyId::F2, &r("1")),
            Err(FamilyError::UnlistedRankZero { .. })
        ));
    }

    #[test]
    fn special_curve_agrees_with_reduction() {
        // representative parameters with b² = k·ac: (a,b,c) = (q,p,p) for k = p/q
        for (family, k) in rank_zero_pairs() {
            let p = FamilyParams::new(
                Rational::from(k.denom().clone()),
                Rational::from(k.numer().clone()),
                Rational::from(k.numer().clone()),
            )
            .unwrap();
            let (reduced, _) = reduce_special(family, &p).unwrap();
            let cat = rank_zero_catalog(family, &k).unwrap();
            assert_eq!(reduced, cat.curve, "{family}, k = {k}");
        }
    }
}
