//! Closed forms for the small multiples of the seed points, the group-law
//! computation they must agree with, and the X-coordinate collision table for
//! the F1 points P0–P8.
//!
//! The closed forms serve as cross-check oracles; computational paths always
//! go through the group law. For F1, P2–P4 are [2]P1, [3]P1, [4]P1 and P5–P8
//! are −(P0 + P1), ..., −(P0 + P4). For the single-seed families, P2 and P3
//! mean [2]P and [3]P.

use super::eval::eval_abc;
use super::{DegenerateCase, FamilyError, FamilyId, FamilyParams};
use crate::weierstrass::CurvePoint;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MultipleLabel {
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
}

impl MultipleLabel {
    pub const ALL: [MultipleLabel; 7] = [
        MultipleLabel::P2,
        MultipleLabel::P3,
        MultipleLabel::P4,
        MultipleLabel::P5,
        MultipleLabel::P6,
        MultipleLabel::P7,
        MultipleLabel::P8,
    ];

    pub fn index(self) -> i64 {
        match self {
            MultipleLabel::P2 => 2,
            MultipleLabel::P3 => 3,
            MultipleLabel::P4 => 4,
            MultipleLabel::P5 => 5,
            MultipleLabel::P6 => 6,
            MultipleLabel::P7 => 7,
            MultipleLabel::P8 => 8,
        }
    }

    pub fn valid_for(family: FamilyId) -> &'static [MultipleLabel] {
        match family {
            FamilyId::F1 => &MultipleLabel::ALL,
            FamilyId::F2 => &[MultipleLabel::P2, MultipleLabel::P3],
            FamilyId::F3 | FamilyId::F4 => &[MultipleLabel::P2],
        }
    }
}

impl fmt::Display for MultipleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.index())
    }
}

impl FromStr for MultipleLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        MultipleLabel::ALL
            .into_iter()
            .find(|label| label.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown multiple label {s:?} (expected P2..P8)"))
    }
}

fn require_label(family: FamilyId, label: MultipleLabel) -> Result<(), FamilyError> {
    if MultipleLabel::valid_for(family).contains(&label) {
        Ok(())
    } else {
        Err(FamilyError::InvalidLabel { family, label })
    }
}

/// The labeled point computed through the group law. May be Identity when the
/// parameters land on a torsion curve.
pub fn group_multiple(
    family: FamilyId,
    params: &FamilyParams,
    label: MultipleLabel,
) -> Result<CurvePoint, FamilyError> {
    require_label(family, label)?;
    let curve = super::curve_for_family(family, params)?;
    let seeds = super::seed_points(family, params)?;
    let generator = seeds.last().expect("every family has a seed");
    let n = label.index();
    if n <= 4 {
        return Ok(curve.scalar_mul(n, generator)?);
    }
    let two_torsion = &seeds[0];
    let inner = curve.scalar_mul(n - 4, generator)?;
    Ok(curve.add(two_torsion, &inner)?.negate())
}

/// Coordinate templates: (X numerator, X denominator, Y numerator,
/// Y denominator) as expressions in a, b, c.
fn closed_form_exprs(
    family: FamilyId,
    label: MultipleLabel,
) -> (&'static str, &'static str, &'static str, &'static str) {
    use MultipleLabel::*;
    match (family, label) {
        (FamilyId::F1, P2) => (
            "3*(3*a*c - b^2)*(a*c - 3*b^2)",
            "4",
            "-27*(a*c - b^2)*(a^2*c^2 + 4*a*b^2*c - b^4)",
            "8",
        ),
        (FamilyId::F1, P3) => (
            "6*a*b^2*c*(13*a^4*c^4 + 24*a^3*b^2*c^3 - 22*a^2*b^4*c^2 + b^8)",
            "(a^2*c^2 - 6*a*b^2*c + b^4)^2",
            "27*a^2*b^2*c^2*(3*a*c - b^2)*(a*c + b^2)*(a^4*c^4 + 24*a^3*b^2*c^3 \
             - 22*a^2*b^4*c^2 + 16*a*b^6*c - 3*b^8)",
            "(a^2*c^2 - 6*a*b^2*c + b^4)^3",
        ),
        (FamilyId::F1, P4) => (
            "3*(3*a*c - b^2)*(a^7*c^7 - 45*a^6*b^2*c^6 + 365*a^5*b^4*c^5 - 121*a^4*b^6*c^4 \
             + 307*a^3*b^8*c^3 - 151*a^2*b^10*c^2 + 31*a*b^12*c - 3*b^14)",
            "16*(a*c - b^2)^2*(a^2*c^2 + 4*a*b^2*c - b^4)^2",
            "-27*(a^4*c^4 - 20*a^3*b^2*c^3 + 6*a^2*b^4*c^2 - 4*a*b^6*c + b^8)*(a^8*c^8 \
             + 80*a^7*b^2*c^7 - 180*a^6*b^4*c^6 + 656*a^5*b^6*c^5 - 282*a^4*b^8*c^4 \
             - 80*a^3*b^10*c^3 + 76*a^2*b^12*c^2 - 16*a*b^14*c + b^16)",
            "64*(a*c - b^2)^3*(a^2*c^2 + 4*a*b^2*c - b^4)^3",
        ),
        (FamilyId::F1, P5) => ("3*a*c*(3*a*c - b^2)", "1", "27*a^3*c^3", "1"),
        (FamilyId::F1, P6) => (
            "3*a*b^2*c*(11*a^2*c^2 + 2*a*b^2*c - b^4)",
            "(a*c - b^2)^2",
            "-54*a^3*b^2*c^3*(a^2*c^2 + 4*a*b^2*c - b^4)",
            "(a*c - b^2)^3",
        ),
        (FamilyId::F1, P7) => (
            "3*a*c*(3*a^5*c^5 - 45*a^4*b^2*c^4 + 102*a^3*b^4*c^3 - 34*a^2*b^6*c^2 \
             + 7*a*b^8*c - b^10)",
            "(a*c + b^2)^2*(3*a*c - b^2)^2",
            "27*a^3*c^3*(a^2*c^2 - 6*a*b^2*c + b^4)*(a^4*c^4 + 24*a^3*b^2*c^3 \
             - 22*a^2*b^4*c^2 + 16*a*b^6*c - 3*b^8)",
            "(a*c + b^2)^3*(3*a*c - b^2)^3",
        ),
        (FamilyId::F1, P8) => (
            "3*a*b^2*c*(47*a^8*c^8 + 328*a^7*b^2*c^7 - 460*a^6*b^4*c^6 - 1096*a^5*b^6*c^5 \
             + 1290*a^4*b^8*c^4 - 392*a^3*b^10*c^3 + 20*a^2*b^12*c^2 + 8*a*b^14*c - b^16)",
            "(a^4*c^4 - 20*a^3*b^2*c^3 + 6*a^2*b^4*c^2 - 4*a*b^6*c + b^8)^2",
            "-108*a^3*b^2*c^3*(a*c - b^2)*(a^2*c^2 + 4*a*b^2*c - b^4)*(a^8*c^8 \
             + 80*a^7*b^2*c^7 - 180*a^6*b^4*c^6 + 656*a^5*b^6*c^5 - 282*a^4*b^8*c^4 \
             - 80*a^3*b^10*c^3 + 76*a^2*b^12*c^2 - 16*a*b^14*c + b^16)",
            "(a^4*c^4 - 20*a^3*b^2*c^3 + 6*a^2*b^4*c^2 - 4*a*b^6*c + b^8)^3",
        ),
        (FamilyId::F2, P2) => ("2*a^2*c^2", "1", "a^2*c^2*(2*a*c - b^2)", "1"),
        (FamilyId::F2, P3) => (
            "7*a^2*c^2 - 16*a*b^2*c + 4*b^4",
            "9",
            "-(2*a*c - b^2)*(5*a^2*c^2 - 32*a*b^2*c + 8*b^4)",
            "27",
        ),
        (FamilyId::F3, P2) => (
            "a*c^3*(81*a*c - 16*b^2)",
            "4*b^2",
            "a*c^4*(729*a^2*c^2 - 216*a*b^2*c + 8*b^4)",
            "8*b^3",
        ),
        (FamilyId::F4, P2) => ("2*a^3*c", "1", "a^3*b^3 - 3*a^4*b*c", "1"),
        _ => unreachable!("label validity checked by the caller"),
    }
}

/// The labeled point from its closed-form coordinates. Errors where the closed
/// form's denominator vanishes (exactly the parameters where the group-law
/// point degenerates to Identity or a two-torsion point).
pub fn expected_multiple(
    family: FamilyId,
    params: &FamilyParams,
    label: MultipleLabel,
) -> Result<CurvePoint, FamilyError> {
    require_label(family, label)?;
    if let Some(case) = DegenerateCase::detect(family, params) {
        return Err(FamilyError::DegenerateParams { case });
    }
    let (x_num, x_den, y_num, y_den) = closed_form_exprs(family, label);
    let mut coords = Vec::with_capacity(2);
    for (num, den) in [(x_num, x_den), (y_num, y_den)] {
        let den_value = eval_abc(den, params);
        if den_value.is_zero() {
            return Err(FamilyError::ClosedFormUndefined {
                label,
                factor: den.to_string(),
            });
        }
        coords.push(&eval_abc(num, params) / &den_value);
    }
    let y = coords.pop().unwrap();
    let x = coords.pop().unwrap();
    Ok(CurvePoint::affine(x, y))
}

/// For F1, report X-coordinate equality for every pair Pi, Pj (0 ≤ i < j ≤ 8),
/// with all points computed through the group law. Pairs involving an Identity
/// point report false (no X coordinate to collide).
pub fn collision_table_check(
    params: &FamilyParams,
) -> Result<Vec<(u8, u8, bool)>, FamilyError> {
    let family = FamilyId::F1;
    let curve = super::curve_for_family(family, params)?;
    let seeds = super::seed_points(family, params)?;
    let (p0, p1) = (&seeds[0], &seeds[1]);
    let mut points: Vec<CurvePoint> = vec![p0.clone(), p1.clone()];
    for n in 2..=4 {
        points.push(curve.scalar_mul(n, p1)?);
    }
    for n in 1..=4 {
        let inner = curve.scalar_mul(n, p1)?;
        points.push(curve.add(p0, &inner)?.negate());
    }
    let x_of = |p: &CurvePoint| match p {
        CurvePoint::Identity => None,
        CurvePoint::Affine { x, .. } => Some(x.clone()),
    };
    let mut table = Vec::with_capacity(36);
    for i in 0..9u8 {
        for j in (i + 1)..9 {
            let collides = match (x_of(&points[i as usize]), x_of(&points[j as usize])) {
                (Some(xi), Some(xj)) => xi == xj,
                _ => false,
            };
            table.push((i, j, collides));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn params(a: i64, b: i64, c: i64) -> FamilyParams {
        FamilyParams::from_integers(a, b, c).unwrap()
    }

    fn pt(x: &str, y: &str) -> CurvePoint {
        CurvePoint::affine(r(x), r(y))
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            expected_multiple(FamilyId::F1, &params(1, 1, 2), MultipleLabel::P2).unwrap(),
            pt("-15/4", "-297/8")
        );
        assert_eq!(
            expected_multiple(FamilyId::F2, &params(1, 1, 1), MultipleLabel::P2).unwrap(),
            pt("2", "1")
        );
        assert_eq!(
            expected_multiple(FamilyId::F3, &params(1, 1, 1), MultipleLabel::P2).unwrap(),
            pt("65/4", "521/8")
        );
    }

    #[test]
    fn closed_forms_match_group_law() {
        let samples = [
            params(1, 1, 2),
            params(2, 3, 5),
            params(-1, 2, 3),
            params(5, -7, 3),
        ];
        for family in FamilyId::ALL {
            for p in &samples {
                for &label in MultipleLabel::valid_for(family) {
                    let closed = expected_multiple(family, p, label).unwrap();
                    let walked = group_multiple(family, p, label).unwrap();
                    assert_eq!(closed, walked, "{family} {p} {label}");
                }
            }
        }
    }

    #[test]
    fn rational_parameters_work_too() {
        let p = FamilyParams::new(r("1/2"), r("3"), r("-7/5")).unwrap();
        for &label in MultipleLabel::valid_for(FamilyId::F1) {
            assert_eq!(
                expected_multiple(FamilyId::F1, &p, label).unwrap(),
                group_multiple(FamilyId::F1, &p, label).unwrap(),
                "{label}"
            );
        }
    }

    #[test]
    fn invalid_labels_rejected() {
        assert!(matches!(
            expected_multiple(FamilyId::F3, &params(1, 1, 2), MultipleLabel::P3),
            Err(FamilyError::InvalidLabel { .. })
        ));
        assert!(matches!(
            group_multiple(FamilyId::F4, &params(1, 1, 2), MultipleLabel::P5),
            Err(FamilyError::InvalidLabel { .. })
        ));
    }

    #[test]
    fn closed_form_undefined_at_torsion_parameters() {
        // At b^2 = ac, [4]P1 is the identity; the closed form has no value.
        let err = expected_multiple(FamilyId::F1, &params(1, 1, 1), MultipleLabel::P4).unwrap_err();
        assert!(matches!(err, FamilyError::ClosedFormUndefined { .. }));
        assert_eq!(
            group_multiple(FamilyId::F1, &params(1, 1, 1), MultipleLabel::P4).unwrap(),
            CurvePoint::Identity
        );
    }

    #[test]
    fn collision_table() {
        let table = collision_table_check(&params(1, 1, 2)).unwrap();
        assert_eq!(table.len(), 36);
        assert!(table.iter().all(|&(_, _, collides)| !collides));

        let table = collision_table_check(&params(2, 3, 5)).unwrap();
        assert!(table.iter().all(|&(_, _, collides)| !collides));

        let table = collision_table_check(&params(1, 1, 1)).unwrap();
        let collisions: Vec<(u8, u8)> = table
            .iter()
            .filter(|&&(_, _, c)| c)
            .map(|&(i, j, _)| (i, j))
            .collect();
        assert!(collisions.contains(&(0, 2)), "X(P0) = X(P2) = -3 at k = 1");
        assert!(!collisions.contains(&(7, 8)));
        assert_eq!(
            collisions,
            vec![
                (0, 2),
                (0, 8),
                (1, 3),
                (1, 5),
                (1, 7),
                (2, 8),
                (3, 5),
                (3, 7),
                (5, 7)
            ]
        );

        assert!(collision_table_check(&params(1, 2, 1)).is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("P2".parse::<MultipleLabel>().unwrap(), MultipleLabel::P2);
        assert_eq!("p8".parse::<MultipleLabel>().unwrap(), MultipleLabel::P8);
        assert!("P9".parse::<MultipleLabel>().is_err());
    }
}
