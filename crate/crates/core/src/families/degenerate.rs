//! Degenerate parameter cases. When the case condition m·ac = b² holds, the
//! family conic collapses to a genus-0 curve: five cases carry a rational
//! parameterization by t, and two (F2 with 2ac = b², F4 with 3ac = b²) split
//! into a union of two curves with explicit z-branches over any y.

use super::eval::{eval_t, formula};
use super::maps::recover_x;
use super::{DegenerateCase, FamilyError, FamilyParams, Solution};
use crate::multipoly::MultiPoly;
use crate::rational::Rational;

const EQUATION_VARS: [&str; 4] = ["b", "c", "y", "z"];

const UNION_CONSTANT_FACTOR: &str = "b*z + 2*c";

fn union_curve_factor(case: DegenerateCase) -> &'static str {
    match case {
        DegenerateCase::F2TwoAc => "b^2*y^2*z - 2*b*c*y^2 - 4*c^2*y + 2*c^2*z",
        DegenerateCase::F4ThreeAc => "b*y^2 + 2*c*y - c*z",
        _ => unreachable!("not a union case"),
    }
}

/// The defining equation of the case's solution curve: the family conic with
/// a eliminated through the case condition and denominators cleared, as a
/// polynomial in b, c, y, z. Union cases give the expanded two-factor product.
pub fn degenerate_case_equation(case: DegenerateCase) -> MultiPoly {
    if case.is_union() {
        return formula(UNION_CONSTANT_FACTOR, &EQUATION_VARS)
            .mul(&formula(union_curve_factor(case), &EQUATION_VARS));
    }
    let expr = match case {
        DegenerateCase::F1FourAc => {
            "b^2*y*z^2 + b*c*y^2 + 2*b*c*y*z + b*c*z^2 + 4*c^2*y"
        }
        DegenerateCase::F2FourAc => {
            "b^3*y^2*z^2 - 8*b*c^2*y^2 - 8*b*c^2*y*z + 4*b*c^2*z^2 - 32*c^3*y + 16*c^3*z"
        }
        DegenerateCase::F3FourAc => "b^3*y^2*z^2 + 3*b^2*c*y^2*z - 8*c^3*y + 4*c^3*z",
        DegenerateCase::F4OneAc => "3*b*y^2*z + 2*c*y^2 + 2*c*y*z - c*z^2",
        DegenerateCase::F4FourAc => {
            "3*b^2*y^2*z + 8*b*c*y^2 + 8*b*c*y*z - 4*b*c*z^2 + 24*c^2*y - 12*c^2*z"
        }
        DegenerateCase::F2TwoAc | DegenerateCase::F4ThreeAc => unreachable!("handled above"),
    };
    formula(expr, &EQUATION_VARS)
}

/// t values where a formula denominator or a recover_x denominator vanishes
/// (or, for F3, where a coordinate would be 0 and f undefined), as factor
/// expressions in b, c, t.
fn excluded_factors(case: DegenerateCase) -> &'static [&'static str] {
    match case {
        DegenerateCase::F1FourAc => &["2*c*t + b", "b*t + 2*c*t + b", "t"],
        DegenerateCase::F2FourAc => &[
            "68*b^2*t^2 + 48*b*c*t^2 - 144*c^2*t^2 + 4*b*c*t - 24*c^2*t - c^2",
            "100*b^2*t^2 - 192*b*c*t^2 + 144*c^2*t^2 - 16*b*c*t + 24*c^2*t + c^2",
        ],
        DegenerateCase::F3FourAc => &[
            "17*b*t + 6*c*t + b",
            "5*b*t + 6*c*t + b",
            "t",
            "9*b*t + 6*c*t + b",
        ],
        DegenerateCase::F4OneAc => &["t + 1"],
        DegenerateCase::F4FourAc => &["b*t + 2*c*t + b", "2*c*t + b"],
        DegenerateCase::F2TwoAc | DegenerateCase::F4ThreeAc => &[],
    }
}

/// (y numerator, y denominator, z numerator, z denominator) in b, c, t.
fn parameterization_exprs(
    case: DegenerateCase,
) -> (&'static str, &'static str, &'static str, &'static str) {
    match case {
        DegenerateCase::F1FourAc => (
            "-b*c*t^2",
            "(2*c*t + b)^2",
            "-(b*t + 4*c*t + 2*b)*c*t",
            "(2*c*t + b)*(b*t + 2*c*t + b)",
        ),
        DegenerateCase::F2FourAc => (
            "24*c*t*(2*b*t - 12*c*t - c)",
            "68*b^2*t^2 + 48*b*c*t^2 - 144*c^2*t^2 + 4*b*c*t - 24*c^2*t - c^2",
            "-48*c*t*(8*b*t - 12*c*t - c)",
            "100*b^2*t^2 - 192*b*c*t^2 + 144*c^2*t^2 - 16*b*c*t + 24*c^2*t + c^2",
        ),
        DegenerateCase::F3FourAc => (
            "8*c*t*(9*b*t + 6*c*t + b)",
            "(17*b*t + 6*c*t + b)*(5*b*t + 6*c*t + b)",
            "-(17*b*t + 6*c*t + b)*(9*b*t + 6*c*t + b)*c",
            "16*b^3*t^2",
        ),
        DegenerateCase::F4OneAc => (
            "-c*(2*t^2 + 6*t + 3)",
            "3*(t + 1)*b",
            "-c*(2*t^2 + 6*t + 3)",
            "3*b*(t + 1)^2",
        ),
        DegenerateCase::F4FourAc => (
            "-2*c*t*(b*t + 6*c*t + 3*b)",
            "3*(b*t + 2*c*t + b)*(2*c*t + b)",
            "-4*(2*b*t + 6*c*t + 3*b)*c*t",
            "3*(b*t + 2*c*t + b)^2",
        ),
        DegenerateCase::F2TwoAc | DegenerateCase::F4ThreeAc => {
            unreachable!("union cases have no single parameterization")
        }
    }
}

/// The genus-0 parameterization at t: a full solution of the system, with x
/// recovered from (y, z). Union cases must go through [degenerate_union].
pub fn degenerate_parameterize(
    case: DegenerateCase,
    params: &FamilyParams,
    t: &Rational,
) -> Result<Solution, FamilyError> {
    if case.is_union() {
        return Err(FamilyError::UnionCase { case });
    }
    if !case.holds(params) {
        return Err(FamilyError::ConditionFails { case });
    }
    for factor in excluded_factors(case) {
        if eval_t(factor, params, t).is_zero() {
            return Err(FamilyError::ExcludedParameter {
                t: t.clone(),
                factor: (*factor).to_string(),
            });
        }
    }
    let (y_num, y_den, z_num, z_den) = parameterization_exprs(case);
    let y = &eval_t(y_num, params, t) / &eval_t(y_den, params, t);
    let z = &eval_t(z_num, params, t) / &eval_t(z_den, params, t);
    let x = recover_x(case.family(), &y, &z).map_err(|err| match err {
        FamilyError::NoFiniteX { factor } => FamilyError::ExcludedParameter {
            t: t.clone(),
            factor,
        },
        other => other,
    })?;
    Ok(Solution { x, y, z })
}

/// For the two union cases: the z-values of both component curves at the
/// given y, constant branch z = −2c/b first. Each (y, z) satisfies the case's
/// defining equation.
pub fn degenerate_union(
    case: DegenerateCase,
    params: &FamilyParams,
    y: &Rational,
) -> Result<Vec<Rational>, FamilyError> {
    if !case.is_union() {
        return Err(FamilyError::ParameterizedCase { case });
    }
    if !case.holds(params) {
        return Err(FamilyError::ConditionFails { case });
    }
    let (b, c) = (params.b(), params.c());
    let constant = -&(&(&Rational::from(2) * c) / b);
    let curve = match case {
        DegenerateCase::F2TwoAc => {
            // z = 2cy(by + 2c) / (b²y² + 2c²), denominator positive for c ≠ 0
            let num = &(&(&Rational::from(2) * c) * y) * &(&(b * y) + &(&Rational::from(2) * c));
            let den = &(b * y).pow(2) + &(&Rational::from(2) * &c.pow(2));
            &num / &den
        }
        DegenerateCase::F4ThreeAc => {
            let num = y * &(&(b * y) + &(&Rational::from(2) * c));
            &num / c
        }
        _ => unreachable!("is_union checked above"),
    };
    if constant == curve {
        Ok(vec![constant])
    } else {
        Ok(vec![constant, curve])
    }
}
