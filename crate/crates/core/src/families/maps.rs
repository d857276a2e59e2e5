//! The birational maps between each family conic and its elliptic curve,
//! x-recovery, solution verification, and the symbolic identities that justify
//! the whole construction.
//!
//! For each family, substituting the x determined by G = 0 into
//! G(f(x), f(y), f(z)) and clearing denominators factors as
//! (y − z)² · C(y, z) up to an explicit multiplier; C is the family conic.
//! `identity_check` verifies that factorization exactly, and `phi_forward` /
//! `phi_inverse` are the mutually inverse maps between C and the curve.

use super::eval::{eval_xy_big, eval_y, eval_yz, formula};
use super::{FamilyError, FamilyId, FamilyParams};
use crate::multipoly::MultiPoly;
use crate::rational::Rational;
use crate::weierstrass::{CurveError, CurvePoint};

/// The family conic C(y, z), as a polynomial in a, b, c, y, z.
pub fn conic(family: FamilyId) -> MultiPoly {
    formula(conic_expr(family), &["a", "b", "c", "y", "z"])
}

fn conic_expr(family: FamilyId) -> &'static str {
    match family {
        FamilyId::F1 => "a*b*y*z^2 + a*c*y^2 + 2*a*c*y*z + a*c*z^2 + b*c*y",
        FamilyId::F2 => "a^2*y^2*z^2 - 2*a*c*y^2 - 2*a*c*y*z + a*c*z^2 - 2*b*c*y + b*c*z",
        FamilyId::F3 => "a*b*y^2*z^2 + 3*a*c*y^2*z - 2*c^2*y + c^2*z",
        FamilyId::F4 => {
            "3*a^2*y^2*z + 2*a*b*y^2 + 2*a*b*y*z - a*b*z^2 - 2*a*c*y + a*c*z + 2*b^2*y - b^2*z"
        }
    }
}

pub fn conic_value(
    family: FamilyId,
    params: &FamilyParams,
    y: &Rational,
    z: &Rational,
) -> Rational {
    eval_yz(conic_expr(family), params, y, z)
}

/// Coefficients (q2, q1, q0) of the conic read as q2·z² + q1·z + q0.
pub fn conic_z_coefficients(
    family: FamilyId,
    params: &FamilyParams,
    y: &Rational,
) -> (Rational, Rational, Rational) {
    let (e2, e1, e0) = match family {
        FamilyId::F1 => ("a*b*y + a*c", "2*a*c*y", "a*c*y^2 + b*c*y"),
        FamilyId::F2 => ("a^2*y^2 + a*c", "-2*a*c*y + b*c", "-2*a*c*y^2 - 2*b*c*y"),
        FamilyId::F3 => ("a*b*y^2", "3*a*c*y^2 + c^2", "-2*c^2*y"),
        FamilyId::F4 => (
            "-a*b",
            "3*a^2*y^2 + 2*a*b*y + a*c - b^2",
            "2*a*b*y^2 - 2*a*c*y + 2*b^2*y",
        ),
    };
    (
        eval_y(e2, params, y),
        eval_y(e1, params, y),
        eval_y(e0, params, y),
    )
}

/// Map a conic point (y, z) to a curve point (X, Y).
pub fn phi_forward(
    family: FamilyId,
    params: &FamilyParams,
    y: &Rational,
    z: &Rational,
) -> Result<(Rational, Rational), FamilyError> {
    if !conic_value(family, params, y, z).is_zero() {
        return Err(FamilyError::NotOnConic {
            family,
            y: y.clone(),
            z: z.clone(),
        });
    }
    let denominator = match family {
        FamilyId::F1 => (p_bypc(params, y), "b*y + c"),
        _ => (y.clone(), "y"),
    };
    if denominator.0.is_zero() {
        return Err(FamilyError::ExceptionalPoint {
            factor: denominator.1.to_string(),
        });
    }
    let den = denominator.0;
    let (x_num, y_num, x_pow, y_pow) = match family {
        FamilyId::F1 => (
            "3*a*b*c*(3*a*c*y + 6*a*c*z - b^2*y + 2*b*c)",
            "27*a^2*b*c^2*(a*b*c*y^2 + 3*a*b*c*y*z - b^3*y*z - a*c^2*y - a*c^2*z + b^2*c*y \
             - b^2*c*z - b*c^2)",
            1,
            2,
        ),
        FamilyId::F2 => (
            "c*(a^2*b*y^2*z + a^2*c*y^2 + a*b*c*z + b^2*c)",
            "b*c^2*(a^3*y^3*z + a^2*b*y^3 + a^2*b*y^2*z + 2*a^2*c*y^2 + a^2*c*y*z + a*b*c*y \
             + a*b*c*z + b^2*c)",
            2,
            3,
        ),
        FamilyId::F3 => (
            "c^2*(a*b*y^2*z + 2*a*c*y^2 + c^2)",
            "c^4*(a*b*y^3 + a*b*y^2*z + 3*a*c*y^2 + c^2)",
            2,
            3,
        ),
        FamilyId::F4 => (
            "2*a^3*c*y^2 - a^2*b^2*y^2 - a^2*b*c*z + a*b^3*z + a^2*c^2 - 2*a*b^2*c + b^4",
            "(a*c - b^2)*(3*a^3*c*y^2 - a^2*b^2*y^2 + a^2*b^2*y*z - a^2*b*c*y - a^2*b*c*z \
             + a*b^3*y + a*b^3*z + a^2*c^2 - 2*a*b^2*c + b^4)",
            2,
            3,
        ),
    };
    Ok((
        &eval_yz(x_num, params, y, z) / &den.pow(x_pow),
        &eval_yz(y_num, params, y, z) / &den.pow(y_pow),
    ))
}

fn p_bypc(params: &FamilyParams, y: &Rational) -> Rational {
    &(params.b() * y) + params.c()
}

/// The inverse map's denominator factors in X, one expression per factor.
fn inverse_denominator_factors(family: FamilyId) -> &'static [&'static str] {
    match family {
        FamilyId::F1 => &["X - 9*a^2*c^2 + 3*a*b^2*c"],
        FamilyId::F2 => &[
            "X^2 - 2*a^2*c^2*X + a^4*c^4 - 2*a^3*b^2*c^3",
            "X^2 - 2*a^2*c^2*X + a^4*c^4 + 4*a^3*b^2*c^3",
        ],
        FamilyId::F3 => &["X + a*c^3", "X - 2*a*c^3"],
        FamilyId::F4 => &["X + a^3*c - 2*a^2*b^2", "X - 2*a^3*c + a^2*b^2"],
    }
}

/// Map a curve point (X, Y) back to a conic point (y, z). Fails on the
/// finitely many exceptional points where a denominator factor vanishes.
pub fn phi_inverse(
    family: FamilyId,
    params: &FamilyParams,
    x: &Rational,
    y: &Rational,
) -> Result<(Rational, Rational), FamilyError> {
    let curve = super::curve_for_family(family, params)?;
    let point = CurvePoint::affine(x.clone(), y.clone());
    if !curve.on_curve(&point) {
        return Err(FamilyError::Curve(CurveError::OffCurve {
            x: x.clone(),
            y: y.clone(),
            a: curve.a().clone(),
            b: curve.b().clone(),
        }));
    }
    let factors: Vec<Rational> = inverse_denominator_factors(family)
        .iter()
        .map(|expr| eval_xy_big(expr, params, x, y))
        .collect();
    if let Some(i) = factors.iter().position(Rational::is_zero) {
        return Err(FamilyError::ExceptionalPoint {
            factor: inverse_denominator_factors(family)[i].to_string(),
        });
    }
    let (y_out, z_out) = match family {
        FamilyId::F1 => {
            let d = &factors[0];
            (
                &eval_xy_big(
                    "-c*(108*a^3*b^2*c^3 - 18*a^2*b^4*c^2 + 9*a^2*c^2*X - 3*a*b^2*c*X \
                     + 6*a*c*Y + X^2)",
                    params,
                    x,
                    y,
                ) / &(params.b() * &d.pow(2)),
                &eval_xy_big("-(9*a^2*b^2*c^2 + 3*a*c*X + Y)", params, x, y)
                    / &(&(&Rational::from(3) * &(params.a() * params.b())) * d),
            )
        }
        FamilyId::F2 => (
            &eval_xy_big(
                "b*c*(-a^3*c^3 + a^2*b^2*c^2 + a*c*X + Y)",
                params,
                x,
                y,
            ) / &factors[0],
            &eval_xy_big(
                "2*b*c*(-2*a^3*c^3 - a^2*b^2*c^2 + 2*a*c*X + Y)",
                params,
                x,
                y,
            ) / &factors[1],
        ),
        FamilyId::F3 => (
            &eval_xy_big("c^2*(Y + a*b*c^4)", params, x, y) / &(&factors[0] * &factors[1]),
            &eval_xy_big("2*c^2*(Y - a*b*c^4)", params, x, y) / &factors[0].pow(2),
        ),
        FamilyId::F4 => (
            &eval_xy_big(
                "-(a*c - b^2)*(-2*a^4*b*c + a^3*b^3 + a*b*X - Y)",
                params,
                x,
                y,
            ) / &(&factors[0] * &factors[1]),
            &eval_xy_big(
                "-2*(a*c - b^2)*(-a^4*b*c - a^3*b^3 + 2*a*b*X - Y)",
                params,
                x,
                y,
            ) / &factors[0].pow(2),
        ),
    };
    Ok((y_out, z_out))
}

/// Recover x from (y, z) using G = 0: x = z²/y for F1, x = yz/(2y − z)
/// otherwise.
pub fn recover_x(family: FamilyId, y: &Rational, z: &Rational) -> Result<Rational, FamilyError> {
    match family {
        FamilyId::F1 => {
            if y.is_zero() {
                Err(FamilyError::NoFiniteX {
                    factor: "y".to_string(),
                })
            } else {
                Ok(&z.pow(2) / y)
            }
        }
        _ => {
            let den = &(&Rational::from(2) * y) - z;
            if den.is_zero() {
                Err(FamilyError::NoFiniteX {
                    factor: "2*y - z".to_string(),
                })
            } else {
                Ok(&(y * z) / &den)
            }
        }
    }
}

/// f applied to one coordinate.
pub fn f_value(
    family: FamilyId,
    params: &FamilyParams,
    v: &Rational,
) -> Result<Rational, FamilyError> {
    let quadratic = |v: &Rational| &(&(params.a() * &v.pow(2)) + &(params.b() * v)) + params.c();
    match family {
        FamilyId::F1 | FamilyId::F2 => Ok(quadratic(v)),
        FamilyId::F3 => {
            if v.is_zero() {
                Err(FamilyError::FUndefinedAtZero)
            } else {
                Ok(&(&(params.a() * v) + params.b()) + &(params.c() / v))
            }
        }
        FamilyId::F4 => Ok(v * &quadratic(v)),
    }
}

fn g_of(family: FamilyId, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    match family {
        FamilyId::F1 => &(x * y) - &z.pow(2),
        _ => &(&(x + y) * z) - &(&Rational::from(2) * &(x * y)),
    }
}

/// Result of checking a candidate solution; invalid results carry the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub reason: Option<String>,
}

impl Verification {
    fn ok() -> Self {
        Verification {
            valid: true,
            reason: None,
        }
    }

    fn fail(reason: impl Into<String>) -> Self {
        Verification {
            valid: false,
            reason: Some(reason.into()),
        }
    }
}

/// Check G(x,y,z) = 0 and G(f(x),f(y),f(z)) = 0 exactly.
pub fn verify_solution(
    family: FamilyId,
    params: &FamilyParams,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Verification {
    if family == FamilyId::F3 && (x.is_zero() || y.is_zero() || z.is_zero()) {
        return Verification::fail("f undefined at 0");
    }
    let g = g_of(family, x, y, z);
    if !g.is_zero() {
        return Verification::fail(format!("G(x, y, z) = {g}, not 0"));
    }
    let fx = f_value(family, params, x).expect("zero coordinates excluded above");
    let fy = f_value(family, params, y).expect("zero coordinates excluded above");
    let fz = f_value(family, params, z).expect("zero coordinates excluded above");
    let gf = g_of(family, &fx, &fy, &fz);
    if !gf.is_zero() {
        return Verification::fail(format!("G(f(x), f(y), f(z)) = {gf}, not 0"));
    }
    Verification::ok()
}

/// Verification against a caller-supplied G and f. G must use only x, y, z;
/// f must be univariate. The check that matters is G∘F = 0; the value of G
/// itself at the triple is reported alongside so callers can see whether the
/// input also lies on G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericVerification {
    pub g_value: Rational,
    pub gf_value: Rational,
}

impl GenericVerification {
    pub fn accepted(&self) -> bool {
        self.gf_value.is_zero()
    }
}

pub fn verify_generic(
    g: &MultiPoly,
    f: &MultiPoly,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<GenericVerification, FamilyError> {
    let bad: Vec<String> = g
        .variables()
        .iter()
        .filter(|v| !matches!(v.as_str(), "x" | "y" | "z"))
        .cloned()
        .collect();
    if !bad.is_empty() {
        return Err(FamilyError::WrongVariables {
            expected: "G over the variables x, y, z",
            found: bad,
        });
    }
    if f.variables().len() > 1 {
        return Err(FamilyError::WrongVariables {
            expected: "a univariate f",
            found: f.variables().to_vec(),
        });
    }
    let f_at = |v: &Rational| -> Rational {
        match f.variables() {
            [] => f.eval_pairs(&[]).unwrap(),
            [var] => f.eval_pairs(&[(var.as_str(), v)]).unwrap(),
            _ => unreachable!(),
        }
    };
    let g_at = |x: &Rational, y: &Rational, z: &Rational| -> Rational {
        g.eval_pairs(&[("x", x), ("y", y), ("z", z)]).unwrap()
    };
    Ok(GenericVerification {
        g_value: g_at(x, y, z),
        gf_value: g_at(&f_at(x), &f_at(y), &f_at(z)),
    })
}

/// For a triple with xy = z², every twist f_k(v) = v^kexp · (av² + bv + c) of
/// the F1 map again satisfies f_k(x)·f_k(y) = f_k(z)². This checks one kexp.
pub fn verify_remark_xk(
    params: &FamilyParams,
    kexp: i32,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<bool, FamilyError> {
    if kexp < 0 && (x.is_zero() || y.is_zero() || z.is_zero()) {
        return Err(FamilyError::NegativePowerAtZero { kexp });
    }
    let f_k = |v: &Rational| -> Rational {
        let base = f_value(FamilyId::F1, params, v).expect("F1 f is total");
        let power = v.pow(kexp.unsigned_abs());
        if kexp >= 0 {
            &base * &power
        } else {
            &base / &power
        }
    };
    Ok(&f_k(x) * &f_k(y) == f_k(z).pow(2))
}

/// Symbolically verify the family's defining factorization: with x eliminated
/// through G = 0 and denominators cleared, G∘F equals a constant times
/// (y − z)² · C(y, z). Returns false only if the algebra is wrong.
pub fn identity_check(family: FamilyId) -> bool {
    let vars = &["a", "b", "c", "x", "y", "z"];
    let p = |expr: &str| formula(expr, vars);
    let quad = |v: &str| p(&format!("a*{v}^2 + b*{v} + c"));
    let conic = conic(family);
    let trivial_factor = p("(y - z)^2");

    let (gf, x_num, x_den, clear, kappa, extra) = match family {
        FamilyId::F1 => {
            // G∘F = f(x)f(y) − f(z)²; x = z²/y clears to y²·G∘F| = (y−z)²·C1.
            let gf = quad("x").mul(&quad("y")).sub(&quad("z").pow(2));
            (gf, p("z^2"), p("y"), 2, Rational::one(), MultiPoly::one())
        }
        FamilyId::F2 => {
            // (2y−z)²·G∘F| = 2·(y−z)²·C2 with x = yz/(2y−z).
            let (fx, fy, fz) = (quad("x"), quad("y"), quad("z"));
            let gf = fx.add(&fy).mul(&fz).sub(&fx.mul(&fy).scale(&Rational::from(2)));
            (
                gf,
                p("y*z"),
                p("2*y - z"),
                2,
                Rational::from(2),
                MultiPoly::one(),
            )
        }
        FamilyId::F3 => {
            // f(v) = q(v)/v with q(v) = av² + bv + c, so G∘F = H/(xyz) with
            // H = (q(x)y + q(y)x)·q(z) − 2z·q(x)q(y). Substituting
            // x = yz/(2y−z) clears to (2y−z)²·H| = −2·(y−z)²·C3.
            let (qx, qy, qz) = (quad("x"), quad("y"), quad("z"));
            let h = qx
                .mul(&p("y"))
                .add(&qy.mul(&p("x")))
                .mul(&qz)
                .sub(&p("2*z").mul(&qx).mul(&qy));
            (
                h,
                p("y*z"),
                p("2*y - z"),
                2,
                Rational::from(-2),
                MultiPoly::one(),
            )
        }
        FamilyId::F4 => {
            // f(v) = v·q(v) has degree 3, so clearing x = yz/(2y−z) costs
            // (2y−z)³ and the right side picks up y²z²:
            // (2y−z)³·G∘F| = 2·y²z²·(y−z)²·C4.
            let cubic = |v: &str| p(v).mul(&quad(v));
            let (fx, fy, fz) = (cubic("x"), cubic("y"), cubic("z"));
            let gf = fx.add(&fy).mul(&fz).sub(&fx.mul(&fy).scale(&Rational::from(2)));
            (
                gf,
                p("y*z"),
                p("2*y - z"),
                3,
                Rational::from(2),
                p("y^2*z^2"),
            )
        }
    };
    let cleared = gf
        .substitute_ratio("x", &x_num, &x_den, clear)
        .expect("clearing power covers the x-degree");
    let rhs = trivial_factor.mul(&conic).mul(&extra).scale(&kappa);
    cleared.sub(&rhs).is_zero()
}
