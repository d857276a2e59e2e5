//! Internal helpers for evaluating the family formulas, which are kept as
//! expression strings so the code mirrors the algebra it implements.

use super::FamilyParams;
use crate::multipoly::MultiPoly;
use crate::rational::Rational;

/// Parse a fixed formula string; only compile-time constants reach this.
pub(super) fn formula(expr: &str, vars: &[&str]) -> MultiPoly {
    MultiPoly::parse(expr, vars).unwrap_or_else(|e| panic!("bad builtin formula {expr:?}: {e}"))
}

pub(super) fn eval_abc(expr: &str, p: &FamilyParams) -> Rational {
    formula(expr, &["a", "b", "c"])
        .eval_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c())])
        .unwrap()
}

pub(super) fn eval_yz(expr: &str, p: &FamilyParams, y: &Rational, z: &Rational) -> Rational {
    formula(expr, &["a", "b", "c", "y", "z"])
        .eval_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c()), ("y", y), ("z", z)])
        .unwrap()
}

pub(super) fn eval_y(expr: &str, p: &FamilyParams, y: &Rational) -> Rational {
    formula(expr, &["a", "b", "c", "y"])
        .eval_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c()), ("y", y)])
        .unwrap()
}

pub(super) fn eval_xy_big(expr: &str, p: &FamilyParams, x: &Rational, y: &Rational) -> Rational {
    formula(expr, &["a", "b", "c", "X", "Y"])
        .eval_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c()), ("X", x), ("Y", y)])
        .unwrap()
}

pub(super) fn eval_t(expr: &str, p: &FamilyParams, t: &Rational) -> Rational {
    formula(expr, &["a", "b", "c", "t"])
        .eval_pairs(&[("a", p.a()), ("b", p.b()), ("c", p.c()), ("t", t)])
        .unwrap()
}
