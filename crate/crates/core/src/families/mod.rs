//! The four supported (G, f) families.
//!
//! Each family couples a quadric G with a coordinatewise map f:
//!
//! * F1: G = xy − z², f(x) = ax² + bx + c
//! * F2: G = (x+y)z − 2xy, f(x) = ax² + bx + c
//! * F3: G = (x+y)z − 2xy, f(x) = ax + b + c/x
//! * F4: G = (x+y)z − 2xy, f(x) = x(ax² + bx + c)
//!
//! For parameters with abc ≠ 0, solving G = 0 for x and removing the trivial
//! factor (y − z)² reduces the system G = 0, G∘F = 0 to a conic in (y, z),
//! which is birationally equivalent to an elliptic curve. This module builds
//! those curves, evaluates the forward and inverse maps, recognizes the
//! finitely many degenerate parameter cases (which get genus-0
//! parameterizations instead), and verifies solutions.

mod catalog;
mod curves;
mod degenerate;
mod eval;
mod maps;
mod multiples;

pub use catalog::{rank_zero_catalog, rank_zero_pairs, RankZeroCatalog};
pub use curves::{
    classify, curve_for_family, paper_discriminant, reduce_special, seed_points, special_k,
};
pub use degenerate::{degenerate_case_equation, degenerate_parameterize, degenerate_union};
pub use maps::{
    conic, conic_value, conic_z_coefficients, f_value, identity_check, phi_forward, phi_inverse,
    recover_x, verify_generic, verify_remark_xk, verify_solution, GenericVerification,
    Verification,
};
pub use multiples::{collision_table_check, expected_multiple, group_multiple, MultipleLabel};

use crate::rational::Rational;
use crate::weierstrass::{CurveError, CurvePoint, EllipticCurve};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::F1 => "F1",
            FamilyId::F2 => "F2",
            FamilyId::F3 => "F3",
            FamilyId::F4 => "F4",
        }
    }

    /// The quadric G as an expression over x, y, z.
    pub fn g_text(self) -> &'static str {
        match self {
            FamilyId::F1 => "x*y - z^2",
            _ => "(x + y)*z - 2*x*y",
        }
    }

    /// Display form of f (F3's f is rational, not polynomial).
    pub fn f_text(self) -> &'static str {
        match self {
            FamilyId::F1 | FamilyId::F2 => "a*x^2 + b*x + c",
            FamilyId::F3 => "a*x + b + c/x",
            FamilyId::F4 => "x*(a*x^2 + b*x + c)",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(FamilyId::F1),
            "f2" => Ok(FamilyId::F2),
            "f3" => Ok(FamilyId::F3),
            "f4" => Ok(FamilyId::F4),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

/// Coefficients (a, b, c) of f, with abc ≠ 0 enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl FamilyParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, FamilyError> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(FamilyError::ZeroParameter);
        }
        Ok(FamilyParams { a, b, c })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self, FamilyError> {
        FamilyParams::new(Rational::from(a), Rational::from(b), Rational::from(c))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a, b, c) = ({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A rational triple solving both G(x, y, z) = 0 and G(f(x), f(y), f(z)) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Parameter loci where the family curve degenerates. Each case is the
/// vanishing of m·ac − b² for the family's specific m; the curve construction
/// rejects these and the degenerate module handles them instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegenerateCase {
    /// F1 with 4ac = b².
    F1FourAc,
    /// F2 with 2ac = b² (union of two curves, not a parameterization).
    F2TwoAc,
    /// F2 with 4ac = b².
    F2FourAc,
    /// F3 with 4ac = b².
    F3FourAc,
    /// F4 with ac = b².
    F4OneAc,
    /// F4 with 3ac = b² (union of two curves).
    F4ThreeAc,
    /// F4 with 4ac = b².
    F4FourAc,
}

impl DegenerateCase {
    pub const ALL: [DegenerateCase; 7] = [
        DegenerateCase::F1FourAc,
        DegenerateCase::F2TwoAc,
        DegenerateCase::F2FourAc,
        DegenerateCase::F3FourAc,
        DegenerateCase::F4OneAc,
        DegenerateCase::F4ThreeAc,
        DegenerateCase::F4FourAc,
    ];

    pub fn family(self) -> FamilyId {
        match self {
            DegenerateCase::F1FourAc => FamilyId::F1,
            DegenerateCase::F2TwoAc | DegenerateCase::F2FourAc => FamilyId::F2,
            DegenerateCase::F3FourAc => FamilyId::F3,
            DegenerateCase::F4OneAc | DegenerateCase::F4ThreeAc | DegenerateCase::F4FourAc => {
                FamilyId::F4
            }
        }
    }

    /// The m in the case condition m·ac = b².
    pub fn multiplier(self) -> i64 {
        match self {
            DegenerateCase::F4OneAc => 1,
            DegenerateCase::F2TwoAc => 2,
            DegenerateCase::F4ThreeAc => 3,
            _ => 4,
        }
    }

    pub fn condition_text(self) -> &'static str {
        match self.multiplier() {
            1 => "ac = b^2",
            2 => "2ac = b^2",
            3 => "3ac = b^2",
            _ => "4ac = b^2",
        }
    }

    pub fn holds(self, params: &FamilyParams) -> bool {
        let ac = params.a() * params.c();
        &ac * &Rational::from(self.multiplier()) == params.b().pow(2)
    }

    /// True for cases whose solution set splits into a union of two curves
    /// rather than a single rational parameterization.
    pub fn is_union(self) -> bool {
        matches!(self, DegenerateCase::F2TwoAc | DegenerateCase::F4ThreeAc)
    }

    pub fn cli_tag(self) -> &'static str {
        match self {
            DegenerateCase::F1FourAc => "f1-4ac",
            DegenerateCase::F2TwoAc => "f2-2ac",
            DegenerateCase::F2FourAc => "f2-4ac",
            DegenerateCase::F3FourAc => "f3-4ac",
            DegenerateCase::F4OneAc => "f4-ac",
            DegenerateCase::F4ThreeAc => "f4-3ac",
            DegenerateCase::F4FourAc => "f4-4ac",
        }
    }

    pub fn from_cli_tag(tag: &str) -> Option<Self> {
        DegenerateCase::ALL
            .into_iter()
            .find(|case| case.cli_tag() == tag)
    }

    pub fn cases_for(family: FamilyId) -> &'static [DegenerateCase] {
        match family {
            FamilyId::F1 => &[DegenerateCase::F1FourAc],
            FamilyId::F2 => &[DegenerateCase::F2TwoAc, DegenerateCase::F2FourAc],
            FamilyId::F3 => &[DegenerateCase::F3FourAc],
            FamilyId::F4 => &[
                DegenerateCase::F4OneAc,
                DegenerateCase::F4ThreeAc,
                DegenerateCase::F4FourAc,
            ],
        }
    }

    /// The case holding at these parameters, if any. Since abc ≠ 0, at most
    /// one condition m·ac = b² can hold per family.
    pub fn detect(family: FamilyId, params: &FamilyParams) -> Option<DegenerateCase> {
        DegenerateCase::cases_for(family)
            .iter()
            .copied()
            .find(|case| case.holds(params))
    }
}

impl fmt::Display for DegenerateCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {}", self.family(), self.condition_text())
    }
}

/// What is known about the family curve's rational-point group. Positive rank
/// is claimed only with a concrete infinite-order witness (torsion scan up to
/// the Mazur bound came back empty); rank 0 only for the recorded special k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankStatus {
    PositiveRankCertified { witness: CurvePoint },
    RankZeroCatalog { k: Rational },
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NonSingular {
        curve: EllipticCurve,
        rank_status: RankStatus,
    },
    Degenerate {
        case: DegenerateCase,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family {0:?} (expected f1, f2, f3, or f4)")]
    UnknownFamily(String),
    #[error("parameters must satisfy abc != 0")]
    ZeroParameter,
    #[error("degenerate parameters: {case} holds; use the degenerate-case operations")]
    DegenerateParams { case: DegenerateCase },
    #[error("({y}, {z}) does not lie on the {family} conic")]
    NotOnConic {
        family: FamilyId,
        y: Rational,
        z: Rational,
    },
    #[error("exceptional point: denominator {factor} vanishes")]
    ExceptionalPoint { factor: String },
    #[error("no finite x: {factor} = 0")]
    NoFiniteX { factor: String },
    #[error("f is undefined at 0")]
    FUndefinedAtZero,
    #[error("x^{kexp} is undefined at a zero coordinate")]
    NegativePowerAtZero { kexp: i32 },
    #[error("{label} is not defined for {family}")]
    InvalidLabel {
        family: FamilyId,
        label: MultipleLabel,
    },
    #[error("closed form for {label} is undefined at these parameters: {factor} = 0")]
    ClosedFormUndefined {
        label: MultipleLabel,
        factor: String,
    },
    #[error("{family} has no special k at these parameters")]
    NoSpecialK { family: FamilyId },
    #[error("no rank-0 case is recorded for {family} with k = {k}")]
    UnlistedRankZero { family: FamilyId, k: Rational },
    #[error("parameters do not satisfy {case}")]
    ConditionFails { case: DegenerateCase },
    #[error("{case} splits into a union of two curves; use the union operation")]
    UnionCase { case: DegenerateCase },
    #[error("{case} has a rational parameterization; use the parameterize operation")]
    ParameterizedCase { case: DegenerateCase },
    #[error("t = {t} is excluded: {factor} vanishes there")]
    ExcludedParameter { t: Rational, factor: String },
    #[error("expected {expected}, found variables {found:?}")]
    WrongVariables {
        expected: &'static str,
        found: Vec<String>,
    },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn params_reject_zero() {
        assert!(matches!(
            FamilyParams::from_integers(0, 1, 2),
            Err(FamilyError::ZeroParameter)
        ));
        assert!(FamilyParams::from_integers(1, 1, 2).is_ok());
    }

    #[test]
    fn family_parse() {
        assert_eq!("f1".parse::<FamilyId>().unwrap(), FamilyId::F1);
        assert_eq!("F4".parse::<FamilyId>().unwrap(), FamilyId::F4);
        assert!("f5".parse::<FamilyId>().is_err());
    }

    #[test]
    fn degenerate_detection() {
        let p = FamilyParams::from_integers(1, 2, 1).unwrap();
        assert_eq!(
            DegenerateCase::detect(FamilyId::F1, &p),
            Some(DegenerateCase::F1FourAc)
        );
        // 4ac = b² is a case for every family
        assert_eq!(
            DegenerateCase::detect(FamilyId::F2, &p),
            Some(DegenerateCase::F2FourAc)
        );
        let p = FamilyParams::from_integers(1, 1, 2).unwrap();
        assert_eq!(DegenerateCase::detect(FamilyId::F1, &p), None);
        assert_eq!(DegenerateCase::detect(FamilyId::F2, &p), None);

        let p = FamilyParams::from_integers(2, 2, 1).unwrap();
        assert_eq!(
            DegenerateCase::detect(FamilyId::F2, &p),
            Some(DegenerateCase::F2TwoAc)
        );

        let p = FamilyParams::new(r("1"), r("1"), r("1")).unwrap();
        assert_eq!(
            DegenerateCase::detect(FamilyId::F4, &p),
            Some(DegenerateCase::F4OneAc)
        );

        let p = FamilyParams::from_integers(3, 3, 1).unwrap();
        assert_eq!(
            DegenerateCase::detect(FamilyId::F4, &p),
            Some(DegenerateCase::F4ThreeAc)
        );

        let p = FamilyParams::from_integers(1, 1, 2).unwrap();
        for family in FamilyId::ALL {
            assert_eq!(DegenerateCase::detect(family, &p), None);
        }
    }

    #[test]
    fn cli_tags_round_trip() {
        for case in DegenerateCase::ALL {
            assert_eq!(DegenerateCase::from_cli_tag(case.cli_tag()), Some(case));
        }
        assert_eq!(DegenerateCase::from_cli_tag("f1-2ac"), None);
    }
}
