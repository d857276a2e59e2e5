//! Streams verified nontrivial solutions of the coupled system by walking the
//! multiples [n]·base on the family curve and pulling each one back through
//! the inverse birational map and x-recovery.
//!
//! The walk order is n = 1, 2, 3, ... on a single base point, which makes the
//! output canonical and reproducible. Negative multiples are not walked: −[n]P
//! only mirrors the solutions of [n]P. Multiples that land on an exceptional
//! divisor of the inverse map, recover an undefined x, hit a zero coordinate
//! (F3), or produce the trivial diagonal y = z are skipped and the skip is
//! logged with its reason.

use crate::families::{
    curve_for_family, phi_inverse, recover_x, seed_points, verify_solution, FamilyError, FamilyId,
    FamilyParams, Solution,
};
use crate::weierstrass::{CurvePoint, EllipticCurve};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkipReason {
    /// The pullback gives y = z (and hence x = y = z).
    Trivial,
    /// An inverse-map denominator vanishes at this point.
    ExceptionalDenominator { factor: String },
    /// recover_x has no finite value at this (y, z).
    XUndefined { factor: String },
    /// A coordinate is 0 where f is undefined (F3).
    ZeroCoordinate,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::Trivial => write!(f, "trivial solution y = z"),
            SkipReason::ExceptionalDenominator { factor } => {
                write!(f, "exceptional point: {factor} = 0")
            }
            SkipReason::XUndefined { factor } => write!(f, "x undefined: {factor} = 0"),
            SkipReason::ZeroCoordinate => write!(f, "zero coordinate where f is undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipEntry {
    pub n: i64,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emission {
    pub n: i64,
    pub solution: Solution,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("the base point has finite order: [{n}]·base is the identity, multiples exhausted")]
    Exhausted { n: i64 },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Iterator-like walk over [n]·base, n = 1, 2, 3, ..., yielding verified
/// solutions. Exhausts with an error if the base point has finite order.
#[derive(Debug, Clone)]
pub struct SolutionStream {
    family: FamilyId,
    params: FamilyParams,
    curve: EllipticCurve,
    base: CurvePoint,
    /// Multiple index of `current`; `current` = [n]·base, not yet consumed.
    n: i64,
    current: CurvePoint,
    skip_log: Vec<SkipEntry>,
}

/// The base point walked when none is supplied: the last seed for F1/F2/F4
/// (P1, P, P1), and [2]P for F3, whose seed P itself lies on the exceptional
/// divisor of the inverse map.
pub fn default_base(
    family: FamilyId,
    params: &FamilyParams,
) -> Result<CurvePoint, FamilyError> {
    let seeds = seed_points(family, params)?;
    let seed = seeds.last().expect("every family has a seed").clone();
    if family == FamilyId::F3 {
        let curve = curve_for_family(family, params)?;
        Ok(curve.scalar_mul(2, &seed)?)
    } else {
        Ok(seed)
    }
}

impl SolutionStream {
    pub fn new(
        family: FamilyId,
        params: FamilyParams,
        base: Option<CurvePoint>,
    ) -> Result<Self, FamilyError> {
        let curve = curve_for_family(family, &params)?;
        let base = match base {
            Some(point) => {
                curve.require_on_curve(&point)?;
                point
            }
            None => default_base(family, &params)?,
        };
        Ok(SolutionStream {
            family,
            params,
            curve,
            current: base.clone(),
            base,
            n: 1,
            skip_log: Vec::new(),
        })
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn base(&self) -> &CurvePoint {
        &self.base
    }

    pub fn skip_log(&self) -> &[SkipEntry] {
        &self.skip_log
    }

    /// Attempt the pullback of one curve point; None with a reason if the
    /// point must be skipped.
    fn pull_back(&self, point: &CurvePoint) -> Result<Solution, SkipReason> {
        let (x_big, y_big) = match point {
            CurvePoint::Identity => unreachable!("identity is handled as exhaustion"),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (y, z) = match phi_inverse(self.family, &self.params, x_big, y_big) {
            Ok(pair) => pair,
            Err(FamilyError::ExceptionalPoint { factor }) => {
                return Err(SkipReason::ExceptionalDenominator { factor })
            }
            Err(err) => unreachable!("pullback of a curve point: {err}"),
        };
        if y == z {
            return Err(SkipReason::Trivial);
        }
        let x = match recover_x(self.family, &y, &z) {
            Ok(x) => x,
            Err(FamilyError::NoFiniteX { factor }) => {
                return Err(SkipReason::XUndefined { factor })
            }
            Err(err) => unreachable!("x-recovery: {err}"),
        };
        if self.family == FamilyId::F3 && (x.is_zero() || y.is_zero() || z.is_zero()) {
            return Err(SkipReason::ZeroCoordinate);
        }
        Ok(Solution { x, y, z })
    }

    /// Advance to the next verified solution, logging skips on the way.
    pub fn next_solution(&mut self) -> Result<Emission, GeneratorError> {
        loop {
            if self.current.is_identity() {
                return Err(GeneratorError::Exhausted { n: self.n });
            }
            let n = self.n;
            let outcome = self.pull_back(&self.current.clone());
            self.current = self
                .curve
                .add(&self.current, &self.base)
                .map_err(FamilyError::from)?;
            self.n += 1;
            match outcome {
                Ok(solution) => {
                    let check =
                        verify_solution(self.family, &self.params, &solution.x, &solution.y, &solution.z);
                    debug_assert!(check.valid, "emitted solution failed verification: {:?}", check.reason);
                    return Ok(Emission { n, solution });
                }
                Err(reason) => self.skip_log.push(SkipEntry { n, reason }),
            }
        }
    }
}

/// The first `count` solutions of a fresh stream, together with its skip log.
pub fn generate(
    family: FamilyId,
    params: &FamilyParams,
    count: usize,
    base: Option<CurvePoint>,
) -> Result<(Vec<Emission>, Vec<SkipEntry>), GeneratorError> {
    let mut stream = SolutionStream::new(family, params.clone(), base)?;
    let mut emissions = Vec::with_capacity(count);
    while emissions.len() < count {
        emissions.push(stream.next_solution()?);
    }
    let skips = stream.skip_log().to_vec();
    Ok((emissions, skips))
}
