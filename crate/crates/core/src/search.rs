//! Brute-force search oracles, independent of the group-law machinery: a
//! quadratic solver for the family conics, a bounded-height enumeration of
//! conic solutions, and a bounded enumeration of rational points on short
//! Weierstrass curves.
//!
//! Results are complete only relative to their bounds; reports carry the
//! bounds and scan statistics so no stronger claim is implied. Scans are
//! stateless: a candidate range may be partitioned, scanned independently,
//! and merged, and the merged report is identical to a sequential scan.

use crate::families::{
    conic_z_coefficients, recover_x, verify_solution, FamilyId, FamilyParams, Solution,
};
use crate::rational::{int_sqrt_exact, Rational};
use crate::weierstrass::{CurvePoint, EllipticCurve};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::RangeInclusive;

/// All rational z with (y, z) on the family conic, ascending. The quadratic
/// in z degenerates to a linear equation when its leading coefficient
/// vanishes; a non-square discriminant gives no roots.
pub fn solve_in_z(family: FamilyId, params: &FamilyParams, y: &Rational) -> Vec<Rational> {
    let (q2, q1, q0) = conic_z_coefficients(family, params, y);
    if q2.is_zero() {
        if q1.is_zero() {
            // constant row: either inconsistent or satisfied by every z; an
            // entire line cannot be enumerated, so both report no roots
            return Vec::new();
        }
        return vec![-&(&q0 / &q1)];
    }
    let disc = &q1.pow(2) - &(&(&Rational::from(4) * &q2) * &q0);
    let Some(root) = disc.sqrt_exact() else {
        return Vec::new();
    };
    let two_q2 = &Rational::from(2) * &q2;
    let z1 = &(&-&q1 - &root) / &two_q2;
    let z2 = &(&-&q1 + &root) / &two_q2;
    match z1.cmp(&z2) {
        Ordering::Less => vec![z1, z2],
        Ordering::Equal => vec![z1],
        Ordering::Greater => vec![z2, z1],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSearchReport {
    pub found: Vec<Solution>,
    pub height_bound: u64,
    /// Canonical y values scanned.
    pub candidates_tested: u64,
    /// z-roots returned by the conic solver across the scan, pre-filter.
    pub squares_found: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolutionScan {
    pub found: Vec<Solution>,
    pub candidates_tested: u64,
    pub squares_found: u64,
}

fn solution_order(a: &Solution, b: &Solution) -> Ordering {
    a.y.height()
        .cmp(&b.y.height())
        .then_with(|| a.y.cmp(&b.y))
        .then_with(|| a.z.cmp(&b.z))
}

/// Scan the canonical y = p/q with q in `q_range`, |p| ≤ height_bound,
/// gcd(p, q) = 1, y ≠ 0. Partition piece of [search_family_solutions].
pub fn scan_family_solutions(
    family: FamilyId,
    params: &FamilyParams,
    height_bound: u64,
    q_range: RangeInclusive<u64>,
) -> SolutionScan {
    let mut scan = SolutionScan::default();
    for q in q_range {
        if q == 0 || q > height_bound {
            continue;
        }
        for p in -(height_bound as i64)..=height_bound as i64 {
            if p == 0 || p.unsigned_abs().gcd(&q) != 1 {
                continue;
            }
            scan.candidates_tested += 1;
            let y = Rational::ratio(p, q as i64);
            for z in solve_in_z(family, params, &y) {
                scan.squares_found += 1;
                if y == z {
                    continue;
                }
                let Ok(x) = recover_x(family, &y, &z) else {
                    continue;
                };
                if family == FamilyId::F3 && (x.is_zero() || y.is_zero() || z.is_zero()) {
                    continue;
                }
                if verify_solution(family, params, &x, &y, &z).valid {
                    scan.found.push(Solution { x, y: y.clone(), z });
                }
            }
        }
    }
    scan
}

/// Merge partition scans into the report of a full sequential scan.
pub fn merge_solution_scans(
    height_bound: u64,
    scans: impl IntoIterator<Item = SolutionScan>,
) -> SolutionSearchReport {
    let mut found = Vec::new();
    let mut candidates_tested = 0;
    let mut squares_found = 0;
    for scan in scans {
        found.extend(scan.found);
        candidates_tested += scan.candidates_tested;
        squares_found += scan.squares_found;
    }
    found.sort_by(solution_order);
    SolutionSearchReport {
        found,
        height_bound,
        candidates_tested,
        squares_found,
    }
}

/// Every solution of the system with canonical y of height ≤ height_bound,
/// found by brute force on the conic and filtered like the generator
/// (nontrivial, x recoverable, nonzero coordinates for F3), sorted by
/// (height of y, y, z).
pub fn search_family_solutions(
    family: FamilyId,
    params: &FamilyParams,
    height_bound: u64,
) -> SolutionSearchReport {
    let scan = scan_family_solutions(family, params, height_bound, 1..=height_bound);
    merge_solution_scans(height_bound, [scan])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSearchReport {
    pub found: Vec<CurvePoint>,
    pub m_bound: u64,
    pub e_bound: u64,
    /// (m, e) pairs scanned, after the gcd filter.
    pub candidates_tested: u64,
    /// Candidates whose cubic value is a perfect square (once per candidate;
    /// both Y signs derive from it).
    pub squares_found: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointScan {
    pub found: Vec<CurvePoint>,
    pub candidates_tested: u64,
    pub squares_found: u64,
}

fn point_order(a: &CurvePoint, b: &CurvePoint) -> Ordering {
    let coords = |p: &CurvePoint| match p {
        CurvePoint::Identity => unreachable!("reports contain affine points only"),
        CurvePoint::Affine { x, y } => (x.clone(), y.clone()),
    };
    let (ax, ay) = coords(a);
    let (bx, by) = coords(b);
    ax.height()
        .cmp(&bx.height())
        .then_with(|| ax.cmp(&bx))
        .then_with(|| ay.cmp(&by))
}

/// Smallest u ≥ 1 with u⁴·A and u⁶·B both integral; (X, Y) → (u²X, u³Y)
/// then maps the curve onto an integral model.
fn clearing_factor(curve: &EllipticCurve) -> BigInt {
    let mut u = BigInt::from(1);
    loop {
        let ur = Rational::from(u.clone());
        if (&ur.pow(4) * curve.a()).is_integer() && (&ur.pow(6) * curve.b()).is_integer() {
            return u;
        }
        u += 1;
    }
}

struct ClearedModel {
    /// u⁴·A, integral.
    a: BigInt,
    /// u⁶·B, integral.
    b: BigInt,
    u: BigInt,
}

fn cleared_model(curve: &EllipticCurve) -> ClearedModel {
    let u = clearing_factor(curve);
    let ur = Rational::from(u.clone());
    let a = (&ur.pow(4) * curve.a()).numer().clone();
    let b = (&ur.pow(6) * curve.b()).numer().clone();
    ClearedModel { a, b, u }
}

impl ClearedModel {
    /// The point (m/e², ±n/e³) of the cleared model, mapped back to the
    /// original curve; one point when n = 0.
    fn push_points(&self, found: &mut Vec<CurvePoint>, m: i64, e: u64, n: BigUint) {
        let e = BigInt::from(e);
        let x_den = &self.u * &self.u * &e * &e;
        let y_den = &x_den * &self.u * &e;
        let x = Rational::normalize(BigInt::from(m), x_den).expect("positive denominator");
        let n = BigInt::from(n);
        if n.is_zero() {
            found.push(CurvePoint::affine(x, Rational::zero()));
            return;
        }
        let y = Rational::normalize(n, y_den).expect("positive denominator");
        found.push(CurvePoint::affine(x.clone(), -&y));
        found.push(CurvePoint::affine(x, y));
    }
}

/// Worst-case |m³ + A·m·e⁴ + B·e⁶| over the scan range.
fn scan_magnitude_bound(model: &ClearedModel, m_bound: u64, e_hi: u64) -> BigUint {
    let e = BigUint::from(e_hi.max(1));
    let m = BigUint::from(m_bound) * e.pow(2);
    m.pow(3) + model.a.magnitude() * &m * e.pow(4) + model.b.magnitude() * e.pow(6)
}

fn scan_range_i128(
    model: &ClearedModel,
    m_bound: u64,
    e_range: RangeInclusive<u64>,
    scan: &mut PointScan,
) {
    let a = model.a.to_i128().expect("checked against the magnitude bound");
    let b = model.b.to_i128().expect("checked against the magnitude bound");
    for e in e_range {
        let e2 = (e as i128) * (e as i128);
        let e4 = e2 * e2;
        let e6 = e4 * e2;
        let m_max = m_bound as i128 * e2;
        for m in -m_max..=m_max {
            if (m.unsigned_abs() as u128).gcd(&(e as u128)) != 1 {
                continue;
            }
            scan.candidates_tested += 1;
            let value = m * m * m + a * m * e4 + b * e6;
            if value < 0 {
                continue;
            }
            let root = (value as u128).isqrt();
            if root * root != value as u128 {
                continue;
            }
            scan.squares_found += 1;
            model.push_points(&mut scan.found, m as i64, e, BigUint::from(root));
        }
    }
}

fn scan_range_bigint(
    model: &ClearedModel,
    m_bound: u64,
    e_range: RangeInclusive<u64>,
    scan: &mut PointScan,
) {
    for e in e_range {
        let e2 = BigInt::from(e) * BigInt::from(e);
        let e4 = &e2 * &e2;
        let e6 = &e4 * &e2;
        let ae4 = &model.a * &e4;
        let be6 = &model.b * &e6;
        let m_max = (BigInt::from(m_bound) * &e2)
            .to_i64()
            .expect("m range fits machine integers");
        for m in -m_max..=m_max {
            if m.unsigned_abs().gcd(&e) != 1 {
                continue;
            }
            scan.candidates_tested += 1;
            let mb = BigInt::from(m);
            let value = &mb * &mb * &mb + &ae4 * &mb + &be6;
            if value.is_negative() {
                continue;
            }
            let Some(root) = int_sqrt_exact(value.magnitude()) else {
                continue;
            };
            scan.squares_found += 1;
            model.push_points(&mut scan.found, m, e, root);
        }
    }
}

fn scan_model(
    model: &ClearedModel,
    m_bound: u64,
    e_range: RangeInclusive<u64>,
    force_bigint: bool,
) -> PointScan {
    let mut scan = PointScan::default();
    let fits_i128 =
        scan_magnitude_bound(model, m_bound, *e_range.end()) < (BigUint::from(1u8) << 126);
    if fits_i128 && !force_bigint {
        scan_range_i128(model, m_bound, e_range, &mut scan);
    } else {
        scan_range_bigint(model, m_bound, e_range, &mut scan);
    }
    scan
}

/// Scan denominators e in `e_range` for points X = m/e² (coordinates of the
/// cleared integral model), |m| ≤ m_bound·e², gcd(m, e) = 1. Partition piece
/// of [search_curve_points].
pub fn scan_curve_points(
    curve: &EllipticCurve,
    m_bound: u64,
    e_range: RangeInclusive<u64>,
) -> PointScan {
    scan_model(&cleared_model(curve), m_bound, e_range, false)
}

/// Merge partition scans into the report of a full sequential scan.
pub fn merge_point_scans(
    m_bound: u64,
    e_bound: u64,
    scans: impl IntoIterator<Item = PointScan>,
) -> PointSearchReport {
    let mut found = Vec::new();
    let mut candidates_tested = 0;
    let mut squares_found = 0;
    for scan in scans {
        found.extend(scan.found);
        candidates_tested += scan.candidates_tested;
        squares_found += scan.squares_found;
    }
    found.sort_by(point_order);
    PointSearchReport {
        found,
        m_bound,
        e_bound,
        candidates_tested,
        squares_found,
    }
}

/// All rational points (X, ±Y) on the curve with X = m/e² in canonical form,
/// |X| ≤ m_bound, 1 ≤ e ≤ e_bound (bounds applying to the cleared integral
/// model), sorted by (height of X, X, Y).
pub fn search_curve_points(
    curve: &EllipticCurve,
    m_bound: u64,
    e_bound: u64,
) -> PointSearchReport {
    let scan = scan_curve_points(curve, m_bound, 1..=e_bound);
    merge_point_scans(m_bound, e_bound, [scan])
}
