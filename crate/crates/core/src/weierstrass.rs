//! Short Weierstrass curves Y² = X³ + AX + B over the rationals: chord-tangent
//! group law, scalar multiplication, discriminant, and torsion detection.
//!
//! Points do not carry a curve reference; every operation takes the curve
//! explicitly and validates affine inputs, because the same coordinate pair is
//! routinely tested against several curves (e.g. before and after a coordinate
//! rescaling).

use crate::rational::Rational;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("singular curve: 4A^3 + 27B^2 = 0 for A = {a}, B = {b}")]
    Singular { a: Rational, b: Rational },
    #[error("point ({x}, {y}) is not on Y^2 = X^3 + {a}X + {b}")]
    OffCurve {
        x: Rational,
        y: Rational,
        a: Rational,
        b: Rational,
    },
}

/// A nonsingular curve Y² = X³ + AX + B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurve {
    a: Rational,
    b: Rational,
}

/// A rational point: the point at infinity or an affine pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Identity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    /// (X, −Y); the group inverse on any curve.
    pub fn negate(&self) -> Self {
        match self {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Identity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl EllipticCurve {
    /// Rejects singular equations (4A³ + 27B² = 0).
    pub fn new(a: Rational, b: Rational) -> Result<Self, CurveError> {
        let four_a3 = &a.pow(3) * &Rational::from(4);
        let twenty_seven_b2 = &b.pow(2) * &Rational::from(27);
        if (&four_a3 + &twenty_seven_b2).is_zero() {
            return Err(CurveError::Singular { a, b });
        }
        Ok(EllipticCurve { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// −16(4A³ + 27B²). Nonzero by construction.
    pub fn discriminant_standard(&self) -> Rational {
        let four_a3 = &self.a.pow(3) * &Rational::from(4);
        let twenty_seven_b2 = &self.b.pow(2) * &Rational::from(27);
        &(&four_a3 + &twenty_seven_b2) * &Rational::from(-16)
    }

    pub fn on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => {
                y.pow(2) == &(&x.pow(3) + &(&self.a * x)) + &self.b
            }
        }
    }

    pub fn require_on_curve(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.on_curve(p) {
            Ok(())
        } else if let CurvePoint::Affine { x, y } = p {
            Err(CurveError::OffCurve {
                x: x.clone(),
                y: y.clone(),
                a: self.a.clone(),
                b: self.b.clone(),
            })
        } else {
            unreachable!("Identity is always on the curve")
        }
    }

    /// Chord-tangent sum without input validation; callers validate first.
    fn add_raw(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1) = match p {
            CurvePoint::Identity => return q.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Identity => return p.clone(),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Identity;
            }
            // Tangent: (3X² + A) / (2Y).
            let numer = &(&x1.pow(2) * &Rational::from(3)) + &self.a;
            let denom = y1 * &Rational::from(2);
            &numer / &denom
        } else {
            &(y2 - y1) / &(x2 - x1)
        };
        let x3 = &(&slope.pow(2) - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        Ok(self.add_raw(p, q))
    }

    /// [n]p by double-and-add; negative n negates the point first.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.require_on_curve(p)?;
        let base = if n < 0 { p.negate() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Identity;
        let mut step = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_raw(&acc, &step);
            }
            k >>= 1;
            if k > 0 {
                step = self.add_raw(&step, &step);
            }
        }
        Ok(acc)
    }

    /// Smallest n in 1..=12 with [n]p = Identity, or None. By the Mazur bound
    /// on rational torsion, None certifies that p has infinite order.
    pub fn torsion_order(&self, p: &CurvePoint) -> Result<Option<u32>, CurveError> {
        self.require_on_curve(p)?;
        let mut acc = p.clone();
        for n in 1..=12u32 {
            if acc.is_identity() {
                return Ok(Some(n));
            }
            acc = self.add_raw(&acc, p);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn curve(a: &str, b: &str) -> EllipticCurve {
        EllipticCurve::new(r(a), r(b)).unwrap()
    }

    fn pt(x: &str, y: &str) -> CurvePoint {
        CurvePoint::affine(r(x), r(y))
    }

    #[test]
    fn construction_rejects_singular() {
        assert!(matches!(
            EllipticCurve::new(r("-3"), r("2")),
            Err(CurveError::Singular { .. })
        ));
        assert!(EllipticCurve::new(r("0"), r("1")).is_ok());
    }

    #[test]
    fn on_curve_examples() {
        let e = curve("54", "189");
        assert!(e.on_curve(&pt("6", "27")));
        assert!(!e.on_curve(&pt("6", "28")));
        assert!(e.on_curve(&CurvePoint::Identity));
        let e4 = curve("-12", "9");
        assert!(e4.on_curve(&pt("-2", "5")));
    }

    #[test]
    fn add_examples() {
        let e = curve("54", "189");
        let p = pt("6", "27");
        assert_eq!(e.add(&p, &p).unwrap(), pt("-3", "0"));
        let two_torsion = pt("-3", "0");
        assert_eq!(
            e.add(&two_torsion, &two_torsion).unwrap(),
            CurvePoint::Identity
        );
        assert_eq!(e.add(&p, &CurvePoint::Identity).unwrap(), p);
        assert_eq!(e.add(&CurvePoint::Identity, &p).unwrap(), p);
        assert_eq!(e.add(&p, &p.negate()).unwrap(), CurvePoint::Identity);
        assert!(matches!(
            e.add(&p, &pt("1", "1")),
            Err(CurveError::OffCurve { .. })
        ));
    }

    #[test]
    fn scalar_mul_examples() {
        let e = curve("540", "3456");
        let p = pt("12", "108");
        assert_eq!(e.scalar_mul(2, &p).unwrap(), pt("-15/4", "-297/8"));
        assert_eq!(e.scalar_mul(0, &p).unwrap(), CurvePoint::Identity);
        assert_eq!(e.scalar_mul(1, &p).unwrap(), p);
        assert_eq!(e.scalar_mul(-1, &p).unwrap(), p.negate());
        assert_eq!(
            e.scalar_mul(-2, &p).unwrap(),
            e.scalar_mul(2, &p).unwrap().negate()
        );

        let e3 = curve("0", "1");
        assert_eq!(
            e3.scalar_mul(3, &pt("0", "1")).unwrap(),
            CurvePoint::Identity
        );
        assert_eq!(e3.scalar_mul(2, &pt("0", "1")).unwrap(), pt("0", "-1"));
    }

    #[test]
    fn scalar_mul_matches_repeated_add() {
        let e = curve("540", "3456");
        let p = pt("12", "108");
        let mut acc = CurvePoint::Identity;
        for n in 1..=7 {
            acc = e.add(&acc, &p).unwrap();
            assert_eq!(e.scalar_mul(n, &p).unwrap(), acc);
            assert!(e.on_curve(&acc));
        }
    }

    #[test]
    fn torsion_order_examples() {
        let e1 = curve("54", "189");
        assert_eq!(e1.torsion_order(&pt("6", "27")).unwrap(), Some(4));
        assert_eq!(e1.torsion_order(&pt("-3", "0")).unwrap(), Some(2));
        assert_eq!(
            e1.torsion_order(&CurvePoint::Identity).unwrap(),
            Some(1)
        );

        let e3 = curve("0", "1");
        assert_eq!(e3.torsion_order(&pt("0", "1")).unwrap(), Some(3));
        assert_eq!(e3.torsion_order(&pt("2", "3")).unwrap(), Some(6));

        let e = curve("540", "3456");
        assert_eq!(e.torsion_order(&pt("12", "108")).unwrap(), None);
    }

    #[test]
    fn discriminant_examples() {
        let expected = -16 * (4 * 54i64.pow(3) + 27 * 189i64.pow(2));
        assert_eq!(
            curve("54", "189").discriminant_standard(),
            Rational::from(expected)
        );
        assert_eq!(expected, -25509168);
        assert_eq!(curve("0", "1").discriminant_standard(), r("-432"));
    }
}
