//! Exact rational arithmetic for systems of two coupled quadratics: given a
//! quadric G(x, y, z) and a polynomial map f, this crate builds the associated
//! elliptic curves, walks their rational points, and pulls the points back to
//! rational solutions of G(x, y, z) = 0 together with G(f(x), f(y), f(z)) = 0.
//!
//! Everything is computed over the exact rationals; no floating point is used
//! anywhere.

pub mod families;
pub mod generator;
pub mod multipoly;
pub mod rational;
pub mod sampling;
pub mod search;
pub mod weierstrass;

pub use families::{FamilyError, FamilyId, FamilyParams, Solution};
pub use generator::{generate, GeneratorError, SolutionStream};
pub use search::{
    search_curve_points, search_family_solutions, solve_in_z, PointSearchReport,
    SolutionSearchReport,
};
pub use multipoly::{MultiPoly, PolyError};
pub use rational::{Rational, RationalError};
pub use weierstrass::{CurveError, CurvePoint, EllipticCurve};
