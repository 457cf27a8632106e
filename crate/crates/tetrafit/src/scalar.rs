//! Scalar abstraction for the geometry kernel.
//!
//! Everything in the kernel is written against [`Real`], a thin bundle of
//! `num-traits` bounds, so the same code runs at `f32` or `f64`. The crate
//! root exports `f64` aliases for the concrete types; all shipped tolerances
//! assume double precision.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar usable by the geometry kernel.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + 'static
{
    /// Lossy conversion from an `f64` literal (tolerances, table constants).
    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal must convert into Real scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Absolute tolerance for geometric predicates (planarity, convexity,
/// containment). All constructions are closed-form, so this only has to
/// absorb rounding noise.
pub const GEOM_TOL: f64 = 1e-9;

/// Tighter tolerance for orthogonality and other algebraic identities.
pub const ORTHO_TOL: f64 = 1e-12;

/// `GEOM_TOL` in the working scalar, floored at a few hundred epsilons so
/// narrower floats still get a meaningful predicate tolerance.
pub fn geom_tol<T: Real>() -> T {
    T::from_f64_lossy(GEOM_TOL).max(T::epsilon() * T::from_f64_lossy(256.0))
}

/// `ORTHO_TOL` in the working scalar, floored the same way.
pub fn ortho_tol<T: Real>() -> T {
    T::from_f64_lossy(ORTHO_TOL).max(T::epsilon() * T::from_f64_lossy(16.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_convert_to_both_widths() {
        assert_eq!(geom_tol::<f64>(), 1e-9);
        assert_eq!(ortho_tol::<f64>(), 1e-12);
        // f32 tolerances sit above its epsilon instead of below it.
        assert!(geom_tol::<f32>() > f32::EPSILON);
        assert!(ortho_tol::<f32>() > f32::EPSILON);
    }
}
