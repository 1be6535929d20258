//! Scalar kinds that series and polynomials can carry.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ComplexF, Rational};

/// Commutative ring with rational scalars. Exact kinds test zero exactly;
/// numeric kinds compare against a scale-aware tolerance.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// The value as a rational, when it is one.
    fn as_rational(&self) -> Option<Rational>;
    /// Zero test; `scale` is the magnitude of the surrounding data.
    fn is_zero_in(&self, scale: f64) -> bool;
    fn magnitude(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_exactly_zero(&self) -> bool {
        self.is_zero_in(0.0)
    }
}

/// Coefficient kinds with multiplicative inverses.
pub trait FieldCoeff: Coeff {
    fn inverse(&self) -> Option<Self>;
}

/// Relative tolerance for numeric zero tests.
pub const NUMERIC_ZERO_TOL: f64 = 1e-12;

impl Coeff for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_zero_in(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl FieldCoeff for Rational {
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Coeff for ComplexF {
    const EXACT: bool = false;

    fn zero() -> Self {
        ComplexF::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexF::new(1.0, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        ComplexF::new(r.to_f64(), 0.0)
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r.to_f64()
    }
    fn as_rational(&self) -> Option<Rational> {
        None
    }
    fn is_zero_in(&self, scale: f64) -> bool {
        self.norm() < NUMERIC_ZERO_TOL * (1.0 + scale)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl FieldCoeff for ComplexF {
    fn inverse(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(self.inv())
        }
    }
}
