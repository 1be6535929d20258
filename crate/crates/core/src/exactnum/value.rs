//! Double-precision complex numbers and the exact-or-approximate [`Value`].

use std::fmt;

use num::complex::Complex64;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::Rational;

/// Complex number used for numeric fallback checks.
pub type ComplexF = Complex64;

pub fn cf(re: f64, im: f64) -> ComplexF {
    ComplexF::new(re, im)
}

pub fn is_finite(z: ComplexF) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A constant that is either known exactly or only as a complex float
/// (square roots of non-square rationals, for instance).
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(ComplexF),
}

impl Value {
    pub fn to_complex(&self) -> ComplexF {
        match self {
            Value::Exact(r) => ComplexF::new(r.to_f64(), 0.0),
            Value::Approx(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Principal square root of a rational: exact when it is a perfect square
    /// (or minus one), otherwise a float approximation.
    pub fn sqrt_of(r: &Rational) -> Value {
        match r.perfect_square() {
            Some(s) => Value::Exact(s),
            None => Value::Approx(ComplexF::new(r.to_f64(), 0.0).sqrt()),
        }
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

/// Float rendering with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.16e}", x)
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(z) if z.im == 0.0 => write!(f, "{}", fmt_f64(z.re)),
            Value::Approx(z) => write!(f, "{}{:+.16e}i", fmt_f64(z.re), z.im),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => r.serialize(serializer),
            Value::Approx(z) if z.im == 0.0 => serializer.collect_str(&fmt_f64(z.re)),
            Value::Approx(z) => {
                let mut m = serializer.serialize_map(Some(2))?;
                m.serialize_entry("re", &fmt_f64(z.re))?;
                m.serialize_entry("im", &fmt_f64(z.im))?;
                m.end()
            }
        }
    }
}
