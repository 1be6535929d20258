//! Exact rational arithmetic, complex floats for numeric fallback, and the
//! coefficient traits shared by the series and polynomial types.

mod coeff;
mod rational;
mod value;

pub use coeff::{Coeff, FieldCoeff, NUMERIC_ZERO_TOL};
pub use rational::{rat, rat_arith, rat_perfect_square, ArithOp, Rational};
pub use value::{cf, fmt_f64, is_finite, ComplexF, Value};
