//! Truncated Laurent series in the local variable χ = z − z₀.
//!
//! A series knows its coefficients for exponents below its `precision`
//! (exclusive); everything from `precision` on is unknown. Arithmetic
//! propagates precision so a result never claims more than its operands
//! justify.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactnum::{Coeff, ComplexF, Rational};

/// Stored coefficients cover `start .. start + coeffs.len()`; exponents from
/// there up to `precision` are known zeros.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<S: Coeff = Rational> {
    /// Exponent of `coeffs[0]`; equals `precision` for the zero series.
    start: i64,
    coeffs: Vec<S>,
    precision: i64,
}

/// Which field operation [`series_arith`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

impl<S: Coeff> LaurentSeries<S> {
    /// Series with `coeffs[i]` at exponent `start + i`, known below
    /// `precision`. Coefficients past `precision` are dropped; missing ones
    /// up to `precision` are taken as zero.
    pub fn new(start: i64, mut coeffs: Vec<S>, precision: i64) -> Self {
        let len = (precision - start).max(0) as usize;
        coeffs.truncate(len);
        let mut s = LaurentSeries {
            start: start.min(precision),
            coeffs,
            precision,
        };
        s.normalize();
        s
    }

    pub fn zero(precision: i64) -> Self {
        LaurentSeries {
            start: precision,
            coeffs: Vec::new(),
            precision,
        }
    }

    pub fn constant(c: S, precision: i64) -> Self {
        Self::monomial(c, 0, precision)
    }

    /// `c χ^exp`, known below `precision`.
    pub fn monomial(c: S, exp: i64, precision: i64) -> Self {
        if exp >= precision {
            return Self::zero(precision);
        }
        Self::new(exp, vec![c], precision)
    }

    fn normalize(&mut self) {
        let scale = self.max_magnitude();
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero_in(scale))
            .unwrap_or(self.coeffs.len());
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.start = self.precision;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero_in(scale)) {
            self.coeffs.pop();
        }
    }

    fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(Coeff::magnitude).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True leading exponent `p`, or `None` for the zero series.
    pub fn leading_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.start)
    }

    /// Lowest exponent that may carry a nonzero coefficient.
    pub fn valuation(&self) -> i64 {
        self.start
    }

    /// Exponents below this value are known.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// `N` such that coefficients are known through χ^(p+N); `-1` for the zero
    /// series.
    pub fn truncation_order(&self) -> i64 {
        if self.is_zero() {
            -1
        } else {
            self.precision - 1 - self.start
        }
    }

    /// Coefficients from the leading exponent through the last nonzero one.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Every known coefficient from the leading exponent up to the precision,
    /// zeros included.
    pub fn known_coeffs(&self) -> Vec<S> {
        (self.start..self.precision).map(|e| self.coeff(e).unwrap()).collect()
    }

    /// Coefficient of χ^exp, or `None` when it is beyond the precision.
    pub fn coeff(&self, exp: i64) -> Option<S> {
        if exp >= self.precision {
            None
        } else if exp < self.start || exp >= self.end() {
            Some(S::zero())
        } else {
            Some(self.coeffs[(exp - self.start) as usize].clone())
        }
    }

    /// Lowest-order known nonzero coefficient as `(exponent, value)`.
    pub fn first_nonzero(&self) -> Option<(i64, S)> {
        self.coeffs.first().map(|c| (self.start, c.clone()))
    }

    /// Same series with precision lowered to `precision`.
    pub fn truncate(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        Self::new(self.start, self.coeffs.clone(), precision)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            precision: self.precision,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        let start = self.start.min(other.start).min(precision);
        let end = [self, other]
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| s.end())
            .max()
            .unwrap_or(start)
            .min(precision);
        let coeffs = (start..end)
            .map(|e| self.coeff(e).unwrap() + other.coeff(e).unwrap())
            .collect();
        Self::new(start, coeffs, precision)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let precision = (self.precision + other.start).min(other.precision + self.start);
        let start = self.start + other.start;
        if self.is_zero() || other.is_zero() || start >= precision {
            return Self::zero(precision);
        }
        let len = ((precision - start) as usize).min(self.coeffs.len() + other.coeffs.len() - 1);
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(start, out, precision)
    }

    pub fn mul_scalar(&self, c: &S) -> Self {
        Self::new(
            self.start,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            self.precision,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(
            self.start,
            self.coeffs.iter().map(|x| x.scale(r)).collect(),
            self.precision,
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(S::one(), i64::MAX / 4);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Term-wise d/dχ (equal to d/dz), applied `order` times.
    pub fn diff(&self, order: u32) -> Self {
        let mut s = self.clone();
        for _ in 0..order {
            s = s.diff_once();
        }
        s
    }

    fn diff_once(&self) -> Self {
        if self.is_zero() {
            return Self::zero(self.precision - 1);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from(self.start + i as i64)))
            .collect();
        Self::new(self.start - 1, coeffs, self.precision - 1)
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> LaurentSeries<T> {
        LaurentSeries::new(self.start, self.coeffs.iter().map(f).collect(), self.precision)
    }

    /// True when every known coefficient is zero.
    pub fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// Sum or product of two series.
pub fn series_arith<S: Coeff>(
    a: &LaurentSeries<S>,
    b: &LaurentSeries<S>,
    op: SeriesOp,
) -> LaurentSeries<S> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
    }
}

/// `order`-th derivative of a series.
pub fn series_diff<S: Coeff>(a: &LaurentSeries<S>, order: u32) -> LaurentSeries<S> {
    a.diff(order)
}

impl LaurentSeries<Rational> {
    /// Partial sum at a complex point.
    pub fn eval_complex(&self, chi: ComplexF) -> ComplexF {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_f64() * chi.powi((self.start + i as i64) as i32))
            .sum()
    }
}

impl<S: Coeff> fmt::Debug for LaurentSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LaurentSeries")
            .field("start", &self.start)
            .field("coeffs", &self.coeffs)
            .field("precision", &self.precision)
            .finish()
    }
}

impl fmt::Display for LaurentSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({c}) χ^{}", self.start + i as i64)?;
            wrote = true;
        }
        if wrote {
            write!(f, " + ")?;
        }
        write!(f, "O(χ^{})", self.precision)
    }
}

const MAX_LISTED: i64 = 1 << 16;

impl Serialize for LaurentSeries<Rational> {
    fn serialize<Sr: Serializer>(&self, serializer: Sr) -> Result<Sr::Ok, Sr::Error> {
        let mut st = serializer.serialize_struct("LaurentSeries", 3)?;
        st.serialize_field("p", &self.start)?;
        // Exact (untruncated) series carry an astronomically large precision.
        if self.precision - self.start <= MAX_LISTED {
            st.serialize_field("coeffs", &self.known_coeffs())?;
            st.serialize_field("N", &self.truncation_order())?;
        } else {
            st.serialize_field("coeffs", &self.coeffs)?;
            st.serialize_field("N", &Option::<i64>::None)?;
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    type Ls = LaurentSeries<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn pole_product() {
        let a = Ls::new(-1, vec![r(1)], 10);
        let sq = series_arith(&a, &a, SeriesOp::Mul);
        assert_eq!(sq.leading_exponent(), Some(-2));
        assert_eq!(sq.coeff(-2), Some(r(1)));
        assert_eq!(sq.coeff(-1), Some(r(0)));
    }

    #[test]
    fn cancellation_renormalizes_leading_exponent() {
        let a = Ls::new(-1, vec![r(1), r(0), r(1)], 10);
        let b = Ls::new(-1, vec![r(-1)], 10);
        let s = series_arith(&a, &b, SeriesOp::Add);
        assert_eq!(s.leading_exponent(), Some(1));
        let a = Ls::new(-1, vec![r(1), r(1)], 10);
        let s = series_arith(&a, &b, SeriesOp::Add);
        assert_eq!(s.leading_exponent(), Some(0));
        assert_eq!(s.coeff(0), Some(r(1)));
    }

    #[test]
    fn geometric_series_inverse() {
        let n = 12;
        let one_plus = Ls::new(0, vec![r(1), r(1)], 100);
        // Oracle: 1/(1+χ) = Σ (−1)^k χ^k.
        let geo = Ls::new(0, (0..n).map(|k| r(if k % 2 == 0 { 1 } else { -1 })).collect(), n);
        let prod = series_arith(&one_plus, &geo, SeriesOp::Mul);
        assert_eq!(prod.precision(), n);
        assert_eq!(prod.coeffs(), &[r(1)]);
        assert_eq!(prod.truncation_order(), n - 1);
        for e in 1..n {
            assert_eq!(prod.coeff(e), Some(r(0)));
        }
        assert_eq!(prod.coeff(n), None);
    }

    #[test]
    fn derivatives() {
        let a = Ls::new(-1, vec![r(1)], 10);
        let d = series_diff(&a, 1);
        assert_eq!(d.first_nonzero(), Some((-2, r(-1))));
        let u0 = rat(3, 7);
        let a = Ls::new(-1, vec![u0.clone()], 10);
        assert_eq!(series_diff(&a, 3).first_nonzero(), Some((-4, &u0 * &r(-6))));
        let c = Ls::new(3, vec![r(1)], 10);
        assert_eq!(series_diff(&c, 1).first_nonzero(), Some((2, r(3))));
        assert_eq!(series_diff(&c, 1).precision(), 9);
    }

    #[test]
    fn constant_derivative_is_zero_series() {
        let c = Ls::constant(r(5), 6);
        let d = c.diff(1);
        assert!(d.is_zero());
        assert_eq!(d.precision(), 5);
    }

    #[test]
    fn numeric_mode_strips_tiny_leading_terms() {
        let s = LaurentSeries::<ComplexF>::new(
            -1,
            vec![ComplexF::new(1e-14, 0.0), ComplexF::new(2.0, 0.0)],
            5,
        );
        assert_eq!(s.leading_exponent(), Some(0));
    }

    #[test]
    fn json_shape() {
        let s = Ls::new(-1, vec![rat(-6, 5), r(0), r(2)], 3);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v, serde_json::json!({"p": -1, "coeffs": ["-6/5", "0", "2", "0"], "N": 3}));
    }
}
