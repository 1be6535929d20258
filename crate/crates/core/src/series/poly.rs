//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::exactnum::{Coeff, ComplexF, FieldCoeff, Rational};

/// Polynomial with coefficients stored lowest degree first. Exactly-zero
/// leading coefficients are trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct Poly<S: Coeff = Rational> {
    coeffs: Vec<S>,
}

/// Polynomial in the independent variable z over the rationals.
pub type PolyZ = Poly<Rational>;

impl<S: Coeff> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_exactly_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c x^n`.
    pub fn monomial(c: S, n: usize) -> Self {
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: S) -> Self {
        Poly::new(vec![-root, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(Coeff::magnitude).fold(0.0, f64::max)
    }

    /// Zero test: exact kinds compare exactly, numeric kinds require every
    /// coefficient to be below `abs_tol`.
    pub fn is_negligible(&self, abs_tol: f64) -> bool {
        if S::EXACT {
            self.is_zero()
        } else {
            self.coeffs.iter().all(|c| c.magnitude() < abs_tol)
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_scalar(&self, s: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&Rational::from(n as i64)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &S) -> Self {
        let step = Poly::new(vec![a.clone(), S::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &step) + &Poly::constant(c.clone()))
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<S: FieldCoeff> Poly<S> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.leading()?.inverse()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = rem[top].clone() * dl.clone();
            let shift = top - dd;
            quot[shift] = factor.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - factor.clone() * dc.clone();
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_exactly_zero()) {
                rem.pop();
            }
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(FieldCoeff::inverse) {
            Some(inv) => self.mul_scalar(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor. Only meaningful for exact coefficients.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Poly<Rational> {
    pub fn eval_complex(&self, z: ComplexF) -> ComplexF {
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexF::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
    }

    pub fn to_complex(&self) -> Poly<ComplexF> {
        self.map(|c| ComplexF::new(c.to_f64(), 0.0))
    }
}

impl Poly<ComplexF> {
    pub fn eval_at(&self, z: ComplexF) -> ComplexF {
        self.eval(&z)
    }
}

impl<S: Coeff> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<S: Coeff> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<S: Coeff> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Coeff> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<S: Coeff> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (n, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a} z")?,
                (_, true) => write!(f, "z^{n}")?,
                (_, false) => write!(f, "{a} z^{n}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly<Rational> {
    fn serialize<Sr: Serializer>(&self, serializer: Sr) -> Result<Sr::Ok, Sr::Error> {
        self.coeffs.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(c: &[i64]) -> PolyZ {
        Poly::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn division_identity() {
        let a = p(&[5, 0, -3, 2, 7]);
        let d = p(&[1, 2, 3]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn shift_matches_substitution() {
        let a = p(&[1, -2, 0, 4]);
        let s = a.shift(&rat(1, 3));
        for x in [-2, 0, 1, 5] {
            let x = Rational::from(x);
            assert_eq!(s.eval(&x), a.eval(&(&x + &rat(1, 3))));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 3]).to_string(), "3 z^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
    }
}
