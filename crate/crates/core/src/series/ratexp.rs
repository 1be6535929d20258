//! Rational functions of w = e^{kz}.
//!
//! Differentiation in z acts as `k w d/dw`, so simply periodic candidates of
//! the form `h(e^{kz})` with rational `h` stay in this representation.

use std::fmt;

use crate::exactnum::{ComplexF, FieldCoeff, Rational};

use super::poly::Poly;

/// `numerator(w) / denominator(w)` with `w = e^{kz}`. In exact mode the
/// fraction is reduced and the denominator is monic.
#[derive(Clone, PartialEq)]
pub struct RatExpFunction<S: FieldCoeff = Rational> {
    k: S,
    numerator: Poly<S>,
    denominator: Poly<S>,
}

impl<S: FieldCoeff> RatExpFunction<S> {
    pub fn new(k: S, numerator: Poly<S>, denominator: Poly<S>) -> Option<Self> {
        if denominator.is_zero() {
            return None;
        }
        let (numerator, denominator) = if S::EXACT {
            let g = numerator.gcd(&denominator);
            let n = numerator.div_rem(&g)?.0;
            let d = denominator.div_rem(&g)?.0;
            (n, d)
        } else {
            (numerator, denominator)
        };
        let lead = denominator.leading()?.inverse()?;
        Some(RatExpFunction {
            k,
            numerator: numerator.mul_scalar(&lead),
            denominator: denominator.mul_scalar(&lead),
        })
    }

    pub fn constant(k: S, c: S) -> Self {
        RatExpFunction {
            k,
            numerator: Poly::constant(c),
            denominator: Poly::constant(S::one()),
        }
    }

    /// `w` itself, i.e. e^{kz}.
    pub fn exp(k: S) -> Self {
        RatExpFunction {
            k,
            numerator: Poly::monomial(S::one(), 1),
            denominator: Poly::constant(S::one()),
        }
    }

    /// `h0 / (w - zeta0) + c0`.
    pub fn simple_pole(k: S, h0: S, zeta0: S, c0: S) -> Self {
        let den = Poly::linear_root(zeta0);
        let num = &den.mul_scalar(&c0) + &Poly::constant(h0);
        RatExpFunction::new(k, num, den).expect("nonzero denominator")
    }

    pub fn k(&self) -> &S {
        &self.k
    }

    pub fn numerator(&self) -> &Poly<S> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly<S> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn with(&self, numerator: Poly<S>, denominator: Poly<S>) -> Self {
        RatExpFunction::new(self.k.clone(), numerator, denominator).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        self.with(num, &self.denominator * &other.denominator)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatExpFunction {
            k: self.k.clone(),
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.with(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.with(self.numerator.scale(r), self.denominator.clone())
    }

    pub fn add_constant(&self, c: &S) -> Self {
        self.add(&Self::constant(self.k.clone(), c.clone()))
    }

    /// d/dz of `f(e^{kz})`: `k w (N'D − ND') / D²`.
    pub fn diff_z(&self) -> Self {
        let n = &self.numerator;
        let d = &self.denominator;
        let top = &(&n.derivative() * d) - &(n * &d.derivative());
        let kw = Poly::monomial(self.k.clone(), 1);
        self.with(&kw * &top, d * d)
    }
}

/// Derivative with respect to z.
pub fn ratexp_diff_z<S: FieldCoeff>(f: &RatExpFunction<S>) -> RatExpFunction<S> {
    f.diff_z()
}

impl RatExpFunction<Rational> {
    pub fn to_complex(&self) -> RatExpFunction<ComplexF> {
        RatExpFunction {
            k: ComplexF::new(self.k.to_f64(), 0.0),
            numerator: self.numerator.to_complex(),
            denominator: self.denominator.to_complex(),
        }
    }
}

impl RatExpFunction<ComplexF> {
    /// Value at `z`; `None` at a pole.
    pub fn eval(&self, z: ComplexF) -> Option<ComplexF> {
        let w = (self.k * z).exp();
        let d = self.denominator.eval(&w);
        (d.norm() != 0.0).then(|| self.numerator.eval(&w) / d)
    }

    /// |denominator(e^{kz})|, used to keep samples away from poles.
    pub fn denominator_size(&self, z: ComplexF) -> f64 {
        self.denominator.eval(&(self.k * z).exp()).norm()
    }
}

impl<S: FieldCoeff> fmt::Debug for RatExpFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RatExp(k={:?}; {:?} / {:?})",
            self.k, self.numerator, self.denominator
        )
    }
}
