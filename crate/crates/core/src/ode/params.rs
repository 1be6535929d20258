use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;

/// Constants of `u''' − B u u'' − A u'² + α u'' + β u' + γ u + δ = 0`.
///
/// The residual is always taken as
/// `R[u] = u''' + α u'' + β u' + γ u + δ − B u u'' − A u'²`; writing the
/// equation as `A u'² + B u u'' = u''' + α u'' + β u' + γ u + δ` is the same
/// relation with the terms moved across.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OdeParams {
    #[serde(rename = "A")]
    pub a: Rational,
    #[serde(rename = "B")]
    pub b: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl OdeParams {
    pub fn new(
        a: Rational,
        b: Rational,
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
    ) -> Self {
        OdeParams {
            a,
            b,
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    /// Only `A` and `B` set; the linear part vanishes.
    pub fn ab(a: Rational, b: Rational) -> Self {
        OdeParams {
            a,
            b,
            ..Default::default()
        }
    }

    pub fn from_i64(a: i64, b: i64, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        OdeParams::new(
            a.into(),
            b.into(),
            alpha.into(),
            beta.into(),
            gamma.into(),
            delta.into(),
        )
    }

    /// Constants of the equation satisfied by `v = u − s`: the `u''` coefficient
    /// becomes `α − B s` and the constant term `δ + γ s`.
    pub fn shifted(&self, s: &Rational) -> Self {
        OdeParams {
            alpha: &self.alpha - &(&self.b * s),
            delta: &self.delta + &(&self.gamma * s),
            ..self.clone()
        }
    }

    /// `A + 2B`, the quantity fixing the simple-pole balance.
    pub fn pole_sum(&self) -> Rational {
        &self.a + &(&self.b + &self.b)
    }
}

impl fmt::Display for OdeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A={} B={} alpha={} beta={} gamma={} delta={}",
            self.a, self.b, self.alpha, self.beta, self.gamma, self.delta
        )
    }
}
