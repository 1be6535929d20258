//! `R[u] = u''' + α u'' + β u' + γ u + δ − B u u'' − A u'²` over each
//! representation of a candidate solution.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{is_finite, Coeff, ComplexF, FieldCoeff, Rational};
use crate::series::{LaurentSeries, RatExpFunction};

use super::general::EXACT_PRECISION;
use super::OdeParams;

/// Residual of a truncated Laurent series. The series must be known through
/// at least χ^(p+3) beyond its leading exponent `p`.
pub fn residual_series<S: Coeff>(params: &OdeParams, u: &LaurentSeries<S>) -> Result<LaurentSeries<S>> {
    if let Some(p) = u.leading_exponent() {
        if u.precision() < p + 4 {
            return Err(Error::InsufficientTruncation {
                need: p + 3,
                have: u.precision(),
            });
        }
    }
    let d1 = u.diff(1);
    let d2 = d1.diff(1);
    let d3 = d2.diff(1);
    let linear = d3
        .add(&d2.scale(&params.alpha))
        .add(&d1.scale(&params.beta))
        .add(&u.scale(&params.gamma))
        .add(&LaurentSeries::constant(
            S::from_rational(&params.delta),
            EXACT_PRECISION,
        ));
    let quad = u.mul(&d2).scale(&params.b).add(&d1.mul(&d1).scale(&params.a));
    Ok(linear.sub(&quad))
}

/// Residual of a rational function of `e^{kz}`; the numerator vanishes
/// identically exactly when the candidate solves the equation.
pub fn residual_ratexp<S: FieldCoeff>(params: &OdeParams, u: &RatExpFunction<S>) -> RatExpFunction<S> {
    let d1 = u.diff_z();
    let d2 = d1.diff_z();
    let d3 = d2.diff_z();
    let k = u.k().clone();
    d3.add(&d2.scale(&params.alpha))
        .add(&d1.scale(&params.beta))
        .add(&u.scale(&params.gamma))
        .add(&RatExpFunction::constant(k, S::from_rational(&params.delta)))
        .sub(&u.mul(&d2).scale(&params.b))
        .sub(&d1.mul(&d1).scale(&params.a))
}

/// Residual of `R[u]` at a point, given `(u, u', u'', u''')` there.
pub fn residual_at(params: &OdeParams, jet: &[ComplexF; 4]) -> ComplexF {
    let [u, d1, d2, d3] = *jet;
    let f = |r: &Rational| r.to_f64();
    d3 + f(&params.alpha) * d2 + f(&params.beta) * d1 + f(&params.gamma) * u + f(&params.delta)
        - f(&params.b) * u * d2
        - f(&params.a) * d1 * d1
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleResidual {
    pub z: [f64; 2],
    /// |R[u](z)|; `None` when the evaluation was not finite.
    pub residual: Option<f64>,
    /// |R[u](z)| / max(1, |u(z)|³).
    pub scaled: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericResidual {
    pub max_abs_residual: f64,
    pub max_scaled_residual: f64,
    pub samples: Vec<SampleResidual>,
    pub failed: Vec<[f64; 2]>,
}

impl NumericResidual {
    pub fn all_finite(&self) -> bool {
        self.failed.is_empty() && !self.samples.is_empty()
    }
}

/// Sample `R[u]` at the given points. `jet` returns `(u, u', u'', u''')`;
/// a non-finite evaluation marks that sample as failed.
pub fn residual_numeric(
    params: &OdeParams,
    jet: impl Fn(ComplexF) -> [ComplexF; 4],
    samples: &[ComplexF],
) -> NumericResidual {
    let mut out = NumericResidual {
        max_abs_residual: 0.0,
        max_scaled_residual: 0.0,
        samples: Vec::with_capacity(samples.len()),
        failed: Vec::new(),
    };
    for &z in samples {
        let j = jet(z);
        let r = residual_at(params, &j);
        if j.iter().all(|v| is_finite(*v)) && is_finite(r) {
            let abs = r.norm();
            let scaled = abs / j[0].norm().powi(3).max(1.0);
            out.max_abs_residual = out.max_abs_residual.max(abs);
            out.max_scaled_residual = out.max_scaled_residual.max(scaled);
            out.samples.push(SampleResidual {
                z: [z.re, z.im],
                residual: Some(abs),
                scaled: Some(scaled),
            });
        } else {
            out.failed.push([z.re, z.im]);
            out.samples.push(SampleResidual {
                z: [z.re, z.im],
                residual: None,
                scaled: None,
            });
        }
    }
    out
}
