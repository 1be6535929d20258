use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::catalog::{Family, Mode, SolutionDescriptor};
use crate::error::{Error, Result};
use crate::exactnum::{fmt_f64, ComplexF};
use crate::ode::{residual_at, residual_ratexp, residual_series, OdeParams};

use super::evaluate::{exact_ratexp, exact_series, numeric_jets};

pub const NUMERIC_TOLERANCE: f64 = 1e-9;
/// Samples closer than this to an estimated pole are skipped.
pub const POLE_EXCLUSION: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationMode {
    ExactSeries,
    ExactRatexp,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub mode: VerificationMode,
    pub verified: bool,
    pub detail: Json,
}

/// Eight points on `|z| = 1/2` and eight on `|z| = 2`, offset from the axes.
pub fn default_samples() -> Vec<ComplexF> {
    let mut out = Vec::with_capacity(16);
    for radius in [0.5, 2.0] {
        for i in 0..8 {
            let theta = 2.0 * std::f64::consts::PI * (i as f64 + 0.3) / 8.0;
            out.push(ComplexF::from_polar(radius, theta));
        }
    }
    out
}

fn failed_constraints(d: &SolutionDescriptor) -> Vec<usize> {
    d.constraint_residuals
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn mode_for(d: &SolutionDescriptor) -> VerificationMode {
    match (&d.family, d.mode()) {
        (_, Mode::Numeric) => VerificationMode::Numeric,
        (Family::SimplyPeriodic { .. }, Mode::Exact) => VerificationMode::ExactRatexp,
        _ => VerificationMode::ExactSeries,
    }
}

/// Check `d` against the equation with `params`: exactly when every
/// constant is rational, otherwise at [`default_samples`]. Exact series
/// checks cover `N + 1` residual coefficients from the lowest possible one.
pub fn verify_descriptor(params: &OdeParams, d: &SolutionDescriptor, n: i64) -> Result<VerificationReport> {
    verify_descriptor_with_samples(params, d, n, &default_samples())
}

pub fn verify_descriptor_with_samples(
    params: &OdeParams,
    d: &SolutionDescriptor,
    n: i64,
    samples: &[ComplexF],
) -> Result<VerificationReport> {
    if n < 10 {
        return Err(Error::Precondition(format!("verification order N = {n} must be at least 10")));
    }
    let mode = mode_for(d);
    let bad = failed_constraints(d);
    if !bad.is_empty() {
        return Ok(VerificationReport {
            mode,
            verified: false,
            detail: json!({ "violated_constraints": bad }),
        });
    }
    match mode {
        VerificationMode::ExactSeries => verify_series(params, d, n),
        VerificationMode::ExactRatexp => {
            let f = exact_ratexp(d).expect("exact periodic form");
            let res = residual_ratexp(params, &f);
            let first = res
                .numerator()
                .coeffs()
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .map(|(i, c)| json!({ "w_power": i, "value": c }));
            Ok(VerificationReport {
                mode,
                verified: first.is_none(),
                detail: json!({ "first_nonzero": first }),
            })
        }
        VerificationMode::Numeric => verify_numeric(params, d, samples),
    }
}

fn verify_series(params: &OdeParams, d: &SolutionDescriptor, n: i64) -> Result<VerificationReport> {
    let probe = exact_series(d, 8).expect("exact family");
    let p = probe.leading_exponent().unwrap_or(0).min(0);
    let lowest = (p - 3).min(2 * p - 2).min(0);
    let top = lowest + n;
    // The residual of a series known below P is known below P + p − 3.
    let u = exact_series(d, top + 4 - p).expect("exact family");
    let res = residual_series(params, &u)?.truncate(top + 1);
    let first = res
        .first_nonzero()
        .map(|(e, c)| json!({ "exponent": e, "value": c }));
    Ok(VerificationReport {
        mode: VerificationMode::ExactSeries,
        verified: first.is_none(),
        detail: json!({ "window": [lowest, top], "first_nonzero": first }),
    })
}

/// Sampled check: every usable sample must have
/// `|R[u](z)| ≤ 1e−9 · max(1, |u(z)|³)`.
pub fn verify_numeric(params: &OdeParams, d: &SolutionDescriptor, samples: &[ComplexF]) -> Result<VerificationReport> {
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    let Some(jets) = numeric_jets(d, samples)? else {
        return Err(Error::Precondition(format!(
            "{} has no numeric evaluator; use the exact check",
            d.tag()
        )));
    };
    let mut used = Vec::new();
    let mut excluded = Vec::new();
    let mut max_abs = 0.0f64;
    let mut max_scaled = 0.0f64;
    let mut verified = true;
    for s in &jets {
        let point = [fmt_f64(s.z.re), fmt_f64(s.z.im)];
        if s.pole_distance < POLE_EXCLUSION {
            excluded.push(point);
            continue;
        }
        let r = residual_at(params, &s.jet);
        let finite = s.jet.iter().chain([&r]).all(|v| v.re.is_finite() && v.im.is_finite());
        let abs = if finite { r.norm() } else { f64::INFINITY };
        let scaled = abs / s.jet[0].norm().powi(3).max(1.0);
        if scaled.is_nan() || scaled > NUMERIC_TOLERANCE {
            verified = false;
        }
        max_abs = max_abs.max(abs);
        max_scaled = max_scaled.max(scaled);
        used.push(json!({ "z": point, "residual": fmt_f64(abs) }));
    }
    if used.is_empty() {
        return Err(Error::NoSamples);
    }
    Ok(VerificationReport {
        mode: VerificationMode::Numeric,
        verified,
        detail: json!({
            "max_abs_residual": fmt_f64(max_abs),
            "max_scaled_residual": fmt_f64(max_scaled),
            "tolerance": fmt_f64(NUMERIC_TOLERANCE),
            "samples": used,
            "excluded": excluded,
        }),
    })
}

/// Numeric check at the default samples regardless of the descriptor's
/// mode (`None` for the zeta solution).
pub fn verify_numeric_default(params: &OdeParams, d: &SolutionDescriptor) -> Result<Option<VerificationReport>> {
    match verify_numeric(params, d, &default_samples()) {
        Err(Error::Precondition(_)) => Ok(None),
        other => other.map(Some),
    }
}
