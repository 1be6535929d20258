//! Checks that a candidate solution satisfies the equation: exact Laurent
//! series residuals, exact identities in `w = e^{kz}`, and sampled complex
//! residuals for constants that are only known numerically.

mod evaluate;
mod integrate;
mod report;
mod weierstrass;

pub use evaluate::{complex_ratexp, exact_ratexp, exact_series, numeric_jets, tan_coefficients, JetSample};
pub use integrate::{integrate_linear_ode, LinearSample, RK4_TOLERANCE};
pub use report::{
    default_samples, verify_descriptor, verify_descriptor_with_samples, verify_numeric, verify_numeric_default,
    VerificationMode, VerificationReport, NUMERIC_TOLERANCE, POLE_EXCLUSION,
};
pub use weierstrass::{weierstrass_series, WeierstrassSeries};
