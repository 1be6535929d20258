//! Boundary-layer similarity equations written in the canonical form.

use crate::exactnum::Rational;

use super::OdeParams;

/// `f''' + f f'' + λ(1 − f'²) = 0` gives `(A, B, α, β, γ, δ) = (λ, −1, 0, 0, 0, λ)`.
pub fn from_falkner_skan(lambda: &Rational) -> OdeParams {
    OdeParams::new(
        lambda.clone(),
        Rational::from(-1),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        lambda.clone(),
    )
}

/// `f''' + ((a+1)/2) f f'' − a f'² = 0` gives `A = a`, `B = −(a+1)/2`.
///
/// The physical model requires `a(a+1) ≠ 0`; other values still yield a
/// valid equation and come back with a warning.
pub fn from_cheng_minkowycz(a: &Rational) -> (OdeParams, Vec<String>) {
    let b = -(a + &Rational::one()) / Rational::from(2);
    let mut warnings = Vec::new();
    if (a * &(a + &Rational::one())).is_zero() {
        warnings.push(format!(
            "a = {a} violates a(a+1) ≠ 0 required by the porous-medium model; analysis continues"
        ));
    }
    (OdeParams::ab(a.clone(), b), warnings)
}
