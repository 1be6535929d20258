//! Solutions of the special regimes `B = 0`, `B = A` and `B = −2A/3`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ComplexF, Rational};
use crate::ode::{LinearOde2, OdeParams};
use crate::series::{LaurentSeries, PolyZ};

use super::descriptor::{Family, SolutionDescriptor};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// Standard invariants of the `B = 0` solution
/// `u = βz/(2A) − (6/A) ζ(z − z₀; g₂, g₃) + c₁`:
/// `g₂ = Aδ/3 + β²/12`, `g₃ = −A²c/108 + Aβδ/36 + β³/216`.
pub fn weierstrass_invariants(a: &Rational, beta: &Rational, delta: &Rational, c: &Rational) -> (Rational, Rational) {
    let g2 = &(&(a * delta) / &r(3)) + &(&beta.square() / &r(12));
    let g3 = &(&(&(-&(&a.square() * c)) / &r(108)) + &(&(&(a * beta) * delta) / &r(36)))
        + &(&beta.pow(3) / &r(216));
    (g2, g3)
}

pub fn weierstrass_b0_solution(params: &OdeParams, c: &Rational, c1: &Rational) -> Result<SolutionDescriptor> {
    if params.a.is_zero() || !params.b.is_zero() {
        return Err(Error::Precondition("the zeta-function solution needs A ≠ 0 and B = 0".into()));
    }
    if !params.alpha.is_zero() || !params.gamma.is_zero() {
        return Err(Error::Precondition(
            "with B = 0 a meromorphic solution exists only if alpha = gamma = 0".into(),
        ));
    }
    let (g2, g3) = weierstrass_invariants(&params.a, &params.beta, &params.delta, c);
    Ok(SolutionDescriptor::new(
        Family::WeierstrassZeta {
            a: params.a.clone(),
            beta: params.beta.clone(),
            g2,
            g3,
            c: c.clone(),
            c1: c1.clone(),
        },
        vec![params.b.clone(), params.alpha.clone(), params.gamma.clone()],
    ))
}

/// `F = u' − (A/2) u² + (δ/2) z² + k₁ z + k₀`, constant along solutions of
/// the `B = A`, `β = γ = 0` equation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FirstIntegral {
    #[serde(rename = "A")]
    pub a: Rational,
    pub delta: Rational,
    pub k1: Rational,
    pub k0: Rational,
}

impl FirstIntegral {
    /// `(δ/2) z² + k₁ z + k₀`.
    pub fn forcing(&self) -> PolyZ {
        PolyZ::new(vec![self.k0.clone(), self.k1.clone(), &self.delta / &r(2)])
    }

    /// `F[u]` for a series in `χ = z` (expansion point `z₀ = 0`).
    pub fn series(&self, u: &LaurentSeries) -> LaurentSeries {
        let forcing = LaurentSeries::new(
            0,
            self.forcing().coeffs().to_vec(),
            crate::ode::EXACT_PRECISION,
        );
        u.diff(1)
            .sub(&u.mul(u).scale(&(&self.a / &r(2))))
            .add(&forcing)
    }

    /// `F` at a point from `(u, u')`.
    pub fn at(&self, z: ComplexF, u: ComplexF, du: ComplexF) -> ComplexF {
        du - self.a.to_f64() / 2.0 * u * u + self.forcing().eval_complex(z)
    }
}

/// Riccati reduction of the `B = A` regime.
#[derive(Clone, Debug, PartialEq)]
pub struct Chazy2Reduction {
    pub first_integral: FirstIntegral,
    /// `w'' + q w = 0` with `u = −(2/A) w'/w`,
    /// `q = (A/2)(−δz²/2 − k₁z − k₀)`.
    pub linear: LinearOde2,
    pub descriptors: Vec<SolutionDescriptor>,
}

/// Requires `B = A ≠ 0`, `α = β = γ = 0`. Returns the first integral with
/// constants `k₀, k₁`, its linearization and the closed forms: the tan
/// branch when `δ = k₁ = 0 ≠ k₀`, the pole `−(2/A)/z` when
/// `δ = k₁ = k₀ = 0`, and otherwise the log-derivative of a solution of the
/// linear equation with `w(0) = w0`, `w'(0) = w0p`.
pub fn chazy2_reduction(
    params: &OdeParams,
    k0: &Rational,
    k1: &Rational,
    w0: &Rational,
    w0p: &Rational,
) -> Result<Chazy2Reduction> {
    let a = &params.a;
    if a.is_zero() || params.b != *a {
        return Err(Error::Precondition("the Riccati reduction needs B = A ≠ 0".into()));
    }
    if !params.alpha.is_zero() || !params.beta.is_zero() || !params.gamma.is_zero() {
        return Err(Error::Precondition(
            "the Riccati reduction needs alpha = beta = gamma = 0".into(),
        ));
    }
    let first_integral = FirstIntegral {
        a: a.clone(),
        delta: params.delta.clone(),
        k1: k1.clone(),
        k0: k0.clone(),
    };
    let linear = LinearOde2::new(first_integral.forcing().scale(&(&(-a) / &r(2))));
    let mut descriptors = Vec::new();
    let constraints = vec![&params.b - a, params.beta.clone(), params.gamma.clone()];
    if params.delta.is_zero() && k1.is_zero() {
        if k0.is_zero() {
            descriptors.push(SolutionDescriptor::new(
                Family::RationalPole {
                    c_minus2: Rational::zero(),
                    c_minus1: &r(-2) / a,
                    poly: PolyZ::zero(),
                },
                constraints.clone(),
            ));
        } else {
            descriptors.push(SolutionDescriptor::new(
                Family::TanForm {
                    a: a.clone(),
                    k_squared: &(&(-a) * k0) / &r(2),
                    k0: k0.clone(),
                },
                constraints.clone(),
            ));
        }
    }
    if w0.is_zero() {
        return Err(Error::Precondition("w(0) must be nonzero".into()));
    }
    if !(linear.q.is_zero() && w0p.is_zero()) {
        descriptors.push(SolutionDescriptor::new(
            Family::LogDerivativeReduction {
                a: a.clone(),
                delta: params.delta.clone(),
                k0: k0.clone(),
                k1: k1.clone(),
                ode: linear.clone(),
                w0: w0.clone(),
                w0p: w0p.clone(),
            },
            constraints,
        ));
    }
    Ok(Chazy2Reduction {
        first_integral,
        linear,
        descriptors,
    })
}

/// `u = c χ⁻² + (18/A) χ⁻¹` for `B = −2A/3`, `α = β = γ = δ = 0`.
pub fn chazy3_solution(params: &OdeParams, c: &Rational) -> Result<SolutionDescriptor> {
    let a = &params.a;
    let expected_b = &(a * &r(-2)) / &r(3);
    if a.is_zero() || params.b != expected_b {
        return Err(Error::Precondition("the two-parameter pole solution needs B = −2A/3 ≠ 0".into()));
    }
    let linear = [&params.alpha, &params.beta, &params.gamma, &params.delta];
    if linear.iter().any(|v| !v.is_zero()) {
        return Err(Error::Precondition(
            "the two-parameter pole solution needs alpha = beta = gamma = delta = 0".into(),
        ));
    }
    Ok(SolutionDescriptor::new(
        Family::RationalPole {
            c_minus2: c.clone(),
            c_minus1: &r(18) / a,
            poly: PolyZ::zero(),
        },
        vec![&params.b - &expected_b],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn invariants_with_standard_normalization() {
        let (g2, g3) = weierstrass_invariants(&rat(3, 1), &rat(6, 1), &rat(-3, 1), &Rational::zero());
        // Aδ/3 + β²/12 = −3 + 3.
        assert_eq!(g2, Rational::zero());
        // 3·6·(−3)/36 + 216/216
        assert_eq!(g3, rat(-1, 2));
    }

    #[test]
    fn preconditions() {
        assert!(weierstrass_b0_solution(&OdeParams::from_i64(1, 0, 1, 0, 0, 0), &rat(0, 1), &rat(0, 1)).is_err());
        let p = OdeParams::from_i64(2, 2, 0, 1, 0, 0);
        let z = Rational::zero();
        assert!(chazy2_reduction(&p, &z, &z, &rat(1, 1), &z).is_err());
        assert!(chazy3_solution(&OdeParams::from_i64(3, -2, 0, 0, 0, 1), &z).is_err());
    }

    #[test]
    fn linear_reduction_potential() {
        let p = OdeParams::from_i64(2, 2, 0, 0, 0, 1);
        let red = chazy2_reduction(&p, &rat(3, 1), &rat(5, 1), &rat(1, 1), &Rational::zero()).unwrap();
        // (A/2)(−δz²/2 − k₁z − k₀) with A = 2, δ = 1.
        assert_eq!(red.linear.q, PolyZ::new(vec![rat(-3, 1), rat(-5, 1), rat(-1, 2)]));
    }
}
