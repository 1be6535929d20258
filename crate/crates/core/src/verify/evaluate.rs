//! Representations of a descriptor used by the checks: an exact Laurent
//! series at the origin, an exact rational function of `e^{kz}`, and complex
//! jets `(u, u', u'', u''')` at sample points.

use crate::catalog::{Family, PeriodicForm, SolutionDescriptor};
use crate::error::Result;
use crate::exactnum::{Coeff, ComplexF, Rational};
use crate::ode::EXACT_PRECISION;
use crate::series::{LaurentSeries, Poly, RatExpFunction};

use super::integrate::integrate_linear_ode;
use super::weierstrass::weierstrass_series;

/// `tan x = Σ t_n xⁿ` below `x^len`, from `t' = 1 + t²`, `t(0) = 0`.
pub fn tan_coefficients(len: usize) -> Vec<Rational> {
    let mut t = vec![Rational::zero(); len];
    for n in 0..len.saturating_sub(1) {
        let mut s: Rational = (0..=n).map(|i| &t[i] * &t[n - i]).sum();
        if n == 0 {
            s = &s + &Rational::one();
        }
        t[n + 1] = &s / &Rational::from(n as i64 + 1);
    }
    t
}

/// Laurent series of the solution about `z = 0`, known below `precision`
/// (exact families only; `None` for numeric ones).
pub fn exact_series(d: &SolutionDescriptor, precision: i64) -> Option<LaurentSeries> {
    let offset = LaurentSeries::constant(d.offset.clone(), EXACT_PRECISION);
    let v = match &d.family {
        Family::RationalPole {
            c_minus2,
            c_minus1,
            poly,
        } => {
            let pole = LaurentSeries::new(-2, vec![c_minus2.clone(), c_minus1.clone()], EXACT_PRECISION);
            pole.add(&LaurentSeries::new(0, poly.coeffs().to_vec(), EXACT_PRECISION))
        }
        Family::Quadratic { a, b, c } => {
            LaurentSeries::new(0, vec![c.clone(), b.clone(), a.clone()], EXACT_PRECISION)
        }
        Family::Linear { a, b } => {
            LaurentSeries::new(0, vec![b.clone(), a.as_exact()?.clone()], EXACT_PRECISION)
        }
        Family::WeierstrassZeta {
            a, beta, g2, g3, c1, ..
        } => {
            let k = ((precision.max(0) as usize) / 2 + 1).max(4);
            let zeta = weierstrass_series(g2, g3, k).ok()?.zeta();
            let lin = LaurentSeries::new(
                0,
                vec![c1.clone(), beta / &(a * &Rational::from(2))],
                EXACT_PRECISION,
            );
            lin.sub(&zeta.scale(&(&Rational::from(6) / a)))
        }
        Family::TanForm { a, k_squared, .. } => {
            // (2k/A) tan(kz) = (2/A) Σ t_n (k²)^{(n+1)/2} zⁿ over odd n.
            let len = precision.max(1) as usize;
            let t = tan_coefficients(len);
            let two_over_a = &Rational::from(2) / a;
            let coeffs: Vec<Rational> = t
                .iter()
                .enumerate()
                .map(|(n, tn)| {
                    if n % 2 == 1 {
                        &(tn * &k_squared.pow((n as u32).div_ceil(2))) * &two_over_a
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            LaurentSeries::new(0, coeffs, precision.max(1))
        }
        Family::SimplyPeriodic { .. } | Family::LogDerivativeReduction { .. } => return None,
    };
    Some(v.add(&offset).truncate(precision))
}

/// Exact `w`-representation including the offset.
pub fn exact_ratexp(d: &SolutionDescriptor) -> Option<RatExpFunction> {
    d.ratexp().map(|f| f.add_constant(&d.offset))
}

/// Complex `w`-representation, available whether or not the constants are
/// rational.
pub fn complex_ratexp(d: &SolutionDescriptor) -> Option<RatExpFunction<ComplexF>> {
    let Family::SimplyPeriodic { k, form, .. } = &d.family else {
        return None;
    };
    let k = k.to_complex();
    let f = match form {
        PeriodicForm::SimplePole { h0, zeta0, c0 } => RatExpFunction::simple_pole(
            k,
            h0.to_complex(),
            ComplexF::from_rational(zeta0),
            c0.to_complex(),
        ),
        PeriodicForm::General {
            numerator,
            denominator,
        } => RatExpFunction::new(k, numerator.to_complex(), denominator.to_complex())?,
    };
    Some(f.add_constant(&ComplexF::from_rational(&d.offset)))
}

/// Taylor coefficients `(f, f', f''/2, f'''/6)` at a point.
type Taylor = [ComplexF; 4];

fn taylor_mul(a: &Taylor, b: &Taylor) -> Taylor {
    let mut out = [ComplexF::zero(); 4];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn taylor_div(a: &Taylor, b: &Taylor) -> Taylor {
    let mut q = [ComplexF::zero(); 4];
    for n in 0..4 {
        let mut s = a[n];
        for i in 0..n {
            s -= q[i] * b[n - i];
        }
        q[n] = s / b[0];
    }
    q
}

fn taylor_poly(p: &Poly<ComplexF>, w: &Taylor) -> Taylor {
    let mut acc = [ComplexF::zero(); 4];
    for c in p.coeffs().iter().rev() {
        acc = taylor_mul(&acc, w);
        acc[0] += c;
    }
    acc
}

/// Jet of `N(e^{kz}) / D(e^{kz})`, composing Taylor expansions of the
/// low-degree `N` and `D` instead of differentiating the quotient, whose
/// expanded powers of `D` cancel badly near a pole.
fn ratexp_jet(f: &RatExpFunction<ComplexF>, z: ComplexF) -> [ComplexF; 4] {
    let k = *f.k();
    let w0 = (k * z).exp();
    let w = [w0, w0 * k, w0 * k * k / 2.0, w0 * k * k * k / 6.0];
    let t = taylor_div(&taylor_poly(f.numerator(), &w), &taylor_poly(f.denominator(), &w));
    [t[0], t[1], 2.0 * t[2], 6.0 * t[3]]
}

/// `(u, u', u'', u''')` and an estimate of the distance to the nearest
/// pole (`f64::INFINITY` when none is expected nearby).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JetSample {
    pub z: ComplexF,
    pub jet: [ComplexF; 4],
    pub pole_distance: f64,
}

fn poly_jet(coeffs_low_first: &[ComplexF], z: ComplexF) -> [ComplexF; 4] {
    let mut p = Poly::new(coeffs_low_first.to_vec());
    let mut out = [ComplexF::zero(); 4];
    for slot in &mut out {
        *slot = p.eval(&z);
        p = p.derivative();
    }
    out
}

/// Jets at each sample. `None` for families without a numeric evaluator
/// (the zeta solution, which is always checked exactly).
pub fn numeric_jets(d: &SolutionDescriptor, samples: &[ComplexF]) -> Result<Option<Vec<JetSample>>> {
    let off = ComplexF::from_rational(&d.offset);
    let c = |r: &Rational| ComplexF::from_rational(r);
    let out: Vec<JetSample> = match &d.family {
        Family::RationalPole {
            c_minus2,
            c_minus1,
            poly,
        } => {
            let (a2, a1) = (c(c_minus2), c(c_minus1));
            let mut pc: Vec<ComplexF> = poly.coeffs().iter().map(c).collect();
            if pc.is_empty() {
                pc.push(ComplexF::zero());
            }
            pc[0] += off;
            samples
                .iter()
                .map(|&z| {
                    let p = poly_jet(&pc, z);
                    let zi = z.inv();
                    let pole = [
                        a2 * zi.powi(2) + a1 * zi,
                        -2.0 * a2 * zi.powi(3) - a1 * zi.powi(2),
                        6.0 * a2 * zi.powi(4) + 2.0 * a1 * zi.powi(3),
                        -24.0 * a2 * zi.powi(5) - 6.0 * a1 * zi.powi(4),
                    ];
                    let distance = if c_minus2.is_zero() && c_minus1.is_zero() {
                        f64::INFINITY
                    } else {
                        z.norm()
                    };
                    JetSample {
                        z,
                        jet: [p[0] + pole[0], p[1] + pole[1], p[2] + pole[2], p[3] + pole[3]],
                        pole_distance: distance,
                    }
                })
                .collect()
        }
        Family::Quadratic { a, b, c: c0 } => {
            let pc = [c(c0) + off, c(b), c(a)];
            samples
                .iter()
                .map(|&z| JetSample {
                    z,
                    jet: poly_jet(&pc, z),
                    pole_distance: f64::INFINITY,
                })
                .collect()
        }
        Family::Linear { a, b } => {
            let pc = [c(b) + off, a.to_complex()];
            samples
                .iter()
                .map(|&z| JetSample {
                    z,
                    jet: poly_jet(&pc, z),
                    pole_distance: f64::INFINITY,
                })
                .collect()
        }
        Family::SimplyPeriodic { .. } => {
            let f = complex_ratexp(d).expect("simply periodic");
            let k = *f.k();
            let den = f.denominator();
            let dden = den.derivative();
            samples
                .iter()
                .map(|&z| {
                    let w = (k * z).exp();
                    let distance = if den.degree().unwrap_or(0) == 0 {
                        f64::INFINITY
                    } else {
                        den.eval(&w).norm() / (k * w * dden.eval(&w)).norm()
                    };
                    JetSample {
                        z,
                        jet: ratexp_jet(&f, z),
                        pole_distance: distance,
                    }
                })
                .collect()
        }
        Family::TanForm { a, k_squared, .. } => {
            let k = ComplexF::new(k_squared.to_f64(), 0.0).sqrt();
            let a = a.to_f64();
            samples
                .iter()
                .map(|&z| {
                    let t = (k * z).tan();
                    let s = 1.0 + t * t;
                    JetSample {
                        z,
                        jet: [
                            2.0 * k / a * t + off,
                            2.0 * k * k / a * s,
                            4.0 * k.powi(3) / a * t * s,
                            4.0 * k.powi(4) / a * s * (1.0 + 3.0 * t * t),
                        ],
                        pole_distance: (1.0 / (k * t)).norm(),
                    }
                })
                .collect()
        }
        Family::LogDerivativeReduction { a, ode, w0, w0p, .. } => {
            let scale = -2.0 / a.to_f64();
            let mut out = Vec::with_capacity(samples.len());
            for &z in samples {
                // One radial segment per sample.
                let s = integrate_linear_ode(ode, ComplexF::zero(), c(w0), c(w0p), &[z])?[0];
                let [q, dq, ddq] = ode.q_jet(z);
                let y = s.dw() / s.w();
                let y1 = -q - y * y;
                let y2 = -dq - 2.0 * y * y1;
                let y3 = -ddq - 2.0 * y1 * y1 - 2.0 * y * y2;
                out.push(JetSample {
                    z,
                    jet: [scale * y + off, scale * y1, scale * y2, scale * y3],
                    pole_distance: (s.w() / s.dw()).norm(),
                });
            }
            out
        }
        Family::WeierstrassZeta { .. } => return Ok(None),
    };
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn tan_series_matches_known_coefficients() {
        let t = tan_coefficients(8);
        // x + x³/3 + 2x⁵/15 + 17x⁷/315
        assert_eq!(t[1], rat(1, 1));
        assert_eq!(t[3], rat(1, 3));
        assert_eq!(t[5], rat(2, 15));
        assert_eq!(t[7], rat(17, 315));
        assert!(t[2].is_zero() && t[6].is_zero());
    }
}
