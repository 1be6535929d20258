//! The four nonconstant solution shapes for generic `(A, B)`: simply
//! periodic, rational with a simple pole, quadratic and linear.

use std::collections::BTreeMap;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Value};
use crate::ode::OdeParams;
use crate::series::PolyZ;

use super::classify::generic_check;
use super::descriptor::{Family, PeriodicForm, SolutionDescriptor};

/// Named free parameters: `zeta0`, `k`, `a`, `b`, `c`.
pub type FreeChoices = BTreeMap<String, Rational>;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table1Solutions {
    pub descriptors: Vec<SolutionDescriptor>,
    pub warnings: Vec<String>,
}

/// Remove the `u''` term with `u = v + α/B`. Returns the constants of the
/// equation for `v` and the shift `α/B`.
pub fn alpha_translation(params: &OdeParams) -> Result<(OdeParams, Rational)> {
    if params.alpha.is_zero() {
        return Ok((params.clone(), Rational::zero()));
    }
    if params.b.is_zero() {
        return Err(Error::Precondition(
            "B = 0: the u'' term cannot be removed by a shift of u".into(),
        ));
    }
    let s = &params.alpha / &params.b;
    Ok((params.shifted(&s), s))
}

struct Ctx<'a> {
    p: &'a OdeParams,
    free: &'a FreeChoices,
    warnings: Vec<String>,
    out: Vec<SolutionDescriptor>,
}

impl Ctx<'_> {
    /// A free parameter that must be nonzero.
    fn nonzero_choice(&mut self, name: &str, default: i64) -> Rational {
        match self.free.get(name) {
            Some(v) if v.is_zero() => {
                self.warnings
                    .push(format!("free choice {name} = 0 is not allowed; using {default}"));
                Rational::from(default)
            }
            Some(v) => v.clone(),
            None => Rational::from(default),
        }
    }

    fn choice(&self, name: &str, default: i64) -> Rational {
        self.free.get(name).cloned().unwrap_or_else(|| Rational::from(default))
    }
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `u = h₀/(e^{kz} − ζ₀) + c₀` with `c₀ = −(β+k²)/(Bk)`, `h₀ = 2ζ₀c₀`,
/// `β(A+2B) + k²(A−B) = 0`, `γ = δ = 0`.
fn simply_periodic(cx: &mut Ctx) {
    let p = cx.p;
    let (a, b) = (&p.a, &p.b);
    if !p.gamma.is_zero() || !p.delta.is_zero() || b.is_zero() || p.pole_sum().is_zero() {
        return;
    }
    let zeta0 = cx.nonzero_choice("zeta0", 1);
    let constraints = |k2: &Rational| {
        vec![
            p.gamma.clone(),
            p.delta.clone(),
            &(&p.beta * &p.pole_sum()) + &(k2 * &(a - b)),
        ]
    };
    let exact = |k: Rational, note: Option<&str>| {
        let k2 = k.square();
        let c0 = -&(&(&p.beta + &k2) / &(b * &k));
        let h0 = &(&c0 * &zeta0) * &r(2);
        let d = SolutionDescriptor::new(
            Family::SimplyPeriodic {
                k: Value::Exact(k),
                k_squared: k2.clone(),
                form: PeriodicForm::SimplePole {
                    h0: Value::Exact(h0),
                    zeta0: zeta0.clone(),
                    c0: Value::Exact(c0),
                },
            },
            constraints(&k2),
        );
        match note {
            Some(n) => d.with_note(n),
            None => d,
        }
    };
    if a == b {
        if !p.beta.is_zero() {
            return;
        }
        let k = cx.nonzero_choice("k", 1);
        cx.out.push(exact(k, Some("A = B and beta = 0: k is arbitrary")));
        return;
    }
    let k2 = &(-&(&p.beta * &p.pole_sum())) / &(a - b);
    if k2.is_zero() {
        return;
    }
    match k2.perfect_square() {
        Some(s) => {
            cx.out.push(exact(s.clone(), None));
            cx.out.push(exact(-s, None));
        }
        None => {
            let root = Complex64::new(k2.to_f64(), 0.0).sqrt();
            for k in [root, -root] {
                let c0 = -(p.beta.to_f64() + k2.to_f64()) / (b.to_f64() * k);
                let h0 = c0 * 2.0 * zeta0.to_f64();
                cx.out.push(
                    SolutionDescriptor::new(
                        Family::SimplyPeriodic {
                            k: Value::Approx(k),
                            k_squared: k2.clone(),
                            form: PeriodicForm::SimplePole {
                                h0: Value::Approx(h0),
                                zeta0: zeta0.clone(),
                                c0: Value::Approx(c0),
                            },
                        },
                        constraints(&k2),
                    )
                    .with_note("k^2 is not a rational square: constants are approximate"),
                );
            }
        }
    }
}

/// `u = −γz²/(4(A−B)) + βz/(2(A−B)) − 6/((A+2B)z)` when either
/// `γ = 0, β²(A−2B) + 4δ(A−B)² = 0` or `γ ≠ 0, B = 4A, β = δ = 0`.
fn rational_pole(cx: &mut Ctx) {
    let p = cx.p;
    let (a, b) = (&p.a, &p.b);
    let diff = a - b;
    if diff.is_zero() || p.pole_sum().is_zero() {
        return;
    }
    let constraints = if p.gamma.is_zero() {
        vec![
            p.gamma.clone(),
            &(&p.beta.square() * &(a - &(b * &r(2)))) + &(&(&p.delta * &diff.square()) * &r(4)),
        ]
    } else {
        vec![b - &(a * &r(4)), p.beta.clone(), p.delta.clone()]
    };
    if !constraints.iter().all(Rational::is_zero) {
        return;
    }
    let poly = PolyZ::new(vec![
        Rational::zero(),
        &p.beta / &(&diff * &r(2)),
        -&(&p.gamma / &(&diff * &r(4))),
    ]);
    cx.out.push(SolutionDescriptor::new(
        Family::RationalPole {
            c_minus2: Rational::zero(),
            c_minus1: &r(-6) / &p.pole_sum(),
            poly,
        },
        constraints,
    ));
}

/// `u = a z² + b z + c`, `a ≠ 0`.
fn quadratic(cx: &mut Ctx) {
    let p = cx.p;
    let (a_, b_) = (&p.a, &p.b);
    let two_a_b = &(a_ * &r(2)) + b_;
    if !two_a_b.is_zero() {
        // a = γ/(2(2A+B)), β = 0, c = (2A+B)(Ab² − δ)/(2Aγ).
        if p.gamma.is_zero() || !p.beta.is_zero() {
            return;
        }
        let a = &p.gamma / &(&two_a_b * &r(2));
        let b = cx.choice("b", 0);
        let rhs = &two_a_b * &(&(a_ * &b.square()) - &p.delta);
        let c = if a_.is_zero() {
            if !p.delta.is_zero() {
                return;
            }
            cx.choice("c", 0)
        } else {
            &rhs / &(&(a_ * &p.gamma) * &r(2))
        };
        let constraints = vec![
            p.beta.clone(),
            &p.gamma - &(&(&a * &two_a_b) * &r(2)),
            &(&(&(a_ * &p.gamma) * &c) * &r(2)) - &rhs,
        ];
        cx.out.push(SolutionDescriptor::new(Family::Quadratic { a, b, c }, constraints));
    } else {
        // 2A + B = 0: β = γ = 0 and A(b² − 4ac) = δ.
        if !p.beta.is_zero() || !p.gamma.is_zero() {
            return;
        }
        let a = cx.nonzero_choice("a", 1);
        let b = cx.choice("b", 0);
        let c = if a_.is_zero() {
            if !p.delta.is_zero() {
                return;
            }
            cx.choice("c", 0)
        } else {
            &(&(a_ * &b.square()) - &p.delta) / &(&(&a * a_) * &r(4))
        };
        let disc = &b.square() - &(&(&a * &c) * &r(4));
        let constraints = vec![p.beta.clone(), p.gamma.clone(), &(a_ * &disc) - &p.delta];
        cx.out.push(
            SolutionDescriptor::new(Family::Quadratic { a, b, c }, constraints)
                .with_note("2A + B = 0: a and b are arbitrary"),
        );
    }
}

/// `u = a z + b` with `γ = 0`, `A a² − β a − δ = 0`, `a ≠ 0`.
fn linear(cx: &mut Ctx) {
    let p = cx.p;
    if !p.gamma.is_zero() {
        return;
    }
    let b = cx.choice("b", 0);
    let residual = |a: &Rational| &(&(&p.a * &a.square()) - &(&p.beta * a)) - &p.delta;
    let push_exact = |cx: &mut Ctx, a: Rational| {
        let res = residual(&a);
        cx.out.push(SolutionDescriptor::new(
            Family::Linear {
                a: Value::Exact(a),
                b: b.clone(),
            },
            vec![p.gamma.clone(), res],
        ));
    };
    if p.a.is_zero() {
        if !p.beta.is_zero() {
            let a = &(-&p.delta) / &p.beta;
            if !a.is_zero() {
                push_exact(cx, a);
            }
        } else if p.delta.is_zero() {
            let a = cx.nonzero_choice("a", 1);
            push_exact(cx, a);
        }
        return;
    }
    let disc = &p.beta.square() + &(&(&p.a * &p.delta) * &r(4));
    let two_a = &p.a * &r(2);
    match disc.perfect_square() {
        Some(s) => {
            let mut roots = vec![&(&p.beta + &s) / &two_a, &(&p.beta - &s) / &two_a];
            roots.dedup();
            for a in roots.into_iter().filter(|a| !a.is_zero()) {
                push_exact(cx, a);
            }
        }
        None => {
            let root = Complex64::new(disc.to_f64(), 0.0).sqrt();
            for s in [root, -root] {
                let a = (p.beta.to_f64() + s) / two_a.to_f64();
                cx.out.push(
                    SolutionDescriptor::new(
                        Family::Linear {
                            a: Value::Approx(a),
                            b: b.clone(),
                        },
                        vec![p.gamma.clone()],
                    )
                    .with_note("beta^2 + 4 A delta is not a rational square: slope is approximate"),
                );
            }
        }
    }
}

/// Every descriptor from the four shapes whose conditions hold exactly.
/// A nonzero `α` is first removed by [`alpha_translation`]; the shift is
/// carried as the descriptor offset.
pub fn table1_solutions(params: &OdeParams, free: &FreeChoices) -> Table1Solutions {
    let mut warnings = Vec::new();
    let verdict = generic_check(&params.a, &params.b);
    if !verdict.generic {
        warnings.push(
            "(A, B) is not generic: the four shapes need not exhaust the meromorphic solutions"
                .to_string(),
        );
    }
    let (shifted, offset) = match alpha_translation(params) {
        Ok(v) => v,
        Err(e) => {
            warnings.push(format!("{e}; no closed forms constructed"));
            return Table1Solutions {
                descriptors: Vec::new(),
                warnings,
            };
        }
    };
    if !offset.is_zero() {
        warnings.push(format!("u'' term removed by the shift u = v + {offset}"));
    }
    let mut cx = Ctx {
        p: &shifted,
        free,
        warnings,
        out: Vec::new(),
    };
    simply_periodic(&mut cx);
    rational_pole(&mut cx);
    quadratic(&mut cx);
    linear(&mut cx);
    let descriptors = cx
        .out
        .into_iter()
        .map(|d| d.with_offset(offset.clone()))
        .collect();
    Table1Solutions {
        descriptors,
        warnings: cx.warnings,
    }
}
