//! Closed-form solution families and their parameters.

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value as Json};

use crate::exactnum::{Rational, Value};
use crate::ode::LinearOde2;
use crate::series::{PolyZ, RatExpFunction};

/// How a simply periodic solution is written in `w = e^{kz}`.
#[derive(Clone, Debug, PartialEq)]
pub enum PeriodicForm {
    /// `h₀ / (w − ζ₀) + c₀`.
    SimplePole { h0: Value, zeta0: Rational, c0: Value },
    /// `numerator(w) / denominator(w)` with rational coefficients.
    General { numerator: PolyZ, denominator: PolyZ },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `c₋₂ χ⁻² + c₋₁ χ⁻¹ + P(χ)`.
    RationalPole {
        c_minus2: Rational,
        c_minus1: Rational,
        poly: PolyZ,
    },
    SimplyPeriodic {
        k: Value,
        k_squared: Rational,
        form: PeriodicForm,
    },
    /// `a z² + b z + c`.
    Quadratic { a: Rational, b: Rational, c: Rational },
    /// `a z + b`.
    Linear { a: Value, b: Rational },
    /// `β z / (2A) − (6/A) ζ(z; g₂, g₃) + c₁` with the standard invariants
    /// (`℘'² = 4℘³ − g₂℘ − g₃`).
    WeierstrassZeta {
        a: Rational,
        beta: Rational,
        g2: Rational,
        g3: Rational,
        c: Rational,
        c1: Rational,
    },
    /// `(2k/A) tan(k z)` with `k² = −A k₀ / 2`.
    TanForm {
        a: Rational,
        k_squared: Rational,
        k0: Rational,
    },
    /// `u = −(2/A) w'/w` where `w'' + q w = 0`, `w(0) = w0`, `w'(0) = w0p`.
    LogDerivativeReduction {
        a: Rational,
        delta: Rational,
        k0: Rational,
        k1: Rational,
        ode: LinearOde2,
        w0: Rational,
        w0p: Rational,
    },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::RationalPole { .. } => "RationalPole",
            Family::SimplyPeriodic { .. } => "SimplyPeriodic",
            Family::Quadratic { .. } => "Quadratic",
            Family::Linear { .. } => "Linear",
            Family::WeierstrassZeta { .. } => "WeierstrassZeta",
            Family::TanForm { .. } => "TanForm",
            Family::LogDerivativeReduction { .. } => "LogDerivativeReduction",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// A candidate solution `u = v + offset`, where `v` belongs to `family`.
/// The offset is nonzero only when the `u''` term was removed by a shift.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionDescriptor {
    pub family: Family,
    pub offset: Rational,
    /// Quantities that must all vanish for the construction to apply.
    pub constraint_residuals: Vec<Rational>,
    pub notes: Vec<String>,
}

impl SolutionDescriptor {
    pub fn new(family: Family, constraint_residuals: Vec<Rational>) -> Self {
        SolutionDescriptor {
            family,
            offset: Rational::zero(),
            constraint_residuals,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_offset(mut self, offset: Rational) -> Self {
        self.offset = offset;
        self
    }

    /// The simply periodic form `numerator(e^{kz}) / denominator(e^{kz})`.
    pub fn periodic(k: Rational, numerator: PolyZ, denominator: PolyZ) -> Self {
        let k_squared = k.square();
        SolutionDescriptor::new(
            Family::SimplyPeriodic {
                k: Value::Exact(k),
                k_squared,
                form: PeriodicForm::General {
                    numerator,
                    denominator,
                },
            },
            Vec::new(),
        )
    }

    pub fn tag(&self) -> &'static str {
        self.family.tag()
    }

    pub fn constraints_hold(&self) -> bool {
        self.constraint_residuals.iter().all(Rational::is_zero)
    }

    /// Exact when every constant is rational.
    pub fn mode(&self) -> Mode {
        let exact = match &self.family {
            Family::SimplyPeriodic { k, form, .. } => {
                k.is_exact()
                    && match form {
                        PeriodicForm::SimplePole { h0, c0, .. } => h0.is_exact() && c0.is_exact(),
                        PeriodicForm::General { .. } => true,
                    }
            }
            Family::Linear { a, .. } => a.is_exact(),
            Family::LogDerivativeReduction { .. } => false,
            _ => true,
        };
        if exact {
            Mode::Exact
        } else {
            Mode::Numeric
        }
    }

    /// Exact `w`-representation (without the offset) for simply periodic
    /// descriptors with rational constants.
    pub fn ratexp(&self) -> Option<RatExpFunction> {
        let Family::SimplyPeriodic { k, form, .. } = &self.family else {
            return None;
        };
        let k = k.as_exact()?.clone();
        match form {
            PeriodicForm::SimplePole { h0, zeta0, c0 } => Some(RatExpFunction::simple_pole(
                k,
                h0.as_exact()?.clone(),
                zeta0.clone(),
                c0.as_exact()?.clone(),
            )),
            PeriodicForm::General {
                numerator,
                denominator,
            } => RatExpFunction::new(k, numerator.clone(), denominator.clone()),
        }
    }

    fn params_json(&self) -> Map<String, Json> {
        let r = |x: &Rational| json!(x);
        let v = |x: &Value| serde_json::to_value(x).expect("serializable");
        let mut m = Map::new();
        match &self.family {
            Family::RationalPole {
                c_minus2,
                c_minus1,
                poly,
            } => {
                m.insert("c_minus2".into(), r(c_minus2));
                m.insert("c_minus1".into(), r(c_minus1));
                m.insert("poly".into(), json!(poly));
            }
            Family::SimplyPeriodic { k, k_squared, form } => {
                m.insert("k".into(), v(k));
                m.insert("k_squared".into(), r(k_squared));
                match form {
                    PeriodicForm::SimplePole { h0, zeta0, c0 } => {
                        m.insert("h0".into(), v(h0));
                        m.insert("zeta0".into(), r(zeta0));
                        m.insert("c0".into(), v(c0));
                    }
                    PeriodicForm::General {
                        numerator,
                        denominator,
                    } => {
                        m.insert("numerator".into(), json!(numerator));
                        m.insert("denominator".into(), json!(denominator));
                    }
                }
            }
            Family::Quadratic { a, b, c } => {
                m.insert("a".into(), r(a));
                m.insert("b".into(), r(b));
                m.insert("c".into(), r(c));
            }
            Family::Linear { a, b } => {
                m.insert("a".into(), v(a));
                m.insert("b".into(), r(b));
            }
            Family::WeierstrassZeta {
                a,
                beta,
                g2,
                g3,
                c,
                c1,
            } => {
                m.insert("A".into(), r(a));
                m.insert("beta".into(), r(beta));
                m.insert("g2".into(), r(g2));
                m.insert("g3".into(), r(g3));
                m.insert("c".into(), r(c));
                m.insert("c1".into(), r(c1));
            }
            Family::TanForm { a, k_squared, k0 } => {
                m.insert("A".into(), r(a));
                m.insert("k_squared".into(), r(k_squared));
                m.insert("k0".into(), r(k0));
            }
            Family::LogDerivativeReduction {
                a,
                delta,
                k0,
                k1,
                ode,
                w0,
                w0p,
            } => {
                m.insert("A".into(), r(a));
                m.insert("delta".into(), r(delta));
                m.insert("k0".into(), r(k0));
                m.insert("k1".into(), r(k1));
                m.insert("q".into(), json!(ode.q));
                m.insert("w0".into(), r(w0));
                m.insert("w0p".into(), r(w0p));
            }
        }
        if !self.offset.is_zero() {
            m.insert("offset".into(), r(&self.offset));
        }
        m
    }

    pub fn to_json(&self) -> Json {
        let mut out = Map::new();
        out.insert("family".into(), json!(self.tag()));
        out.insert("params".into(), Json::Object(self.params_json()));
        out.insert("constraints".into(), json!(self.constraint_residuals));
        out.insert("mode".into(), json!(self.mode()));
        if !self.notes.is_empty() {
            out.insert("notes".into(), json!(self.notes));
        }
        Json::Object(out)
    }
}

impl Serialize for SolutionDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}
