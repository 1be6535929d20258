//! Recursive Laurent expansion `E_j = P(u₀; j) u_j + Q_j = 0` and resonance
//! checks.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Coeff, Rational};
use crate::ode::{to_general_ode, to_general_ode_symbolic, GeneralOde, OdeParams, SYM_FIRST_FREE};
use crate::series::{LaurentSeries, MPoly};

use super::indicial::{indicial_polynomial, FuchsReport, IndicialPolynomial};
use super::leading::{leading_behavior_at, LeadingBehavior};
use super::verdict::{branch_verdict, Verdict};

/// Outcome at a positive integer Fuchs index.
#[derive(Clone, Debug, PartialEq)]
pub struct Resonance<S: Coeff = Rational> {
    pub j: i64,
    pub q_j: S,
    pub compatible: bool,
}

impl Serialize for Resonance<Rational> {
    fn serialize<Sr: Serializer>(&self, serializer: Sr) -> std::result::Result<Sr::Ok, Sr::Error> {
        let mut st = serializer.serialize_struct("Resonance", 3)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("Qj", &self.q_j)?;
        st.serialize_field("compatible", &self.compatible)?;
        st.end()
    }
}

/// Coefficients `u₀ … u_N` of one branch and the resonance data met on the
/// way.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchExpansion<S: Coeff = Rational> {
    pub p: i64,
    pub coeffs: Vec<S>,
    pub resonances: Vec<Resonance<S>>,
}

impl<S: Coeff> BranchExpansion<S> {
    /// The expansion as a series known through `χ^{p+N}`.
    pub fn series(&self) -> LaurentSeries<S> {
        let n = self.coeffs.len() as i64;
        LaurentSeries::new(self.p, self.coeffs.clone(), self.p + n)
    }
}

/// Solve `E_j = 0` for `j = 1 … n` along the balance `u₀ χ^p`. At a root of
/// the indicial polynomial the coefficient is taken from `free(j)` and `Q_j`
/// is recorded instead.
pub fn expand_branch<S: Coeff>(
    ode: &GeneralOde<S>,
    p: i64,
    q: i64,
    u0: S,
    indicial: &IndicialPolynomial,
    n: i64,
    free: impl Fn(i64) -> S,
) -> BranchExpansion<S> {
    let mut coeffs = vec![u0];
    let mut resonances = Vec::new();
    for j in 1..=n {
        let mut trial = coeffs.clone();
        trial.push(S::zero());
        let u = LaurentSeries::new(p, trial, p + j + 1);
        let q_j = ode
            .evaluate(&u)
            .coeff(j + q)
            .expect("E_j lies within the known range");
        let pj = indicial.eval(j);
        if pj.is_zero() {
            let compatible = q_j.is_exactly_zero();
            resonances.push(Resonance { j, q_j, compatible });
            coeffs.push(free(j));
        } else {
            let inv = -pj.recip().expect("nonzero");
            coeffs.push(q_j.scale(&inv));
        }
    }
    BranchExpansion {
        p,
        coeffs,
        resonances,
    }
}

/// Expansion of the equation about its simple-pole balance.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport {
    pub leading: LeadingBehavior,
    pub indicial: IndicialPolynomial,
    pub fuchs: FuchsReport,
    pub expansion: BranchExpansion,
    /// Indices whose coefficient was set from the caller's free values.
    pub free_coefficients: Vec<i64>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
    pub notes: Vec<String>,
}

impl ExpansionReport {
    pub fn coeffs(&self) -> &[Rational] {
        &self.expansion.coeffs
    }

    pub fn resonances(&self) -> &[Resonance] {
        &self.expansion.resonances
    }

    pub fn series(&self) -> LaurentSeries {
        self.expansion.series()
    }

    pub fn compatible(&self) -> bool {
        self.expansion.resonances.iter().all(|r| r.compatible)
    }
}

impl Serialize for ExpansionReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExpansionReport", 10)?;
        st.serialize_field("p", &self.leading.p)?;
        st.serialize_field("u0", &self.leading.u0)?;
        st.serialize_field("fuchs", &self.fuchs.indices)?;
        st.serialize_field("discriminant", &self.fuchs.discriminant)?;
        st.serialize_field("N", &(self.expansion.coeffs.len() as i64 - 1))?;
        st.serialize_field("coeffs", &self.expansion.coeffs)?;
        st.serialize_field("resonances", &self.expansion.resonances)?;
        st.serialize_field("free_coefficients", &self.free_coefficients)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("reasons", &self.reasons)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

/// Expand about `u ~ −6/(A+2B) χ⁻¹` through `u_N`, taking free coefficients
/// at resonances from `free_values` (default 0).
pub fn laurent_expand(
    params: &OdeParams,
    n: i64,
    free_values: &BTreeMap<i64, Rational>,
) -> Result<ExpansionReport> {
    let denom = params.pole_sum();
    if denom.is_zero() {
        return Err(Error::DegenerateBalance);
    }
    let ode = to_general_ode(params);
    let leading = leading_behavior_at(&ode, -1, &Rational::from(-6) / &denom);
    expand_behavior(&ode, &leading, n, free_values)
}

/// Expansion along an arbitrary leading behaviour of a general equation.
pub fn expand_behavior(
    ode: &GeneralOde,
    leading: &LeadingBehavior,
    n: i64,
    free_values: &BTreeMap<i64, Rational>,
) -> Result<ExpansionReport> {
    let indicial = indicial_polynomial(leading);
    let fuchs = indicial.fuchs();
    if let Some(&top) = fuchs.positive_integers().last() {
        if n < top {
            return Err(Error::Precondition(format!(
                "truncation order {n} is below the largest resonance {top}"
            )));
        }
    }
    let expansion = expand_branch(
        ode,
        leading.p,
        leading.q,
        leading.u0.clone(),
        &indicial,
        n,
        |j| free_values.get(&j).cloned().unwrap_or_default(),
    );
    let free_coefficients = expansion.resonances.iter().map(|r| r.j).collect();
    let (verdict, reasons, notes) = branch_verdict(leading, &fuchs, &expansion.resonances);
    Ok(ExpansionReport {
        leading: leading.clone(),
        indicial,
        fuchs,
        expansion,
        free_coefficients,
        verdict,
        reasons,
        notes,
    })
}

/// Variable index of the free coefficient `u_j` in symbolic expansions.
pub fn free_symbol(j: i64) -> usize {
    SYM_FIRST_FREE + j as usize
}

/// Simple-pole expansion with `α, β, γ, δ` kept as symbols, so each `Q_j`
/// comes out as a polynomial in them (and in the free coefficients, see
/// [`free_symbol`]).
pub fn laurent_expand_symbolic(a: &Rational, b: &Rational, n: i64) -> Result<BranchExpansion<MPoly>> {
    let params = OdeParams::ab(a.clone(), b.clone());
    let denom = params.pole_sum();
    if denom.is_zero() {
        return Err(Error::DegenerateBalance);
    }
    let u0 = &Rational::from(-6) / &denom;
    let leading = leading_behavior_at(&to_general_ode(&params), -1, u0.clone());
    let indicial = indicial_polynomial(&leading);
    let ode = to_general_ode_symbolic(a, b);
    Ok(expand_branch(
        &ode,
        leading.p,
        leading.q,
        MPoly::constant(u0),
        &indicial,
        n,
        |j| MPoly::var(free_symbol(j)),
    ))
}

/// A parameter condition read off a resonance.
#[derive(Clone, Debug, PartialEq)]
pub struct ResonanceCondition {
    pub j: i64,
    /// `Q_j` as computed.
    pub q_j: MPoly,
    /// `Q_j` after imposing the conditions found at earlier resonances.
    pub reduced: MPoly,
    /// Symbol that must vanish, when `reduced` lies in the ideal it
    /// generates.
    pub vanishing_symbol: Option<usize>,
}

/// Walk the resonances in order; whenever the reduced `Q_j` is a multiple of
/// a single equation symbol, record that symbol as forced to zero and impose
/// it on later resonances.
pub fn resonance_conditions(expansion: &BranchExpansion<MPoly>) -> Vec<ResonanceCondition> {
    let mut zeroed: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for r in &expansion.resonances {
        let reduced = zeroed
            .iter()
            .fold(r.q_j.clone(), |acc, &v| acc.substitute(v, &Rational::zero()));
        let vanishing_symbol = if reduced.is_zero() {
            None
        } else {
            reduced
                .variables()
                .into_iter()
                .filter(|&v| v < SYM_FIRST_FREE)
                .find(|&v| reduced.lies_in_ideal_of_vars(&[v]))
        };
        if let Some(v) = vanishing_symbol {
            zeroed.push(v);
        }
        out.push(ResonanceCondition {
            j: r.j,
            q_j: r.q_j.clone(),
            reduced,
            vanishing_symbol,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::ode::{residual_series, SYM_ALPHA, SYM_GAMMA};

    #[test]
    fn generic_expansion_is_determined_and_solves() {
        let params = OdeParams::from_i64(1, 2, 0, 3, 0, -1);
        let rep = laurent_expand(&params, 12, &BTreeMap::new()).unwrap();
        assert!(rep.resonances().is_empty());
        assert_eq!(rep.coeffs()[0], rat(-6, 5));
        let r = residual_series(&params, &rep.series()).unwrap();
        assert!(r.is_zero(), "{r}");
    }

    #[test]
    fn linear_coefficient_matches_indicial_value() {
        // P(j) = E_j(u_j = 1) − E_j(u_j = 0).
        let params = OdeParams::from_i64(2, 3, 1, -1, 2, 5);
        let rep = laurent_expand(&params, 6, &BTreeMap::new()).unwrap();
        let ode = to_general_ode(&params);
        for j in 1..=6i64 {
            let mut c: Vec<Rational> = rep.coeffs()[..j as usize].to_vec();
            c.push(Rational::zero());
            let e0 = ode.evaluate(&LaurentSeries::new(-1, c.clone(), j)).coeff(j - 4).unwrap();
            *c.last_mut().unwrap() = Rational::one();
            let e1 = ode.evaluate(&LaurentSeries::new(-1, c, j)).coeff(j - 4).unwrap();
            assert_eq!(&e1 - &e0, rep.indicial.eval(j));
        }
    }

    #[test]
    fn b_zero_symbolic_conditions() {
        let exp = laurent_expand_symbolic(&rat(1, 1), &Rational::zero(), 6).unwrap();
        let conds = resonance_conditions(&exp);
        let js: Vec<i64> = conds.iter().map(|c| c.j).collect();
        assert_eq!(js, vec![1, 6]);
        assert_eq!(conds[0].vanishing_symbol, Some(SYM_ALPHA));
        assert_eq!(conds[1].vanishing_symbol, Some(SYM_GAMMA));
    }
}
