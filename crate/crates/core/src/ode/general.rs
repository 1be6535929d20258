//! General autonomous polynomial ODEs `Σ c_I u^{i₀} (u')^{i₁} ⋯ (u^{(n)})^{i_n} = 0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactnum::{Coeff, Rational};
use crate::series::{LaurentSeries, MPoly};

use super::OdeParams;

/// Precision used for series that are exact (no truncation).
pub const EXACT_PRECISION: i64 = i64::MAX / 8;

/// Exponent tuple `(i₀, …, i_n)`; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(mut powers: Vec<u32>) -> Self {
        while powers.last() == Some(&0) {
            powers.pop();
        }
        MultiIndex(powers)
    }

    pub fn powers(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|I| = i₀ + ⋯ + i_n`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Highest derivative order present, if any.
    pub fn order(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Exponent of χ produced by the term under `u ~ χ^p`:
    /// `α_I = Σ i_k (p − k)`.
    pub fn pole_exponent(&self, p: i64) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &i)| i as i64 * (p - k as i64))
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OdeTerm<S: Coeff = Rational> {
    pub coeff: S,
    pub index: MultiIndex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneralOde<S: Coeff = Rational> {
    terms: Vec<OdeTerm<S>>,
}

impl<S: Coeff> GeneralOde<S> {
    /// Merges repeated multi-indices and drops zero coefficients.
    pub fn new(terms: impl IntoIterator<Item = (S, Vec<u32>)>) -> Self {
        let mut merged: BTreeMap<MultiIndex, S> = BTreeMap::new();
        let mut order = Vec::new();
        for (c, powers) in terms {
            let idx = MultiIndex::new(powers);
            match merged.get_mut(&idx) {
                Some(slot) => *slot = slot.clone() + c,
                None => {
                    order.push(idx.clone());
                    merged.insert(idx, c);
                }
            }
        }
        let terms = order
            .into_iter()
            .filter_map(|idx| {
                let c = merged.remove(&idx)?;
                (!c.is_exactly_zero()).then_some(OdeTerm { coeff: c, index: idx })
            })
            .collect();
        GeneralOde { terms }
    }

    pub fn terms(&self) -> &[OdeTerm<S>] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a given multi-index (zero when absent).
    pub fn coeff_of(&self, powers: &[u32]) -> S {
        let idx = MultiIndex::new(powers.to_vec());
        self.terms
            .iter()
            .find(|t| t.index == idx)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(S::zero)
    }

    /// Highest derivative order in the equation.
    pub fn order(&self) -> usize {
        self.terms
            .iter()
            .filter_map(|t| t.index.order())
            .max()
            .unwrap_or(0)
    }

    pub fn subset(&self, keep: impl Fn(&OdeTerm<S>) -> bool) -> Self {
        GeneralOde {
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    /// Substitute a series for `u` and sum the terms.
    pub fn evaluate(&self, u: &LaurentSeries<S>) -> LaurentSeries<S> {
        let n = self.order();
        let mut derivs = Vec::with_capacity(n + 1);
        derivs.push(u.clone());
        for k in 1..=n {
            let next = derivs[k - 1].diff(1);
            derivs.push(next);
        }
        let mut total: Option<LaurentSeries<S>> = None;
        for term in &self.terms {
            let mut prod = LaurentSeries::constant(term.coeff.clone(), EXACT_PRECISION);
            for (k, &i) in term.index.powers().iter().enumerate() {
                for _ in 0..i {
                    prod = prod.mul(&derivs[k]);
                }
            }
            total = Some(match total {
                None => prod,
                Some(t) => t.add(&prod),
            });
        }
        total.unwrap_or_else(|| LaurentSeries::zero(EXACT_PRECISION))
    }
}

fn term_name(index: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (k, &i) in index.powers().iter().enumerate() {
        if i == 0 {
            continue;
        }
        let base = format!("u{}", "'".repeat(k));
        parts.push(if i == 1 { base } else { format!("{base}^{i}") });
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("·")
    }
}

impl fmt::Display for GeneralOde<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let a = t.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let name = term_name(&t.index);
            if a.is_one() && name != "1" {
                write!(f, "{name}")?;
            } else if name == "1" {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}·{name}")?;
            }
        }
        write!(f, " = 0")
    }
}

impl Serialize for GeneralOde<Rational> {
    fn serialize<Sr: Serializer>(&self, serializer: Sr) -> Result<Sr::Ok, Sr::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: &'a Rational,
            powers: &'a [u32],
        }
        let terms: Vec<Term<'_>> = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff,
                powers: t.index.powers(),
            })
            .collect();
        let mut st = serializer.serialize_struct("GeneralOde", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Term list of the residual `R[u]` for the given constants.
pub fn to_general_ode(params: &OdeParams) -> GeneralOde<Rational> {
    GeneralOde::new([
        (Rational::one(), vec![0, 0, 0, 1]),
        (params.alpha.clone(), vec![0, 0, 1, 0]),
        (params.beta.clone(), vec![0, 1, 0, 0]),
        (params.gamma.clone(), vec![1, 0, 0, 0]),
        (params.delta.clone(), vec![0, 0, 0, 0]),
        (-&params.b, vec![1, 0, 1, 0]),
        (-&params.a, vec![0, 2, 0, 0]),
    ])
}

/// Symbol indices used by [`to_general_ode_symbolic`].
pub const SYM_ALPHA: usize = 0;
pub const SYM_BETA: usize = 1;
pub const SYM_GAMMA: usize = 2;
pub const SYM_DELTA: usize = 3;
/// First free index available for further symbols.
pub const SYM_FIRST_FREE: usize = 4;

/// The residual with rational `A`, `B` and symbolic `α, β, γ, δ`
/// (variables [`SYM_ALPHA`] … [`SYM_DELTA`]).
pub fn to_general_ode_symbolic(a: &Rational, b: &Rational) -> GeneralOde<MPoly> {
    GeneralOde::new([
        (MPoly::constant(Rational::one()), vec![0, 0, 0, 1]),
        (MPoly::var(SYM_ALPHA), vec![0, 0, 1, 0]),
        (MPoly::var(SYM_BETA), vec![0, 1, 0, 0]),
        (MPoly::var(SYM_GAMMA), vec![1, 0, 0, 0]),
        (MPoly::var(SYM_DELTA), vec![0, 0, 0, 0]),
        (MPoly::constant(-b), vec![1, 0, 1, 0]),
        (MPoly::constant(-a), vec![0, 2, 0, 0]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn transcription() {
        let ode = to_general_ode(&OdeParams::ab(r(1), r(1)));
        assert_eq!(ode.terms().len(), 3);
        assert_eq!(ode.coeff_of(&[0, 0, 0, 1]), r(1));
        assert_eq!(ode.coeff_of(&[1, 0, 1]), r(-1));
        assert_eq!(ode.coeff_of(&[0, 2]), r(-1));
        assert_eq!(ode.to_string(), "u''' - u·u'' - u'^2 = 0");
    }

    #[test]
    fn all_zero_params_leave_third_derivative() {
        let ode = to_general_ode(&OdeParams::default());
        assert_eq!(ode.terms().len(), 1);
        assert_eq!(ode.coeff_of(&[0, 0, 0, 1]), r(1));
    }

    #[test]
    fn chazy_three_normal_form() {
        // u''' = −3u'² + 2uu''  ⇔  u''' − 2uu'' + 3u'² = 0.
        let ode = to_general_ode(&OdeParams::ab(r(-3), r(2)));
        assert_eq!(ode.coeff_of(&[0, 0, 0, 1]), r(1));
        assert_eq!(ode.coeff_of(&[1, 0, 1]), r(-2));
        assert_eq!(ode.coeff_of(&[0, 2]), r(3));
    }

    #[test]
    fn duplicates_merge_and_cancel() {
        let ode = GeneralOde::new([(r(2), vec![1, 0]), (r(-2), vec![1]), (r(3), vec![0, 1])]);
        assert_eq!(ode.terms().len(), 1);
    }

    #[test]
    fn pole_exponents() {
        assert_eq!(MultiIndex::new(vec![0, 0, 0, 1]).pole_exponent(-1), -4);
        assert_eq!(MultiIndex::new(vec![1, 0, 1]).pole_exponent(-1), -4);
        assert_eq!(MultiIndex::new(vec![0, 2]).pole_exponent(-2), -6);
    }
}
