//! Leading pole behaviour `u ~ u₀ χ^p` and the dominant terms that balance.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::exactnum::Rational;
use crate::ode::GeneralOde;
use crate::series::PolyZ;

use super::roots::{exact_roots, FuchsIndex};

/// Default window of pole orders searched.
pub const P_WINDOW: RangeInclusive<i64> = -10..=-1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeadingBehavior {
    pub p: i64,
    pub u0: Rational,
    /// The balance vanishes identically, so `u0` is arbitrary; the value
    /// above is the one chosen for the expansion.
    pub u0_free: bool,
    pub dominant_terms: GeneralOde,
    /// Common exponent `min α_I` of the dominant terms.
    pub q: i64,
}

/// A pole order whose balance has roots that are not rational.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnresolvedBalance {
    pub p: i64,
    /// Balance polynomial in `u₀`, lowest degree first.
    pub balance: PolyZ,
    /// Irrational roots, when they are square-root expressible.
    pub roots: Vec<FuchsIndex>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct LeadingSearch {
    pub behaviors: Vec<LeadingBehavior>,
    pub unresolved: Vec<UnresolvedBalance>,
    pub diagnostics: Vec<String>,
}

/// Falling factorial `x (x − 1) ⋯ (x − k + 1)`.
pub(crate) fn falling(x: &Rational, k: usize) -> Rational {
    (0..k as i64).map(|t| x - &Rational::from(t)).product()
}

/// `Π_k ff(p, k)^{i_k}`: the factor a term picks up under `u = χ^p`.
pub(crate) fn monomial_factor(powers: &[u32], p: i64) -> Rational {
    let pr = Rational::from(p);
    powers
        .iter()
        .enumerate()
        .map(|(k, &i)| falling(&pr, k).pow(i))
        .product()
}

/// Terms attaining the minimal exponent at pole order `p`, with that
/// exponent.
pub fn dominant_terms(ode: &GeneralOde, p: i64) -> (GeneralOde, i64) {
    let q = ode
        .terms()
        .iter()
        .map(|t| t.index.pole_exponent(p))
        .min()
        .unwrap_or(0);
    (ode.subset(|t| t.index.pole_exponent(p) == q), q)
}

/// Balance polynomial in `u₀`: `Σ c_I Π_k ff(p,k)^{i_k} u₀^{|I|}` over the
/// dominant terms.
pub fn balance_polynomial(dominant: &GeneralOde, p: i64) -> PolyZ {
    let deg = dominant.terms().iter().map(|t| t.index.degree()).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg as usize + 1];
    for t in dominant.terms() {
        coeffs[t.index.degree() as usize] += &(&t.coeff * &monomial_factor(t.index.powers(), p));
    }
    PolyZ::new(coeffs)
}

/// Leading behaviours with `p` in [`P_WINDOW`]; a free `u₀` is set to 1.
pub fn leading_behaviors(ode: &GeneralOde) -> LeadingSearch {
    leading_behaviors_in(ode, P_WINDOW, &Rational::one())
}

pub fn leading_behaviors_in(
    ode: &GeneralOde,
    window: RangeInclusive<i64>,
    free_u0: &Rational,
) -> LeadingSearch {
    let mut out = LeadingSearch::default();
    if ode.is_empty() {
        out.diagnostics.push("empty equation".into());
        return out;
    }
    for p in window.clone().rev() {
        let (dominant, q) = dominant_terms(ode, p);
        if dominant.terms().len() < 2 {
            continue;
        }
        let balance = balance_polynomial(&dominant, p);
        if balance.is_zero() {
            out.behaviors.push(LeadingBehavior {
                p,
                u0: free_u0.clone(),
                u0_free: true,
                dominant_terms: dominant,
                q,
            });
            continue;
        }
        let low = balance.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
        let reduced = PolyZ::new(balance.coeffs()[low..].to_vec());
        if reduced.degree() == Some(0) {
            continue;
        }
        let roots = exact_roots(&reduced);
        let mut irrational = Vec::new();
        let mut seen: Vec<Rational> = Vec::new();
        for r in roots.roots {
            match r {
                FuchsIndex::Rational(u0) => {
                    if u0.is_zero() || seen.contains(&u0) {
                        continue;
                    }
                    seen.push(u0.clone());
                    out.behaviors.push(LeadingBehavior {
                        p,
                        u0,
                        u0_free: false,
                        dominant_terms: dominant.clone(),
                        q,
                    });
                }
                surd => irrational.push(surd),
            }
        }
        if !irrational.is_empty() || roots.unresolved.is_some() {
            out.unresolved.push(UnresolvedBalance {
                p,
                balance,
                roots: irrational,
            });
        }
    }
    if out.behaviors.is_empty() && out.unresolved.is_empty() {
        out.diagnostics.push(format!(
            "no dominant balance with p in [{}, {}]",
            window.start(),
            window.end()
        ));
    }
    out
}

/// The behaviour with a prescribed `(p, u₀)`, without searching.
pub fn leading_behavior_at(ode: &GeneralOde, p: i64, u0: Rational) -> LeadingBehavior {
    let (dominant_terms, q) = dominant_terms(ode, p);
    LeadingBehavior {
        p,
        u0,
        u0_free: false,
        dominant_terms,
        q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::ode::{to_general_ode, OdeParams};

    #[test]
    fn simple_pole_balance() {
        let ode = to_general_ode(&OdeParams::ab(rat(1, 1), rat(2, 1)));
        let s = leading_behaviors(&ode);
        assert_eq!(s.behaviors.len(), 1);
        assert_eq!(s.behaviors[0].p, -1);
        assert_eq!(s.behaviors[0].u0, rat(-6, 5));
        assert_eq!(s.behaviors[0].q, -4);
        assert_eq!(s.behaviors[0].dominant_terms.terms().len(), 3);
    }

    #[test]
    fn b_zero_balance() {
        let ode = to_general_ode(&OdeParams::ab(rat(3, 1), Rational::zero()));
        let s = leading_behaviors(&ode);
        assert_eq!(s.behaviors.len(), 1);
        assert_eq!(s.behaviors[0].u0, rat(-2, 1));
    }

    #[test]
    fn linear_equation_has_no_balance() {
        let ode = GeneralOde::new([(Rational::one(), vec![0, 0, 0, 1]), (Rational::one(), vec![1])]);
        let s = leading_behaviors(&ode);
        assert!(s.behaviors.is_empty());
        assert_eq!(s.diagnostics.len(), 1);
    }

    #[test]
    fn double_pole_branch_has_free_coefficient() {
        // B = −2A/3 makes the χ⁻⁶ balance of u·u'' and u'² vanish identically.
        let ode = to_general_ode(&OdeParams::ab(rat(3, 1), rat(-2, 1)));
        let s = leading_behaviors(&ode);
        let ps: Vec<(i64, bool)> = s.behaviors.iter().map(|b| (b.p, b.u0_free)).collect();
        assert_eq!(ps, vec![(-1, false), (-2, true)]);
    }
}
