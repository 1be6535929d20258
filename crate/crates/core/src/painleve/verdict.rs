//! Painlevé test verdicts per branch and for a whole equation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactnum::Rational;
use crate::ode::{to_general_ode, GeneralOde, OdeParams};

use super::expand::{expand_behavior, Resonance};
use super::indicial::{indicial_polynomial, FuchsReport};
use super::leading::{leading_behaviors, LeadingBehavior, UnresolvedBalance};
use super::roots::FuchsIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Passes,
    Fails,
    Undecided,
}

impl Verdict {
    /// Fails dominates Undecided, which dominates Passes.
    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fails, _) | (_, Fails) => Fails,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Passes,
        }
    }
}

pub const NEGATIVE_RESONANCE_NOTE: &str = "negative resonance — perturbative test out of scope";
pub const DOUBLE_INDEX_REASON: &str = "movable multivaluedness (double Fuchs index)";

/// Verdict for one balance from its Fuchs indices and resonance data.
/// Returns `(verdict, reasons for failure, notes)`.
pub fn branch_verdict(
    lead: &LeadingBehavior,
    fuchs: &FuchsReport,
    resonances: &[Resonance],
) -> (Verdict, Vec<String>, Vec<String>) {
    let mut reasons = Vec::new();
    let mut notes = Vec::new();
    for idx in &fuchs.indices {
        if idx.as_integer().is_none() {
            reasons.push(format!("non-integer Fuchs index {idx}"));
        }
    }
    for idx in fuchs.repeated() {
        reasons.push(format!("{DOUBLE_INDEX_REASON}: j = {idx}"));
    }
    for r in resonances.iter().filter(|r| !r.compatible) {
        reasons.push(format!("incompatible resonance at j = {}: Q_j = {}", r.j, r.q_j));
    }
    let mut negatives: Vec<i64> = fuchs
        .indices
        .iter()
        .filter_map(FuchsIndex::as_integer)
        .filter(|&j| j < -1)
        .collect();
    negatives.dedup();
    for j in negatives {
        notes.push(format!("{NEGATIVE_RESONANCE_NOTE} (j = {j})"));
    }
    if fuchs.indices.iter().any(|i| i.as_integer() == Some(0)) {
        notes.push(if lead.u0_free {
            "index 0 corresponds to the arbitrary leading coefficient".into()
        } else {
            "index 0 with a fixed leading coefficient was not examined".into()
        });
    }
    let verdict = if !reasons.is_empty() {
        Verdict::Fails
    } else if fuchs.unresolved.is_some() {
        notes.push("indicial roots could not be found exactly".into());
        Verdict::Undecided
    } else {
        Verdict::Passes
    };
    (verdict, reasons, notes)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchReport {
    pub p: i64,
    pub u0: Rational,
    pub u0_free: bool,
    pub fuchs: FuchsReport,
    pub resonances: Vec<Resonance>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PainleveReport {
    pub verdict: Verdict,
    pub branches: Vec<BranchReport>,
    pub unresolved: Vec<UnresolvedBalance>,
    pub reasons: Vec<String>,
    pub notes: Vec<String>,
}

fn is_linear(ode: &GeneralOde) -> bool {
    ode.terms().iter().all(|t| t.index.degree() <= 1)
}

fn branch_report(ode: &GeneralOde, lead: &LeadingBehavior) -> BranchReport {
    let indicial = indicial_polynomial(lead);
    let fuchs = indicial.fuchs();
    let top = fuchs.positive_integers().last().copied().unwrap_or(0);
    let resonances = if top > 0 && fuchs.unresolved.is_none() {
        expand_behavior(ode, lead, top, &BTreeMap::new())
            .map(|rep| rep.expansion.resonances)
            .unwrap_or_default()
    } else {
        Vec::new()
    };
    let (verdict, reasons, notes) = branch_verdict(lead, &fuchs, &resonances);
    BranchReport {
        p: lead.p,
        u0: lead.u0.clone(),
        u0_free: lead.u0_free,
        fuchs,
        resonances,
        verdict,
        reasons,
        notes,
    }
}

/// Run the test on every balance with `p` in the default window.
pub fn painleve_test(ode: &GeneralOde) -> PainleveReport {
    let search = leading_behaviors(ode);
    let branches: Vec<BranchReport> = search
        .behaviors
        .iter()
        .map(|lead| branch_report(ode, lead))
        .collect();
    let mut notes = search.diagnostics.clone();
    let mut verdict = branches
        .iter()
        .fold(Verdict::Passes, |acc, b| acc.combine(b.verdict));
    if !search.unresolved.is_empty() {
        notes.push("some balances have irrational leading coefficients".into());
        verdict = verdict.combine(Verdict::Undecided);
    }
    if branches.is_empty() && search.unresolved.is_empty() {
        if is_linear(ode) {
            notes.push("linear equation: solutions are entire, no movable singularities".into());
        } else {
            verdict = Verdict::Undecided;
        }
    }
    PainleveReport {
        verdict,
        branches,
        unresolved: search.unresolved,
        reasons: Vec::new(),
        notes,
    }
}

/// The test for the cubic-family equation. On top of [`painleve_test`],
/// when the simple-pole indices are `{−3, −2, −1}` (that is `B = −2A/3`) the
/// known necessary condition `β = γ = δ = 0` from perturbing around the
/// negative resonances is applied, after removing `α` by translation.
pub fn painleve_test_params(params: &OdeParams) -> PainleveReport {
    let mut report = painleve_test(&to_general_ode(params));
    let chazy_three = report.branches.iter().any(|b| {
        b.p == -1
            && b.fuchs.indices
                == [-3, -2, -1].map(|j| FuchsIndex::Rational(Rational::from(j)))
    });
    if chazy_three {
        let t = if params.alpha.is_zero() || params.b.is_zero() {
            params.clone()
        } else {
            params.shifted(&(&params.alpha / &params.b))
        };
        let violated: Vec<&str> = [("beta", &t.beta), ("gamma", &t.gamma), ("delta", &t.delta)]
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(n, _)| n)
            .collect();
        if violated.is_empty() {
            report
                .notes
                .push("perturbative condition at resonances -2, -3 holds: beta = gamma = delta = 0".into());
        } else {
            report.reasons.push(format!(
                "perturbative condition at resonances -2, -3 requires beta = gamma = delta = 0 (after removing alpha); nonzero: {}",
                violated.join(", ")
            ));
            report.verdict = Verdict::Fails;
        }
    }
    report
}
