//! Painlevé test for polynomial autonomous ODEs: dominant balances, indicial
//! polynomials, Fuchs indices, recursive expansion with resonance checks,
//! and closed forms for the cubic family.

mod expand;
mod indicial;
mod leading;
mod roots;
mod verdict;

pub use expand::{
    expand_behavior, expand_branch, free_symbol, laurent_expand, laurent_expand_symbolic,
    resonance_conditions, BranchExpansion, ExpansionReport, Resonance, ResonanceCondition,
};
pub use indicial::{
    fuchs_indices, indicial_polynomial, simple_pole_indicial, FuchsReport, IndicialPolynomial,
};
pub use leading::{
    balance_polynomial, dominant_terms, leading_behavior_at, leading_behaviors,
    leading_behaviors_in, LeadingBehavior, LeadingSearch, UnresolvedBalance, P_WINDOW,
};
pub use roots::{exact_roots, FuchsIndex, Roots};
pub use verdict::{
    branch_verdict, painleve_test, painleve_test_params, BranchReport, PainleveReport, Verdict,
    DOUBLE_INDEX_REASON, NEGATIVE_RESONANCE_NOTE,
};
