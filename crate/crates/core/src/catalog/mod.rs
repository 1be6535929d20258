//! Parameter regimes and constructors for the closed-form solution
//! families.

mod classify;
mod descriptor;
mod lambda;
mod special;
mod table1;

pub use classify::{classify, generic_check, CaseTag, GenericVerdict};
pub use descriptor::{Family, Mode, PeriodicForm, SolutionDescriptor};
pub use lambda::{fs_lambda_enumerate, LambdaCatalog, LambdaEntry, EXCLUDED_J};
pub use special::{
    chazy2_reduction, chazy3_solution, weierstrass_b0_solution, weierstrass_invariants,
    Chazy2Reduction, FirstIntegral,
};
pub use table1::{alpha_translation, table1_solutions, FreeChoices, Table1Solutions};
