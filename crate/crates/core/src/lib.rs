//! Painlevé analysis and closed-form meromorphic solutions of
//!
//! ```text
//! u''' − B u u'' − A u'² + α u'' + β u' + γ u + δ = 0
//! ```
//!
//! with exact rational coefficients. The crate computes leading pole
//! behaviour, Fuchs indices and resonance conditions, classifies parameter
//! regimes, builds every closed-form solution family, and checks each one
//! against the equation with exact series or rational-function residuals
//! (falling back to sampled complex residuals when a constant is irrational).

pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod ode;
pub mod painleve;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{rat, ComplexF, Rational, Value};
pub use ode::{GeneralOde, LinearOde2, OdeParams};
pub use series::{LaurentSeries, PolyZ, RatExpFunction};
