//! The equation family, its general polynomial form, physical adapters and
//! residual operators.

mod adapters;
mod general;
mod linear;
mod params;
mod residual;

pub use adapters::{from_cheng_minkowycz, from_falkner_skan};
pub use general::{
    to_general_ode, to_general_ode_symbolic, GeneralOde, MultiIndex, OdeTerm, EXACT_PRECISION,
    SYM_ALPHA, SYM_BETA, SYM_DELTA, SYM_FIRST_FREE, SYM_GAMMA,
};
pub use linear::LinearOde2;
pub use params::OdeParams;
pub use residual::{
    residual_at, residual_numeric, residual_ratexp, residual_series, NumericResidual,
    SampleResidual,
};
