//! Fixed inputs shared by the benchmarks in `benches/`.

use painleve_core::catalog::FreeChoices;
use painleve_core::{rat, OdeParams, Rational};

/// A generic pair with a simply periodic solution (`k = ±5`).
pub fn periodic_case() -> (OdeParams, FreeChoices) {
    (OdeParams::from_i64(1, 2, 0, 5, 0, 0), FreeChoices::new())
}

/// The zeta-function regime with nonzero invariants.
pub fn zeta_case() -> (OdeParams, Rational, Rational) {
    (OdeParams::from_i64(3, 0, 0, 6, 0, -3), rat(2, 1), rat(0, 1))
}

/// `(A, B)` pairs for index computations, away from `A + 2B = 0`.
pub fn index_pairs(n: usize) -> Vec<OdeParams> {
    (1..=n as i64)
        .map(|i| OdeParams::ab(rat(i, 3), rat(7 - i, 5)))
        .filter(|p| !p.pole_sum().is_zero())
        .collect()
}
