//! Formal objects: truncated Laurent series, univariate and multivariate
//! polynomials, and rational functions of a single exponential.

mod laurent;
mod mpoly;
mod poly;
mod ratexp;

pub use laurent::{series_arith, series_diff, LaurentSeries, SeriesOp};
pub use mpoly::MPoly;
pub use poly::{Poly, PolyZ};
pub use ratexp::{ratexp_diff_z, RatExpFunction};

/// Default truncation order for expansions: `max(20, 2 · max_index + 4)`.
pub fn default_truncation(largest_fuchs_index: Option<i64>) -> i64 {
    largest_fuchs_index.map_or(20, |j| (2 * j + 4).max(20))
}
