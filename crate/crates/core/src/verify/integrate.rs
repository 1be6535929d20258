//! Fixed-step RK4 for `w'' + q(z) w = 0` along straight segments in ℂ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{is_finite, ComplexF};
use crate::ode::LinearOde2;

/// Relative change between successive step doublings accepted as
/// converged.
pub const RK4_TOLERANCE: f64 = 1e-10;
const INITIAL_STEPS: usize = 16;
const MAX_DOUBLINGS: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LinearSample {
    pub z: [f64; 2],
    pub w: [f64; 2],
    pub dw: [f64; 2],
    /// `|w / w'|` is below 0.1: a zero of `w` (pole of `w'/w`) is close.
    pub near_zero: bool,
}

impl LinearSample {
    pub fn w(&self) -> ComplexF {
        ComplexF::new(self.w[0], self.w[1])
    }

    pub fn dw(&self) -> ComplexF {
        ComplexF::new(self.dw[0], self.dw[1])
    }
}

fn rk4_segment(l: &LinearOde2, from: ComplexF, to: ComplexF, y: [ComplexF; 2], steps: usize) -> [ComplexF; 2] {
    let h = (to - from) / steps as f64;
    let f = |z: ComplexF, y: [ComplexF; 2]| [y[1], -l.q.eval_complex(z) * y[0]];
    let mut y = y;
    for i in 0..steps {
        let z = from + h * i as f64;
        let k1 = f(z, y);
        let k2 = f(z + h / 2.0, [y[0] + h / 2.0 * k1[0], y[1] + h / 2.0 * k1[1]]);
        let k3 = f(z + h / 2.0, [y[0] + h / 2.0 * k2[0], y[1] + h / 2.0 * k2[1]]);
        let k4 = f(z + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
        for j in 0..2 {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    y
}

fn converged_segment(l: &LinearOde2, from: ComplexF, to: ComplexF, y: [ComplexF; 2]) -> Result<[ComplexF; 2]> {
    let mut steps = INITIAL_STEPS;
    let mut prev = rk4_segment(l, from, to, y, steps);
    let mut change = f64::INFINITY;
    for doublings in 1..=MAX_DOUBLINGS {
        steps *= 2;
        let next = rk4_segment(l, from, to, y, steps);
        if !next.iter().all(|v| is_finite(*v)) {
            return Err(Error::NoConvergence { doublings, change });
        }
        let scale = next[0].norm().max(next[1].norm()).max(1.0);
        change = ((next[0] - prev[0]).norm()).max((next[1] - prev[1]).norm()) / scale;
        if change < RK4_TOLERANCE {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NoConvergence {
        doublings: MAX_DOUBLINGS,
        change,
    })
}

/// Integrate from `z0` with `w(z0) = w0`, `w'(z0) = w0p` through the points
/// of `path` in order, returning `(w, w')` at each of them.
pub fn integrate_linear_ode(
    l: &LinearOde2,
    z0: ComplexF,
    w0: ComplexF,
    w0p: ComplexF,
    path: &[ComplexF],
) -> Result<Vec<LinearSample>> {
    let mut at = z0;
    let mut y = [w0, w0p];
    let mut out = Vec::with_capacity(path.len());
    for &z in path {
        y = converged_segment(l, at, z, y)?;
        at = z;
        out.push(LinearSample {
            z: [z.re, z.im],
            w: [y[0].re, y[0].im],
            dw: [y[1].re, y[1].im],
            near_zero: y[0].norm() < 0.1 * y[1].norm(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{cf, rat, Rational};
    use crate::series::PolyZ;

    #[test]
    fn free_motion_is_linear() {
        let l = LinearOde2::new(PolyZ::zero());
        let s = integrate_linear_ode(&l, cf(0.0, 0.0), cf(2.0, 0.0), cf(-1.0, 0.5), &[cf(1.0, 1.0), cf(-2.0, 0.0)]).unwrap();
        let exact = |z: ComplexF| cf(2.0, 0.0) + cf(-1.0, 0.5) * z;
        assert!((s[0].w() - exact(cf(1.0, 1.0))).norm() < 1e-12);
        assert!((s[1].w() - exact(cf(-2.0, 0.0))).norm() < 1e-12);
        assert!((s[1].dw() - cf(-1.0, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn constant_negative_potential_gives_cosh() {
        let l = LinearOde2::new(PolyZ::constant(rat(-1, 1)));
        let z = cf(0.7, 1.3);
        let s = integrate_linear_ode(&l, cf(0.0, 0.0), cf(1.0, 0.0), cf(0.0, 0.0), &[z]).unwrap();
        assert!((s[0].w() - z.cosh()).norm() < 1e-9 * z.cosh().norm());
        assert!((s[0].dw() - z.sinh()).norm() < 1e-9 * z.cosh().norm().max(1.0));
        let _ = Rational::zero();
    }
}
