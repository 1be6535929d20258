use std::fmt;

use serde::Serialize;

use crate::exactnum::{ComplexF, Rational};
use crate::series::PolyZ;

/// `w'' + q(z) w = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearOde2 {
    pub q: PolyZ,
}

impl LinearOde2 {
    pub fn new(q: PolyZ) -> Self {
        LinearOde2 { q }
    }

    /// `q(z), q'(z), q''(z)` at a complex point.
    pub fn q_jet(&self, z: ComplexF) -> [ComplexF; 3] {
        let d1 = self.q.derivative();
        let d2 = d1.derivative();
        [
            self.q.eval_complex(z),
            d1.eval_complex(z),
            d2.eval_complex(z),
        ]
    }

    pub fn q_coeff(&self, n: usize) -> Rational {
        self.q.coeff(n)
    }
}

impl fmt::Display for LinearOde2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w'' + ({}) w = 0", self.q)
    }
}
