//! Laurent expansions of ℘ and ζ at the origin.

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::series::LaurentSeries;

/// `℘(z) = z⁻² + Σ_{k=2}^{K} c_k z^{2k−2}`,
/// `ζ(z) = z⁻¹ − Σ_{k=2}^{K} c_k z^{2k−1}/(2k−1)`, for
/// `℘'² = 4℘³ − g₂℘ − g₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassSeries {
    pub g2: Rational,
    pub g3: Rational,
    /// `c_2 … c_K`.
    pub pe_coefficients: Vec<Rational>,
    pub truncation: usize,
}

pub fn weierstrass_series(g2: &Rational, g3: &Rational, k: usize) -> Result<WeierstrassSeries> {
    if k < 4 {
        return Err(Error::Precondition(format!("truncation K = {k} must be at least 4")));
    }
    // c[i] holds c_{i+2}.
    let mut c: Vec<Rational> = vec![g2 / &Rational::from(20), g3 / &Rational::from(28)];
    for n in 4..=k {
        let sum: Rational = (2..=n - 2).map(|m| &c[m - 2] * &c[n - m - 2]).sum();
        let factor = Rational::new(3, ((2 * n + 1) * (n - 3)) as i64);
        c.push(&factor * &sum);
    }
    let s = WeierstrassSeries {
        g2: g2.clone(),
        g3: g3.clone(),
        pe_coefficients: c,
        truncation: k,
    };
    debug_assert!(s.ode_residual().is_zero());
    Ok(s)
}

impl WeierstrassSeries {
    /// `c_k` for `k ≥ 2` (zero beyond the truncation is not implied).
    pub fn c(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(2).and_then(|i| self.pe_coefficients.get(i))
    }

    /// ℘ known below `z^{2K}`.
    pub fn pe(&self) -> LaurentSeries {
        let k = self.truncation as i64;
        let mut coeffs = vec![Rational::zero(); (2 * k + 2) as usize];
        coeffs[0] = Rational::one();
        for (i, ck) in self.pe_coefficients.iter().enumerate() {
            let n = i as i64 + 2;
            coeffs[(2 * n) as usize] = ck.clone();
        }
        LaurentSeries::new(-2, coeffs, 2 * k)
    }

    /// ζ known below `z^{2K+1}`.
    pub fn zeta(&self) -> LaurentSeries {
        let k = self.truncation as i64;
        let mut coeffs = vec![Rational::zero(); (2 * k + 2) as usize];
        coeffs[0] = Rational::one();
        for (i, ck) in self.pe_coefficients.iter().enumerate() {
            let n = i as i64 + 2;
            coeffs[(2 * n) as usize] = -&(ck / &Rational::from(2 * n - 1));
        }
        LaurentSeries::new(-1, coeffs, 2 * k + 1)
    }

    /// `℘'² − 4℘³ + g₂℘ + g₃` over its known range.
    pub fn ode_residual(&self) -> LaurentSeries {
        let p = self.pe();
        let dp = p.diff(1);
        let g3 = LaurentSeries::constant(self.g3.clone(), crate::ode::EXACT_PRECISION);
        dp.mul(&dp)
            .sub(&p.pow(3).scale(&Rational::from(4)))
            .add(&p.scale(&self.g2))
            .add(&g3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn degenerate_lattice() {
        let s = weierstrass_series(&Rational::zero(), &Rational::zero(), 8).unwrap();
        assert!(s.pe_coefficients.iter().all(Rational::is_zero));
        assert_eq!(s.zeta().coeffs(), &[rat(1, 1)]);
    }

    #[test]
    fn hand_recurrence() {
        let s = weierstrass_series(&rat(20, 1), &rat(28, 1), 6).unwrap();
        assert_eq!(s.c(2), Some(&rat(1, 1)));
        assert_eq!(s.c(3), Some(&rat(1, 1)));
        assert_eq!(s.c(4), Some(&rat(1, 3)));
        assert!(s.ode_residual().is_zero());
        assert!(s.ode_residual().precision() >= 2 * 6 - 4);
    }

    #[test]
    fn zeta_derivative_is_minus_pe() {
        let s = weierstrass_series(&rat(3, 7), &rat(-5, 2), 12).unwrap();
        let sum = s.zeta().diff(1).add(&s.pe());
        assert!(sum.is_zero());
        assert_eq!(sum.precision(), 2 * 12);
    }

    #[test]
    fn small_truncation_rejected() {
        assert!(weierstrass_series(&rat(1, 1), &rat(1, 1), 3).is_err());
    }
}
