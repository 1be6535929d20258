//! Falkner–Skan wedge parameters at which the genericity conditions fail.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaEntry {
    /// `r` for the first family, `j` for the second.
    pub n: i64,
    pub lambda: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaCatalog {
    /// `λ = 1 − 1/r`.
    pub family_ii: Vec<LambdaEntry>,
    /// `λ = 2 + 6j/((j−1)(j−6))`, `j ∉ {1, 2, 3, 6}`.
    pub family_iii: Vec<LambdaEntry>,
}

impl LambdaCatalog {
    /// Every distinct λ of both families, ascending.
    pub fn sorted_lambdas(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .family_ii
            .iter()
            .chain(&self.family_iii)
            .map(|e| e.lambda.clone())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

pub const EXCLUDED_J: [i64; 4] = [1, 2, 3, 6];

/// λ from `r ∈ [r_min, r_max] \ {0}` and `j ∈ [0, j_max] \ {1,2,3,6}`,
/// deduplicated within each family (first occurrence kept).
pub fn fs_lambda_enumerate(r_min: i64, r_max: i64, j_max: i64) -> Result<LambdaCatalog> {
    if r_min > r_max {
        return Err(Error::Range(format!("empty r range [{r_min}, {r_max}]")));
    }
    if r_min == 0 && r_max == 0 {
        return Err(Error::Range("r range contains only 0".into()));
    }
    if j_max < 0 {
        return Err(Error::Range(format!("j_max = {j_max} is negative")));
    }
    let mut family_ii: Vec<LambdaEntry> = Vec::new();
    for r in (r_min..=r_max).filter(|&r| r != 0) {
        let lambda = &Rational::one() - &Rational::new(1, r);
        if family_ii.iter().all(|e| e.lambda != lambda) {
            family_ii.push(LambdaEntry { n: r, lambda });
        }
    }
    let mut family_iii: Vec<LambdaEntry> = Vec::new();
    for j in (0..=j_max).filter(|j| !EXCLUDED_J.contains(j)) {
        let lambda = &Rational::from(2) + &Rational::new(6 * j, (j - 1) * (j - 6));
        if family_iii.iter().all(|e| e.lambda != lambda) {
            family_iii.push(LambdaEntry { n: j, lambda });
        }
    }
    Ok(LambdaCatalog {
        family_ii,
        family_iii,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn small_ranges() {
        let c = fs_lambda_enumerate(1, 3, 6).unwrap();
        let l: Vec<Rational> = c.family_ii.iter().map(|e| e.lambda.clone()).collect();
        assert_eq!(l, vec![rat(0, 1), rat(1, 2), rat(2, 3)]);
        let js: Vec<i64> = c.family_iii.iter().map(|e| e.n).collect();
        assert_eq!(js, vec![0, 4, 5]);
        assert_eq!(c.family_iii[0].lambda, rat(2, 1));
        assert!(fs_lambda_enumerate(0, 0, 5).is_err());
    }
}
