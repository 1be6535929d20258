//! Generic/non-generic decision for `(A, B)` and the special regimes.

use serde::Serialize;

use crate::exactnum::Rational;
use crate::ode::OdeParams;

/// The three genericity conditions on `(A, B)`:
/// (i) `AB(A+B) ≠ 0`; (ii) `B/(A+B)` is not a nonzero integer;
/// (iii) neither `(7A+8B ± √(25A²+16AB−32B²)) / (2(A+2B))` is a
/// nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericVerdict {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub generic: bool,
    /// `A + B = 0`: the ratio in (ii) is undefined; (ii) is recorded as true
    /// and (i) already fails.
    pub cond_ii_undefined: bool,
    /// `A + 2B = 0`: the expression in (iii) is undefined; (iii) is recorded
    /// as true and the verdict rests on (i) and (ii).
    pub cond_iii_undefined: bool,
}

pub fn generic_check(a: &Rational, b: &Rational) -> GenericVerdict {
    let sum = a + b;
    let cond_i = !(&(a * b) * &sum).is_zero();

    let cond_ii_undefined = sum.is_zero();
    let cond_ii = if cond_ii_undefined {
        true
    } else {
        let ratio = b / &sum;
        !(ratio.is_integer() && !ratio.is_zero())
    };

    let pole_sum = &sum + b;
    let cond_iii_undefined = pole_sum.is_zero();
    let cond_iii = if cond_iii_undefined {
        true
    } else {
        let disc = &(&(&Rational::from(25) * &a.square()) + &(&Rational::from(16) * &(a * b)))
            - &(&Rational::from(32) * &b.square());
        match disc.perfect_square() {
            None => true,
            Some(root) => {
                let s = &(&Rational::from(7) * a) + &(&Rational::from(8) * b);
                let t = &pole_sum * &Rational::from(2);
                let nonneg_int = |x: Rational| x.is_integer() && !x.is_negative();
                !(nonneg_int(&(&s + &root) / &t) || nonneg_int(&(&s - &root) / &t))
            }
        }
    };

    GenericVerdict {
        cond_i,
        cond_ii,
        cond_iii,
        generic: cond_i && cond_ii && cond_iii,
        cond_ii_undefined,
        cond_iii_undefined,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    Generic,
    /// `A = B = 0`.
    Linear,
    /// `A = 0`, `B ≠ 0`.
    EremenkoClassW,
    /// `B = 0`, `A ≠ 0`, `α = γ = 0`.
    WeierstrassB0,
    /// `B = A ≠ 0`, `β = γ = 0`.
    ChazyII,
    /// `B = −2A/3 ≠ 0`, `β = γ = δ = 0`.
    ChazyIII,
    NonGenericOther,
}

/// First matching tag in the order Linear, EremenkoClassW, WeierstrassB0,
/// ChazyII, ChazyIII, Generic, NonGenericOther.
pub fn classify(params: &OdeParams) -> CaseTag {
    let (a, b) = (&params.a, &params.b);
    if a.is_zero() && b.is_zero() {
        return CaseTag::Linear;
    }
    if a.is_zero() {
        return CaseTag::EremenkoClassW;
    }
    if b.is_zero() {
        return if params.alpha.is_zero() && params.gamma.is_zero() {
            CaseTag::WeierstrassB0
        } else {
            CaseTag::NonGenericOther
        };
    }
    if a == b && params.beta.is_zero() && params.gamma.is_zero() {
        return CaseTag::ChazyII;
    }
    let chazy3_b = &(a * &Rational::from(-2)) / &Rational::from(3);
    if *b == chazy3_b && params.beta.is_zero() && params.gamma.is_zero() && params.delta.is_zero() {
        return CaseTag::ChazyIII;
    }
    if generic_check(a, b).generic {
        CaseTag::Generic
    } else {
        CaseTag::NonGenericOther
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn module_examples() {
        let v = generic_check(&rat(1, 1), &rat(2, 1));
        assert!(v.generic);
        let v = generic_check(&rat(1, 1), &rat(1, 1));
        assert!(v.cond_i && v.cond_ii && !v.cond_iii);
        let v = generic_check(&rat(1, 1), &rat(-1, 1));
        assert!(!v.cond_i && !v.generic && v.cond_ii_undefined);
        let v = generic_check(&rat(3, 1), &rat(-2, 1));
        assert!(v.cond_i && !v.cond_ii);
    }

    #[test]
    fn undefined_third_condition_is_flagged() {
        let v = generic_check(&rat(2, 1), &rat(-1, 1));
        assert!(v.cond_iii_undefined && v.cond_iii);
        // B/(A+B) = −1 whenever A + 2B = 0, so (ii) fails regardless.
        assert!(!v.cond_ii && !v.generic);
    }

    #[test]
    fn tags() {
        assert_eq!(classify(&OdeParams::from_i64(0, 0, 1, 1, 1, 1)), CaseTag::Linear);
        assert_eq!(classify(&OdeParams::from_i64(0, 3, 0, 0, 0, 0)), CaseTag::EremenkoClassW);
        assert_eq!(classify(&OdeParams::from_i64(1, 0, 0, 4, 0, 2)), CaseTag::WeierstrassB0);
        assert_eq!(classify(&OdeParams::from_i64(1, 0, 1, 4, 0, 2)), CaseTag::NonGenericOther);
        assert_eq!(classify(&OdeParams::from_i64(2, 2, 0, 0, 0, 7)), CaseTag::ChazyII);
        assert_eq!(classify(&OdeParams::from_i64(3, -2, 0, 0, 0, 0)), CaseTag::ChazyIII);
        assert_eq!(classify(&OdeParams::from_i64(3, -2, 0, 0, 0, 1)), CaseTag::NonGenericOther);
        assert_eq!(classify(&OdeParams::from_i64(1, 2, 0, 5, 0, 0)), CaseTag::Generic);
    }
}
