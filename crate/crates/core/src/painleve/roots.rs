//! Exact roots of univariate rational polynomials of the small degrees that
//! occur as indicial and balance polynomials.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::exactnum::{ComplexF, Rational};
use crate::series::PolyZ;

/// An exact root: a rational, or `center ± √radicand` with a radicand that
/// is not a rational square (negative radicands give complex conjugates).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FuchsIndex {
    Rational(Rational),
    QuadraticSurd {
        center: Rational,
        radicand: Rational,
        /// `+1` or `-1`.
        sign: i8,
    },
}

impl FuchsIndex {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FuchsIndex::Rational(r) => Some(r),
            FuchsIndex::QuadraticSurd { .. } => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(Rational::to_i64)
    }

    /// The root written as `(s ± √d) / t`; rationals have `d = 0`, `t = 1`.
    pub fn s_d_t(&self) -> (Rational, Rational, Rational) {
        match self {
            FuchsIndex::Rational(r) => (r.clone(), Rational::zero(), Rational::one()),
            FuchsIndex::QuadraticSurd {
                center, radicand, ..
            } => (center.clone(), radicand.clone(), Rational::one()),
        }
    }

    pub fn to_complex(&self) -> ComplexF {
        match self {
            FuchsIndex::Rational(r) => ComplexF::new(r.to_f64(), 0.0),
            FuchsIndex::QuadraticSurd {
                center,
                radicand,
                sign,
            } => {
                let root = ComplexF::new(radicand.to_f64(), 0.0).sqrt();
                ComplexF::new(center.to_f64(), 0.0) + root * f64::from(*sign)
            }
        }
    }
}

impl fmt::Display for FuchsIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuchsIndex::Rational(r) => write!(f, "{r}"),
            FuchsIndex::QuadraticSurd {
                center,
                radicand,
                sign,
            } => {
                let op = if *sign > 0 { '+' } else { '-' };
                if center.is_zero() && *sign > 0 {
                    write!(f, "sqrt({radicand})")
                } else if center.is_zero() {
                    write!(f, "-sqrt({radicand})")
                } else {
                    write!(f, "{center} {op} sqrt({radicand})")
                }
            }
        }
    }
}

impl Serialize for FuchsIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Roots found for a polynomial, with multiplicity, plus any factor of
/// degree ≥ 3 that has no rational root.
#[derive(Clone, Debug, PartialEq)]
pub struct Roots {
    pub roots: Vec<FuchsIndex>,
    /// Discriminant of the last quadratic factor solved, if any.
    pub discriminant: Option<Rational>,
    pub unresolved: Option<PolyZ>,
}

/// Integers tried before falling back to the rational root theorem.
const INTEGER_WINDOW: i64 = 64;
/// Largest constant or leading coefficient whose divisors are enumerated.
const DIVISOR_LIMIT: u64 = 1 << 40;

fn deflate(p: &PolyZ, r: &Rational) -> PolyZ {
    let (q, rem) = p
        .div_rem(&PolyZ::linear_root(r.clone()))
        .expect("linear divisor");
    debug_assert!(rem.is_zero());
    q
}

fn strip_root(p: &mut PolyZ, r: &Rational, out: &mut Vec<FuchsIndex>) {
    while p.degree().is_some_and(|d| d > 0) && p.eval(r).is_zero() {
        *p = deflate(p, r);
        out.push(FuchsIndex::Rational(r.clone()));
    }
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Integer coefficients with the same roots.
fn integer_coeffs(p: &PolyZ) -> Vec<BigInt> {
    let l = Rational::lcm_denominators(p.coeffs());
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * &Rational::from(l.clone())).numer().clone())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn rational_root_theorem(p: &mut PolyZ, out: &mut Vec<FuchsIndex>) {
    let ints = integer_coeffs(p);
    let (Some(lead), Some(constant)) = (ints.last(), ints.first()) else {
        return;
    };
    let (Some(nums), Some(dens)) = (divisors(constant), divisors(lead)) else {
        return;
    };
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let r = Rational::from_bigints(BigInt::from(*n) * sign, BigInt::from(*d))
                    .expect("nonzero divisor");
                strip_root(p, &r, out);
            }
        }
    }
}

fn solve_quadratic(p: &PolyZ, out: &mut Vec<FuchsIndex>) -> Rational {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let disc = &b.square() - &(&Rational::from(4) * &(&a * &c));
    let two_a = &a + &a;
    let center = &(-&b) / &two_a;
    match disc.perfect_square() {
        Some(s) => {
            let h = &s / &two_a;
            out.push(FuchsIndex::Rational(&center - &h));
            out.push(FuchsIndex::Rational(&center + &h));
        }
        None => {
            let radicand = &disc / &two_a.square();
            for sign in [1, -1] {
                out.push(FuchsIndex::QuadraticSurd {
                    center: center.clone(),
                    radicand: radicand.clone(),
                    sign,
                });
            }
        }
    }
    disc
}

/// All roots of a nonzero polynomial that can be written exactly with
/// rationals and square roots of rationals. Rational roots come out sorted.
pub fn exact_roots(p: &PolyZ) -> Roots {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut discriminant = None;
    if rest.degree().unwrap_or(0) == 0 {
        return Roots {
            roots,
            discriminant,
            unresolved: None,
        };
    }
    for n in -INTEGER_WINDOW..=INTEGER_WINDOW {
        if rest.degree().is_some_and(|d| d <= 2) {
            break;
        }
        strip_root(&mut rest, &Rational::from(n), &mut roots);
    }
    if rest.degree().is_some_and(|d| d > 2) {
        rational_root_theorem(&mut rest, &mut roots);
    }
    let mut unresolved = None;
    match rest.degree() {
        Some(1) => roots.push(FuchsIndex::Rational(
            &(-&rest.coeff(0)) / &rest.coeff(1),
        )),
        Some(2) => discriminant = Some(solve_quadratic(&rest, &mut roots)),
        Some(0) | None => {}
        Some(_) => unresolved = Some(rest),
    }
    roots.sort();
    Roots {
        roots,
        discriminant,
        unresolved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn poly(c: &[i64]) -> PolyZ {
        PolyZ::new(c.iter().map(|&n| Rational::from(n)).collect())
    }

    fn rats(v: &[i64]) -> Vec<FuchsIndex> {
        v.iter().map(|&n| FuchsIndex::Rational(n.into())).collect()
    }

    #[test]
    fn cubic_with_integer_roots() {
        // (j + 1)(j − 2)(j − 3)
        let r = exact_roots(&poly(&[6, 1, -4, 1]));
        assert_eq!(r.roots, rats(&[-1, 2, 3]));
        assert!(r.unresolved.is_none());
    }

    #[test]
    fn repeated_root_kept_twice() {
        // (j + 1)(j − 2)²
        let r = exact_roots(&poly(&[4, 0, -3, 1]));
        assert_eq!(r.roots, rats(&[-1, 2, 2]));
    }

    #[test]
    fn rational_roots_outside_integer_window() {
        // (3j − 200)(2j + 1)(j − 1000)
        let p = &(&poly(&[-200, 3]) * &poly(&[1, 2])) * &poly(&[-1000, 1]);
        let r = exact_roots(&p);
        assert_eq!(
            r.roots,
            vec![
                FuchsIndex::Rational(rat(-1, 2)),
                FuchsIndex::Rational(rat(200, 3)),
                FuchsIndex::Rational(1000.into())
            ]
        );
    }

    #[test]
    fn irreducible_quadratic_gives_conjugate_surds() {
        // j² − 2
        let r = exact_roots(&poly(&[-2, 0, 1]));
        assert_eq!(r.discriminant, Some(8.into()));
        let z: Vec<f64> = r.roots.iter().map(|x| x.to_complex().re).collect();
        assert!(z.iter().any(|v| (v - 2f64.sqrt()).abs() < 1e-15));
        assert!(z.iter().any(|v| (v + 2f64.sqrt()).abs() < 1e-15));
        assert!(r.roots.iter().all(|x| x.as_rational().is_none()));
    }

    #[test]
    fn irreducible_cubic_is_unresolved() {
        let r = exact_roots(&poly(&[-2, 0, 0, 1]));
        assert!(r.roots.is_empty());
        assert_eq!(r.unresolved.unwrap().degree(), Some(3));
    }
}
