//! Indicial polynomial `P(u₀; j)` and Fuchs indices.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::ode::{GeneralOde, OdeParams};
use crate::series::PolyZ;

use super::leading::{falling, LeadingBehavior};
use super::roots::{exact_roots, FuchsIndex};

/// `P(u₀; j)` as a polynomial in `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicialPolynomial {
    pub poly: PolyZ,
}

impl IndicialPolynomial {
    pub fn eval(&self, j: i64) -> Rational {
        self.poly.eval(&Rational::from(j))
    }

    pub fn fuchs(&self) -> FuchsReport {
        FuchsReport::from_polynomial(&self.poly)
    }
}

impl Serialize for IndicialPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.poly.serialize(serializer)
    }
}

/// `ff(j + p, k)` as a polynomial in `j`.
fn falling_in_j(p: i64, k: usize) -> PolyZ {
    (0..k as i64).fold(PolyZ::constant(Rational::one()), |acc, t| {
        &acc * &PolyZ::new(vec![Rational::from(p - t), Rational::one()])
    })
}

/// Linearization of the dominant terms at `u₀ χ^p` against `χ^{j+p}`:
/// the coefficient of `χ^{j+q}` in `Ê'(u₀χ^p)[χ^{j+p}]`.
pub fn indicial_polynomial(lead: &LeadingBehavior) -> IndicialPolynomial {
    let p = lead.p;
    let pr = Rational::from(p);
    let mut total = PolyZ::zero();
    for t in lead.dominant_terms.terms() {
        let powers = t.index.powers();
        let u0_power = lead.u0.pow(t.index.degree() - 1);
        for (k, &ik) in powers.iter().enumerate() {
            if ik == 0 {
                continue;
            }
            let mut others = falling(&pr, k).pow(ik - 1);
            for (m, &im) in powers.iter().enumerate() {
                if m != k {
                    others *= &falling(&pr, m).pow(im);
                }
            }
            let scalar = &(&t.coeff * &u0_power) * &(&others * &Rational::from(ik as i64));
            total = &total + &falling_in_j(p, k).scale(&scalar);
        }
    }
    IndicialPolynomial { poly: total }
}

/// Fuchs indices of one balance.
#[derive(Clone, Debug, PartialEq)]
pub struct FuchsReport {
    /// Sorted; repeated roots appear repeatedly.
    pub indices: Vec<FuchsIndex>,
    pub discriminant: Option<Rational>,
    pub all_distinct_integers: bool,
    /// Factor of the indicial polynomial whose roots could not be found.
    pub unresolved: Option<PolyZ>,
}

impl FuchsReport {
    pub fn from_polynomial(poly: &PolyZ) -> Self {
        if poly.is_zero() {
            return FuchsReport {
                indices: Vec::new(),
                discriminant: None,
                all_distinct_integers: false,
                unresolved: Some(poly.clone()),
            };
        }
        let roots = exact_roots(poly);
        Self::from_indices(roots.roots, roots.discriminant, roots.unresolved)
    }

    fn from_indices(
        mut indices: Vec<FuchsIndex>,
        discriminant: Option<Rational>,
        unresolved: Option<PolyZ>,
    ) -> Self {
        indices.sort();
        let ints: Vec<i64> = indices.iter().filter_map(FuchsIndex::as_integer).collect();
        let distinct = indices.windows(2).all(|w| w[0] != w[1]);
        FuchsReport {
            all_distinct_integers: unresolved.is_none()
                && ints.len() == indices.len()
                && distinct,
            indices,
            discriminant,
            unresolved,
        }
    }

    /// Positive integer indices in increasing order, without repeats.
    pub fn positive_integers(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .indices
            .iter()
            .filter_map(FuchsIndex::as_integer)
            .filter(|&j| j > 0)
            .collect();
        v.dedup();
        v
    }

    pub fn repeated(&self) -> Vec<FuchsIndex> {
        let mut v: Vec<FuchsIndex> = self
            .indices
            .windows(2)
            .filter(|w| w[0] == w[1])
            .map(|w| w[0].clone())
            .collect();
        v.dedup();
        v
    }
}

impl Serialize for FuchsReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FuchsReport", 4)?;
        st.serialize_field("indices", &self.indices)?;
        st.serialize_field("discriminant", &self.discriminant)?;
        st.serialize_field("all_distinct_integers", &self.all_distinct_integers)?;
        st.serialize_field("unresolved", &self.unresolved)?;
        st.end()
    }
}

/// Closed-form indices of the simple-pole balance: `−1` and
/// `j₂,₃ = (7A + 8B ± √(25A² + 16AB − 32B²)) / (2(A + 2B))`.
pub fn fuchs_indices(params: &OdeParams) -> Result<FuchsReport> {
    let (a, b) = (&params.a, &params.b);
    let denom = params.pole_sum();
    if denom.is_zero() {
        return Err(Error::DegenerateBalance);
    }
    let disc = &(&(&Rational::from(25) * &a.square()) + &(&Rational::from(16) * &(a * b)))
        - &(&Rational::from(32) * &b.square());
    let s = &(&Rational::from(7) * a) + &(&Rational::from(8) * b);
    let t = &denom * &Rational::from(2);
    let center = &s / &t;
    let mut indices = vec![FuchsIndex::Rational(Rational::from(-1))];
    match disc.perfect_square() {
        Some(root) => {
            let h = &root / &t;
            indices.push(FuchsIndex::Rational(&center + &h));
            indices.push(FuchsIndex::Rational(&center - &h));
        }
        None => {
            let radicand = &disc / &t.square();
            for sign in [1, -1] {
                indices.push(FuchsIndex::QuadraticSurd {
                    center: center.clone(),
                    radicand: radicand.clone(),
                    sign,
                });
            }
        }
    }
    Ok(FuchsReport::from_indices(indices, Some(disc), None))
}

/// The indicial polynomial of the simple-pole balance of the equation,
/// computed by the general engine.
pub fn simple_pole_indicial(params: &OdeParams) -> Result<IndicialPolynomial> {
    let denom = params.pole_sum();
    if denom.is_zero() {
        return Err(Error::DegenerateBalance);
    }
    let ode: GeneralOde = crate::ode::to_general_ode(params);
    let u0 = &Rational::from(-6) / &denom;
    let lead = super::leading::leading_behavior_at(&ode, -1, u0);
    Ok(indicial_polynomial(&lead))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ints(r: &FuchsReport) -> Vec<i64> {
        r.indices.iter().map(|x| x.as_integer().unwrap()).collect()
    }

    #[test]
    fn closed_form_examples() {
        let r = fuchs_indices(&OdeParams::ab(rat(1, 1), rat(1, 1))).unwrap();
        assert_eq!(ints(&r), vec![-1, 2, 3]);
        assert!(r.all_distinct_integers);
        let r = fuchs_indices(&OdeParams::ab(rat(1, 1), rat(0, 1))).unwrap();
        assert_eq!(ints(&r), vec![-1, 1, 6]);
        let r = fuchs_indices(&OdeParams::ab(rat(-2, 1), rat(-2, 1))).unwrap();
        assert_eq!(ints(&r), vec![-1, 2, 3]);
        assert_eq!(
            fuchs_indices(&OdeParams::ab(rat(2, 1), rat(-1, 1))),
            Err(Error::DegenerateBalance)
        );
    }

    #[test]
    fn engine_matches_closed_form() {
        // Oracle: (j + 1)(j² − ((7A+8B)/(A+2B)) j + 6) up to a constant factor.
        for (a, b) in [(1, 1), (1, 0), (-2, -2), (1, 2), (3, -2), (5, 7), (-4, 9)] {
            let params = OdeParams::ab(rat(a, 1), rat(b, 1));
            let ind = simple_pole_indicial(&params).unwrap();
            let mid = rat(7 * a + 8 * b, a + 2 * b);
            let oracle = &PolyZ::new(vec![rat(1, 1), rat(1, 1)])
                * &PolyZ::new(vec![rat(6, 1), -mid, rat(1, 1)]);
            let lead = ind.poly.leading().unwrap().clone();
            assert_eq!(ind.poly, oracle.scale(&lead), "A={a} B={b}");
            assert_eq!(ind.fuchs().indices, fuchs_indices(&params).unwrap().indices);
        }
    }

    #[test]
    fn double_index() {
        // j₂ = −1 forces j₃ = −6, so (7A+8B)/(A+2B) = −7, i.e. B/A = −7/11.
        let r = fuchs_indices(&OdeParams::ab(rat(11, 1), rat(-7, 1))).unwrap();
        assert_eq!(ints(&r), vec![-6, -1, -1]);
        assert_eq!(r.repeated(), vec![FuchsIndex::Rational(rat(-1, 1))]);
        assert!(!r.all_distinct_integers);
    }
}
