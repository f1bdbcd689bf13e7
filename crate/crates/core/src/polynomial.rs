//! Homogeneous polynomials stored by normalized coefficients:
//! `f = Σ c_α x^α / α!`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{QSqrt5, Rational, Scalar};
use crate::combinatorics::{ExponentVector, MConvexSet};
use crate::error::{input_err, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPolynomial<S> {
    n: usize,
    d: u32,
    terms: BTreeMap<ExponentVector, S>,
}

/// `α!` as an integer.
pub fn factorial_of(alpha: &[u32]) -> BigInt {
    alpha.iter().fold(BigInt::from(1), |acc, &a| (1..=a).fold(acc, |x, k| x * BigInt::from(k)))
}

pub fn factorial_f64(alpha: &[u32]) -> f64 {
    alpha.iter().map(|&a| (1..=a).map(f64::from).product::<f64>()).product()
}

impl<S: Scalar> HomogeneousPolynomial<S> {
    pub fn zero(n: usize, d: u32) -> Self {
        HomogeneousPolynomial { n, d, terms: BTreeMap::new() }
    }

    /// Build from normalized coefficients. Repeated exponents are summed and
    /// zero coefficients dropped.
    pub fn from_terms(n: usize, d: u32, terms: impl IntoIterator<Item = (ExponentVector, S)>) -> Result<Self> {
        let mut map: BTreeMap<ExponentVector, S> = BTreeMap::new();
        for (alpha, c) in terms {
            if alpha.len() != n {
                return Err(input_err!("exponent {alpha:?} has length {} but n = {n}", alpha.len()));
            }
            if alpha.iter().sum::<u32>() != d {
                return Err(input_err!("exponent {alpha:?} does not have degree {d}"));
            }
            let e = map.entry(alpha).or_insert_with(S::zero);
            *e = e.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomogeneousPolynomial { n, d, terms: map })
    }

    /// Build from ordinary monomial coefficients (`f = Σ a_α x^α`), so `c_α = α!·a_α`.
    pub fn from_monomial_terms(
        n: usize,
        d: u32,
        terms: impl IntoIterator<Item = (ExponentVector, S)>,
    ) -> Result<Self> {
        let converted: Vec<(ExponentVector, S)> = terms
            .into_iter()
            .map(|(a, c)| {
                let f = factorial_scalar::<S>(&a);
                (a, c * f)
            })
            .collect();
        Self::from_terms(n, d, converted)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &[u32]) -> S {
        self.terms.get(alpha).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of `x^α` in the ordinary monomial basis.
    pub fn monomial_coeff(&self, alpha: &[u32]) -> S {
        self.coeff(alpha) / factorial_scalar::<S>(alpha)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// The support as a point set (the exchange property is not checked).
    pub fn support_set(&self) -> Result<MConvexSet> {
        MConvexSet::new_unchecked(self.n, self.d, self.support())
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&ExponentVector, &S) -> T) -> HomogeneousPolynomial<T> {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.clone(), f(a, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        HomogeneousPolynomial { n: self.n, d: self.d, terms }
    }

    pub fn to_f64(&self) -> HomogeneousPolynomial<f64> {
        self.map(|_, c| c.to_f64())
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative_value())
    }

    /// Coefficients aligned with the points of `j`; zero off the support.
    pub fn coefficients_on(&self, j: &MConvexSet) -> Vec<S> {
        j.points().iter().map(|p| self.coeff(p)).collect()
    }

    /// Evaluate at a point.
    pub fn eval(&self, x: &[S]) -> S {
        let mut acc = S::zero();
        for (a, c) in &self.terms {
            let mut m = c.clone() / factorial_scalar::<S>(a);
            for (xi, &e) in x.iter().zip(a) {
                m = m * xi.powu(e);
            }
            acc = acc + m;
        }
        acc
    }
}

pub fn factorial_scalar<S: Scalar>(alpha: &[u32]) -> S {
    alpha
        .iter()
        .fold(S::one(), |acc, &a| (1..=a).fold(acc, |x, k| x * S::from_i64(i64::from(k))))
}

/// A polynomial over one of the supported coefficient fields.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPolynomial {
    Rational(HomogeneousPolynomial<Rational>),
    Golden(HomogeneousPolynomial<QSqrt5>),
    Float(HomogeneousPolynomial<f64>),
}

impl AnyPolynomial {
    pub fn n(&self) -> usize {
        match self {
            AnyPolynomial::Rational(p) => p.n(),
            AnyPolynomial::Golden(p) => p.n(),
            AnyPolynomial::Float(p) => p.n(),
        }
    }

    pub fn d(&self) -> u32 {
        match self {
            AnyPolynomial::Rational(p) => p.d(),
            AnyPolynomial::Golden(p) => p.d(),
            AnyPolynomial::Float(p) => p.d(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, AnyPolynomial::Float(_))
    }

    pub fn to_f64(&self) -> HomogeneousPolynomial<f64> {
        match self {
            AnyPolynomial::Rational(p) => p.to_f64(),
            AnyPolynomial::Golden(p) => p.to_f64(),
            AnyPolynomial::Float(p) => p.clone(),
        }
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        match self {
            AnyPolynomial::Rational(p) => p.support(),
            AnyPolynomial::Golden(p) => p.support(),
            AnyPolynomial::Float(p) => p.support(),
        }
    }
}

impl From<HomogeneousPolynomial<Rational>> for AnyPolynomial {
    fn from(p: HomogeneousPolynomial<Rational>) -> Self {
        AnyPolynomial::Rational(p)
    }
}

impl From<HomogeneousPolynomial<QSqrt5>> for AnyPolynomial {
    fn from(p: HomogeneousPolynomial<QSqrt5>) -> Self {
        AnyPolynomial::Golden(p)
    }
}

impl From<HomogeneousPolynomial<f64>> for AnyPolynomial {
    fn from(p: HomogeneousPolynomial<f64>) -> Self {
        AnyPolynomial::Float(p)
    }
}

/// Shorthand for exact polynomials in tests and examples: `(exponent, p/q)` pairs.
pub fn rational_poly(n: usize, d: u32, terms: &[(&[u32], i64, i64)]) -> HomogeneousPolynomial<Rational> {
    HomogeneousPolynomial::from_terms(
        n,
        d,
        terms.iter().map(|(a, p, q)| (a.to_vec(), crate::arith::rat(*p, *q))),
    )
    .expect("well-formed literal polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn monomial_conversion() {
        // x^2 + x y + y^2 in monomial form has c = (2, 1, 2).
        let p = HomogeneousPolynomial::from_monomial_terms(
            2,
            2,
            vec![(vec![2, 0], int(1)), (vec![1, 1], int(1)), (vec![0, 2], int(1))],
        )
        .unwrap();
        assert_eq!(p.coeff(&[2, 0]), int(2));
        assert_eq!(p.coeff(&[1, 1]), int(1));
        assert_eq!(p.monomial_coeff(&[0, 2]), int(1));
        assert_eq!(p.eval(&[int(1), int(1)]), int(3));
    }

    #[test]
    fn zero_terms_are_dropped_and_degrees_checked() {
        let p = HomogeneousPolynomial::from_terms(2, 1, vec![(vec![1, 0], int(1)), (vec![1, 0], int(-1))]).unwrap();
        assert!(p.is_zero());
        assert!(HomogeneousPolynomial::<Rational>::from_terms(2, 2, vec![(vec![1, 0], int(1))]).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial_of(&[3, 2, 0]), BigInt::from(12));
        assert_eq!(factorial_f64(&[3, 2, 0]), 12.0);
        assert_eq!(factorial_scalar::<Rational>(&[4]), int(24));
    }
}
