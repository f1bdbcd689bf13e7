//! Seeded sample generators shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lorentzian::arith::{int, Rational};
use lorentzian::combinatorics::{build_named, ExponentVector, MConvexSet, NamedKind};
use lorentzian::dressian::{dressian_to_polynomial, MConvexFunction};
use lorentzian::lorentzian::{grassmann_map, MatrixEntry};
use lorentzian::polynomial::HomogeneousPolynomial;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named(kind: NamedKind) -> MConvexSet {
    build_named(&kind).expect("named fixture builds")
}

pub fn uniform(r: u32, n: usize) -> MConvexSet {
    named(NamedKind::Uniform { r, n })
}

pub fn indicator(n: usize, s: &[usize]) -> ExponentVector {
    let mut v = vec![0; n];
    for &i in s {
        v[i] = 1;
    }
    v
}

/// Integer matrix with entries in `-3..=3`; `zero_prob` biases towards zeros
/// so that some maximal minors vanish.
pub fn int_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize, zero_prob: f64) -> Vec<Vec<i64>> {
    (0..d)
        .map(|_| (0..n).map(|_| if rng.gen_bool(zero_prob) { 0 } else { rng.gen_range(-3..=3) }).collect())
        .collect()
}

pub fn real_entries(m: &[Vec<i64>]) -> Vec<Vec<MatrixEntry>> {
    m.iter().map(|r| r.iter().map(|&x| MatrixEntry::Rational(int(x))).collect()).collect()
}

pub fn complex_entries(re: &[Vec<i64>], im: &[Vec<i64>]) -> Vec<Vec<MatrixEntry>> {
    re.iter()
        .zip(im)
        .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| MatrixEntry::Complex(int(x), int(y))).collect())
        .collect()
}

/// `Σ |det A_S|^2 x^S` for a random real or complex `d × n` matrix of full rank.
pub fn grassmann_sample(rng: &mut ChaCha8Rng, d: usize, n: usize, complex: bool) -> HomogeneousPolynomial<f64> {
    loop {
        let re = int_matrix(rng, d, n, 0.25);
        let a = if complex { complex_entries(&re, &int_matrix(rng, d, n, 0.25)) } else { real_entries(&re) };
        if let Ok(f) = grassmann_map(&a, 2.0) {
            return f.to_f64();
        }
    }
}

/// Min-plus determinant valuation `ν(S) = min_σ Σ_r w[r][σ(r)]` of a random
/// weight matrix; `None` weights are `+∞`. Its finite part is a valuated
/// (transversal) matroid.
pub fn tropical_determinant(rng: &mut ChaCha8Rng, d: usize, n: usize, inf_prob: f64) -> (MConvexSet, MConvexFunction) {
    loop {
        let w: Vec<Vec<Option<i64>>> = (0..d)
            .map(|_| (0..n).map(|_| if rng.gen_bool(inf_prob) { None } else { Some(rng.gen_range(0..6)) }).collect())
            .collect();
        let mut pts = Vec::new();
        let mut vals = Vec::new();
        for s in (0..n).combinations(d) {
            let best = s
                .iter()
                .permutations(d)
                .filter_map(|perm| perm.iter().enumerate().map(|(r, &&c)| w[r][c]).sum::<Option<i64>>())
                .min();
            if let Some(v) = best {
                pts.push(indicator(n, &s));
                vals.push(v);
            }
        }
        if pts.is_empty() {
            continue;
        }
        let Ok(j) = MConvexSet::new(n, d as u32, pts.clone()) else { continue };
        // Reorder values into the canonical point order.
        let mut values = vec![Rational::from_integer(0.into()); j.len()];
        for (p, v) in pts.iter().zip(vals) {
            values[j.index_of(p).expect("point of J")] = int(v);
        }
        return (j, MConvexFunction { values });
    }
}

/// `e^{−s ν}` for a random valuated matroid `ν`.
pub fn dressian_sample(rng: &mut ChaCha8Rng, d: usize, n: usize) -> HomogeneousPolynomial<f64> {
    let (j, nu) = tropical_determinant(rng, d, n, 0.2);
    let s = rng.gen_range(0.1..3.0);
    dressian_to_polynomial(&j, &nu, s).expect("values on J")
}

/// A product of `d` linear forms with positive coefficients (stable, hence Lorentzian).
pub fn product_of_linear_forms(rng: &mut ChaCha8Rng, d: u32, n: usize) -> HomogeneousPolynomial<f64> {
    let mut terms: Vec<(ExponentVector, f64)> = vec![(vec![0; n], 1.0)];
    for _ in 0..d {
        let l: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..2.0)).collect();
        let mut next = Vec::new();
        for (a, c) in &terms {
            for (i, li) in l.iter().enumerate() {
                let mut b = a.clone();
                b[i] += 1;
                next.push((b, c * li));
            }
        }
        terms = next;
    }
    HomogeneousPolynomial::from_monomial_terms(n, d, terms).expect("degree d terms")
}
