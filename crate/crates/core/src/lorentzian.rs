//! Lorentzian membership, inertia, the coefficient maps `R_p` and `N_t`, the
//! degree-two simplification, and determinantal constructions.
//!
//! A polynomial with nonnegative coefficients is Lorentzian iff its support is
//! M-convex and for every `α ∈ Δ^{d-2}_n` the Hessian of `∂^α f`, whose entries
//! are `c_{α+e_i+e_j}`, has at most one positive eigenvalue.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{QSqrt5, Rational, Scalar};
use crate::combinatorics::{betsy_ross_matrix, exchange_violation, simplex_points, ExchangeWitness, ExponentVector};
use crate::error::{input_err, Error, Result};
use crate::polynomial::{factorial_f64, factorial_scalar, AnyPolynomial, HomogeneousPolynomial};

/// Default relative eigenvalue threshold for float inputs.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.positives + self.negatives
    }
}

/// Inertia together with the float diagnostics (absent for exact input).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InertiaReport {
    pub inertia: Inertia,
    /// Second largest eigenvalue divided by the spectral norm.
    pub margin: Option<f64>,
    /// Some eigenvalue was within the threshold and counted as zero.
    pub marginal: bool,
}

fn check_symmetric<S: Scalar>(m: &[Vec<S>]) -> Result<()> {
    let k = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != k {
            return Err(input_err!("matrix is not square"));
        }
        for j in 0..i {
            let sym = if S::EXACT {
                m[i][j] == m[j][i]
            } else {
                let (a, b) = (m[i][j].to_f64(), m[j][i].to_f64());
                (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
            };
            if !sym {
                return Err(input_err!("matrix is not symmetric at ({i},{j})"));
            }
        }
    }
    Ok(())
}

/// Sylvester inertia by symmetric congruence. Exact for exact scalars.
pub fn congruence_inertia<S: Scalar>(m: &[Vec<S>]) -> Inertia {
    let mut a: Vec<Vec<S>> = m.to_vec();
    let mut active: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg) = (0, 0);
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .copied()
                    .array_combinations()
                    .find(|&[i, j]| !a[i][j].is_zero());
                let Some([i, j]) = pair else { break };
                // x_i -> x_i + x_j makes the (i,i) entry 2 a_ij.
                for &k in &active {
                    let v = a[i][k].clone() + a[j][k].clone();
                    a[i][k] = v;
                }
                for &k in &active {
                    let v = a[k][i].clone() + a[k][j].clone();
                    a[k][i] = v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.is_positive_value() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&x| x != p);
        for &r in &active {
            if a[r][p].is_zero() {
                continue;
            }
            let f = a[r][p].clone() / d.clone();
            for &c in &active {
                let v = a[r][c].clone() - f.clone() * a[p][c].clone();
                a[r][c] = v;
            }
        }
    }
    let zeros = active.len();
    Inertia { positives: pos, negatives: neg, zeros }
}

/// Eigenvalue sign counts with a relative threshold `tol · ‖M‖`.
pub fn float_inertia(m: &[Vec<f64>], tol: f64) -> InertiaReport {
    let k = m.len();
    if k == 0 {
        return InertiaReport { inertia: Inertia { positives: 0, negatives: 0, zeros: 0 }, margin: None, marginal: false };
    }
    let mat = DMatrix::from_fn(k, k, |i, j| m[i][j]);
    let mut ev: Vec<f64> = SymmetricEigen::new(mat).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    let norm = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let thr = tol * norm;
    let positives = ev.iter().filter(|&&x| x > thr).count();
    let negatives = ev.iter().filter(|&&x| x < -thr).count();
    let zeros = k - positives - negatives;
    let marginal = ev.iter().any(|&x| x != 0.0 && x.abs() <= thr);
    let margin = if norm > 0.0 && k >= 2 { Some(ev[1] / norm) } else { None };
    InertiaReport { inertia: Inertia { positives, negatives, zeros }, margin, marginal }
}

pub fn hessian_inertia<S: Scalar>(m: &[Vec<S>]) -> Result<InertiaReport> {
    hessian_inertia_tol(m, DEFAULT_EIGEN_TOL)
}

pub fn hessian_inertia_tol<S: Scalar>(m: &[Vec<S>], tol: f64) -> Result<InertiaReport> {
    check_symmetric(m)?;
    if S::EXACT {
        Ok(InertiaReport { inertia: congruence_inertia(m), margin: None, marginal: false })
    } else {
        let f: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|x| x.to_f64()).collect()).collect();
        Ok(float_inertia(&f, tol))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Degree at most one: nonnegative and nonzero suffices.
    LowDegree,
    /// Every Hessian has at most one positive eigenvalue.
    AllHessians { checked: usize },
    SupportNotMConvex { witness: ExchangeWitness },
    HessianFailure { alpha: ExponentVector, inertia: Inertia },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LorentzianReport {
    pub lorentzian: bool,
    pub certificate: Certificate,
    /// Smallest second-eigenvalue margin seen (float input only).
    pub min_margin: Option<f64>,
    /// Some Hessian decision fell within the float threshold.
    pub marginal: bool,
}

fn check_input<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Result<()> {
    if f.is_zero() {
        return Err(input_err!("the zero polynomial"));
    }
    if f.has_negative_coefficient() {
        return Err(input_err!("negative coefficient"));
    }
    if !S::EXACT && f.terms().values().any(|c| !c.to_f64().is_finite()) {
        return Err(input_err!("non-finite coefficient"));
    }
    Ok(())
}

/// The `α ∈ Δ^{d-2}_n` for which `∂^α f ≠ 0`, sorted.
pub fn hessian_shifts<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Vec<ExponentVector> {
    let n = f.n();
    let mut out = BTreeSet::new();
    for beta in f.terms().keys() {
        for i in 0..n {
            for j in i..n {
                let mut a = beta.clone();
                if a[i] == 0 {
                    continue;
                }
                a[i] -= 1;
                if a[j] == 0 {
                    continue;
                }
                a[j] -= 1;
                out.insert(a);
            }
        }
    }
    out.into_iter().collect()
}

/// Hessian of `∂^α f`.
pub fn hessian_at<S: Scalar>(f: &HomogeneousPolynomial<S>, alpha: &[u32]) -> Vec<Vec<S>> {
    let n = f.n();
    let mut h = vec![vec![S::zero(); n]; n];
    let mut b = alpha.to_vec();
    for i in 0..n {
        for j in i..n {
            b[i] += 1;
            b[j] += 1;
            let c = f.coeff(&b);
            b[i] -= 1;
            b[j] -= 1;
            h[i][j] = c.clone();
            h[j][i] = c;
        }
    }
    h
}

pub fn is_lorentzian<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Result<LorentzianReport> {
    is_lorentzian_tol(f, DEFAULT_EIGEN_TOL)
}

pub fn is_lorentzian_tol<S: Scalar>(f: &HomogeneousPolynomial<S>, tol: f64) -> Result<LorentzianReport> {
    check_input(f)?;
    if f.d() <= 1 {
        return Ok(LorentzianReport { lorentzian: true, certificate: Certificate::LowDegree, min_margin: None, marginal: false });
    }
    if let Some(w) = exchange_violation(&f.support(), f.n(), f.d())? {
        return Ok(LorentzianReport {
            lorentzian: false,
            certificate: Certificate::SupportNotMConvex { witness: w },
            min_margin: None,
            marginal: false,
        });
    }
    let shifts = hessian_shifts(f);
    let mut min_margin: Option<f64> = None;
    let mut marginal = false;
    for alpha in &shifts {
        let rep = hessian_inertia_tol(&hessian_at(f, alpha), tol)?;
        if let Some(m) = rep.margin {
            min_margin = Some(min_margin.map_or(m, |x: f64| x.max(m)));
        }
        marginal |= rep.marginal;
        if rep.inertia.positives > 1 {
            return Ok(LorentzianReport {
                lorentzian: false,
                certificate: Certificate::HessianFailure { alpha: alpha.clone(), inertia: rep.inertia },
                min_margin,
                marginal,
            });
        }
    }
    Ok(LorentzianReport { lorentzian: true, certificate: Certificate::AllHessians { checked: shifts.len() }, min_margin, marginal })
}

pub fn is_lorentzian_any(f: &AnyPolynomial, tol: f64) -> Result<LorentzianReport> {
    match f {
        AnyPolynomial::Rational(p) => is_lorentzian_tol(p, tol),
        AnyPolynomial::Golden(p) => is_lorentzian_tol(p, tol),
        AnyPolynomial::Float(p) => is_lorentzian_tol(p, tol),
    }
}

/// Full support `Δ^d_n`, positive coefficients, and every Hessian of
/// signature `(1, n-1, 0)`.
pub fn is_strictly_lorentzian<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Result<bool> {
    check_input(f)?;
    let n = f.n();
    let full = simplex_points(n, f.d());
    if f.len() != full.len() || full.iter().any(|a| !f.coeff(a).is_positive_value()) {
        return Ok(false);
    }
    if f.d() <= 1 {
        return Ok(true);
    }
    for alpha in simplex_points(n, f.d() - 2) {
        let rep = hessian_inertia(&hessian_at(f, &alpha))?;
        if rep.inertia != (Inertia { positives: 1, negatives: n - 1, zeros: 0 }) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R_p`: `c_α ↦ c_α^p` in double precision (`R_0` gives the support's generating polynomial).
pub fn power_map<S: Scalar>(f: &HomogeneousPolynomial<S>, p: f64) -> HomogeneousPolynomial<f64> {
    f.map(|_, c| if p == 0.0 { 1.0 } else { c.to_f64().powf(p) })
}

/// `R_p` for a nonnegative integer exponent, exact.
pub fn power_map_exact<S: Scalar>(f: &HomogeneousPolynomial<S>, p: u32) -> HomogeneousPolynomial<S> {
    f.map(|_, c| c.powu(p))
}

/// `N_t`: `c_α ↦ c_α / (α!)^t` for integer `t`, exact.
pub fn normalize<S: Scalar>(f: &HomogeneousPolynomial<S>, t: i64) -> HomogeneousPolynomial<S> {
    f.map(|a, c| {
        let fac: S = factorial_scalar::<S>(a).powu(t.unsigned_abs() as u32);
        if t >= 0 {
            c.clone() / fac
        } else {
            c.clone() * fac
        }
    })
}

/// `N_t` for real `t`, in double precision.
pub fn normalize_f64<S: Scalar>(f: &HomogeneousPolynomial<S>, t: f64) -> HomogeneousPolynomial<f64> {
    f.map(|a, c| c.to_f64() / factorial_f64(a).powf(t))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Simplification<S> {
    /// Polynomial in `r = partition.len()` variables.
    pub g: HomogeneousPolynomial<S>,
    /// One weight per original variable; zero for variables outside the support.
    pub lambdas: Vec<S>,
    /// Blocks `V_1, …, V_r`, sorted by smallest element.
    pub partition: Vec<Vec<usize>>,
}

fn scalar_eq<S: Scalar>(a: &S, b: &S) -> bool {
    if S::EXACT {
        a == b
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= 1e-9 * x.abs().max(y.abs())
    }
}

fn pair(n: usize, i: usize, j: usize) -> ExponentVector {
    let mut v = vec![0; n];
    v[i] += 1;
    v[j] += 1;
    v
}

/// Degree-two simplification `f(x) = g(Σ_{i∈V_1} λ_i x_i, …)`.
pub fn simplify_degree2<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Result<Simplification<S>> {
    if f.d() != 2 {
        return Err(Error::Precondition(format!("simplification needs degree 2, got {}", f.d())));
    }
    check_input(f)?;
    let n = f.n();
    if let Some(w) = exchange_violation(&f.support(), n, 2)? {
        return Err(Error::Precondition(format!("support is not M-convex: {w:?}")));
    }
    let c = |i: usize, j: usize| f.coeff(&pair(n, i, j));
    let vars: Vec<usize> = (0..n).filter(|&i| f.support().iter().any(|a| a[i] > 0)).collect();
    // Blocks: classes of the relation generated by "e_i + e_j not in J".
    let mut block_of: HashMap<usize, usize> = HashMap::new();
    let mut partition: Vec<Vec<usize>> = Vec::new();
    for &i in &vars {
        let found = partition.iter().position(|b| b.iter().any(|&k| c(i, k).is_zero()));
        match found {
            Some(p) => {
                partition[p].push(i);
                block_of.insert(i, p);
            }
            None => {
                block_of.insert(i, partition.len());
                partition.push(vec![i]);
            }
        }
    }
    let r = partition.len();
    // Rank-one consistency of each row block against all other columns.
    for (k, block) in partition.iter().enumerate() {
        let outside: Vec<usize> = vars.iter().copied().filter(|&j| block_of[&j] != k).collect();
        for [&i1, &i2] in block.iter().array_combinations() {
            for [&j1, &j2] in outside.iter().array_combinations() {
                let lhs = c(i1, j1) * c(i2, j2);
                let rhs = c(i1, j2) * c(i2, j1);
                if !scalar_eq(&lhs, &rhs) {
                    return Err(Error::Precondition(format!(
                        "binomial relation fails on the minor rows ({i1},{i2}) columns ({j1},{j2}): {lhs:?} != {rhs:?}"
                    )));
                }
            }
        }
    }
    let mut lambdas = vec![S::zero(); n];
    for (k, block) in partition.iter().enumerate() {
        if block.len() == 1 {
            lambdas[block[0]] = S::one();
            continue;
        }
        let j = vars
            .iter()
            .copied()
            .find(|&j| block_of[&j] != k)
            .ok_or_else(|| Error::Precondition("a multi-variable block with no partner block".into()))?;
        let total = block.iter().fold(S::zero(), |acc, &i| acc + c(i, j));
        for &i in block {
            lambdas[i] = c(i, j) / total.clone();
        }
    }
    let mut terms = Vec::new();
    for k in 0..r {
        let i = partition[k][0];
        let diag = c(i, i);
        if !diag.is_zero() {
            terms.push((pair(r, k, k), diag / (lambdas[i].clone() * lambdas[i].clone())));
        }
        for l in k + 1..r {
            let j = partition[l][0];
            let v = c(i, j) / (lambdas[i].clone() * lambdas[j].clone());
            terms.push((pair(r, k, l), v));
        }
    }
    let g = HomogeneousPolynomial::from_terms(r, 2, terms)?;
    // Substitution must reproduce every coefficient.
    for [&i, &j] in vars.iter().array_combinations().chain(vars.iter().map(|i| [i, i])) {
        let (k, l) = (block_of[&i], block_of[&j]);
        let predicted = g.coeff(&pair(r, k, l)) * lambdas[i].clone() * lambdas[j].clone();
        if !scalar_eq(&predicted, &c(i, j)) {
            return Err(Error::Internal(format!("simplification does not reproduce coefficient ({i},{j})")));
        }
    }
    Ok(Simplification { g, lambdas, partition })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryClass {
    Interior,
    Boundary,
    UndeterminedBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImageClass {
    RealImage,
    ComplexImage,
    OutsideImage,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Deg2Classification {
    pub position: BoundaryClass,
    pub image: ImageClass,
    pub hessian_rank: usize,
    pub simplified_vars: usize,
}

/// Interior/boundary and image class of a Lorentzian quadric.
pub fn classify_deg2<S: Scalar>(f: &HomogeneousPolynomial<S>) -> Result<Deg2Classification> {
    let rep = is_lorentzian(f)?;
    if !rep.lorentzian {
        return Err(Error::Precondition("classification needs a Lorentzian polynomial".into()));
    }
    let s = simplify_degree2(f)?;
    let r = s.partition.len();
    let h = hessian_at(&s.g, &vec![0; r]);
    let rank = hessian_inertia(&h)?.inertia.rank();
    let uniform_no_squares = s.g.len() == r * (r - 1) / 2 && s.g.terms().keys().all(|a| a.iter().all(|&x| x <= 1));
    let position = if rank == r {
        BoundaryClass::Interior
    } else if uniform_no_squares {
        BoundaryClass::Boundary
    } else {
        BoundaryClass::UndeterminedBoundary
    };
    let image = match rank {
        0..=3 => ImageClass::RealImage,
        4 => ImageClass::ComplexImage,
        _ => ImageClass::OutsideImage,
    };
    Ok(Deg2Classification { position, image, hessian_rank: rank, simplified_vars: r })
}

/// A matrix entry for [`grassmann_map`].
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixEntry {
    Rational(Rational),
    Complex(Rational, Rational),
    /// `(a + b√5)/2`.
    Golden(QSqrt5),
    Float(f64),
    ComplexFloat(f64, f64),
}

fn det<T>(mut m: Vec<Vec<T>>, score: impl Fn(&T) -> f64) -> T
where
    T: Clone + Zero + One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T> + std::ops::Div<Output = T> + std::ops::Neg<Output = T>,
{
    let k = m.len();
    let mut acc = T::one();
    for c in 0..k {
        let best = (c..k)
            .map(|r| (r, score(&m[r][c])))
            .filter(|(_, s)| *s > 0.0)
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let Some((p, _)) = best else { return T::zero() };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let piv = m[c][c].clone();
        acc = acc * piv.clone();
        for r in c + 1..k {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone() / piv.clone();
            for cc in c..k {
                let v = m[r][cc].clone() - f.clone() * m[c][cc].clone();
                m[r][cc] = v;
            }
        }
    }
    acc
}

fn exact_score<T: Zero>(x: &T) -> f64 {
    if x.is_zero() {
        0.0
    } else {
        1.0
    }
}

fn minors_of<T: Clone>(a: &[Vec<T>], cols: &[usize]) -> Vec<Vec<T>> {
    a.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect()
}

fn square_free(n: usize, cols: &[usize]) -> ExponentVector {
    let mut v = vec![0; n];
    for &c in cols {
        v[c] = 1;
    }
    v
}

/// Maximal minors of a `d × n` matrix over `Q(√5)`.
pub fn golden_minors(a: &[Vec<QSqrt5>]) -> Vec<(Vec<usize>, QSqrt5)> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    (0..n).combinations(d).map(|c| (c.clone(), det(minors_of(a, &c), exact_score))).collect()
}

/// `f = Σ_S |det A_S|^t x^S`; exact for `t = 2` over rational, Gaussian
/// rational or golden entries, double precision otherwise.
pub fn grassmann_map(a: &[Vec<MatrixEntry>], t: f64) -> Result<AnyPolynomial> {
    let d = a.len();
    if d == 0 {
        return Err(input_err!("empty matrix"));
    }
    let n = a[0].len();
    if a.iter().any(|r| r.len() != n) || d > n {
        return Err(input_err!("matrix must be d x n with d <= n"));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(input_err!("t must be positive"));
    }
    let all = a.iter().flatten();
    let has_float = all.clone().any(|e| matches!(e, MatrixEntry::Float(_) | MatrixEntry::ComplexFloat(..)));
    let has_golden = all.clone().any(|e| matches!(e, MatrixEntry::Golden(_)));
    let has_complex = all.clone().any(|e| matches!(e, MatrixEntry::Complex(..) | MatrixEntry::ComplexFloat(..)));
    for e in a.iter().flatten() {
        if let MatrixEntry::Float(x) | MatrixEntry::ComplexFloat(x, _) = e {
            if !x.is_finite() {
                return Err(input_err!("non-finite matrix entry"));
            }
        }
        if let MatrixEntry::ComplexFloat(_, y) = e {
            if !y.is_finite() {
                return Err(input_err!("non-finite matrix entry"));
            }
        }
    }
    let exact = t == 2.0 && !has_float && !(has_golden && has_complex);
    let cols: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    let poly: AnyPolynomial = if exact && has_golden {
        let m: Vec<Vec<QSqrt5>> = a
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        MatrixEntry::Golden(g) => g.clone(),
                        MatrixEntry::Rational(x) => QSqrt5::from_rational(x.clone()),
                        _ => unreachable!("checked above"),
                    })
                    .collect()
            })
            .collect();
        let terms = cols.iter().map(|c| {
            let m = det(minors_of(&m, c), exact_score);
            (square_free(n, c), m.clone() * m)
        });
        HomogeneousPolynomial::from_terms(n, d as u32, terms.collect::<Vec<_>>())?.into()
    } else if exact {
        let m: Vec<Vec<Complex<Rational>>> = a
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        MatrixEntry::Rational(x) => Complex::new(x.clone(), Rational::zero()),
                        MatrixEntry::Complex(x, y) => Complex::new(x.clone(), y.clone()),
                        _ => unreachable!("checked above"),
                    })
                    .collect()
            })
            .collect();
        let terms = cols.iter().map(|c| {
            let m = det(minors_of(&m, c), exact_score);
            (square_free(n, c), m.norm_sqr())
        });
        HomogeneousPolynomial::from_terms(n, d as u32, terms.collect::<Vec<_>>())?.into()
    } else {
        let m: Vec<Vec<Complex<f64>>> = a
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        MatrixEntry::Rational(x) => Complex::new(x.to_f64(), 0.0),
                        MatrixEntry::Complex(x, y) => Complex::new(x.to_f64(), y.to_f64()),
                        MatrixEntry::Golden(g) => Complex::new(g.to_f64(), 0.0),
                        MatrixEntry::Float(x) => Complex::new(*x, 0.0),
                        MatrixEntry::ComplexFloat(x, y) => Complex::new(*x, *y),
                    })
                    .collect()
            })
            .collect();
        let scale = m.iter().flatten().fold(0.0f64, |s, z| s.max(z.norm()));
        let eps = 1e-12 * scale.powi(d as i32).max(f64::MIN_POSITIVE);
        let terms = cols.iter().filter_map(|c| {
            let v = det(minors_of(&m, c), |z: &Complex<f64>| z.norm()).norm();
            (v > eps).then(|| (square_free(n, c), v.powf(t)))
        });
        HomogeneousPolynomial::from_terms(n, d as u32, terms.collect::<Vec<_>>())?.into()
    };
    let empty = match &poly {
        AnyPolynomial::Rational(p) => p.is_zero(),
        AnyPolynomial::Golden(p) => p.is_zero(),
        AnyPolynomial::Float(p) => p.is_zero(),
    };
    if empty {
        return Err(input_err!("matrix has rank below {d}: every maximal minor vanishes"));
    }
    Ok(poly)
}

/// `Σ_B |p_B(A)|^t x^B` for the Betsy Ross matrix `A`; minors exact, powers in `f64`.
pub fn betsy_polynomial(t: f64) -> HomogeneousPolynomial<f64> {
    let terms: Vec<(ExponentVector, f64)> = golden_minors(&betsy_ross_matrix())
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(c, m)| (square_free(11, &c), m.to_f64().abs().powf(t)))
        .collect();
    HomogeneousPolynomial::from_terms(11, 3, terms).expect("degree 3 square-free terms")
}

/// Endpoints of the Lorentzian interval of [`betsy_polynomial`], located by
/// bisection from `t = 0` outwards to within `tol`. Each side assumes the
/// family leaves the Lorentzian set once and stays out up to `|t| = reach`.
pub fn betsy_interval(reach: f64, tol: f64) -> Result<(f64, f64)> {
    let inside = |t: f64| is_lorentzian(&betsy_polynomial(t)).map(|r| r.lorentzian);
    if !inside(0.0)? {
        return Err(Error::Internal("the Betsy Ross generating polynomial is not Lorentzian".into()));
    }
    let mut ends = [0.0; 2];
    for (k, sign) in [-1.0, 1.0].into_iter().enumerate() {
        let (mut lo, mut hi) = (0.0, reach);
        if inside(sign * hi)? {
            return Err(Error::Resource(format!("still Lorentzian at t = {}", sign * hi)));
        }
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if inside(sign * mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        ends[k] = sign * 0.5 * (lo + hi);
    }
    Ok((ends[0], ends[1]))
}

/// `betsy_polynomial(2)` with exact coefficients in `Q(√5)`.
pub fn betsy_polynomial_exact_squared() -> HomogeneousPolynomial<QSqrt5> {
    let terms: Vec<(ExponentVector, QSqrt5)> = golden_minors(&betsy_ross_matrix())
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(c, m)| (square_free(11, &c), m.clone() * m))
        .collect();
    HomogeneousPolynomial::from_terms(11, 3, terms).expect("degree 3 square-free terms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::combinatorics::{build_named, generating_polynomial, NamedKind};
    use crate::polynomial::rational_poly;

    fn m(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inertia_examples() {
        let i2 = hessian_inertia(&m(&[&[1, 0], &[0, 1]])).unwrap().inertia;
        assert_eq!(i2, Inertia { positives: 2, negatives: 0, zeros: 0 });
        let swap = hessian_inertia(&m(&[&[0, 1], &[1, 0]])).unwrap().inertia;
        assert_eq!(swap, Inertia { positives: 1, negatives: 1, zeros: 0 });
        let j4 = m(&[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]]);
        assert_eq!(hessian_inertia(&j4).unwrap().inertia, Inertia { positives: 1, negatives: 3, zeros: 0 });
        let f: Vec<Vec<f64>> = j4.iter().map(|r| r.iter().map(|x| x.to_f64()).collect()).collect();
        assert_eq!(hessian_inertia(&f).unwrap().inertia, Inertia { positives: 1, negatives: 3, zeros: 0 });
        assert!(hessian_inertia(&m(&[&[0, 1], &[2, 0]])).is_err());
        let zero = m(&[&[0, 0], &[0, 0]]);
        assert_eq!(hessian_inertia(&zero).unwrap().inertia.zeros, 2);
    }

    #[test]
    fn lorentzian_examples() {
        let u23 = rational_poly(3, 2, &[(&[1, 1, 0], 1, 1), (&[1, 0, 1], 1, 1), (&[0, 1, 1], 1, 1)]);
        assert!(is_lorentzian(&u23).unwrap().lorentzian);
        let sq = rational_poly(4, 2, &[(&[1, 1, 0, 0], 1, 1), (&[0, 0, 1, 1], 1, 1)]);
        let r = is_lorentzian(&sq).unwrap();
        assert!(!r.lorentzian);
        assert!(matches!(r.certificate, Certificate::SupportNotMConvex { .. }));
        let a = rational_poly(2, 2, &[(&[2, 0], 2, 1), (&[1, 1], 1, 1), (&[0, 2], 2, 1)]);
        assert!(!is_lorentzian(&a).unwrap().lorentzian);
        let b = rational_poly(2, 2, &[(&[2, 0], 2, 1), (&[1, 1], 3, 1), (&[0, 2], 2, 1)]);
        assert!(is_lorentzian(&b).unwrap().lorentzian);
        let x2y = rational_poly(2, 3, &[(&[2, 1], 2, 1)]);
        assert!(is_lorentzian(&x2y).unwrap().lorentzian);
        let lin = rational_poly(3, 1, &[(&[1, 0, 0], 1, 1)]);
        assert_eq!(is_lorentzian(&lin).unwrap().certificate, Certificate::LowDegree);
        assert!(is_lorentzian(&rational_poly(2, 2, &[])).is_err());
        assert!(is_lorentzian(&rational_poly(2, 2, &[(&[1, 1], -1, 1)])).is_err());
    }

    #[test]
    fn strict_examples() {
        let b = rational_poly(2, 2, &[(&[2, 0], 2, 1), (&[1, 1], 3, 1), (&[0, 2], 2, 1)]);
        assert!(is_strictly_lorentzian(&b).unwrap());
        let s = generating_polynomial(&build_named(&NamedKind::Simplex { n: 2, d: 2 }).unwrap());
        assert!(!is_strictly_lorentzian(&s).unwrap());
        let gap = rational_poly(2, 2, &[(&[2, 0], 2, 1), (&[1, 1], 3, 1)]);
        assert!(!is_strictly_lorentzian(&gap).unwrap());
    }

    #[test]
    fn coefficient_maps() {
        let x2 = rational_poly(1, 2, &[(&[2], 2, 1)]);
        assert_eq!(normalize(&x2, 1).coeff(&[2]), int(1));
        let f = rational_poly(2, 3, &[(&[2, 1], 5, 1), (&[0, 3], 7, 2)]);
        assert_eq!(normalize(&normalize(&f, 2), 3), normalize(&f, 5));
        assert_eq!(normalize(&normalize(&f, 2), -2), f);
        let u23 = rational_poly(3, 2, &[(&[1, 1, 0], 1, 1), (&[1, 0, 1], 1, 1), (&[0, 1, 1], 1, 1)]);
        assert_eq!(normalize(&u23, 3), u23);
        assert_eq!(power_map_exact(&f, 1), f);
        let r0 = power_map(&f, 0.0);
        assert!(r0.terms().values().all(|&c| c == 1.0));
    }

    #[test]
    fn simplification_examples() {
        let f = rational_poly(3, 2, &[(&[1, 0, 1], 1, 1), (&[0, 1, 1], 1, 1)]);
        let s = simplify_degree2(&f).unwrap();
        assert_eq!(s.partition, vec![vec![0, 1], vec![2]]);
        assert_eq!(s.lambdas, vec![rat(1, 2), rat(1, 2), int(1)]);
        assert_eq!(s.g.coeff(&[1, 1]), int(2));
        let u23 = rational_poly(3, 2, &[(&[1, 1, 0], 1, 1), (&[1, 0, 1], 1, 1), (&[0, 1, 1], 1, 1)]);
        let s = simplify_degree2(&u23).unwrap();
        assert_eq!(s.g, u23);
        assert_eq!(s.lambdas, vec![int(1); 3]);
        let f = rational_poly(3, 2, &[(&[1, 0, 1], 2, 1), (&[0, 1, 1], 1, 1)]);
        let s = simplify_degree2(&f).unwrap();
        assert_eq!(s.g.coeff(&[1, 1]), int(3));
        assert_eq!(s.lambdas, vec![rat(2, 3), rat(1, 3), int(1)]);
        // x1 x3 + x1 x4 + x2 x3 + 2 x2 x4 violates the binomial relation.
        let bad = rational_poly(4, 2, &[(&[1, 0, 1, 0], 1, 1), (&[1, 0, 0, 1], 1, 1), (&[0, 1, 1, 0], 1, 1), (&[0, 1, 0, 1], 2, 1)]);
        assert!(matches!(simplify_degree2(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn classification_examples() {
        for (n, rank, image) in [(3, 3, ImageClass::RealImage), (4, 4, ImageClass::ComplexImage), (5, 5, ImageClass::OutsideImage)] {
            let f = generating_polynomial(&build_named(&NamedKind::Uniform { r: 2, n }).unwrap());
            let c = classify_deg2(&f).unwrap();
            assert_eq!(c.hessian_rank, rank);
            assert_eq!(c.image, image);
            assert_eq!(c.position, BoundaryClass::Interior);
        }
    }

    #[test]
    fn grassmann_examples() {
        let e = |v: &[&[i64]]| -> Vec<Vec<MatrixEntry>> {
            v.iter().map(|r| r.iter().map(|&x| MatrixEntry::Rational(int(x))).collect()).collect()
        };
        let p = grassmann_map(&e(&[&[1, 0, 1], &[0, 1, 1]]), 2.0).unwrap();
        let AnyPolynomial::Rational(p) = p else { panic!("expected exact output") };
        assert_eq!(p, rational_poly(3, 2, &[(&[1, 1, 0], 1, 1), (&[1, 0, 1], 1, 1), (&[0, 1, 1], 1, 1)]));
        let AnyPolynomial::Rational(q) = grassmann_map(&e(&[&[1, 0, 1, 1], &[0, 1, 1, 2]]), 2.0).unwrap() else {
            panic!("expected exact output")
        };
        assert_eq!(q.coeff(&[1, 0, 0, 1]), int(4));
        let c = classify_deg2(&q).unwrap();
        assert_eq!(c.position, BoundaryClass::Boundary);
        assert_eq!(c.image, ImageClass::RealImage);
        assert!(grassmann_map(&e(&[&[1, 2], &[2, 4]]), 2.0).is_err());
        let AnyPolynomial::Float(fl) = grassmann_map(&e(&[&[1, 0, 1, 1], &[0, 1, 1, 2]]), 1.0).unwrap() else {
            panic!("expected float output")
        };
        assert_eq!(fl.coeff(&[1, 0, 0, 1]), 2.0);
    }

    #[test]
    fn complex_entries_are_exact_at_t2() {
        let i = MatrixEntry::Complex(int(0), int(1));
        let one = MatrixEntry::Rational(int(1));
        let zero = MatrixEntry::Rational(int(0));
        let a = vec![vec![one.clone(), zero.clone(), one.clone()], vec![zero, one, i]];
        let AnyPolynomial::Rational(p) = grassmann_map(&a, 2.0).unwrap() else { panic!("expected exact output") };
        // minors 1, i, -1
        assert_eq!(p.coeff(&[1, 0, 1]), int(1));
        assert!(is_lorentzian(&p).unwrap().lorentzian);
    }

    #[test]
    fn betsy_ross_family() {
        let p0 = betsy_polynomial(0.0);
        assert_eq!(p0.len(), 140);
        assert!(p0.terms().values().all(|&c| c == 1.0));
        let exact = betsy_polynomial_exact_squared();
        assert!(is_lorentzian(&exact).unwrap().lorentzian);
        let p2 = betsy_polynomial(2.0);
        for (a, c) in exact.terms() {
            assert!((c.to_f64() - p2.coeff(a)).abs() < 1e-9 * c.to_f64());
        }
        assert!(!is_lorentzian(&betsy_polynomial(2.5)).unwrap().lorentzian);
    }
}
