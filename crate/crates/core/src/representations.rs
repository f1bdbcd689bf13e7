//! Plücker relations of an M-convex set, `T_q`-representations, and the
//! linear spaces `V_J ⊇ W_J` inside `R^J`.

use std::collections::HashSet;
use std::ops::Deref;

use itertools::Itertools;
use rayon::prelude::*;

use crate::arith::{Rational, Scalar};
use crate::combinatorics::{bounded_simplex_points, delta_bounds, ExponentVector, MConvexSet};
use crate::error::{input_err, Error, Result};
use crate::hyperfield::{is_null, QParameter};
use crate::linalg::{rank_i128, IntEchelon, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerRelation {
    /// Number of `i` indices minus one (2 for 3-term relations).
    pub s: usize,
    pub alpha: ExponentVector,
    /// `i_0 ≤ … ≤ i_s` (0-indexed).
    pub i: Vec<usize>,
    /// `j_2 ≤ … ≤ j_s` (0-indexed).
    pub j: Vec<usize>,
    pub terms: Vec<(ExponentVector, ExponentVector)>,
    /// `(-1)^{k + #{m : j_m < i_k}}`; irrelevant over idempotent hyperfields.
    pub signs: Vec<i8>,
    /// Positions of both factors in `J` for supported terms.
    pub support: Vec<Option<(usize, usize)>>,
}

impl PlueckerRelation {
    pub fn supported_mask(&self) -> Vec<bool> {
        self.support.iter().map(Option::is_some).collect()
    }

    pub fn supported_count(&self) -> usize {
        self.support.iter().filter(|s| s.is_some()).count()
    }

    pub fn supported_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.support.iter().flatten().copied()
    }

    /// Sorted multiset of unordered term pairs, identifying the relation.
    fn key(&self) -> Vec<(ExponentVector, ExponentVector)> {
        let mut k: Vec<_> = self
            .terms
            .iter()
            .map(|(a, b)| if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) })
            .collect();
        k.sort();
        k
    }
}

fn add_indices(base: &[u32], idx: &[usize]) -> ExponentVector {
    let mut v = base.to_vec();
    for &i in idx {
        v[i] += 1;
    }
    v
}

fn build_relation(j: &MConvexSet, alpha: &[u32], is: &[usize], js: &[usize]) -> PlueckerRelation {
    let s = is.len() - 1;
    let mut terms = Vec::with_capacity(s + 1);
    let mut signs = Vec::with_capacity(s + 1);
    let mut support = Vec::with_capacity(s + 1);
    for k in 0..=s {
        let rest: Vec<usize> = is.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &x)| x).collect();
        let a = add_indices(alpha, &rest);
        let mut second = vec![is[k]];
        second.extend_from_slice(js);
        let b = add_indices(alpha, &second);
        let eps = js.iter().filter(|&&x| x < is[k]).count();
        signs.push(if (k + eps) % 2 == 0 { 1 } else { -1 });
        support.push(match (j.index_of(&a), j.index_of(&b)) {
            (Some(x), Some(y)) => Some((x, y)),
            _ => None,
        });
        terms.push((a, b));
    }
    PlueckerRelation { s, alpha: alpha.to_vec(), i: is.to_vec(), j: js.to_vec(), terms, signs, support }
}

fn fits(upper: &[u32], alpha: &[u32], idx: &[usize]) -> bool {
    let mut v = alpha.to_vec();
    for &i in idx {
        v[i] += 1;
        if v[i] > upper[i] {
            return false;
        }
    }
    true
}

/// 3-term relations over `α ∈ Δ^{d-2}_n`, `i ≤ j ≤ k ≤ l`, within the δ-bounds.
/// Relations with no supported term are omitted.
pub fn three_term_relations(j: &MConvexSet) -> Vec<PlueckerRelation> {
    if j.d() < 2 {
        return Vec::new();
    }
    let b = delta_bounds(j);
    let n = j.n();
    let upper_alpha: Vec<u32> = b.upper.clone();
    let mut out = Vec::new();
    for alpha in bounded_simplex_points(j.d() - 2, &b.lower, &upper_alpha) {
        for q in (0..n).combinations_with_replacement(4) {
            if !fits(&b.upper, &alpha, &q) {
                continue;
            }
            let r = build_relation(j, &alpha, &q[..3], &q[3..]);
            if r.supported_count() > 0 {
                out.push(r);
            }
        }
    }
    out
}

/// The `(s+1)`-term relations, deduplicated by their term multisets.
pub fn full_relations(j: &MConvexSet, s: usize) -> Result<Vec<PlueckerRelation>> {
    if s < 2 || s > j.d() as usize {
        return Err(input_err!("s = {s} outside 2..={}", j.d()));
    }
    let b = delta_bounds(j);
    let n = j.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for alpha in bounded_simplex_points(j.d() - s as u32, &b.lower, &b.upper) {
        for is in (0..n).combinations_with_replacement(s + 1) {
            if !fits(&b.upper, &alpha, &is) {
                continue;
            }
            let base = add_indices(&alpha, &is);
            for js in (0..n).combinations_with_replacement(s - 1) {
                if !fits(&b.upper, &base, &js) {
                    continue;
                }
                let r = build_relation(j, &alpha, &is, &js);
                if r.supported_count() == 0 {
                    continue;
                }
                if seen.insert(r.key()) {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// All relations for `2 ≤ s ≤ d`.
pub fn all_relations(j: &MConvexSet) -> Vec<PlueckerRelation> {
    (2..=j.d() as usize).flat_map(|s| full_relations(j, s).expect("s in range")).collect()
}

/// Positive values on the points of `J`, in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S> {
    pub values: Vec<S>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(j: &MConvexSet, values: Vec<S>) -> Result<Self> {
        if values.len() != j.len() {
            return Err(input_err!("representation has {} values but J has {} points", values.len(), j.len()));
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive_value()) {
            return Err(input_err!("representation value {v:?} is not positive"));
        }
        Ok(Representation { values })
    }

    pub fn ones(j: &MConvexSet) -> Self {
        Representation { values: vec![S::one(); j.len()] }
    }

    fn term_values(&self, r: &PlueckerRelation) -> Vec<S> {
        r.supported_pairs().map(|(a, b)| self.values[a].clone() * self.values[b].clone()).collect()
    }
}

fn check_relations<S: Scalar>(rho: &Representation<S>, j: &MConvexSet, rels: &[PlueckerRelation], q: &QParameter) -> Result<bool> {
    if rho.values.len() != j.len() {
        return Err(input_err!("representation is not supported on J"));
    }
    let bad = rels
        .par_iter()
        .map(|r| is_null(&rho.term_values(r), q).map(|ok| !ok))
        .collect::<Result<Vec<bool>>>()?;
    Ok(!bad.into_iter().any(|b| b))
}

/// Every 3-term relation is null in `T_q`.
pub fn is_weak_rep<S: Scalar>(rho: &Representation<S>, j: &MConvexSet, q: &QParameter) -> Result<bool> {
    check_relations(rho, j, &three_term_relations(j), q)
}

/// Every relation with `2 ≤ s ≤ d` is null in `T_q`.
pub fn is_strong_rep<S: Scalar>(rho: &Representation<S>, j: &MConvexSet, q: &QParameter) -> Result<bool> {
    check_relations(rho, j, &all_relations(j), q)
}

/// `ρ(a)ρ(b) = ρ(c)ρ(d)` with indices into `J`; each side is sorted and the
/// sides are ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

impl Binomial {
    fn new(x: (usize, usize), y: (usize, usize)) -> Self {
        let x = (x.0.min(x.1), x.0.max(x.1));
        let y = (y.0.min(y.1), y.0.max(y.1));
        if x <= y {
            Binomial { lhs: x, rhs: y }
        } else {
            Binomial { lhs: y, rhs: x }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Coefficient vector of `log ρ(a) + log ρ(b) − log ρ(c) − log ρ(d)`.
    pub fn log_equation(&self, len: usize) -> Vec<i128> {
        let mut v = vec![0i128; len];
        v[self.lhs.0] += 1;
        v[self.lhs.1] += 1;
        v[self.rhs.0] -= 1;
        v[self.rhs.1] -= 1;
        v
    }
}

/// Relations with exactly two supported terms, as binomial equalities.
pub fn degenerate_relations(j: &MConvexSet, use_full: bool) -> Result<Vec<Binomial>> {
    let rels = if use_full { all_relations(j) } else { three_term_relations(j) };
    let mut out = HashSet::new();
    for r in &rels {
        match r.supported_count() {
            1 => {
                return Err(Error::Internal(format!(
                    "relation at alpha={:?}, i={:?}, j={:?} has a single supported term; J is not M-convex",
                    r.alpha, r.i, r.j
                )))
            }
            2 => {
                let p: Vec<(usize, usize)> = r.supported_pairs().collect();
                let b = Binomial::new(p[0], p[1]);
                if !b.is_trivial() {
                    out.insert(b);
                }
            }
            _ => {}
        }
    }
    let mut out: Vec<Binomial> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A subspace of `R^J` with the points of `J` as coordinate labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSubspace {
    pub labels: Vec<ExponentVector>,
    pub space: Subspace,
}

impl Deref for RationalSubspace {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.space
    }
}

fn to_rational(v: &[i128]) -> Vec<Rational> {
    crate::linalg::to_rational_row(v)
}

/// Kernel of the additive binomial equations.
pub fn v_space_from(j: &MConvexSet, binomials: &[Binomial]) -> RationalSubspace {
    let eqs: Vec<Vec<Rational>> = binomials.iter().map(|b| to_rational(&b.log_equation(j.len()))).collect();
    RationalSubspace { labels: j.points().to_vec(), space: Subspace::kernel(j.len(), &eqs) }
}

/// `V_J`: the log-linear space of `T_∞`-representations.
pub fn v_space(j: &MConvexSet) -> Result<RationalSubspace> {
    Ok(v_space_from(j, &degenerate_relations(j, false)?))
}

/// `V_J` computed from all degenerate relations for every `s`; equal to
/// [`v_space`] for M-convex `J`.
pub fn v_space_full(j: &MConvexSet) -> Result<RationalSubspace> {
    Ok(v_space_from(j, &degenerate_relations(j, true)?))
}

/// Rows `(α_i)_{α ∈ J}` for `i ∈ [n]` restricted to the given points.
pub fn coordinate_rows(points: &[&ExponentVector], n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| points.iter().map(|p| i128::from(p[i])).collect()).collect()
}

/// `W_J`: the span of the coordinate functions.
pub fn w_space(j: &MConvexSet) -> RationalSubspace {
    let pts: Vec<&ExponentVector> = j.points().iter().collect();
    let rows: Vec<Vec<Rational>> = coordinate_rows(&pts, j.n()).iter().map(|r| to_rational(r)).collect();
    RationalSubspace { labels: j.points().to_vec(), space: Subspace::span(j.len(), &rows) }
}

/// `dim W` for a subset of points given by indices, via integer elimination.
pub fn w_dim_of(points: &[&ExponentVector], n: usize) -> usize {
    rank_i128(&coordinate_rows(points, n), points.len())
}

/// Integer echelon form of `W` on a subset of points (rows are coordinate functions).
pub fn w_echelon(points: &[&ExponentVector], n: usize) -> std::result::Result<IntEchelon, crate::linalg::Overflow> {
    let mut e = IntEchelon::new();
    for r in coordinate_rows(points, n) {
        e.insert(&r)?;
    }
    Ok(e)
}

/// `dim V_J − 1`.
pub fn tutte_rank(j: &MConvexSet) -> Result<usize> {
    Ok(v_space(j)?.dim() - 1)
}

/// `dim V_J − dim W_J`.
pub fn reduced_dim(j: &MConvexSet) -> Result<usize> {
    Ok(v_space(j)?.dim() - w_space(j).dim())
}

/// Whether `V_J/W_J → V_{J'}/W_{J'}` induced by coordinate restriction is injective.
///
/// The image of `V_J` lies in `V_{J'}`, so only `W_{J'}` is needed: the map is
/// injective iff `dim(res V_J + W_{J'}) − dim W_{J'} = dim V_J − dim W_J`.
pub fn restriction_injective(
    j: &MConvexSet,
    j_sub: &MConvexSet,
    v: &RationalSubspace,
    w: &RationalSubspace,
) -> Result<bool> {
    let pos = j.embed(j_sub).ok_or_else(|| input_err!("J' is not contained in J"))?;
    let res_v = v.restrict(&pos);
    let w_sub = w_space(j_sub);
    let sum = res_v.sum(&w_sub);
    Ok(sum.dim() - w_sub.dim() == v.dim() - w.dim())
}
