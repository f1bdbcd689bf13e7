//! M-convex sets: the exchange check, named constructions, δ-bounds and the
//! product decomposition.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::arith::{QSqrt5, Rational, Scalar};
use crate::error::{input_err, Error, Result};
use crate::polynomial::HomogeneousPolynomial;

pub type ExponentVector = Vec<u32>;

/// A pair `(alpha, beta, i)` for which no exchange partner `j` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeWitness {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

/// Nonempty finite subset of `Δ^d_n`, points sorted lexicographically.
#[derive(Debug, Clone)]
pub struct MConvexSet {
    n: usize,
    d: u32,
    points: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
    pub label: Option<String>,
}

impl PartialEq for MConvexSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.points == other.points
    }
}

impl Eq for MConvexSet {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaBounds {
    pub lower: ExponentVector,
    pub upper: ExponentVector,
}

fn check_shape(points: &[ExponentVector], n: usize, d: u32) -> Result<()> {
    for p in points {
        if p.len() != n {
            return Err(input_err!("point {p:?} has length {} but n = {n}", p.len()));
        }
        let s: u32 = p.iter().sum();
        if s != d {
            return Err(input_err!("point {p:?} has degree {s} but d = {d}"));
        }
    }
    Ok(())
}

/// Exhaustive symmetric exchange check; `Ok(None)` means no violation.
/// Emptiness is not checked here, see [`is_m_convex`].
pub fn exchange_violation(points: &[ExponentVector], n: usize, d: u32) -> Result<Option<ExchangeWitness>> {
    check_shape(points, n, d)?;
    let set: HashSet<&[u32]> = points.iter().map(|p| p.as_slice()).collect();
    let mut a = vec![0u32; n];
    let mut b = vec![0u32; n];
    for alpha in points {
        for beta in points {
            for i in 0..n {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let ok = (0..n).any(|j| {
                    if alpha[j] >= beta[j] {
                        return false;
                    }
                    a.copy_from_slice(alpha);
                    b.copy_from_slice(beta);
                    a[i] -= 1;
                    a[j] += 1;
                    b[i] += 1;
                    b[j] -= 1;
                    set.contains(a.as_slice()) && set.contains(b.as_slice())
                });
                if !ok {
                    return Ok(Some(ExchangeWitness { alpha: alpha.clone(), beta: beta.clone(), i }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff the set is nonempty and has the symmetric exchange property.
pub fn is_m_convex(points: &[ExponentVector], n: usize, d: u32) -> Result<bool> {
    if points.is_empty() {
        check_shape(points, n, d)?;
        return Ok(false);
    }
    Ok(exchange_violation(points, n, d)?.is_none())
}

/// All of `Δ^d_n` in lexicographic order.
pub fn simplex_points(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, left: u32, cur: &mut ExponentVector, out: &mut Vec<ExponentVector>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// Points `β ∈ Δ^d_n` with `lower ≤ β ≤ upper`, lexicographic.
pub fn bounded_simplex_points(d: u32, lower: &[u32], upper: &[u32]) -> Vec<ExponentVector> {
    let n = lower.len();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        left: u32,
        lower: &[u32],
        upper: &[u32],
        cur: &mut ExponentVector,
        out: &mut Vec<ExponentVector>,
    ) {
        let n = lower.len();
        if k == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_max: u32 = upper[k + 1..].iter().sum();
        let rest_min: u32 = lower[k + 1..].iter().sum();
        for v in lower[k]..=upper[k].min(left) {
            let rem = left - v;
            if rem < rest_min || rem > rest_max {
                continue;
            }
            cur.push(v);
            rec(k + 1, rem, lower, upper, cur, out);
            cur.pop();
        }
    }
    if lower.iter().zip(upper).any(|(l, u)| l > u) {
        return out;
    }
    rec(0, d, lower, upper, &mut Vec::with_capacity(n), &mut out);
    out
}

impl MConvexSet {
    /// Build from points, verifying shape and the exchange property.
    pub fn new(n: usize, d: u32, points: Vec<ExponentVector>) -> Result<Self> {
        let set = Self::new_unchecked(n, d, points)?;
        if let Some(w) = exchange_violation(&set.points, n, d)? {
            return Err(Error::Construction(format!(
                "not M-convex: no exchange for alpha={:?}, beta={:?}, i={}",
                w.alpha, w.beta, w.i
            )));
        }
        Ok(set)
    }

    /// Build without the exchange check (shape and nonemptiness still checked).
    pub fn new_unchecked(n: usize, d: u32, mut points: Vec<ExponentVector>) -> Result<Self> {
        check_shape(&points, n, d)?;
        points.sort();
        points.dedup();
        if points.is_empty() {
            return Err(Error::Construction("empty point set".into()));
        }
        let index = points.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        Ok(MConvexSet { n, d, points, index, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &ExponentVector {
        &self.points[k]
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.index.contains_key(p)
    }

    /// True when every point is a 0/1 vector.
    pub fn is_matroid(&self) -> bool {
        self.points.iter().all(|p| p.iter().all(|&x| x <= 1))
    }

    /// The subset given by (sorted or unsorted) indices into this set.
    pub fn subset(&self, indices: &[usize]) -> Result<MConvexSet> {
        let pts = indices.iter().map(|&k| self.points[k].clone()).collect();
        MConvexSet::new_unchecked(self.n, self.d, pts)
    }

    /// Indices of `other`'s points in this set, or `None` if not contained.
    pub fn embed(&self, other: &MConvexSet) -> Option<Vec<usize>> {
        other.points.iter().map(|p| self.index_of(p)).collect()
    }
}

/// Named constructions accepted by [`build_named`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum NamedKind {
    Uniform { r: u32, n: usize },
    /// Rank 3 on `{0..n-1}`; `{i,j,k}` is a nonbasis iff `i+j+k ≡ 0 (mod n)`.
    Elliptic { n: usize },
    BetsyRoss,
    Fano,
    Simplex { n: usize, d: u32 },
    /// Matroid of rank `r` on `n` elements with the given (0-indexed) dependent `r`-sets.
    FromNonbases { n: usize, r: u32, nonbases: Vec<Vec<usize>> },
    FromBases { n: usize, r: u32, bases: Vec<Vec<usize>> },
}

fn indicator(n: usize, s: &[usize]) -> ExponentVector {
    let mut v = vec![0; n];
    for &i in s {
        v[i] += 1;
    }
    v
}

fn matroid_from_nonbases(n: usize, r: u32, nonbases: &[Vec<usize>]) -> Result<Vec<ExponentVector>> {
    let mut bad = HashSet::new();
    for nb in nonbases {
        let mut s = nb.clone();
        s.sort_unstable();
        if s.len() != r as usize || s.iter().any(|&i| i >= n) || s.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("invalid nonbasis {nb:?} for rank {r} on {n} elements"));
        }
        bad.insert(s);
    }
    Ok((0..n)
        .combinations(r as usize)
        .filter(|c| !bad.contains(c))
        .map(|c| indicator(n, &c))
        .collect())
}

/// The 25 dependent triples of the Betsy Ross matroid (0-indexed).
pub const BETSY_ROSS_NONBASES: [[usize; 3]; 25] = [
    [0, 2, 8],
    [0, 2, 9],
    [0, 3, 6],
    [0, 3, 7],
    [0, 5, 10],
    [0, 6, 7],
    [0, 8, 9],
    [1, 3, 5],
    [1, 3, 9],
    [1, 4, 7],
    [1, 4, 8],
    [1, 5, 9],
    [1, 6, 10],
    [1, 7, 8],
    [2, 4, 5],
    [2, 4, 6],
    [2, 5, 6],
    [2, 7, 10],
    [2, 8, 9],
    [3, 5, 9],
    [3, 6, 7],
    [3, 8, 10],
    [4, 5, 6],
    [4, 7, 8],
    [4, 9, 10],
];

/// Lines of the Fano plane on `{0..6}`.
pub const FANO_LINES: [[usize; 3]; 7] =
    [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];

/// The 3×11 real matrix representing the Betsy Ross matroid, entries in `Q(√5)`.
pub fn betsy_ross_matrix() -> Vec<Vec<QSqrt5>> {
    let phi = QSqrt5::phi();
    let one = <QSqrt5 as Scalar>::from_i64(1);
    let zero = <QSqrt5 as Scalar>::from_i64(0);
    let p1 = phi.clone() + one.clone();
    let inv = one.clone() / phi.clone();
    vec![
        vec![
            zero.clone(),
            zero.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
        ],
        vec![
            one.clone(),
            zero.clone(),
            one.clone(),
            p1.clone(),
            phi.clone(),
            p1.clone(),
            zero.clone(),
            phi.clone(),
            phi.clone(),
            p1,
            zero.clone(),
        ],
        vec![zero.clone(), one.clone(), one.clone(), phi.clone(), inv, zero.clone(), phi.clone(), phi, one.clone(), one, zero],
    ]
}

pub fn build_named(kind: &NamedKind) -> Result<MConvexSet> {
    let (n, d, points, label) = match kind {
        NamedKind::Uniform { r, n } => {
            if *r as usize > *n {
                return Err(input_err!("uniform matroid needs r <= n"));
            }
            let pts = (0..*n).combinations(*r as usize).map(|c| indicator(*n, &c)).collect();
            (*n, *r, pts, format!("U{r},{n}"))
        }
        NamedKind::Elliptic { n } => {
            if *n < 3 {
                return Err(input_err!("elliptic matroid needs n >= 3"));
            }
            let nb: Vec<Vec<usize>> =
                (0..*n).combinations(3).filter(|c| (c[0] + c[1] + c[2]) % n == 0).collect();
            (*n, 3, matroid_from_nonbases(*n, 3, &nb)?, format!("T{n}"))
        }
        NamedKind::BetsyRoss => {
            let nb: Vec<Vec<usize>> = BETSY_ROSS_NONBASES.iter().map(|t| t.to_vec()).collect();
            (11, 3, matroid_from_nonbases(11, 3, &nb)?, "betsy_ross".to_string())
        }
        NamedKind::Fano => {
            let nb: Vec<Vec<usize>> = FANO_LINES.iter().map(|t| t.to_vec()).collect();
            (7, 3, matroid_from_nonbases(7, 3, &nb)?, "fano".to_string())
        }
        NamedKind::Simplex { n, d } => {
            if *n == 0 {
                return Err(input_err!("simplex needs n >= 1"));
            }
            (*n, *d, simplex_points(*n, *d), format!("Delta^{d}_{n}"))
        }
        NamedKind::FromNonbases { n, r, nonbases } => {
            (*n, *r, matroid_from_nonbases(*n, *r, nonbases)?, "from_nonbases".to_string())
        }
        NamedKind::FromBases { n, r, bases } => {
            let mut pts = Vec::new();
            for b in bases {
                let mut s = b.clone();
                s.sort_unstable();
                if s.len() != *r as usize || s.iter().any(|&i| i >= *n) || s.windows(2).any(|w| w[0] == w[1]) {
                    return Err(input_err!("invalid basis {b:?}"));
                }
                pts.push(indicator(*n, &s));
            }
            (*n, *r, pts, "from_bases".to_string())
        }
    };
    Ok(MConvexSet::new(n, d, points)?.with_label(label))
}

/// Coordinatewise min and max over `J`.
pub fn delta_bounds(j: &MConvexSet) -> DeltaBounds {
    let n = j.n();
    let mut lower = j.points[0].clone();
    let mut upper = j.points[0].clone();
    for p in &j.points {
        for i in 0..n {
            lower[i] = lower[i].min(p[i]);
            upper[i] = upper[i].max(p[i]);
        }
    }
    DeltaBounds { lower, upper }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// Coordinate blocks of the product decomposition of `J`, sorted.
pub fn component_blocks(j: &MConvexSet) -> Result<Vec<Vec<usize>>> {
    let n = j.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut q = vec![0u32; n];
    for p in &j.points {
        for a in 0..n {
            if p[a] == 0 {
                continue;
            }
            for b in 0..n {
                if a == b {
                    continue;
                }
                q.copy_from_slice(p);
                q[a] -= 1;
                q[b] += 1;
                if j.contains(&q) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
    blocks.sort();
    // J must equal the product of its projections onto the blocks.
    let product: usize = blocks
        .iter()
        .map(|b| {
            j.points
                .iter()
                .map(|p| b.iter().map(|&i| p[i]).collect::<Vec<_>>())
                .collect::<HashSet<_>>()
                .len()
        })
        .product();
    if product != j.len() {
        return Err(Error::Internal(format!(
            "exchange components do not split J as a product ({product} != {})",
            j.len()
        )));
    }
    Ok(blocks)
}

/// Number of indecomposable factors of `J`.
pub fn components(j: &MConvexSet) -> Result<usize> {
    Ok(component_blocks(j)?.len())
}

/// Polynomial with normalized coefficient 1 on every point of `J`.
pub fn generating_polynomial(j: &MConvexSet) -> HomogeneousPolynomial<Rational> {
    HomogeneousPolynomial::from_terms(
        j.n(),
        j.d(),
        j.points().iter().map(|p| (p.clone(), Rational::from_integer(1.into()))),
    )
    .expect("points of an M-convex set have uniform degree")
}

/// Cartesian product of two M-convex sets on disjoint coordinates.
pub fn product(a: &MConvexSet, b: &MConvexSet) -> Result<MConvexSet> {
    let pts = a
        .points()
        .iter()
        .cartesian_product(b.points())
        .map(|(p, q)| p.iter().chain(q).copied().collect())
        .collect();
    MConvexSet::new_unchecked(a.n() + b.n(), a.d() + b.d(), pts)
}
