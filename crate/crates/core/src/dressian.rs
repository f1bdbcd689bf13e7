//! M-convex functions, their polynomials and regular subdivisions, and the rays
//! of the reduced Dressian.
//!
//! Sign convention: `ν` is M-convex when `ν(α) + ν(β) ≥ ν(α−e_i+e_j) + ν(β+e_i−e_j)`
//! for some admissible `j`, so in every 3-term tropical Plücker relation the
//! *minimum* of the supported term sums is attained twice. The corresponding
//! polynomial has coefficients `e^{−tν}`.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{rational_to_f64, Rational};
use crate::combinatorics::{ExponentVector, MConvexSet};
use crate::cone::DdCone;
use crate::error::{input_err, Error, Result};
use crate::linalg::{normalize_i128, solve_in_basis, IntEchelon, Overflow};
use crate::polynomial::HomogeneousPolynomial;
use crate::polytopes::{affine_frame, as_i128, descend_faces, hull_facets, overflow, LatticePolytope};
use crate::representations::{three_term_relations, v_space, w_echelon, w_space};

/// Default bound on `dim V_J/W_J` for ray enumeration.
pub const DEFAULT_MAX_DIM: usize = 6;
/// Default bound on the number of cones visited by the traversal.
pub const DEFAULT_CONE_BUDGET: usize = 1_000_000;

/// A function `J → Q`, values aligned with `J`'s canonical point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MConvexFunction {
    pub values: Vec<Rational>,
}

impl MConvexFunction {
    pub fn new(j: &MConvexSet, values: Vec<Rational>) -> Result<Self> {
        if values.len() != j.len() {
            return Err(input_err!("function has {} values but J has {} points", values.len(), j.len()));
        }
        Ok(MConvexFunction { values })
    }

    pub fn zero(j: &MConvexSet) -> Self {
        MConvexFunction { values: vec![Rational::zero(); j.len()] }
    }

    pub fn from_integers(values: &[i128]) -> Self {
        MConvexFunction { values: values.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect() }
    }

    /// Integer values after multiplying by the common denominator (a positive scaling).
    pub fn integer_values(&self) -> Result<Vec<i128>> {
        let l = self.values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        self.values
            .iter()
            .map(|v| (v.numer() * (&l / v.denom())).to_i128().ok_or_else(|| overflow(Overflow)))
            .collect()
    }

    pub fn add(&self, other: &MConvexFunction) -> MConvexFunction {
        MConvexFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn restrict(&self, indices: &[usize]) -> MConvexFunction {
        MConvexFunction { values: indices.iter().map(|&i| self.values[i].clone()).collect() }
    }
}

/// A violated exchange: no `j` repairs `(α, β, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionWitness {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

fn value_at<'a>(j: &MConvexSet, nu: &'a [Rational], p: &[u32]) -> Option<&'a Rational> {
    j.index_of(p).map(|k| &nu[k])
}

/// Exchange property check, the ground truth.
pub fn exchange_violation_fn(j: &MConvexSet, nu: &[Rational]) -> Result<Option<FunctionWitness>> {
    if nu.len() != j.len() {
        return Err(input_err!("function has {} values but J has {} points", nu.len(), j.len()));
    }
    let n = j.n();
    for (a, alpha) in j.points().iter().enumerate() {
        for (b, beta) in j.points().iter().enumerate() {
            if a == b {
                continue;
            }
            let lhs = &nu[a] + &nu[b];
            for i in (0..n).filter(|&i| alpha[i] > beta[i]) {
                let ok = (0..n).filter(|&k| alpha[k] < beta[k]).any(|k| {
                    let mut a2 = alpha.clone();
                    a2[i] -= 1;
                    a2[k] += 1;
                    let mut b2 = beta.clone();
                    b2[i] += 1;
                    b2[k] -= 1;
                    match (value_at(j, nu, &a2), value_at(j, nu, &b2)) {
                        (Some(x), Some(y)) => lhs >= x + y,
                        _ => false,
                    }
                });
                if !ok {
                    return Ok(Some(FunctionWitness { alpha: alpha.clone(), beta: beta.clone(), i }));
                }
            }
        }
    }
    Ok(None)
}

/// The local criterion: pairs at distance 4 only, values `+∞` outside `J`.
pub fn local_criterion(j: &MConvexSet, nu: &[Rational]) -> bool {
    let n = j.n();
    for (a, alpha) in j.points().iter().enumerate() {
        for (b, beta) in j.points().iter().enumerate().skip(a + 1) {
            let diff: Vec<i64> = alpha.iter().zip(beta).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect();
            if diff.iter().map(|x| x.abs()).sum::<i64>() != 4 {
                continue;
            }
            let lhs = &nu[a] + &nu[b];
            let plus: Vec<usize> = (0..n).filter(|&k| diff[k] > 0).collect();
            let minus: Vec<usize> = (0..n).filter(|&k| diff[k] < 0).collect();
            let mut best: Option<Rational> = None;
            for &i in &plus {
                for &k in &minus {
                    let mut a2 = alpha.clone();
                    a2[i] -= 1;
                    a2[k] += 1;
                    let mut b2 = beta.clone();
                    b2[i] += 1;
                    b2[k] -= 1;
                    if let (Some(x), Some(y)) = (value_at(j, nu, &a2), value_at(j, nu, &b2)) {
                        let s = x + y;
                        if best.as_ref().is_none_or(|m| s < *m) {
                            best = Some(s);
                        }
                    }
                }
            }
            match best {
                Some(m) if lhs >= m => {}
                _ => return false,
            }
        }
    }
    true
}

/// Exchange verdict, cross-checked against the local criterion.
pub fn is_m_convex_function(j: &MConvexSet, nu: &MConvexFunction) -> Result<bool> {
    let exchange = exchange_violation_fn(j, &nu.values)?.is_none();
    let local = local_criterion(j, &nu.values);
    if exchange != local {
        return Err(Error::Internal(format!(
            "exchange criterion says {exchange} but the local criterion says {local} for {:?}",
            nu.values
        )));
    }
    Ok(exchange)
}

/// `c_α = e^{−t ν(α)}` on `J`.
pub fn dressian_to_polynomial(j: &MConvexSet, nu: &MConvexFunction, t: f64) -> Result<HomogeneousPolynomial<f64>> {
    if nu.values.len() != j.len() {
        return Err(input_err!("function/domain length mismatch"));
    }
    let terms = j.points().iter().zip(&nu.values).map(|(p, v)| (p.clone(), (-t * rational_to_f64(v)).exp()));
    HomogeneousPolynomial::from_terms(j.n(), j.d(), terms.collect::<Vec<_>>())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    /// Maximal cells as sorted point indices, sorted.
    pub cells: Vec<Vec<usize>>,
}

/// Lower hull of `{(α, h(α))}` over a base polytope.
#[derive(Debug, Clone)]
pub struct LiftedHull {
    pub dim: usize,
    /// Lower facets, i.e. maximal cells.
    pub cells: Vec<FixedBitSet>,
    /// All facets of the lifted polyhedron (lower and vertical).
    pub facets: Vec<FixedBitSet>,
}

impl LiftedHull {
    pub fn new(p: &LatticePolytope, heights: &[i128]) -> Result<Self> {
        let m = p.points().len();
        let lifted: Vec<Vec<i128>> = p
            .points()
            .iter()
            .zip(heights)
            .map(|(q, &h)| {
                let mut v = as_i128(q);
                v.push(h);
                v
            })
            .collect();
        let frame = affine_frame(&lifted)?;
        let mut full = FixedBitSet::with_capacity(m);
        full.insert_range(..);
        if frame.len() == p.dim() {
            // Heights are affine on J: the trivial subdivision.
            return Ok(LiftedHull { dim: p.dim(), cells: vec![full], facets: p.facet_sets() });
        }
        let projected: Vec<Vec<i128>> = lifted.iter().map(|v| frame.iter().map(|&c| v[c]).collect()).collect();
        let up: Vec<i128> = frame.iter().map(|&c| i128::from(c == p.n())).collect();
        let mut cells = Vec::new();
        let mut facets = Vec::new();
        for (y, tight) in hull_facets(&projected, &[up.clone()])? {
            let mut pts = FixedBitSet::with_capacity(m);
            pts.extend(tight.ones().filter(|&i| i < m));
            let slope: i128 = y[1..].iter().zip(&up).map(|(a, b)| a * b).sum();
            if slope > 0 {
                cells.push(pts.clone());
            }
            facets.push(pts);
        }
        cells.sort_by(|a, b| a.ones().cmp(b.ones()));
        Ok(LiftedHull { dim: p.dim(), cells, facets })
    }

    /// Faces of all cells, by dimension.
    pub fn bounded_faces(&self, budget: usize) -> Result<Vec<Vec<FixedBitSet>>> {
        descend_faces(self.cells.clone(), self.dim, &self.facets, budget)
    }
}

pub fn induced_subdivision(j: &MConvexSet, nu: &MConvexFunction) -> Result<Subdivision> {
    if !is_m_convex_function(j, nu)? {
        return Err(Error::Precondition("the lifting function is not M-convex".into()));
    }
    let p = crate::polytopes::base_polytope(j)?;
    let hull = LiftedHull::new(&p, &nu.integer_values()?)?;
    Ok(Subdivision { cells: hull.cells.iter().map(|c| c.ones().collect()).collect() })
}

/// Canonical form of a ray modulo `W` on the given points: reduced against the
/// coordinate functions and made primitive. Only positive scalings are used.
pub fn canonical_mod_w(points: &[&ExponentVector], n: usize, values: &[i128]) -> Result<Vec<i128>> {
    let ech = w_echelon(points, n).map_err(overflow)?;
    canonical_with(&ech, values)
}

pub(crate) fn canonical_with(ech: &IntEchelon, values: &[i128]) -> Result<Vec<i128>> {
    let mut v = ech.reduce(values).map_err(overflow)?;
    normalize_i128(&mut v);
    Ok(v)
}

#[derive(Debug, Clone, Serialize)]
pub struct RayReport {
    /// Canonical integer representatives, aligned with `J`'s point order.
    pub rays: Vec<Vec<i128>>,
    /// True when the traversal ran to completion; false for unverified fixture input.
    pub complete: bool,
    pub reduced_dim: usize,
    pub cones_visited: usize,
}

impl RayReport {
    pub fn functions(&self) -> Vec<MConvexFunction> {
        self.rays.iter().map(|r| MConvexFunction::from_integers(r)).collect()
    }
}

/// Three linear forms whose minimum must be attained twice.
type Triple = [Vec<i128>; 3];

fn triple_key(mut t: Triple) -> Triple {
    t.sort();
    let base = t[0].clone();
    for f in &mut t {
        for (x, b) in f.iter_mut().zip(&base) {
            *x -= b;
        }
    }
    t
}

fn sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Pattern `k`: the two forms other than `k` tie, and `k` is at least as large.
fn pattern(t: &Triple, k: usize) -> (Vec<i128>, Vec<i128>) {
    let (x, y) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    (sub(&t[x], &t[y]), sub(&t[k], &t[x]))
}

fn dot(a: &[i128], b: &[i128]) -> Result<i128> {
    crate::linalg::dot_i128(a, b).map_err(overflow)
}

fn pattern_holds(c: &DdCone, eq: &[i128], ineq: &[i128]) -> Result<bool> {
    for l in c.lineality() {
        if dot(eq, l)? != 0 || dot(ineq, l)? != 0 {
            return Ok(false);
        }
    }
    for r in c.rays() {
        if dot(eq, &r.v)? != 0 || dot(ineq, &r.v)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cone_key(c: &DdCone) -> Vec<Vec<i128>> {
    let mut k: Vec<Vec<i128>> = c.rays().iter().map(|r| r.v.clone()).collect();
    k.sort();
    // Lineality only occurs early on; its canonical form is its reduced echelon basis.
    if !c.lineality().is_empty() {
        let rows: Vec<Vec<Rational>> = c.lineality().iter().map(|l| crate::linalg::to_rational_row(l)).collect();
        let sp = crate::linalg::Subspace::span(c.dim(), &rows);
        k.push(vec![i128::MIN]);
        for b in sp.basis() {
            k.push(crate::arith::clear_denominators(b).iter().map(|x| x.to_i128().unwrap_or(i128::MAX)).collect());
        }
    }
    k
}

/// Rays of the reduced Dressian `Dr_J / W_J`, by a breadth-first case split over
/// the fully supported 3-term relations inside a complement of `W_J` in `V_J`.
pub fn enumerate_rays(j: &MConvexSet, max_dim: usize) -> Result<RayReport> {
    enumerate_rays_with_budget(j, max_dim, DEFAULT_CONE_BUDGET)
}

pub fn enumerate_rays_with_budget(j: &MConvexSet, max_dim: usize, budget: usize) -> Result<RayReport> {
    let v = v_space(j)?;
    let w = w_space(j);
    let r = v.dim() - w.dim();
    if r > max_dim {
        return Err(Error::Resource(format!(
            "dim V/W = {r} exceeds max_dim = {max_dim}; supply verified rays from a file instead"
        )));
    }
    let pts: Vec<&ExponentVector> = j.points().iter().collect();
    let ech = w_echelon(&pts, j.n()).map_err(overflow)?;
    if r == 0 {
        return Ok(RayReport { rays: Vec::new(), complete: true, reduced_dim: 0, cones_visited: 0 });
    }
    let complement: Vec<Vec<i128>> = v
        .complement_of(&w)
        .iter()
        .map(|b| crate::arith::clear_denominators(b).iter().map(|x| x.to_i128().ok_or_else(|| overflow(Overflow))).collect())
        .collect::<Result<_>>()?;
    // Linear forms of the term sums in complement coordinates.
    let form = |a: usize, b: usize| -> Vec<i128> { complement.iter().map(|c| c[a] + c[b]).collect() };
    let mut triples: BTreeSet<Triple> = BTreeSet::new();
    for rel in three_term_relations(j) {
        if rel.supported_count() != 3 {
            continue;
        }
        let f: Vec<Vec<i128>> = rel.supported_pairs().map(|(a, b)| form(a, b)).collect();
        let t = triple_key([f[0].clone(), f[1].clone(), f[2].clone()]);
        if t.iter().all(|x| x.iter().all(|&y| y == 0)) {
            continue;
        }
        triples.insert(t);
    }
    let mut frontier: Vec<DdCone> = vec![DdCone::full(r)];
    let mut visited = 1usize;
    for t in &triples {
        let mut next: HashMap<Vec<Vec<i128>>, DdCone> = HashMap::new();
        for c in frontier {
            let pats: Vec<(Vec<i128>, Vec<i128>)> = (0..3).map(|k| pattern(t, k)).collect();
            let mut whole = false;
            for (eq, ineq) in &pats {
                if pattern_holds(&c, eq, ineq)? {
                    whole = true;
                    break;
                }
            }
            if whole {
                next.entry(cone_key(&c)).or_insert(c);
                continue;
            }
            for (eq, ineq) in &pats {
                let mut child = c.clone();
                child.add_equation(eq).map_err(overflow)?;
                child.add_inequality(ineq).map_err(overflow)?;
                visited += 1;
                if visited > budget {
                    return Err(Error::Resource(format!("cone budget {budget} exceeded")));
                }
                if !child.is_zero() {
                    next.entry(cone_key(&child)).or_insert(child);
                }
            }
        }
        frontier = next.into_values().collect();
    }
    let mut rays: BTreeSet<Vec<i128>> = BTreeSet::new();
    for c in &frontier {
        if !c.is_pointed() {
            return Err(Error::Internal("the reduced Dressian has a lineality space beyond W_J".into()));
        }
        for ray in c.rays() {
            let nu: Vec<i128> = (0..j.len())
                .map(|a| ray.v.iter().zip(&complement).map(|(y, c)| y * c[a]).sum())
                .collect();
            rays.insert(canonical_with(&ech, &nu)?);
        }
    }
    Ok(RayReport { rays: rays.into_iter().collect(), complete: true, reduced_dim: r, cones_visited: visited })
}

/// Verify externally supplied rays: each M-convex, nonzero modulo `W_J`, in
/// `V_J`, and no two positively proportional modulo `W_J`.
pub fn verify_rays(j: &MConvexSet, rays: &[MConvexFunction]) -> Result<RayReport> {
    let v = v_space(j)?;
    let w = w_space(j);
    let pts: Vec<&ExponentVector> = j.points().iter().collect();
    let ech = w_echelon(&pts, j.n()).map_err(overflow)?;
    let mut seen = BTreeSet::new();
    for (k, nu) in rays.iter().enumerate() {
        if nu.values.len() != j.len() {
            return Err(input_err!("ray {k} has the wrong length"));
        }
        if !is_m_convex_function(j, nu)? {
            return Err(Error::Precondition(format!("ray {k} is not M-convex")));
        }
        if !v.contains(&nu.values) {
            return Err(Error::Precondition(format!("ray {k} is not in V_J")));
        }
        let c = canonical_with(&ech, &nu.integer_values()?)?;
        if c.iter().all(|&x| x == 0) {
            return Err(Error::Precondition(format!("ray {k} lies in W_J")));
        }
        if !seen.insert(c) {
            return Err(Error::Precondition(format!("ray {k} duplicates an earlier ray modulo W_J")));
        }
    }
    Ok(RayReport { rays: seen.into_iter().collect(), complete: false, reduced_dim: v.dim() - w.dim(), cones_visited: 0 })
}

/// `λ·a − b ∈ W_J` for some `λ > 0`, decided by exact rational solving.
pub fn equivalent_mod_w(j: &MConvexSet, a: &MConvexFunction, b: &MConvexFunction) -> bool {
    let w = w_space(j);
    let mut basis = vec![a.values.clone()];
    basis.extend(w.basis().iter().cloned());
    match solve_in_basis(&basis, &b.values) {
        Some(coeffs) => coeffs[0].is_positive(),
        None => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

pub fn is_rigid(j: &MConvexSet, max_dim: usize) -> Result<Verdict> {
    match enumerate_rays(j, max_dim) {
        Ok(r) => Ok(if r.rays.is_empty() { Verdict::Yes } else { Verdict::No }),
        Err(Error::Resource(_)) => Ok(Verdict::Unknown),
        Err(e) => Err(e),
    }
}

/// No two rays span a 2-dimensional cone: every pairwise sum fails M-convexity.
pub fn is_fan_one_dimensional(j: &MConvexSet, rays: &[MConvexFunction]) -> Result<bool> {
    for (a, ra) in rays.iter().enumerate() {
        for rb in &rays[a + 1..] {
            if is_m_convex_function(j, &ra.add(rb))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::combinatorics::{build_named, is_m_convex, NamedKind};
    use crate::lorentzian::is_lorentzian;

    fn named(k: NamedKind) -> MConvexSet {
        build_named(&k).unwrap()
    }

    fn on(j: &MConvexSet, vals: &[(&[usize], i64)]) -> MConvexFunction {
        let mut v = vec![int(0); j.len()];
        for (idx, x) in vals {
            let mut p = vec![0u32; j.n()];
            for &i in *idx {
                p[i] += 1;
            }
            v[j.index_of(&p).unwrap()] = int(*x);
        }
        MConvexFunction::new(j, v).unwrap()
    }

    #[test]
    fn function_examples() {
        let u24 = named(NamedKind::Uniform { r: 2, n: 4 });
        assert!(is_m_convex_function(&u24, &MConvexFunction::zero(&u24)).unwrap());
        assert!(is_m_convex_function(&u24, &on(&u24, &[(&[0, 1], 1), (&[2, 3], 1)])).unwrap());
        assert!(!is_m_convex_function(&u24, &on(&u24, &[(&[0, 1], -1)])).unwrap());
    }

    #[test]
    fn polynomial_of_split() {
        let u24 = named(NamedKind::Uniform { r: 2, n: 4 });
        let nu = on(&u24, &[(&[0, 1], 1), (&[2, 3], 1)]);
        for t in [1.0, 5.0, 20.0] {
            let f = dressian_to_polynomial(&u24, &nu, t).unwrap();
            assert!(is_lorentzian(&f).unwrap().lorentzian);
        }
        let f = dressian_to_polynomial(&u24, &nu, 1.0).unwrap();
        assert!((f.coeff(&[1, 1, 0, 0]) - (-1f64).exp()).abs() < 1e-15);
        let bad = on(&u24, &[(&[0, 1], -1)]);
        assert!(!is_lorentzian(&dressian_to_polynomial(&u24, &bad, 20.0).unwrap()).unwrap().lorentzian);
    }

    #[test]
    fn subdivisions() {
        let u24 = named(NamedKind::Uniform { r: 2, n: 4 });
        let triv = induced_subdivision(&u24, &MConvexFunction::zero(&u24)).unwrap();
        assert_eq!(triv.cells, vec![(0..6).collect::<Vec<_>>()]);
        let split = induced_subdivision(&u24, &on(&u24, &[(&[0, 1], 1), (&[2, 3], 1)])).unwrap();
        assert_eq!(split.cells.len(), 2);
        let square: Vec<usize> = [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]
            .iter()
            .map(|p| u24.index_of(p).unwrap())
            .collect();
        for c in &split.cells {
            assert_eq!(c.len(), 5);
            assert!(square.iter().all(|s| c.contains(s)));
        }
        let u25 = named(NamedKind::Uniform { r: 2, n: 5 });
        let s = induced_subdivision(&u25, &on(&u25, &[(&[0, 1], 1)])).unwrap();
        assert_eq!(s.cells.len(), 2);
        for c in &s.cells {
            let sub = u25.subset(c).unwrap();
            assert!(is_m_convex(sub.points(), 5, 2).unwrap());
        }
    }

    #[test]
    fn u24_has_three_rays() {
        let u24 = named(NamedKind::Uniform { r: 2, n: 4 });
        let rep = enumerate_rays(&u24, DEFAULT_MAX_DIM).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.rays.len(), 3);
        let fs = rep.functions();
        for f in &fs {
            assert!(is_m_convex_function(&u24, f).unwrap());
        }
        assert!(is_fan_one_dimensional(&u24, &fs).unwrap());
    }

    #[test]
    fn u25_rays_match_split_oracle() {
        let u25 = named(NamedKind::Uniform { r: 2, n: 5 });
        let rep = enumerate_rays(&u25, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(rep.rays.len(), 10);
        let splits: Vec<MConvexFunction> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).map(|(a, b)| on(&u25, &[(&[a, b], 1)])).collect();
        let found = rep.functions();
        for s in &splits {
            assert!(is_m_convex_function(&u25, s).unwrap());
            assert_eq!(found.iter().filter(|f| equivalent_mod_w(&u25, f, s)).count(), 1);
        }
        assert!(!is_fan_one_dimensional(&u25, &found).unwrap());
    }

    #[test]
    fn rigid_fixtures() {
        for k in [NamedKind::Fano, NamedKind::Elliptic { n: 5 }] {
            assert_eq!(is_rigid(&named(k), DEFAULT_MAX_DIM).unwrap(), Verdict::Yes);
        }
        assert_eq!(is_rigid(&named(NamedKind::Uniform { r: 2, n: 4 }), DEFAULT_MAX_DIM).unwrap(), Verdict::No);
        assert_eq!(is_rigid(&named(NamedKind::Uniform { r: 2, n: 5 }), 2).unwrap(), Verdict::Unknown);
    }

    #[test]
    fn elliptic7_has_three_rays() {
        let t7 = named(NamedKind::Elliptic { n: 7 });
        let rep = enumerate_rays(&t7, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(rep.rays.len(), 3);
        let fs = rep.functions();
        assert!(is_fan_one_dimensional(&t7, &fs).unwrap());
        assert_eq!(verify_rays(&t7, &fs).unwrap().rays, rep.rays);
    }
}
