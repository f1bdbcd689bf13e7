//! Base polytopes, exact hulls, face lattices and the face ↔ subset dictionary.
//!
//! Faces are identified with the set of points of `J` they contain (not only
//! vertices), stored as bitsets over `J`'s canonical order. For a polytope this
//! is a lattice isomorphism, so inclusion of faces is inclusion of bitsets.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{ExponentVector, MConvexSet};
use crate::cone::dual_extreme_rays;
use crate::error::{Error, Result};
use crate::linalg::{IntEchelon, Overflow};

/// Default cap on the number of faces produced by one enumeration.
pub const DEFAULT_FACE_BUDGET: usize = 2_000_000;

/// `normal·x + offset ≥ 0` on the polytope, with equality exactly on `points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i128>,
    pub offset: i128,
    pub points: FixedBitSet,
}

#[derive(Debug, Clone)]
pub struct LatticePolytope {
    n: usize,
    points: Vec<ExponentVector>,
    dim: usize,
    facets: Vec<Facet>,
    vertices: Vec<usize>,
}

pub(crate) fn overflow(_: Overflow) -> Error {
    Error::Resource("integer overflow in exact hull computation".into())
}

pub(crate) fn as_i128(p: &[u32]) -> Vec<i128> {
    p.iter().map(|&x| i128::from(x)).collect()
}

/// Columns on which the projection of the points' affine hull is injective.
pub(crate) fn affine_frame(points: &[Vec<i128>]) -> Result<Vec<usize>> {
    let mut ech = IntEchelon::new();
    if let Some(p0) = points.first() {
        for p in &points[1..] {
            let diff: Vec<i128> = p.iter().zip(p0).map(|(a, b)| a - b).collect();
            ech.insert(&diff).map_err(overflow)?;
        }
    }
    let mut cols = ech.pivots;
    cols.sort_unstable();
    Ok(cols)
}

/// Facets of the convex hull of `points`, which must be affinely spanning in
/// their own coordinates. Extra rows with a leading zero are directions of
/// recession; a facet is tight on a direction when the direction lies in it.
pub(crate) fn hull_facets(points: &[Vec<i128>], directions: &[Vec<i128>]) -> Result<Vec<(Vec<i128>, FixedBitSet)>> {
    let mut rows: Vec<Vec<i128>> = points
        .iter()
        .map(|p| std::iter::once(1).chain(p.iter().copied()).collect())
        .collect();
    rows.extend(directions.iter().map(|d| std::iter::once(0).chain(d.iter().copied()).collect()));
    let cone = dual_extreme_rays(&rows).map_err(overflow)?;
    if !cone.is_pointed() {
        return Err(Error::Internal("hull input is not full-dimensional".into()));
    }
    Ok(cone.rays().iter().map(|r| (r.v.clone(), r.tight.clone())).collect())
}

fn restrict_bits(bits: &FixedBitSet, len: usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(len);
    out.extend(bits.ones().filter(|&i| i < len));
    out
}

impl LatticePolytope {
    pub fn new(n: usize, points: Vec<ExponentVector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Input("polytope of an empty point set".into()));
        }
        let ints: Vec<Vec<i128>> = points.iter().map(|p| as_i128(p)).collect();
        let frame = affine_frame(&ints)?;
        let dim = frame.len();
        let m = points.len();
        let mut facets = Vec::new();
        if dim > 0 {
            let projected: Vec<Vec<i128>> = ints.iter().map(|p| frame.iter().map(|&c| p[c]).collect()).collect();
            for (y, tight) in hull_facets(&projected, &[])? {
                let mut normal = vec![0; n];
                for (k, &c) in frame.iter().enumerate() {
                    normal[c] = y[k + 1];
                }
                facets.push(Facet { normal, offset: y[0], points: restrict_bits(&tight, m) });
            }
            facets.sort_by(|a, b| a.points.ones().cmp(b.points.ones()));
        }
        let mut poly = LatticePolytope { n, points, dim, facets, vertices: Vec::new() };
        poly.vertices = (0..m)
            .filter(|&i| {
                let mut s = FixedBitSet::with_capacity(m);
                s.insert(i);
                poly.closure(&s).count_ones(..) == 1
            })
            .collect();
        Ok(poly)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facet_sets(&self) -> Vec<FixedBitSet> {
        self.facets.iter().map(|f| f.points.clone()).collect()
    }

    fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.points.len());
        s.insert_range(..);
        s
    }

    /// Points of the smallest face containing `set`.
    pub fn closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.full_set();
        for f in &self.facets {
            if set.is_subset(&f.points) {
                out.intersect_with(&f.points);
            }
        }
        out
    }

    pub fn is_face_set(&self, set: &FixedBitSet) -> bool {
        set.count_ones(..) > 0 && self.closure(set) == *set
    }

    /// Dimension of the face spanned by `set`.
    pub fn set_dim(&self, set: &FixedBitSet) -> Result<usize> {
        let ints: Vec<Vec<i128>> = set.ones().map(|i| as_i128(&self.points[i])).collect();
        Ok(affine_frame(&ints)?.len())
    }

    pub fn face_lattice(&self) -> Result<FaceLattice> {
        self.face_lattice_with_budget(DEFAULT_FACE_BUDGET)
    }

    pub fn face_lattice_with_budget(&self, budget: usize) -> Result<FaceLattice> {
        let levels = descend_faces(vec![self.full_set()], self.dim, &self.facet_sets(), budget)?;
        Ok(FaceLattice::from_levels(self.points.len(), levels))
    }
}

pub fn base_polytope(j: &MConvexSet) -> Result<LatticePolytope> {
    LatticePolytope::new(j.n(), j.points().to_vec())
}

/// Facets of a face `f`: the inclusion-maximal proper nonempty intersections with facets.
fn facets_of_face(f: &FixedBitSet, facets: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let mut cands: Vec<FixedBitSet> = Vec::new();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    for g in facets {
        let mut c = f.clone();
        c.intersect_with(g);
        if c.count_ones(..) > 0 && c != *f && seen.insert(c.clone()) {
            cands.push(c);
        }
    }
    cands.sort_by_key(|c| std::cmp::Reverse(c.count_ones(..)));
    let mut kept: Vec<FixedBitSet> = Vec::new();
    for c in cands {
        if !kept.iter().any(|k| c.is_subset(k)) {
            kept.push(c);
        }
    }
    kept
}

/// All faces below the given top faces of dimension `top_dim`, level by level.
/// `facets` must contain every facet of the ambient polyhedron.
/// Returns `levels[i]` = faces of dimension `i`, sorted.
pub fn descend_faces(
    tops: Vec<FixedBitSet>,
    top_dim: usize,
    facets: &[FixedBitSet],
    budget: usize,
) -> Result<Vec<Vec<FixedBitSet>>> {
    let mut levels: Vec<Vec<FixedBitSet>> = vec![Vec::new(); top_dim + 1];
    let mut current: Vec<FixedBitSet> = {
        let set: HashSet<FixedBitSet> = tops.into_iter().collect();
        set.into_iter().collect()
    };
    let mut total = current.len();
    for dim in (0..=top_dim).rev() {
        current.sort_by(|a, b| a.ones().cmp(b.ones()));
        if dim > 0 {
            let next: HashSet<FixedBitSet> = current
                .par_iter()
                .flat_map_iter(|f| facets_of_face(f, facets))
                .collect();
            total += next.len();
            if total > budget {
                let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
                return Err(Error::Resource(format!(
                    "face budget {budget} exceeded at dimension {} (counts so far by dimension: {counts:?}, current level {})",
                    dim - 1,
                    current.len()
                )));
            }
            levels[dim] = std::mem::replace(&mut current, next.into_iter().collect());
        } else {
            levels[0] = std::mem::take(&mut current);
        }
    }
    Ok(levels)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceLattice {
    #[serde(skip)]
    pub universe: usize,
    /// Faces of dimension `i`, as bitsets over the point order.
    #[serde(skip)]
    pub levels: Vec<Vec<FixedBitSet>>,
    /// `f_i` for `i = 0..=dim`, the last entry being the polytope itself.
    pub f_vector: Vec<usize>,
}

impl FaceLattice {
    pub fn from_levels(universe: usize, levels: Vec<Vec<FixedBitSet>>) -> Self {
        let f_vector = levels.iter().map(Vec::len).collect();
        FaceLattice { universe, levels, f_vector }
    }

    pub fn dim(&self) -> usize {
        self.f_vector.len() - 1
    }

    pub fn len(&self) -> usize {
        self.f_vector.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn faces(&self) -> impl Iterator<Item = (usize, &FixedBitSet)> {
        self.levels.iter().enumerate().flat_map(|(d, l)| l.iter().map(move |f| (d, f)))
    }

    /// `Σ_i (-1)^i f_i` over all faces including the polytope itself; 1 for any polytope.
    pub fn euler_poincare(&self) -> i64 {
        self.f_vector.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }

    /// Face lists as sorted point-index lists, for reports.
    pub fn face_indices(&self) -> Vec<(usize, Vec<usize>)> {
        self.faces().map(|(d, f)| (d, f.ones().collect())).collect()
    }
}

pub fn face_lattice(p: &LatticePolytope) -> Result<FaceLattice> {
    p.face_lattice()
}

/// All points of `J` on the face.
pub fn face_to_subset(j: &MConvexSet, face: &FixedBitSet) -> Result<MConvexSet> {
    let idx: Vec<usize> = face.ones().collect();
    j.subset(&idx)
}

/// Whether `BP_{J_sub}` is a face of `BP_J` (requires `J_sub ⊆ J`).
pub fn is_face(j_sub: &MConvexSet, j: &MConvexSet) -> Result<bool> {
    let p = base_polytope(j)?;
    is_face_in(&p, j_sub)
}

pub fn is_face_in(p: &LatticePolytope, j_sub: &MConvexSet) -> Result<bool> {
    let mut set = FixedBitSet::with_capacity(p.points().len());
    for q in j_sub.points() {
        let i = p
            .points()
            .binary_search(q)
            .map_err(|_| Error::Input(format!("point {q:?} is not in the ambient set")))?;
        set.insert(i);
    }
    // The face spanned by J_sub must contain no other points of J.
    Ok(p.is_face_set(&set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{build_named, is_m_convex, NamedKind};

    fn named(k: NamedKind) -> MConvexSet {
        build_named(&k).unwrap()
    }

    #[test]
    fn octahedron() {
        let j = named(NamedKind::Uniform { r: 2, n: 4 });
        let p = base_polytope(&j).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.vertices().len(), 6);
        assert_eq!(p.facets().len(), 8);
        let fl = p.face_lattice().unwrap();
        assert_eq!(fl.f_vector, vec![6, 12, 8, 1]);
        assert_eq!(fl.euler_poincare(), 1);
    }

    #[test]
    fn simplices() {
        for (n, d) in [(4usize, 1u32), (3, 2), (2, 3), (1, 2)] {
            let j = named(NamedKind::Simplex { n, d });
            let p = base_polytope(&j).unwrap();
            assert_eq!(p.dim(), n - 1);
            assert_eq!(p.vertices().len(), n);
            let fl = p.face_lattice().unwrap();
            assert_eq!(fl.euler_poincare(), 1);
            assert_eq!(fl.f_vector[0], n);
        }
        let t = base_polytope(&named(NamedKind::Simplex { n: 4, d: 1 })).unwrap();
        assert_eq!(t.face_lattice().unwrap().f_vector, vec![4, 6, 4, 1]);
    }

    #[test]
    fn lattice_points_on_faces() {
        // Δ²₃ has the midpoints of its edges as non-vertex points.
        let j = named(NamedKind::Simplex { n: 3, d: 2 });
        let p = base_polytope(&j).unwrap();
        let fl = p.face_lattice().unwrap();
        assert_eq!(fl.f_vector, vec![3, 3, 1]);
        for (_, f) in fl.faces() {
            let sub = face_to_subset(&j, f).unwrap();
            assert!(is_m_convex(sub.points(), 3, 2).unwrap());
        }
        assert!(fl.levels[1].iter().all(|e| e.count_ones(..) == 3));
    }

    #[test]
    fn face_membership() {
        let j = named(NamedKind::Uniform { r: 2, n: 4 });
        let square = MConvexSet::new(4, 2, vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]).unwrap();
        assert!(!is_face(&square, &j).unwrap());
        let tri = MConvexSet::new(4, 2, vec![vec![1, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 1, 0]]).unwrap();
        assert!(is_face(&tri, &j).unwrap());
        assert!(is_face(&j, &j).unwrap());
    }

    #[test]
    fn matroid_vertices_are_all_points() {
        for k in [NamedKind::Fano, NamedKind::Elliptic { n: 7 }, NamedKind::Uniform { r: 3, n: 6 }] {
            let j = named(k);
            let p = base_polytope(&j).unwrap();
            assert_eq!(p.vertices().len(), j.len());
            assert_eq!(p.dim(), j.n() - 1);
            assert_eq!(p.face_lattice().unwrap().euler_poincare(), 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = base_polytope(&named(NamedKind::Uniform { r: 2, n: 4 })).unwrap();
        assert!(matches!(p.face_lattice_with_budget(5), Err(Error::Resource(_))));
    }
}
