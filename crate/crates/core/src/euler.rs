//! Initial subsets, the `(g_i)` and `(f_ij)` tallies, and Euler characteristics
//! of closed Lorentzian strata.
//!
//! With `m` rays in the reduced Dressian,
//! `χ = Σ_i (−1)^i (g_i + Σ_j f_ij (1 − j))`, where `g_i` counts initial
//! subsets of dimension `i` that are not faces of `BP_J`, and `f_ij` counts
//! faces of dimension `i` onto which the rays restrict to `j` distinct rays
//! modulo `W_{J'}`.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{ExponentVector, MConvexSet};
use crate::dressian::{canonical_with, is_fan_one_dimensional, is_rigid, LiftedHull, MConvexFunction, RayReport, Verdict};
use crate::error::{Error, Result};
use crate::polytopes::{base_polytope, overflow, DEFAULT_FACE_BUDGET};
use crate::representations::{v_space, w_echelon, w_space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialSource {
    /// A face of `BP_J`.
    Face,
    /// First produced by the subdivision of the ray with this index.
    Subdivision(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialSubset {
    /// Indices into `J`.
    pub points: Vec<usize>,
    pub dim: usize,
    pub is_face: bool,
    pub source: InitialSource,
}

fn sorted_bits(v: &mut [(FixedBitSet, usize)]) {
    v.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.ones().cmp(b.0.ones())));
}

struct InitialData {
    dim: usize,
    faces: Vec<(FixedBitSet, usize)>,
    others: Vec<(FixedBitSet, usize, usize)>,
}

fn collect_initial(j: &MConvexSet, rays: &[MConvexFunction], budget: usize) -> Result<InitialData> {
    let p = base_polytope(j)?;
    let lattice = p.face_lattice_with_budget(budget)?;
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut faces: Vec<(FixedBitSet, usize)> = Vec::new();
    for (d, f) in lattice.faces() {
        index.insert(f.clone(), d);
        faces.push((f.clone(), d));
    }
    let mut others: Vec<(FixedBitSet, usize, usize)> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    for (k, nu) in rays.iter().enumerate() {
        let hull = LiftedHull::new(&p, &nu.integer_values()?)?;
        for (d, level) in hull.bounded_faces(budget)?.into_iter().enumerate() {
            for f in level {
                if let Some(&fd) = index.get(&f) {
                    if fd != d {
                        return Err(Error::Internal(format!("face dimension mismatch ({fd} vs {d})")));
                    }
                    continue;
                }
                match seen.get(&f) {
                    Some(&sd) if sd != d => {
                        return Err(Error::Internal(format!("cell dimension mismatch ({sd} vs {d})")));
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(f.clone(), d);
                        others.push((f, d, k));
                    }
                }
            }
        }
        if faces.len() + others.len() > budget {
            return Err(Error::Resource(format!("initial subset budget {budget} exceeded")));
        }
    }
    sorted_bits(&mut faces);
    others.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.ones().cmp(b.0.ones())));
    Ok(InitialData { dim: p.dim(), faces, others })
}

/// All initial subsets: faces of `BP_J` and faces of the cells of each ray's subdivision.
pub fn initial_subsets(j: &MConvexSet, rays: &[MConvexFunction]) -> Result<Vec<InitialSubset>> {
    let data = collect_initial(j, rays, DEFAULT_FACE_BUDGET)?;
    let mut out: Vec<InitialSubset> = data
        .faces
        .into_iter()
        .map(|(f, d)| InitialSubset { points: f.ones().collect(), dim: d, is_face: true, source: InitialSource::Face })
        .collect();
    out.extend(data.others.into_iter().map(|(f, d, k)| InitialSubset {
        points: f.ones().collect(),
        dim: d,
        is_face: false,
        source: InitialSource::Subdivision(k),
    }));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tallies {
    /// `g[i]`, `i = 0..=dim BP_J`.
    pub g: Vec<usize>,
    /// `f[i][j]`, `j = 0..=m`.
    pub f: Vec<Vec<usize>>,
}

impl Tallies {
    pub fn chi(&self) -> i64 {
        let mut chi = 0i64;
        for (i, (g, row)) in self.g.iter().zip(&self.f).enumerate() {
            let mut s = *g as i64;
            for (jj, &c) in row.iter().enumerate() {
                s += c as i64 * (1 - jj as i64);
            }
            chi += if i % 2 == 0 { s } else { -s };
        }
        chi
    }

    /// `Σ_i (−1)^i Σ_j f_ij`, the Euler characteristic of `BP_J` (always 1).
    pub fn face_euler(&self) -> i64 {
        self.f
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let s: i64 = row.iter().map(|&c| c as i64).sum();
                if i % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .sum()
    }
}

/// Number of distinct nonzero rays among the restrictions to `face`, modulo `W_face`.
pub fn restricted_ray_count(points: &[ExponentVector], n: usize, face: &FixedBitSet, rays: &[Vec<i128>]) -> Result<usize> {
    let idx: Vec<usize> = face.ones().collect();
    let pts: Vec<&ExponentVector> = idx.iter().map(|&i| &points[i]).collect();
    let ech = w_echelon(&pts, n).map_err(overflow)?;
    let mut images = BTreeSet::new();
    for r in rays {
        let restricted: Vec<i128> = idx.iter().map(|&i| r[i]).collect();
        let c = canonical_with(&ech, &restricted)?;
        if c.iter().any(|&x| x != 0) {
            images.insert(c);
        }
    }
    Ok(images.len())
}

pub fn tallies(j: &MConvexSet, rays: &[MConvexFunction]) -> Result<Tallies> {
    tallies_with_budget(j, rays, DEFAULT_FACE_BUDGET)
}

pub fn tallies_with_budget(j: &MConvexSet, rays: &[MConvexFunction], budget: usize) -> Result<Tallies> {
    if !is_fan_one_dimensional(j, rays)? {
        return Err(Error::Precondition("the rays span a cone of dimension two or more".into()));
    }
    let data = collect_initial(j, rays, budget)?;
    let m = rays.len();
    let ints: Vec<Vec<i128>> = rays.iter().map(MConvexFunction::integer_values).collect::<Result<_>>()?;
    let counts: Vec<(usize, usize)> = data
        .faces
        .par_iter()
        .map(|(f, d)| Ok((*d, restricted_ray_count(j.points(), j.n(), f, &ints)?)))
        .collect::<Result<_>>()?;
    let mut f = vec![vec![0usize; m + 1]; data.dim + 1];
    for (d, c) in counts {
        f[d][c] += 1;
    }
    let mut g = vec![0usize; data.dim + 1];
    for (_, d, _) in &data.others {
        g[*d] += 1;
    }
    let t = Tallies { g, f };
    if t.face_euler() != 1 {
        return Err(Error::Internal(format!("faces of BP_J have Euler characteristic {}", t.face_euler())));
    }
    Ok(t)
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerReport {
    pub g: Vec<usize>,
    pub f: Vec<Vec<usize>>,
    pub chi: i64,
    pub rays: usize,
    pub complete: bool,
    pub runtime_ms: u128,
}

pub fn euler_characteristic(j: &MConvexSet, rays: &RayReport) -> Result<EulerReport> {
    let start = Instant::now();
    let t = tallies(j, &rays.functions())?;
    Ok(EulerReport {
        chi: t.chi(),
        g: t.g,
        f: t.f,
        rays: rays.rays.len(),
        complete: rays.complete,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidReport {
    pub chi: i64,
    /// `Σ_F (−1)^{dim F}` over all faces of `BP_J`.
    pub face_sum: i64,
    pub f_vector: Vec<usize>,
}

pub fn rigid_euler(j: &MConvexSet, max_dim: usize) -> Result<RigidReport> {
    match is_rigid(j, max_dim)? {
        Verdict::Yes => {}
        Verdict::No => return Err(Error::Precondition("the set is not rigid".into())),
        Verdict::Unknown => return Err(Error::Precondition("rigidity could not be decided within max_dim".into())),
    }
    let lattice = base_polytope(j)?.face_lattice()?;
    let face_sum = lattice.euler_poincare();
    if face_sum != 1 {
        return Err(Error::Internal(format!("faces of BP_J have Euler characteristic {face_sum}")));
    }
    Ok(RigidReport { chi: 1, face_sum, f_vector: lattice.f_vector })
}

#[derive(Debug, Clone, Serialize)]
pub struct StableEulerReport {
    pub chi: i64,
    pub f_vector: Vec<usize>,
    /// Faces per dimension on which restriction `V/W → V_F/W_F` is not injective.
    pub non_injective: Vec<usize>,
    /// Not machine-checked: the stable stratum is two rescaling orbits.
    pub assumption: &'static str,
    pub runtime_ms: u128,
}

pub const TWO_ORBIT_ASSUMPTION: &str = "the stable stratum consists of exactly two rescaling orbits";

/// `χ = 2 − Σ_F (−1)^{dim F}` over faces `F` with non-injective restriction.
pub fn two_orbit_stable_euler(m: &MConvexSet, max_dim: usize) -> Result<StableEulerReport> {
    let start = Instant::now();
    let v = v_space(m)?;
    let w = w_space(m);
    if v.dim() - w.dim() != 1 {
        return Err(Error::Precondition(format!("dim V/W = {} but the formula needs 1", v.dim() - w.dim())));
    }
    if is_rigid(m, max_dim)? != Verdict::Yes {
        return Err(Error::Precondition("the set is not certified rigid".into()));
    }
    // With dim V/W = 1, restriction is injective iff a generator survives modulo W_F.
    let gen = v.complement_of(&w).pop().ok_or_else(|| Error::Internal("empty complement".into()))?;
    let gen: Vec<i128> = crate::arith::clear_denominators(&gen)
        .iter()
        .map(|x| num_traits::ToPrimitive::to_i128(x).ok_or_else(|| Error::Resource("generator overflow".into())))
        .collect::<Result<_>>()?;
    let lattice = base_polytope(m)?.face_lattice()?;
    let flags: Vec<(usize, bool)> = lattice
        .faces()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(d, f)| Ok((*d, restricted_ray_count(m.points(), m.n(), f, std::slice::from_ref(&gen))? == 0)))
        .collect::<Result<_>>()?;
    let mut non_injective = vec![0usize; lattice.dim() + 1];
    for (d, bad) in flags {
        if bad {
            non_injective[d] += 1;
        }
    }
    let alt: i64 = non_injective.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
    Ok(StableEulerReport {
        chi: 2 - alt,
        f_vector: lattice.f_vector,
        non_injective,
        assumption: TWO_ORBIT_ASSUMPTION,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{build_named, is_m_convex, NamedKind};
    use crate::dressian::{enumerate_rays, DEFAULT_MAX_DIM};

    fn named(k: NamedKind) -> MConvexSet {
        build_named(&k).unwrap()
    }

    #[test]
    fn u24_pipeline() {
        let j = named(NamedKind::Uniform { r: 2, n: 4 });
        let rays = enumerate_rays(&j, DEFAULT_MAX_DIM).unwrap();
        let rep = euler_characteristic(&j, &rays).unwrap();
        assert_eq!(rep.g, vec![0, 0, 3, 6]);
        assert_eq!(rep.f, vec![vec![6, 0, 0, 0], vec![12, 0, 0, 0], vec![8, 0, 0, 0], vec![0, 0, 0, 1]]);
        assert_eq!(rep.chi, 1);
        let init = initial_subsets(&j, &rays.functions()).unwrap();
        assert_eq!(init.len(), 36);
        for s in &init {
            let sub = j.subset(&s.points).unwrap();
            assert!(is_m_convex(sub.points(), 4, 2).unwrap());
        }
    }

    #[test]
    fn rigid_agrees_with_pipeline() {
        for k in [NamedKind::Fano, NamedKind::Elliptic { n: 5 }] {
            let j = named(k);
            assert_eq!(rigid_euler(&j, DEFAULT_MAX_DIM).unwrap().chi, 1);
            let rays = enumerate_rays(&j, DEFAULT_MAX_DIM).unwrap();
            assert!(rays.rays.is_empty());
            let rep = euler_characteristic(&j, &rays).unwrap();
            assert_eq!(rep.chi, 1);
            assert!(rep.g.iter().all(|&x| x == 0));
        }
        assert!(rigid_euler(&named(NamedKind::Uniform { r: 2, n: 4 }), DEFAULT_MAX_DIM).is_err());
    }
}
