//! Double description of polyhedral cones `{x : A x ≥ 0, E x = 0}` over the integers.
//!
//! A cone is kept as `L + cone(R)` with `L` its lineality space. Constraints
//! are added one at a time. Every ray records which inequalities it makes
//! tight. Two rays are combined only if they are adjacent, which is decided
//! combinatorially: no third ray is tight on every inequality that both are
//! tight on.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::linalg::{dot_i128, normalize_i128, rank_i128, Overflow};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdRay {
    pub v: Vec<i128>,
    /// Indices of the inequalities this ray satisfies with equality.
    pub tight: FixedBitSet,
}

#[derive(Debug, Clone)]
pub struct DdCone {
    dim: usize,
    lineality: Vec<Vec<i128>>,
    rays: Vec<DdRay>,
    inequalities: usize,
}

fn combine(a: i128, v: &[i128], b: i128, w: &[i128]) -> Result<Vec<i128>, Overflow> {
    let mut out = Vec::with_capacity(v.len());
    for (&x, &y) in v.iter().zip(w) {
        let l = a.checked_mul(x).ok_or(Overflow)?;
        let r = b.checked_mul(y).ok_or(Overflow)?;
        out.push(l.checked_sub(r).ok_or(Overflow)?);
    }
    normalize_i128(&mut out);
    Ok(out)
}

impl DdCone {
    /// The whole space `R^dim`.
    pub fn full(dim: usize) -> Self {
        let lineality = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                e
            })
            .collect();
        DdCone { dim, lineality, rays: Vec::new(), inequalities: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[DdRay] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<i128>] {
        &self.lineality
    }

    /// Number of inequalities added so far (the width of the tight sets).
    pub fn inequality_count(&self) -> usize {
        self.inequalities
    }

    /// The cone is the origin.
    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the linear span of the cone.
    pub fn span_dim(&self) -> usize {
        let rows: Vec<Vec<i128>> = self.lineality.iter().chain(self.rays.iter().map(|r| &r.v)).cloned().collect();
        rank_i128(&rows, self.dim)
    }

    /// Intersect with `a·x ≥ 0`.
    pub fn add_inequality(&mut self, a: &[i128]) -> Result<(), Overflow> {
        self.add(a, true)
    }

    /// Intersect with `a·x = 0`.
    pub fn add_equation(&mut self, a: &[i128]) -> Result<(), Overflow> {
        self.add(a, false)
    }

    fn add(&mut self, a: &[i128], inequality: bool) -> Result<(), Overflow> {
        assert_eq!(a.len(), self.dim, "constraint length");
        let idx = self.inequalities;
        if inequality {
            self.inequalities += 1;
            for r in &mut self.rays {
                r.tight.grow(self.inequalities);
            }
        }
        let mut pick = None;
        for (k, l) in self.lineality.iter().enumerate() {
            let s = dot_i128(a, l)?;
            if s != 0 {
                pick = Some((k, s));
                break;
            }
        }
        if let Some((k, s)) = pick {
            let mut l0 = self.lineality.swap_remove(k);
            let s = if s < 0 {
                l0.iter_mut().for_each(|x| *x = -*x);
                -s
            } else {
                s
            };
            // Move the remaining generators into a·x = 0 along l0.
            let mut lin = Vec::with_capacity(self.lineality.len());
            for l in &self.lineality {
                let t = dot_i128(a, l)?;
                lin.push(if t == 0 { l.clone() } else { combine(s, l, t, &l0)? });
            }
            self.lineality = lin;
            for r in &mut self.rays {
                let t = dot_i128(a, &r.v)?;
                if t != 0 {
                    r.v = combine(s, &r.v, t, &l0)?;
                }
                if inequality {
                    r.tight.insert(idx);
                }
            }
            if inequality {
                let mut tight = FixedBitSet::with_capacity(self.inequalities);
                tight.insert_range(..idx);
                self.rays.push(DdRay { v: l0, tight });
            }
            return Ok(());
        }
        let values: Vec<i128> = self.rays.iter().map(|r| dot_i128(a, &r.v)).collect::<Result<_, _>>()?;
        let pos: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..self.rays.len()).filter(|&i| values[i] < 0).collect();
        if neg.is_empty() && (inequality || pos.is_empty()) {
            if inequality {
                for (r, &v) in self.rays.iter_mut().zip(&values) {
                    if v == 0 {
                        r.tight.insert(idx);
                    }
                }
            }
            return Ok(());
        }
        let pointed = self.span_dim() - self.lineality.len();
        let threshold = pointed.saturating_sub(2);
        let rays = &self.rays;
        let combos: Vec<Result<Vec<DdRay>, Overflow>> = pos
            .par_iter()
            .map(|&p| {
                let mut out = Vec::new();
                for &n in &neg {
                    let mut common = rays[p].tight.clone();
                    common.intersect_with(&rays[n].tight);
                    if common.count_ones(..) < threshold {
                        continue;
                    }
                    let blocked = rays
                        .iter()
                        .enumerate()
                        .any(|(k, r)| k != p && k != n && common.is_subset(&r.tight));
                    if blocked {
                        continue;
                    }
                    let v = combine(values[p], &rays[n].v, values[n], &rays[p].v)?;
                    let mut tight = common;
                    if inequality {
                        tight.insert(idx);
                    }
                    out.push(DdRay { v, tight });
                }
                Ok(out)
            })
            .collect();
        let mut next = Vec::new();
        for (i, r) in self.rays.iter().enumerate() {
            let keep = values[i] == 0 || (inequality && values[i] > 0);
            if keep {
                let mut r = r.clone();
                if inequality && values[i] == 0 {
                    r.tight.insert(idx);
                }
                next.push(r);
            }
        }
        for c in combos {
            next.extend(c?);
        }
        self.rays = next;
        Ok(())
    }
}

/// Facet inequalities of the cone generated by `rows`, i.e. the extreme rays
/// of the dual cone `{y : row·y ≥ 0}`. The rows must span their ambient space.
pub fn dual_extreme_rays(rows: &[Vec<i128>]) -> Result<DdCone, Overflow> {
    let dim = rows.first().map_or(0, |r| r.len());
    // Independent rows first, so the lineality phase ends as early as possible.
    let mut order: Vec<usize> = Vec::with_capacity(rows.len());
    let mut ech = crate::linalg::IntEchelon::new();
    for (i, r) in rows.iter().enumerate() {
        if ech.insert(r)? {
            order.push(i);
        }
    }
    let chosen: std::collections::HashSet<usize> = order.iter().copied().collect();
    order.extend((0..rows.len()).filter(|i| !chosen.contains(i)));
    let mut permuted = DdCone::full(dim);
    for &i in &order {
        permuted.add_inequality(&rows[i])?;
    }
    // Restore the tight sets to the caller's row order.
    let mut inverse = vec![0; rows.len()];
    for (pos, &i) in order.iter().enumerate() {
        inverse[pos] = i;
    }
    for r in &mut permuted.rays {
        let mut t = FixedBitSet::with_capacity(rows.len());
        for pos in r.tight.ones() {
            t.insert(inverse[pos]);
        }
        r.tight = t;
    }
    Ok(permuted)
}
