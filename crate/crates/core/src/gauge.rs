//! The star-shaped ball model of `P L_J`.
//!
//! Log coefficients of Lorentzian polynomials with support `J` form a closed
//! set in `V_J` that is strongly star-shaped around `x_* = log N_t(f_J)`.
//! Modulo `ℝ1` this becomes a ball once every point is pushed out along its
//! ray by the gauge `ψ`. Everything here is double precision: the gauge is a
//! supremum over irrational scalings.
//!
//! Points of `V_J/ℝ1` are represented in `V0 = V_J ∩ {x_{α0} = 0}` where `α0`
//! is the first point of `J`. Coordinates are read off at the pivot columns of
//! the reduced echelon basis of `V0`, and `‖·‖` is the sup norm of those
//! coordinates.

use serde::Serialize;

use crate::arith::{rational_from_f64, rational_to_f64, Rational};
use crate::combinatorics::{ExponentVector, MConvexSet};
use crate::error::{input_err, Error, Result};
use crate::linalg::{to_rational_row, Subspace};
use crate::lorentzian::{congruence_inertia, float_inertia, is_lorentzian_tol, DEFAULT_EIGEN_TOL};
use crate::polynomial::{factorial_f64, HomogeneousPolynomial};
use crate::representations::degenerate_relations;

/// Probing stops once the displacement `u·(x − x_*)` reaches this sup norm.
/// Chosen so rescaled Hessian entries stay above the `f64` underflow threshold
/// `e^{-708}` for bases with small entries; a point where one underflows
/// anyway is reported as outside.
pub const DEFAULT_PROBE_BOUND: f64 = 300.0;
/// Smallest rescaled Hessian entry for which the float eigenvalue test is trusted.
const WIDE_RANGE: f64 = 1e-3;
/// Absolute tolerance on `ψ`.
pub const PSI_TOL: f64 = 1e-6;

/// Coordinates of a point of the closed unit ball, with the support it lives on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallPoint {
    pub n: usize,
    pub d: u32,
    pub support: Vec<ExponentVector>,
    pub coords: Vec<f64>,
    pub norm: f64,
    /// Gauge of the polynomial this point came from (`1` on the boundary).
    pub psi: f64,
    /// `ψ = 0` was reported because membership persisted to the probe bound.
    pub probe_limited: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Gauge {
    pub psi: f64,
    pub probe_limited: bool,
}

/// Fixed data for one support `J` and one base point parameter `t`.
#[derive(Debug, Clone)]
pub struct BallChart {
    j: MConvexSet,
    base: Vec<f64>,
    basis: Vec<Vec<f64>>,
    pivots: Vec<usize>,
    /// Per Hessian shift: `(row, column, index into J)` of its nonzero entries.
    hessians: Vec<Vec<(usize, usize, usize)>>,
    tol: f64,
    probe_bound: f64,
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

impl BallChart {
    pub fn new(j: &MConvexSet, t: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(input_err!("t must be positive, got {t}"));
        }
        let len = j.len();
        let mut eqs: Vec<Vec<Rational>> =
            degenerate_relations(j, false)?.iter().map(|b| to_rational_row(&b.log_equation(len))).collect();
        let mut e0 = vec![0i128; len];
        e0[0] = 1;
        eqs.push(to_rational_row(&e0));
        let v0 = Subspace::kernel(len, &eqs);
        let basis = v0.basis().iter().map(|r| r.iter().map(rational_to_f64).collect()).collect();
        let base = j.points().iter().map(|a| -t * factorial_f64(a).ln()).collect();
        let n = j.n();
        let mut hessians = Vec::new();
        if j.d() >= 2 {
            let mut shifts = std::collections::BTreeSet::new();
            for p in j.points() {
                for a in 0..n {
                    for b in a..n {
                        let mut s = p.clone();
                        if s[a] == 0 {
                            continue;
                        }
                        s[a] -= 1;
                        if s[b] == 0 {
                            continue;
                        }
                        s[b] -= 1;
                        shifts.insert(s);
                    }
                }
            }
            for s in shifts {
                let mut entries = Vec::new();
                for a in 0..n {
                    for b in a..n {
                        let mut p = s.clone();
                        p[a] += 1;
                        p[b] += 1;
                        if let Some(k) = j.index_of(&p) {
                            entries.push((a, b, k));
                        }
                    }
                }
                hessians.push(entries);
            }
        }
        Ok(BallChart {
            j: j.clone(),
            base,
            basis,
            pivots: v0.pivots().to_vec(),
            hessians,
            tol: DEFAULT_EIGEN_TOL,
            probe_bound: DEFAULT_PROBE_BOUND,
        })
    }

    pub fn with_probe_bound(mut self, bound: f64) -> Self {
        self.probe_bound = bound;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn support(&self) -> &MConvexSet {
        &self.j
    }

    /// Dimension of `V_J/ℝ1`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `log N_t(f_J)` on the points of `J`.
    pub fn base_point(&self) -> &[f64] {
        &self.base
    }

    /// The vector of `V0` with the given coordinates.
    pub fn vector(&self, coords: &[f64]) -> Vec<f64> {
        let mut v = vec![0.0; self.j.len()];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (x, r) in v.iter_mut().zip(row) {
                *x += c * r;
            }
        }
        v
    }

    /// Coordinates of `x − x_*` modulo `ℝ1`. Fails if `x` is not in `V_J`
    /// up to rounding.
    pub fn coordinates(&self, log_coeffs: &[f64]) -> Result<Vec<f64>> {
        if log_coeffs.len() != self.j.len() {
            return Err(input_err!("expected {} log coefficients, got {}", self.j.len(), log_coeffs.len()));
        }
        let y: Vec<f64> = log_coeffs.iter().zip(&self.base).map(|(x, b)| x - b).collect();
        let y: Vec<f64> = y.iter().map(|v| v - y[0]).collect();
        let coords: Vec<f64> = self.pivots.iter().map(|&p| y[p]).collect();
        let back = self.vector(&coords);
        let err = y.iter().zip(&back).fold(0.0f64, |a, (u, v)| a.max((u - v).abs()));
        if err > 1e-6 * (1.0 + sup_norm(&y)) {
            return Err(Error::Precondition(format!("log coefficients leave V_J by {err:e}")));
        }
        Ok(coords)
    }

    /// Membership of `x_* + y` in `log L_J`. The support is `J` by
    /// construction, so only the Hessians are tested, each rescaled by its
    /// largest entry to keep far points from underflowing.
    ///
    /// Far from `x_*` the entries of one Hessian span many orders of
    /// magnitude and a relative eigenvalue threshold erases the small ones,
    /// which makes points outside look Lorentzian again. Those Hessians, and
    /// marginal float verdicts, are decided by exact inertia of the rounded
    /// entries instead.
    pub fn contains(&self, y: &[f64]) -> bool {
        let n = self.j.n();
        self.hessians.iter().all(|entries| {
            let logs: Vec<f64> = entries.iter().map(|&(_, _, k)| self.base[k] + y[k]).collect();
            let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mut h = vec![vec![0.0; n]; n];
            let mut smallest = 1.0f64;
            for (&(a, b, _), l) in entries.iter().zip(&logs) {
                let c = (l - top).exp();
                smallest = smallest.min(c);
                h[a][b] = c;
                h[b][a] = c;
            }
            if smallest >= WIDE_RANGE {
                let rep = float_inertia(&h, self.tol);
                if !rep.marginal {
                    return rep.inertia.positives <= 1;
                }
            }
            // Underflow to zero would silently change the support.
            if smallest == 0.0 {
                return false;
            }
            let exact: Vec<Vec<Rational>> =
                h.iter().map(|row| row.iter().map(|&x| rational_from_f64(x).expect("finite entry")).collect()).collect();
            congruence_inertia(&exact).positives <= 1
        })
    }

    /// `ψ(x_* + y)` for `y ∈ V0` given in coordinates.
    pub fn gauge(&self, coords: &[f64]) -> Gauge {
        let norm = sup_norm(coords);
        if norm == 0.0 {
            return Gauge { psi: 0.0, probe_limited: false };
        }
        let y = self.vector(coords);
        let at = |u: f64| self.contains(&y.iter().map(|v| u * v).collect::<Vec<_>>());
        let limit = self.probe_bound / norm;
        // ψ is the reciprocal of the largest admissible scaling u.
        let (mut lo, mut hi) = (0.0, 1.0);
        while at(hi) {
            lo = hi;
            if hi >= limit {
                return Gauge { psi: 0.0, probe_limited: true };
            }
            hi = (2.0 * hi).min(limit);
        }
        if lo == 0.0 {
            lo = hi / 2.0;
            while !at(lo) {
                hi = lo;
                lo /= 2.0;
                if lo < 1e-300 {
                    return Gauge { psi: f64::INFINITY, probe_limited: false };
                }
            }
        }
        for _ in 0..200 {
            if 1.0 / lo - 1.0 / hi < 0.1 * PSI_TOL {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if at(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Gauge { psi: 1.0 / lo, probe_limited: false }
    }

    /// `φ(x) = y / (1 − ψ + ‖y‖)` with `y = x − x_*`.
    pub fn to_ball(&self, log_coeffs: &[f64]) -> Result<BallPoint> {
        let y = self.coordinates(log_coeffs)?;
        let g = self.gauge(&y);
        if g.psi > 1.0 + PSI_TOL {
            return Err(Error::Precondition(format!("point is outside log L_J (ψ = {})", g.psi)));
        }
        let denom = 1.0 - g.psi.min(1.0) + sup_norm(&y);
        let coords: Vec<f64> = if denom > 0.0 { y.iter().map(|v| v / denom).collect() } else { y };
        Ok(BallPoint {
            n: self.j.n(),
            d: self.j.d(),
            support: self.j.points().to_vec(),
            norm: sup_norm(&coords),
            coords,
            psi: g.psi.min(1.0),
            probe_limited: g.probe_limited,
        })
    }

    /// `x = x_* + b / (1 + ψ(b) − ‖b‖)` as log coefficients on `J`.
    pub fn from_ball(&self, coords: &[f64]) -> Result<Vec<f64>> {
        if coords.len() != self.dim() {
            return Err(input_err!("expected {} ball coordinates, got {}", self.dim(), coords.len()));
        }
        let norm = sup_norm(coords);
        if norm > 1.0 + 1e-9 {
            return Err(Error::Domain(format!("ball coordinates have norm {norm} > 1")));
        }
        let g = self.gauge(coords);
        let denom = 1.0 + g.psi - norm;
        if denom <= 1e-12 {
            return Err(Error::Domain("a Dressian direction on the boundary sphere has no preimage".into()));
        }
        let y: Vec<f64> = self.vector(coords).iter().map(|v| v / denom).collect();
        if y.iter().any(|v| !v.is_finite()) || !self.contains(&y) {
            return Err(Error::Domain("preimage is not Lorentzian".into()));
        }
        Ok(y.iter().zip(&self.base).map(|(v, b)| v + b).collect())
    }

    /// The polynomial with the given log coefficients on `J`.
    pub fn polynomial(&self, log_coeffs: &[f64]) -> Result<HomogeneousPolynomial<f64>> {
        let terms: Vec<(ExponentVector, f64)> =
            self.j.points().iter().cloned().zip(log_coeffs.iter().map(|x| x.exp())).collect();
        if terms.iter().any(|(_, c)| !c.is_finite() || *c == 0.0) {
            return Err(Error::Domain("coefficients overflow double precision".into()));
        }
        HomogeneousPolynomial::from_terms(self.j.n(), self.j.d(), terms)
    }
}

fn chart_for(f: &HomogeneousPolynomial<f64>, t: f64) -> Result<(BallChart, Vec<f64>)> {
    let rep = is_lorentzian_tol(f, DEFAULT_EIGEN_TOL)?;
    if !rep.lorentzian {
        return Err(Error::Precondition(format!("polynomial is not Lorentzian: {:?}", rep.certificate)));
    }
    let j = f.support_set()?;
    let logs = j.points().iter().map(|a| f.coeff(a).ln()).collect();
    Ok((BallChart::new(&j, t)?, logs))
}

/// `ψ(log f)` with base point `log N_t(f_J)`.
pub fn gauge_psi(f: &HomogeneousPolynomial<f64>, t: f64) -> Result<Gauge> {
    let (chart, logs) = chart_for(f, t)?;
    let g = chart.gauge(&chart.coordinates(&logs)?);
    Ok(Gauge { psi: g.psi.min(1.0), probe_limited: g.probe_limited })
}

pub fn ball_coordinates(f: &HomogeneousPolynomial<f64>, t: f64) -> Result<BallPoint> {
    let (chart, logs) = chart_for(f, t)?;
    chart.to_ball(&logs)
}

/// Inverse of [`ball_coordinates`], normalized so that the coefficient at the
/// first point of the support equals its value at the base point.
pub fn inverse_ball(b: &BallPoint, t: f64) -> Result<HomogeneousPolynomial<f64>> {
    let j = MConvexSet::new(b.n, b.d, b.support.clone())?;
    let chart = BallChart::new(&j, t)?;
    let logs = chart.from_ball(&b.coords)?;
    chart.polynomial(&logs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{build_named, generating_polynomial, NamedKind};
    use crate::dressian::{dressian_to_polynomial, MConvexFunction};
    use crate::lorentzian::{grassmann_map, MatrixEntry};

    fn u24() -> MConvexSet {
        build_named(&NamedKind::Uniform { r: 2, n: 4 }).unwrap()
    }

    #[test]
    fn base_point_is_the_origin() {
        let f = generating_polynomial(&u24()).to_f64();
        let b = ball_coordinates(&f, 1.0).unwrap();
        assert_eq!(b.coords.len(), 5);
        assert_eq!(b.norm, 0.0);
        assert_eq!(b.psi, 0.0);
        let g = inverse_ball(&b, 1.0).unwrap();
        for (a, c) in g.terms() {
            assert!((c - f.coeff(a)).abs() < 1e-12);
        }
    }

    /// Far along a ray that does leave, thresholded eigenvalues used to
    /// report the point as inside again and the gauge collapsed to 0.
    #[test]
    fn far_points_stay_outside() {
        let chart = BallChart::new(&u24(), 1.0).unwrap();
        let c = [0.5792, 0.2379, 0.3314, -0.5881, 0.5768];
        let scaled = |s: f64| c.iter().map(|x| x * s).collect::<Vec<_>>();
        for s in [16.0, 17.6, 100.0, 400.0] {
            assert!(!chart.contains(&chart.vector(&scaled(s))), "scale {s}");
        }
        let g1 = chart.gauge(&c);
        let g2 = chart.gauge(&scaled(1.1));
        assert!(!g2.probe_limited);
        assert!((g2.psi - 1.1 * g1.psi).abs() < 1e-5, "{} vs {}", g2.psi, 1.1 * g1.psi);
    }

    #[test]
    fn split_direction_never_leaves() {
        let j = u24();
        let mut v = vec![0i128; j.len()];
        v[j.index_of(&[1, 1, 0, 0]).unwrap()] = 1;
        let f = dressian_to_polynomial(&j, &MConvexFunction::from_integers(&v), 1.0).unwrap();
        let g = gauge_psi(&f, 1.0).unwrap();
        assert_eq!(g.psi, 0.0);
        assert!(g.probe_limited);
    }

    #[test]
    fn real_grassmannian_lands_on_the_boundary() {
        let a: Vec<Vec<MatrixEntry>> = [[1, 0, 1, 2], [0, 1, 3, -1]]
            .iter()
            .map(|r| r.iter().map(|&x| MatrixEntry::Rational(Rational::from_integer(x.into()))).collect())
            .collect();
        let f = grassmann_map(&a, 2.0).unwrap().to_f64();
        let g = gauge_psi(&f, 1.0).unwrap();
        assert!((g.psi - 1.0).abs() < 1e-6, "psi = {}", g.psi);
        let b = ball_coordinates(&f, 1.0).unwrap();
        assert!((b.norm - 1.0).abs() < 1e-6);
    }

    #[test]
    fn oracle_agrees_with_the_lorentzian_test() {
        let j = u24();
        let chart = BallChart::new(&j, 1.0).unwrap();
        let mut seen = [false; 2];
        for k in 0..40 {
            let coords: Vec<f64> = (0..chart.dim()).map(|i| ((k * 7 + i * 3) % 11) as f64 / 3.0 - 1.5).collect();
            let y = chart.vector(&coords);
            let f = chart.polynomial(&y.iter().zip(chart.base_point()).map(|(a, b)| a + b).collect::<Vec<_>>()).unwrap();
            let inside = chart.contains(&y);
            assert_eq!(inside, is_lorentzian_tol(&f, DEFAULT_EIGEN_TOL).unwrap().lorentzian);
            seen[inside as usize] = true;
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn round_trip_inside() {
        let j = u24();
        let chart = BallChart::new(&j, 1.0).unwrap();
        let coords = [0.3, -0.2, 0.1, 0.05, -0.4];
        let x = chart.from_ball(&coords).unwrap();
        let b = chart.to_ball(&x).unwrap();
        for (u, v) in b.coords.iter().zip(coords) {
            assert!((u - v).abs() < 1e-5);
        }
    }

    #[test]
    fn boundary_sphere_dressian_direction_has_no_preimage() {
        let j = u24();
        let chart = BallChart::new(&j, 1.0).unwrap();
        let mut nu = vec![0.0; j.len()];
        nu[j.index_of(&[1, 1, 0, 0]).unwrap()] = -1.0;
        let c = chart.coordinates(&nu.iter().zip(chart.base_point()).map(|(a, b)| a + b).collect::<Vec<_>>()).unwrap();
        let s = sup_norm(&c);
        let unit: Vec<f64> = c.iter().map(|x| x / s).collect();
        assert!(matches!(chart.from_ball(&unit), Err(Error::Domain(_))));
    }
}
