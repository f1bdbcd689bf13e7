//! Exact linear algebra over the rationals.
//!
//! Elimination runs fraction-free on `i128` rows (gcd-normalised after every
//! step) and falls back to arbitrary precision rationals when an intermediate
//! value overflows. Results are always returned as reduced row echelon forms,
//! which makes subspaces canonical: two spans are equal iff their reduced
//! bases are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{clear_denominators, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

/// Divide by the gcd of the entries so that the first nonzero entry keeps its sign.
pub fn normalize_i128(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// `a*v - b*w`, checked.
fn combine(a: i128, v: &[i128], b: i128, w: &[i128]) -> Result<Vec<i128>, Overflow> {
    v.iter()
        .zip(w)
        .map(|(&x, &y)| {
            let l = a.checked_mul(x).ok_or(Overflow)?;
            let r = b.checked_mul(y).ok_or(Overflow)?;
            l.checked_sub(r).ok_or(Overflow)
        })
        .collect()
}

pub fn dot_i128(a: &[i128], b: &[i128]) -> Result<i128, Overflow> {
    let mut acc = 0i128;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc.checked_add(x.checked_mul(y).ok_or(Overflow)?).ok_or(Overflow)?;
    }
    Ok(acc)
}

/// Incrementally built integer row echelon form. Every stored row is
/// primitive with a positive pivot, and has zeros in the pivot columns of all
/// rows inserted before it.
#[derive(Debug, Clone, Default)]
pub struct IntEchelon {
    pub rows: Vec<Vec<i128>>,
    pub pivots: Vec<usize>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` modulo the row span, with zeros in all pivot columns.
    /// Only positive multiples of `v` are taken, so the residual is unique
    /// up to a positive factor.
    pub fn reduce(&self, v: &[i128]) -> Result<Vec<i128>, Overflow> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let g = gcd_i128(row[p], v[p]);
                v = combine(row[p] / g, &v, v[p] / g, row)?;
                normalize_i128(&mut v);
            }
        }
        Ok(v)
    }

    /// Insert a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: &[i128]) -> Result<bool, Overflow> {
        let mut r = self.reduce(v)?;
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        if r[p] < 0 {
            for x in r.iter_mut() {
                *x = -*x;
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        Ok(true)
    }

    pub fn contains(&self, v: &[i128]) -> Result<bool, Overflow> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }
}

fn to_i128_rows(rows: &[Vec<Rational>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| clear_denominators(r).iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>())
        .collect()
}

/// Reduced row echelon form over the rationals (pivot entries equal to one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn rref_int(rows: &[Vec<i128>], ncols: usize) -> Result<Rref, Overflow> {
    let mut ech = IntEchelon::new();
    for r in rows {
        ech.insert(r)?;
    }
    // Back-substitute so that every pivot column is a unit column.
    let k = ech.rows.len();
    for i in (0..k).rev() {
        let p = ech.pivots[i];
        for j in 0..k {
            if j != i && ech.rows[j][p] != 0 {
                let a = ech.rows[i][p];
                let b = ech.rows[j][p];
                let g = gcd_i128(a, b);
                let mut nr = combine(a / g, &ech.rows[j], b / g, &ech.rows[i])?;
                normalize_i128(&mut nr);
                let pj = ech.pivots[j];
                if nr[pj] < 0 {
                    for x in nr.iter_mut() {
                        *x = -*x;
                    }
                }
                ech.rows[j] = nr;
            }
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| ech.pivots[i]);
    let rows = order
        .iter()
        .map(|&i| {
            let p = ech.pivots[i];
            let d = BigInt::from(ech.rows[i][p]);
            ech.rows[i]
                .iter()
                .map(|&x| Rational::new(BigInt::from(x), d.clone()))
                .collect()
        })
        .collect();
    let pivots = order.iter().map(|&i| ech.pivots[i]).collect();
    Ok(Rref { ncols, rows, pivots })
}

fn rref_rational(rows: &[Vec<Rational>], ncols: usize) -> Rref {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Rref { ncols, rows: m, pivots }
}

/// Reduced row echelon form of the given rows.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> Rref {
    if let Some(int_rows) = to_i128_rows(rows) {
        if let Ok(r) = rref_int(&int_rows, ncols) {
            return r;
        }
    }
    rref_rational(rows, ncols)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    if let Some(int_rows) = to_i128_rows(rows) {
        let mut ech = IntEchelon::new();
        let ok = int_rows.iter().try_for_each(|r| ech.insert(r).map(|_| ()));
        if ok.is_ok() {
            return ech.rank();
        }
    }
    rref_rational(rows, ncols).rank()
}

/// Rank of an integer matrix; falls back to rationals on overflow.
pub fn rank_i128(rows: &[Vec<i128>], ncols: usize) -> usize {
    let mut ech = IntEchelon::new();
    if rows.iter().try_for_each(|r| ech.insert(r).map(|_| ())).is_ok() {
        return ech.rank();
    }
    let rat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    rref_rational(&rat, ncols).rank()
}

/// A linear subspace of `Q^ambient`, stored by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    rref: Rref,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { rref: Rref { ncols: ambient, rows: vec![], pivots: vec![] } }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Subspace { rref: Rref { ncols: ambient, rows, pivots: (0..ambient).collect() } }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        Subspace { rref: rref(vectors, ambient) }
    }

    /// Solution space of `eq * x = 0`.
    pub fn kernel(ambient: usize, equations: &[Vec<Rational>]) -> Self {
        let r = rref(equations, ambient);
        let free: Vec<usize> = (0..ambient).filter(|c| !r.pivots.contains(c)).collect();
        let basis: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); ambient];
                v[f] = Rational::one();
                for (row, &p) in r.rows.iter().zip(&r.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Subspace::span(ambient, &basis)
    }

    pub fn ambient(&self) -> usize {
        self.rref.ncols
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rref.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }

    /// Canonical residual of `v` modulo the subspace (zero in pivot columns).
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rref.rows.iter().zip(&self.rref.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis().to_vec();
        rows.extend_from_slice(other.basis());
        Subspace::span(self.ambient(), &rows)
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the reduced basis.
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.rref.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Restrict every vector to the given coordinates.
    pub fn restrict(&self, coords: &[usize]) -> Subspace {
        let rows: Vec<Vec<Rational>> =
            self.basis().iter().map(|r| coords.iter().map(|&c| r[c].clone()).collect()).collect();
        Subspace::span(coords.len(), &rows)
    }

    /// Basis vectors of a complement of `sub` inside `self`, chosen greedily
    /// from the reduced basis of `self` in pivot order.
    pub fn complement_of(&self, sub: &Subspace) -> Vec<Vec<Rational>> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for b in self.basis() {
            if !acc.contains(b) {
                acc = acc.sum(&Subspace::span(self.ambient(), std::slice::from_ref(b)));
                out.push(b.clone());
            }
        }
        out
    }

    /// Basis rows scaled to primitive integer vectors.
    pub fn integer_basis(&self) -> Vec<Vec<BigInt>> {
        self.basis().iter().map(|r| crate::arith::primitive(&clear_denominators(r))).collect()
    }
}

/// Solve `sum_k y_k * basis[k] = v` for `y`, assuming a solution exists.
/// The basis vectors must be linearly independent.
pub fn solve_in_basis(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: columns are basis vectors.
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let r = rref_rational(&rows, k + 1);
    if r.pivots.contains(&k) {
        return None;
    }
    let mut y = vec![Rational::zero(); k];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        y[p] = row[k].clone();
    }
    Some(y)
}

pub fn to_rational_row(v: &[i128]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
}

pub fn abs_max(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}

pub fn lcm_denominators(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_single_equation() {
        let k = Subspace::kernel(3, &rows(&[&[1, 1, 1]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&rows(&[&[1, -1, 0]])[0]));
        assert!(!k.contains(&rows(&[&[1, 0, 0]])[0]));
    }

    #[test]
    fn rational_and_integer_paths_agree() {
        let m = rows(&[&[2, 4, 6, 8], &[1, 3, 5, 7], &[3, 7, 11, 15]]);
        assert_eq!(rref(&m, 4), rref_rational(&m, 4));
        assert_eq!(rank(&m, 4), 2);
    }

    #[test]
    fn huge_entries_fall_back_to_rationals() {
        let big = i64::MAX;
        let m = rows(&[&[big, big - 1, 3], &[big - 2, big, 5], &[1, 2, big]]);
        let r = rref(&m, 3);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn complement_and_solve() {
        let v = Subspace::full(3);
        let w = Subspace::span(3, &rows(&[&[1, 1, 1]]));
        let c = v.complement_of(&w);
        assert_eq!(c.len(), 2);
        let all: Vec<Vec<Rational>> = c.iter().cloned().chain(w.basis().iter().cloned()).collect();
        let y = solve_in_basis(&all, &rows(&[&[3, 2, 1]])[0]).unwrap();
        let back: Vec<Rational> = (0..3)
            .map(|i| all.iter().zip(&y).fold(Rational::zero(), |a, (b, c)| a + &b[i] * c))
            .collect();
        assert_eq!(back, rows(&[&[3, 2, 1]])[0]);
    }

    #[test]
    fn echelon_residual_is_scale_canonical() {
        let mut e = IntEchelon::new();
        e.insert(&[1, 1, 0]).unwrap();
        let a = e.reduce(&[2, 0, 1]).unwrap();
        let b = e.reduce(&[0, -2, 1]).unwrap();
        assert_eq!(a, b);
    }
}
