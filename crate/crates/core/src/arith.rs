//! Scalar types shared by the polynomial and representation code.
//!
//! Three coefficient fields are supported: exact rationals, the real
//! quadratic field `Q(sqrt 5)` (enough for golden-ratio matrices), and `f64`.
//! All of them are ordered, which is what the congruence based inertia
//! computation and the null-sum tests need.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input_err, Result};

pub type Rational = BigRational;

/// An ordered field usable as a coefficient type.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// True when arithmetic is exact (comparisons with zero are decisive).
    const EXACT: bool;

    fn to_f64(&self) -> f64;

    fn from_i64(v: i64) -> Self;

    fn is_positive_value(&self) -> bool {
        *self > Self::zero()
    }

    fn is_negative_value(&self) -> bool {
        *self < Self::zero()
    }

    fn abs_value(&self) -> Self {
        if self.is_negative_value() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Raise to a non-negative integer power.
    fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Exact rational value, when the scalar is a rational number.
    fn as_rational(&self) -> Option<Rational> {
        None
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Very large numerators or denominators: shift both down first.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"`, `"p/q"` or a finite decimal such as `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| input_err!("bad numerator in {s:?}"))?;
        let d: BigInt = d.trim().parse().map_err(|_| input_err!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(input_err!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches('-'), frac);
        let n: BigInt = digits.parse().map_err(|_| input_err!("bad decimal {s:?}"))?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| input_err!("bad rational {s:?}"))?;
    Ok(Rational::from_integer(n))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact conversion of a finite double into a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// An element `x + y*sqrt(5)` of the real quadratic field `Q(sqrt 5)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub x: Rational,
    pub y: Rational,
}

impl QSqrt5 {
    pub fn new(x: Rational, y: Rational) -> Self {
        QSqrt5 { x, y }
    }

    pub fn from_rational(x: Rational) -> Self {
        QSqrt5 { x, y: Rational::zero() }
    }

    /// `(a + b*sqrt 5) / 2`, the convention used in matrix files.
    pub fn from_halves(a: Rational, b: Rational) -> Self {
        let two = int(2);
        QSqrt5 { x: a / two.clone(), y: b / two }
    }

    /// The golden ratio `(1 + sqrt 5)/2`.
    pub fn phi() -> Self {
        QSqrt5::from_halves(int(1), int(1))
    }

    /// The nontrivial field automorphism `sqrt 5 -> -sqrt 5`.
    pub fn conjugate(&self) -> Self {
        QSqrt5 { x: self.x.clone(), y: -self.y.clone() }
    }

    pub fn norm(&self) -> Rational {
        &self.x * &self.x - int(5) * &self.y * &self.y
    }

    pub fn signum(&self) -> Ordering {
        let sx = self.x.cmp(&Rational::zero());
        let sy = self.y.cmp(&Rational::zero());
        if sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal || sx == sy {
            return sy;
        }
        // Opposite signs: compare x^2 with 5 y^2.
        let lhs = &self.x * &self.x;
        let rhs = int(5) * &self.y * &self.y;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl fmt::Debug for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt5", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, o: QSqrt5) -> QSqrt5 {
        QSqrt5 { x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, o: QSqrt5) -> QSqrt5 {
        QSqrt5 { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, o: QSqrt5) -> QSqrt5 {
        let x = &self.x * &o.x + int(5) * &self.y * &o.y;
        let y = &self.x * &o.y + &self.y * &o.x;
        QSqrt5 { x, y }
    }
}

impl Div for QSqrt5 {
    type Output = QSqrt5;
    fn div(self, o: QSqrt5) -> QSqrt5 {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 5)");
        let num = self * o.conjugate();
        QSqrt5 { x: num.x / n.clone(), y: num.y / n }
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 { x: -self.x, y: -self.y }
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        QSqrt5 { x: Rational::zero(), y: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        QSqrt5 { x: Rational::one(), y: Rational::zero() }
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).signum())
    }
}

impl Scalar for QSqrt5 {
    const EXACT: bool = true;

    fn to_f64(&self) -> f64 {
        rational_to_f64(&self.x) + rational_to_f64(&self.y) * 5f64.sqrt()
    }

    fn from_i64(v: i64) -> Self {
        QSqrt5::from_rational(int(v))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.y.is_zero().then(|| self.x.clone())
    }
}

/// Smallest positive integer `m` such that `m * v` is integral, and the result.
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, r| num_integer::Integer::lcm(&acc, r.denom()));
    v.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

/// Divide an integer vector by the gcd of its entries (keeps the sign).
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_nonnegative<S: Scalar>(s: &S) -> bool {
    !s.is_negative_value()
}

pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let phi = QSqrt5::phi();
        // phi^2 = phi + 1
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + QSqrt5::one());
        // 1/phi = phi - 1
        assert_eq!(QSqrt5::one() / phi.clone(), phi.clone() - QSqrt5::one());
        assert!(phi > QSqrt5::one());
        let conj = phi.conjugate();
        assert!(conj < QSqrt5::zero());
        assert!((phi.to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 2 - sqrt5 < 0, 3 - sqrt5 > 0
        assert_eq!(QSqrt5::new(int(2), int(-1)).signum(), Ordering::Less);
        assert_eq!(QSqrt5::new(int(3), int(-1)).signum(), Ordering::Greater);
        assert_eq!(QSqrt5::new(int(-3), int(1)).signum(), Ordering::Less);
    }
}
