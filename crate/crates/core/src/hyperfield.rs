//! Null sums in the triangular hyperfields `T_q`.
//!
//! For `0 < q < ∞` a sum `a_1 + ... + a_n` is null iff the numbers
//! `a_i^{1/q}` satisfy the polygon inequalities. `T_0` is the tropical limit
//! (maximum attained twice) and `T_∞` the degenerate one (maximum twice or at
//! least three nonzero terms).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{parse_rational, rational_to_f64, Rational, Scalar};
use crate::error::{input_err, Error, Result};

/// Relative slack used when comparing fractional powers in floating point.
pub const FLOAT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QParameter {
    Zero,
    /// A strictly positive finite value.
    Finite(Rational),
    Infinity,
}

impl QParameter {
    pub fn finite(q: Rational) -> Result<Self> {
        match q.cmp(&Rational::zero()) {
            Ordering::Less => Err(input_err!("q must be nonnegative")),
            Ordering::Equal => Ok(QParameter::Zero),
            Ordering::Greater => Ok(QParameter::Finite(q)),
        }
    }

    pub fn from_f64(q: f64) -> Result<Self> {
        if q.is_infinite() && q > 0.0 {
            return Ok(QParameter::Infinity);
        }
        let r = Rational::from_float(q).ok_or_else(|| input_err!("q = {q} is not a number"))?;
        Self::finite(r)
    }

    pub fn one() -> Self {
        QParameter::Finite(Rational::one())
    }

    /// `q` as a double (`∞` for `T_∞`).
    pub fn value(&self) -> f64 {
        match self {
            QParameter::Zero => 0.0,
            QParameter::Finite(q) => rational_to_f64(q),
            QParameter::Infinity => f64::INFINITY,
        }
    }
}

impl PartialOrd for QParameter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use QParameter::*;
        Some(match (self, other) {
            (Zero, Zero) | (Infinity, Infinity) => Ordering::Equal,
            (Zero, _) | (_, Infinity) => Ordering::Less,
            (_, Zero) | (Infinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        })
    }
}

impl fmt::Display for QParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParameter::Zero => write!(f, "0"),
            QParameter::Finite(q) => write!(f, "{}", crate::arith::format_rational(q)),
            QParameter::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for QParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(QParameter::Infinity),
            other => QParameter::finite(parse_rational(other)?),
        }
    }
}

fn near_equal<S: Scalar>(a: &S, b: &S) -> bool {
    if S::EXACT {
        a == b
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= FLOAT_SLACK * x.abs().max(y.abs())
    }
}

fn is_zero_value<S: Scalar>(a: &S) -> bool {
    a.is_zero()
}

/// Decide whether `values` sum to zero in `T_q`.
pub fn is_null<S: Scalar>(values: &[S], q: &QParameter) -> Result<bool> {
    for v in values {
        if v.is_negative_value() {
            return Err(input_err!("negative value {v:?} in a T_q sum"));
        }
        if !S::EXACT && !v.to_f64().is_finite() {
            return Err(input_err!("non-finite value in a T_q sum"));
        }
    }
    let nonzero: Vec<&S> = values.iter().filter(|v| !is_zero_value(*v)).collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    if nonzero.len() == 1 {
        return Ok(false);
    }
    let mut max = nonzero[0];
    for v in &nonzero {
        if *v > max {
            max = v;
        }
    }
    let max_count = nonzero.iter().filter(|v| near_equal(**v, max)).count();
    match q {
        QParameter::Zero => Ok(max_count >= 2),
        QParameter::Infinity => Ok(max_count >= 2 || nonzero.len() >= 3),
        QParameter::Finite(qv) => {
            if max_count >= 2 {
                // The maximum is matched by another term.
                return Ok(true);
            }
            if S::EXACT && qv.is_one() {
                let total = nonzero.iter().fold(S::zero(), |acc, v| acc + (*v).clone());
                return Ok(max.clone() + max.clone() <= total);
            }
            if S::EXACT && *qv == Rational::from_integer(2.into()) && nonzero.len() <= 3 {
                return Ok(two_root_polygon(&nonzero, max));
            }
            let t = 1.0 / rational_to_f64(qv);
            let m = max.to_f64();
            let mut rest = 0.0;
            let mut top = 0.0;
            let mut seen_max = false;
            for v in &nonzero {
                let w = (v.to_f64() / m).powf(t);
                if !seen_max && std::ptr::eq(*v, max) {
                    seen_max = true;
                    top = w;
                } else {
                    rest += w;
                }
            }
            Ok(top <= rest + FLOAT_SLACK * (top + rest))
        }
    }
}

/// `√a ≤ √b + √c` for the maximum `a` of at most three terms, exactly:
/// equivalent to `a − b − c ≤ 0` or `(a − b − c)² ≤ 4bc`.
fn two_root_polygon<S: Scalar>(nonzero: &[&S], max: &S) -> bool {
    let mut others: Vec<S> = Vec::new();
    let mut skipped = false;
    for v in nonzero {
        if !skipped && std::ptr::eq(*v, max) {
            skipped = true;
        } else {
            others.push((*v).clone());
        }
    }
    while others.len() < 2 {
        others.push(S::zero());
    }
    let (b, c) = (others[0].clone(), others[1].clone());
    let e = max.clone() - b.clone() - c.clone();
    if !e.is_positive_value() {
        return true;
    }
    let four = S::from_i64(4);
    e.clone() * e <= four * b * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, QSqrt5};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn documented_examples() {
        let one = QParameter::one();
        let two: QParameter = "2".parse().unwrap();
        assert!(is_null(&r(&[3, 4, 5]), &one).unwrap());
        assert!(is_null(&r(&[9, 16, 25]), &two).unwrap());
        assert!(!is_null(&r(&[1, 1, 3]), &one).unwrap());
        for q in [QParameter::Zero, one.clone(), two.clone(), QParameter::Infinity] {
            assert!(is_null(&r(&[1, 1]), &q).unwrap());
            assert!(is_null(&r(&[]), &q).unwrap());
            assert!(!is_null(&r(&[4]), &q).unwrap());
        }
        assert!(!is_null(&r(&[2, 1, 1]), &QParameter::Zero).unwrap());
        assert!(is_null(&r(&[5, 1, 1]), &QParameter::Infinity).unwrap());
        assert!(is_null(&r(&[-1, 1]), &one).is_err());
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let two: QParameter = "2".parse().unwrap();
        for v in [[9, 16, 25], [9, 16, 50], [1, 4, 9], [1, 4, 10], [2, 2, 9]] {
            let exact = is_null(&r(&v), &two).unwrap();
            let float: Vec<f64> = v.iter().map(|&x| x as f64).collect();
            let fl = is_null(&float, &two).unwrap();
            // [1,4,9] is a degenerate triangle (1+2=3); the float path keeps it null.
            assert_eq!(exact, fl, "{v:?}");
        }
        let half: QParameter = "1/2".parse().unwrap();
        assert!(is_null(&[1.0, 1.0, 1.4], &half).unwrap());
        assert!(!is_null(&[1.0, 1.0, 1.5], &half).unwrap());
    }

    #[test]
    fn golden_values_use_exact_comparisons() {
        let phi = QSqrt5::phi();
        let one = QSqrt5::from_i64(1);
        // phi^2 = phi + 1: a degenerate triangle at q = 1.
        let v = vec![phi.clone() * phi.clone(), phi.clone(), one.clone()];
        assert!(is_null(&v, &QParameter::one()).unwrap());
        let w = vec![phi.clone() * phi.clone() + one.clone(), phi, one];
        assert!(!is_null(&w, &QParameter::one()).unwrap());
    }

    #[test]
    fn q_ordering_and_parsing() {
        let h: QParameter = "0.5".parse().unwrap();
        assert!(QParameter::Zero < h);
        assert!(h < QParameter::one());
        assert!(QParameter::one() < QParameter::Infinity);
        assert_eq!("0".parse::<QParameter>().unwrap(), QParameter::Zero);
        assert!("-1".parse::<QParameter>().is_err());
    }
}
