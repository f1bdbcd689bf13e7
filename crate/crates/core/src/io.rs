//! JSON file formats shared by the command-line tool, the examples and the
//! fixtures under `data/`.
//!
//! Numbers are written either as JSON numbers or as strings `"p/q"`. Strings
//! and JSON integers are exact. Any other JSON number is a double.

use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, rational_from_f64, rational_to_f64, QSqrt5, Rational, Scalar};
use crate::combinatorics::{build_named, ExponentVector, MConvexSet, NamedKind};
use crate::dressian::MConvexFunction;
use crate::error::{input_err, Result};
use crate::lorentzian::MatrixEntry;
use crate::polynomial::{AnyPolynomial, HomogeneousPolynomial};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Number {
    /// The exact value, or `None` for a double.
    pub fn exact(&self) -> Result<Option<Rational>> {
        match self {
            Number::Int(i) => Ok(Some(Rational::from_integer((*i).into()))),
            Number::Float(_) => Ok(None),
            Number::Text(s) => parse_rational(s).map(Some),
        }
    }

    /// Exact value, converting a double exactly.
    pub fn rational(&self) -> Result<Rational> {
        match self {
            Number::Float(x) => rational_from_f64(*x).ok_or_else(|| input_err!("{x} is not finite")),
            _ => Ok(self.exact()?.expect("exact variant")),
        }
    }

    pub fn to_f64(&self) -> Result<f64> {
        match self {
            Number::Int(i) => Ok(*i as f64),
            Number::Float(x) => Ok(*x),
            Number::Text(s) => parse_rational(s).map(|r| rational_to_f64(&r)),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Number::Text(format_rational(r))
    }
}

/// Either explicit points or a named family.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidFile {
    Points {
        n: usize,
        d: u32,
        points: Vec<ExponentVector>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Named(NamedKind),
}

impl MatroidFile {
    pub fn build(&self) -> Result<MConvexSet> {
        match self {
            MatroidFile::Points { n, d, points, label } => {
                let j = MConvexSet::new(*n, *d, points.clone())?;
                Ok(match label {
                    Some(l) => j.with_label(l.clone()),
                    None => j,
                })
            }
            MatroidFile::Named(kind) => build_named(kind),
        }
    }

    pub fn from_set(j: &MConvexSet) -> Self {
        MatroidFile::Points { n: j.n(), d: j.d(), points: j.points().to_vec(), label: j.label.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `f = Σ c_α x^α / α!`.
    #[default]
    Normalized,
    /// `f = Σ a_α x^α`.
    Monomial,
}

/// A matrix entry or polynomial coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Complex { re: Number, im: Number },
    /// `(a + b√5)/2`.
    Golden { a: Number, b: Number },
    Real(Number),
}

impl Entry {
    pub fn to_matrix_entry(&self) -> Result<MatrixEntry> {
        Ok(match self {
            Entry::Real(x) => match x.exact()? {
                Some(r) => MatrixEntry::Rational(r),
                None => MatrixEntry::Float(x.to_f64()?),
            },
            Entry::Complex { re, im } => match (re.exact()?, im.exact()?) {
                (Some(a), Some(b)) => MatrixEntry::Complex(a, b),
                _ => MatrixEntry::ComplexFloat(re.to_f64()?, im.to_f64()?),
            },
            Entry::Golden { a, b } => MatrixEntry::Golden(QSqrt5::from_halves(a.rational()?, b.rational()?)),
        })
    }

    fn golden(q: &QSqrt5) -> Self {
        let two = Rational::from_integer(2.into());
        Entry::Golden { a: Number::from_rational(&(&q.x * &two)), b: Number::from_rational(&(&q.y * &two)) }
    }
}

/// A scalar in file form: exact when the type allows it.
pub fn scalar_entry<S: Scalar + 'static>(s: &S) -> Entry {
    if let Some(q) = (s as &dyn std::any::Any).downcast_ref::<QSqrt5>() {
        return Entry::golden(q);
    }
    match s.as_rational() {
        Some(r) => Entry::Real(Number::from_rational(&r)),
        None => Entry::Real(Number::Float(s.to_f64())),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub alpha: ExponentVector,
    pub coeff: Entry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialFile {
    pub n: usize,
    pub d: u32,
    #[serde(default)]
    pub convention: Convention,
    pub terms: Vec<Term>,
}

fn build_poly<S: Scalar>(
    n: usize,
    d: u32,
    convention: Convention,
    terms: Vec<(ExponentVector, S)>,
) -> Result<HomogeneousPolynomial<S>> {
    match convention {
        Convention::Normalized => HomogeneousPolynomial::from_terms(n, d, terms),
        Convention::Monomial => HomogeneousPolynomial::from_monomial_terms(n, d, terms),
    }
}

impl PolynomialFile {
    /// Exact over `Q` or `Q(√5)` when every coefficient is exact, otherwise double precision.
    pub fn build(&self) -> Result<AnyPolynomial> {
        let mut any_float = false;
        let mut any_golden = false;
        for t in &self.terms {
            match &t.coeff {
                Entry::Complex { .. } => return Err(input_err!("complex coefficient at {:?}", t.alpha)),
                Entry::Golden { .. } => any_golden = true,
                Entry::Real(x) => any_float |= x.exact()?.is_none(),
            }
        }
        let (n, d, c) = (self.n, self.d, self.convention);
        if any_float {
            let terms = self
                .terms
                .iter()
                .map(|t| {
                    let v = match &t.coeff {
                        Entry::Real(x) => x.to_f64()?,
                        Entry::Golden { a, b } => QSqrt5::from_halves(a.rational()?, b.rational()?).to_f64(),
                        Entry::Complex { .. } => unreachable!("rejected above"),
                    };
                    Ok((t.alpha.clone(), v))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(build_poly(n, d, c, terms)?.into());
        }
        if any_golden {
            let terms = self
                .terms
                .iter()
                .map(|t| {
                    let v = match &t.coeff {
                        Entry::Real(x) => QSqrt5::from_rational(x.rational()?),
                        Entry::Golden { a, b } => QSqrt5::from_halves(a.rational()?, b.rational()?),
                        Entry::Complex { .. } => unreachable!("rejected above"),
                    };
                    Ok((t.alpha.clone(), v))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(build_poly(n, d, c, terms)?.into());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| match &t.coeff {
                Entry::Real(x) => Ok((t.alpha.clone(), x.rational()?)),
                _ => unreachable!("only real exact coefficients remain"),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(build_poly(n, d, c, terms)?.into())
    }

    /// Normalized convention, terms in exponent order.
    pub fn from_polynomial(f: &AnyPolynomial) -> Self {
        let terms = match f {
            AnyPolynomial::Rational(p) => {
                p.terms().iter().map(|(a, c)| Term { alpha: a.clone(), coeff: Entry::Real(Number::from_rational(c)) }).collect()
            }
            AnyPolynomial::Golden(p) => {
                p.terms().iter().map(|(a, c)| Term { alpha: a.clone(), coeff: Entry::golden(c) }).collect()
            }
            AnyPolynomial::Float(p) => {
                p.terms().iter().map(|(a, c)| Term { alpha: a.clone(), coeff: Entry::Real(Number::Float(*c)) }).collect()
            }
        };
        PolynomialFile { n: f.n(), d: f.d(), convention: Convention::Normalized, terms }
    }
}

pub type MatrixFile = Vec<Vec<Entry>>;

pub fn build_matrix(m: &MatrixFile) -> Result<Vec<Vec<MatrixEntry>>> {
    m.iter().map(|row| row.iter().map(Entry::to_matrix_entry).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub points: Vec<ExponentVector>,
    pub values: Vec<Number>,
}

/// Representation values in the canonical point order of `J`.
#[derive(Debug, Clone, PartialEq)]
pub enum RepValues {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

impl RepresentationFile {
    pub fn support(&self) -> Result<MConvexSet> {
        let n = self.points.first().map_or(0, |p| p.len());
        let d = self.points.first().map_or(0, |p| p.iter().sum());
        MConvexSet::new(n, d, self.points.clone())
    }

    pub fn values_on(&self, j: &MConvexSet) -> Result<RepValues> {
        if self.points.len() != self.values.len() || self.points.len() != j.len() {
            return Err(input_err!("representation has {} points, {} values, J has {}", self.points.len(), self.values.len(), j.len()));
        }
        let mut order = vec![usize::MAX; j.len()];
        for (k, p) in self.points.iter().enumerate() {
            let idx = j.index_of(p).ok_or_else(|| input_err!("point {p:?} is not in J"))?;
            order[idx] = k;
        }
        if order.contains(&usize::MAX) {
            return Err(input_err!("repeated point in representation"));
        }
        let exact: Vec<Option<Rational>> = order.iter().map(|&k| self.values[k].exact()).collect::<Result<_>>()?;
        if exact.iter().all(Option::is_some) {
            Ok(RepValues::Exact(exact.into_iter().map(Option::unwrap).collect()))
        } else {
            Ok(RepValues::Float(order.iter().map(|&k| self.values[k].to_f64()).collect::<Result<_>>()?))
        }
    }
}

/// One function on `J`, values in the canonical point order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionFile {
    pub values: Vec<Number>,
}

impl FunctionFile {
    pub fn function(&self) -> Result<MConvexFunction> {
        Ok(MConvexFunction { values: self.values.iter().map(Number::rational).collect::<Result<_>>()? })
    }

    pub fn from_function(f: &MConvexFunction) -> Self {
        FunctionFile { values: f.values.iter().map(Number::from_rational).collect() }
    }
}

pub type RaysFile = Vec<FunctionFile>;

pub fn rays_from_file(file: &RaysFile, j: &MConvexSet) -> Result<Vec<MConvexFunction>> {
    file.iter().map(|f| MConvexFunction::new(j, f.function()?.values)).collect()
}

pub fn rays_to_file(rays: &[MConvexFunction]) -> RaysFile {
    rays.iter().map(FunctionFile::from_function).collect()
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| input_err!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| input_err!("{}: {e}", path.display()))
}

pub fn load_matroid(path: impl AsRef<Path>) -> Result<MConvexSet> {
    read_json::<MatroidFile>(path)?.build()
}

pub fn load_polynomial(path: impl AsRef<Path>) -> Result<AnyPolynomial> {
    read_json::<PolynomialFile>(path)?.build()
}

/// Rays for `J`, each checked to have one value per point.
pub fn load_rays(path: impl AsRef<Path>, j: &MConvexSet) -> Result<Vec<MConvexFunction>> {
    rays_from_file(&read_json(path)?, j)
}

/// Envelope written by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// All inputs were complete (no fixture rays, no truncated enumeration).
    pub inputs_complete: bool,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: impl Into<String>, inputs_complete: bool, result: T) -> Self {
        Report { tool: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION"), command: command.into(), inputs_complete, result }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn matroid_forms() {
        let named: MatroidFile = serde_json::from_str(r#"{"kind":"uniform","params":{"r":2,"n":4}}"#).unwrap();
        let j = named.build().unwrap();
        assert_eq!(j.len(), 6);
        let text = serde_json::to_string(&MatroidFile::from_set(&j)).unwrap();
        let back: MatroidFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap(), j);
        let br: MatroidFile = serde_json::from_str(r#"{"kind":"betsy_ross"}"#).unwrap();
        assert_eq!(br.build().unwrap().len(), 140);
        let bad: MatroidFile = serde_json::from_str(r#"{"n":4,"d":2,"points":[[1,1,0,0],[0,0,1,1]]}"#).unwrap();
        assert!(bad.build().is_err());
    }

    #[test]
    fn polynomial_conventions() {
        let text = r#"{"n":2,"d":2,"convention":"monomial","terms":[{"alpha":[2,0],"coeff":"1/2"},{"alpha":[1,1],"coeff":3}]}"#;
        let f = serde_json::from_str::<PolynomialFile>(text).unwrap().build().unwrap();
        let AnyPolynomial::Rational(p) = &f else { panic!("expected exact") };
        assert_eq!(p.coeff(&[2, 0]), int(1));
        assert_eq!(p.coeff(&[1, 1]), int(3));
        let again = PolynomialFile::from_polynomial(&f).build().unwrap();
        assert_eq!(again, f);
        let float = r#"{"n":2,"d":1,"terms":[{"alpha":[1,0],"coeff":0.5},{"alpha":[0,1],"coeff":{"a":1,"b":1}}]}"#;
        let g = serde_json::from_str::<PolynomialFile>(float).unwrap().build().unwrap();
        assert!(!g.is_exact());
        let golden = r#"{"n":2,"d":1,"terms":[{"alpha":[1,0],"coeff":"1/2"},{"alpha":[0,1],"coeff":{"a":1,"b":1}}]}"#;
        let h = serde_json::from_str::<PolynomialFile>(golden).unwrap().build().unwrap();
        assert!(matches!(h, AnyPolynomial::Golden(_)));
        assert_eq!(PolynomialFile::from_polynomial(&h).build().unwrap(), h);
    }

    #[test]
    fn matrix_entries() {
        let m: MatrixFile = serde_json::from_str(r#"[[1,"2/3",{"re":0,"im":1},{"a":1,"b":1},0.5]]"#).unwrap();
        let e = build_matrix(&m).unwrap();
        assert!(matches!(e[0][0], MatrixEntry::Rational(_)));
        assert!(matches!(e[0][1], MatrixEntry::Rational(_)));
        assert!(matches!(e[0][2], MatrixEntry::Complex(_, _)));
        assert_eq!(e[0][3], MatrixEntry::Golden(QSqrt5::phi()));
        assert_eq!(e[0][4], MatrixEntry::Float(0.5));
    }

    #[test]
    fn representation_is_reordered() {
        let r: RepresentationFile =
            serde_json::from_str(r#"{"points":[[0,1,1],[1,0,1],[1,1,0]],"values":[3,2,1]}"#).unwrap();
        let j = r.support().unwrap();
        assert_eq!(r.values_on(&j).unwrap(), RepValues::Exact(vec![int(3), int(2), int(1)]));
        assert_eq!(j.points()[0], vec![0, 1, 1]);
    }
}
