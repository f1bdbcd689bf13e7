//! The Cauchy–Binet map `A ↦ Σ |det A_S|^2 x^S` and the Betsy Ross family.

use lorentzian::arith::{int, QSqrt5};
use lorentzian::error::Result;
use lorentzian::lorentzian::{betsy_interval, classify_deg2, grassmann_map, is_lorentzian_any, MatrixEntry};
use lorentzian::polynomial::AnyPolynomial;

fn real(rows: &[&[i64]]) -> Vec<Vec<MatrixEntry>> {
    rows.iter().map(|r| r.iter().map(|&x| MatrixEntry::Rational(int(x))).collect()).collect()
}

fn main() -> Result<()> {
    let a = real(&[&[1, 0, 1, 2], &[0, 1, 3, -1]]);
    let f = grassmann_map(&a, 2.0)?;
    if let AnyPolynomial::Rational(p) = &f {
        println!("real 2x4: {:?}", classify_deg2(p)?);
    }

    let i = MatrixEntry::Complex(int(0), int(1));
    let z = vec![
        vec![MatrixEntry::Rational(int(1)), MatrixEntry::Rational(int(0)), MatrixEntry::Rational(int(1)), MatrixEntry::Rational(int(1))],
        vec![MatrixEntry::Rational(int(0)), MatrixEntry::Rational(int(1)), i, MatrixEntry::Rational(int(2))],
    ];
    if let AnyPolynomial::Rational(p) = &grassmann_map(&z, 2.0)? {
        println!("complex 2x4: {:?}", classify_deg2(p)?);
    }

    let phi = MatrixEntry::Golden(QSqrt5::phi());
    let g = vec![
        vec![MatrixEntry::Rational(int(1)), MatrixEntry::Rational(int(0)), MatrixEntry::Rational(int(1))],
        vec![MatrixEntry::Rational(int(0)), MatrixEntry::Rational(int(1)), phi],
    ];
    let gf = grassmann_map(&g, 2.0)?;
    println!("golden 2x3: exact={} Lorentzian={}", gf.is_exact(), is_lorentzian_any(&gf, 1e-9)?.lorentzian);

    let (lo, hi) = betsy_interval(4.0, 1e-4)?;
    println!("Betsy Ross family is Lorentzian for t in [{lo:.4}, {hi:.4}]");
    Ok(())
}
