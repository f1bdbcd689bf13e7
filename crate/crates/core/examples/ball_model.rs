//! The gauge `ψ` and ball coordinates of Lorentzian polynomials.

use lorentzian::arith::int;
use lorentzian::combinatorics::{build_named, generating_polynomial, NamedKind};
use lorentzian::dressian::{dressian_to_polynomial, MConvexFunction};
use lorentzian::error::Result;
use lorentzian::gauge::{ball_coordinates, gauge_psi, inverse_ball, BallChart};
use lorentzian::lorentzian::{grassmann_map, MatrixEntry};

fn main() -> Result<()> {
    let j = build_named(&NamedKind::Uniform { r: 2, n: 4 })?;
    let chart = BallChart::new(&j, 1.0)?;
    println!("dim V_J/R1 = {}", chart.dim());

    let base = generating_polynomial(&j).to_f64();
    println!("base point: {:?}", ball_coordinates(&base, 1.0)?.coords);

    let a: Vec<Vec<MatrixEntry>> =
        [[1, 0, 1, 2], [0, 1, 3, -1]].iter().map(|r| r.iter().map(|&x| MatrixEntry::Rational(int(x))).collect()).collect();
    let boundary = grassmann_map(&a, 2.0)?.to_f64();
    let b = ball_coordinates(&boundary, 1.0)?;
    println!("squared minors: psi = {:.7}, norm = {:.7}", b.psi, b.norm);

    // Moving along an M-convex direction never leaves the Lorentzian set.
    let mut split = vec![0i128; j.len()];
    split[j.index_of(&[1, 1, 0, 0]).expect("12 is a basis")] = 1;
    let nu = MConvexFunction::from_integers(&split);
    for s in [1.0, 10.0, 100.0] {
        let f = dressian_to_polynomial(&j, &nu, s)?;
        let g = gauge_psi(&f, 1.0)?;
        let b = ball_coordinates(&f, 1.0)?;
        println!("split at scale {s:>5}: psi = {} (probe limited {}), norm = {:.6}", g.psi, g.probe_limited, b.norm);
    }

    // Raising one coefficient moves against the split direction, toward the boundary.
    let interior = dressian_to_polynomial(&j, &MConvexFunction::from_integers(&[0, 0, 0, 0, 0, -1]), 0.3)?;
    let b = ball_coordinates(&interior, 1.0)?;
    println!("raised coefficient: psi = {:.6}, norm = {:.6}", b.psi, b.norm);
    let back = inverse_ball(&b, 1.0)?;
    let again = ball_coordinates(&back, 1.0)?;
    let err = b.coords.iter().zip(&again.coords).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    println!("round trip through the ball: max coordinate error {err:.2e}");
    Ok(())
}
