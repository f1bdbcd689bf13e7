//! Deciding whether a polynomial is Lorentzian, with certificates.

use lorentzian::combinatorics::{build_named, generating_polynomial, NamedKind};
use lorentzian::error::Result;
use lorentzian::lorentzian::{is_lorentzian, normalize, power_map, power_map_exact};
use lorentzian::polynomial::rational_poly;

fn main() -> Result<()> {
    let fano = generating_polynomial(&build_named(&NamedKind::Fano)?);
    println!("Fano basis polynomial: {:?}", is_lorentzian(&fano)?.certificate);

    // x1 x2 + x3 x4 has support {12, 34}, which is not M-convex.
    let pairs = rational_poly(4, 2, &[(&[1, 1, 0, 0], 1, 1), (&[0, 0, 1, 1], 1, 1)]);
    println!("x1x2 + x3x4: {:?}", is_lorentzian(&pairs)?.certificate);

    // Normalized coefficients: (x1 + x2)^2 has c = (2, 2, 2). With c = (3, 1, 3) the
    // Hessian has two positive eigenvalues.
    let square = rational_poly(2, 2, &[(&[2, 0], 2, 1), (&[1, 1], 2, 1), (&[0, 2], 2, 1)]);
    let bad = rational_poly(2, 2, &[(&[2, 0], 3, 1), (&[1, 1], 1, 1), (&[0, 2], 3, 1)]);
    println!("(x1+x2)^2: {}", is_lorentzian(&square)?.lorentzian);
    println!("c = (3, 1, 3): {:?}", is_lorentzian(&bad)?.certificate);

    // The coefficient maps R_p and N_t keep Lorentzian polynomials Lorentzian.
    let u24 = generating_polynomial(&build_named(&NamedKind::Uniform { r: 2, n: 4 })?);
    for p in [0.0, 0.25, 0.5, 1.0] {
        println!("R_{p}: {}", is_lorentzian(&power_map(&u24, p))?.lorentzian);
    }
    println!("R_3 exact: {}", is_lorentzian(&power_map_exact(&fano, 3))?.lorentzian);
    println!("N_2 exact: {}", is_lorentzian(&normalize(&square, 2))?.lorentzian);
    Ok(())
}
