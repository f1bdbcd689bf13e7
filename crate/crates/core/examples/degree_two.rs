//! Simplifying and classifying Lorentzian quadrics.

use lorentzian::error::Result;
use lorentzian::lorentzian::{classify_deg2, simplify_degree2};
use lorentzian::polynomial::rational_poly;

fn main() -> Result<()> {
    // All six square-free quadratic monomials in four variables.
    let u24 = rational_poly(
        4,
        2,
        &[
            (&[1, 1, 0, 0], 1, 1),
            (&[1, 0, 1, 0], 1, 1),
            (&[1, 0, 0, 1], 1, 1),
            (&[0, 1, 1, 0], 1, 1),
            (&[0, 1, 0, 1], 1, 1),
            (&[0, 0, 1, 1], 1, 1),
        ],
    );
    // x1 x3 + x1 x4 + x2 x3 + x2 x4 = (x1 + x2)(x3 + x4) collapses to two variables.
    let product = rational_poly(4, 2, &[(&[1, 0, 1, 0], 1, 1), (&[1, 0, 0, 1], 1, 1), (&[0, 1, 1, 0], 1, 1), (&[0, 1, 0, 1], 1, 1)]);
    // Squared minors of [[1,0,1,2],[0,1,3,-1]] sit on the boundary.
    let boundary = rational_poly(
        4,
        2,
        &[(&[1, 1, 0, 0], 1, 1), (&[1, 0, 1, 0], 9, 1), (&[1, 0, 0, 1], 1, 1), (&[0, 1, 1, 0], 1, 1), (&[0, 1, 0, 1], 4, 1), (&[0, 0, 1, 1], 49, 1)],
    );
    for (name, f) in [("U(2,4)", &u24), ("product", &product), ("squared minors", &boundary)] {
        let s = simplify_degree2(f)?;
        let c = classify_deg2(f)?;
        println!("{name}: blocks {:?}, g has {} terms, {:?}", s.partition, s.g.len(), c);
    }
    Ok(())
}
