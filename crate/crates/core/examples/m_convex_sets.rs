//! Building M-convex sets and reading off their basic structure.

use lorentzian::combinatorics::{
    build_named, component_blocks, delta_bounds, exchange_violation, generating_polynomial, product, NamedKind,
};
use lorentzian::error::Result;

fn main() -> Result<()> {
    for kind in [
        NamedKind::Uniform { r: 2, n: 4 },
        NamedKind::Fano,
        NamedKind::Elliptic { n: 7 },
        NamedKind::BetsyRoss,
        NamedKind::Simplex { n: 3, d: 2 },
    ] {
        let j = build_named(&kind)?;
        let b = delta_bounds(&j);
        println!(
            "{:<28} n={:<2} d={} |J|={:<3} matroid={} lower={:?} upper={:?}",
            format!("{kind:?}"),
            j.n(),
            j.d(),
            j.len(),
            j.is_matroid(),
            b.lower,
            b.upper
        );
    }

    // Two disjoint pairs fail the exchange axiom.
    let pairs = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]];
    println!("exchange witness for {{12, 34}}: {:?}", exchange_violation(&pairs, 4, 2)?);

    let u13 = build_named(&NamedKind::Uniform { r: 1, n: 3 })?;
    let u12 = build_named(&NamedKind::Uniform { r: 1, n: 2 })?;
    let prod = product(&u13, &u12)?;
    println!("U(1,3) x U(1,2): {} points, blocks {:?}", prod.len(), component_blocks(&prod)?);

    let f = generating_polynomial(&build_named(&NamedKind::Uniform { r: 2, n: 4 })?);
    println!("generating polynomial of U(2,4) has {} terms of degree {}", f.len(), f.d());
    Ok(())
}
