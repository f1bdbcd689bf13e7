//! Rays of reduced Dressians and the subdivisions they induce.

use std::time::Instant;

use lorentzian::combinatorics::{build_named, NamedKind};
use lorentzian::dressian::{enumerate_rays, induced_subdivision, is_rigid, DEFAULT_MAX_DIM};
use lorentzian::error::Result;

fn main() -> Result<()> {
    for kind in [
        NamedKind::Uniform { r: 2, n: 4 },
        NamedKind::Uniform { r: 2, n: 5 },
        NamedKind::Fano,
        NamedKind::Elliptic { n: 5 },
        NamedKind::Elliptic { n: 7 },
    ] {
        let j = build_named(&kind)?;
        let start = Instant::now();
        let report = enumerate_rays(&j, DEFAULT_MAX_DIM)?;
        println!(
            "{:<28} reduced dim {} rays {:<3} cones {:<4} rigid {:?} ({:.1?})",
            format!("{kind:?}"),
            report.reduced_dim,
            report.rays.len(),
            report.cones_visited,
            is_rigid(&j, DEFAULT_MAX_DIM)?,
            start.elapsed()
        );
        for nu in report.functions().iter().take(3) {
            let cells = induced_subdivision(&j, nu)?.cells;
            println!("    {:?} -> {} cells", nu.integer_values()?, cells.len());
        }
    }
    Ok(())
}
