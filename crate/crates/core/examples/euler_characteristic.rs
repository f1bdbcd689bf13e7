//! Euler characteristics of reduced Lorentzian strata from ray data.
//!
//! Pass `t11` to also run the eleven-element elliptic matroid (about ten
//! seconds in release mode).

use std::time::Instant;

use lorentzian::combinatorics::{build_named, NamedKind};
use lorentzian::dressian::{enumerate_rays, DEFAULT_MAX_DIM};
use lorentzian::error::Result;
use lorentzian::euler::{euler_characteristic, rigid_euler};

fn main() -> Result<()> {
    let mut kinds = vec![NamedKind::Uniform { r: 2, n: 4 }, NamedKind::Elliptic { n: 5 }, NamedKind::Elliptic { n: 7 }];
    if std::env::args().any(|a| a == "t11") {
        kinds.push(NamedKind::Elliptic { n: 11 });
    }
    for kind in kinds {
        let j = build_named(&kind)?;
        let start = Instant::now();
        let rays = enumerate_rays(&j, DEFAULT_MAX_DIM)?;
        let rep = euler_characteristic(&j, &rays)?;
        println!("{kind:?}: {} rays, chi = {} ({:.1?})", rep.rays, rep.chi, start.elapsed());
        println!("  g = {:?}", rep.g);
        for (i, row) in rep.f.iter().enumerate() {
            if row.iter().any(|&x| x != 0) {
                println!("  f[{i}] = {row:?}");
            }
        }
    }
    let fano = build_named(&NamedKind::Fano)?;
    let r = rigid_euler(&fano, DEFAULT_MAX_DIM)?;
    println!("Fano (rigid): chi = {}, face sum = {}", r.chi, r.face_sum);
    Ok(())
}
