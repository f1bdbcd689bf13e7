//! Euler characteristic of the stable stratum of the Betsy Ross matroid,
//! assuming that stratum is two rescaling orbits.

use std::time::Instant;

use lorentzian::combinatorics::{build_named, NamedKind};
use lorentzian::dressian::DEFAULT_MAX_DIM;
use lorentzian::error::Result;
use lorentzian::euler::two_orbit_stable_euler;
use lorentzian::representations::reduced_dim;

fn main() -> Result<()> {
    let m = build_named(&NamedKind::BetsyRoss)?;
    println!("reduced dim {}", reduced_dim(&m)?);
    let start = Instant::now();
    let rep = two_orbit_stable_euler(&m, DEFAULT_MAX_DIM)?;
    println!("faces per dimension          {:?}", rep.f_vector);
    println!("non-injective restrictions   {:?}", rep.non_injective);
    println!("chi = {} ({:.1?}), assuming {}", rep.chi, start.elapsed(), rep.assumption);
    Ok(())
}
