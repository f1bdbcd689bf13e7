//! Face lattices of base polytopes.

use lorentzian::combinatorics::{build_named, NamedKind};
use lorentzian::error::Result;
use lorentzian::polytopes::{base_polytope, face_to_subset, is_face};

fn main() -> Result<()> {
    for kind in [NamedKind::Uniform { r: 2, n: 4 }, NamedKind::Simplex { n: 3, d: 2 }, NamedKind::Fano, NamedKind::BetsyRoss] {
        let j = build_named(&kind)?;
        let p = base_polytope(&j)?;
        let lattice = p.face_lattice()?;
        println!(
            "{:<26} dim {} facets {:<3} f-vector {:?} Euler-Poincare {}",
            format!("{kind:?}"),
            p.dim(),
            p.facets().len(),
            lattice.f_vector,
            lattice.euler_poincare()
        );
    }

    let j = build_named(&NamedKind::Uniform { r: 2, n: 4 })?;
    let lattice = base_polytope(&j)?.face_lattice()?;
    let (_, edge) = lattice.faces().find(|(d, _)| *d == 1).expect("an octahedron has edges");
    let sub = face_to_subset(&j, edge)?;
    println!("edge {:?} is a face: {}", sub.points(), is_face(&sub, &j)?);
    let diagonal = j.subset(&[0, 5])?;
    println!("diagonal {:?} is a face: {}", diagonal.points(), is_face(&diagonal, &j)?);
    Ok(())
}
