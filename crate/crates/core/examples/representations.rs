//! Plücker relations, the spaces `V_J` and `W_J`, and `T_q`-representations.

use lorentzian::arith::{int, Rational};
use lorentzian::combinatorics::{build_named, NamedKind};
use lorentzian::error::Result;
use lorentzian::hyperfield::QParameter;
use lorentzian::representations::{
    degenerate_relations, is_strong_rep, is_weak_rep, reduced_dim, three_term_relations, tutte_rank, v_space,
    w_space, Representation,
};

fn main() -> Result<()> {
    for kind in [NamedKind::Uniform { r: 2, n: 4 }, NamedKind::Uniform { r: 2, n: 5 }, NamedKind::Fano, NamedKind::BetsyRoss] {
        let j = build_named(&kind)?;
        println!(
            "{:<26} 3-term={:<4} degenerate={:<4} dim V={:<3} dim W={:<3} tutte={:<3} reduced={}",
            format!("{kind:?}"),
            three_term_relations(&j).len(),
            degenerate_relations(&j, false)?.len(),
            v_space(&j)?.dim(),
            w_space(&j).dim(),
            tutte_rank(&j)?,
            reduced_dim(&j)?
        );
    }

    // Squared Plücker coordinates of a real 2x4 matrix are a T_2 representation
    // but fail the triangle inequality in T_1.
    let j = build_named(&NamedKind::Uniform { r: 2, n: 4 })?;
    // Points in order 34, 24, 23, 14, 13, 12 for the matrix [[1,0,1,2],[0,1,3,-1]].
    let minors = [-7i64, -2, -1, -1, 3, 1];
    let rho = Representation::new(&j, minors.iter().map(|m| int(m * m)).collect::<Vec<Rational>>())?;
    for (name, q) in [("T_1", QParameter::one()), ("T_2", QParameter::finite(int(2))?), ("T_inf", QParameter::Infinity)] {
        println!("squared minors in {name}: weak={} strong={}", is_weak_rep(&rho, &j, &q)?, is_strong_rep(&rho, &j, &q)?);
    }
    Ok(())
}
