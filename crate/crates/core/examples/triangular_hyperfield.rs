//! Null sums in the triangular hyperfields `T_q`.
//!
//! A sum is null in `T_1` exactly when its terms satisfy the polygon
//! inequality. Smaller `q` means fewer null sums, down to the tropical `T_0`.

use lorentzian::arith::{int, rat, Rational};
use lorentzian::error::Result;
use lorentzian::hyperfield::{is_null, QParameter};

fn main() -> Result<()> {
    let qs = [
        ("0", QParameter::Zero),
        ("1/2", QParameter::finite(rat(1, 2))?),
        ("1", QParameter::one()),
        ("2", QParameter::finite(int(2))?),
        ("inf", QParameter::Infinity),
    ];
    let sums: [Vec<Rational>; 5] = [
        vec![int(1), int(1)],
        vec![int(1), int(2)],
        vec![int(1), int(1), int(2)],
        vec![int(1), int(1), int(3)],
        vec![int(4), int(1), int(1)],
    ];
    print!("{:<12}", "sum");
    for (name, _) in &qs {
        print!("{name:>6}");
    }
    println!();
    for s in &sums {
        print!("{:<12}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+"));
        for (_, q) in &qs {
            print!("{:>6}", is_null(s, q)?);
        }
        println!();
    }
    Ok(())
}
