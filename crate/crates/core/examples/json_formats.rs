//! Reading the fixture files under `data/` and writing reports.

use std::path::PathBuf;

use lorentzian::dressian::verify_rays;
use lorentzian::error::Result;
use lorentzian::io::{load_matroid, load_polynomial, load_rays, MatroidFile, PolynomialFile, Report};
use lorentzian::lorentzian::is_lorentzian_any;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn main() -> Result<()> {
    let j = load_matroid(data("elliptic11.json"))?;
    println!("elliptic11.json: n={} d={} |J|={}", j.n(), j.d(), j.len());
    println!("as points: {}", &serde_json::to_string(&MatroidFile::from_set(&j))?[..80]);

    let rays = verify_rays(&j, &load_rays(data("t11_rays.json"), &j)?)?;
    println!("t11_rays.json: {} verified rays, complete = {}", rays.rays.len(), rays.complete);

    let f = load_polynomial(data("squarepairs.json"))?;
    let rep = is_lorentzian_any(&f, 1e-9)?;
    println!("{}", serde_json::to_string_pretty(&Report::new("check-lorentzian", true, &rep))?);
    println!("{}", serde_json::to_string(&PolynomialFile::from_polynomial(&f))?);
    Ok(())
}
