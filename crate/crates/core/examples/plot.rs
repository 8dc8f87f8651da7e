//! Drawing planar semigroups as ASCII or SVG.
//!
//! `cargo run --example plot -- out.svg` writes the SVG as well.

use good_semigroups::constructions::amalgamation;
use good_semigroups::gensys::minimal_generating_system;
use good_semigroups::plot::Plot;
use good_semigroups::{NumericalIdeal, NumericalSemigroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = NumericalSemigroup::from_generators(&[2, 3])?;
    let t = NumericalSemigroup::from_generators(&[3, 4])?;
    let e = NumericalIdeal::from_generators(&t, &[3])?;
    let a = amalgamation(&s, &t, &e, 2)?;

    let gens = minimal_generating_system(&a)?;
    let plot = Plot::new(a.small())?.mark(&gens);
    print!("{}", plot.ascii());

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, plot.svg())?;
        println!("wrote {path}");
    }
    Ok(())
}
