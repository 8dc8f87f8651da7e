//! The canonical ideal and symmetry.

use good_semigroups::constructions::duplication;
use good_semigroups::gensys::minimal_ideal_generating_system;
use good_semigroups::ideals::{canonical_generators, canonical_ideal, is_symmetric};
use good_semigroups::{NumericalIdeal, NumericalSemigroup, Point};

fn main() -> good_semigroups::Result<()> {
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    // Duplicating a symmetric semigroup by a translate of S is symmetric,
    // by anything larger it is not.
    for gens in [vec![3], vec![3, 5]] {
        let e = NumericalIdeal::from_generators(&s, &gens)?;
        let d = duplication(&s, &e)?;
        let k = canonical_ideal(&d)?;
        println!("E generated by {gens:?}: conductor {}, gamma {}", d.conductor(), d.gamma());
        println!("  symmetric {}", is_symmetric(&d)?);
        let printed: Vec<String> = canonical_generators(&d)?.iter().map(Point::to_string).collect();
        println!("  K from its generators: {}", printed.join(" "));
        let minimal: Vec<String> = minimal_ideal_generating_system(&k)?.iter().map(Point::to_string).collect();
        println!("  K minimally: {}", minimal.join(" "));
        let extra: Vec<String> =
            k.small_elements().iter().filter(|p| !d.contains(p)).map(Point::to_string).collect();
        println!("  K \\ S small: {}", if extra.is_empty() { "none".into() } else { extra.join(" ") });
    }
    Ok(())
}
