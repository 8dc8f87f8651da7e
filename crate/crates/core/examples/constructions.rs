//! The standard ways to build good semigroups of N^2 from numerical data.

use good_semigroups::constructions::{amalgamation, cartesian, duplication, from_maximal_elements};
use good_semigroups::{GoodSemigroup, NumericalIdeal, NumericalSemigroup, Point};

fn show(name: &str, s: &GoodSemigroup) {
    let small: Vec<String> = s.small_elements().iter().map(|p| p.to_string()).collect();
    println!("{name}: conductor {}, local {}", s.conductor(), s.is_local());
    println!("  small {}", small.join(" "));
    let maximal: Vec<String> = s.maximal_elements().iter().map(|p| p.to_string()).collect();
    println!("  maximal {}", maximal.join(" "));
}

fn main() -> good_semigroups::Result<()> {
    let s = NumericalSemigroup::from_generators(&[2, 3])?;
    let t = NumericalSemigroup::from_generators(&[3, 4])?;

    let e = NumericalIdeal::from_generators(&s, &[6])?;
    show("duplication <2,3> by 6+S", &duplication(&s, &e)?);

    let f = NumericalIdeal::from_generators(&t, &[3])?;
    let a = amalgamation(&s, &t, &f, 2)?;
    show("amalgamation along x -> 2x", &a);

    show("<2,3> x <3,4>", &cartesian(&s, &t));

    // The maximal elements and the two projections pin down a local
    // semigroup completely.
    let left = NumericalSemigroup::from_generators(&[4, 6, 13])?;
    let maximal: Vec<Point> = [0, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 28]
        .into_iter()
        .map(|x| Point::from([x, x / 2]))
        .collect();
    let d = from_maximal_elements(&left, &s, &maximal)?;
    show("from maximal elements", &d);
    Ok(())
}
