//! Minimal good generating systems of local planar semigroups.

use good_semigroups::constructions::{cartesian, duplication};
use good_semigroups::gensys::{
    is_minimal_system, minimal_generating_system, product_generating_system, reduce_generating_system, GenSystem,
};
use good_semigroups::{closure_small, NumericalIdeal, NumericalSemigroup, Point};

fn fmt(points: &[Point]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> good_semigroups::Result<()> {
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    let e = NumericalIdeal::from_generators(&s, &[3, 5])?;
    let d = duplication(&s, &e)?;

    let g = minimal_generating_system(&d)?;
    println!("minimal system of the duplication: {}", fmt(&g));
    println!("closes back to S: {}", &closure_small(&g, d.conductor())? == d.small());
    println!("minimal: {}", is_minimal_system(&GenSystem::new(&g, d.conductor())?, &d)?);

    // Every small element generates; reduction keeps only what is needed.
    let all: Vec<Point> = d.small_elements().iter().filter(|p| !p.is_zero()).cloned().collect();
    println!("{} small elements reduce to {}", all.len(), fmt(&reduce_generating_system(&d, &all)?));

    // Non-local products have no minimal system in this sense, but the
    // factors still give a finite generating set.
    let t = NumericalSemigroup::from_generators(&[2, 5])?;
    let p = cartesian(&s, &t);
    let gens = product_generating_system(&[s.clone(), t]);
    println!("product system of <3,5> x <2,5>: {}", fmt(&gens));
    println!("generates: {}", &closure_small(&gens, p.conductor())? == p.small());
    Ok(())
}
