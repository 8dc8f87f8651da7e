//! Arf closures, the multiplicity chain and the saturation comparison.

use good_semigroups::arf::{arf_closure_with_level, arf_saturation, is_arf, saturation_infima_closure, ArfChain};
use good_semigroups::lattice::box_points;
use good_semigroups::{GoodSemigroup, Point};

fn main() -> good_semigroups::Result<()> {
    let s = GoodSemigroup::from_points(
        [[0, 0], [3, 3], [4, 4], [5, 4], [4, 6], [6, 6]].into_iter().map(Point::from).collect(),
    )?;
    println!("S arf: {}", is_arf(&s)?);

    let (t, level) = arf_closure_with_level(&s)?;
    println!("closure sits at {level:?} of the chain for {:?} x {:?}", t.projection(0).generators(), t.projection(1).generators());
    let small: Vec<String> = t.small_elements().iter().map(Point::to_string).collect();
    println!("  small {}", small.join(" "));

    let chain = ArfChain::new(t.projection(0), t.projection(1))?;
    for i in 1..=4 {
        match chain.level(i) {
            Some(level) => println!("  level {i}: conductor {}", level.conductor()),
            None => println!("  level {i}: not a good semigroup"),
        }
    }

    // Saturating under b + c - a alone can miss points of the closure;
    // taking meets afterwards fills them back in here.
    let cap = Point::from([8, 8]);
    let saturated = arf_saturation(&s, &cap)?;
    let closure: Vec<Point> = box_points(&Point::zero(2), &cap).filter(|p| t.contains(p)).collect();
    let missing: Vec<String> =
        closure.iter().filter(|p| saturated.binary_search(p).is_err()).map(Point::to_string).collect();
    println!("in [0,{cap}] the saturation misses {}", missing.join(" "));
    println!("its meet closure is the Arf closure: {}", saturation_infima_closure(&s, &cap)? == closure);
    Ok(())
}
