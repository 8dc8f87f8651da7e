//! Closing a finite set of points and checking the good semigroup axioms.

use good_semigroups::{closure_small, validate_small_set, Error, GoodSemigroup, Point};

fn main() -> good_semigroups::Result<()> {
    let gens = [Point::from([4, 3]), Point::from([3, 4])];
    let cap = Point::from([6, 7]);
    let closed = closure_small(&gens, &cap)?;
    println!("C ∧ [G] with C = {cap}: {:?}", closed.points().iter().map(|p| p.to_string()).collect::<Vec<_>>());

    let s = GoodSemigroup::from_generators(&gens, &cap)?;
    println!("as a good semigroup: conductor {}, {} small elements", s.conductor(), s.small().len());
    for p in [[3, 3], [4, 4], [7, 5], [3, 4]] {
        println!("  {} in S: {}", Point::from(p), s.contains(&Point::from(p)));
    }

    // Not every closure is good.
    let bad = closure_small(&[Point::from([3, 4]), Point::from([7, 8])], &Point::from([8, 10]))?;
    match validate_small_set(&bad) {
        Ok(()) => println!("unexpectedly good"),
        Err(v) => println!("rejected: {v}"),
    }
    match GoodSemigroup::from_small(bad) {
        Err(Error::NotGoodSemigroup { violation, .. }) => println!("from_small agrees: {violation}"),
        other => println!("{other:?}"),
    }
    Ok(())
}
