//! Seeded random local planar good semigroups.

use good_semigroups::constructions::{amalgamation, duplication};
use good_semigroups::{GoodSemigroup, NumericalIdeal, NumericalSemigroup, Point};
use rand::seq::SliceRandom;
use rand::Rng;

/// Where a random semigroup came from; the generators are kept so that
/// oracles can rebuild it independently.
#[derive(Clone, Debug)]
pub enum Origin {
    Duplication,
    Amalgamation,
    Closure { gens: Vec<Point>, cap: Point },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub semigroup: GoodSemigroup,
    pub origin: Origin,
}

fn numerical(rng: &mut impl Rng) -> NumericalSemigroup {
    loop {
        let k = rng.gen_range(1..=3);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            if s.conductor() <= 10 {
                return s;
            }
        }
    }
}

fn ideal(rng: &mut impl Rng, s: &NumericalSemigroup) -> NumericalIdeal {
    let members: Vec<i64> = (0..=s.conductor() + 4).filter(|&x| s.contains(x)).collect();
    let k = rng.gen_range(1..=2);
    let gens: Vec<i64> = (0..k).map(|_| *members.choose(rng).unwrap()).collect();
    NumericalIdeal::from_generators(s, &gens).unwrap()
}

fn fits(s: &GoodSemigroup, bound: i64) -> bool {
    s.is_local() && s.conductor().coords().iter().all(|&x| x <= bound)
}

pub fn random_duplication(rng: &mut impl Rng, bound: i64) -> Option<GoodSemigroup> {
    let s = numerical(rng);
    let e = ideal(rng, &s);
    duplication(&s, &e).ok().filter(|d| fits(d, bound))
}

pub fn random_amalgamation(rng: &mut impl Rng, bound: i64) -> Option<GoodSemigroup> {
    let s = numerical(rng);
    let t = numerical(rng);
    let e = ideal(rng, &t);
    let k = rng.gen_range(1..=3);
    amalgamation(&s, &t, &e, k).ok().filter(|a| fits(a, bound))
}

/// Random points with positive coordinates and a random cap; kept only
/// when the closure is a local good semigroup.
pub fn random_closure(rng: &mut impl Rng, bound: i64) -> Option<(GoodSemigroup, Vec<Point>, Point)> {
    let k = rng.gen_range(1..=4);
    let gens: Vec<Point> = (0..k)
        .map(|_| Point::from([rng.gen_range(1..=bound), rng.gen_range(1..=bound)]))
        .collect();
    let cap = Point::from([rng.gen_range(1..=bound), rng.gen_range(1..=bound)]);
    let s = GoodSemigroup::from_generators(&gens, &cap).ok()?;
    fits(&s, bound).then_some((s, gens, cap))
}

/// A local planar good semigroup with conductor at most `bound` in each
/// coordinate, from one of the three sources in rotation.
pub fn random_local(rng: &mut impl Rng, bound: i64) -> Instance {
    loop {
        let made = match rng.gen_range(0..3) {
            0 => random_duplication(rng, bound).map(|s| Instance { semigroup: s, origin: Origin::Duplication }),
            1 => random_amalgamation(rng, bound).map(|s| Instance { semigroup: s, origin: Origin::Amalgamation }),
            _ => random_closure(rng, bound)
                .map(|(s, gens, cap)| Instance { semigroup: s, origin: Origin::Closure { gens, cap } }),
        };
        if let Some(instance) = made {
            return instance;
        }
    }
}
