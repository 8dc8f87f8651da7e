//! Standard ways to build good semigroups from numerical data.
//!
//! Every construction evaluates its defining formula on a finite box,
//! truncates at a cap known to dominate the conductor, lowers the cap to the
//! true conductor and validates the result.

use crate::error::{Error, Result};
use crate::lattice::{box_points, Point};
use crate::numerical::{NumericalIdeal, NumericalSemigroup};
use crate::semigroup::{meet_closure, GoodSemigroup, SmallSet};

fn finish(points: Vec<Point>) -> Result<GoodSemigroup> {
    GoodSemigroup::from_top(SmallSet::new(points)?)
}

/// `S ⋈ E = D ∪ (E × E) ∪ {a ∧ b : a ∈ D, b ∈ E × E}` with `D` the diagonal.
pub fn duplication(s: &NumericalSemigroup, e: &NumericalIdeal) -> Result<GoodSemigroup> {
    e.is_subset_of(s).map_err(Error::NotContained)?;
    let c = e.conductor();
    let cap = Point::from([c, c]);
    let diagonal = (0..=c).filter(|&x| s.contains(x)).map(|x| Point::from([x, x]));
    finish(meet_closure(diagonal.chain(square(e, e)), &cap))
}

/// The amalgamation of `S` with `T` along `E` for the morphism `x ↦ k·x`:
/// `D ∪ (g⁻¹(E) × E) ∪ {a ∧ b : a ∈ D, b ∈ g⁻¹(E) × E}` with
/// `D = {(s, k·s)}`.
pub fn amalgamation(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
    e: &NumericalIdeal,
    k: i64,
) -> Result<GoodSemigroup> {
    if e.ambient() != t {
        return Err(Error::AmbientMismatch);
    }
    e.is_subset_of(t).map_err(Error::NotContained)?;
    let pre = e.preimage_scale(k, s)?;
    let cap = Point::from([pre.conductor(), e.conductor()]);
    // Past this point (s, k·s) lies above the cap.
    let last = pre.conductor().max(s.conductor()).max(e.conductor());
    let diagonal = (0..=last)
        .filter(|&x| s.contains(x))
        .map(|x| Point::from([x, k * x]).meet(&cap));
    finish(meet_closure(diagonal.chain(square(&pre, e)), &cap))
}

fn square<'a>(a: &'a NumericalIdeal, b: &'a NumericalIdeal) -> impl Iterator<Item = Point> + 'a {
    a.small_elements()
        .iter()
        .flat_map(move |&x| b.small_elements().iter().map(move |&y| Point::from([x, y])))
}

/// `S₁ × S₂`.
pub fn cartesian(s1: &NumericalSemigroup, s2: &NumericalSemigroup) -> GoodSemigroup {
    product(&[s1.clone(), s2.clone()])
}

/// `S₁ × … × Sₙ`; the small elements are the products of the factors'
/// small elements.
pub fn product(factors: &[NumericalSemigroup]) -> GoodSemigroup {
    assert!(!factors.is_empty(), "empty product");
    let mut points = vec![Vec::new()];
    for f in factors {
        points = points
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                f.small_elements().iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut points: Vec<Point> = points.into_iter().map(Point::new).collect();
    points.sort();
    GoodSemigroup::from_small_unchecked(SmallSet::new(points).expect("nonempty product"))
}

/// `T = {(x, y) ∈ S₁ × S₂ : (x, y) ∉ Δ(a) for every a ∈ M}`.
///
/// A planar good semigroup with projections `S₁`, `S₂` is determined by its
/// maximal elements `M`. Past `max(M) + (C₁, C₂)` nothing new happens, so
/// the set is evaluated on the box up to one step beyond that.
pub fn from_maximal_elements(
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    maximal: &[Point],
) -> Result<GoodSemigroup> {
    for a in maximal {
        if a.dim() != 2 {
            return Err(Error::UnsupportedDimension { op: "from_maximal_elements", dim: a.dim() });
        }
        if !s1.contains(a.get(0)) || !s2.contains(a.get(1)) {
            return Err(Error::InvalidInput(format!("{a} is not in the product of the projections")));
        }
    }
    let corner = maximal.iter().fold(Point::zero(2), |m, a| m.join(a));
    let bound = &(&corner + &Point::from([s1.conductor(), s2.conductor()])) + &Point::ones(2);
    let in_delta = |p: &Point, a: &Point| {
        (p.get(0) == a.get(0) && p.get(1) > a.get(1)) || (p.get(1) == a.get(1) && p.get(0) > a.get(0))
    };
    let points = box_points(&Point::zero(2), &bound)
        .filter(|p| s1.contains(p.get(0)) && s2.contains(p.get(1)))
        .filter(|p| !maximal.iter().any(|a| in_delta(p, a)))
        .collect();
    finish(points)
}
