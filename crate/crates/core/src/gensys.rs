//! Good generating systems and the minimal one of a local planar good
//! semigroup or ideal.
//!
//! `G` generates `S` when `C ∧ [G] = Small(S)`, where `[G]` is the least
//! set containing `G` and closed under sums and meets. Membership in
//! `C ∧ [G]` reduces to asking whether `⟨G⟩` (plain sums) meets the fibers
//! `Δ̄_i(a)`; for local semigroups in the plane that is a small knapsack
//! problem.

use crate::error::{Error, Result};
use crate::ideals::GoodRelativeIdeal;
use crate::lattice::{AxisSet, Point};
use crate::numerical::NumericalSemigroup;
use crate::semigroup::{closure_small, GoodSemigroup, SmallSet};

/// A finite set of points inside the box `B(C) = [0, C]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSystem {
    points: Vec<Point>,
    conductor: Point,
}

impl GenSystem {
    /// Truncates every point at `conductor`, then sorts and deduplicates.
    pub fn new(points: &[Point], conductor: &Point) -> Result<Self> {
        for p in points {
            if p.dim() != conductor.dim() {
                return Err(Error::DimensionMismatch { left: conductor.dim(), right: p.dim() });
            }
            if !p.is_nonnegative() {
                return Err(Error::InvalidInput(format!("generator {p} has a negative coordinate")));
            }
        }
        let mut points: Vec<Point> = points.iter().map(|p| p.meet(conductor)).collect();
        points.sort();
        points.dedup();
        Ok(GenSystem { points, conductor: conductor.clone() })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn conductor(&self) -> &Point {
        &self.conductor
    }

    /// `C ∧ [G]`.
    pub fn closure(&self) -> SmallSet {
        closure_small(&self.points, &self.conductor).expect("checked on construction")
    }

    /// Is `a ∈ C ∧ [G]`? Decided through fibers of `⟨G⟩` rather than by
    /// computing the closure.
    pub fn contains(&self, a: &Point) -> Result<bool> {
        if a.dim() != self.conductor.dim() || !a.is_nonnegative() || !a.leq(&self.conductor) {
            return Err(Error::InvalidInput(format!("{a} is not in the box [0, {}]", self.conductor)));
        }
        // The conductor always belongs to the truncated closure.
        if a == &self.conductor {
            return Ok(true);
        }
        let free = border_axes(a, &self.conductor).complement(a.dim());
        for i in free.iter() {
            if !monoid_fiber_reach(&self.points, i, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `J_a = {j : a_j = C_j}`.
fn border_axes(a: &Point, c: &Point) -> AxisSet {
    (0..a.dim()).filter(|&j| a.get(j) == c.get(j)).collect()
}

/// Does some finite sum of elements of `gens` have `i`-th coordinate exactly
/// `a_i` and other coordinate at least `a_j`?
///
/// `f[v]` is the largest other coordinate (capped at `a_j`) among sums whose
/// `i`-th coordinate is `v`. Every nonzero generator must be positive in
/// both coordinates, so each step strictly increases `v`.
pub fn monoid_fiber_reach(gens: &[Point], i: usize, a: &Point) -> Result<bool> {
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension { op: "monoid_fiber_reach", dim: a.dim() });
    }
    let j = 1 - i;
    let steps: Vec<(usize, i64)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.on_axes() {
                Err(Error::NonLocal { witness: g.clone() })
            } else {
                Ok((g.get(i) as usize, g.get(j)))
            }
        })
        .collect::<Result<_>>()?;
    if a.get(i) < 0 {
        return Ok(false);
    }
    let target = a.get(i) as usize;
    let cap = a.get(j).max(0);
    let mut f: Vec<Option<i64>> = vec![None; target + 1];
    f[0] = Some(0);
    for v in 1..=target {
        f[v] = steps
            .iter()
            .filter(|&&(di, _)| di <= v)
            .filter_map(|&(di, dj)| f[v - di].map(|w| (w + dj).min(cap)))
            .max();
    }
    Ok(f[target].is_some_and(|w| w >= a.get(j)))
}

/// The minimality test for a generating system of a local planar good
/// semigroup, applied to each `a ∈ G` against `⟨G ∖ {a}⟩`:
/// when `a` is off the border no fiber `Δ̄_i(a)` is reached; otherwise some
/// fiber `Δ̄_i(a)` with `i ∉ J_a` is missed.
pub fn is_minimal_system(gens: &GenSystem, s: &GoodSemigroup) -> Result<bool> {
    s.require_planar("is_minimal_system")?;
    s.require_local()?;
    let c = s.conductor();
    if gens.conductor() != c || &gens.closure() != s.small() {
        return Err(Error::NotAGeneratingSystem);
    }
    if gens.points() == [c.clone()] {
        return Ok(true);
    }
    for (k, a) in gens.points().iter().enumerate() {
        let rest = without(gens.points(), k);
        let border = border_axes(a, c);
        let mut missed = border.complement(2).iter().map(|i| monoid_fiber_reach(&rest, i, a).map(|r| !r));
        let ok = if border.is_empty() {
            missed.try_fold(true, |acc, m| m.map(|m| acc && m))?
        } else {
            missed.try_fold(false, |acc, m| m.map(|m| acc || m))?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn without(points: &[Point], k: usize) -> Vec<Point> {
    points.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, p)| p.clone()).collect()
}

/// Is `a ∈ C ∧ [rest]`, with `a ≠ C`?
fn redundant(rest: &[Point], a: &Point, c: &Point) -> Result<bool> {
    for i in border_axes(a, c).complement(a.dim()).iter() {
        if !monoid_fiber_reach(rest, i, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique minimal good generating system of a local planar good
/// semigroup.
pub fn minimal_generating_system(s: &GoodSemigroup) -> Result<Vec<Point>> {
    let start: Vec<Point> = s.small_elements().to_vec();
    reduce_generating_system(s, &start)
}

/// Remove redundant elements from the generating system `gens`, scanning
/// in the given order. By uniqueness of the minimal system the result does
/// not depend on the order; it is returned sorted.
pub fn reduce_generating_system(s: &GoodSemigroup, gens: &[Point]) -> Result<Vec<Point>> {
    s.require_planar("minimal_generating_system")?;
    s.require_local()?;
    let c = s.conductor();
    let system = GenSystem::new(gens, c)?;
    if &system.closure() != s.small() {
        return Err(Error::NotAGeneratingSystem);
    }
    // 0 and C belong to every truncated closure, so they are never needed.
    let mut seen = std::collections::HashSet::new();
    let mut current: Vec<Point> = gens
        .iter()
        .map(|g| g.meet(c))
        .filter(|g| !g.is_zero() && g != c && seen.insert(g.clone()))
        .collect();
    let mut k = 0;
    while k < current.len() {
        let rest = without(&current, k);
        if redundant(&rest, &current[k], c)? {
            current.remove(k);
        } else {
            k += 1;
        }
    }
    if current.is_empty() && !c.is_zero() {
        current.push(c.clone());
    }
    current.sort();
    Ok(current)
}

/// The generating system `∏ (A_i ∪ {0}) ∖ {0}` of `S₁ × … × Sₙ`, with
/// `A_i` the minimal generators of `S_i` below its conductor (or `{C_i}`
/// when there are none).
///
/// Not minimal, but canonical: the minimal systems of a non-local product
/// are not unique.
pub fn product_generating_system(factors: &[NumericalSemigroup]) -> Vec<Point> {
    let mut points = vec![Vec::new()];
    for f in factors {
        let c = f.conductor();
        let mut choices: Vec<i64> = std::iter::once(0).chain(f.generators().iter().copied().filter(|&g| g < c)).collect();
        // As in the planar case, C is kept only when nothing else is left.
        if choices.len() == 1 && c > 0 {
            choices.push(c);
        }
        points = points
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                choices.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut points: Vec<Point> = points.into_iter().map(Point::new).filter(|p| !p.is_zero()).collect();
    points.sort();
    points
}

/// Is there `h ∈ H` and `s ∈ S` with `(h + s)_i = a_i` and
/// `(h + s)_j >= a_j`?
pub fn ideal_fiber_reach(h: &[Point], s: &GoodSemigroup, i: usize, a: &Point) -> Result<bool> {
    s.require_planar("ideal_fiber_reach")?;
    let c = s.conductor();
    let j = 1 - i;
    Ok(h.iter().any(|h| {
        let x = a - h;
        if x.get(i) < 0 {
            false
        } else if x.get(i) >= c.get(i) {
            true
        } else {
            s.small()
                .iter()
                .any(|y| y.get(i) == x.get(i) && (y.get(j) >= x.get(j) || y.get(j) == c.get(j)))
        }
    }))
}

/// The unique minimal good generating system of a good relative ideal of a
/// local planar good semigroup.
pub fn minimal_ideal_generating_system(e: &GoodRelativeIdeal) -> Result<Vec<Point>> {
    let s = e.ambient();
    s.require_planar("minimal_ideal_generating_system")?;
    s.require_local()?;
    let c = e.conductor();
    let mut current: Vec<Point> = e.small_elements().iter().filter(|g| *g != c).cloned().collect();
    let mut k = 0;
    while k < current.len() {
        let rest = without(&current, k);
        let a = &current[k];
        let mut all = true;
        for i in border_axes(a, c).complement(2).iter() {
            if !ideal_fiber_reach(&rest, s, i, a)? {
                all = false;
                break;
            }
        }
        if all {
            current.remove(k);
        } else {
            k += 1;
        }
    }
    if current.is_empty() {
        current.push(c.clone());
    }
    Ok(current)
}
