//! The Arf property and Arf closure of planar good semigroups.
//!
//! `S` is Arf when `b + c - a ∈ S` whenever `a <= b` and `a <= c`. In the
//! plane the Arf closure is found among the semigroups
//!
//! ```text
//! T(i) = {(0,0), (s_1,u_1), ..., (s_{i-1},u_{i-1})} ∪ T₁(s_i) × T₂(u_i)
//! ```
//!
//! built from the Arf closures `T₁ = {0, s_1, s_2, ...}` and
//! `T₂ = {0, u_1, u_2, ...}` of the two projections. Not every `T(i)` is a
//! semigroup: with `T₁ = ⟨2,3⟩` and `T₂ = ⟨4,6,7,9⟩`, `T(4)` has `(2,4)`
//! but not `(4,8)`. The ones that are Arf good semigroups form a chain, and
//! the closure is the smallest of them containing `S`.

use crate::constructions::cartesian;
use crate::error::{Error, Result};
use crate::ideals::tail_ideal;
use crate::lattice::{box_points, BoxGrid, Point};
use crate::numerical::NumericalSemigroup;
use crate::semigroup::{meet_closure, GoodSemigroup, SmallSet};

/// A pair of Arf numerical semigroups, the data behind the levels `T(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArfChain {
    t1: NumericalSemigroup,
    t2: NumericalSemigroup,
}

impl ArfChain {
    pub fn new(t1: NumericalSemigroup, t2: NumericalSemigroup) -> Result<Self> {
        for t in [&t1, &t2] {
            if !t.is_arf() {
                return Err(Error::InvalidInput(format!(
                    "numerical semigroup with small elements {:?} is not Arf",
                    t.small_elements()
                )));
            }
        }
        Ok(ArfChain { t1, t2 })
    }

    pub fn t1(&self) -> &NumericalSemigroup {
        &self.t1
    }

    pub fn t2(&self) -> &NumericalSemigroup {
        &self.t2
    }

    /// The candidate set `T(i)`, for `i >= 1`, as small elements.
    ///
    /// Its top is `(max(s_i, C(T₁)), max(u_i, C(T₂)))`: the tails
    /// `T₁(s_i)` and `T₂(u_i)` still have the gaps of `T₁`, `T₂` above
    /// `s_i`, `u_i`.
    pub fn candidate(&self, i: usize) -> SmallSet {
        assert!(i >= 1, "levels start at 1");
        let (s, u) = (self.t1.element_at(i), self.t2.element_at(i));
        let c = Point::from([s.max(self.t1.conductor()), u.max(self.t2.conductor())]);
        let mut points: Vec<Point> = (0..i)
            .map(|k| Point::from([self.t1.element_at(k), self.t2.element_at(k)]))
            .collect();
        for x in (s..=c.get(0)).filter(|&x| self.t1.contains(x)) {
            for y in (u..=c.get(1)).filter(|&y| self.t2.contains(y)) {
                points.push(Point::from([x, y]));
            }
        }
        SmallSet::new(points).expect("nonempty")
    }

    /// `T(i)` when it is an Arf good semigroup.
    pub fn level(&self, i: usize) -> Option<GoodSemigroup> {
        let t = GoodSemigroup::from_top(self.candidate(i)).ok()?;
        is_arf(&t).expect("planar").then_some(t)
    }

    /// `T₁ × T₂`, which contains every level.
    pub fn product(&self) -> GoodSemigroup {
        cartesian(&self.t1, &self.t2)
    }
}

/// `T(i)` for the Arf numerical semigroups `t1`, `t2`.
pub fn build_chain_level(t1: &NumericalSemigroup, t2: &NumericalSemigroup, i: usize) -> Result<GoodSemigroup> {
    if i == 0 {
        return Err(Error::InvalidInput("levels start at 1".into()));
    }
    ArfChain::new(t1.clone(), t2.clone())?
        .level(i)
        .ok_or_else(|| Error::InvalidInput(format!("level {i} is not an Arf good semigroup")))
}

/// Is every member of `S` in the set reconstructed from `x`?
fn contained_in(s: &GoodSemigroup, x: &SmallSet) -> bool {
    let hi = s.conductor().join(x.top());
    box_points(&Point::zero(2), &hi).all(|p| !s.contains(&p) || x.reconstructs(&p))
}

/// Which candidate the Arf closure turned out to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArfLevel {
    /// `T(i)`.
    Chain(usize),
    /// `T₁ × T₂`, reached only when `S` is not local.
    Product,
}

/// `b + c - a ∈ S` for all small `a <= b`, `a <= c`.
pub fn is_arf(s: &GoodSemigroup) -> Result<bool> {
    s.require_planar("is_arf")?;
    let small = s.small_elements();
    for a in small {
        let above: Vec<&Point> = small.iter().filter(|b| a.leq(b)).collect();
        for (k, b) in above.iter().enumerate() {
            for c in &above[k..] {
                if !s.contains(&(&(*b + *c) - a)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `S` is Arf iff every tail `S(a)` with `a` small is stable.
pub fn is_arf_via_stability(s: &GoodSemigroup) -> Result<bool> {
    s.require_planar("is_arf_via_stability")?;
    for a in s.small_elements() {
        if !tail_ideal(s, a)?.is_stable() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The smallest Arf good semigroup containing `S`.
pub fn arf_closure(s: &GoodSemigroup) -> Result<GoodSemigroup> {
    Ok(arf_closure_with_level(s)?.0)
}

/// [`arf_closure`] together with the level it was found at.
pub fn arf_closure_with_level(s: &GoodSemigroup) -> Result<(GoodSemigroup, ArfLevel)> {
    s.require_planar("arf_closure")?;
    let chain = ArfChain::new(s.projection(0).arf_closure(), s.projection(1).arf_closure())?;
    if !contained_in(s, &chain.candidate(1)) {
        return Ok((chain.product(), ArfLevel::Product));
    }
    // The candidates decrease with i, and one containing S has
    // (s_i, u_i) <= C(S), which bounds the scan.
    let c1 = s.conductor().get(0);
    let cap = (1..=c1).filter(|&x| chain.t1().contains(x)).count().max(1);
    let mut last = 1;
    while contained_in(s, &chain.candidate(last + 1)) {
        last += 1;
        assert!(last <= cap + 1, "containment scan ran past its bound");
    }
    for i in (1..=last).rev() {
        if let Some(t) = chain.level(i) {
            return Ok((t, ArfLevel::Chain(i)));
        }
    }
    unreachable!("T(1) is always an Arf good semigroup")
}

/// Saturate the members of `S` in `[0, cap]` under `b + c - a` for
/// `a <= b`, `a <= c`.
///
/// Since `b + c - a >= b, c`, points outside the box never produce points
/// inside it, so the result is the saturation intersected with the box.
pub fn arf_saturation(s: &GoodSemigroup, cap: &Point) -> Result<Vec<Point>> {
    s.require_planar("arf_saturation")?;
    let zero = Point::zero(2);
    let mut grid = BoxGrid::new(zero.clone(), cap.clone());
    let mut items: Vec<Point> = box_points(&zero, cap).filter(|p| s.contains(p)).collect();
    for p in &items {
        grid.insert(p);
    }
    loop {
        let mut fresh = Vec::new();
        for a in &items {
            let above: Vec<&Point> = items.iter().filter(|b| a.leq(b)).collect();
            for (k, b) in above.iter().enumerate() {
                for c in &above[k..] {
                    let x = &(*b + *c) - a;
                    if grid.insert(&x) {
                        fresh.push(x);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        items.extend(fresh);
    }
    items.sort();
    Ok(items)
}

/// The meet closure of [`arf_saturation`] on the same box.
///
/// Whether this always recovers the Arf closure is open; callers compare
/// the two rather than assume it.
pub fn saturation_infima_closure(s: &GoodSemigroup, cap: &Point) -> Result<Vec<Point>> {
    Ok(meet_closure(arf_saturation(s, cap)?, cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn pts(v: &[[i64; 2]]) -> Vec<Point> {
        v.iter().map(|&p| Point::from(p)).collect()
    }

    fn ns(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn gens(v: &[[i64; 2]], c: Point) -> GoodSemigroup {
        GoodSemigroup::from_generators(&pts(v), &c).unwrap()
    }

    fn not_good_closure_example() -> GoodSemigroup {
        GoodSemigroup::from_points(pts(&[[0, 0], [3, 3], [4, 4], [5, 4], [4, 6], [6, 6]])).unwrap()
    }

    #[test]
    fn chain_levels() {
        let t = ns(&[3, 4]).arf_closure();
        let l1 = build_chain_level(&t, &t, 1).unwrap();
        assert_eq!(l1.small_elements(), pts(&[[0, 0], [3, 3]]));
        let l4 = build_chain_level(&t, &t, 4).unwrap();
        assert_eq!(l4.small_elements(), pts(&[[0, 0], [3, 3], [4, 4], [5, 5], [6, 6]]));

        let t1 = ns(&[3, 5, 7]);
        let l = build_chain_level(&t1, &t, 1).unwrap();
        assert_eq!(l.small_elements(), pts(&[[0, 0], [3, 3], [5, 3]]));
        assert_eq!(l.conductor(), &pt![5, 3]);

        assert!(build_chain_level(&ns(&[3, 4]), &t, 1).is_err());
    }

    #[test]
    fn some_levels_are_not_semigroups() {
        let chain = ArfChain::new(ns(&[2, 3]), ns(&[4, 6, 7, 9])).unwrap();
        assert!(chain.level(3).is_some());
        // (2,4) + (2,4) = (4,8) is missing from T(4).
        assert_eq!(chain.candidate(4).points(), pts(&[[0, 0], [2, 4], [3, 6], [4, 7], [5, 8]]));
        assert!(chain.level(4).is_none());
        assert!(build_chain_level(chain.t1(), chain.t2(), 4).is_err());
    }

    #[test]
    fn closures_of_small_planar_semigroups() {
        let s = gens(&[[4, 3], [3, 4]], pt![6, 7]);
        let (t, level) = arf_closure_with_level(&s).unwrap();
        assert_eq!(t.small_elements(), pts(&[[0, 0], [3, 3]]));
        assert_eq!(level, ArfLevel::Chain(1));

        let s = gens(&[[5, 3], [3, 4]], pt![6, 7]);
        let t = arf_closure(&s).unwrap();
        assert_eq!(t.small_elements(), pts(&[[0, 0], [3, 3], [5, 3]]));
        assert_eq!(t.conductor(), &pt![5, 3]);

        let s = gens(&[[3, 3], [4, 4]], pt![6, 6]);
        let (t, level) = arf_closure_with_level(&s).unwrap();
        assert_eq!(t.small_elements(), pts(&[[0, 0], [3, 3], [4, 4], [5, 5], [6, 6]]));
        assert_eq!(level, ArfLevel::Chain(4));

        let s = not_good_closure_example();
        let t = arf_closure(&s).unwrap();
        assert_eq!(t.small_elements(), pts(&[[0, 0], [3, 3], [4, 4]]));
    }

    #[test]
    fn the_printed_label_is_not_good() {
        assert!(GoodSemigroup::from_generators(&pts(&[[3, 4], [4, 4]]), &pt![6, 6]).is_err());
    }

    #[test]
    fn arf_tests_agree() {
        let cases = [
            gens(&[[4, 3], [3, 4]], pt![6, 7]),
            gens(&[[5, 3], [3, 4]], pt![6, 7]),
            gens(&[[3, 3], [4, 4]], pt![6, 6]),
            not_good_closure_example(),
            GoodSemigroup::from_points(pts(&[[0, 0], [3, 3]])).unwrap(),
            GoodSemigroup::full(2),
        ];
        let expected = [false, false, false, false, true, true];
        for (s, want) in cases.iter().zip(expected) {
            assert_eq!(is_arf(s).unwrap(), want, "{:?}", s.small());
            assert_eq!(is_arf_via_stability(s).unwrap(), want, "{:?}", s.small());
            let t = arf_closure(s).unwrap();
            assert_eq!(&t == s, want);
        }
    }

    #[test]
    fn saturation_gap() {
        let s = not_good_closure_example();
        let cap = pt![8, 8];
        let u = arf_saturation(&s, &cap).unwrap();
        let t = arf_closure(&s).unwrap();
        let t_box: Vec<Point> = box_points(&pt![0, 0], &cap).filter(|p| t.contains(p)).collect();
        let gap: Vec<Point> = t_box.iter().filter(|p| !u.contains(p)).cloned().collect();
        assert_eq!(gap, vec![pt![4, 5]]);
        assert_eq!(saturation_infima_closure(&s, &cap).unwrap(), t_box);
    }

    #[test]
    fn saturation_of_an_arf_semigroup_is_itself() {
        let s = GoodSemigroup::from_points(pts(&[[0, 0], [3, 3], [4, 4]])).unwrap();
        let cap = pt![7, 7];
        let members: Vec<Point> = box_points(&pt![0, 0], &cap).filter(|p| s.contains(p)).collect();
        assert_eq!(arf_saturation(&s, &cap).unwrap(), members);
        assert_eq!(saturation_infima_closure(&s, &cap).unwrap(), members);
    }

    #[test]
    fn non_local_closure_is_the_product() {
        let s = cartesian(&ns(&[3, 5, 7]), &ns(&[2, 5]));
        let (t, level) = arf_closure_with_level(&s).unwrap();
        assert_eq!(level, ArfLevel::Product);
        assert_eq!(t, cartesian(&ns(&[3, 5, 7]), &ns(&[2, 5]).arf_closure()));
        assert!(is_arf(&t).unwrap());
    }
}
