//! Good semigroups, stored as their small elements.
//!
//! A good semigroup `S ⊆ N^n` is determined by `Small(S)`, the members below
//! its conductor `C`: a point `a` lies in `S` exactly when `a ∧ C` is small.

mod closure;
mod small_set;
mod validate;

pub use closure::{closure_small, normalize_conductor};
pub(crate) use closure::meet_closure;
pub use small_set::{SmallSet, Violation};
pub use validate::{validate_small_set, validate_up_to_conductor};
pub(crate) use validate::{check_conductor, check_g2, check_meets};

use crate::error::{Error, Result};
use crate::lattice::{box_points, AxisSet, Point};
use crate::numerical::NumericalSemigroup;

/// A validated good semigroup of `N^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoodSemigroup {
    small: SmallSet,
}

impl GoodSemigroup {
    /// Validate `small` as it stands (its top must already be the conductor).
    pub fn from_small(small: SmallSet) -> Result<Self> {
        match validate_small_set(&small) {
            Ok(()) => Ok(GoodSemigroup { small }),
            Err(violation) => Err(Error::NotGoodSemigroup { small: Box::new(small), violation }),
        }
    }

    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        Self::from_small(SmallSet::new(points)?)
    }

    /// Like [`GoodSemigroup::from_small`], but the top may lie above the
    /// conductor; it is lowered once everything else has been checked.
    pub fn from_top(small: SmallSet) -> Result<Self> {
        match validate_up_to_conductor(&small) {
            Ok(()) => Self::from_small(normalize_conductor(&small)),
            Err(violation) => Err(Error::NotGoodSemigroup { small: Box::new(small), violation }),
        }
    }

    /// The good semigroup whose small elements are `C ∧ [G]`, with the
    /// conductor lowered to its true value.
    pub fn from_generators(gens: &[Point], conductor: &Point) -> Result<Self> {
        Self::from_top(closure_small(gens, conductor)?)
    }

    /// Used by constructions whose output is valid by design; still checked
    /// in debug builds.
    pub(crate) fn from_small_unchecked(small: SmallSet) -> Self {
        debug_assert_eq!(validate_small_set(&small), Ok(()));
        GoodSemigroup { small }
    }

    /// `N^n`.
    pub fn full(dim: usize) -> Self {
        GoodSemigroup { small: SmallSet::from_sorted(vec![Point::zero(dim)]) }
    }

    pub fn dim(&self) -> usize {
        self.small.dim()
    }

    pub fn small(&self) -> &SmallSet {
        &self.small
    }

    pub fn small_elements(&self) -> &[Point] {
        self.small.points()
    }

    pub fn conductor(&self) -> &Point {
        self.small.top()
    }

    /// `γ = C - 1`.
    pub fn gamma(&self) -> Point {
        self.conductor() - &Point::ones(self.dim())
    }

    pub fn contains(&self, a: &Point) -> bool {
        assert_eq!(a.dim(), self.dim(), "dimension mismatch");
        a.is_nonnegative() && self.small.reconstructs(a)
    }

    pub fn try_contains(&self, a: &Point) -> Result<bool> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: a.dim() });
        }
        Ok(self.contains(a))
    }

    /// `S ⊆ T`, decided on the box `[0, C(S) ∨ C(T)]`. On failure returns the
    /// lexicographically first member of `S` missing from `T`.
    pub fn is_subset_of(&self, other: &GoodSemigroup) -> std::result::Result<(), Point> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let hi = self.conductor().join(other.conductor());
        match box_points(&Point::zero(self.dim()), &hi).find(|p| self.contains(p) && !other.contains(p)) {
            Some(p) => Err(p),
            None => Ok(()),
        }
    }

    /// `∂_J(S)`: small elements agreeing with the conductor on `J`.
    pub fn borders(&self, axes: AxisSet) -> Vec<Point> {
        let c = self.conductor();
        self.small
            .iter()
            .filter(|a| axes.iter().all(|j| a.get(j) == c.get(j)))
            .cloned()
            .collect()
    }

    /// Only `0` lies on the coordinate hyperplanes.
    pub fn is_local(&self) -> bool {
        self.nonlocal_witness().is_none()
    }

    pub(crate) fn nonlocal_witness(&self) -> Option<&Point> {
        self.small.iter().find(|a| !a.is_zero() && a.on_axes())
    }

    pub(crate) fn require_local(&self) -> Result<()> {
        match self.nonlocal_witness() {
            Some(w) => Err(Error::NonLocal { witness: w.clone() }),
            None => Ok(()),
        }
    }

    pub(crate) fn require_planar(&self, op: &'static str) -> Result<()> {
        if self.dim() == 2 {
            Ok(())
        } else {
            Err(Error::UnsupportedDimension { op, dim: self.dim() })
        }
    }

    /// Is there a member `s` with `s_i = x_i` and `s_j > x_j` for all `j ≠ i`?
    ///
    /// Past the conductor on axis `i` the answer is always yes. Below it,
    /// such an `s` exists iff some small element matches `x_i` on axis `i`
    /// and, on every other axis, either exceeds `x` or sits on the
    /// conductor (and so can be pushed up freely).
    pub fn delta_fiber_nonempty(&self, x: &Point, i: usize) -> bool {
        assert_eq!(x.dim(), self.dim(), "dimension mismatch");
        let c = self.conductor();
        if x.get(i) < 0 {
            return false;
        }
        if x.get(i) >= c.get(i) {
            return true;
        }
        self.small.iter().any(|a| {
            a.get(i) == x.get(i)
                && (0..self.dim()).all(|j| j == i || a.get(j) > x.get(j) || a.get(j) == c.get(j))
        })
    }

    /// `Δ^S(x) ≠ ∅`.
    pub fn delta_nonempty(&self, x: &Point) -> bool {
        (0..self.dim()).any(|i| self.delta_fiber_nonempty(x, i))
    }

    /// Small elements `a` with `Δ^S(a) = ∅`.
    pub fn maximal_elements(&self) -> Vec<Point> {
        self.small.iter().filter(|a| !self.delta_nonempty(a)).cloned().collect()
    }

    /// `π_i(S)`.
    pub fn projection(&self, i: usize) -> NumericalSemigroup {
        assert!(i < self.dim(), "axis {i} out of range");
        let c = self.conductor().get(i);
        let mut coords: Vec<i64> = self.small.iter().map(|a| a.get(i)).collect();
        coords.sort_unstable();
        coords.dedup();
        NumericalSemigroup::from_predicate(c, |x| x >= c || coords.binary_search(&x).is_ok())
            .expect("projections of good semigroups are numerical semigroups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn pts(v: &[[i64; 2]]) -> Vec<Point> {
        v.iter().map(|&p| Point::from(p)).collect()
    }

    fn dup() -> GoodSemigroup {
        GoodSemigroup::from_points(pts(&[
            [0, 0], [2, 2], [3, 3], [4, 4], [5, 5], [6, 6],
            [6, 7], [6, 8], [7, 6], [7, 7], [8, 6], [8, 8],
        ]))
        .unwrap()
    }

    #[test]
    fn generators_with_large_conductor() {
        let g = pts(&[[4, 3], [7, 13], [11, 17], [14, 27], [15, 27], [16, 20], [25, 12], [25, 16]]);
        let s = GoodSemigroup::from_generators(&g, &pt![25, 27]).unwrap();
        assert_eq!(s.conductor(), &pt![25, 27]);
        assert_eq!(s.small().len(), 130);
        assert_eq!(
            s.maximal_elements(),
            pts(&[[0, 0], [4, 3], [7, 13], [8, 6], [11, 17], [12, 9], [16, 20], [20, 23], [24, 26]])
        );
    }

    #[test]
    fn failing_generators_report_g2() {
        let err = GoodSemigroup::from_generators(&pts(&[[2, 2], [4, 2]]), &pt![6, 6]).unwrap_err();
        assert!(matches!(err, Error::NotGoodSemigroup { violation: Violation::G2 { .. }, .. }));
    }

    #[test]
    fn conductor_alone() {
        let s = GoodSemigroup::from_generators(&[pt![1, 1]], &pt![1, 1]).unwrap();
        assert_eq!(s.small_elements(), pts(&[[0, 0], [1, 1]]));
        assert!(s.is_local());
        assert_eq!(s.maximal_elements(), pts(&[[0, 0]]));
    }

    #[test]
    fn membership() {
        let s = dup();
        assert!(s.contains(&pt![6, 100]));
        assert!(!s.contains(&pt![7, 9]));
        assert!(s.contains(&pt![9, 9]));
        assert!(!s.contains(&pt![-1, 4]));
        assert!(s.try_contains(&pt![1, 2, 3]).is_err());
    }

    #[test]
    fn borders_and_locality() {
        let s = dup();
        assert_eq!(s.borders(AxisSet::single(0)), pts(&[[8, 6], [8, 8]]));
        assert_eq!(s.borders(AxisSet::EMPTY), s.small_elements());
        assert_eq!(s.borders(AxisSet::all(2)), pts(&[[8, 8]]));
        assert!(s.is_local());
    }

    #[test]
    fn fibers() {
        let s = dup();
        assert!(s.delta_fiber_nonempty(&pt![6, 3], 0));
        assert!(!s.delta_fiber_nonempty(&pt![5, 5], 0));
        assert!(s.delta_fiber_nonempty(&pt![6, 8], 0));
        assert!(s.delta_fiber_nonempty(&pt![8, 40], 0));
        assert!(!s.delta_fiber_nonempty(&pt![-1, 5], 0));
        // (9,6) is a member.
        assert!(s.delta_fiber_nonempty(&pt![8, 6], 1));
    }

    #[test]
    fn projections() {
        let s = GoodSemigroup::from_points(pts(&[[0, 0], [3, 3], [3, 4], [5, 3], [6, 6]])).unwrap();
        assert_eq!(s.projection(0), NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap());
        assert_eq!(s.projection(1), NumericalSemigroup::from_generators(&[3, 4]).unwrap());
    }

    #[test]
    fn subsets() {
        let s = GoodSemigroup::from_generators(&pts(&[[4, 3], [3, 4]]), &pt![6, 7]).unwrap();
        assert_eq!(s.is_subset_of(&s), Ok(()));
        let t1 = GoodSemigroup::from_points(pts(&[[0, 0], [3, 3]])).unwrap();
        assert_eq!(s.is_subset_of(&t1), Ok(()));
        let t2 = GoodSemigroup::from_points(pts(&[[0, 0], [3, 3], [4, 4]])).unwrap();
        let w = s.is_subset_of(&t2).unwrap_err();
        assert!(s.contains(&w) && !t2.contains(&w));
        assert!(!t2.contains(&pt![4, 3]));
    }

    #[test]
    fn full_lattice() {
        let n = GoodSemigroup::full(2);
        assert_eq!(n.conductor(), &pt![0, 0]);
        assert!(n.contains(&pt![0, 5]));
        assert!(n.is_local());
    }
}
