use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{BoxGrid, Point};

/// A finite, sorted, duplicate-free set of points of `N^n` with a top
/// element (the coordinatewise maximum).
///
/// A `SmallSet` is a candidate for the small elements of a good semigroup
/// or good ideal; the axioms are checked separately by
/// [`validate_small_set`](super::validate_small_set). The set it stands for
/// is the reconstruction `R(X) = {a : a ∧ top ∈ X}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SmallSet {
    #[serde(skip)]
    dim: usize,
    points: Vec<Point>,
    #[serde(skip)]
    top: Point,
}

impl SmallSet {
    /// Sorts and deduplicates `points`. Fails on an empty list, mixed
    /// dimensions or negative coordinates.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::InvalidInput("empty point set".into()))?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::InvalidInput("points must have at least one coordinate".into()));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: p.dim() });
        }
        if let Some(p) = points.iter().find(|p| !p.is_nonnegative()) {
            return Err(Error::InvalidInput(format!("{p} has a negative coordinate")));
        }
        points.sort();
        points.dedup();
        let top = points.iter().skip(1).fold(points[0].clone(), |t, p| t.join(p));
        Ok(SmallSet { dim, points, top })
    }

    /// For points already known to be valid, sorted and distinct.
    pub(crate) fn from_sorted(points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        let top = points.iter().skip(1).fold(points[0].clone(), |t, p| t.join(p));
        SmallSet { dim: top.dim(), points, top }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinatewise maximum of the points.
    pub fn top(&self) -> &Point {
        &self.top
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Literal membership in the finite list.
    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Membership in the reconstructed set: `a ∧ top ∈ X`.
    pub fn reconstructs(&self, a: &Point) -> bool {
        a.dim() == self.dim && self.contains(&a.meet(&self.top))
    }

    /// The points lying below `cap`.
    pub fn restrict(&self, cap: &Point) -> SmallSet {
        SmallSet::from_sorted(self.points.iter().filter(|p| p.leq(cap)).cloned().collect())
    }

    pub(crate) fn grid(&self) -> Grid {
        let mut grid = BoxGrid::new(Point::zero(self.dim), self.top.clone());
        for p in &self.points {
            grid.insert(p);
        }
        Grid { grid }
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.points).finish()
    }
}

impl<'a> IntoIterator for &'a SmallSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Constant-time membership in the reconstruction of a small set.
pub(crate) struct Grid {
    grid: BoxGrid,
}

impl Grid {
    pub(crate) fn top(&self) -> &Point {
        self.grid.hi()
    }

    pub(crate) fn contains(&self, a: &Point) -> bool {
        a.is_nonnegative() && self.grid.contains(&a.meet(self.grid.hi()))
    }
}

/// The first axiom found to fail, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    MissingZero,
    TopNotMember { top: Point },
    NotMeetClosed { a: Point, b: Point },
    NotAdditive { a: Point, b: Point },
    /// `a + s` leaves the ideal for a member `s` of the ambient semigroup.
    NotAnIdeal { a: Point, s: Point },
    /// No lift exists for the pair `a`, `b` that agree on `axis`.
    G2 { a: Point, b: Point, axis: usize },
    ConductorNotMinimal { axis: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingZero => write!(f, "0 is not a small element"),
            Violation::TopNotMember { top } => write!(f, "the top {top} is not a small element"),
            Violation::NotMeetClosed { a, b } => write!(f, "{a} ∧ {b} = {} is missing", a.meet(b)),
            Violation::NotAdditive { a, b } => write!(f, "{a} + {b} is missing"),
            Violation::NotAnIdeal { a, s } => write!(f, "{a} + {s} leaves the ideal"),
            Violation::G2 { a, b, axis } => {
                write!(f, "(G2) fails for {a} and {b}, which agree on axis {axis}")
            }
            Violation::ConductorNotMinimal { axis } => {
                write!(f, "the top is not the conductor: it can be lowered along axis {axis}")
            }
        }
    }
}
