//! Points of `Z^n` under the product order.
//!
//! Everything else in the crate is phrased in terms of [`Point`]: meets
//! (coordinatewise minima), sums truncated at a cap, and the `Δ`-style
//! regions used to talk about fibers of a set through a point.
//!
//! Axes are numbered from `0`. Index sets `J ⊆ {0, …, n-1}` are [`AxisSet`]s.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point with signed coordinates.
///
/// Points are immutable values. The dimension travels with the point and
/// every binary operation checks it: the panicking methods (`meet`, `leq`,
/// `+`, ...) assert equal dimensions, while the free functions in this module
/// return [`Error::DimensionMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "points need at least one coordinate");
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point::new(vec![0; dim])
    }

    /// The all-ones vector `𝟙`.
    pub fn ones(dim: usize) -> Self {
        Point::new(vec![1; dim])
    }

    /// The unit vector along `axis`.
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut c = vec![0; dim];
        c[axis] = 1;
        Point::new(c)
    }

    /// Same value in every coordinate.
    pub fn splat(dim: usize, value: i64) -> Self {
        Point::new(vec![value; dim])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    #[inline]
    pub fn get(&self, axis: usize) -> i64 {
        self.0[axis]
    }

    /// Copy with one coordinate replaced.
    pub fn with(&self, axis: usize, value: i64) -> Self {
        let mut c = self.0.clone();
        c[axis] = value;
        Point(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// True iff some coordinate is zero, i.e. the point lies on a coordinate
    /// hyperplane ("on the axes").
    pub fn on_axes(&self) -> bool {
        self.0.contains(&0)
    }

    #[inline]
    fn check(&self, other: &Point) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dimension mismatch: {self:?} vs {other:?}"
        );
    }

    fn zip_with(&self, other: &Point, f: impl Fn(i64, i64) -> i64) -> Point {
        self.check(other);
        Point(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect())
    }

    /// Coordinatewise minimum `a ∧ b`.
    pub fn meet(&self, other: &Point) -> Point {
        self.zip_with(other, i64::min)
    }

    /// Coordinatewise maximum `a ∨ b`.
    pub fn join(&self, other: &Point) -> Point {
        self.zip_with(other, i64::max)
    }

    /// Product order: `a ≤ b` iff `a_i ≤ b_i` for every `i`.
    pub fn leq(&self, other: &Point) -> bool {
        self.check(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `a ≤ b` and `a ≠ b`.
    pub fn lt(&self, other: &Point) -> bool {
        self.leq(other) && self != other
    }

    /// `(self + other) ∧ cap`.
    pub fn add_trunc(&self, other: &Point, cap: &Point) -> Point {
        self.check(other);
        self.check(cap);
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .zip(&cap.0)
                .map(|((&a, &b), &c)| (a + b).min(c))
                .collect(),
        )
    }

    /// Axes where the two points agree.
    pub fn agreeing_axes(&self, other: &Point) -> AxisSet {
        self.check(other);
        AxisSet::from_iter((0..self.dim()).filter(|&i| self.0[i] == other.0[i]))
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point::new(v)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point::new(v.to_vec())
    }
}

impl std::ops::Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Build a [`Point`] from a list of coordinates: `pt![4, 3]`.
#[macro_export]
macro_rules! pt {
    ($($x:expr),+ $(,)?) => {
        $crate::lattice::Point::new(vec![$($x as i64),+])
    };
}

/// A subset of the axes `{0, …, n-1}` (n ≤ 64).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AxisSet(u64);

impl AxisSet {
    pub const EMPTY: AxisSet = AxisSet(0);

    pub fn all(dim: usize) -> Self {
        assert!(dim <= 64);
        if dim == 64 {
            AxisSet(u64::MAX)
        } else {
            AxisSet((1u64 << dim) - 1)
        }
    }

    pub fn single(axis: usize) -> Self {
        AxisSet(1 << axis)
    }

    pub fn contains(self, axis: usize) -> bool {
        self.0 >> axis & 1 == 1
    }

    pub fn insert(&mut self, axis: usize) {
        self.0 |= 1 << axis;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Complement relative to `{0, …, dim-1}`.
    pub fn complement(self, dim: usize) -> Self {
        AxisSet(!self.0 & AxisSet::all(dim).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Every subset of `{0, …, dim-1}`.
    pub fn subsets(dim: usize) -> impl Iterator<Item = AxisSet> {
        assert!(dim < 64);
        (0..1u64 << dim).map(AxisSet)
    }
}

impl FromIterator<usize> for AxisSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = AxisSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for AxisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The shape of a [`Region`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    /// `Δ_J(a)`: equal to `a` on `J`, strictly larger off `J`.
    DeltaJ,
    /// `Δ̄_J(a)`: equal to `a` on `J`, weakly larger off `J`.
    DeltaBarJ,
    /// `Δ(a) = ⋃_i Δ_{i}(a)`.
    Delta,
    /// `Δ̄(a) = ⋃_i Δ̄_{i}(a)`.
    DeltaBar,
    /// `a + H_J`: weakly larger on `J`, equal to `a` off `J`.
    HTranslate,
}

/// One of the fixed-shape regions anchored at a base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub base: Point,
    /// Ignored by the union kinds [`RegionKind::Delta`] and [`RegionKind::DeltaBar`].
    pub axes: AxisSet,
}

impl Region {
    pub fn delta_j(base: Point, axes: AxisSet) -> Self {
        Region { kind: RegionKind::DeltaJ, base, axes }
    }

    pub fn delta_bar_j(base: Point, axes: AxisSet) -> Self {
        Region { kind: RegionKind::DeltaBarJ, base, axes }
    }

    pub fn delta(base: Point) -> Self {
        Region { kind: RegionKind::Delta, base, axes: AxisSet::EMPTY }
    }

    pub fn delta_bar(base: Point) -> Self {
        Region { kind: RegionKind::DeltaBar, base, axes: AxisSet::EMPTY }
    }

    pub fn h_translate(base: Point, axes: AxisSet) -> Self {
        Region { kind: RegionKind::HTranslate, base, axes }
    }

    /// Membership of `p`; panics on dimension mismatch (see [`in_region`]).
    pub fn contains(&self, p: &Point) -> bool {
        let a = &self.base;
        a.check(p);
        let n = a.dim();
        let fixed_then = |j: AxisSet, strict: bool| {
            (0..n).all(|k| {
                if j.contains(k) {
                    p.get(k) == a.get(k)
                } else if strict {
                    p.get(k) > a.get(k)
                } else {
                    p.get(k) >= a.get(k)
                }
            })
        };
        match self.kind {
            RegionKind::DeltaJ => fixed_then(self.axes, true),
            RegionKind::DeltaBarJ => fixed_then(self.axes, false),
            RegionKind::Delta => (0..n).any(|i| fixed_then(AxisSet::single(i), true)),
            RegionKind::DeltaBar => (0..n).any(|i| fixed_then(AxisSet::single(i), false)),
            RegionKind::HTranslate => (0..n).all(|k| {
                let d = p.get(k) - a.get(k);
                if self.axes.contains(k) {
                    d >= 0
                } else {
                    d == 0
                }
            }),
        }
    }
}

fn same_dim(a: &Point, b: &Point) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() })
    }
}

/// `a ∧ b`.
pub fn meet(a: &Point, b: &Point) -> Result<Point> {
    same_dim(a, b)?;
    Ok(a.meet(b))
}

/// `a ≤ b` in the product order.
pub fn leq(a: &Point, b: &Point) -> Result<bool> {
    same_dim(a, b)?;
    Ok(a.leq(b))
}

/// `(a + b) ∧ cap`.
pub fn add_trunc(a: &Point, b: &Point, cap: &Point) -> Result<Point> {
    same_dim(a, b)?;
    same_dim(a, cap)?;
    Ok(a.add_trunc(b, cap))
}

pub fn in_region(p: &Point, r: &Region) -> Result<bool> {
    same_dim(p, &r.base)?;
    Ok(r.contains(p))
}

/// Lexicographic iterator over the integer box `[lo, hi]`.
pub fn box_points(lo: &Point, hi: &Point) -> impl Iterator<Item = Point> {
    lo.check(hi);
    let lo = lo.clone();
    let hi = hi.clone();
    let empty = lo.coords().iter().zip(hi.coords()).any(|(a, b)| a > b);
    let mut next = if empty { None } else { Some(lo.clone()) };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut c = cur.0.clone();
        let mut k = c.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if c[k] < hi.get(k) {
                c[k] += 1;
                next = Some(Point(c));
                break;
            }
            c[k] = lo.get(k);
        }
        Some(cur)
    })
}

/// Dense membership bitmap over a box `[lo, hi]`.
#[derive(Clone, Debug)]
pub(crate) struct BoxGrid {
    lo: Point,
    hi: Point,
    strides: Vec<usize>,
    bits: Vec<bool>,
}

impl BoxGrid {
    pub(crate) fn new(lo: Point, hi: Point) -> Self {
        lo.check(&hi);
        let n = lo.dim();
        let mut strides = vec![0; n];
        let mut size = 1usize;
        for k in (0..n).rev() {
            strides[k] = size;
            size *= (hi.get(k) - lo.get(k) + 1).max(0) as usize;
        }
        BoxGrid { lo, hi, strides, bits: vec![false; size] }
    }

    pub(crate) fn hi(&self) -> &Point {
        &self.hi
    }

    fn index(&self, p: &Point) -> Option<usize> {
        let mut idx = 0;
        for k in 0..p.dim() {
            let x = p.get(k);
            if x < self.lo.get(k) || x > self.hi.get(k) {
                return None;
            }
            idx += (x - self.lo.get(k)) as usize * self.strides[k];
        }
        Some(idx)
    }

    pub(crate) fn contains(&self, p: &Point) -> bool {
        self.index(p).is_some_and(|i| self.bits[i])
    }

    /// Returns true if the point was newly inserted. Points outside the box
    /// are ignored.
    pub(crate) fn insert(&mut self, p: &Point) -> bool {
        match self.index(p) {
            Some(i) if !self.bits[i] => {
                self.bits[i] = true;
                true
            }
            _ => false,
        }
    }
}
