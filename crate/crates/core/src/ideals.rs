//! Good relative ideals of a good semigroup.
//!
//! A relative ideal `E` of `S` satisfies `E + S ⊆ E`; it is good when it also
//! satisfies (G1) and (G2). Only ideals inside `N^n` are represented, which
//! loses nothing since any relative ideal can be translated there.

use crate::error::{Error, Result};
use crate::lattice::{box_points, Point};
use crate::semigroup::{
    check_conductor, check_g2, check_meets, meet_closure, normalize_conductor, GoodSemigroup, SmallSet,
    Violation,
};

/// A validated good relative ideal, stored as its small elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodRelativeIdeal {
    ambient: GoodSemigroup,
    small: SmallSet,
    min: Point,
}

/// Check `x` as the small elements of a good relative ideal of `s`.
pub fn validate_ideal_small(s: &GoodSemigroup, x: &SmallSet) -> std::result::Result<(), Violation> {
    validate_ideal_up_to_conductor(s, x)?;
    check_conductor(&x.grid())
}

fn validate_ideal_up_to_conductor(s: &GoodSemigroup, x: &SmallSet) -> std::result::Result<(), Violation> {
    check_meets(x)?;
    let top = x.top();
    // E + S ⊆ E only depends on S truncated at the top of E.
    let hi = top.join(s.conductor());
    let mut shifts: Vec<Point> = box_points(&Point::zero(s.dim()), &hi)
        .filter(|p| s.contains(p))
        .map(|p| p.meet(top))
        .collect();
    shifts.sort();
    shifts.dedup();
    for a in x {
        for u in &shifts {
            if !x.contains(&a.add_trunc(u, top)) {
                return Err(Violation::NotAnIdeal { a: a.clone(), s: u.clone() });
            }
        }
    }
    check_g2(&x.grid())
}

impl GoodRelativeIdeal {
    pub fn from_small(s: &GoodSemigroup, small: SmallSet) -> Result<Self> {
        if small.dim() != s.dim() {
            return Err(Error::DimensionMismatch { left: s.dim(), right: small.dim() });
        }
        match validate_ideal_small(s, &small) {
            Ok(()) => {
                let min = small.iter().skip(1).fold(small.points()[0].clone(), |m, p| m.meet(p));
                Ok(GoodRelativeIdeal { ambient: s.clone(), small, min })
            }
            Err(violation) => Err(Error::NotGoodIdeal { small: Box::new(small), violation }),
        }
    }

    /// Like [`GoodRelativeIdeal::from_small`], but the top may lie above the
    /// conductor.
    pub fn from_top(s: &GoodSemigroup, small: SmallSet) -> Result<Self> {
        if small.dim() != s.dim() {
            return Err(Error::DimensionMismatch { left: s.dim(), right: small.dim() });
        }
        match validate_ideal_up_to_conductor(s, &small) {
            Ok(()) => Self::from_small(s, normalize_conductor(&small)),
            Err(violation) => Err(Error::NotGoodIdeal { small: Box::new(small), violation }),
        }
    }

    /// The meets of elements of `H + S`, which must form a good ideal.
    ///
    /// Everything past `max(H) + C(S)` is a member, so the computation runs
    /// on that box.
    pub fn from_generators(s: &GoodSemigroup, h: &[Point]) -> Result<Self> {
        let corner = h.iter().fold(Point::zero(s.dim()), |m, p| m.join(p));
        Self::from_generators_at(s, h, &(&corner + s.conductor()))
    }

    /// The ideal with small elements `C ∧ [H]`, where `[H]` is the set of
    /// meets of `H + S`: `H` as a good generating system with conductor `C`.
    /// A `C` above the true conductor is lowered.
    pub fn from_generators_at(s: &GoodSemigroup, h: &[Point], conductor: &Point) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for p in h {
            if p.dim() != s.dim() {
                return Err(Error::DimensionMismatch { left: s.dim(), right: p.dim() });
            }
            if !p.is_nonnegative() {
                return Err(Error::InvalidInput(format!("ideal generator {p} has a negative coordinate")));
            }
        }
        if conductor.dim() != s.dim() {
            return Err(Error::DimensionMismatch { left: s.dim(), right: conductor.dim() });
        }
        let cap = conductor.join(&Point::zero(s.dim()));
        // For s ∈ S, s ∧ cap is again in S and (h + s) ∧ cap = (h + s ∧ cap) ∧ cap.
        let members: Vec<Point> = box_points(&Point::zero(s.dim()), &cap).filter(|p| s.contains(p)).collect();
        let cap = &cap;
        let sums = h.iter().flat_map(|g| members.iter().map(move |m| g.add_trunc(m, cap)));
        let closed = SmallSet::new(meet_closure(sums, cap))?;
        Self::from_top(s, closed)
    }

    /// `S` as an ideal of itself.
    pub fn whole(s: &GoodSemigroup) -> Self {
        GoodRelativeIdeal { ambient: s.clone(), small: s.small().clone(), min: Point::zero(s.dim()) }
    }

    pub fn ambient(&self) -> &GoodSemigroup {
        &self.ambient
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

    /// `m(E)`, the least element.
    pub fn min(&self) -> &Point {
        &self.min
    }

    pub fn contains(&self, a: &Point) -> bool {
        assert_eq!(a.dim(), self.small.dim(), "dimension mismatch");
        self.small.reconstructs(a)
    }

    /// The small elements of `E - m(E)`, which contains `0`.
    pub fn translated_to_origin(&self) -> SmallSet {
        SmallSet::new(self.small.iter().map(|p| p - &self.min).collect()).expect("nonempty")
    }

    /// `E + E ⊆ m(E) + E`, i.e. `E + E = m(E) + E`.
    ///
    /// For `x, y ∈ E` the truncation of `x + y - m` at `C(E)` only depends on
    /// `x ∧ C(E)` and `y ∧ C(E)`, so small pairs suffice.
    pub fn is_stable(&self) -> bool {
        let pts = self.small.points();
        pts.iter().enumerate().all(|(k, x)| {
            pts[k..].iter().all(|y| self.contains(&(&(x + y) - &self.min)))
        })
    }

    /// `E + F`, the meets of sums `e + f`.
    pub fn sum(&self, other: &GoodRelativeIdeal) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        // C(E + F) <= C(E) + m(F) <= C(E) + C(F).
        let cap = self.conductor() + other.conductor();
        let zero = Point::zero(cap.dim());
        let lift = |e: &GoodRelativeIdeal| -> Vec<Point> {
            box_points(&zero, &cap).filter(|p| e.contains(p)).collect()
        };
        let (xs, ys) = (lift(self), lift(other));
        let cap = &cap;
        let sums = xs.iter().flat_map(|x| ys.iter().map(move |y| x.add_trunc(y, cap)));
        let closed = SmallSet::new(meet_closure(sums, cap))?;
        Self::from_top(&self.ambient, closed)
    }
}

/// `S(a) = {b ∈ S : b >= a}`.
pub fn tail_ideal(s: &GoodSemigroup, a: &Point) -> Result<GoodRelativeIdeal> {
    if a.dim() != s.dim() {
        return Err(Error::DimensionMismatch { left: s.dim(), right: a.dim() });
    }
    if !a.is_nonnegative() {
        return Err(Error::InvalidInput(format!("{a} has a negative coordinate")));
    }
    let top = s.conductor().join(a);
    let points: Vec<Point> = box_points(a, &top).filter(|p| s.contains(p)).collect();
    GoodRelativeIdeal::from_top(s, SmallSet::new(points)?)
}

/// The three generator families of the canonical ideal of a local planar
/// good semigroup with `γ = C - 1`:
/// `(γ₁ - x, C₂)` for gaps `x` of `S₁`, `(C₁, γ₂ - y)` for gaps `y` of `S₂`,
/// and `γ - α` for the maximal elements `α`.
pub fn canonical_generators(s: &GoodSemigroup) -> Result<Vec<Point>> {
    s.require_planar("canonical_generators")?;
    s.require_local()?;
    let c = s.conductor();
    let g = s.gamma();
    let mut out = Vec::new();
    for x in s.projection(0).gaps() {
        out.push(Point::from([g.get(0) - x, c.get(1)]));
    }
    for y in s.projection(1).gaps() {
        out.push(Point::from([c.get(0), g.get(1) - y]));
    }
    for a in s.maximal_elements() {
        out.push(&g - &a);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `K(S) = {a : Δ^S(γ - a) = ∅}` for a local planar good semigroup.
///
/// Built from [`canonical_generators`] as a good generating system with
/// conductor `C(K) = C(S)`, then compared pointwise against the defining
/// condition on `[0, C + 1]`.
pub fn canonical_ideal(s: &GoodSemigroup) -> Result<GoodRelativeIdeal> {
    let mut gens = canonical_generators(s)?;
    if gens.is_empty() {
        // Only N^2 has no gaps and no maximal elements; there K = S.
        gens.push(Point::zero(2));
    }
    let k = GoodRelativeIdeal::from_generators_at(s, &gens, s.conductor())?;
    let g = s.gamma();
    let hi = s.conductor() + &Point::ones(2);
    for a in box_points(&Point::zero(2), &hi) {
        if k.contains(&a) == s.delta_nonempty(&(&g - &a)) {
            return Err(Error::CanonicalMismatch(a));
        }
    }
    Ok(k)
}

/// `K(S) = S`.
pub fn is_symmetric(s: &GoodSemigroup) -> Result<bool> {
    let k = canonical_ideal(s)?;
    Ok(k.small() == s.small())
}
