use crate::lattice::{box_points, Point};

use super::closure::slab_covered;
use super::small_set::Grid;
use super::{SmallSet, Violation};

/// Check that `x` is the set of small elements of a good semigroup.
///
/// The reconstruction `R(X) = {a : a ∧ top ∈ X}` is tested for closure
/// under meets and sums (both decided on pairs of `X` via truncation), for
/// (G2) on the box `[0, top + 2·1]`, and for minimality of `top` as a
/// conductor.
pub fn validate_small_set(x: &SmallSet) -> Result<(), Violation> {
    validate_up_to_conductor(x)?;
    check_conductor(&x.grid())
}

/// [`validate_small_set`] without asking the top to be the conductor.
pub fn validate_up_to_conductor(x: &SmallSet) -> Result<(), Violation> {
    if !x.contains(&Point::zero(x.dim())) {
        return Err(Violation::MissingZero);
    }
    check_meets(x)?;
    let top = x.top();
    for (k, a) in x.iter().enumerate() {
        for b in &x.points()[k..] {
            if !x.contains(&a.add_trunc(b, top)) {
                return Err(Violation::NotAdditive { a: a.clone(), b: b.clone() });
            }
        }
    }
    check_g2(&x.grid())
}

pub(crate) fn check_meets(x: &SmallSet) -> Result<(), Violation> {
    if !x.contains(x.top()) {
        return Err(Violation::TopNotMember { top: x.top().clone() });
    }
    for (k, a) in x.iter().enumerate() {
        for b in &x.points()[k + 1..] {
            if !x.contains(&a.meet(b)) {
                return Err(Violation::NotMeetClosed { a: a.clone(), b: b.clone() });
            }
        }
    }
    Ok(())
}

/// (G2) on the reconstruction: for members `a ≠ b` with `a_i = b_i` there is
/// a member `c` with `c_i > a_i`, `c_j >= min(a_j, b_j)`, and equality
/// wherever `a_j ≠ b_j`.
///
/// Membership only depends on `p ∧ top`, so pairs are taken from the box
/// `[0, top + 2·1]` (enough room for two distinct values past the top) and
/// each free coordinate of `c` only needs to range up to `top`.
pub(crate) fn check_g2(grid: &Grid) -> Result<(), Violation> {
    let top = grid.top();
    let n = top.dim();
    let hi = top + &Point::splat(n, 2);
    let members: Vec<Point> = box_points(&Point::zero(n), &hi).filter(|p| grid.contains(p)).collect();
    for (k, a) in members.iter().enumerate() {
        for b in &members[k + 1..] {
            let agree = a.agreeing_axes(b);
            for i in agree.iter() {
                let mut lo = a.meet(b);
                let mut up = lo.clone();
                for j in 0..n {
                    if j == i {
                        lo = lo.with(j, a.get(j) + 1);
                        up = up.with(j, (a.get(j) + 1).max(top.get(j)));
                    } else if agree.contains(j) {
                        up = up.with(j, a.get(j).max(top.get(j)));
                    }
                }
                if !box_points(&lo, &up).any(|c| grid.contains(&c)) {
                    return Err(Violation::G2 { a: a.clone(), b: b.clone(), axis: i });
                }
            }
        }
    }
    Ok(())
}

/// The top is the conductor iff it cannot be lowered along any axis.
pub(crate) fn check_conductor(grid: &Grid) -> Result<(), Violation> {
    let top = grid.top();
    match (0..top.dim()).find(|&i| top.get(i) > 0 && slab_covered(grid, top, i, top)) {
        Some(axis) => Err(Violation::ConductorNotMinimal { axis }),
        None => Ok(()),
    }
}
