use crate::error::{Error, Result};
use crate::lattice::{box_points, BoxGrid, Point};

use super::SmallSet;

fn check_inputs(gens: &[Point], cap: &Point) -> Result<()> {
    if !cap.is_nonnegative() {
        return Err(Error::InvalidInput(format!("conductor {cap} has a negative coordinate")));
    }
    for g in gens {
        if g.dim() != cap.dim() {
            return Err(Error::DimensionMismatch { left: cap.dim(), right: g.dim() });
        }
        if !g.is_nonnegative() {
            return Err(Error::InvalidInput(format!("generator {g} has a negative coordinate")));
        }
    }
    Ok(())
}

/// `C ∧ [G]`: the smallest subset of the box `[0, C]` containing `C ∧ G`,
/// `0` and `C` that is closed under meets and truncated sums.
pub fn closure_small(gens: &[Point], conductor: &Point) -> Result<SmallSet> {
    check_inputs(gens, conductor)?;
    let seeds = std::iter::once(Point::zero(conductor.dim()))
        .chain(std::iter::once(conductor.clone()))
        .chain(gens.iter().map(|g| g.meet(conductor)));
    let points = saturate(seeds, conductor, |x, y, cap, out| {
        out.push(x.meet(y));
        out.push(x.add_trunc(y, cap));
    });
    Ok(SmallSet::from_sorted(points))
}

/// Close `seeds` under meets inside `[0, cap]`.
pub(crate) fn meet_closure(seeds: impl IntoIterator<Item = Point>, cap: &Point) -> Vec<Point> {
    saturate(seeds, cap, |x, y, _, out| out.push(x.meet(y)))
}

/// Worklist fixpoint of a symmetric binary rule over the box `[0, cap]`.
/// Products falling outside the box are dropped. Returns sorted points.
fn saturate(
    seeds: impl IntoIterator<Item = Point>,
    cap: &Point,
    rule: impl Fn(&Point, &Point, &Point, &mut Vec<Point>),
) -> Vec<Point> {
    let mut grid = BoxGrid::new(Point::zero(cap.dim()), cap.clone());
    let mut items = Vec::new();
    for s in seeds {
        if grid.insert(&s) {
            items.push(s);
        }
    }
    let mut out = Vec::new();
    let mut k = 0;
    while k < items.len() {
        for l in 0..=k {
            rule(&items[k], &items[l], cap, &mut out);
            for p in out.drain(..) {
                if grid.insert(&p) {
                    items.push(p);
                }
            }
        }
        k += 1;
    }
    items.sort();
    items
}

/// Lower the top of `x` to the true conductor of its reconstruction and
/// drop the points that no longer lie below it.
///
/// Assumes the reconstruction of `x` satisfies (G1) and (G2). The admissible
/// conductors then form an up-set with a least element, which greedy descent
/// reaches, and lowering the top does not change the reconstruction. For
/// other sets it can: `{0, (6,3), (9,3), (9,6), ...}` with top `(10,9)`
/// lacks `(10,3)`, which the set lowered to `(9,6)` contains.
pub fn normalize_conductor(x: &SmallSet) -> SmallSet {
    let grid = x.grid();
    let top = x.top().clone();
    let mut c = top.clone();
    loop {
        let lowered = (0..c.dim()).find(|&i| c.get(i) > 0 && slab_covered(&grid, &c, i, &top));
        match lowered {
            Some(i) => c = c.with(i, c.get(i) - 1),
            None => break,
        }
    }
    if c == top {
        x.clone()
    } else {
        x.restrict(&c)
    }
}

/// Is every point with `p_i = c_i - 1` and `p_j >= c_j` (j ≠ i) a member?
/// Past `top` membership is constant, so the slab is scanned up to `top`.
pub(super) fn slab_covered(grid: &super::small_set::Grid, c: &Point, i: usize, top: &Point) -> bool {
    let lo = c.with(i, c.get(i) - 1);
    let hi = top.with(i, c.get(i) - 1);
    box_points(&lo, &hi).all(|p| grid.contains(&p))
}
