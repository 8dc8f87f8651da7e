//! Slow reference implementations. They only use `Point` arithmetic and
//! plain sets, never the library's closure, validation or fiber code.

use std::collections::{BTreeSet, HashSet, VecDeque};

use good_semigroups::Point;

fn cap_at(p: &Point, cap: &Point) -> Point {
    p.meet(cap)
}

/// `C ∧ ⟨G⟩`, by breadth-first search over truncated sums.
pub fn truncated_sums(gens: &[Point], c: &Point) -> BTreeSet<Point> {
    let zero = Point::zero(c.dim());
    let mut seen: HashSet<Point> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = cap_at(&(&x + g), c);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// `C ∧ [G]` together with `C`.
///
/// In `ℕⁿ` every finite meet is already a meet of at most `n` elements (one
/// per coordinate), so the meets are enumerated directly as `n`-tuples.
pub fn brute_closure(gens: &[Point], c: &Point) -> Vec<Point> {
    let sums: Vec<Point> = truncated_sums(gens, c).into_iter().collect();
    let mut out: BTreeSet<Point> = BTreeSet::new();
    let n = c.dim();
    let mut idx = vec![0usize; n];
    loop {
        let m = idx.iter().skip(1).fold(sums[idx[0]].clone(), |m, &k| m.meet(&sums[k]));
        out.insert(m);
        let mut k = 0;
        loop {
            if k == n {
                out.insert(c.clone());
                return out.into_iter().collect();
            }
            idx[k] += 1;
            if idx[k] < sums.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Is `x ∈ [0, C]` in `C ∧ [G]`? For every coordinate `i` with `x_i < C_i`
/// some plain sum `h` of generators must have `h_i = x_i` and `h >= x`.
/// Sums are capped at `x + 1` so that an exact coordinate stays visible.
pub fn generated_member(gens: &[Point], c: &Point, x: &Point) -> bool {
    if !x.is_nonnegative() {
        return false;
    }
    let x = x.meet(c);
    if &x == c {
        return true;
    }
    let cap = &x + &Point::ones(x.dim());
    let sums = truncated_sums(gens, &cap);
    (0..x.dim())
        .filter(|&i| x.get(i) < c.get(i))
        .all(|i| sums.iter().any(|h| h.get(i) == x.get(i) && x.leq(h)))
}

/// Membership in the set reconstructed from a list of small elements with
/// largest element `c`.
pub fn small_member(small: &BTreeSet<Point>, c: &Point, a: &Point) -> bool {
    a.is_nonnegative() && small.contains(&a.meet(c))
}

/// Is `Δ(x) ∩ S` nonempty? Scans `y` with one coordinate equal to `x` and
/// the other larger, up to where membership stops changing.
pub fn delta_meets(small: &BTreeSet<Point>, c: &Point, x: &Point) -> bool {
    for i in 0..2 {
        let j = 1 - i;
        let top = (x.get(j) + 1).max(c.get(j));
        for yj in x.get(j) + 1..=top {
            let mut y = [0; 2];
            y[i] = x.get(i);
            y[j] = yj;
            if small_member(small, c, &Point::from(y)) {
                return true;
            }
        }
    }
    false
}

/// `{a ∈ [0, C] : Δ(γ - a) ∩ S = ∅}` with `γ = C - 1`.
pub fn brute_canonical(small: &[Point], c: &Point) -> Vec<Point> {
    let set: BTreeSet<Point> = small.iter().cloned().collect();
    let gamma = c - &Point::ones(2);
    let mut out = Vec::new();
    for a0 in 0..=c.get(0) {
        for a1 in 0..=c.get(1) {
            let a = Point::from([a0, a1]);
            if !delta_meets(&set, c, &(&gamma - &a)) {
                out.push(a);
            }
        }
    }
    out
}

/// `b + c - a ∈ S` for all members `a <= b`, `a <= c` inside `[0, bound]`.
pub fn brute_arf_check(small: &[Point], c: &Point, bound: &Point) -> bool {
    let set: BTreeSet<Point> = small.iter().cloned().collect();
    let mut members = Vec::new();
    for x in 0..=bound.get(0) {
        for y in 0..=bound.get(1) {
            let p = Point::from([x, y]);
            if small_member(&set, c, &p) {
                members.push(p);
            }
        }
    }
    for a in &members {
        for b in members.iter().filter(|b| a.leq(b)) {
            for d in members.iter().filter(|d| a.leq(d)) {
                if !small_member(&set, c, &(&(b + d) - a)) {
                    return false;
                }
            }
        }
    }
    true
}
