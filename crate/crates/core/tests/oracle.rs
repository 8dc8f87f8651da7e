//! The brute-force oracles on small hand-checked cases.

mod support;

use good_semigroups::{pt, Point};
use support::oracle::{brute_arf_check, brute_canonical, brute_closure};
fn pts(v: &[[i64; 2]]) -> Vec<Point> {
    v.iter().map(|&p| Point::from(p)).collect()
}

#[test]
fn oracle_closure_examples() {
    assert_eq!(brute_closure(&[pt![1, 1]], &pt![2, 2]), pts(&[[0, 0], [1, 1], [2, 2]]));
    assert_eq!(
        brute_closure(&pts(&[[2, 2], [4, 2]]), &pt![6, 6]),
        pts(&[[0, 0], [2, 2], [4, 2], [4, 4], [6, 4], [6, 6]])
    );
    assert_eq!(brute_closure(&[], &pt![0, 0]), pts(&[[0, 0]]));
}

#[test]
fn oracle_canonical_examples() {
    let small = pts(&[[0, 0], [1, 1]]);
    assert_eq!(brute_canonical(&small, &pt![1, 1]), small);
    assert_eq!(brute_canonical(&[pt![0, 0]], &pt![0, 0]), pts(&[[0, 0]]));
}

#[test]
fn oracle_arf_examples() {
    assert!(brute_arf_check(&[pt![0, 0]], &pt![0, 0], &pt![3, 3]));
    let s = pts(&[[0, 0], [3, 3], [4, 4], [4, 6], [5, 4], [6, 6]]);
    assert!(!brute_arf_check(&s, &pt![6, 6], &pt![9, 9]));
}