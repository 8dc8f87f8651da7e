//! Shared helpers for the integration tests: brute-force oracles and
//! random instances.
#![allow(dead_code)]

pub mod oracle;
pub mod random;

use good_semigroups::Point;

pub fn pts(v: &[[i64; 2]]) -> Vec<Point> {
    v.iter().map(|&p| Point::from(p)).collect()
}
