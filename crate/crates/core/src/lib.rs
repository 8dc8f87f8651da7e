//! Good semigroups of `N^n`.
//!
//! A good semigroup is a submonoid of `N^n` closed under coordinatewise
//! minimum, with a lifting property along shared coordinates and a
//! conductor past which everything is a member. Value semigroups of plane
//! curve singularities with several branches are the motivating examples.
//!
//! The crate represents a good semigroup by its finitely many small
//! elements and offers:
//!
//! - numerical semigroups and ideals ([`numerical`]),
//! - validation, closure of generating sets and membership ([`semigroup`]),
//! - duplication, amalgamation, products and reconstruction from maximal
//!   elements ([`constructions`]),
//! - minimal good generating systems ([`gensys`]),
//! - good relative ideals, the canonical ideal and symmetry ([`ideals`]),
//! - the Arf property and Arf closure in the plane ([`arf`]),
//! - SVG and ASCII pictures ([`plot`]).
//!
//! ```
//! use good_semigroups::{pt, GoodSemigroup};
//!
//! let s = GoodSemigroup::from_generators(&[pt![4, 3], pt![3, 4]], &pt![6, 7]).unwrap();
//! assert_eq!(s.conductor(), &pt![6, 6]);
//! assert!(s.contains(&pt![9, 7]));
//! assert!(!s.contains(&pt![3, 40]));
//! ```

pub mod arf;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod gensys;
pub mod ideals;
pub mod lattice;
pub mod numerical;
pub mod plot;
pub mod semigroup;

pub use error::{Error, Result};
pub use lattice::{AxisSet, Point, Region, RegionKind};
pub use numerical::{NumericalIdeal, NumericalSemigroup};
pub use semigroup::{closure_small, normalize_conductor, validate_small_set, validate_up_to_conductor, GoodSemigroup, SmallSet, Violation};
