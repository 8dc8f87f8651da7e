//! Numerical semigroups and their relative ideals inside `N`.
//!
//! These are the one-dimensional building blocks: factors of products,
//! inputs to duplication and amalgamation, and projections of planar good
//! semigroups.

use crate::error::{Error, Result};

/// A submonoid of `(N, +)` with finite complement.
///
/// Stored as its small elements (members up to and including the conductor)
/// together with the minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    small: Vec<i64>,
    conductor: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The monoid generated by `gens`.
    ///
    /// Zero entries are ignored. Fails if the generators are empty, negative,
    /// or have a common divisor.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.iter().any(|&g| g < 0) {
            return Err(Error::InvalidInput(format!("negative generator in {gens:?}")));
        }
        let mut gens: Vec<i64> = gens.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
            return Err(Error::GcdNotOne(gens));
        }
        // The Frobenius number is below (min - 1)(max - 1), so min * max is a
        // safe end for the sieve.
        let bound = (gens[0] * gens[gens.len() - 1]) as usize + 1;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for x in 1..=bound {
            member[x] = gens.iter().any(|&g| g as usize <= x && member[x - g as usize]);
        }
        let conductor = (0..=bound)
            .rev()
            .find(|&x| !member[x])
            .map_or(0, |gap| gap + 1) as i64;
        let small = (0..=conductor).filter(|&x| member[x as usize]).collect();
        Ok(Self::from_parts(small, conductor))
    }

    /// Rebuild from the members in `[0, c]` where `c` is the largest entry.
    ///
    /// Checks that `0` is present, that `c` really is the conductor and that
    /// the set is closed under addition.
    pub fn from_small_elements(mut small: Vec<i64>) -> Result<Self> {
        small.sort_unstable();
        small.dedup();
        if small.first() != Some(&0) {
            return Err(Error::InvalidInput("small elements must contain 0".into()));
        }
        let conductor = *small.last().unwrap();
        if conductor > 0 && small.binary_search(&(conductor - 1)).is_ok() {
            return Err(Error::InvalidInput(format!(
                "{} is not the conductor: {} is also a member",
                conductor,
                conductor - 1
            )));
        }
        let s = Self::from_parts(small, conductor);
        for (k, &a) in s.small.iter().enumerate() {
            for &b in &s.small[k..] {
                if !s.contains(a + b) {
                    return Err(Error::InvalidInput(format!("{a} + {b} is not a member")));
                }
            }
        }
        Ok(s)
    }

    /// The whole of `N`.
    pub fn naturals() -> Self {
        Self::from_parts(vec![0], 0)
    }

    fn from_parts(small: Vec<i64>, conductor: i64) -> Self {
        let mut s = NumericalSemigroup { generators: Vec::new(), small, conductor };
        let m = s.multiplicity();
        s.generators = (1..=conductor + m)
            .filter(|&x| s.contains(x))
            .filter(|&x| !(1..=x / 2).any(|y| s.contains(y) && s.contains(x - y)))
            .collect();
        s
    }

    /// Build from an arbitrary membership predicate that is known to hold
    /// for every integer `>= bound`.
    pub(crate) fn from_predicate(bound: i64, member: impl Fn(i64) -> bool) -> Result<Self> {
        let small: Vec<i64> = (0..=bound).filter(|&x| member(x)).collect();
        let conductor = (0..=bound)
            .rev()
            .find(|&x| !member(x))
            .map_or(0, |gap| gap + 1);
        let small = small.into_iter().filter(|&x| x <= conductor).collect();
        Self::from_small_elements(small)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || (x >= 0 && self.small.binary_search(&x).is_ok())
    }

    /// Minimal generators.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Members up to and including the conductor.
    pub fn small_elements(&self) -> &[i64] {
        &self.small
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Smallest positive member (1 for `N`).
    pub fn multiplicity(&self) -> i64 {
        self.small.get(1).copied().unwrap_or(1).min(self.conductor.max(1))
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// The `i`-th smallest member, starting from `element_at(0) = 0`.
    pub fn element_at(&self, i: usize) -> i64 {
        match self.small.get(i) {
            Some(&x) => x,
            None => self.conductor + (i - self.small.len()) as i64 + 1,
        }
    }

    /// The ideal `S(a) = {b ∈ S : b >= a}`.
    pub fn tail(&self, a: i64) -> NumericalIdeal {
        let a = a.max(0);
        let start = (a..).find(|&x| self.contains(x)).unwrap();
        NumericalIdeal::from_predicate(self, start, |x| x >= a && self.contains(x))
            .expect("tails of a numerical semigroup are ideals")
    }

    /// Arf property: `b + c - a ∈ S` whenever `a <= b <= c` are members.
    pub fn is_arf(&self) -> bool {
        let below: Vec<i64> = self.small.iter().copied().filter(|&x| x < self.conductor).collect();
        below.iter().enumerate().all(|(k, &a)| {
            below[k..].iter().enumerate().all(|(l, &b)| {
                below[k + l..].iter().all(|&c| self.contains(b + c - a))
            })
        })
    }

    /// The smallest Arf numerical semigroup containing `self`.
    ///
    /// Saturates `b + c - a` (for members `a <= b`, `a <= c`) below the
    /// conductor until nothing changes. Sums with `b` or `c` past the
    /// conductor land past it too, so the finite window is exact.
    pub fn arf_closure(&self) -> NumericalSemigroup {
        let c = self.conductor as usize;
        let mut member = vec![false; c + 1];
        for &x in &self.small {
            member[x as usize] = true;
        }
        loop {
            let present: Vec<usize> = (0..c).filter(|&x| member[x]).collect();
            let mut changed = false;
            for (k, &a) in present.iter().enumerate() {
                for (l, &b) in present[k..].iter().enumerate() {
                    for &d in &present[k + l..] {
                        let x = b + d - a;
                        if x < c && !member[x] {
                            member[x] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        NumericalSemigroup::from_predicate(c as i64, |x| x >= c as i64 || member[x as usize])
            .expect("saturation yields a numerical semigroup")
    }
}

/// A relative ideal `E ⊆ N` of a numerical semigroup with `E + S ⊆ E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalIdeal {
    ambient: NumericalSemigroup,
    generators: Vec<i64>,
    small: Vec<i64>,
    conductor: i64,
}

impl NumericalIdeal {
    /// `E = gens + S`.
    pub fn from_generators(s: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(g) = gens.iter().find(|&&g| g < 0) {
            return Err(Error::InvalidInput(format!("negative ideal generator {g}")));
        }
        let start = *gens.iter().min().unwrap();
        Self::from_predicate(s, start, |x| gens.iter().any(|&g| s.contains(x - g)))
    }

    /// `{s ∈ source : k·s ∈ E}`, the preimage of `E` under multiplication
    /// by `k`, as an ideal of `source`.
    pub fn preimage_scale(&self, k: i64, source: &NumericalSemigroup) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidInput(format!("scale factor must be positive, got {k}")));
        }
        // k·S ⊆ T is enough for the preimage to absorb S.
        if let Some(&g) = source.generators().iter().find(|&&g| !self.ambient.contains(k * g)) {
            return Err(Error::NotAMorphism { factor: k, witness: g, image: k * g });
        }
        let bound = source.conductor().max((self.conductor + k - 1) / k);
        let start = (0..=bound)
            .find(|&x| source.contains(x) && self.contains(k * x))
            .expect("an ideal with a conductor has a nonempty preimage");
        Self::from_predicate(source, start, |x| source.contains(x) && self.contains(k * x))
    }

    /// Build from a membership predicate whose least member is `start` and
    /// which contains `start + S`.
    fn from_predicate(s: &NumericalSemigroup, start: i64, member: impl Fn(i64) -> bool) -> Result<Self> {
        // start + S ⊆ E, so everything from start + C(S) on is a member.
        let bound = start + s.conductor();
        let conductor = (start..=bound)
            .rev()
            .find(|&x| !member(x))
            .map_or(start, |gap| gap + 1);
        let small: Vec<i64> = (start..=conductor).filter(|&x| member(x)).collect();
        let mut e = NumericalIdeal { ambient: s.clone(), generators: Vec::new(), small, conductor };
        let m = s.multiplicity();
        e.generators = (start..=conductor + m)
            .filter(|&x| e.contains(x))
            .filter(|&x| !(1..=x - start).any(|y| s.contains(y) && e.contains(x - y)))
            .collect();
        Ok(e)
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Minimal generators as an `S`-ideal.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn small_elements(&self) -> &[i64] {
        &self.small
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn min(&self) -> i64 {
        self.small[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || self.small.binary_search(&x).is_ok()
    }

    /// `E ⊆ S`, decided on `[0, max(C(E), C(S))]`.
    pub fn is_subset_of(&self, s: &NumericalSemigroup) -> std::result::Result<(), i64> {
        let top = self.conductor.max(s.conductor());
        match (self.min()..=top).find(|&x| self.contains(x) && !s.contains(x)) {
            Some(x) => Err(x),
            None => Ok(()),
        }
    }
}
