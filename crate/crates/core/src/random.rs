//! Seeded generators for the property suites. Everything draws from a
//! caller-supplied RNG so a single seed fixes a whole run.

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};

use crate::modfin::{Branch, PeriodicSet, Word};

pub fn permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn bits<R: Rng>(len: usize, rng: &mut R) -> Vec<bool> {
    (0..len).map(|_| rng.random::<bool>()).collect()
}

/// Preperiod of length below `max_pre`, period of length `1..=max_per`.
pub fn word<R: Rng>(max_pre: usize, max_per: usize, rng: &mut R) -> Word {
    let pre = rng.random_range(0..max_pre.max(1));
    let per = rng.random_range(1..=max_per.max(1));
    Word::new(bits(pre, rng), bits(per, rng))
}

pub fn periodic_set<R: Rng>(rng: &mut R) -> PeriodicSet {
    PeriodicSet::from_word(word(8, 6, rng))
}

pub fn finite_set<R: Rng>(max: usize, rng: &mut R) -> PeriodicSet {
    let elements: Vec<usize> = (0..max).filter(|_| rng.random_range(0..4) == 0).collect();
    PeriodicSet::finite(&elements)
}

pub fn branch<R: Rng>(rng: &mut R) -> Branch {
    Branch::from_word(word(8, 6, rng))
}

/// `count` pairwise distinct branches.
pub fn distinct_branches<R: Rng>(count: usize, rng: &mut R) -> Vec<Branch> {
    let mut out: Vec<Branch> = Vec::with_capacity(count);
    while out.len() < count {
        let b = branch(rng);
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

/// A `≤Fin`-pregap by construction: `A_i = (C ∩ R_i) ∪ F_i` and
/// `B_j = (C ∪ S_j) ∖ G_j` with every `F_i`, `G_j` finite.
pub fn fin_pregap<R: Rng>(rng: &mut R) -> (Vec<PeriodicSet>, Vec<PeriodicSet>) {
    let core = periodic_set(rng);
    let a = (0..rng.random_range(0..4))
        .map(|_| core.intersection(&periodic_set(rng)).union(&finite_set(12, rng)))
        .collect();
    let b = (0..rng.random_range(0..4))
        .map(|_| core.union(&periodic_set(rng)).difference(&finite_set(12, rng)))
        .collect();
    (a, b)
}
