//! Join/meet tables of finite lattices and the two distributivity tests:
//! the identity `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` and the search for a
//! five-element sublattice shaped like `M3` or `N5`.

use rand::RngExt;

use crate::poset::Poset;

/// Precomputed binary join and meet of a finite lattice.
#[derive(Debug, Clone)]
pub struct JoinMeet {
    n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
}

/// A sublattice `{bottom, x, y, z, top}` witnessing non-distributivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Forbidden {
    /// `x, y, z` pairwise incomparable with common pairwise joins and meets.
    M3 {
        bottom: usize,
        x: usize,
        y: usize,
        z: usize,
        top: usize,
    },
    /// `x < z`, `y` incomparable to both, `x ∨ y = z ∨ y`, `x ∧ y = z ∧ y`.
    N5 {
        bottom: usize,
        x: usize,
        z: usize,
        y: usize,
        top: usize,
    },
}

impl JoinMeet {
    /// `None` unless `p` is a lattice.
    pub fn new(p: &Poset) -> Option<JoinMeet> {
        let n = p.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = p.join(i, j)?;
                meet[i * n + j] = p.meet(i, j)?;
            }
        }
        Some(JoinMeet { n, join, meet })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n + j]
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n + j]
    }

    fn comparable(&self, i: usize, j: usize) -> bool {
        self.meet(i, j) == i || self.meet(i, j) == j
    }

    fn violates(&self, x: usize, y: usize, z: usize) -> bool {
        self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
    }

    /// First triple breaking the distributive identity, over all triples.
    pub fn distributive_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
            .find(|&(x, y, z)| self.violates(x, y, z))
    }

    /// Distributive identity on `samples` random triples.
    pub fn sampled_violation<R: rand::Rng>(&self, samples: usize, rng: &mut R) -> Option<(usize, usize, usize)> {
        (0..samples)
            .map(|_| {
                (
                    rng.random_range(0..self.n),
                    rng.random_range(0..self.n),
                    rng.random_range(0..self.n),
                )
            })
            .find(|&(x, y, z)| self.violates(x, y, z))
    }

    /// Searches for an `M3` or `N5` sublattice.
    pub fn forbidden_sublattice(&self) -> Option<Forbidden> {
        let n = self.n;
        for x in 0..n {
            for y in (x + 1)..n {
                if self.comparable(x, y) {
                    continue;
                }
                let (top, bottom) = (self.join(x, y), self.meet(x, y));
                for z in 0..n {
                    if z == x || z == y || self.comparable(x, z) || self.comparable(y, z) {
                        continue;
                    }
                    if z > y
                        && [self.join(x, z), self.join(y, z)] == [top, top]
                        && [self.meet(x, z), self.meet(y, z)] == [bottom, bottom]
                    {
                        return Some(Forbidden::M3 { bottom, x, y, z, top });
                    }
                }
                // N5 with y as the side element: some z strictly above x
                // (or below) with the same join and meet against y
                for z in 0..n {
                    if z == x || !self.comparable(x, z) || self.comparable(y, z) {
                        continue;
                    }
                    if self.join(z, y) == top && self.meet(z, y) == bottom {
                        let (lo, hi) = if self.meet(x, z) == x { (x, z) } else { (z, x) };
                        return Some(Forbidden::N5 {
                            bottom,
                            x: lo,
                            z: hi,
                            y,
                            top,
                        });
                    }
                }
            }
        }
        None
    }
}
