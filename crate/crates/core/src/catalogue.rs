//! Exhaustive catalogue of small posets, one representative per isomorphism class.
//!
//! Every poset has a linear extension, so enumerating transitive relations
//! contained in `<` on `0..n` reaches every class; representatives are the
//! relabellings with the least relation word.

use std::collections::BTreeSet;

use crate::config::Execution;
use crate::error::{Error, Result};
use crate::exec;
use crate::poset::Poset;

/// Largest size the catalogue will enumerate.
pub const CATALOGUE_BOUND: usize = 6;

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
}

fn strict_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
}

/// Strict relation word: bit `i * n + j` set iff `i < j` in the order.
fn relation_word(n: usize, pairs: &[(usize, usize)], choice: u64) -> u64 {
    pairs
        .iter()
        .enumerate()
        .filter(|(b, _)| choice >> b & 1 == 1)
        .fold(0, |w, (_, &(i, j))| w | 1 << (i * n + j))
}

fn is_transitive(n: usize, word: u64) -> bool {
    let rel = |i: usize, j: usize| word >> (i * n + j) & 1 == 1;
    for i in 0..n {
        for j in 0..n {
            if !rel(i, j) {
                continue;
            }
            for k in 0..n {
                if rel(j, k) && !rel(i, k) {
                    return false;
                }
            }
        }
    }
    true
}

fn canonical_word(n: usize, word: u64, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            let mut w = 0u64;
            let mut rest = word;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (i, j) = (b / n, b % n);
                w |= 1 << (p[i] * n + p[j]);
            }
            w
        })
        .min()
        .unwrap_or(word)
}

fn poset_of_word(n: usize, word: u64) -> Poset {
    let labels = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    Poset::from_relation(labels, |i, j| i == j || word >> (i * n + j) & 1 == 1)
        .expect("catalogue words are partial orders")
}

/// All posets with exactly `n` elements up to isomorphism, sorted by canonical word.
pub fn posets_of_size(n: usize, exec: Execution) -> Result<Vec<Poset>> {
    if n > CATALOGUE_BOUND {
        return Err(Error::BoundExceeded {
            what: "poset catalogue",
            size: n,
            bound: CATALOGUE_BOUND,
        });
    }
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let pairs = strict_pairs(n);
    let perms = permutations(n);
    let words: Vec<u64> = (0..1u64 << pairs.len())
        .map(|c| relation_word(n, &pairs, c))
        .filter(|&w| is_transitive(n, w))
        .collect();
    let canon: BTreeSet<u64> = exec::map_slice(exec, &words, |&w| canonical_word(n, w, &perms))
        .into_iter()
        .collect();
    Ok(canon.into_iter().map(|w| poset_of_word(n, w)).collect())
}

/// All posets with `1..=max` elements up to isomorphism, smaller sizes first.
pub fn posets_up_to(max: usize, exec: Execution) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(posets_of_size(n, exec)?);
    }
    Ok(out)
}

/// Brute-force isomorphism test for posets of at most eight elements.
pub fn isomorphic(p: &Poset, q: &Poset) -> Result<bool> {
    let n = p.len();
    if n != q.len() {
        return Ok(false);
    }
    if n > 8 {
        return Err(Error::BoundExceeded {
            what: "isomorphism test",
            size: n,
            bound: 8,
        });
    }
    if p.comparable_pairs() != q.comparable_pairs() {
        return Ok(false);
    }
    Ok(permutations(n)
        .iter()
        .any(|perm| (0..n).all(|i| (0..n).all(|j| p.leq(i, j) == q.leq(perm[i], perm[j])))))
}
