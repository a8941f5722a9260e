use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::word::Word;
use crate::error::{Error, Result};

/// An eventually periodic subset of `ω`, given by its characteristic word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicSet(Word);

impl PeriodicSet {
    pub fn from_word(word: Word) -> PeriodicSet {
        PeriodicSet(word)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn empty() -> PeriodicSet {
        PeriodicSet(Word::constant(false))
    }

    pub fn omega() -> PeriodicSet {
        PeriodicSet(Word::constant(true))
    }

    /// Multiples of `k`, starting with 0.
    pub fn multiples(k: usize) -> PeriodicSet {
        assert!(k > 0);
        let mut per = vec![false; k];
        per[0] = true;
        PeriodicSet(Word::new(Vec::new(), per))
    }

    pub fn evens() -> PeriodicSet {
        PeriodicSet::multiples(2)
    }

    pub fn odds() -> PeriodicSet {
        PeriodicSet::evens().complement()
    }

    pub fn finite(elements: &[usize]) -> PeriodicSet {
        let len = elements.iter().max().map_or(0, |m| m + 1);
        let mut pre = vec![false; len];
        for &e in elements {
            pre[e] = true;
        }
        PeriodicSet(Word::new(pre, vec![false]))
    }

    /// `{0, ..., k}`, the initial segment `T(k)` on levels.
    pub fn up_to(k: usize) -> PeriodicSet {
        PeriodicSet(Word::new(vec![true; k + 1], vec![false]))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.bit(i)
    }

    pub fn union(&self, other: &PeriodicSet) -> PeriodicSet {
        PeriodicSet(self.0.zip_with(&other.0, |a, b| a | b))
    }

    pub fn intersection(&self, other: &PeriodicSet) -> PeriodicSet {
        PeriodicSet(self.0.zip_with(&other.0, |a, b| a & b))
    }

    pub fn difference(&self, other: &PeriodicSet) -> PeriodicSet {
        PeriodicSet(self.0.zip_with(&other.0, |a, b| a & !b))
    }

    pub fn symmetric_difference(&self, other: &PeriodicSet) -> PeriodicSet {
        PeriodicSet(self.0.zip_with(&other.0, |a, b| a ^ b))
    }

    pub fn complement(&self) -> PeriodicSet {
        PeriodicSet(self.0.map(|b| !b))
    }

    pub fn is_finite(&self) -> bool {
        self.0.period() == [false]
    }

    pub fn is_empty(&self) -> bool {
        *self == PeriodicSet::empty()
    }

    pub fn is_subset(&self, other: &PeriodicSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Largest element of a finite set.
    pub fn max_element(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        self.0.preperiod().iter().rposition(|&b| b)
    }

    /// Elements below `bound`.
    pub fn elements_below(&self, bound: usize) -> Vec<usize> {
        (0..bound).filter(|&i| self.contains(i)).collect()
    }

    pub fn literal(&self) -> String {
        self.0.to_string()
    }
}

impl FromStr for PeriodicSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<PeriodicSet> {
        s.parse().map(PeriodicSet)
    }
}

impl fmt::Display for PeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Result of `X ≤Fin Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FinOrder {
    /// `X ∖ Y` is finite; its largest element, if any.
    Below(Option<usize>),
    NotBelow,
}

impl FinOrder {
    pub fn holds(&self) -> bool {
        matches!(self, FinOrder::Below(_))
    }

    /// The exception bound, `-1` when the difference is empty.
    pub fn exception_bound(&self) -> Option<i64> {
        match self {
            FinOrder::Below(m) => Some(m.map_or(-1, |m| m as i64)),
            FinOrder::NotBelow => None,
        }
    }
}

pub fn leq_fin(x: &PeriodicSet, y: &PeriodicSet) -> FinOrder {
    let d = x.difference(y);
    if d.is_finite() {
        FinOrder::Below(d.max_element())
    } else {
        FinOrder::NotBelow
    }
}

/// `X =Fin Y`.
pub fn eq_fin(x: &PeriodicSet, y: &PeriodicSet) -> bool {
    x.symmetric_difference(y).is_finite()
}

/// One line of a separator audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    /// `"A"` rows check `A_i ≤Fin X`, `"B"` rows check `X ≤Fin B_j`.
    pub side: &'static str,
    pub index: usize,
    pub holds: bool,
    /// Largest exception, `-1` when there is none.
    pub exception_bound: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub separator: PeriodicSet,
    /// Largest element of any `A_i ∖ B_j`.
    pub bound: Option<usize>,
    pub audit: Vec<AuditRow>,
}

impl Separation {
    pub fn passes(&self) -> bool {
        self.audit.iter().all(|r| r.holds)
    }
}

/// Checks `A_i ≤Fin X ≤Fin B_j` for every `i`, `j`.
pub fn audit_separator(a: &[PeriodicSet], b: &[PeriodicSet], x: &PeriodicSet) -> Vec<AuditRow> {
    let row = |side, index, r: FinOrder| AuditRow {
        side,
        index,
        holds: r.holds(),
        exception_bound: r.exception_bound(),
    };
    a.iter()
        .enumerate()
        .map(|(i, ai)| row("A", i, leq_fin(ai, x)))
        .chain(b.iter().enumerate().map(|(j, bj)| row("B", j, leq_fin(x, bj))))
        .collect()
}

/// A separator for a finite `≤Fin`-pregap `(A, B)`: with `k` the largest
/// element of any `A_i ∖ B_j`, `X = (⋃A ∩ ⋂B) ∪ (⋃A ∩ {0..k})`.
pub fn hadamard_separator(a: &[PeriodicSet], b: &[PeriodicSet]) -> Result<Separation> {
    let mut bound: Option<usize> = None;
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            match leq_fin(ai, bj) {
                FinOrder::NotBelow => {
                    return Err(Error::NotAPregap {
                        left: i,
                        right: j,
                        difference: ai.difference(bj).literal(),
                    })
                }
                FinOrder::Below(m) => bound = bound.max(m),
            }
        }
    }
    let union = a.iter().fold(PeriodicSet::empty(), |acc, s| acc.union(s));
    let meet = b.iter().fold(PeriodicSet::omega(), |acc, s| acc.intersection(s));
    let head = match bound {
        Some(k) => union.intersection(&PeriodicSet::up_to(k)),
        None => PeriodicSet::empty(),
    };
    let separator = union.intersection(&meet).union(&head);
    let audit = audit_separator(a, b, &separator);
    Ok(Separation {
        separator,
        bound,
        audit,
    })
}
