use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The infinite 0/1 word `u·v^∞`, kept in canonical form: `v` primitive and
/// `u` as short as possible. Two words are equal iff their canonical forms are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pre: Vec<bool>,
    per: Vec<bool>,
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl Word {
    /// Panics on an empty period.
    pub fn new(pre: Vec<bool>, per: Vec<bool>) -> Word {
        assert!(!per.is_empty(), "period must be non-empty");
        let mut w = Word { pre, per };
        w.canonicalize();
        w
    }

    pub fn constant(bit: bool) -> Word {
        Word::new(Vec::new(), vec![bit])
    }

    fn canonicalize(&mut self) {
        let len = self.per.len();
        let root = (1..=len)
            .find(|&d| len.is_multiple_of(d) && (0..len).all(|i| self.per[i] == self.per[i % d]))
            .unwrap_or(len);
        self.per.truncate(root);
        while let (Some(&a), Some(&b)) = (self.pre.last(), self.per.last()) {
            if a != b {
                break;
            }
            self.pre.pop();
            self.per.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[bool] {
        &self.pre
    }

    pub fn period(&self) -> &[bool] {
        &self.per
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        match self.pre.get(i) {
            Some(&b) => b,
            None => self.per[(i - self.pre.len()) % self.per.len()],
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<bool> {
        (0..len).map(|i| self.bit(i)).collect()
    }

    /// Pointwise combination, aligned on the longer preperiod and the lcm of
    /// the periods.
    pub fn zip_with(&self, other: &Word, f: impl Fn(bool, bool) -> bool) -> Word {
        let start = self.pre.len().max(other.pre.len());
        let period = lcm(self.per.len(), other.per.len());
        let at = |i| f(self.bit(i), other.bit(i));
        Word::new((0..start).map(at).collect(), (start..start + period).map(at).collect())
    }

    pub fn map(&self, f: impl Fn(bool) -> bool) -> Word {
        Word::new(
            self.pre.iter().map(|&b| f(b)).collect(),
            self.per.iter().map(|&b| f(b)).collect(),
        )
    }

    /// First index where the words differ.
    pub fn first_difference(&self, other: &Word) -> Option<usize> {
        let horizon = self.pre.len().max(other.pre.len()) + lcm(self.per.len(), other.per.len());
        (0..horizon).find(|&i| self.bit(i) != other.bit(i))
    }

    /// Positions needed to see both the preperiod and ten full periods.
    pub fn horizon(&self) -> usize {
        self.pre.len() + 10 * self.per.len()
    }
}

fn bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!("`{other}` is not a bit"))),
        })
        .collect()
}

impl FromStr for Word {
    type Err = Error;

    /// `u|v` literal, for example `|10` for the even numbers.
    fn from_str(s: &str) -> Result<Word> {
        let (u, v) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("`{s}` is not a `u|v` literal")))?;
        let (pre, per) = (bits(u)?, bits(v)?);
        if per.is_empty() {
            return Err(Error::Parse(format!("`{s}` has an empty period")));
        }
        Ok(Word::new(pre, per))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |w: &[bool]| w.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "{}|{}", s(&self.pre), s(&self.per))
    }
}
