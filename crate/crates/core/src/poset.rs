//! Finite posets stored as bit-set relation rows, and subsets of them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite partial order on the indices `0..n`, each carrying a display label.
///
/// Values are immutable and cheap to clone; clones share the same host identity,
/// so element sets built against one clone are accepted by the others.
#[derive(Clone)]
pub struct Poset {
    inner: Arc<Inner>,
}

struct Inner {
    id: u64,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    /// `(up, down)` rows as words when `n <= 64`.
    masks: Option<Vec<(u64, u64)>>,
}

/// Outcome of [`Poset::is_lattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeCheck {
    Lattice,
    /// The least pair `(i, j)`, `i < j`, lacking a join or a meet.
    Missing {
        pair: (usize, usize),
        join: bool,
        meet: bool,
    },
}

impl LatticeCheck {
    pub fn is_lattice(&self) -> bool {
        matches!(self, LatticeCheck::Lattice)
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    fn assemble(labels: Vec<String>, index: HashMap<String, usize>, up: Vec<FixedBitSet>) -> Poset {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let masks = (n <= 64).then(|| (0..n).map(|i| (row_mask(&up[i]), row_mask(&down[i]))).collect());
        Poset {
            inner: Arc::new(Inner {
                id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
                labels,
                index,
                up,
                down,
                masks,
            }),
        }
    }

    /// Builds the reflexive-transitive closure of a cover (Hasse) relation.
    pub fn from_covers<L, C>(labels: &[L], covers: &[(C, C)]) -> Result<Poset>
    where
        L: AsRef<str>,
        C: AsRef<str>,
    {
        if labels.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for (a, b) in covers {
            let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_owned()));
            let (x, y) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            succ[x].push(y);
        }
        let mut up = Vec::with_capacity(n);
        for start in 0..n {
            let mut seen = FixedBitSet::with_capacity(n);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &succ[v] {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
            up.push(seen);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if up[i].contains(j) && up[j].contains(i) {
                    return Err(Error::CycleDetected(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(Poset::assemble(labels, index, up))
    }

    /// Builds a poset from an explicit relation, checking the order axioms.
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let index = index_labels(&labels)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::NotAnOrder(format!("`{}` is not reflexive", labels[i])));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAnOrder(format!(
                        "`{}` and `{}` violate antisymmetry",
                        labels[i], labels[j]
                    )));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::NotAnOrder(format!(
                        "transitivity fails above `{}` <= `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Poset::assemble(labels, index, up))
    }

    /// The `k`-element chain labelled `0..k`.
    pub fn chain(k: usize) -> Result<Poset> {
        Poset::from_relation((0..k).map(|i| i.to_string()).collect(), |i, j| i <= j)
    }

    /// The `k`-element antichain labelled `a`, `b`, ... (or `x0`, `x1`, ... past 26).
    pub fn antichain(k: usize) -> Result<Poset> {
        let labels = (0..k)
            .map(|i| {
                if k <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{i}")
                }
            })
            .collect();
        Poset::from_relation(labels, |i, j| i == j)
    }

    /// Componentwise order on pairs, `(p, q)` at index `p * |Q| + q`.
    pub fn product(&self, other: &Poset, max_relation_cells: usize) -> Result<Poset> {
        let n = self.len().saturating_mul(other.len());
        let cells = n.saturating_mul(n);
        if cells > max_relation_cells {
            return Err(Error::SizeOverflow {
                cells,
                cap: max_relation_cells,
            });
        }
        let m = other.len();
        let labels = (0..n)
            .map(|k| format!("({},{})", self.label(k / m), other.label(k % m)))
            .collect();
        Poset::from_relation(labels, |x, y| self.leq(x / m, y / m) && other.leq(x % m, y % m))
    }

    /// Same ground set, reversed order.
    pub fn dual(&self) -> Poset {
        let labels = self.inner.labels.clone();
        let index = self.inner.index.clone();
        let up = self.inner.down.clone();
        Poset::assemble(labels, index, up)
    }

    /// Same order with new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::Parse(format!(
                "expected {} labels, got {}",
                self.len(),
                labels.len()
            )));
        }
        let index = index_labels(&labels)?;
        Ok(Poset::assemble(labels, index, self.inner.up.clone()))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub(crate) fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{ j : i <= j }`.
    pub fn up_row(&self, i: usize) -> &FixedBitSet {
        &self.inner.up[i]
    }

    /// `{ j : j <= i }`.
    pub fn down_row(&self, i: usize) -> &FixedBitSet {
        &self.inner.down[i]
    }

    /// Word view of the rows, available when `n <= 64`.
    pub(crate) fn masks(&self) -> Option<&[(u64, u64)]> {
        self.inner.masks.as_deref()
    }

    /// Number of ordered pairs `(i, j)` with `i <= j`, reflexive pairs included.
    pub fn comparable_pairs(&self) -> usize {
        self.inner.up.iter().map(|r| r.count_ones(..)).sum()
    }

    fn check_host(&self, set: &ElementSet) -> Result<()> {
        if set.host == self.id() {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(x))
        }
    }

    /// `C* = { x : y <= x for all y in C }`; all of `P` when `C` is empty.
    pub fn upper_bounds(&self, set: &ElementSet) -> Result<ElementSet> {
        self.check_host(set)?;
        let mut bits = full_bits(self.len());
        for y in set.iter() {
            bits.intersect_with(&self.inner.up[y]);
        }
        Ok(ElementSet::raw(self.id(), bits))
    }

    /// `C_* = { x : x <= y for all y in C }`; all of `P` when `C` is empty.
    pub fn lower_bounds(&self, set: &ElementSet) -> Result<ElementSet> {
        self.check_host(set)?;
        let mut bits = full_bits(self.len());
        for y in set.iter() {
            bits.intersect_with(&self.inner.down[y]);
        }
        Ok(ElementSet::raw(self.id(), bits))
    }

    /// `↓x`.
    pub fn principal_ideal(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(ElementSet::raw(self.id(), self.inner.down[x].clone()))
    }

    /// `↑x`.
    pub fn principal_filter(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(ElementSet::raw(self.id(), self.inner.up[x].clone()))
    }

    /// Least element of `set` under the order, if it has one.
    pub fn least_of(&self, set: &FixedBitSet) -> Option<usize> {
        set.ones().find(|&m| set.is_subset(&self.inner.up[m]))
    }

    /// Greatest element of `set` under the order, if it has one.
    pub fn greatest_of(&self, set: &FixedBitSet) -> Option<usize> {
        set.ones().find(|&m| set.is_subset(&self.inner.down[m]))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let mut common = self.inner.up[i].clone();
        common.intersect_with(&self.inner.up[j]);
        self.least_of(&common)
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let mut common = self.inner.down[i].clone();
        common.intersect_with(&self.inner.down[j]);
        self.greatest_of(&common)
    }

    /// Least upper bound of an arbitrary subset (`bottom` for the empty set).
    pub fn join_of(&self, set: &ElementSet) -> Result<Option<usize>> {
        let ub = self.upper_bounds(set)?;
        Ok(self.least_of(&ub.bits))
    }

    pub fn is_lattice(&self) -> LatticeCheck {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let join = self.join(i, j).is_none();
                let meet = self.meet(i, j).is_none();
                if join || meet {
                    return LatticeCheck::Missing {
                        pair: (i, j),
                        join,
                        meet,
                    };
                }
            }
        }
        LatticeCheck::Lattice
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| ((i + 1)..self.len()).all(|j| self.comparable(i, j)))
    }

    /// The cover relation (transitive reduction), sorted by `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in self.inner.up[i].ones() {
                if j == i {
                    continue;
                }
                let between = self.inner.up[i].ones().any(|k| k != i && k != j && self.leq(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A linear extension: indices sorted by the size of their principal
    /// ideal, ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.inner.down[i].count_ones(..), i));
        order
    }

    /// Same relation up to the identity labelling of indices.
    pub fn same_order(&self, other: &Poset) -> bool {
        self.len() == other.len() && self.inner.up == other.inner.up
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> = self
            .covers()
            .into_iter()
            .map(|(i, j)| (self.label(i), self.label(j)))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.inner.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.inner.labels == other.inner.labels && self.inner.up == other.inner.up
    }
}

impl Eq for Poset {}

fn full_bits(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

fn row_mask(row: &FixedBitSet) -> u64 {
    row.ones().fold(0u64, |m, j| m | (1 << j))
}

/// A subset of one specific poset's elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    host: u64,
    bits: FixedBitSet,
}

impl ElementSet {
    fn raw(host: u64, bits: FixedBitSet) -> ElementSet {
        ElementSet { host, bits }
    }

    pub fn empty(host: &Poset) -> ElementSet {
        ElementSet::raw(host.id(), FixedBitSet::with_capacity(host.len()))
    }

    pub fn full(host: &Poset) -> ElementSet {
        ElementSet::raw(host.id(), full_bits(host.len()))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(host: &Poset, items: I) -> Result<ElementSet> {
        let mut bits = FixedBitSet::with_capacity(host.len());
        for i in items {
            host.check_element(i)?;
            bits.insert(i);
        }
        Ok(ElementSet::raw(host.id(), bits))
    }

    pub fn from_labels<S: AsRef<str>>(host: &Poset, labels: &[S]) -> Result<ElementSet> {
        let idx = labels
            .iter()
            .map(|l| host.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        ElementSet::from_indices(host, idx)
    }

    /// Bit `i` of `mask` selects element `i`; bits past `n` are ignored.
    pub fn from_mask(host: &Poset, mask: u64) -> ElementSet {
        let n = host.len();
        let mut bits = FixedBitSet::with_capacity(n);
        for i in 0..n.min(64) {
            if mask >> i & 1 == 1 {
                bits.insert(i);
            }
        }
        ElementSet::raw(host.id(), bits)
    }

    /// The set as a word; `None` if it has an element past index 63.
    pub fn mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for i in self.bits.ones() {
            if i >= 64 {
                return None;
            }
            m |= 1 << i;
        }
        Some(m)
    }

    pub fn is_hosted_by(&self, host: &Poset) -> bool {
        self.host == host.id()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    fn same_host(&self, other: &ElementSet) {
        assert_eq!(self.host, other.host, "element sets from different posets");
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.same_host(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.same_host(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.same_host(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet::raw(self.host, bits)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.same_host(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet::raw(self.host, bits)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.same_host(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet::raw(self.host, bits)
    }

    pub fn labels<'p>(&self, host: &'p Poset) -> Result<Vec<&'p str>> {
        host.check_host(self)?;
        Ok(self.iter().map(|i| host.label(i)).collect())
    }
}

/// Numeric order of the characteristic bit vector, highest index most significant.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.host.cmp(&other.host).then_with(|| {
            let top = self.bits.len().max(other.bits.len());
            for i in (0..top).rev() {
                match (self.bits.contains(i), other.bits.contains(i)) {
                    (true, false) => return Ordering::Greater,
                    (false, true) => return Ordering::Less,
                    _ => {}
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
