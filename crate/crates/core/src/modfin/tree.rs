use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::set::PeriodicSet;
use super::word::Word;
use crate::error::{Error, Result};

/// A node of `T₂`: a finite 0/1 sequence.
pub type Node = Vec<bool>;

pub fn node_label(s: &[bool]) -> String {
    if s.is_empty() {
        "()".to_owned()
    } else {
        s.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Breadth-first numbering of `T₂`: `()` is 0, `(0)` is 1, `(1)` is 2, ...
pub struct NodeCoding;

impl NodeCoding {
    pub fn encode(s: &[bool]) -> u64 {
        assert!(s.len() < 63, "node too deep to encode");
        let value = s.iter().fold(0u64, |v, &b| v << 1 | b as u64);
        (1u64 << s.len()) - 1 + value
    }

    pub fn decode(code: u64) -> Node {
        let level = NodeCoding::level(code);
        let value = code + 1 - (1u64 << level);
        (0..level).rev().map(|i| value >> i & 1 == 1).collect()
    }

    pub fn level(code: u64) -> usize {
        (63 - (code + 1).leading_zeros()) as usize
    }
}

/// An eventually periodic maximal branch of `T₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Branch(Word);

impl Branch {
    pub fn from_word(word: Word) -> Branch {
        Branch(word)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0.bit(i)
    }

    /// The prefix of length `level`.
    pub fn node(&self, level: usize) -> Node {
        self.0.prefix(level)
    }

    pub fn has_node(&self, s: &[bool]) -> bool {
        s.iter().enumerate().all(|(i, &b)| self.bit(i) == b)
    }

    /// All finite prefixes.
    pub fn node_set(&self) -> NodeSet {
        NodeSet::strand(self.clone(), PeriodicSet::omega())
    }

    pub fn literal(&self) -> String {
        self.0.to_string()
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Branch> {
        s.parse().map(Branch)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Length of the longest common prefix of two distinct branches.
pub fn divergence_depth(b1: &Branch, b2: &Branch) -> Result<usize> {
    b1.0.first_difference(&b2.0).ok_or(Error::EqualBranches)
}

/// The nodes `b|ℓ` of one branch at the levels `ℓ` in a periodic set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Strand {
    #[serde(serialize_with = "as_literal")]
    pub branch: Branch,
    #[serde(serialize_with = "as_literal")]
    pub levels: PeriodicSet,
}

fn as_literal<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// A set of nodes of `T₂` presented as a finite union of strands. Equal
/// node sets can have different presentations; compare with
/// [`NodeSet::same_nodes`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct NodeSet {
    strands: Vec<Strand>,
}

/// Levels where the strands of `a` and `b` hold the same node.
fn shared_levels(a: &Branch, b: &Branch) -> PeriodicSet {
    match divergence_depth(a, b) {
        Ok(d) => PeriodicSet::up_to(d),
        Err(_) => PeriodicSet::omega(),
    }
}

impl NodeSet {
    pub fn empty() -> NodeSet {
        NodeSet::default()
    }

    pub fn strand(branch: Branch, levels: PeriodicSet) -> NodeSet {
        NodeSet::from_strands(vec![Strand { branch, levels }])
    }

    /// Merges strands of equal branches and drops empty ones.
    pub fn from_strands(mut strands: Vec<Strand>) -> NodeSet {
        strands.sort();
        let mut out: Vec<Strand> = Vec::with_capacity(strands.len());
        for s in strands {
            match out.last_mut() {
                Some(last) if last.branch == s.branch => last.levels = last.levels.union(&s.levels),
                _ => out.push(s),
            }
        }
        out.retain(|s| !s.levels.is_empty());
        NodeSet { strands: out }
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn contains(&self, s: &[bool]) -> bool {
        self.strands
            .iter()
            .any(|t| t.levels.contains(s.len()) && t.branch.has_node(s))
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        NodeSet::from_strands(self.strands.iter().chain(&other.strands).cloned().collect())
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        let mut out = Vec::new();
        for s in &self.strands {
            for t in &other.strands {
                let levels = s
                    .levels
                    .intersection(&t.levels)
                    .intersection(&shared_levels(&s.branch, &t.branch));
                out.push(Strand {
                    branch: s.branch.clone(),
                    levels,
                });
            }
        }
        NodeSet::from_strands(out)
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        let strands = self
            .strands
            .iter()
            .map(|s| {
                let removed = other.strands.iter().fold(PeriodicSet::empty(), |acc, t| {
                    acc.union(&t.levels.intersection(&shared_levels(&s.branch, &t.branch)))
                });
                Strand {
                    branch: s.branch.clone(),
                    levels: s.levels.difference(&removed),
                }
            })
            .collect();
        NodeSet::from_strands(strands)
    }

    /// Removes `T₂(k)`, the nodes of length at most `k`.
    pub fn above_level(&self, k: usize) -> NodeSet {
        let cut = PeriodicSet::up_to(k);
        NodeSet::from_strands(
            self.strands
                .iter()
                .map(|s| Strand {
                    branch: s.branch.clone(),
                    levels: s.levels.difference(&cut),
                })
                .collect(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.strands.iter().all(|s| s.levels.is_finite())
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn same_nodes(&self, other: &NodeSet) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    /// Greatest node length in a finite non-empty set.
    pub fn max_level(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        self.strands.iter().filter_map(|s| s.levels.max_element()).max()
    }

    /// Nodes of length at most `level`, by length and then lexicographically.
    pub fn nodes_up_to(&self, level: usize) -> Vec<Node> {
        let mut nodes: Vec<Node> = self
            .strands
            .iter()
            .flat_map(|s| {
                (0..=level)
                    .filter(|&l| s.levels.contains(l))
                    .map(|l| s.branch.node(l))
                    .collect::<Vec<_>>()
            })
            .collect();
        nodes.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        nodes.dedup();
        nodes
    }

    /// Every node when the set is finite.
    pub fn finite_nodes(&self) -> Option<Vec<Node>> {
        if !self.is_finite() {
            return None;
        }
        Some(self.max_level().map_or_else(Vec::new, |m| self.nodes_up_to(m)))
    }

    pub fn describe(&self) -> String {
        if let Some(nodes) = self.finite_nodes() {
            let items: Vec<String> = nodes.iter().map(|s| node_label(s)).collect();
            return format!("{{{}}}", items.join(","));
        }
        let parts: Vec<String> = self
            .strands
            .iter()
            .map(|s| format!("{}@{}", s.branch, s.levels))
            .collect();
        parts.join(" + ")
    }
}

/// `A′_b = {s : s⌢0 ∈ b}` and `B′_b = {s : s⌢1 ∈ b}`.
pub fn luzin_pair(b: &Branch) -> (NodeSet, NodeSet) {
    let ones = PeriodicSet::from_word(b.word().clone());
    (
        NodeSet::strand(b.clone(), ones.complement()),
        NodeSet::strand(b.clone(), ones),
    )
}

/// `Ď`: the nodes lying on every branch of `D`.
pub fn check_operator(d: &[Branch]) -> Result<NodeSet> {
    let (first, rest) = d.split_first().ok_or(Error::EmptyFamily)?;
    Ok(rest
        .iter()
        .fold(first.node_set(), |acc, b| acc.intersection(&b.node_set())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FsigmaAuditRow {
    /// `"A"`: `a ∖ X ⊆ T₂(k)`. `"B"`: `X ∩ b` has no node above level `k`.
    pub side: &'static str,
    pub index: usize,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct FsigmaSeparation {
    pub k: usize,
    pub separator: NodeSet,
    pub audit: Vec<FsigmaAuditRow>,
}

impl FsigmaSeparation {
    pub fn passes(&self) -> bool {
        self.audit.iter().all(|r| r.holds)
    }
}

pub fn audit_fsigma(a: &[NodeSet], b: &[NodeSet], k: usize, x: &NodeSet) -> Vec<FsigmaAuditRow> {
    let up_to_k = |s: &NodeSet| s.above_level(k).is_empty();
    a.iter()
        .enumerate()
        .map(|(i, ai)| FsigmaAuditRow {
            side: "A",
            index: i,
            holds: up_to_k(&ai.difference(x)),
        })
        .chain(b.iter().enumerate().map(|(j, bj)| FsigmaAuditRow {
            side: "B",
            index: j,
            holds: up_to_k(&x.intersection(bj)),
        }))
        .collect()
}

/// Separator for node-set families whose cross intersections are finite:
/// `k` is the deepest level met by any `a ∩ b` (0 when none meet) and
/// `X = ⋃A ∖ T₂(k)`.
pub fn fsigma_separator_sets(a: &[NodeSet], b: &[NodeSet]) -> Result<FsigmaSeparation> {
    let mut k = 0;
    for ai in a {
        for bj in b {
            let meet = ai.intersection(bj);
            if !meet.is_finite() {
                let shared = meet
                    .strands()
                    .iter()
                    .find(|s| !s.levels.is_finite())
                    .expect("infinite strand");
                return Err(Error::FamiliesIntersect(shared.branch.literal()));
            }
            k = k.max(meet.max_level().unwrap_or(0));
        }
    }
    let union = a.iter().fold(NodeSet::empty(), |acc, s| acc.union(s));
    let separator = union.above_level(k);
    let audit = audit_fsigma(a, b, k, &separator);
    Ok(FsigmaSeparation { k, separator, audit })
}

/// Branch families: `k` is the largest divergence depth of a cross pair.
pub fn fsigma_separator(a: &[Branch], b: &[Branch]) -> Result<FsigmaSeparation> {
    if let Some(shared) = a.iter().find(|x| b.contains(x)) {
        return Err(Error::FamiliesIntersect(shared.literal()));
    }
    let nodes = |f: &[Branch]| f.iter().map(Branch::node_set).collect::<Vec<_>>();
    fsigma_separator_sets(&nodes(a), &nodes(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(lit: &str) -> Branch {
        lit.parse().unwrap()
    }

    #[test]
    fn coding_is_breadth_first() {
        assert_eq!(NodeCoding::encode(&[]), 0);
        assert_eq!(NodeCoding::encode(&[false]), 1);
        assert_eq!(NodeCoding::encode(&[true]), 2);
        assert_eq!(NodeCoding::encode(&[false, false]), 3);
        for code in 0..2000 {
            let s = NodeCoding::decode(code);
            assert_eq!(NodeCoding::encode(&s), code);
            assert_eq!(NodeCoding::level(code), s.len());
        }
    }

    #[test]
    fn divergence_examples() {
        assert_eq!(divergence_depth(&br("|0"), &br("|1")).unwrap(), 0);
        assert_eq!(
            divergence_depth(&br("|01"), &br("0|10")).unwrap_err(),
            Error::EqualBranches
        );
        for k in 0..10 {
            let other = Branch::from_word(Word::new(vec![false; k], vec![true]));
            assert_eq!(divergence_depth(&br("|0"), &other).unwrap(), k);
        }
    }

    #[test]
    fn luzin_examples() {
        let zero = br("|0");
        let (a, b) = luzin_pair(&zero);
        assert!(a.same_nodes(&zero.node_set()));
        assert!(b.is_empty());
        let alt = br("|01");
        let (a, b) = luzin_pair(&alt);
        assert!((0..64).all(|l| a.contains(&alt.node(l)) == (l % 2 == 0)));
        assert!((0..64).all(|l| b.contains(&alt.node(l)) == (l % 2 == 1)));
        assert!(a.intersection(&b).is_empty());
    }

    #[test]
    fn check_operator_examples() {
        let b = br("1|01");
        assert!(check_operator(std::slice::from_ref(&b))
            .unwrap()
            .same_nodes(&b.node_set()));
        let d = check_operator(&[br("|0"), br("|01")]).unwrap();
        assert_eq!(d.describe(), "{(),0}");
        assert_eq!(check_operator(&[br("|0"), br("|1")]).unwrap().describe(), "{()}");
        assert_eq!(check_operator(&[]).unwrap_err(), Error::EmptyFamily);
    }

    #[test]
    fn fsigma_examples() {
        let sep = fsigma_separator(&[br("|0")], &[br("|1")]).unwrap();
        assert_eq!(sep.k, 0);
        assert!(sep.separator.same_nodes(&br("|0").node_set().above_level(0)));
        assert!(sep.passes());

        let a = [br("|0"), br("|01")];
        let sep = fsigma_separator(&a, &[br("|1")]).unwrap();
        assert_eq!(sep.k, 0);
        assert!(sep.passes());
        let sep = fsigma_separator(&a, &[br("001|1")]).unwrap();
        assert_eq!(sep.k, 2);
        assert!(sep.passes());

        let sep = fsigma_separator(&[], &[br("|1")]).unwrap();
        assert!(sep.separator.is_empty() && sep.passes());

        assert_eq!(
            fsigma_separator(&[br("|0")], &[br("0|0")]).unwrap_err(),
            Error::FamiliesIntersect("|0".into())
        );
    }

    #[test]
    fn node_set_algebra_matches_explicit_nodes() {
        let branches = [br("|0"), br("|01"), br("01|1"), br("1|10")];
        let sets: Vec<NodeSet> = branches
            .iter()
            .enumerate()
            .map(|(i, b)| NodeSet::strand(b.clone(), PeriodicSet::multiples(i + 1)))
            .collect();
        let explicit = |s: &NodeSet| s.nodes_up_to(12);
        let all_nodes: Vec<Node> = (0..(1u64 << 13) - 1).map(NodeCoding::decode).collect();
        for x in &sets {
            for y in &sets {
                let inter = x.intersection(y);
                let diff = x.difference(y);
                let uni = x.union(y);
                for s in &all_nodes {
                    assert_eq!(inter.contains(s), x.contains(s) && y.contains(s));
                    assert_eq!(diff.contains(s), x.contains(s) && !y.contains(s));
                    assert_eq!(uni.contains(s), x.contains(s) || y.contains(s));
                }
                let mut oracle: Vec<Node> = all_nodes.iter().filter(|s| inter.contains(s)).cloned().collect();
                oracle.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
                assert_eq!(explicit(&inter), oracle);
            }
        }
    }
}
