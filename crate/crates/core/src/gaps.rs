//! Pregaps, gaps, the pregap quasiorder and the poset `B(P)` of separable pregaps.
//!
//! A pair `(A, B)` is a pregap when every element of `A` lies below every
//! element of `B`. It is separable when some `x` sits above all of `A` and
//! below all of `B`, and a gap otherwise. Pregaps are quasiordered by
//! `(A, B) <= (A', B')` iff every `a` in `A` lies below some `a'` in `A'` and
//! every `b` in `B` lies above some `b'` in `B'`.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::{Limits, RegularityConvention};
use crate::error::{Error, Result};
use crate::exec;
use crate::poset::{ElementSet, Poset};

/// Word-level view of a poset's relation rows, for enumeration over subsets.
#[derive(Clone, Copy)]
pub(crate) struct Masks<'a> {
    rows: &'a [(u64, u64)],
    pub(crate) full: u64,
}

impl<'a> Masks<'a> {
    pub(crate) fn new(p: &'a Poset) -> Result<Masks<'a>> {
        let rows = p.masks().ok_or(Error::BoundExceeded {
            what: "poset for word-level enumeration",
            size: p.len(),
            bound: 64,
        })?;
        let full = if p.len() == 64 { u64::MAX } else { (1u64 << p.len()) - 1 };
        Ok(Masks { rows, full })
    }

    fn fold(mut set: u64, init: u64, f: impl Fn(u64, usize) -> u64) -> u64 {
        let mut acc = init;
        while set != 0 {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            acc = f(acc, i);
        }
        acc
    }

    pub(crate) fn upper(&self, set: u64) -> u64 {
        Self::fold(set, self.full, |acc, i| acc & self.rows[i].0)
    }

    pub(crate) fn lower(&self, set: u64) -> u64 {
        Self::fold(set, self.full, |acc, i| acc & self.rows[i].1)
    }

    pub(crate) fn down_closure(&self, set: u64) -> u64 {
        Self::fold(set, 0, |acc, i| acc | self.rows[i].1)
    }

    pub(crate) fn up_closure(&self, set: u64) -> u64 {
        Self::fold(set, 0, |acc, i| acc | self.rows[i].0)
    }

    pub(crate) fn up(&self, i: usize) -> u64 {
        self.rows[i].0
    }
}

/// Submasks of `sup` in increasing numeric order.
pub(crate) fn submasks(sup: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == sup {
            None
        } else {
            Some((cur | !sup).wrapping_add(1) & sup)
        };
        Some(cur)
    })
}

fn exhaustive_check(p: &Poset, limits: &Limits) -> Result<()> {
    if p.len() > limits.exhaustive_bound {
        Err(Error::BoundExceeded {
            what: "poset for exhaustive pair enumeration",
            size: p.len(),
            bound: limits.exhaustive_bound,
        })
    } else {
        Ok(())
    }
}

/// Classification of an arbitrary pair of subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    /// `a` in `A` and `b` in `B` with `a` not below `b` (least such pair).
    NotPregap {
        a: usize,
        b: usize,
    },
    /// Separated by `witness`, the least index in `A* ∩ B_*`.
    Separable {
        witness: usize,
    },
    Gap,
}

impl PairClass {
    pub fn status(&self) -> &'static str {
        match self {
            PairClass::NotPregap { .. } => "not-pregap",
            PairClass::Separable { .. } => "separable",
            PairClass::Gap => "gap",
        }
    }
}

pub fn classify_pair(p: &Poset, a: &ElementSet, b: &ElementSet) -> Result<PairClass> {
    let above = p.upper_bounds(a)?;
    let below = p.lower_bounds(b)?;
    if !b.is_subset(&above) {
        let (x, y) = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .find(|&(x, y)| !p.leq(x, y))
            .expect("B is not inside A*");
        return Ok(PairClass::NotPregap { a: x, b: y });
    }
    Ok(match above.intersection(&below).iter().next() {
        Some(witness) => PairClass::Separable { witness },
        None => PairClass::Gap,
    })
}

/// A pregap with its separation status computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pregap {
    a: ElementSet,
    b: ElementSet,
    witness: Option<usize>,
}

impl Pregap {
    pub fn new(p: &Poset, a: ElementSet, b: ElementSet) -> Result<Pregap> {
        match classify_pair(p, &a, &b)? {
            PairClass::NotPregap { a: x, b: y } => Err(Error::Unordered(p.label(x).to_owned(), p.label(y).to_owned())),
            PairClass::Separable { witness } => Ok(Pregap {
                a,
                b,
                witness: Some(witness),
            }),
            PairClass::Gap => Ok(Pregap { a, b, witness: None }),
        }
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, a: &[S], b: &[S]) -> Result<Pregap> {
        Pregap::new(p, ElementSet::from_labels(p, a)?, ElementSet::from_labels(p, b)?)
    }

    pub(crate) fn from_masks(p: &Poset, m: &Masks<'_>, a: u64, b: u64) -> Pregap {
        let sep = m.upper(a) & m.lower(b);
        Pregap {
            a: ElementSet::from_mask(p, a),
            b: ElementSet::from_mask(p, b),
            witness: (sep != 0).then(|| sep.trailing_zeros() as usize),
        }
    }

    pub fn a(&self) -> &ElementSet {
        &self.a
    }

    pub fn b(&self) -> &ElementSet {
        &self.b
    }

    pub fn is_separable(&self) -> bool {
        self.witness.is_some()
    }

    pub fn is_gap(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<usize> {
        self.witness
    }

    pub fn cardinality(&self) -> (usize, usize) {
        (self.a.len(), self.b.len())
    }

    pub fn is_hosted_by(&self, p: &Poset) -> bool {
        self.a.is_hosted_by(p) && self.b.is_hosted_by(p)
    }

    pub fn class(&self) -> PairClass {
        match self.witness {
            Some(witness) => PairClass::Separable { witness },
            None => PairClass::Gap,
        }
    }

    /// `A* ∩ B_*`.
    pub fn separators(&self, p: &Poset) -> Result<ElementSet> {
        Ok(p.upper_bounds(&self.a)?.intersection(&p.lower_bounds(&self.b)?))
    }

    /// Display form `{a,b}|{c}`.
    pub fn display(&self, p: &Poset) -> String {
        let side = |s: &ElementSet| {
            let names: Vec<&str> = s.iter().map(|i| p.label(i)).collect();
            format!("{{{}}}", names.join(","))
        };
        format!("{}|{}", side(&self.a), side(&self.b))
    }
}

/// Every gap of `p`, ordered by `(A, B)` as bit words.
pub fn enumerate_gaps(p: &Poset, limits: &Limits) -> Result<Vec<Pregap>> {
    exhaustive_check(p, limits)?;
    let m = Masks::new(p)?;
    let words = exec::flat_map_range(limits.execution, 0..1u64 << p.len(), |a| {
        let above = m.upper(a);
        submasks(above)
            .filter(|&b| above & m.lower(b) == 0)
            .map(|b| (a, b))
            .collect()
    });
    Ok(words
        .into_iter()
        .map(|(a, b)| Pregap::from_masks(p, &m, a, b))
        .collect())
}

/// Every pair of subsets with its classification, ordered by `(A, B)`.
pub fn classify_all(p: &Poset, limits: &Limits) -> Result<Vec<(ElementSet, ElementSet, PairClass)>> {
    exhaustive_check(p, limits)?;
    let full = 1u64 << p.len();
    let rows = exec::flat_map_range(limits.execution, 0..full, |a| (0..full).map(|b| (a, b)).collect());
    rows.into_iter()
        .map(|(a, b)| {
            let (sa, sb) = (ElementSet::from_mask(p, a), ElementSet::from_mask(p, b));
            let class = classify_pair(p, &sa, &sb)?;
            Ok((sa, sb, class))
        })
        .collect()
}

/// Witness that `left <= right` in the pregap quasiorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PregapOrderCertificate {
    /// Each `a` of the left pregap paired with its least majorant in the right `A`.
    pub a_cover: Vec<(usize, usize)>,
    /// Each `b` of the left pregap paired with its least minorant in the right `B`.
    pub b_cover: Vec<(usize, usize)>,
}

pub fn pregap_leq(p: &Poset, left: &Pregap, right: &Pregap) -> Result<Option<PregapOrderCertificate>> {
    if !left.is_hosted_by(p) || !right.is_hosted_by(p) {
        return Err(Error::HostMismatch);
    }
    let mut a_cover = Vec::with_capacity(left.a.len());
    for a in left.a.iter() {
        match right.a.iter().find(|&x| p.leq(a, x)) {
            Some(x) => a_cover.push((a, x)),
            None => return Ok(None),
        }
    }
    let mut b_cover = Vec::with_capacity(left.b.len());
    for b in left.b.iter() {
        match right.b.iter().find(|&y| p.leq(y, b)) {
            Some(y) => b_cover.push((b, y)),
            None => return Ok(None),
        }
    }
    Ok(Some(PregapOrderCertificate { a_cover, b_cover }))
}

/// One element of `B(P)`: an equivalence class of separable pregaps.
#[derive(Debug, Clone)]
pub struct PregapClass {
    /// Least member under the `(A, B)` word order.
    pub representative: Pregap,
    pub size: usize,
    /// `A* ∩ B_*`, shared by every member of the class.
    pub separators: ElementSet,
}

/// `B(P)` quotiented by mutual comparability in the pregap quasiorder.
#[derive(Debug, Clone)]
pub struct SeparableQuotient {
    pub poset: Poset,
    pub classes: Vec<PregapClass>,
}

/// Builds `B(P)`. Two pregaps are equivalent iff they have the same
/// down-closure of `A` and up-closure of `B`, and the class order is
/// inclusion of both closures.
pub fn build_bp(p: &Poset, limits: &Limits) -> Result<SeparableQuotient> {
    exhaustive_check(p, limits)?;
    let m = Masks::new(p)?;
    let pairs = exec::flat_map_range(limits.execution, 0..1u64 << p.len(), |a| {
        let above = m.upper(a);
        submasks(above)
            .filter(|&b| above & m.lower(b) != 0)
            .map(|b| (a, b))
            .collect()
    });
    let mut keyed: HashMap<(u64, u64), usize> = HashMap::new();
    let mut reps: Vec<(u64, u64, (u64, u64), usize)> = Vec::new();
    for (a, b) in pairs {
        let key = (m.down_closure(a), m.up_closure(b));
        match keyed.get(&key) {
            Some(&k) => reps[k].3 += 1,
            None => {
                keyed.insert(key, reps.len());
                reps.push((a, b, key, 1));
            }
        }
    }
    let keys: Vec<(u64, u64)> = reps.iter().map(|r| r.2).collect();
    let classes: Vec<PregapClass> = reps
        .iter()
        .map(|&(a, b, _, size)| {
            let representative = Pregap::from_masks(p, &m, a, b);
            let sep = m.upper(a) & m.lower(b);
            PregapClass {
                representative,
                size,
                separators: ElementSet::from_mask(p, sep),
            }
        })
        .collect();
    let labels = classes.iter().map(|c| c.representative.display(p)).collect();
    let poset = Poset::from_relation(labels, |i, j| {
        let (x, y) = (keys[i], keys[j]);
        x.0 & !y.0 == 0 && x.1 & !y.1 == 0
    })?;
    Ok(SeparableQuotient { poset, classes })
}

fn subpair_check(p: &Poset, g: &Pregap, limits: &Limits) -> Result<(Vec<usize>, Vec<usize>)> {
    if !g.is_hosted_by(p) {
        return Err(Error::HostMismatch);
    }
    if g.is_separable() {
        return Err(Error::NotAGap);
    }
    let (na, nb) = g.cardinality();
    if na + nb > 2 * limits.exhaustive_bound {
        return Err(Error::BoundExceeded {
            what: "subpair enumeration",
            size: na + nb,
            bound: 2 * limits.exhaustive_bound,
        });
    }
    Ok((g.a.iter().collect(), g.b.iter().collect()))
}

fn pick(items: &[usize], sel: u64) -> impl Iterator<Item = usize> + '_ {
    items
        .iter()
        .enumerate()
        .filter(move |(k, _)| sel >> k & 1 == 1)
        .map(|(_, &x)| x)
}

/// Calls `f(A', B', is_gap)` on every subpair of `g`, empty components included.
fn for_each_subpair(p: &Poset, a: &[usize], b: &[usize], mut f: impl FnMut(u64, u64, bool) -> bool) -> Result<bool> {
    for sa in 0..1u64 << a.len() {
        let above = p.upper_bounds(&ElementSet::from_indices(p, pick(a, sa))?)?;
        for sb in 0..1u64 << b.len() {
            let below = p.lower_bounds(&ElementSet::from_indices(p, pick(b, sb))?)?;
            if !f(sa, sb, above.is_disjoint(&below)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimal: every subgap has the cardinality of `g`.
pub fn is_minimal_gap(p: &Poset, g: &Pregap, limits: &Limits) -> Result<bool> {
    let (a, b) = subpair_check(p, g, limits)?;
    let full = (a.len(), b.len());
    for_each_subpair(p, &a, &b, |sa, sb, gap| {
        !gap || (sa.count_ones() as usize, sb.count_ones() as usize) == full
    })
}

/// Irreducible: a subpair is a gap exactly when it has the cardinality of `g`.
pub fn is_irreducible_gap(p: &Poset, g: &Pregap, limits: &Limits) -> Result<bool> {
    let (a, b) = subpair_check(p, g, limits)?;
    let full = (a.len(), b.len());
    for_each_subpair(p, &a, &b, |sa, sb, gap| {
        gap == ((sa.count_ones() as usize, sb.count_ones() as usize) == full)
    })
}

/// All subgaps of `g`, in `(A', B')` selection order.
pub fn subgaps(p: &Poset, g: &Pregap, limits: &Limits) -> Result<Vec<Pregap>> {
    let (a, b) = subpair_check(p, g, limits)?;
    let mut found = Vec::new();
    for_each_subpair(p, &a, &b, |sa, sb, gap| {
        if gap {
            found.push((sa, sb));
        }
        true
    })?;
    found
        .into_iter()
        .map(|(sa, sb)| {
            Pregap::new(
                p,
                ElementSet::from_indices(p, pick(&a, sa))?,
                ElementSet::from_indices(p, pick(&b, sb))?,
            )
        })
        .collect()
}

/// Subgaps of `g` with no proper subpair that is a gap. At finite sizes
/// these are exactly the irreducible subgaps.
pub fn irreducible_subgaps(p: &Poset, g: &Pregap, limits: &Limits) -> Result<Vec<Pregap>> {
    let (a, b) = subpair_check(p, g, limits)?;
    let mut found = Vec::new();
    for_each_subpair(p, &a, &b, |sa, sb, gap| {
        if gap {
            found.push((sa, sb));
        }
        true
    })?;
    let inside = |x: (u64, u64), y: (u64, u64)| x != y && x.0 & !y.0 == 0 && x.1 & !y.1 == 0;
    found
        .iter()
        .filter(|&&s| !found.iter().any(|&t| inside(t, s)))
        .map(|&(sa, sb)| {
            Pregap::new(
                p,
                ElementSet::from_indices(p, pick(&a, sa))?,
                ElementSet::from_indices(p, pick(&b, sb))?,
            )
        })
        .collect()
}

/// A minimal subgap of `g`: the first subgap of least total size.
pub fn minimal_subgap(p: &Poset, g: &Pregap, limits: &Limits) -> Result<Pregap> {
    let all = subgaps(p, g, limits)?;
    let best = all
        .iter()
        .min_by_key(|s| s.a.len() + s.b.len())
        .expect("g is a subgap of itself");
    Ok(best.clone())
}

/// Verdict of [`regular_pair`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// A pair is regular when both sizes are regular, or one is regular and the
/// other is zero. Zero itself is never regular.
pub fn regular_pair(cardinality: (usize, usize), convention: RegularityConvention) -> Regularity {
    let (m, n) = cardinality;
    match convention {
        RegularityConvention::AllFinite => {
            let reg = |k: usize| k > 0;
            Regularity {
                regular: (reg(m) && reg(n)) || (reg(m) && n == 0) || (m == 0 && reg(n)),
                warning: None,
            }
        }
        RegularityConvention::InfiniteOnly => Regularity {
            regular: false,
            warning: (m > 0 || n > 0)
                .then(|| format!("regularity of finite cardinality ({m},{n}) is undefined under infinite-only")),
        },
    }
}

/// One row of the JSON gap report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    pub cardinality: [usize; 2],
}

impl PairReport {
    pub fn new(p: &Poset, a: &ElementSet, b: &ElementSet, class: PairClass) -> Result<PairReport> {
        let names =
            |s: &ElementSet| -> Result<Vec<String>> { Ok(s.labels(p)?.into_iter().map(str::to_owned).collect()) };
        Ok(PairReport {
            a: names(a)?,
            b: names(b)?,
            status: class.status(),
            witness: match class {
                PairClass::Separable { witness } => Some(p.label(witness).to_owned()),
                _ => None,
            },
            minimal: None,
            irreducible: None,
            cardinality: [a.len(), b.len()],
        })
    }

    /// Report row for a gap, with both minimality flags filled in.
    pub fn for_gap(p: &Poset, g: &Pregap, limits: &Limits) -> Result<PairReport> {
        let mut r = PairReport::new(p, &g.a, &g.b, g.class())?;
        r.minimal = Some(is_minimal_gap(p, g, limits)?);
        r.irreducible = Some(is_irreducible_gap(p, g, limits)?);
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn butterfly() -> Poset {
        Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap()
    }

    fn set(p: &Poset, labels: &[&str]) -> ElementSet {
        ElementSet::from_labels(p, labels).unwrap()
    }

    /// Gap oracle straight from the definitions, scanning every candidate separator.
    fn oracle_gaps(p: &Poset) -> Vec<(u64, u64)> {
        let n = p.len();
        let mut out = Vec::new();
        for a in 0..1u64 << n {
            for b in 0..1u64 << n {
                let inside = |s: u64, i: usize| s >> i & 1 == 1;
                let pregap = (0..n).all(|x| (0..n).all(|y| !(inside(a, x) && inside(b, y)) || p.leq(x, y)));
                if !pregap {
                    continue;
                }
                let separated = (0..n).any(|z| {
                    (0..n).all(|x| !inside(a, x) || p.leq(x, z)) && (0..n).all(|y| !inside(b, y) || p.leq(z, y))
                });
                if !separated {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn classify_examples() {
        let p = butterfly();
        assert_eq!(
            classify_pair(&p, &set(&p, &["a", "b"]), &set(&p, &["c", "d"])).unwrap(),
            PairClass::Gap
        );
        assert_eq!(
            classify_pair(&p, &set(&p, &["a"]), &set(&p, &["c", "d"])).unwrap(),
            PairClass::Separable { witness: 0 }
        );
        let anti = Poset::antichain(2).unwrap();
        assert_eq!(
            classify_pair(&anti, &set(&anti, &["a"]), &set(&anti, &["b"])).unwrap(),
            PairClass::NotPregap { a: 0, b: 1 }
        );
        let other = butterfly();
        assert_eq!(
            classify_pair(&p, &set(&other, &["a"]), &set(&p, &["c"])).unwrap_err(),
            Error::HostMismatch
        );
    }

    #[test]
    fn enumerate_examples() {
        let limits = Limits::default();
        let p = butterfly();
        let gaps = enumerate_gaps(&p, &limits).unwrap();
        let shown: Vec<String> = gaps.iter().map(|g| g.display(&p)).collect();
        // four with A empty, four with B empty, and the one with both sides full
        assert_eq!(
            shown,
            [
                "{}|{a,b}",
                "{}|{a,b,c}",
                "{}|{a,b,d}",
                "{}|{a,b,c,d}",
                "{a,b}|{c,d}",
                "{c,d}|{}",
                "{a,c,d}|{}",
                "{b,c,d}|{}",
                "{a,b,c,d}|{}",
            ]
        );

        let anti = Poset::antichain(2).unwrap();
        let gaps: Vec<String> = enumerate_gaps(&anti, &limits)
            .unwrap()
            .iter()
            .map(|g| g.display(&anti))
            .collect();
        assert_eq!(gaps, ["{}|{a,b}", "{a,b}|{}"]);

        assert!(enumerate_gaps(&Poset::chain(3).unwrap(), &limits).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_definition_oracle() {
        for p in crate::catalogue::posets_up_to(4, Default::default()).unwrap() {
            let fast: Vec<(u64, u64)> = enumerate_gaps(&p, &Limits::default())
                .unwrap()
                .iter()
                .map(|g| (g.a().mask().unwrap(), g.b().mask().unwrap()))
                .collect();
            assert_eq!(fast, oracle_gaps(&p), "{p:?}");
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let p = butterfly().product(&Poset::chain(2).unwrap(), 1 << 20).unwrap();
        let par = enumerate_gaps(&p, &Limits::default()).unwrap();
        let seq = enumerate_gaps(&p, &Limits::default().sequential()).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn bound_exceeded() {
        let limits = Limits {
            exhaustive_bound: 3,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_gaps(&butterfly(), &limits),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn quasiorder_examples() {
        let anti = Poset::antichain(2).unwrap();
        let empty = Pregap::from_labels::<&str>(&anti, &[], &[]).unwrap();
        let aa = Pregap::from_labels(&anti, &["a"], &["a"]).unwrap();
        assert!(pregap_leq(&anti, &empty, &empty).unwrap().is_some());
        assert!(pregap_leq(&anti, &empty, &aa).unwrap().is_some());
        assert!(pregap_leq(&anti, &aa, &empty).unwrap().is_none());

        let c3 = Poset::chain(3).unwrap();
        let low = Pregap::from_labels(&c3, &["0"], &["2"]).unwrap();
        let high = Pregap::from_labels(&c3, &["1"], &["2"]).unwrap();
        let cert = pregap_leq(&c3, &low, &high).unwrap().unwrap();
        assert_eq!(cert.a_cover, [(0, 1)]);
        assert_eq!(cert.b_cover, [(2, 2)]);
    }

    #[test]
    fn non_pregap_is_rejected() {
        let anti = Poset::antichain(2).unwrap();
        assert_eq!(
            Pregap::from_labels(&anti, &["a"], &["b"]).unwrap_err(),
            Error::Unordered("a".into(), "b".into())
        );
    }

    #[test]
    fn bp_examples() {
        let limits = Limits::default();
        let one = Poset::chain(1).unwrap();
        let bp = build_bp(&one, &limits).unwrap();
        assert_eq!(bp.classes.len(), 4);
        assert!(bp.poset.is_lattice().is_lattice());

        let anti = Poset::antichain(2).unwrap();
        let bp = build_bp(&anti, &limits).unwrap();
        let find = |label: &str| bp.poset.index_of(label).unwrap();
        let (bottom, a, b) = (find("{}|{}"), find("{a}|{a}"), find("{b}|{b}"));
        assert!(bp.poset.lt(bottom, a));
        assert!(bp.poset.lt(bottom, b));
        assert!(!bp.poset.comparable(a, b));
    }

    /// Quotient built from closures agrees with grouping by mutual `pregap_leq`.
    #[test]
    fn bp_matches_quasiorder_oracle() {
        let limits = Limits::default();
        for p in crate::catalogue::posets_up_to(3, Default::default()).unwrap() {
            let bp = build_bp(&p, &limits).unwrap();
            let mut separable = Vec::new();
            for a in 0..1u64 << p.len() {
                for b in 0..1u64 << p.len() {
                    let g = Pregap::new(&p, ElementSet::from_mask(&p, a), ElementSet::from_mask(&p, b));
                    if let Ok(g) = g {
                        if g.is_separable() {
                            separable.push(g);
                        }
                    }
                }
            }
            let leq = |x: &Pregap, y: &Pregap| pregap_leq(&p, x, y).unwrap().is_some();
            let mut reps: Vec<&Pregap> = Vec::new();
            for g in &separable {
                if !reps.iter().any(|r| leq(r, g) && leq(g, r)) {
                    reps.push(g);
                }
            }
            assert_eq!(reps.len(), bp.classes.len(), "{p:?}");
            for (i, ri) in reps.iter().enumerate() {
                assert_eq!(*ri, &bp.classes[i].representative);
                for (j, rj) in reps.iter().enumerate() {
                    assert_eq!(leq(ri, rj), bp.poset.leq(i, j));
                }
            }
        }
    }

    #[test]
    fn minimality_examples() {
        let limits = Limits::default();
        let p = butterfly();
        let g = Pregap::from_labels(&p, &["a", "b"], &["c", "d"]).unwrap();
        assert!(is_minimal_gap(&p, &g, &limits).unwrap());
        assert!(is_irreducible_gap(&p, &g, &limits).unwrap());
        assert_eq!(subgaps(&p, &g, &limits).unwrap(), std::slice::from_ref(&g));

        let anti = Poset::antichain(2).unwrap();
        let g = Pregap::from_labels(&anti, &["a", "b"], &[]).unwrap();
        assert!(is_minimal_gap(&anti, &g, &limits).unwrap());
        assert!(is_irreducible_gap(&anti, &g, &limits).unwrap());

        let sep = Pregap::from_labels(&p, &["a"], &["c"]).unwrap();
        assert_eq!(is_minimal_gap(&p, &sep, &limits).unwrap_err(), Error::NotAGap);
    }

    #[test]
    fn non_minimal_gap() {
        // a 3-antichain: ({a,b,c}, {}) contains the smaller gap ({a,b}, {})
        let limits = Limits::default();
        let anti = Poset::antichain(3).unwrap();
        let g = Pregap::from_labels(&anti, &["a", "b", "c"], &[]).unwrap();
        assert!(!is_minimal_gap(&anti, &g, &limits).unwrap());
        assert!(!is_irreducible_gap(&anti, &g, &limits).unwrap());
        let m = minimal_subgap(&anti, &g, &limits).unwrap();
        assert_eq!(m.display(&anti), "{a,b}|{}");
        assert!(is_minimal_gap(&anti, &m, &limits).unwrap());
    }

    #[test]
    fn irreducible_subgaps_match_definition() {
        let limits = Limits::default();
        for p in crate::catalogue::posets_up_to(4, Default::default()).unwrap() {
            for g in enumerate_gaps(&p, &limits).unwrap() {
                let fast = irreducible_subgaps(&p, &g, &limits).unwrap();
                let slow: Vec<Pregap> = subgaps(&p, &g, &limits)
                    .unwrap()
                    .into_iter()
                    .filter(|s| is_irreducible_gap(&p, s, &limits).unwrap())
                    .collect();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn regularity_conventions() {
        assert!(regular_pair((2, 0), RegularityConvention::AllFinite).regular);
        assert!(regular_pair((2, 2), RegularityConvention::AllFinite).regular);
        assert!(!regular_pair((0, 0), RegularityConvention::AllFinite).regular);
        let r = regular_pair((2, 2), RegularityConvention::InfiniteOnly);
        assert!(!r.regular);
        assert!(r.warning.is_some());
    }

    #[test]
    fn submask_order() {
        assert_eq!(submasks(0b101).collect::<Vec<_>>(), [0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn report_rows() {
        let p = butterfly();
        let g = Pregap::from_labels(&p, &["a", "b"], &["c", "d"]).unwrap();
        let g = &g;
        let row = PairReport::for_gap(&p, g, &Limits::default()).unwrap();
        let json = serde_json::to_string(&row).unwrap();
        assert_eq!(
            json,
            r#"{"A":["a","b"],"B":["c","d"],"status":"gap","minimal":true,"irreducible":true,"cardinality":[2,2]}"#
        );
    }
}
