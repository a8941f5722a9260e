//! Finite Sierpinskizations: a ground set carrying a real order and an
//! enumeration order, their intersection poset, and the lattice generated by
//! its principal ideals under binary union and intersection.

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::deciders::Budget;
use crate::error::{Error, Result};
use crate::lattice::{Forbidden, JoinMeet};
use crate::poset::{ElementSet, Poset};

pub type Rational = Ratio<i64>;

/// Points in increasing real order plus an enumeration order on their
/// indices: `well_order[k]` is the `k`-th element of the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SierpinskiChain {
    points: Vec<Rational>,
    well_order: Vec<usize>,
    rank: Vec<usize>,
}

impl SierpinskiChain {
    pub fn new(points: Vec<Rational>, well_order: Vec<usize>) -> Result<SierpinskiChain> {
        if points.is_empty() {
            return Err(Error::EmptyPoset);
        }
        if let Some(i) = points.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(i + 1));
        }
        let n = points.len();
        let mut rank = vec![usize::MAX; n];
        if well_order.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        for (k, &x) in well_order.iter().enumerate() {
            if x >= n || rank[x] != usize::MAX {
                return Err(Error::NotAPermutation(n));
            }
            rank[x] = k;
        }
        Ok(SierpinskiChain {
            points,
            well_order,
            rank,
        })
    }

    /// Points `1, 2, ..., n`.
    pub fn with_integer_points(well_order: Vec<usize>) -> Result<SierpinskiChain> {
        let points = (1..=well_order.len() as i64).map(Rational::from_integer).collect();
        SierpinskiChain::new(points, well_order)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn well_order(&self) -> &[usize] {
        &self.well_order
    }

    /// Position of `x` in the enumeration.
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn real_leq(&self, x: usize, y: usize) -> bool {
        x <= y
    }

    pub fn omega_leq(&self, x: usize, y: usize) -> bool {
        self.rank[x] <= self.rank[y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.real_leq(x, y) && self.omega_leq(x, y)
    }

    pub fn label(&self, x: usize) -> String {
        self.points[x].to_string()
    }

    /// The intersection order; labels are the points.
    pub fn poset(&self) -> Poset {
        let labels = (0..self.len()).map(|x| self.label(x)).collect();
        Poset::from_relation(labels, |x, y| self.leq(x, y)).expect("intersection of two linear orders")
    }

    /// The real order and the enumeration are both linear extensions of
    /// `p`, and `p` is exactly their intersection.
    pub fn is_realizer_of(&self, p: &Poset) -> bool {
        let n = self.len();
        p.len() == n && (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == (self.real_leq(x, y) && self.omega_leq(x, y))))
    }

    pub fn omega_least(&self, xs: &[usize]) -> Option<usize> {
        xs.iter().copied().min_by_key(|&x| self.rank[x])
    }

    pub fn real_least(&self, xs: &[usize]) -> Option<usize> {
        xs.iter().copied().min()
    }
}

/// How `gen` chooses the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorMode {
    /// Uniform random permutation.
    Random,
    /// The reverse of the real order: the intersection is an antichain and
    /// the generated lattice is the full power set.
    Adversarial,
}

impl FromStr for GeneratorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorMode> {
        match s {
            "random" => Ok(GeneratorMode::Random),
            "adversarial" => Ok(GeneratorMode::Adversarial),
            other => Err(Error::Parse(format!("unknown generator mode `{other}`"))),
        }
    }
}

/// `n` integer points with an enumeration chosen by `mode`.
pub fn generate(n: usize, mode: GeneratorMode, seed: u64) -> Result<SierpinskiChain> {
    let well_order = match mode {
        GeneratorMode::Adversarial => (0..n).rev().collect(),
        GeneratorMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            crate::random::permutation(n, &mut rng)
        }
    };
    SierpinskiChain::with_integer_points(well_order)
}

/// `{ "points": [...], "wellOrder": [...] }` with points as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SierpinskiDocument {
    pub points: Vec<String>,
    pub well_order: Vec<usize>,
}

impl SierpinskiDocument {
    pub fn parse(text: &str) -> Result<SierpinskiDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_chain(&self) -> Result<SierpinskiChain> {
        let points = self
            .points
            .iter()
            .map(|s| Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("`{s}` is not a rational"))))
            .collect::<Result<Vec<_>>>()?;
        SierpinskiChain::new(points, self.well_order.clone())
    }

    pub fn of(sc: &SierpinskiChain) -> SierpinskiDocument {
        SierpinskiDocument {
            points: sc.points.iter().map(|p| p.to_string()).collect(),
            well_order: sc.well_order.clone(),
        }
    }
}

pub fn build_sierpinski(points: Vec<Rational>, well_order: Vec<usize>) -> Result<(SierpinskiChain, Poset)> {
    let sc = SierpinskiChain::new(points, well_order)?;
    let p = sc.poset();
    Ok((sc, p))
}

/// The sublattice of the power set generated by the principal ideals.
#[derive(Debug, Clone)]
pub struct GeneratedLattice {
    chain: SierpinskiChain,
    base: Poset,
    /// Sorted by cardinality, then by the sorted element list.
    members: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
}

/// Closure of `{↓x}` under binary union and intersection, computed to a
/// fixpoint with a worklist.
pub fn generate_lattice(sc: &SierpinskiChain, limits: &Limits) -> Result<GeneratedLattice> {
    if sc.len() > limits.sierpinski_bound {
        return Err(Error::BoundExceeded {
            what: "Sierpinski ground set",
            size: sc.len(),
            bound: limits.sierpinski_bound,
        });
    }
    let base = sc.poset();
    let mut seen = HashSet::new();
    let mut list = Vec::new();
    for x in 0..base.len() {
        let ideal = base.principal_ideal(x)?;
        if seen.insert(ideal.clone()) {
            list.push(ideal);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            for next in [list[i].union(&list[j]), list[i].intersection(&list[j])] {
                if !seen.contains(&next) {
                    if list.len() >= limits.max_lattice_members {
                        return Err(Error::BoundExceeded {
                            what: "generated lattice",
                            size: list.len() + 1,
                            bound: limits.max_lattice_members,
                        });
                    }
                    seen.insert(next.clone());
                    list.push(next);
                }
            }
        }
        i += 1;
    }
    let mut keyed: Vec<(usize, Vec<usize>, ElementSet)> =
        list.into_iter().map(|m| (m.len(), m.iter().collect(), m)).collect();
    keyed.sort();
    let members: Vec<ElementSet> = keyed.into_iter().map(|(_, _, m)| m).collect();
    let index = members.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(GeneratedLattice {
        chain: sc.clone(),
        base,
        members,
        index,
    })
}

/// Outcome of the two distributivity tests on a generated lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distributivity {
    /// Exhaustive `M3`/`N5` search (small lattices) or sampled triples.
    pub exhaustive: bool,
    pub forbidden: Option<Forbidden>,
    pub violation: Option<(usize, usize, usize)>,
}

impl Distributivity {
    pub fn holds(&self) -> bool {
        self.forbidden.is_none() && self.violation.is_none()
    }
}

/// Members up to this size are checked by exhaustive sublattice search.
pub const EXHAUSTIVE_DISTRIBUTIVITY: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct LatticeExport {
    pub members: Vec<Vec<String>>,
    /// Index pairs `(lower, upper)` of the cover relation.
    pub covers: Vec<(usize, usize)>,
}

impl GeneratedLattice {
    pub fn chain(&self) -> &SierpinskiChain {
        &self.chain
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// A member from point labels.
    pub fn member_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        ElementSet::from_labels(&self.base, labels)
    }

    /// `{1,2}` style label of member `i`.
    pub fn member_label(&self, i: usize) -> String {
        let items: Vec<&str> = self.members[i].iter().map(|x| self.base.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// The members ordered by inclusion.
    pub fn poset(&self) -> Poset {
        let labels = (0..self.len()).map(|i| self.member_label(i)).collect();
        Poset::from_relation(labels, |i, j| self.members[i].is_subset(&self.members[j]))
            .expect("inclusion is a partial order")
    }

    pub fn export(&self) -> LatticeExport {
        LatticeExport {
            members: self
                .members
                .iter()
                .map(|m| m.iter().map(|x| self.base.label(x).to_owned()).collect())
                .collect(),
            covers: self.poset().covers(),
        }
    }

    /// Exhaustive `M3`/`N5` search up to [`EXHAUSTIVE_DISTRIBUTIVITY`]
    /// members, otherwise the distributive law on `samples` seeded triples.
    pub fn distributivity(&self, samples: usize, seed: u64) -> Distributivity {
        let p = self.poset();
        if self.len() <= EXHAUSTIVE_DISTRIBUTIVITY {
            let t = JoinMeet::new(&p).expect("generated family is a lattice");
            return Distributivity {
                exhaustive: true,
                forbidden: t.forbidden_sublattice(),
                violation: t.distributive_violation(),
            };
        }
        use rand::RngExt;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.len();
        let join = |i, j| p.join(i, j).expect("generated family is a lattice");
        let meet = |i, j| p.meet(i, j).expect("generated family is a lattice");
        let violation = (0..samples)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)))
            .find(|&(x, y, z)| meet(x, join(y, z)) != join(meet(x, y), meet(x, z)));
        Distributivity {
            exhaustive: false,
            forbidden: None,
            violation,
        }
    }
}

/// `⋂ ↓x` over `xs`.
pub fn intersection_of_ideals(p: &Poset, xs: &[usize]) -> Result<ElementSet> {
    let mut out = ElementSet::full(p);
    for &x in xs {
        out = out.intersection(&p.principal_ideal(x)?);
    }
    Ok(out)
}

/// `(i, j)` with `i` the enumeration-least and `j` the real-least of `xs`;
/// `↓i ∩ ↓j` is then the whole intersection `⋂ ↓x`.
pub fn normalize_intersection(sc: &SierpinskiChain, xs: &[usize]) -> Result<(usize, usize)> {
    if xs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&x) = xs.iter().find(|&&x| x >= sc.len()) {
        return Err(Error::UnknownElement(x));
    }
    let i = sc.omega_least(xs).expect("non-empty");
    let j = sc.real_least(xs).expect("non-empty");
    Ok((i, j))
}

/// A shortest list of terms `↓x ∩ ↓y` with `x ≤ℝ y` and `y ≤ω x` whose
/// union is `member`. Among shortest lists the lexicographically least
/// (after sorting) is returned.
pub fn normal_form(gl: &GeneratedLattice, member: &ElementSet, limits: &Limits) -> Result<Vec<(usize, usize)>> {
    if !member.is_hosted_by(&gl.base) {
        return Err(Error::HostMismatch);
    }
    if gl.index_of(member).is_none() {
        return Err(Error::NotAMember);
    }
    let p = &gl.base;
    let sc = &gl.chain;
    let maximal: Vec<usize> = member.iter().filter(|&m| !member.iter().any(|y| p.lt(m, y))).collect();
    if maximal.is_empty() {
        return Ok(Vec::new());
    }
    let n = p.len();
    // terms as (pair, bitmask over `maximal` of the maxima they contain)
    let mut terms: Vec<((usize, usize), u64)> = Vec::new();
    for x in 0..n {
        for y in x..n {
            if !sc.omega_leq(y, x) {
                continue;
            }
            let t = p.principal_ideal(x)?.intersection(&p.principal_ideal(y)?);
            if t.is_empty() || !t.is_subset(member) {
                continue;
            }
            let covered = maximal
                .iter()
                .enumerate()
                .filter(|(_, &m)| t.contains(m))
                .fold(0u64, |acc, (k, _)| acc | 1 << k);
            if covered != 0 {
                terms.push(((x, y), covered));
            }
        }
    }
    let full = (1u64 << maximal.len()) - 1;
    let mut budget = Budget::new(limits.search_budget);
    for depth in 1..=maximal.len() {
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut chosen = Vec::with_capacity(depth);
        cover(&terms, full, 0, depth, &mut chosen, &mut best, &mut budget)?;
        if let Some(found) = best {
            return Ok(found);
        }
    }
    unreachable!("the degenerate terms (m, m) cover every maximal element")
}

fn cover(
    terms: &[((usize, usize), u64)],
    full: u64,
    covered: u64,
    depth: usize,
    chosen: &mut Vec<(usize, usize)>,
    best: &mut Option<Vec<(usize, usize)>>,
    budget: &mut Budget,
) -> Result<()> {
    if covered == full {
        let mut candidate = chosen.clone();
        candidate.sort();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            *best = Some(candidate);
        }
        return Ok(());
    }
    if chosen.len() == depth {
        return Ok(());
    }
    let first = (!covered & full).trailing_zeros();
    for &(pair, mask) in terms {
        if mask >> first & 1 == 0 {
            continue;
        }
        if !budget.tick() {
            return Err(Error::BudgetExceeded(budget.limit));
        }
        chosen.push(pair);
        cover(terms, full, covered | mask, depth, chosen, best, budget)?;
        chosen.pop();
    }
    Ok(())
}

/// `(bounded in L, bounded in the base)` for a family of members: some
/// member contains `⋃B`, and some single point lies above all of `⋃B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Boundedness {
    pub in_lattice: bool,
    pub in_base: bool,
}

pub fn boundedness_check(gl: &GeneratedLattice, family: &[ElementSet]) -> Result<Boundedness> {
    let p = &gl.base;
    let mut union = ElementSet::empty(p);
    for set in family {
        if !set.is_hosted_by(p) {
            return Err(Error::HostMismatch);
        }
        if gl.index_of(set).is_none() {
            return Err(Error::NotAMember);
        }
        union = union.union(set);
    }
    let in_lattice = gl.members.iter().any(|m| union.is_subset(m));
    let upper = p.upper_bounds(&union)?;
    Ok(Boundedness {
        in_lattice,
        in_base: !upper.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SierpinskiChain {
        // enumeration 2, 1, 3
        SierpinskiChain::with_integer_points(vec![1, 0, 2]).unwrap()
    }

    fn labels(gl: &GeneratedLattice) -> Vec<String> {
        (0..gl.len()).map(|i| gl.member_label(i)).collect()
    }

    #[test]
    fn construction_errors() {
        let r = |s: &str| Rational::from_str(s).unwrap();
        assert_eq!(
            SierpinskiChain::new(vec![r("1"), r("1/2")], vec![0, 1]).unwrap_err(),
            Error::NotStrictlyIncreasing(1)
        );
        assert_eq!(
            SierpinskiChain::new(vec![r("1"), r("2")], vec![0, 0]).unwrap_err(),
            Error::NotAPermutation(2)
        );
        assert_eq!(
            SierpinskiChain::new(vec![r("1")], vec![0, 1]).unwrap_err(),
            Error::NotAPermutation(1)
        );
    }

    #[test]
    fn intersection_posets() {
        let id = SierpinskiChain::with_integer_points(vec![0, 1, 2]).unwrap().poset();
        assert!(id.is_chain() && id.len() == 3);
        let p = example().poset();
        assert!(!p.comparable(0, 1));
        assert!(p.lt(0, 2) && p.lt(1, 2));
        let anti = SierpinskiChain::with_integer_points(vec![1, 0]).unwrap().poset();
        assert!(!anti.comparable(0, 1));
    }

    #[test]
    fn rational_points_and_documents() {
        let doc = SierpinskiDocument::parse(r#"{"points": ["-1/2", "0", "3/4"], "wellOrder": [2, 0, 1]}"#).unwrap();
        let sc = doc.to_chain().unwrap();
        assert_eq!(sc.poset().labels(), ["-1/2", "0", "3/4"]);
        assert_eq!(SierpinskiDocument::of(&sc), doc);
        assert!(matches!(
            SierpinskiDocument::parse(r#"{"points": ["x"], "wellOrder": [0]}"#)
                .unwrap()
                .to_chain(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn lattice_examples() {
        let limits = Limits::default();
        let gl = generate_lattice(&example(), &limits).unwrap();
        assert_eq!(labels(&gl), ["{}", "{1}", "{2}", "{1,2}", "{1,2,3}"]);

        let one = generate_lattice(&SierpinskiChain::with_integer_points(vec![0]).unwrap(), &limits).unwrap();
        assert_eq!(labels(&one), ["{1}"]);

        // principal ideals of a chain are nested, so no new sets appear
        let chain = generate_lattice(
            &SierpinskiChain::with_integer_points(vec![0, 1, 2, 3]).unwrap(),
            &limits,
        )
        .unwrap();
        assert_eq!(labels(&chain), ["{1}", "{1,2}", "{1,2,3}", "{1,2,3,4}"]);

        let dense = generate_lattice(&generate(5, GeneratorMode::Adversarial, 0).unwrap(), &limits).unwrap();
        assert_eq!(dense.len(), 32);
    }

    #[test]
    fn lattice_bounds() {
        let limits = Limits {
            max_lattice_members: 10,
            ..Limits::default()
        };
        let sc = generate(5, GeneratorMode::Adversarial, 0).unwrap();
        assert!(matches!(
            generate_lattice(&sc, &limits),
            Err(Error::BoundExceeded { .. })
        ));
        let sc = generate(13, GeneratorMode::Random, 0).unwrap();
        assert!(matches!(
            generate_lattice(&sc, &Limits::default()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    /// The closure agrees with the set of all finite unions of pairwise
    /// intersections of principal ideals, by brute force over subsets.
    #[test]
    fn closure_matches_union_of_terms() {
        for seed in 0..20 {
            let sc = generate(6, GeneratorMode::Random, seed).unwrap();
            let gl = generate_lattice(&sc, &Limits::default()).unwrap();
            let p = gl.base();
            let mut terms = Vec::new();
            for x in 0..6 {
                for y in 0..6 {
                    terms.push(
                        p.principal_ideal(x)
                            .unwrap()
                            .intersection(&p.principal_ideal(y).unwrap()),
                    );
                }
            }
            let mut oracle = HashSet::new();
            let distinct: Vec<ElementSet> = terms.into_iter().collect::<HashSet<_>>().into_iter().collect();
            let k = distinct.len();
            assert!(k <= 20, "too many distinct terms for the oracle");
            for choice in 1u64..(1 << k) {
                let mut u = ElementSet::empty(p);
                for (t, set) in distinct.iter().enumerate() {
                    if choice >> t & 1 == 1 {
                        u = u.union(set);
                    }
                }
                oracle.insert(u);
            }
            let got: HashSet<ElementSet> = gl.members().iter().cloned().collect();
            assert_eq!(got, oracle, "seed {seed}");
        }
    }

    #[test]
    fn normalize_examples() {
        let sc = example();
        // points 3 and 1 are indices 2 and 0
        assert_eq!(normalize_intersection(&sc, &[2, 0]).unwrap(), (0, 0));
        assert_eq!(normalize_intersection(&sc, &[1]).unwrap(), (1, 1));
        assert_eq!(normalize_intersection(&sc, &[0, 1, 2]).unwrap(), (1, 0));
        assert_eq!(normalize_intersection(&sc, &[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn normal_form_examples() {
        let limits = Limits::default();
        let gl = generate_lattice(&example(), &limits).unwrap();
        let m = gl.member_from_labels(&["1", "2"]).unwrap();
        assert_eq!(normal_form(&gl, &m, &limits).unwrap(), [(0, 0), (1, 1)]);
        let empty = gl.member_from_labels::<&str>(&[]).unwrap();
        assert!(normal_form(&gl, &empty, &limits).unwrap().is_empty());
        for x in 0..3 {
            let ideal = gl.base().principal_ideal(x).unwrap();
            assert_eq!(normal_form(&gl, &ideal, &limits).unwrap(), [(x, x)]);
        }
        let stranger = gl.member_from_labels(&["3"]).unwrap();
        assert_eq!(normal_form(&gl, &stranger, &limits).unwrap_err(), Error::NotAMember);
    }

    /// A single non-degenerate term beats two principal ideals.
    #[test]
    fn normal_form_uses_mixed_terms() {
        let limits = Limits::default();
        // enumeration 2, 1, 4, 3: ↓3 ∩ ↓4 = {1,2} with 1, 2 incomparable
        let gl = generate_lattice(
            &SierpinskiChain::with_integer_points(vec![1, 0, 3, 2]).unwrap(),
            &limits,
        )
        .unwrap();
        let m = gl.member_from_labels(&["1", "2"]).unwrap();
        assert_eq!(normal_form(&gl, &m, &limits).unwrap(), [(2, 3)]);
    }

    #[test]
    fn normal_forms_reconstruct_members() {
        let limits = Limits::default();
        for seed in 0..30 {
            let sc = generate(6, GeneratorMode::Random, seed).unwrap();
            let gl = generate_lattice(&sc, &limits).unwrap();
            for m in gl.members() {
                let nf = normal_form(&gl, m, &limits).unwrap();
                let mut u = ElementSet::empty(gl.base());
                for &(x, y) in &nf {
                    assert!(sc.real_leq(x, y) && sc.omega_leq(y, x));
                    u = u.union(&intersection_of_ideals(gl.base(), &[x, y]).unwrap());
                }
                assert_eq!(&u, m);
            }
        }
    }

    #[test]
    fn boundedness_examples() {
        let limits = Limits::default();
        let ideal = |gl: &GeneratedLattice, x| gl.base().principal_ideal(x).unwrap();
        let gl = generate_lattice(&example(), &limits).unwrap();
        let b = boundedness_check(&gl, &[ideal(&gl, 0), ideal(&gl, 1)]).unwrap();
        assert_eq!((b.in_lattice, b.in_base), (true, true));
        assert_eq!(
            boundedness_check(&gl, &[]).unwrap(),
            Boundedness {
                in_lattice: true,
                in_base: true
            }
        );
        let anti = generate_lattice(&SierpinskiChain::with_integer_points(vec![1, 0]).unwrap(), &limits).unwrap();
        let b = boundedness_check(&anti, &[ideal(&anti, 0), ideal(&anti, 1)]).unwrap();
        assert_eq!((b.in_lattice, b.in_base), (true, false));
    }

    #[test]
    fn realizer_and_gap_freedom() {
        let limits = Limits::default();
        for seed in 0..10 {
            let sc = generate(5, GeneratorMode::Random, seed).unwrap();
            assert!(sc.is_realizer_of(&sc.poset()));
            let gl = generate_lattice(&sc, &limits).unwrap();
            let lp = gl.poset();
            if lp.len() <= 12 {
                assert!(crate::gaps::enumerate_gaps(&lp, &limits).unwrap().is_empty());
            }
            assert!(gl.distributivity(200, seed).holds());
        }
    }

    #[test]
    fn export_covers() {
        let gl = generate_lattice(&example(), &Limits::default()).unwrap();
        let e = gl.export();
        assert_eq!(e.members[3], ["1", "2"]);
        assert_eq!(e.covers.len(), 5);
    }
}
