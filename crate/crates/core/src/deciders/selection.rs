use serde_json::{Map, Value};

use super::{check_monotone, race_roots, Branch, Budget, Exhaustion, MonotoneMap};
use crate::config::Limits;
use crate::error::Result;
use crate::gaps::{build_bp, Masks, SeparableQuotient};
use crate::poset::Poset;

/// An order-preserving choice of separator for every class of `B(P)`.
#[derive(Debug, Clone)]
pub struct SelectorCertificate {
    pub bp: SeparableQuotient,
    pub phi: MonotoneMap,
}

impl SelectorCertificate {
    /// Every class is sent into its own `A* ∩ B_*`, and `phi` is monotone.
    pub fn verify(&self, p: &Poset) -> bool {
        let monotone = check_monotone(&self.bp.poset, p, self.phi.image().to_vec()).is_ok();
        monotone
            && self
                .bp
                .classes
                .iter()
                .enumerate()
                .all(|(c, class)| class.separators.contains(self.phi.apply(c)))
    }

    /// Class representatives mapped to element labels.
    pub fn to_json(&self, p: &Poset) -> Value {
        let mut map = Map::new();
        for (c, class) in self.bp.classes.iter().enumerate() {
            map.insert(
                class.representative.display(p),
                Value::String(p.label(self.phi.apply(c)).to_owned()),
            );
        }
        Value::Object(map)
    }
}

#[derive(Debug, Clone)]
pub enum SelectionOutcome {
    Selector(SelectorCertificate),
    Refuted { classes: usize, exhaustion: Exhaustion },
}

/// The selector sending each class to the join of its `A`; defined exactly
/// when every `A` has a least upper bound.
pub fn join_selector(p: &Poset, bp: &SeparableQuotient) -> Option<SelectorCertificate> {
    let image = bp
        .classes
        .iter()
        .map(|c| p.join_of(c.representative.a()).ok().flatten())
        .collect::<Option<Vec<usize>>>()?;
    let phi = check_monotone(&bp.poset, p, image).ok()?;
    Some(SelectorCertificate { bp: bp.clone(), phi })
}

struct Search<'a> {
    masks: Masks<'a>,
    /// Classes in assignment order (a linear extension of `B(P)`).
    order: Vec<usize>,
    /// Strict successors of each class in `B(P)`.
    above: Vec<Vec<usize>>,
    domains: Vec<u64>,
}

impl Search<'_> {
    fn run(
        &self,
        pos: usize,
        domains: &mut Vec<u64>,
        assigned: &mut Vec<usize>,
        trail: &mut Vec<(usize, u64)>,
        budget: &mut Budget,
    ) -> Option<bool> {
        let Some(&class) = self.order.get(pos) else {
            return Some(true);
        };
        let mut candidates = domains[class];
        while candidates != 0 {
            let x = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if !budget.tick() {
                return None;
            }
            let mark = trail.len();
            let up = self.masks.up(x);
            let mut wiped = false;
            for &s in &self.above[class] {
                let narrowed = domains[s] & up;
                if narrowed != domains[s] {
                    trail.push((s, domains[s]));
                    domains[s] = narrowed;
                }
                if narrowed == 0 {
                    wiped = true;
                    break;
                }
            }
            if !wiped {
                assigned[class] = x;
                if self.run(pos + 1, domains, assigned, trail, budget)? {
                    return Some(true);
                }
            }
            while trail.len() > mark {
                let (s, old) = trail.pop().unwrap();
                domains[s] = old;
            }
        }
        Some(false)
    }
}

/// Backtracking search for a selector, classes visited in a linear
/// extension of `B(P)` with forward checking against their successors.
pub fn has_selection_property(p: &Poset, limits: &Limits) -> Result<SelectionOutcome> {
    let bp = build_bp(p, limits)?;
    let masks = Masks::new(p)?;
    let n = bp.classes.len();
    let domains: Vec<u64> = bp
        .classes
        .iter()
        .map(|c| c.separators.mask().expect("hosts are small"))
        .collect();
    let above: Vec<Vec<usize>> = (0..n)
        .map(|c| bp.poset.up_row(c).ones().filter(|&s| s != c).collect())
        .collect();
    let search = Search {
        masks,
        order: bp.poset.linear_extension(),
        above,
        domains,
    };
    let first = search.order[0];
    let roots: Vec<usize> = ones(search.domains[first]).collect();
    let (found, nodes) = race_roots(limits.execution, roots.len(), limits.search_budget, |r, limit| {
        let mut budget = Budget::new(limit);
        let mut domains = search.domains.clone();
        domains[first] = 1 << roots[r];
        let mut assigned = vec![usize::MAX; n];
        let mut trail = Vec::new();
        match search.run(0, &mut domains, &mut assigned, &mut trail, &mut budget) {
            None => Branch::OverBudget,
            Some(true) => Branch::Found(assigned, budget.used),
            Some(false) => Branch::Exhausted(budget.used),
        }
    })?;
    Ok(match found {
        Some(image) => {
            let phi = check_monotone(&bp.poset, p, image)?;
            SelectionOutcome::Selector(SelectorCertificate { bp, phi })
        }
        None => SelectionOutcome::Refuted {
            classes: n,
            exhaustion: Exhaustion { nodes },
        },
    })
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}
