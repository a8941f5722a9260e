use serde::Serialize;

use super::{check_monotone, Budget, MonotoneMap};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exec;
use crate::gaps::{
    enumerate_gaps, irreducible_subgaps, is_irreducible_gap, is_minimal_gap, regular_pair, Masks, Pregap,
};
use crate::poset::Poset;

/// What the chain search found for one gap.
#[derive(Debug, Clone)]
pub struct GapPreservation {
    pub gap: Pregap,
    /// A chain size and a map into that chain preserving the gap.
    pub preserved_by: Option<(usize, MonotoneMap)>,
    pub maps_examined: u64,
    pub minimal: bool,
    pub irreducible: bool,
    /// Some subgap is irreducible and regular under the active convention.
    pub contains_regular_irreducible: bool,
    pub regularity_warning: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ChainGapReport {
    pub holds: bool,
    pub gaps: Vec<GapPreservation>,
}

/// Order-preserving maps `P -> chain(k)`, each as a value vector, visited in
/// lexicographic order. `visit` returns true to stop.
fn for_each_map_into_chain(
    p: &Poset,
    k: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<bool> {
    fn go(
        p: &Poset,
        k: usize,
        values: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Option<bool> {
        let x = values.len();
        if x == p.len() {
            return Some(visit(values));
        }
        let lo = (0..x).filter(|&y| p.leq(y, x)).map(|y| values[y]).max().unwrap_or(0);
        let hi = (0..x)
            .filter(|&y| p.leq(x, y))
            .map(|y| values[y])
            .min()
            .unwrap_or(k - 1);
        for v in lo..=hi {
            if !budget.tick() {
                return None;
            }
            values.push(v);
            if go(p, k, values, budget, visit)? {
                return Some(true);
            }
            values.pop();
        }
        Some(false)
    }
    go(p, k, &mut Vec::with_capacity(p.len()), budget, visit)
}

fn search_gap(p: &Poset, gap: &Pregap, limits: &Limits) -> (Option<(usize, Vec<usize>)>, u64, bool) {
    let a = gap.a().mask().expect("small host");
    let b = gap.b().mask().expect("small host");
    let mut budget = Budget::new(limits.search_budget);
    for k in 1..=p.len() {
        let chain = Poset::chain(k).expect("k >= 1");
        let cm = Masks::new(&chain).expect("small chain");
        let mut found = None;
        let image = |set: u64, values: &[usize]| {
            (0..p.len())
                .filter(|&i| set >> i & 1 == 1)
                .fold(0u64, |m, i| m | 1 << values[i])
        };
        let outcome = for_each_map_into_chain(p, k, &mut budget, &mut |values| {
            let (ia, ib) = (image(a, values), image(b, values));
            if cm.upper(ia) & cm.lower(ib) == 0 {
                found = Some(values.to_vec());
                true
            } else {
                false
            }
        });
        match outcome {
            None => return (None, budget.used, true),
            Some(true) => return (found.map(|v| (k, v)), budget.used, false),
            Some(false) => {}
        }
    }
    (None, budget.used, false)
}

/// Decides the chain-gap property by searching, for every gap, all chains of
/// size at most `|P|` and all order-preserving maps into them.
pub fn has_chain_gap_property(p: &Poset, limits: &Limits) -> Result<ChainGapReport> {
    let gaps = enumerate_gaps(p, limits)?;
    let searched = exec::map_slice(limits.execution, &gaps, |g| search_gap(p, g, limits));
    let mut total = 0u64;
    let mut out = Vec::with_capacity(gaps.len());
    for (gap, (found, used, over)) in gaps.into_iter().zip(searched) {
        total = total.saturating_add(used);
        if over || total > limits.search_budget {
            return Err(Error::BudgetExceeded(limits.search_budget));
        }
        let preserved_by = match found {
            Some((k, values)) => Some((k, check_monotone(p, &Poset::chain(k)?, values)?)),
            None => None,
        };
        let irreducible_parts = irreducible_subgaps(p, &gap, limits)?;
        let regularity: Vec<_> = irreducible_parts
            .iter()
            .map(|s| regular_pair(s.cardinality(), limits.regularity))
            .collect();
        out.push(GapPreservation {
            minimal: is_minimal_gap(p, &gap, limits)?,
            irreducible: is_irreducible_gap(p, &gap, limits)?,
            contains_regular_irreducible: regularity.iter().any(|r| r.regular),
            regularity_warning: regularity.into_iter().find_map(|r| r.warning),
            gap,
            preserved_by,
            maps_examined: used,
        });
    }
    Ok(ChainGapReport {
        holds: out.iter().all(|g| g.preserved_by.is_some()),
        gaps: out,
    })
}

/// Failure witness for up-directedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpDirected {
    pub holds: bool,
    /// Least pair without a common upper bound.
    pub witness: Option<(usize, usize)>,
}

pub fn check_up_directed(p: &Poset) -> UpDirected {
    let n = p.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.up_row(i).is_disjoint(p.up_row(j)) {
                return UpDirected {
                    holds: false,
                    witness: Some((i, j)),
                };
            }
        }
    }
    UpDirected {
        holds: true,
        witness: None,
    }
}
