//! Order-preserving maps and the finite deciders built on them.
//!
//! Backtracking searches split at their first decision. Each root branch is
//! searched on its own and the branches are then combined in root order, so
//! the certificate returned (and whether the budget ran out) is the one a
//! plain sequential search would have produced.

mod chain_gap;
mod monotone;
mod retract;
mod selection;

pub use chain_gap::{check_up_directed, has_chain_gap_property, ChainGapReport, GapPreservation, UpDirected};
pub use monotone::{check_monotone, preserves_gap, MonotoneMap};
pub use retract::{is_retract_of, RetractCertificate, RetractOutcome};
pub use selection::{has_selection_property, join_selector, SelectionOutcome, SelectorCertificate};

use serde::Serialize;

use crate::config::Execution;
use crate::error::{Error, Result};
use crate::exec;

/// Proof-of-exhaustion marker: the search space was covered without finding a
/// certificate. Only meaningful within the bounds that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Exhaustion {
    pub nodes: u64,
}

pub(crate) enum Branch<T> {
    Found(T, u64),
    Exhausted(u64),
    OverBudget,
}

/// Node counter for one search branch.
pub(crate) struct Budget {
    pub(crate) used: u64,
    pub(crate) limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Budget {
        Budget { used: 0, limit }
    }

    /// Counts one node; false once the limit is passed.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

/// Runs `branch(root, budget)` for each root and keeps the first success in
/// root order, charging all earlier branches against the shared budget.
pub(crate) fn race_roots<T, F>(exec: Execution, roots: usize, budget: u64, branch: F) -> Result<(Option<T>, u64)>
where
    T: Send,
    F: Fn(usize, u64) -> Branch<T> + Sync + Send,
{
    let mut used = 0u64;
    let results: Vec<Branch<T>> = match exec {
        Execution::Sequential => {
            let mut out = Vec::new();
            for r in 0..roots {
                let b = branch(r, budget - used);
                let stop = match &b {
                    Branch::Found(..) | Branch::OverBudget => true,
                    Branch::Exhausted(n) => {
                        used += n;
                        false
                    }
                };
                out.push(b);
                if stop {
                    break;
                }
            }
            used = 0;
            out
        }
        #[allow(unreachable_patterns)]
        _ => exec::map_range(exec, 0..roots as u64, |r| branch(r as usize, budget)),
    };
    for b in results {
        match b {
            Branch::Found(t, n) => {
                used += n;
                if used > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                return Ok((Some(t), used));
            }
            Branch::Exhausted(n) => {
                used += n;
                if used > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
            }
            Branch::OverBudget => return Err(Error::BudgetExceeded(budget)),
        }
    }
    Ok((None, used))
}
