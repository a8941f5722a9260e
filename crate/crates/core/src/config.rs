//! Bounds, budgets and execution mode shared by every exhaustive routine.

use serde::{Deserialize, Serialize};

/// How the finite regularity notion is read for finite cardinals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularityConvention {
    /// Every positive finite cardinal counts as regular.
    #[default]
    AllFinite,
    /// Only infinite regular cardinals count, so every finite pair is
    /// reported as not regular together with a warning.
    InfiniteOnly,
}

/// Whether data-parallel loops run on the rayon pool or on the calling thread.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset on which powerset-sized enumerations are attempted.
    pub exhaustive_bound: usize,
    /// Node budget for every backtracking search.
    pub search_budget: u64,
    /// Cap on `n * n` relation cells for constructed posets.
    pub max_relation_cells: usize,
    /// Largest Sierpinski chain accepted by the lattice generator.
    pub sierpinski_bound: usize,
    /// Cap on the number of members of a generated lattice.
    pub max_lattice_members: usize,
    pub regularity: RegularityConvention,
    pub execution: Execution,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_bound: 12,
            search_budget: 50_000_000,
            max_relation_cells: 1 << 20,
            sierpinski_bound: 12,
            max_lattice_members: 1 << 16,
            regularity: RegularityConvention::default(),
            execution: Execution::default(),
        }
    }
}

impl Limits {
    pub fn sequential(mut self) -> Self {
        self.execution = Execution::Sequential;
        self
    }
}
