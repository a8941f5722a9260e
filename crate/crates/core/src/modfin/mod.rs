//! Mod-finite separation on finitely presented infinite objects: eventually
//! periodic subsets of `ω` under `≤Fin`, and eventually periodic branches of
//! the binary tree `T₂` with an algebra of node sets.

mod set;
mod tree;
mod word;

pub use set::{audit_separator, eq_fin, hadamard_separator, leq_fin, AuditRow, FinOrder, PeriodicSet, Separation};
pub use tree::{
    audit_fsigma, check_operator, divergence_depth, fsigma_separator, fsigma_separator_sets, luzin_pair, node_label,
    Branch, FsigmaAuditRow, FsigmaSeparation, Node, NodeCoding, NodeSet, Strand,
};
pub use word::Word;
