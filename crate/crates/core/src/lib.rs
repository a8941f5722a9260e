//! Finite order theory around gaps and retracts: pregaps and gaps of finite
//! posets, the selection and chain-gap deciders, lattices generated by
//! intersections of two linear orders, and separators for eventually periodic
//! subsets of `ω` and branches of the binary tree.

pub mod catalogue;
pub mod config;
pub mod deciders;
pub mod error;
pub mod exec;
pub mod gaps;
pub mod io;
pub mod lattice;
pub mod modfin;
pub mod poset;
pub mod random;
pub mod sierpinski;

pub use config::{Execution, Limits, RegularityConvention};
pub use error::{Error, Result};
pub use gaps::{PairClass, Pregap};
pub use poset::{ElementSet, LatticeCheck, Poset};
