//! Order-preserving data-parallel helpers. Results always come back in input
//! order, so callers see the same output whichever [`Execution`] is active.

use std::ops::Range;

use crate::config::Execution;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
    }
}

pub fn map_range<R, F>(exec: Execution, range: Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => range.map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(f).collect(),
    }
}

/// Like [`map_range`] but concatenates the per-index vectors.
pub fn flat_map_range<R, F>(exec: Execution, range: Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Vec<R> + Sync + Send,
{
    map_range(exec, range, f).into_iter().flatten().collect()
}

/// Caps the global rayon pool. Only the first call in a process has an effect.
#[cfg(feature = "parallel")]
pub fn init_threads(threads: usize) {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn init_threads(_threads: usize) {}
