//! Execution strategy for the all-pairs loops.
//!
//! Every parallel code path reduces exact values, so the result never depends
//! on how work is split. Without the `parallel` feature, [`Strategy::Parallel`]
//! silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Whether this strategy actually fans out to worker threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// `(0..n).map(f).collect()`, in index order regardless of strategy.
pub(crate) fn map_indices<T, F>(strategy: Strategy, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..n).map(f).collect()
}

/// Fold `0..n` into per-worker accumulators and merge them.
///
/// `merge` must be associative and commutative for the result to be
/// independent of the split.
pub(crate) fn fold_indices<A, I, F, M>(strategy: Strategy, n: usize, identity: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, usize) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        return (0..n).into_par_iter().fold(&identity, &fold).reduce(&identity, &merge);
    }
    let _ = (strategy, &merge);
    (0..n).fold(identity(), fold)
}
