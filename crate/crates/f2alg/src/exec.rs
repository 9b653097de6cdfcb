//! Switchable sequential/parallel execution for grid sweeps.
//!
//! The heavy operations in this crate are embarrassingly parallel sweeps over
//! parameter grids (one dual-class expansion per `(d, m)`, one bound
//! comparison per `(d, k, l)`, ...). [`map_collect`] runs such a sweep either
//! sequentially or on the rayon thread pool; results come back in input
//! order, so output is identical — byte for byte — in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep should run. `Parallel` is only available with the `parallel`
/// feature; [`ExecMode::default`] picks it when compiled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

/// Applies `f` to every item, preserving input order in the output.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items.into_par_iter().map(f).collect(),
    }
}

/// `map_collect` for fallible sweeps; the first error (in input order) wins.
pub fn try_map_collect<T, U, F>(
    mode: ExecMode,
    items: Vec<T>,
    f: F,
) -> crate::Result<Vec<U>>
where
    T: Send,
    U: Send,
    F: Fn(T) -> crate::Result<U> + Sync + Send,
{
    let results = map_collect(mode, items, f);
    results.into_iter().collect()
}
