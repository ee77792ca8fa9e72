//! Batch evaluation over independent inputs.
//!
//! With the `parallel` feature (on by default) batches run on the rayon
//! thread pool; without it, or with [`Parallelism::Sequential`], they run on
//! the calling thread. Output order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// Whether batches will actually be spread over threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

pub fn map<T, R, F>(items: &[T], mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Keeps the items for which `f` holds, in input order.
pub fn filter<T, F>(items: Vec<T>, mode: Parallelism, f: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    let keep = map(&items, mode, |t| f(t));
    items
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect()
}
