//! Sequential / parallel dispatch for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) the loops run on the rayon
//! global pool; without it only [`Execution::Sequential`] exists.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `Default` is `Parallel` when the feature is on, `Sequential` otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    pub(crate) fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    pub(crate) fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().flat_map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().flat_map_iter(f).collect(),
        }
    }

    pub(crate) fn filter<T, F>(self, items: &[T], keep: F) -> Vec<T>
    where
        T: Sync + Send + Clone,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().filter(|x| keep(x)).cloned().collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().filter(|x| keep(x)).cloned().collect(),
        }
    }

    pub(crate) fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        match self {
            Execution::Sequential => (a(), b()),
            #[cfg(feature = "parallel")]
            Execution::Parallel => rayon::join(a, b),
        }
    }
}
