//! Sequential or data-parallel execution of independent work items.
//!
//! With the `parallel` feature (default) the parallel strategy runs on the
//! rayon pool; without it every strategy degrades to a plain loop. Results are
//! always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// First item (in input order) satisfying `pred`.
    pub fn find_first<T, F>(self, items: &[T], pred: F) -> Option<T>
    where
        T: Sync + Send + Copy,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().copied().find_first(|x| pred(x)),
            _ => items.iter().copied().find(|x| pred(x)),
        }
    }
}
