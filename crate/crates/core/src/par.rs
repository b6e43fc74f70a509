//! Execution strategy for the embarrassingly parallel sweeps.
//!
//! With the `parallel` feature (default) `Strategy::Parallel` runs on the
//! rayon global pool; without it every strategy runs sequentially. Results
//! are always returned in input order, so output never depends on the
//! strategy or on the number of worker threads.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this strategy will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Maps `f` over an index range, preserving order.
pub fn map_range<U, F>(strategy: Strategy, range: Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = strategy;
    range.map(f).collect()
}

/// Keeps the `Some` results of `f` over an index range, preserving order.
pub fn filter_map_range<U, F>(strategy: Strategy, range: Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().filter_map(f).collect();
    }
    let _ = strategy;
    range.filter_map(f).collect()
}

/// The first index (lowest) for which `f` returns `Some`.
pub fn find_first_range<U, F>(strategy: Strategy, range: Range<usize>, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().filter_map(f).find_first(|_| true);
    }
    let _ = strategy;
    range.into_iter().find_map(f)
}

/// Whether every item satisfies `pred`.
pub fn all<T, F>(strategy: Strategy, items: &[T], pred: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().all(pred);
    }
    let _ = strategy;
    items.iter().all(pred)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(Strategy::Sequential, &items, |x| x * x);
        let par = map(Strategy::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        let f = |i: usize| (i % 7 == 3).then_some(i);
        assert_eq!(filter_map_range(Strategy::Sequential, 0..500, f), filter_map_range(Strategy::Parallel, 0..500, f));
        assert_eq!(find_first_range(Strategy::Parallel, 0..500, f), Some(3));
        assert_eq!(find_first_range(Strategy::Sequential, 0..2, f), None);
    }
}
