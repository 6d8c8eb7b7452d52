//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they are plain iterators. Results keep input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential versions, always available so benches can compare both paths.
pub mod seq {
    pub fn map<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
        items.iter().map(f).collect()
    }

    pub fn map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
        (0..n).map(f).collect()
    }
}
