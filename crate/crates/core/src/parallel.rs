//! Thin switch between rayon and sequential iteration.
//!
//! All helpers preserve input order in their results, and the `find_*`
//! helpers return the match with the lowest index, so reports do not depend
//! on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `items.iter().map(f).collect()`, in parallel when enabled.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
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

/// First `Some` result in index order.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// First `Some` result over `0..len` in index order.
pub fn find_map_first_index<R, F>(len: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).find_map(f)
    }
}

/// `(0..len).flat_map(f)` with per-index results concatenated in order.
pub fn flat_map_index<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let chunks: Vec<Vec<R>> = (0..len).into_par_iter().map(f).collect();
        chunks.into_iter().flatten().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).flat_map(f).collect()
    }
}

/// True when `pred` holds for every index in `0..len`.
pub fn all_index<F>(len: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().all(pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).all(pred)
    }
}

/// Whether this build runs scans on rayon.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
