//! Thin switch between rayon and sequential execution.
//!
//! Every helper here has a result that does not depend on scheduling, so the
//! two builds agree bit for bit.

use alloc::vec::Vec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..len).map(f).collect()`
#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn sort_unstable<T: Ord + Send>(items: &mut [T]) {
    items.par_sort_unstable();
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sort_unstable<T: Ord>(items: &mut [T]) {
    items.sort_unstable();
}

/// Calls `f(i)` for every `i < len`.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_index<F>(len: usize, f: F)
where
    F: Fn(usize) + Sync + Send,
{
    (0..len).into_par_iter().for_each(f);
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_index<F>(len: usize, f: F)
where
    F: Fn(usize),
{
    (0..len).for_each(f);
}

/// Exclusive prefix sum of `flags`; returns the offsets and the total.
pub(crate) fn exclusive_scan(flags: &[bool]) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(flags.len());
    let mut total = 0;
    for &flag in flags {
        offsets.push(total);
        total += usize::from(flag);
    }
    (offsets, total)
}
