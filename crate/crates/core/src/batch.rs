//! Batch evaluation over slices of inputs.
//!
//! With the `parallel` feature (default) work is spread over the rayon
//! thread pool; without it everything runs on the calling thread. Output
//! order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::chen::{solve_with, SolveOptions};
use crate::error::Result;
use crate::reduction::GeneralCubic;
use crate::roots::RootTriple;

#[cfg(feature = "parallel")]
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

pub fn solve_batch_sequential(cubics: &[GeneralCubic], opts: &SolveOptions) -> Vec<Result<RootTriple>> {
    cubics.iter().map(|c| solve_with(c, opts)).collect()
}

#[cfg(feature = "parallel")]
pub fn solve_batch_parallel(cubics: &[GeneralCubic], opts: &SolveOptions) -> Vec<Result<RootTriple>> {
    cubics.par_iter().map(|c| solve_with(c, opts)).collect()
}

/// Solves every cubic, in parallel when the `parallel` feature is enabled.
pub fn solve_batch(cubics: &[GeneralCubic], opts: &SolveOptions) -> Vec<Result<RootTriple>> {
    par_map(cubics, |c| solve_with(c, opts))
}
