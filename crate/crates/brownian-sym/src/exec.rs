//! Execution helpers shared by the data-parallel inner loops.
//!
//! Every helper here produces the same bits with and without the `parallel`
//! feature: work is split at fixed boundaries that do not depend on the
//! number of threads, each piece is computed independently, and results are
//! assembled by index (or folded in index order for reductions).

/// Fixed chunk width used for deterministic reductions.
pub(crate) const REDUCE_CHUNK: usize = 4096;

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Like [`map_indices`] for cheap per-element work: runs sequentially below
/// `grain` elements and caps rayon's split depth above it, since task
/// dispatch otherwise dwarfs a few-flop loop body. Values are identical on
/// every path.
#[cfg(feature = "parallel")]
pub(crate) fn map_indices_grained<T, F>(n: usize, grain: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    if n <= grain {
        (0..n).map(f).collect()
    } else {
        (0..n).into_par_iter().with_min_len(grain).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices_grained<T, F>(n: usize, _grain: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// First index (in increasing order) for which `f` returns `Some`.
#[cfg(feature = "parallel")]
pub(crate) fn find_first_index<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first_index<T, F>(n: usize, f: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).find_map(f)
}

/// Dot product with a thread-count-independent summation order: partial sums
/// over fixed 4096-wide chunks, folded left to right. Small vectors skip the
/// thread pool; the chunked fold keeps the bits identical either way.
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let chunks = a.len().div_ceil(REDUCE_CHUNK).max(1);
    let partial = |c: usize| {
        let lo = c * REDUCE_CHUNK;
        let hi = (lo + REDUCE_CHUNK).min(a.len());
        let mut s = 0.0;
        for k in lo..hi {
            s += a[k] * b[k];
        }
        s
    };
    if a.len() <= 65_536 {
        return (0..chunks).map(partial).sum();
    }
    map_indices(chunks, partial).iter().sum()
}

/// Runs `f` inside a thread pool with `workers` threads (`0` keeps the
/// ambient pool). Without the `parallel` feature this just calls `f`.
#[cfg(feature = "parallel")]
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    if workers == 0 {
        f()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("failed to build thread pool");
        pool.install(f)
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R, F>(_workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    f()
}
