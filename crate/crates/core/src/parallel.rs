//! Deterministic fan-out over source nodes.
//!
//! Sources are split into a fixed number of contiguous chunks that does not
//! depend on the thread count. Each chunk folds its sources sequentially and
//! the chunk results are merged left to right, so floating-point sums are
//! identical whether the pool has one worker or many.

use rayon::prelude::*;

const CHUNKS: usize = 64;

/// Configures the global pool from `CZOO_THREADS` if set. Safe to call repeatedly.
pub fn init_from_env() {
    if let Some(n) = std::env::var("CZOO_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Splits `0..n` into at most `CHUNKS` contiguous ranges.
fn ranges(n: usize) -> Vec<std::ops::Range<usize>> {
    let chunks = CHUNKS.min(n.max(1));
    let size = n.div_ceil(chunks).max(1);
    (0..n).step_by(size).map(|s| s..(s + size).min(n)).collect()
}

/// For each chunk, builds a scratch state with `init`, then calls `visit` for
/// every source in order; the per-chunk accumulators (length `len`) are
/// summed in chunk order.
pub fn sum_over_sources<S, I, F>(n: usize, len: usize, init: I, visit: F) -> Vec<f64>
where
    I: Fn() -> S + Sync,
    F: Fn(&mut S, usize, &mut [f64]) + Sync,
{
    let parts: Vec<Vec<f64>> = ranges(n)
        .into_par_iter()
        .map(|r| {
            let mut state = init();
            let mut acc = vec![0.0; len];
            for s in r {
                visit(&mut state, s, &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; len];
    for p in parts {
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    total
}

/// Maps every index in `0..n` through `f` with chunk-local scratch state,
/// preserving order.
pub fn map_nodes<S, T, I, F>(n: usize, init: I, f: F) -> Vec<T>
where
    T: Send,
    I: Fn() -> S + Sync,
    F: Fn(&mut S, usize) -> T + Sync,
{
    ranges(n)
        .into_par_iter()
        .flat_map_iter(|r| {
            let mut state = init();
            r.map(|i| f(&mut state, i)).collect::<Vec<_>>()
        })
        .collect()
}
