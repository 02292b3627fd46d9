//! Shared worker pool for shot-batch parallelism.
//!
//! The pool size defaults to the number of logical CPUs and can be capped
//! with the `QUSQUARE_THREADS` environment variable. Results never depend on
//! the worker count because every batch owns an independently derived RNG
//! stream (see [`crate::rng`]).

use once_cell::sync::Lazy;
use rayon::{ThreadPool, ThreadPoolBuilder};

static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let mut builder = ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("QUSQUARE_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k >= 1 {
                builder = builder.num_threads(k);
            }
        }
    }
    builder.build().expect("worker pool")
});

/// The process-wide worker pool.
pub fn pool() -> &'static ThreadPool {
    &POOL
}

/// Split `total` shots into fixed-size batches `(batch_index, batch_len)`.
/// The fixed size keeps the batch boundaries, and hence the RNG streams,
/// identical no matter how many workers execute them.
pub fn shot_batches(total: u64, batch_size: u64) -> Vec<(u64, u64)> {
    assert!(batch_size > 0);
    let mut out = Vec::new();
    let mut done = 0;
    let mut index = 0;
    while done < total {
        let len = batch_size.min(total - done);
        out.push((index, len));
        done += len;
        index += 1;
    }
    out
}
