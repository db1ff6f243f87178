//! Thread-pool configuration.
//!
//! MHFORGE_THREADS caps the worker count for the exhaustive scans; unset or
//! invalid values fall back to the machine's available parallelism. All
//! parallel reductions in the library are order-insensitive or pick the
//! canonically first witness, so results never depend on the thread count.

use once_cell::sync::Lazy;
use rayon::ThreadPool;

pub static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let threads = std::env::var("MHFORGE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool construction")
});
