//! Worker-count control for the parallel enumerations.

use crate::{Error, Result};

/// Environment variable read by [`threads_from_env`].
pub const THREADS_ENV: &str = "NUINV_THREADS";

/// Thread count from [`THREADS_ENV`], defaulting to 1.
pub fn threads_from_env() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| Error::Unsupported(format!("{THREADS_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(1),
    }
}

/// Runs `f` on a dedicated pool of `threads` workers. `0` means one per core.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(f)
}
