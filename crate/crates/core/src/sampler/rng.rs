//! Seedable per-trial random streams.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// Independent stream for `(seed, trial)`, reproducible in isolation.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Rayon pool capped by `SPHEFAFFIAN_THREADS` when set.
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("SPHEFAFFIAN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}
