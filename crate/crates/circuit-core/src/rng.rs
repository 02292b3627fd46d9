//! Deterministic, counter-style RNG stream derivation.
//!
//! Every random decision in the suite draws from a ChaCha12 stream whose seed
//! is a SHA-256 digest of the master seed, a context label, and integer
//! indices (circuit index, shot batch, restart number, ...). Streams are
//! therefore independent of worker count and iteration order: the same
//! `(master_seed, context, indices)` triple always yields the same stream.

use rand_chacha::ChaCha12Rng;
use rand_chacha::rand_core::SeedableRng;
use sha2::{Digest, Sha256};

/// Derive the seeded stream for `(master_seed, context, indices)`.
pub fn derive_rng(master_seed: u64, context: &str, indices: &[u64]) -> ChaCha12Rng {
    let mut hasher = Sha256::new();
    hasher.update(master_seed.to_le_bytes());
    hasher.update((context.len() as u64).to_le_bytes());
    hasher.update(context.as_bytes());
    for ix in indices {
        hasher.update(ix.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    ChaCha12Rng::from_seed(seed)
}
