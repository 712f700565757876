//! Generators for cycle codes (every column of weight two).

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ParityCheckMatrix;
use crate::error::{Error, Result};

/// `r x n` matrix whose columns are independent uniform picks of two
/// distinct rows, drawn from `ChaCha8Rng::seed_from_u64(seed)`.
pub fn random_cycle_code(n: usize, r: usize, seed: u64) -> Result<ParityCheckMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a code needs at least one column".into(),
        ));
    }
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "weight-2 columns need at least 2 rows, got {r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bits = vec![0u8; r * n];
    for x in 0..n {
        for u in sample(&mut rng, r, 2) {
            bits[u * n + x] = 1;
        }
    }
    ParityCheckMatrix::new(r, n, bits)
}

/// Disjoint union of cycles: a cycle with `k >= 2` checks contributes `k`
/// checks and `k` variables, variable `i` joining checks `i` and `i + 1`
/// (mod `k`).
pub fn cycle_union(lengths: &[usize]) -> Result<ParityCheckMatrix> {
    if lengths.is_empty() {
        return Err(Error::InvalidParameter("no cycle lengths given".into()));
    }
    if let Some(&k) = lengths.iter().find(|&&k| k < 2) {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 2 checks, got {k}"
        )));
    }
    let n: usize = lengths.iter().sum();
    let mut bits = vec![0u8; n * n];
    let mut base = 0;
    for &k in lengths {
        for i in 0..k {
            let x = base + i;
            bits[(base + i) * n + x] = 1;
            bits[(base + (i + 1) % k) * n + x] = 1;
        }
        base += k;
    }
    ParityCheckMatrix::new(n, n, bits)
}
