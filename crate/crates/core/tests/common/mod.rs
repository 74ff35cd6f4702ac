#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roughtv::SampledPath;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_values(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// Piecewise-linear path on `0, 1, ..., n-1` with values uniform in `[-1, 1]`.
pub fn random_path(rng: &mut ChaCha8Rng, n: usize) -> SampledPath {
    let times = (0..n).map(|i| i as f64).collect();
    SampledPath::linear(times, uniform_values(rng, n)).unwrap()
}

/// `count` paths with lengths drawn from `2..=max_len`.
pub fn corpus(seed: u64, count: usize, max_len: usize) -> Vec<SampledPath> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_len);
            random_path(&mut r, n)
        })
        .collect()
}

/// Pairs on a common grid.
pub fn pair_corpus(seed: u64, count: usize, max_len: usize) -> Vec<(SampledPath, SampledPath)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(2..=max_len);
            (random_path(&mut r, n), random_path(&mut r, n))
        })
        .collect()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
