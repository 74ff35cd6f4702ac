use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{Interpolation, SampledPath};
use crate::error::{Error, Result};

/// Width of the sample gap, as a fraction of the span, used to place a jump
/// just after an endpoint in a step path.
pub const JUMP_EPS: f64 = 1.0 / 1_048_576.0;

/// Brownian motion started at 0, sampled at `n` uniform times on `[0, horizon]`.
pub fn gen_brownian(n: usize, horizon: f64, seed: u64) -> Result<SampledPath> {
    if n < 2 {
        return Err(Error::BadCount { count: n, min: 2 });
    }
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::BadParameter(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = horizon / (n - 1) as f64;
    let sd = h.sqrt();
    let mut values = Vec::with_capacity(n);
    let mut w = 0.0;
    values.push(w);
    for _ in 1..n {
        let z: f64 = StandardNormal.sample(&mut rng);
        w += sd * z;
        values.push(w);
    }
    SampledPath::linear(uniform_grid(n, 0.0, horizon), values)
}

/// `x(t) = t` on `n` uniform samples of `[0, horizon]`.
pub fn gen_identity(n: usize, horizon: f64) -> Result<SampledPath> {
    if n < 2 {
        return Err(Error::BadCount { count: n, min: 2 });
    }
    let times = uniform_grid(n, 0.0, horizon);
    SampledPath::linear(times.clone(), times)
}

/// Dyadic zigzag on `[2^-levels, 1]`: level `n` occupies `[2^-n, 2^-n+1]` and
/// carries `ceil(2^(np-1))` tents of height `2^(-n+1)`, vanishing at both ends.
pub fn gen_zigzag(p: f64, levels: u32) -> Result<SampledPath> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::BadExponent {
            p,
            reason: "zigzag needs p > 1",
        });
    }
    if !(1..=30).contains(&levels) {
        return Err(Error::BadCount {
            count: levels as usize,
            min: 1,
        });
    }
    let mut times = vec![(-(levels as f64)).exp2()];
    let mut values = vec![0.0];
    for n in (1..=levels).rev() {
        let left = (-(n as f64)).exp2();
        let height = 2.0 * left;
        let tents = (n as f64 * p - 1.0).exp2().ceil() as usize;
        let width = left / tents as f64;
        for j in 0..tents {
            let a = left + j as f64 * width;
            times.push(a + 0.5 * width);
            values.push(height);
            let b = if j + 1 == tents { height } else { a + width };
            times.push(b);
            values.push(0.0);
        }
    }
    SampledPath::linear(times, values)
}

/// Step path on `[-1, 1]`: 0 at -1, 1 on the open interval, `1 - x` at 1.
/// The jump off -1 is placed `JUMP_EPS` times the span later.
pub fn gen_counterexample_fx(x: f64) -> Result<SampledPath> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::BadParameter(format!(
            "jump size x must be positive, got {x}"
        )));
    }
    let eps = 2.0 * JUMP_EPS;
    SampledPath::new(
        vec![-1.0, -1.0 + eps, 1.0],
        vec![0.0, 1.0, 1.0 - x],
        Interpolation::CadlagStep,
    )
}

pub(crate) fn uniform_grid(n: usize, a: f64, b: f64) -> Vec<f64> {
    let h = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { b } else { a + i as f64 * h })
        .collect()
}
