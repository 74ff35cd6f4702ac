//! Exhaustive enumeration over all sample subsets, for cross-checking.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::norms::partition_sup_delta_unchecked;
use crate::path::SampledPath;

pub const MAX_TV_SAMPLES: usize = 16;
pub const MAX_SEMINORM_SAMPLES: usize = 12;

fn check_len(f: &SampledPath, max: usize) -> Result<()> {
    if f.len() > max {
        Err(Error::TooLarge { len: f.len(), max })
    } else {
        Ok(())
    }
}

/// Increments along the subsequence selected by the bits of `mask`.
fn subset_increments(v: &[f64], mask: u64, out: &mut Vec<f64>) {
    out.clear();
    let mut prev: Option<f64> = None;
    for (i, &x) in v.iter().enumerate() {
        if mask >> i & 1 == 1 {
            if let Some(p) = prev {
                out.push((x - p).abs());
            }
            prev = Some(x);
        }
    }
}

fn max_over_subsets(
    v: &[f64],
    exec: Execution,
    score: impl Fn(&[f64]) -> f64 + Sync + Send,
) -> f64 {
    if v.len() < 2 {
        return 0.0;
    }
    let best = exec.max_range(0..1u64 << v.len(), |mask| {
        let mut inc = Vec::with_capacity(v.len());
        subset_increments(v, mask, &mut inc);
        score(&inc)
    });
    best.max(0.0)
}

pub fn tv_partition_bruteforce(f: &SampledPath, delta: f64) -> Result<f64> {
    tv_partition_bruteforce_with(f, delta, Execution::default())
}

pub fn tv_partition_bruteforce_with(f: &SampledPath, delta: f64, exec: Execution) -> Result<f64> {
    check_len(f, MAX_TV_SAMPLES)?;
    if !(delta >= 0.0) {
        return Err(Error::NegativeDelta(delta));
    }
    Ok(max_over_subsets(f.values(), exec, |inc| {
        inc.iter().map(|x| (x - delta).max(0.0)).sum()
    }))
}

pub fn pvar_bruteforce(f: &SampledPath, p: f64) -> Result<f64> {
    pvar_bruteforce_with(f, p, Execution::default())
}

pub fn pvar_bruteforce_with(f: &SampledPath, p: f64, exec: Execution) -> Result<f64> {
    check_len(f, MAX_TV_SAMPLES)?;
    if !(p >= 1.0) {
        return Err(Error::BadExponent {
            p,
            reason: "need p >= 1",
        });
    }
    Ok(max_over_subsets(f.values(), exec, |inc| {
        inc.iter().map(|x| x.powf(p)).sum()
    }))
}

/// `max over subsets of partition_sup_delta(increments, p)`.
pub fn seminorm_bruteforce(f: &SampledPath, p: f64) -> Result<f64> {
    seminorm_bruteforce_with(f, p, Execution::default())
}

pub fn seminorm_bruteforce_with(f: &SampledPath, p: f64, exec: Execution) -> Result<f64> {
    check_len(f, MAX_SEMINORM_SAMPLES)?;
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::BadExponent {
            p,
            reason: "need 1 < p < infinity",
        });
    }
    Ok(max_over_subsets(f.values(), exec, |inc| {
        partition_sup_delta_unchecked(inc, p)
    }))
}
