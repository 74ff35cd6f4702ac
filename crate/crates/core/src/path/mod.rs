//! Sampled real-valued paths on a compact interval.

mod generate;
mod io;
mod partition;

pub use generate::{gen_brownian, gen_counterexample_fx, gen_identity, gen_zigzag, JUMP_EPS};
pub use io::{read_csv, write_csv};
pub use partition::{Partition, TaggedPartition};

use crate::error::{Error, Result};

/// How a path behaves between its samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interpolation {
    PiecewiseLinear,
    /// Right-continuous, constant on `[t_i, t_{i+1})`.
    CadlagStep,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampledPath {
    times: Vec<f64>,
    values: Vec<f64>,
    mode: Interpolation,
}

impl SampledPath {
    pub fn new(times: Vec<f64>, values: Vec<f64>, mode: Interpolation) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::LengthMismatch {
                times: times.len(),
                values: values.len(),
            });
        }
        if times.is_empty() {
            return Err(Error::EmptyPath);
        }
        for (index, (t, v)) in times.iter().zip(&values).enumerate() {
            if !t.is_finite() || !v.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
        }
        if let Some(i) = times.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::NonMonotoneTimes { index: i + 1 });
        }
        Ok(SampledPath {
            times,
            values,
            mode,
        })
    }

    pub fn linear(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::new(times, values, Interpolation::PiecewiseLinear)
    }

    pub fn step(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::new(times, values, Interpolation::CadlagStep)
    }

    /// Samples at integer times `0, 1, ..., n-1`.
    pub fn from_values(values: Vec<f64>, mode: Interpolation) -> Result<Self> {
        let times = (0..values.len()).map(|i| i as f64).collect();
        Self::new(times, values, mode)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mode(&self) -> Interpolation {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn start(&self) -> f64 {
        self.times[0]
    }

    pub fn end(&self) -> f64 {
        self.times[self.times.len() - 1]
    }

    pub fn first_value(&self) -> f64 {
        self.values[0]
    }

    pub fn last_value(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Value at `t`; clamps to the end values outside the span.
    pub fn value_at(&self, t: f64) -> f64 {
        let n = self.times.len();
        if t <= self.times[0] {
            return self.values[0];
        }
        if t >= self.times[n - 1] {
            return self.values[n - 1];
        }
        // First index with time > t; 1 <= k <= n-1 here.
        let k = self.times.partition_point(|&s| s <= t);
        match self.mode {
            Interpolation::CadlagStep => self.values[k - 1],
            Interpolation::PiecewiseLinear => {
                let (t0, t1) = (self.times[k - 1], self.times[k]);
                let (v0, v1) = (self.values[k - 1], self.values[k]);
                if t == t0 {
                    v0
                } else {
                    v0 + (v1 - v0) * ((t - t0) / (t1 - t0))
                }
            }
        }
    }

    /// The path on `[c, d]`, with samples inserted at both ends.
    pub fn restrict(&self, c: f64, d: f64) -> Result<Self> {
        if !(c < d) {
            return Err(Error::EmptyInterval { c, d });
        }
        if c < self.start() || d > self.end() {
            return Err(Error::OutOfSpan {
                c,
                d,
                a: self.start(),
                b: self.end(),
            });
        }
        let lo = self.times.partition_point(|&s| s <= c);
        let hi = self.times.partition_point(|&s| s < d);
        let mut times = Vec::with_capacity(hi.saturating_sub(lo) + 2);
        let mut values = Vec::with_capacity(times.capacity());
        times.push(c);
        values.push(self.value_at(c));
        for i in lo..hi {
            times.push(self.times[i]);
            values.push(self.values[i]);
        }
        times.push(d);
        values.push(self.value_at(d));
        Ok(SampledPath {
            times,
            values,
            mode: self.mode,
        })
    }

    /// Sub-path between two sample indices (inclusive).
    pub fn slice(&self, i: usize, j: usize) -> Result<Self> {
        if i >= j || j >= self.len() {
            return Err(Error::BadParameter(format!(
                "slice [{i}, {j}] of a path with {} samples",
                self.len()
            )));
        }
        Ok(SampledPath {
            times: self.times[i..=j].to_vec(),
            values: self.values[i..=j].to_vec(),
            mode: self.mode,
        })
    }

    pub fn oscillation(&self) -> f64 {
        let (lo, hi) = min_max(&self.values);
        hi - lo
    }

    /// `sup_t |f(t) - f(a)|`.
    pub fn osc_from_start(&self) -> f64 {
        let v0 = self.values[0];
        self.values.iter().fold(0.0, |m, &v| m.max((v - v0).abs()))
    }

    /// `sup_t |f(b) - f(t)|`.
    pub fn osc_to_end(&self) -> f64 {
        let vb = self.last_value();
        self.values.iter().fold(0.0, |m, &v| m.max((vb - v).abs()))
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    pub fn increments(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Times at which a step path changes value. Linear paths have none.
    pub fn jump_times(&self) -> Vec<f64> {
        match self.mode {
            Interpolation::PiecewiseLinear => Vec::new(),
            Interpolation::CadlagStep => (1..self.len())
                .filter(|&i| self.values[i] != self.values[i - 1])
                .map(|i| self.times[i])
                .collect(),
        }
    }

    /// Apply `op` to every sample value, keeping the grid and mode.
    pub fn map_values(&self, op: impl Fn(f64) -> f64) -> Result<Self> {
        let values = self.values.iter().map(|&v| op(v)).collect();
        Self::new(self.times.clone(), values, self.mode)
    }

    pub fn scale(&self, lambda: f64) -> Result<Self> {
        self.map_values(|v| lambda * v)
    }

    pub fn shift(&self, c: f64) -> Result<Self> {
        self.map_values(|v| v + c)
    }

    /// Pointwise combination on the merged grid of both paths.
    pub fn combine(&self, other: &SampledPath, op: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.mode != other.mode {
            return Err(Error::MixedModes);
        }
        if !same_span(self, other) {
            return Err(Error::SpanMismatch);
        }
        if self.times == other.times {
            let values = self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| op(a, b))
                .collect();
            return Self::new(self.times.clone(), values, self.mode);
        }
        let times = merged_times(&self.times, &other.times);
        let values = times
            .iter()
            .map(|&t| op(self.value_at(t), other.value_at(t)))
            .collect();
        Self::new(times, values, self.mode)
    }

    pub fn add(&self, other: &SampledPath) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SampledPath) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }
}

pub(crate) fn min_max(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}

/// Sorted union of two strictly increasing grids.
pub fn merged_times(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(&x), Some(&y)) if y < x => {
                j += 1;
                y
            }
            (Some(&x), Some(_)) => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

pub(crate) fn same_span(f: &SampledPath, g: &SampledPath) -> bool {
    let scale = 1.0_f64.max(f.end().abs()).max(f.start().abs());
    (f.start() - g.start()).abs() <= 1e-12 * scale && (f.end() - g.end()).abs() <= 1e-12 * scale
}

/// First time at which both step paths jump, if any.
pub fn common_discontinuity(f: &SampledPath, g: &SampledPath) -> Option<f64> {
    let jg = g.jump_times();
    f.jump_times()
        .into_iter()
        .find(|t| jg.binary_search_by(|s| s.total_cmp(t)).is_ok())
}
