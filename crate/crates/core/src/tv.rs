//! Truncated variation `TV^delta(f) = sup over partitions of sum (|increment| - delta)_+`.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::path::{min_max, SampledPath};

/// Relative tolerance of the midpoint-versus-chord test in [`tv_profile`].
pub const PROFILE_REL_TOL: f64 = 1e-12;
/// Resolution floor of the profile bisection, relative to the oscillation.
pub const PROFILE_MIN_WIDTH: f64 = 1e-14;

const PARALLEL_PROFILE_THRESHOLD: usize = 4096;

pub fn truncated_variation(f: &SampledPath, delta: f64) -> Result<f64> {
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::NegativeDelta(delta));
    }
    Ok(tv_values(f.values(), delta))
}

/// Where the running range of `v` first exceeds `delta`.
struct FirstExit {
    index: usize,
    up: bool,
    lo: f64,
    hi: f64,
}

fn first_exit(v: &[f64], delta: f64) -> std::result::Result<FirstExit, (f64, f64)> {
    let (mut lo, mut hi) = (v[0], v[0]);
    for (index, &x) in v.iter().enumerate().skip(1) {
        lo = lo.min(x);
        hi = hi.max(x);
        if hi - lo > delta {
            return Ok(FirstExit {
                index,
                up: x == hi,
                lo,
                hi,
            });
        }
    }
    Err((lo, hi))
}

/// One forward pass: alternate between a confirmed extremum (`anchor`) and the
/// running extremum of the current run, closing the run once the path retreats
/// by more than `delta`.
pub(crate) fn tv_values(v: &[f64], delta: f64) -> f64 {
    let Ok(exit) = first_exit(v, delta) else {
        return 0.0;
    };
    let mut up = exit.up;
    let (mut anchor, mut ext) = if up {
        (exit.lo, exit.hi)
    } else {
        (exit.hi, exit.lo)
    };
    let mut total = 0.0;
    for &x in &v[exit.index + 1..] {
        if up {
            if x > ext {
                ext = x;
            } else if ext - x > delta {
                total += ext - anchor - delta;
                anchor = ext;
                ext = x;
                up = false;
            }
        } else if x < ext {
            ext = x;
        } else if x - ext > delta {
            total += anchor - ext - delta;
            anchor = ext;
            ext = x;
            up = true;
        }
    }
    total + ((ext - anchor).abs() - delta).max(0.0)
}

/// A path `g` on the same grid with `|f - g| <= delta/2` and `TV^0(g) = TV^delta(f)`.
///
/// `g` is held at the band centre until `f` first leaves a band of width
/// `delta`, then follows `f` lazily, moving only when `f` pushes against the
/// edge of `[g - delta/2, g + delta/2]`.
pub fn optimal_approximation(f: &SampledPath, delta: f64) -> Result<SampledPath> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::NonPositiveDelta(delta));
    }
    let v = f.values();
    let half = 0.5 * delta;
    let out = match first_exit(v, delta) {
        Err((lo, hi)) => vec![0.5 * (lo + hi); v.len()],
        Ok(exit) => {
            let mut g = if exit.up {
                exit.lo + half
            } else {
                exit.hi - half
            };
            let mut out = vec![g; exit.index];
            for &x in &v[exit.index..] {
                if x > g + half {
                    g = x - half;
                } else if x < g - half {
                    g = x + half;
                }
                out.push(g);
            }
            out
        }
    };
    SampledPath::new(f.times().to_vec(), out, f.mode())
}

/// `TV = intercept - slope * delta` on one piece of the profile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub intercept: f64,
    pub slope: f64,
}

impl Segment {
    pub fn eval(&self, delta: f64) -> f64 {
        (self.intercept - self.slope * delta).max(0.0)
    }
}

/// The convex, non-increasing, piecewise affine map `delta -> TV^delta(f)`
/// on `[0, osc(f)]`. It vanishes beyond the oscillation.
#[derive(Clone, Debug, PartialEq)]
pub struct TvProfile {
    breakpoints: Vec<f64>,
    segments: Vec<Segment>,
}

impl TvProfile {
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn oscillation(&self) -> f64 {
        *self.breakpoints.last().unwrap()
    }

    pub fn total_variation(&self) -> f64 {
        self.segments.first().map_or(0.0, |s| s.eval(0.0))
    }

    pub fn eval(&self, delta: f64) -> f64 {
        if delta >= self.oscillation() || self.segments.is_empty() {
            return 0.0;
        }
        let k = self.breakpoints.partition_point(|&b| b <= delta);
        self.segments[k.saturating_sub(1).min(self.segments.len() - 1)].eval(delta)
    }

    /// Pieces as `(left, right, segment)`.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, Segment)> + '_ {
        self.segments
            .iter()
            .enumerate()
            .map(|(i, s)| (self.breakpoints[i], self.breakpoints[i + 1], *s))
    }
}

pub fn tv_profile(f: &SampledPath) -> TvProfile {
    let exec = if f.len() >= PARALLEL_PROFILE_THRESHOLD {
        Execution::Parallel
    } else {
        Execution::Sequential
    };
    tv_profile_with(f, exec)
}

/// Build the profile by recursive bisection, evaluating each generation of
/// midpoints with `exec`.
pub fn tv_profile_with(f: &SampledPath, exec: Execution) -> TvProfile {
    let v = f.values();
    let (lo, hi) = min_max(v);
    let osc = hi - lo;
    if osc == 0.0 {
        return TvProfile {
            breakpoints: vec![0.0],
            segments: Vec::new(),
        };
    }
    let tv0 = tv_values(v, 0.0);
    // The chord test cannot be sharper than the rounding in a length-n sum.
    let rel = PROFILE_REL_TOL.max(4.0 * v.len() as f64 * f64::EPSILON);
    let tol = rel * tv0.max(f64::MIN_POSITIVE);
    let min_width = PROFILE_MIN_WIDTH * osc;

    // (left, right, tv(left), tv(right)) in increasing order.
    let mut pending = vec![(0.0, osc, tv0, 0.0)];
    let mut accepted: Vec<(f64, f64, f64, f64)> = Vec::new();
    while !pending.is_empty() {
        let mids = exec.map(&pending, |&(a, b, _, _)| {
            let m = 0.5 * (a + b);
            (m, tv_values(v, m))
        });
        let mut next = Vec::with_capacity(2 * pending.len());
        for (&(a, b, ta, tb), &(m, tm)) in pending.iter().zip(&mids) {
            if (tm - 0.5 * (ta + tb)).abs() <= tol || b - a <= min_width {
                accepted.push((a, b, ta, tb));
            } else {
                next.push((a, m, ta, tm));
                next.push((m, b, tm, tb));
            }
        }
        pending = next;
    }
    accepted.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut breakpoints = vec![0.0];
    let mut segments: Vec<Segment> = Vec::new();
    for (a, b, ta, tb) in accepted {
        let slope = (ta - tb) / (b - a);
        let seg = Segment {
            intercept: ta + slope * a,
            slope,
        };
        let merge = segments.last().is_some_and(|last| {
            (last.slope - slope).abs() <= 1e-9 * last.slope.abs().max(slope.abs())
        });
        if merge {
            // Keep the left anchor and extend to the new right end.
            let last = segments.last_mut().unwrap();
            let left = breakpoints[breakpoints.len() - 2];
            let t_left = last.eval(left);
            last.slope = (t_left - tb) / (b - left);
            last.intercept = t_left + last.slope * left;
            *breakpoints.last_mut().unwrap() = b;
        } else {
            segments.push(seg);
            breakpoints.push(b);
        }
    }
    TvProfile {
        breakpoints,
        segments,
    }
}
