//! p-variation and the p-TV seminorm `sup_delta (delta^(p-1) TV^delta)^(1/p)`.

use crate::bound::BoundReport;
use crate::error::{Error, Result};
use crate::path::SampledPath;
use crate::tv::{tv_profile, tv_values, TvProfile};

/// `(p-1)^(p-1) / p^p`, with the limit 1 at `p = 1`.
pub fn c_p(p: f64) -> f64 {
    if p == 1.0 {
        1.0
    } else {
        (p - 1.0).powf(p - 1.0) / p.powf(p)
    }
}

fn check_p(p: f64) -> Result<()> {
    if p >= 1.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::BadExponent {
            p,
            reason: "need 1 <= p < infinity",
        })
    }
}

/// Drop plateaus and interior points of monotone runs. For `p >= 1` the
/// supremum over partitions is attained on what remains.
fn turning_points(v: &[f64]) -> Vec<f64> {
    let mut dedup: Vec<f64> = Vec::with_capacity(v.len());
    for &x in v {
        if dedup.last() != Some(&x) {
            dedup.push(x);
        }
    }
    if dedup.len() <= 2 {
        return dedup;
    }
    let mut out = vec![dedup[0]];
    for w in dedup.windows(3) {
        if (w[1] - w[0]) * (w[2] - w[1]) < 0.0 {
            out.push(w[1]);
        }
    }
    out.push(dedup[dedup.len() - 1]);
    out
}

/// `V^p(f) = sup over partitions of sum |increment|^p`.
pub fn p_variation(f: &SampledPath, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(p_variation_values(f.values(), p))
}

pub(crate) fn p_variation_values(v: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        return tv_values(v, 0.0);
    }
    let v = turning_points(v);
    let mut best = vec![0.0_f64; v.len()];
    for j in 1..v.len() {
        let vj = v[j];
        best[j] = (0..j)
            .map(|i| best[i] + (vj - v[i]).abs().powf(p))
            .fold(0.0, f64::max);
    }
    best.last().copied().unwrap_or(0.0)
}

/// `(V^p)^(1/p)`.
pub fn p_variation_norm(f: &SampledPath, p: f64) -> Result<f64> {
    Ok(p_variation(f, p)?.powf(1.0 / p))
}

/// `max_j (n-j+1)^(1/p-1) c_p^(1/p) sum_{i>=j} x*_i` for the ascending
/// rearrangement `x*` of `increments`. Equals `sup_delta (delta^(p-1) sum (x_i - delta)_+)^(1/p)`.
pub fn partition_sup_delta(increments: &[f64], p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::BadExponent {
            p,
            reason: "need 1 < p < infinity",
        });
    }
    if let Some(index) = increments
        .iter()
        .position(|x| !(*x >= 0.0) || !x.is_finite())
    {
        return Err(Error::NegativeIncrement { index });
    }
    Ok(partition_sup_delta_unchecked(increments, p))
}

pub(crate) fn partition_sup_delta_unchecked(increments: &[f64], p: f64) -> f64 {
    let mut x = increments.to_vec();
    x.sort_by(|a, b| b.total_cmp(a));
    let cp = c_p(p).powf(1.0 / p);
    let mut tail = 0.0;
    let mut best = 0.0_f64;
    for (k, &xi) in x.iter().enumerate() {
        tail += xi;
        let m = (k + 1) as f64;
        best = best.max(m.powf(1.0 / p - 1.0) * cp * tail);
    }
    best
}

/// Seminorm and the maximising truncation level, read off a profile.
pub fn seminorm_from_profile(profile: &TvProfile, p: f64) -> (f64, f64) {
    if p == 1.0 {
        return (profile.total_variation(), 0.0);
    }
    let mut best = 0.0_f64;
    let mut arg = 0.0;
    for (d0, d1, seg) in profile.pieces() {
        let d = if seg.slope > 0.0 {
            (seg.intercept * (p - 1.0) / (p * seg.slope)).clamp(d0, d1)
        } else {
            d1
        };
        let h = d.powf(p - 1.0) * seg.eval(d);
        if h > best {
            best = h;
            arg = d;
        }
    }
    (best.powf(1.0 / p), arg)
}

pub fn p_tv_seminorm(f: &SampledPath, p: f64) -> Result<f64> {
    check_p(p)?;
    if p == 1.0 {
        return Ok(tv_values(f.values(), 0.0));
    }
    Ok(seminorm_from_profile(&tv_profile(f), p).0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormReport {
    pub p: f64,
    pub seminorm: f64,
    /// `|f(a)| + seminorm`.
    pub full_norm: f64,
    pub argmax_delta: f64,
    /// `(V^p)^(1/p)`.
    pub pvar: f64,
    pub osc: f64,
}

pub fn tv_p_full_norm(f: &SampledPath, p: f64) -> Result<NormReport> {
    check_p(p)?;
    let (seminorm, argmax_delta) = if p == 1.0 {
        (tv_values(f.values(), 0.0), 0.0)
    } else {
        seminorm_from_profile(&tv_profile(f), p)
    };
    Ok(NormReport {
        p,
        seminorm,
        full_norm: f.first_value().abs() + seminorm,
        argmax_delta,
        pvar: p_variation_norm(f, p)?,
        osc: f.oscillation(),
    })
}

/// `||f||_{q-var} <= (2^(q+p-1) / (2^(q-p) - 1))^(1/q) osc^(1-p/q) ||f||_{p-TV}^(p/q)`.
pub fn embedding_bound(f: &SampledPath, p: f64, q: f64) -> Result<BoundReport> {
    check_p(p)?;
    if !(q > p && q.is_finite()) {
        return Err(Error::BadExponentOrder { p, q });
    }
    let constant = ((q + p - 1.0).exp2() / ((q - p).exp2() - 1.0)).powf(1.0 / q);
    let lhs = p_variation_norm(f, q)?;
    let rhs = constant * f.oscillation().powf(1.0 - p / q) * p_tv_seminorm(f, p)?.powf(p / q);
    Ok(BoundReport::new("embedding", lhs, rhs, constant))
}
