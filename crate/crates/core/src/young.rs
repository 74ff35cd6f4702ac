//! Riemann–Stieltjes sums and integrals, the truncated-variation bounds on
//! their error, and the Loève–Young type estimates derived from them.

use crate::bound::BoundReport;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::norms::{p_tv_seminorm, p_variation, p_variation_norm};
use crate::path::{
    common_discontinuity, merged_times, same_span, Interpolation, SampledPath, TaggedPartition,
};
use crate::tv::tv_values;

pub const DEFAULT_INTEGRAL_TOL: f64 = 1e-12;
pub const MAX_REFINEMENT_LEVEL: u32 = 60;
/// Series stop once a term drops below this fraction of the partial sum...
pub const SERIES_REL_TOL: f64 = 1e-12;
/// ...and at least this many terms have been added.
pub const SERIES_MIN_TERMS: usize = 8;
const SERIES_MAX_TERMS: usize = 100_000;
const SUM_GUARD: f64 = 1e300;
const MAX_LADDER_LEN: usize = 4096;

fn check_spans(f: &SampledPath, g: &SampledPath) -> Result<()> {
    if same_span(f, g) {
        Ok(())
    } else {
        Err(Error::SpanMismatch)
    }
}

/// `sum f(xi_i) (g(t_i) - g(t_{i-1}))`.
pub fn rs_sum(f: &SampledPath, g: &SampledPath, tp: &TaggedPartition) -> Result<f64> {
    check_spans(f, g)?;
    let pts = tp.partition().points();
    if pts[0] < f.start() || pts[pts.len() - 1] > f.end() {
        return Err(Error::OutOfSpan {
            c: pts[0],
            d: pts[pts.len() - 1],
            a: f.start(),
            b: f.end(),
        });
    }
    Ok(pts
        .windows(2)
        .zip(tp.tags())
        .map(|(w, &xi)| f.value_at(xi) * (g.value_at(w[1]) - g.value_at(w[0])))
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    /// Number of refinement levels evaluated.
    pub partitions_used: usize,
    pub last_refinement_change: f64,
}

/// One cell of the merged grid, where both paths are affine or constant
/// (a step integrator may still jump at the right end).
#[derive(Clone, Copy)]
struct Cell {
    f0: f64,
    f1: f64,
    dg: f64,
    f_linear: bool,
    g_linear: bool,
}

impl Cell {
    /// Left-point sum over `m` equal sub-cells, in closed form.
    fn left_sum(&self, m: f64) -> f64 {
        match (self.f_linear, self.g_linear) {
            (true, true) => 0.5 * (self.f0 + self.f1) * self.dg,
            (false, _) => self.f0 * self.dg,
            (true, false) => (self.f0 + (self.f1 - self.f0) * (1.0 - 1.0 / m)) * self.dg,
        }
    }
}

struct Cells {
    times: Vec<f64>,
    cells: Vec<Cell>,
    exact: bool,
}

fn cells(f: &SampledPath, g: &SampledPath) -> Result<Cells> {
    check_spans(f, g)?;
    if let Some(time) = common_discontinuity(f, g) {
        return Err(Error::CommonDiscontinuity { time });
    }
    let times = merged_times(f.times(), g.times());
    let f_linear = f.mode() == Interpolation::PiecewiseLinear;
    let g_linear = g.mode() == Interpolation::PiecewiseLinear;
    let fv: Vec<f64> = times.iter().map(|&t| f.value_at(t)).collect();
    let gv: Vec<f64> = times.iter().map(|&t| g.value_at(t)).collect();
    let cells = (1..times.len())
        .map(|i| Cell {
            f0: fv[i - 1],
            f1: fv[i],
            dg: gv[i] - gv[i - 1],
            f_linear,
            g_linear,
        })
        .collect();
    Ok(Cells {
        times,
        cells,
        exact: f_linear == g_linear || !f_linear,
    })
}

/// Per-cell contributions at the first dyadic level where the total settles.
fn converged_cells(c: &Cells, tol: f64) -> Result<(Vec<f64>, IntegralResult)> {
    let sums = |m: f64| -> Vec<f64> { c.cells.iter().map(|cell| cell.left_sum(m)).collect() };
    if c.exact {
        let v = sums(1.0);
        let value = v.iter().sum();
        return Ok((
            v,
            IntegralResult {
                value,
                partitions_used: 1,
                last_refinement_change: 0.0,
            },
        ));
    }
    let mut prev: f64 = sums(1.0).iter().sum();
    for level in 1..=MAX_REFINEMENT_LEVEL {
        let v = sums((level as f64).exp2());
        let value: f64 = v.iter().sum();
        let change = (value - prev).abs();
        if change < tol {
            return Ok((
                v,
                IntegralResult {
                    value,
                    partitions_used: level as usize + 1,
                    last_refinement_change: change,
                },
            ));
        }
        prev = value;
    }
    Err(Error::NoConvergence {
        what: "Riemann-Stieltjes refinement",
        iterations: MAX_REFINEMENT_LEVEL as usize,
    })
}

/// `int_a^b f dg`, as the limit of left-point sums over dyadic refinements of
/// the merged grid. Exact (trapezoid) when both paths are piecewise linear.
pub fn rs_integral(f: &SampledPath, g: &SampledPath, tol: f64) -> Result<IntegralResult> {
    if !(tol > 0.0) {
        return Err(Error::BadParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(converged_cells(&cells(f, g)?, tol)?.1)
}

/// `t -> int_a^t f dg` on the merged grid, in the interpolation mode of `g`.
pub fn indefinite_integral(f: &SampledPath, g: &SampledPath) -> Result<SampledPath> {
    indefinite_integral_with_tol(f, g, DEFAULT_INTEGRAL_TOL)
}

pub fn indefinite_integral_with_tol(
    f: &SampledPath,
    g: &SampledPath,
    tol: f64,
) -> Result<SampledPath> {
    let c = cells(f, g)?;
    let (contrib, _) = converged_cells(&c, tol)?;
    let mut acc = 0.0;
    let mut values = Vec::with_capacity(c.times.len());
    values.push(0.0);
    for x in contrib {
        acc += x;
        values.push(acc);
    }
    SampledPath::new(c.times, values, g.mode())
}

/// Truncation levels `eta_{-1}, eta_0, eta_1, ...` for the integrand and
/// `theta_{-1}, theta_0, ...` for the integrator.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationLadder {
    pub eta_minus1: Option<f64>,
    pub theta_minus1: Option<f64>,
    etas: Vec<f64>,
    thetas: Vec<f64>,
}

fn check_nonincreasing(name: &str, xs: &[f64]) -> Result<()> {
    if let Some(i) = xs.iter().position(|x| !(*x >= 0.0) || !x.is_finite()) {
        return Err(Error::NonMonotoneLadder(format!("{name}[{i}] = {}", xs[i])));
    }
    if let Some(i) = xs.windows(2).position(|w| w[1] > w[0]) {
        return Err(Error::NonMonotoneLadder(format!(
            "{name}[{}] = {} exceeds {name}[{i}] = {}",
            i + 1,
            xs[i + 1],
            xs[i]
        )));
    }
    Ok(())
}

impl TruncationLadder {
    pub fn new(etas: Vec<f64>, thetas: Vec<f64>) -> Result<Self> {
        check_nonincreasing("eta", &etas)?;
        check_nonincreasing("theta", &thetas)?;
        if etas.len() != thetas.len() || etas.is_empty() {
            return Err(Error::BadParameter(format!(
                "ladder lengths {} and {} must agree and be positive",
                etas.len(),
                thetas.len()
            )));
        }
        Ok(TruncationLadder {
            eta_minus1: None,
            theta_minus1: None,
            etas,
            thetas,
        })
    }

    pub fn with_eta_minus1(mut self, eta: f64) -> Self {
        self.eta_minus1 = Some(eta);
        self
    }

    pub fn with_theta_minus1(mut self, theta: f64) -> Self {
        self.theta_minus1 = Some(theta);
        self
    }

    pub fn etas(&self) -> &[f64] {
        &self.etas
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.etas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.etas.is_empty()
    }
}

pub(crate) fn check_young(p: f64, q: f64) -> Result<()> {
    if p > 1.0 && q > 1.0 && p.is_finite() && q.is_finite() && 1.0 / p + 1.0 / q > 1.0 {
        Ok(())
    } else {
        Err(Error::BadExponents { p, q })
    }
}

/// `alpha = (sqrt((q-1)(p-1)) + 1) / 2` and `rho = alpha^2 / ((q-1)(p-1))`.
pub fn ladder_exponents(p: f64, q: f64) -> Result<(f64, f64)> {
    check_young(p, q)?;
    let s = (q - 1.0) * (p - 1.0);
    let alpha = 0.5 * (s.sqrt() + 1.0);
    Ok((alpha, alpha * alpha / s))
}

/// `eta_{k-1} = beta 2^(1 - rho^k)`, `theta_k = gamma 2^(-rho^k alpha / (q-1))`,
/// truncated once both underflow.
pub fn ladder_geometric(p: f64, q: f64, beta: f64, gamma: f64) -> Result<TruncationLadder> {
    let (alpha, rho) = ladder_exponents(p, q)?;
    for (name, x) in [("beta", beta), ("gamma", gamma)] {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::BadParameter(format!(
                "{name} must be positive, got {x}"
            )));
        }
    }
    let mut etas = Vec::new();
    let mut thetas = Vec::new();
    let mut rk = 1.0_f64; // rho^k
    for _ in 0..MAX_LADDER_LEN {
        let eta = beta * (1.0 - rk * rho).exp2();
        let theta = gamma * (-rk * alpha / (q - 1.0)).exp2();
        etas.push(eta);
        thetas.push(theta);
        if eta == 0.0 && theta == 0.0 {
            break;
        }
        rk *= rho;
    }
    Ok(TruncationLadder {
        eta_minus1: Some(beta),
        theta_minus1: None,
        etas,
        thetas,
    })
}

/// The mirror ladder used by the symmetric bound:
/// `theta_{k-1} = beta 2^(1 - rho^k)`, `eta_k = gamma 2^(-rho^k alpha / (p-1))`.
pub fn ladder_geometric_symmetric(
    p: f64,
    q: f64,
    beta: f64,
    gamma: f64,
) -> Result<TruncationLadder> {
    let l = ladder_geometric(q, p, beta, gamma)?;
    Ok(TruncationLadder {
        eta_minus1: None,
        theta_minus1: l.eta_minus1,
        etas: l.thetas,
        thetas: l.etas,
    })
}

fn positive_or_one(x: f64) -> f64 {
    if x > 0.0 && x.is_finite() {
        x
    } else {
        1.0
    }
}

/// Geometric ladder with `beta = sup |f - f(a)|` and
/// `gamma = (V^q(g) / V^p(f))^(1/q) beta^(p/q)`.
pub fn default_ladder(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
) -> Result<TruncationLadder> {
    check_young(p, q)?;
    let beta = positive_or_one(f.osc_from_start());
    let gamma =
        positive_or_one((p_variation(g, q)? / p_variation(f, p)?).powf(1.0 / q) * beta.powf(p / q));
    Ok(ladder_geometric(p, q, beta, gamma)?.with_eta_minus1(f.osc_from_start()))
}

/// Mirror of [`default_ladder`] anchored at `sup |g(b) - g|`.
pub fn default_ladder_symmetric(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
) -> Result<TruncationLadder> {
    check_young(p, q)?;
    let beta = positive_or_one(g.osc_to_end());
    let gamma =
        positive_or_one((p_variation(f, p)? / p_variation(g, q)?).powf(1.0 / p) * beta.powf(q / p));
    Ok(ladder_geometric_symmetric(p, q, beta, gamma)?.with_theta_minus1(g.osc_to_end()))
}

/// Value of a series bound; `finite == false` when the partial sums ran past
/// the overflow guard, in which case `value` is the last partial sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesBound {
    pub value: f64,
    pub finite: bool,
}

fn guarded_sum(terms: impl IntoIterator<Item = f64>) -> SeriesBound {
    let mut value = 0.0;
    for t in terms {
        value += t;
        if !(value <= SUM_GUARD) {
            return SeriesBound {
                value: if value.is_nan() {
                    SUM_GUARD
                } else {
                    value.min(f64::MAX)
                },
                finite: false,
            };
        }
    }
    SeriesBound {
        value,
        finite: true,
    }
}

fn check_anchor(declared: Option<f64>, expected: f64) -> Result<f64> {
    let declared = declared.ok_or(Error::LadderMismatch {
        declared: f64::NAN,
        expected,
    })?;
    if (declared - expected).abs() > 1e-9 * expected.max(1.0) {
        return Err(Error::LadderMismatch { declared, expected });
    }
    Ok(declared)
}

/// `coef * TV^level(v)`, skipping the evaluation when the coefficient vanishes.
fn weighted_tv(coef: f64, v: &[f64], level: f64) -> f64 {
    if coef == 0.0 {
        0.0
    } else {
        coef * tv_values(v, level)
    }
}

/// `S = sum_k 2^k eta_{k-1} TV^{theta_k}(g) + sum_k 2^k theta_k TV^{eta_k}(f)`
/// with `eta_{-1} = sup |f - f(a)|`; bounds `|int f dg - f(a)(g(b) - g(a))|`.
pub fn young_bound_s(
    f: &SampledPath,
    g: &SampledPath,
    ladder: &TruncationLadder,
) -> Result<SeriesBound> {
    young_bound_s_with(f, g, ladder, Execution::Sequential)
}

pub fn young_bound_s_with(
    f: &SampledPath,
    g: &SampledPath,
    ladder: &TruncationLadder,
    exec: Execution,
) -> Result<SeriesBound> {
    check_spans(f, g)?;
    let eta_m1 = check_anchor(ladder.eta_minus1, f.osc_from_start())?;
    let (fv, gv) = (f.values(), g.values());
    let terms = exec.map_range(0..ladder.len(), |k| {
        let w = (k as f64).exp2();
        let eta_prev = if k == 0 { eta_m1 } else { ladder.etas[k - 1] };
        weighted_tv(w * eta_prev, gv, ladder.thetas[k])
            + weighted_tv(w * ladder.thetas[k], fv, ladder.etas[k])
    });
    Ok(guarded_sum(terms))
}

/// `S~ = sum_k 2^k theta_{k-1} TV^{eta_k}(f) + sum_k 2^k eta_k TV^{theta_k}(g)`
/// with `theta_{-1} = sup |g(b) - g|`.
pub fn young_bound_s_tilde(
    f: &SampledPath,
    g: &SampledPath,
    ladder: &TruncationLadder,
) -> Result<SeriesBound> {
    young_bound_s_tilde_with(f, g, ladder, Execution::Sequential)
}

pub fn young_bound_s_tilde_with(
    f: &SampledPath,
    g: &SampledPath,
    ladder: &TruncationLadder,
    exec: Execution,
) -> Result<SeriesBound> {
    check_spans(f, g)?;
    let theta_m1 = check_anchor(ladder.theta_minus1, g.osc_to_end())?;
    let (fv, gv) = (f.values(), g.values());
    let terms = exec.map_range(0..ladder.len(), |k| {
        let w = (k as f64).exp2();
        let theta_prev = if k == 0 {
            theta_m1
        } else {
            ladder.thetas[k - 1]
        };
        weighted_tv(w * theta_prev, fv, ladder.etas[k])
            + weighted_tv(w * ladder.etas[k], gv, ladder.thetas[k])
    });
    Ok(guarded_sum(terms))
}

/// Finite bound on `|sum f(xi_i) dg_i - f(c)(g(d) - g(c))|` over the tagged
/// partition of `[c, d]`:
/// `sum_{k<=r} 2^k delta_{k-1} TV^{eps_k}(g) + sum_{k<=r} 2^k eps_k TV^{delta_k}(f) + n delta_r eps_r`,
/// where `delta_{-1} = sup_{[c,d]} |f - f(c)|`.
pub fn lemma_sum_bound(
    f: &SampledPath,
    g: &SampledPath,
    tp: &TaggedPartition,
    deltas: &[f64],
    epsilons: &[f64],
) -> Result<f64> {
    check_spans(f, g)?;
    check_nonincreasing("delta", deltas)?;
    check_nonincreasing("epsilon", epsilons)?;
    if deltas.len() != epsilons.len() || deltas.is_empty() {
        return Err(Error::BadParameter(format!(
            "need r+1 levels of each kind, got {} and {}",
            deltas.len(),
            epsilons.len()
        )));
    }
    let part = tp.partition();
    let (fr, gr) = (
        f.restrict(part.start(), part.end())?,
        g.restrict(part.start(), part.end())?,
    );
    let delta_m1 = fr.osc_from_start();
    let r = deltas.len() - 1;
    let mut total = 0.0;
    for k in 0..=r {
        let w = (k as f64).exp2();
        let d_prev = if k == 0 { delta_m1 } else { deltas[k - 1] };
        total += weighted_tv(w * d_prev, gr.values(), epsilons[k]);
        total += weighted_tv(w * epsilons[k], fr.values(), deltas[k]);
    }
    Ok(total + part.cells() as f64 * deltas[r] * epsilons[r])
}

fn dyadic_series(exponent: impl Fn(usize, f64) -> f64) -> Result<f64> {
    let mut sum = 0.0;
    for k in 0..SERIES_MAX_TERMS {
        let e = exponent(k, k as f64);
        if e > 1000.0 {
            break;
        }
        let term = e.exp2();
        sum += term;
        if k + 1 >= SERIES_MIN_TERMS && term < SERIES_REL_TOL * sum {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        what: "constant series",
        iterations: SERIES_MAX_TERMS,
    })
}

/// `C_{p,q} = max{ sum_k 2^(k+2-(1-alpha) rho^k), sum_k 2^(k+2-(1-alpha) rho^k alpha/(q-1) - p) }`.
pub fn loeve_young_constant(p: f64, q: f64) -> Result<f64> {
    let (alpha, rho) = ladder_exponents(p, q)?;
    let a = dyadic_series(|_, k| k + 2.0 - (1.0 - alpha) * rho.powf(k))?;
    let b = dyadic_series(|_, k| k + 2.0 - (1.0 - alpha) * rho.powf(k) * alpha / (q - 1.0) - p)?;
    Ok(a.max(b))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeConstants {
    pub d_tilde: f64,
    pub d: f64,
    pub e: f64,
}

/// Constants of the q-TV estimate for the indefinite integral:
/// `D~ = (sum 2^(k+1-(1-alpha) rho^k)) (sum 2^(k+2-(1-alpha) rho^k alpha/(q-1) - p))^(q-1)`,
/// `D = D~^(1/q)`, `E = (p-1)^(1-1/p) D / p`.
pub fn d_e_constants(p: f64, q: f64) -> Result<DeConstants> {
    let (alpha, rho) = ladder_exponents(p, q)?;
    let a = dyadic_series(|_, k| k + 1.0 - (1.0 - alpha) * rho.powf(k))?;
    let b = dyadic_series(|_, k| k + 2.0 - (1.0 - alpha) * rho.powf(k) * alpha / (q - 1.0) - p)?;
    let d_tilde = a * b.powf(q - 1.0);
    let d = d_tilde.powf(1.0 / q);
    Ok(DeConstants {
        d_tilde,
        d,
        e: (p - 1.0).powf(1.0 - 1.0 / p) / p * d,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    PVar,
    PTv,
}

impl NormKind {
    pub fn name(self) -> &'static str {
        match self {
            NormKind::PVar => "pvar",
            NormKind::PTv => "ptv",
        }
    }

    pub fn eval(self, f: &SampledPath, p: f64) -> Result<f64> {
        match self {
            NormKind::PVar => p_variation_norm(f, p),
            NormKind::PTv => p_tv_seminorm(f, p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YoungForm {
    /// `|int f dg - f(a) dg| <= C ||f||^(p-p/q) osc_f^(1+p/q-p) ||g||`.
    Left,
    /// `|int f dg - f(a) dg| <= C ||f|| ||g||^(q-q/p) osc_g^(1+q/p-q)`.
    RightSymmetric,
    /// Tag at the middle sample: twice the smaller of the two right-hand sides.
    Midpoint,
}

impl YoungForm {
    pub const ALL: [YoungForm; 3] = [
        YoungForm::Left,
        YoungForm::RightSymmetric,
        YoungForm::Midpoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            YoungForm::Left => "left",
            YoungForm::RightSymmetric => "right",
            YoungForm::Midpoint => "xi",
        }
    }
}

pub fn loeve_young_check(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
    norm: NormKind,
    form: YoungForm,
) -> Result<BoundReport> {
    check_young(p, q)?;
    let integral = rs_integral(f, g, DEFAULT_INTEGRAL_TOL)?.value;
    let dg = g.last_value() - g.first_value();
    let (nf, ng) = (norm.eval(f, p)?, norm.eval(g, q)?);
    let ef = 1.0 + p / q - p;
    let eg = 1.0 + q / p - q;
    let left = nf.powf(p - p / q) * f.oscillation().powf(ef) * ng;
    let right = nf * ng.powf(q - q / p) * g.oscillation().powf(eg);
    let (tag, constant, rhs_core) = match form {
        YoungForm::Left => (f.first_value(), loeve_young_constant(p, q)?, left),
        YoungForm::RightSymmetric => (f.first_value(), loeve_young_constant(q, p)?, right),
        YoungForm::Midpoint => {
            let c = loeve_young_constant(p, q)?.max(loeve_young_constant(q, p)?);
            let xi = f.times()[f.len() / 2];
            (f.value_at(xi), c, 2.0 * left.min(right))
        }
    };
    let lhs = (integral - tag * dg).abs();
    Ok(BoundReport::new(
        format!("{}-{}", norm.name(), form.name()),
        lhs,
        constant * rhs_core,
        constant,
    ))
}

/// Every `(norm, form)` combination of [`loeve_young_check`].
pub fn loeve_young_all(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
) -> Result<Vec<BoundReport>> {
    let mut out = Vec::with_capacity(6);
    for norm in [NormKind::PVar, NormKind::PTv] {
        for form in YoungForm::ALL {
            out.push(loeve_young_check(f, g, p, q, norm, form)?);
        }
    }
    Ok(out)
}

/// `|int f dg - f(xi) dg| <= 2 min(S, S~)` with the default ladders.
pub fn corollary_min_check(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
    xi: f64,
) -> Result<BoundReport> {
    let s = young_bound_s(f, g, &default_ladder(f, g, p, q)?)?;
    let st = young_bound_s_tilde(f, g, &default_ladder_symmetric(f, g, p, q)?)?;
    let integral = rs_integral(f, g, DEFAULT_INTEGRAL_TOL)?.value;
    let lhs = (integral - f.value_at(xi) * (g.last_value() - g.first_value())).abs();
    Ok(BoundReport::new(
        "min-s",
        lhs,
        2.0 * s.value.min(st.value),
        2.0,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralVariant {
    /// `||int [f - f(a)] dg||_{q-TV} <= D ||f||_{p-TV}^(p-p/q) osc_f^(1+p/q-p) ||g||_{q-TV}`.
    PtvTheorem,
    /// The same left side against `E ||f||_{p-TV} ||g||_{q-TV}`.
    PtvCorollary,
    /// `||int f dg||_{q-var} <= (C ||f||_{p-var}^(p-p/q) osc_f^(1+p/q-p) + ||f||_inf) ||g||_{q-var}`.
    PvarRemark,
}

impl IntegralVariant {
    pub const ALL: [IntegralVariant; 3] = [
        IntegralVariant::PtvTheorem,
        IntegralVariant::PtvCorollary,
        IntegralVariant::PvarRemark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntegralVariant::PtvTheorem => "ptv-theorem",
            IntegralVariant::PtvCorollary => "ptv-corollary",
            IntegralVariant::PvarRemark => "pvar-remark",
        }
    }
}

pub fn integral_norm_check(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
    variant: IntegralVariant,
) -> Result<BoundReport> {
    check_young(p, q)?;
    let ef = 1.0 + p / q - p;
    let osc = f.oscillation();
    match variant {
        IntegralVariant::PtvTheorem | IntegralVariant::PtvCorollary => {
            let centred = f.shift(-f.first_value())?;
            let lhs = p_tv_seminorm(&indefinite_integral(&centred, g)?, q)?;
            let nf = p_tv_seminorm(f, p)?;
            let ng = p_tv_seminorm(g, q)?;
            let k = d_e_constants(p, q)?;
            let (constant, rhs) = if variant == IntegralVariant::PtvTheorem {
                (k.d, k.d * nf.powf(p - p / q) * osc.powf(ef) * ng)
            } else {
                (k.e, k.e * nf * ng)
            };
            Ok(BoundReport::new(variant.name(), lhs, rhs, constant))
        }
        IntegralVariant::PvarRemark => {
            let lhs = p_variation_norm(&indefinite_integral(f, g)?, q)?;
            let c = loeve_young_constant(p, q)?;
            let rhs = (c * p_variation_norm(f, p)?.powf(p - p / q) * osc.powf(ef) + f.sup_norm())
                * p_variation_norm(g, q)?;
            Ok(BoundReport::new(variant.name(), lhs, rhs, c))
        }
    }
}

/// `TV^gamma(int [f - f(a)] dg) <= sum_k 2^k delta_{k-1} TV^{eps_k}(g)` with
/// `gamma = 2 sum_k 2^k eps_k TV^{delta_k}(f)`, using `eta` as `delta` and
/// `theta` as `eps`.
pub fn lemma_gamma_check(
    f: &SampledPath,
    g: &SampledPath,
    ladder: &TruncationLadder,
) -> Result<BoundReport> {
    check_spans(f, g)?;
    let eta_m1 = check_anchor(ladder.eta_minus1, f.osc_from_start())?;
    let (fv, gv) = (f.values(), g.values());
    let mut gamma = 0.0;
    let mut rhs = 0.0;
    for k in 0..ladder.len() {
        let w = (k as f64).exp2();
        let eta_prev = if k == 0 { eta_m1 } else { ladder.etas[k - 1] };
        gamma += weighted_tv(w * ladder.thetas[k], fv, ladder.etas[k]);
        rhs += weighted_tv(w * eta_prev, gv, ladder.thetas[k]);
    }
    gamma *= 2.0;
    let centred = f.shift(-f.first_value())?;
    let lhs = tv_values(indefinite_integral(&centred, g)?.values(), gamma);
    Ok(BoundReport::new("tv-gamma", lhs, rhs, gamma))
}
