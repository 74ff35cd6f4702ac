//! Solvers for `y(t) = y0 + int_a^t F(y(s)) dx(s)` driven by sampled paths.

use std::fmt;
use std::sync::Arc;

use crate::bound::BoundReport;
use crate::error::{Error, Result};
use crate::norms::p_tv_seminorm;
use crate::path::{Interpolation, SampledPath};
use crate::young::d_e_constants;

pub const BLOWUP_GUARD: f64 = 1e12;
pub const DAMPING: f64 = 0.5;
const FIXED_POINT_MAX_ITER: usize = 1_000_000;
const FIXED_POINT_REL_TOL: f64 = 1e-12;
const QUOTIENT_CHECK_TOL: f64 = 1e-9;

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type QuotientFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// `|F(u) - F(v)| <= K |u - v|^alpha`.
    Alpha,
    /// `F(y) - F(x) = G(y, x)(y - x)` with `G` alpha-Hölder.
    OnePlusAlpha,
}

/// `G(y, x)` together with its Hölder constant and sup bound.
#[derive(Clone)]
pub struct Quotient {
    pub eval: QuotientFn,
    pub lipschitz: f64,
    pub sup: f64,
}

#[derive(Clone)]
pub struct LipschitzField {
    name: String,
    eval: ScalarFn,
    alpha: f64,
    order: Regularity,
    lipschitz: f64,
    f_at_zero: f64,
    sup_norm: Option<f64>,
    quotient: Option<Quotient>,
}

impl fmt::Debug for LipschitzField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LipschitzField")
            .field("name", &self.name)
            .field("alpha", &self.alpha)
            .field("order", &self.order)
            .field("lipschitz", &self.lipschitz)
            .field("sup_norm", &self.sup_norm)
            .finish_non_exhaustive()
    }
}

fn check_field_params(alpha: f64, k: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::BadParameter(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    if !(k >= 0.0 && k.is_finite()) {
        return Err(Error::BadParameter(format!(
            "K must be finite and >= 0, got {k}"
        )));
    }
    Ok(())
}

impl LipschitzField {
    /// A globally alpha-Hölder field.
    pub fn alpha(name: &str, eval: ScalarFn, alpha: f64, k: f64) -> Result<Self> {
        check_field_params(alpha, k)?;
        Ok(LipschitzField {
            name: name.to_string(),
            f_at_zero: eval(0.0).abs(),
            eval,
            alpha,
            order: Regularity::Alpha,
            lipschitz: k,
            sup_norm: None,
            quotient: None,
        })
    }

    /// A Lipschitz field whose quotient `G` is alpha-Hölder. The division
    /// identity is checked on a probe grid.
    pub fn one_plus_alpha(
        name: &str,
        eval: ScalarFn,
        alpha: f64,
        k: f64,
        quotient: Quotient,
    ) -> Result<Self> {
        check_field_params(alpha, k)?;
        check_field_params(alpha, quotient.lipschitz)?;
        let probes: Vec<f64> = (0..33).map(|i| -4.0 + 0.25 * i as f64).collect();
        for &y in &probes {
            for &x in &probes {
                let lhs = eval(y) - eval(x);
                let rhs = (quotient.eval)(y, x) * (y - x);
                if (lhs - rhs).abs() > QUOTIENT_CHECK_TOL * (1.0 + lhs.abs()) {
                    return Err(Error::BadParameter(format!(
                        "quotient of `{name}` fails F(y) - F(x) = G(y, x)(y - x) at ({y}, {x})"
                    )));
                }
            }
        }
        Ok(LipschitzField {
            name: name.to_string(),
            f_at_zero: eval(0.0).abs(),
            eval,
            alpha,
            order: Regularity::OnePlusAlpha,
            lipschitz: k,
            sup_norm: None,
            quotient: Some(quotient),
        })
    }

    pub fn with_sup_norm(mut self, sup: f64) -> Self {
        self.sup_norm = Some(sup);
        self
    }

    /// Built-in fields: `identity`, `sin`, `sqrt-abs`, `zero`, `constant` (value 1)
    /// and `constant:<c>`.
    pub fn catalog(name: &str) -> Result<Self> {
        match name {
            "identity" => Self::one_plus_alpha(
                name,
                Arc::new(|u| u),
                1.0,
                1.0,
                Quotient {
                    eval: Arc::new(|_, _| 1.0),
                    lipschitz: 0.0,
                    sup: 1.0,
                },
            ),
            "sin" => Ok(Self::one_plus_alpha(
                name,
                Arc::new(f64::sin),
                1.0,
                1.0,
                Quotient {
                    eval: Arc::new(sin_quotient),
                    lipschitz: 1.0,
                    sup: 1.0,
                },
            )?
            .with_sup_norm(1.0)),
            "sqrt-abs" => Self::alpha(name, Arc::new(|u: f64| u.abs().sqrt()), 0.5, 1.0),
            "zero" => Self::constant(name, 0.0),
            "constant" => Self::constant(name, 1.0),
            _ => match name.strip_prefix("constant:").map(str::parse::<f64>) {
                Some(Ok(c)) if c.is_finite() => Self::constant(name, c),
                _ => Err(Error::BadParameter(format!("unknown field `{name}`"))),
            },
        }
    }

    fn constant(name: &str, c: f64) -> Result<Self> {
        Ok(Self::one_plus_alpha(
            name,
            Arc::new(move |_| c),
            1.0,
            0.0,
            Quotient {
                eval: Arc::new(|_, _| 0.0),
                lipschitz: 0.0,
                sup: 0.0,
            },
        )?
        .with_sup_norm(c.abs()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.eval)(u)
    }

    pub fn alpha_exponent(&self) -> f64 {
        self.alpha
    }

    pub fn order(&self) -> Regularity {
        self.order
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn f_at_zero(&self) -> f64 {
        self.f_at_zero
    }

    pub fn quotient(&self) -> Option<&Quotient> {
        self.quotient.as_ref()
    }

    pub fn declared_sup_norm(&self) -> Option<f64> {
        self.sup_norm
    }

    /// Declared `||F||_inf`, or the max of `|F|` on a 2001-point grid of `[-r, r]`.
    pub fn sup_norm_on(&self, r: f64) -> f64 {
        self.sup_norm.unwrap_or_else(|| {
            (0..=2000)
                .map(|i| self.eval(-r + r * i as f64 / 1000.0).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Exponent and constant of `u -> F(u)` as an alpha-Hölder map.
    fn holder(&self) -> (f64, f64) {
        match self.order {
            Regularity::Alpha => (self.alpha, self.lipschitz),
            Regularity::OnePlusAlpha => (1.0, self.lipschitz),
        }
    }
}

/// `(sin y - sin x) / (y - x) = cos(m) sin(h) / h` with `m = (x+y)/2`, `h = (y-x)/2`.
fn sin_quotient(y: f64, x: f64) -> f64 {
    let h = 0.5 * (y - x);
    let m = 0.5 * (x + y);
    let sinc = if h.abs() < 1e-4 {
        1.0 - h * h / 6.0
    } else {
        h.sin() / h
    };
    m.cos() * sinc
}

/// Max of `|F(u) - F(v)| / |u - v|^alpha` over a uniform grid of `[-radius, radius]` plus 0.
pub fn estimate_lipschitz(field: &LipschitzField, radius: f64, probes: usize) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::BadParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    if probes < 2 {
        return Err(Error::BadCount {
            count: probes,
            min: 2,
        });
    }
    let mut grid: Vec<f64> = (0..probes)
        .map(|i| -radius + 2.0 * radius * i as f64 / (probes - 1) as f64)
        .collect();
    grid.push(0.0);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let (alpha, _) = field.holder();
    let fv: Vec<f64> = grid.iter().map(|&u| field.eval(u)).collect();
    let mut best = 0.0_f64;
    for i in 0..grid.len() {
        for j in i + 1..grid.len() {
            best = best.max((fv[j] - fv[i]).abs() / (grid[j] - grid[i]).powf(alpha));
        }
    }
    Ok(best)
}

/// Least positive solution of `R = A R^alpha + B` by monotone iteration from `B`.
pub fn fixed_point_radius(a: f64, b: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::BadAlpha(alpha));
    }
    if !(a >= 0.0 && b >= 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::BadParameter(format!(
            "need finite A, B >= 0, got A = {a}, B = {b}"
        )));
    }
    if a == 0.0 {
        return Ok(b);
    }
    if b == 0.0 {
        // Limit of the iteration started at 0+.
        return Ok(a.powf(1.0 / (1.0 - alpha)));
    }
    let mut r = b;
    for _ in 0..FIXED_POINT_MAX_ITER {
        let next = a * r.powf(alpha) + b;
        if (next - r).abs() <= FIXED_POINT_REL_TOL * next {
            return Ok(next);
        }
        r = next;
    }
    Err(Error::NoConvergence {
        what: "fixed-point radius",
        iterations: FIXED_POINT_MAX_ITER,
    })
}

/// `E_{p/alpha, p}` of the indefinite-integral estimate.
fn e_constant(p_outer: f64, p: f64) -> Result<f64> {
    Ok(d_e_constants(p_outer, p)?.e)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub end: f64,
    pub end_index: usize,
    /// `false` when even the single-step window misses the contraction conditions.
    pub contractive: bool,
}

/// Largest `j` in `first..n` with `ok(j)`, assuming `ok` is monotone
/// (true then false). Returns `None` when `ok(first)` fails.
fn gallop(first: usize, n: usize, ok: impl Fn(usize) -> Result<bool>) -> Result<Option<usize>> {
    if !ok(first)? {
        return Ok(None);
    }
    let mut good = first;
    let mut step = 1;
    let mut bad = n;
    while good + step < n {
        if ok(good + step)? {
            good += step;
            step *= 2;
        } else {
            bad = good + step;
            break;
        }
    }
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        if ok(mid)? {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Ok(Some(good))
}

/// The contraction conditions on `[start, c]` for a field of order `1 + alpha`:
/// `E_{p,p} K ||x||` <= 1/2 and `4 E_{p/alpha,p} (||G||_inf + 4 K_G R) ||x|| < 1`.
struct Contraction {
    e_pp: f64,
    e_ap: f64,
    k: f64,
    g_sup: f64,
    k_g: f64,
    f_sup: f64,
    radius: Option<f64>,
}

impl Contraction {
    fn new(field: &LipschitzField, p: f64, radius: Option<f64>, f_sup: f64) -> Result<Self> {
        let e_pp = e_constant(p, p)?;
        let (e_ap, g_sup, k_g) = match (field.order, field.quotient()) {
            (Regularity::OnePlusAlpha, Some(qt)) => {
                (e_constant(p / field.alpha, p)?, qt.sup, qt.lipschitz)
            }
            (Regularity::Alpha, _) if field.alpha == 1.0 => (0.0, 0.0, 0.0),
            _ => {
                return Err(Error::BadParameter(format!(
                    "field `{}` has no contraction window (order alpha < 1)",
                    field.name
                )))
            }
        };
        Ok(Contraction {
            e_pp,
            e_ap,
            k: field.lipschitz,
            g_sup,
            k_g,
            f_sup,
            radius,
        })
    }

    fn holds(&self, norm_x: f64) -> bool {
        let r = self.radius.unwrap_or(2.0 * self.f_sup * norm_x);
        self.e_pp * self.k * norm_x <= 0.5
            && 4.0 * self.e_ap * (self.g_sup + 4.0 * self.k_g * r) * norm_x < 1.0
    }
}

pub fn contraction_window(
    x: &SampledPath,
    field: &LipschitzField,
    start: f64,
    p: f64,
    radius: Option<f64>,
) -> Result<Window> {
    let f_sup = field.sup_norm_on(10.0);
    contraction_window_inner(x, start, p, &Contraction::new(field, p, radius, f_sup)?)
}

fn contraction_window_inner(
    x: &SampledPath,
    start: f64,
    p: f64,
    c: &Contraction,
) -> Result<Window> {
    if !(start >= x.start() && start < x.end()) {
        return Err(Error::OutOfSpan {
            c: start,
            d: start,
            a: x.start(),
            b: x.end(),
        });
    }
    let times = x.times();
    let first = times.partition_point(|&t| t <= start);
    let best = gallop(first, times.len(), |j| {
        Ok(c.holds(p_tv_seminorm(&x.restrict(start, times[j])?, p)?))
    })?;
    Ok(match best {
        Some(j) => Window {
            end: times[j],
            end_index: j,
            contractive: true,
        },
        None => Window {
            end: times[first],
            end_index: first,
            contractive: false,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Splitting {
    pub delta: f64,
    /// `true` when some single-step window already reaches `eps`.
    pub no_splitting: bool,
}

/// Largest sample-aligned `delta` such that every sample-aligned window of
/// length `<= delta` has p-TV seminorm at most `eps`.
pub fn splitting_mesh(x: &SampledPath, p: f64, eps: f64) -> Result<Splitting> {
    if !(eps > 0.0) {
        return Err(Error::BadParameter(format!(
            "eps must be positive, got {eps}"
        )));
    }
    let t = x.times();
    let n = t.len();
    let passes =
        |i: usize, j: usize| -> Result<bool> { Ok(p_tv_seminorm(&x.slice(i, j)?, p)? <= eps) };
    // Windows shrink as the left end advances, so the first failing right end
    // is non-decreasing in the left end.
    let mut min_bad = f64::INFINITY;
    let mut single_fail = false;
    let mut j = 1;
    for i in 0..n.saturating_sub(1) {
        j = j.max(i + 1);
        while j < n && passes(i, j)? {
            j += 1;
        }
        if j < n {
            min_bad = min_bad.min(t[j] - t[i]);
            single_fail |= j == i + 1;
        }
    }
    if single_fail {
        return Ok(Splitting {
            delta: 0.0,
            no_splitting: true,
        });
    }
    if min_bad.is_infinite() {
        return Ok(Splitting {
            delta: x.end() - x.start(),
            no_splitting: false,
        });
    }
    let mut delta = 0.0_f64;
    for i in 0..n {
        let k = t.partition_point(|&s| s - t[i] < min_bad);
        if k > i + 1 {
            delta = delta.max(t[k - 1] - t[i]);
        }
    }
    Ok(Splitting {
        delta,
        no_splitting: false,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scheme {
    /// `(F(y_i) + F(y_{i+1})) / 2 * dx_i`, the exact integral of the linear interpolants.
    #[default]
    Trapezoid,
    /// `F(y_i) dx_i`.
    LeftPoint,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PicardOptions {
    pub p: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub scheme: Scheme,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OdeSolution {
    /// A solution; uniqueness is not claimed for fields of order alpha < 1.
    pub path: SampledPath,
    pub iterations: Vec<usize>,
    pub windows: Vec<(f64, f64)>,
    pub converged: bool,
    pub residual: f64,
    /// A-priori bound on `|y(a)| + ||y||_{p-TV}` (order alpha < 1 only).
    pub radius: Option<f64>,
    /// Windows that needed the damped iteration.
    pub damped_windows: usize,
    pub warnings: Vec<String>,
}

pub fn picard_solve(
    x: &SampledPath,
    field: &LipschitzField,
    y0: f64,
    p: f64,
    tol: f64,
    max_iter: usize,
) -> Result<OdeSolution> {
    picard_solve_with(
        x,
        field,
        y0,
        PicardOptions {
            p,
            tol,
            max_iter,
            scheme: Scheme::default(),
        },
    )
}

/// `T(y)` on grid indices `s..=e`, started from `y_start`.
fn picard_map(
    f: &LipschitzField,
    dx: &[f64],
    y: &[f64],
    y_start: f64,
    scheme: Scheme,
    out: &mut Vec<f64>,
) {
    out.clear();
    out.push(y_start);
    let mut acc = y_start;
    let mut f_prev = f.eval(y[0]);
    for k in 0..dx.len() {
        let f_next = f.eval(y[k + 1]);
        acc += match scheme {
            Scheme::Trapezoid => 0.5 * (f_prev + f_next) * dx[k],
            Scheme::LeftPoint => f_prev * dx[k],
        };
        out.push(acc);
        f_prev = f_next;
    }
}

struct WindowRun {
    values: Vec<f64>,
    iterations: usize,
    damped: bool,
}

fn solve_window(
    f: &LipschitzField,
    times: &[f64],
    dx: &[f64],
    y_start: f64,
    opts: &PicardOptions,
) -> Result<WindowRun> {
    let mut y = vec![y_start; dx.len() + 1];
    let mut ty = Vec::with_capacity(y.len());
    let mut iterations = 0;
    for damped in [false, true] {
        for _ in 0..opts.max_iter {
            iterations += 1;
            picard_map(f, dx, &y, y_start, opts.scheme, &mut ty);
            let mut change = 0.0_f64;
            let mut scale = 1.0_f64;
            for (k, (yk, &tk)) in y.iter_mut().zip(&ty).enumerate() {
                if !(tk.abs() <= BLOWUP_GUARD) {
                    return Err(Error::BlowupSuspected { time: times[k] });
                }
                change = change.max((tk - *yk).abs());
                scale = scale.max(tk.abs());
                *yk = if damped {
                    (1.0 - DAMPING) * *yk + DAMPING * tk
                } else {
                    tk
                };
            }
            // Iterate well below `tol` so the residual of the chained solution stays under it.
            if change <= (1e-3 * opts.tol).max(1e3 * f64::EPSILON * scale) {
                return Ok(WindowRun {
                    values: y,
                    iterations,
                    damped,
                });
            }
        }
    }
    Err(Error::NoConvergence {
        what: "Picard iteration",
        iterations,
    })
}

pub fn picard_solve_with(
    x: &SampledPath,
    field: &LipschitzField,
    y0: f64,
    opts: PicardOptions,
) -> Result<OdeSolution> {
    if x.mode() != Interpolation::PiecewiseLinear {
        return Err(Error::BadParameter(
            "the driver must be piecewise linear".into(),
        ));
    }
    let p = opts.p;
    if !(p > 1.0 && p < 2.0) {
        return Err(Error::BadExponent {
            p,
            reason: "the driver exponent must lie in (1, 2)",
        });
    }
    if !(opts.tol > 0.0) || opts.max_iter == 0 {
        return Err(Error::BadParameter("need tol > 0 and max_iter >= 1".into()));
    }
    if !y0.is_finite() {
        return Err(Error::BadParameter(format!(
            "initial value must be finite, got {y0}"
        )));
    }
    let times = x.times();
    let n = times.len();
    let dx = x.increments();
    let mut warnings = Vec::new();
    let mut radius = None;
    let probe_radius = 10.0 * (y0.abs() + 1.0);
    let estimate = estimate_lipschitz(field, probe_radius, 65)?;
    if estimate > field.lipschitz * (1.0 + 1e-9) {
        warnings.push(format!(
            "probed Holder constant {estimate} exceeds the declared K = {}",
            field.lipschitz
        ));
    }

    // Window boundaries as sample indices.
    let mut bounds = vec![0usize];
    if n > 1 {
        match field.order {
            Regularity::OnePlusAlpha => {
                let f_sup = field.sup_norm_on(probe_radius);
                let c = Contraction::new(field, p, None, f_sup)?;
                let mut s = 0;
                while s + 1 < n {
                    let w = contraction_window_inner(x, times[s], p, &c)?;
                    if !w.contractive {
                        warnings.push(format!(
                            "single-step window at t = {} is not contractive",
                            times[s]
                        ));
                    }
                    s = w.end_index;
                    bounds.push(s);
                }
            }
            Regularity::Alpha if field.alpha < 1.0 => {
                let norm_x = p_tv_seminorm(x, p)?;
                let e = e_constant(p / field.alpha, p)?;
                let a = (e + 1.0) * field.lipschitz * norm_x;
                let b = y0.abs() + field.f_at_zero * norm_x;
                radius = Some(fixed_point_radius(a, b, field.alpha)?);
                bounds.push(n - 1);
            }
            Regularity::Alpha => {
                let e = e_constant(p, p)?;
                let k = field.lipschitz;
                let split = if k == 0.0 {
                    Splitting {
                        delta: x.end() - x.start(),
                        no_splitting: false,
                    }
                } else {
                    splitting_mesh(x, p, (1.0 - 1e-12) / ((e + 1.0) * k))?
                };
                if split.no_splitting {
                    return Err(Error::NoSplitting {
                        eps: 1.0 / ((e + 1.0) * k),
                    });
                }
                let mut s = 0;
                while s + 1 < n {
                    let k = times.partition_point(|&t| t - times[s] <= split.delta);
                    s = (k - 1).max(s + 1);
                    bounds.push(s);
                }
            }
        }
    }

    let mut values = vec![y0];
    let mut iterations = Vec::new();
    let mut windows = Vec::new();
    let mut damped_windows = 0;
    for w in bounds.windows(2) {
        let (s, e) = (w[0], w[1]);
        let y_start = *values.last().unwrap();
        let run = solve_window(field, &times[s..=e], &dx[s..e], y_start, &opts)?;
        values.extend_from_slice(&run.values[1..]);
        iterations.push(run.iterations);
        windows.push((times[s], times[e]));
        if run.damped {
            damped_windows += 1;
        }
    }

    let mut ty = Vec::with_capacity(n);
    picard_map(field, &dx, &values, y0, opts.scheme, &mut ty);
    let residual = values
        .iter()
        .zip(&ty)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(OdeSolution {
        path: SampledPath::linear(times.to_vec(), values)?,
        iterations,
        windows,
        converged: residual < opts.tol,
        residual,
        radius,
        damped_windows,
        warnings,
    })
}

/// `||F o f||_{p/alpha-TV} <= K ||f||_{p-TV}^alpha`.
pub fn composition_norm_check(
    f: &SampledPath,
    field: &LipschitzField,
    p: f64,
) -> Result<BoundReport> {
    let (alpha, k) = field.holder();
    let composed = f.map_values(|u| field.eval(u))?;
    let lhs = p_tv_seminorm(&composed, p / alpha)?;
    let rhs = k * p_tv_seminorm(f, p)?.powf(alpha);
    Ok(BoundReport::new("composition", lhs, rhs, k))
}

/// Difference bound for a field with quotient `G`:
/// `||F(f) - F(g)||_{p/alpha-TV} <= 2 G^(1-alpha) osc(f-g)^(1-alpha) ||f-g||^alpha
///  + 4 K_G (||f||^alpha + ||g||^alpha) ||f-g||_inf`.
pub fn quotient_difference_check(
    f: &SampledPath,
    g: &SampledPath,
    field: &LipschitzField,
    p: f64,
) -> Result<BoundReport> {
    let qt = field
        .quotient()
        .ok_or_else(|| Error::BadParameter(format!("field `{}` has no quotient", field.name)))?;
    let alpha = field.alpha;
    let diff = f.sub(g)?;
    let fd = f
        .map_values(|u| field.eval(u))?
        .sub(&g.map_values(|u| field.eval(u))?)?;
    let lhs = p_tv_seminorm(&fd, p / alpha)?;
    let first = 2.0
        * qt.sup.powf(1.0 - alpha)
        * diff.oscillation().powf(1.0 - alpha)
        * p_tv_seminorm(&diff, p)?.powf(alpha);
    let second = 4.0
        * qt.lipschitz
        * (p_tv_seminorm(f, p)?.powf(alpha) + p_tv_seminorm(g, p)?.powf(alpha))
        * diff.sup_norm();
    Ok(BoundReport::new(
        "quotient-difference",
        lhs,
        first + second,
        qt.lipschitz,
    ))
}

/// Both sides of `(K|x|^alpha - delta)_+ <= K^(1/alpha) delta^(1-1/alpha) (|x| - (delta/K)^(1/alpha))_+`.
pub fn elementary_inequality(x: f64, delta: f64, k: f64, alpha: f64) -> (f64, f64) {
    let lhs = (k * x.abs().powf(alpha) - delta).max(0.0);
    let rhs = k.powf(1.0 / alpha)
        * delta.powf(1.0 - 1.0 / alpha)
        * (x.abs() - (delta / k).powf(1.0 / alpha)).max(0.0);
    (lhs, rhs)
}
