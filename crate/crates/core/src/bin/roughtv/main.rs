#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod report;
mod svg;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use roughtv::norms::{p_variation, tv_p_full_norm};
use roughtv::ode::{picard_solve_with, LipschitzField, PicardOptions, Scheme};
use roughtv::path::{self, read_csv, write_csv};
use roughtv::tv::truncated_variation;
use roughtv::young::{
    corollary_min_check, integral_norm_check, loeve_young_check, IntegralVariant, NormKind,
    YoungForm,
};
use roughtv::{BoundReport, Error, Interpolation, SampledPath};

use report::{bound_json, Report};

#[derive(Parser)]
#[command(
    name = "roughtv",
    version,
    about = "Truncated variation, p-TV norms and Young integration on sampled paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a path and write it as CSV.
    Gen(GenArgs),
    /// Truncated variation at one level.
    Tv(TvArgs),
    /// p-variation.
    Pvar(ExpArgs),
    /// p-TV seminorm, full norm and p-variation norm.
    Norm(ExpArgs),
    /// Check the Loeve-Young type inequalities on a pair of paths.
    Bounds(BoundsArgs),
    /// Solve y = y0 + int F(y) dx by Picard iteration.
    Solve(SolveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Linear,
    Step,
}

impl From<Mode> for Interpolation {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Linear => Interpolation::PiecewiseLinear,
            Mode::Step => Interpolation::CadlagStep,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct Output {
    /// Output file; defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Brownian,
    Zigzag,
    Fx,
    Named,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 1024)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    horizon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.5)]
    p: f64,
    #[arg(long, default_value_t = 6)]
    levels: u32,
    /// Jump size of the `fx` counterexample.
    #[arg(long, default_value_t = 3.0)]
    x: f64,
    /// `identity`, `tent` or `constant` for the `named` kind.
    #[arg(long, default_value = "identity")]
    name: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct InputArgs {
    /// CSV file with header `t,value`.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "linear")]
    mode: Mode,
}

#[derive(Args)]
struct TvArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    delta: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ExpArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BoundsArgs {
    /// Integrand CSV. Without --f/--g a Brownian pair is drawn from --seed.
    #[arg(long)]
    f: Option<PathBuf>,
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "linear")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 128)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    q: f64,
    /// `all`, `ptv`, `pvar`, `min-s`, or one variant such as `ptv-left` or `ptv-theorem`.
    #[arg(long, default_value = "all")]
    variant: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Trapezoid,
    Left,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// identity, sin, sqrt-abs, zero, constant or constant:<c>.
    #[arg(long)]
    field: String,
    #[arg(long)]
    y0: f64,
    #[arg(long, default_value_t = 1.5)]
    p: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 500)]
    max_iter: usize,
    #[arg(long, value_enum, default_value = "trapezoid")]
    scheme: SchemeArg,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(io) => Failure::Io(io),
            other => Failure::Lib(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("ROUGHTV_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
    {
        roughtv::exec::configure_threads(n);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Tv(a) => cmd_tv(a),
        Command::Pvar(a) => cmd_exp(a, "pvar"),
        Command::Norm(a) => cmd_exp(a, "norm"),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Solve(a) => cmd_solve(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(3)
        }
    }
}

fn create(path: &Path) -> io::Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn load(path: &Path, mode: Mode) -> Result<SampledPath, Failure> {
    let file = File::open(path)?;
    Ok(read_csv(BufReader::new(file), mode.into())?)
}

/// JSON reports go to `--out` when the format is JSON, otherwise to stdout.
fn emit(report: &Report, output: &Output) -> io::Result<()> {
    match (&output.out, output.format) {
        (Some(path), None | Some(Format::Json)) => {
            let mut w = create(path)?;
            report.write_to(&mut w)?;
            w.flush()
        }
        _ => report.write_to(io::stdout().lock()),
    }
}

fn write_path_csv(p: &SampledPath, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut w = create(path)?;
            write_csv(&mut w, p)?;
            w.flush()?;
        }
        None => write_csv(io::stdout().lock(), p)?,
    }
    Ok(())
}

fn mode_name(m: Interpolation) -> &'static str {
    match m {
        Interpolation::PiecewiseLinear => "linear",
        Interpolation::CadlagStep => "step",
    }
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let mut rep = Report::new("gen");
    let p = match a.kind {
        GenKind::Brownian => {
            rep.param("kind", "brownian")
                .param("n", a.n)
                .param("horizon", a.horizon)
                .param("seed", a.seed);
            path::gen_brownian(a.n, a.horizon, a.seed)?
        }
        GenKind::Zigzag => {
            rep.param("kind", "zigzag")
                .param("p", a.p)
                .param("levels", a.levels);
            path::gen_zigzag(a.p, a.levels)?
        }
        GenKind::Fx => {
            rep.param("kind", "fx").param("x", a.x);
            path::gen_counterexample_fx(a.x)?
        }
        GenKind::Named => {
            rep.param("kind", "named")
                .param("name", a.name.as_str())
                .param("n", a.n)
                .param("horizon", a.horizon);
            named_path(&a.name, a.n, a.horizon)?
        }
    };
    rep.result("samples", p.len())
        .result("start", p.start())
        .result("end", p.end())
        .diag("mode", mode_name(p.mode()))
        .diag("jump_times", p.jump_times());
    if a.output.format == Some(Format::Json) {
        emit(
            &rep,
            &Output {
                out: a.output.out,
                format: Some(Format::Json),
            },
        )?;
        return Ok(true);
    }
    write_path_csv(&p, &a.output.out)?;
    if a.output.out.is_some() {
        rep.write_to(io::stdout().lock())?;
    }
    Ok(true)
}

fn named_path(name: &str, n: usize, horizon: f64) -> roughtv::Result<SampledPath> {
    match name {
        "identity" => path::gen_identity(n, horizon),
        "tent" => SampledPath::linear(vec![0.0, 0.5 * horizon, horizon], vec![0.0, 1.0, 0.0]),
        "constant" => SampledPath::linear(vec![0.0, horizon], vec![1.0, 1.0]),
        other => Err(Error::BadParameter(format!("unknown named path `{other}`"))),
    }
}

fn input_params(rep: &mut Report, input: &InputArgs) {
    rep.param("input", input.input.display().to_string())
        .param("mode", mode_name(input.mode.into()));
}

fn cmd_tv(a: TvArgs) -> CmdResult {
    let f = load(&a.input.input, a.input.mode)?;
    let mut rep = Report::new("tv");
    input_params(&mut rep, &a.input);
    rep.param("delta", a.delta);
    rep.result("tv", truncated_variation(&f, a.delta)?)
        .diag("samples", f.len())
        .diag("osc", f.oscillation());
    emit(&rep, &a.output)?;
    Ok(true)
}

fn cmd_exp(a: ExpArgs, which: &'static str) -> CmdResult {
    let f = load(&a.input.input, a.input.mode)?;
    let mut rep = Report::new(which);
    input_params(&mut rep, &a.input);
    rep.param("p", a.p);
    if which == "pvar" {
        let v = p_variation(&f, a.p)?;
        rep.result("pvar", v).result("pvar_norm", v.powf(1.0 / a.p));
    } else {
        let r = tv_p_full_norm(&f, a.p)?;
        rep.result("seminorm", r.seminorm)
            .result("argmax_delta", r.argmax_delta)
            .result("full_norm", r.full_norm)
            .result("pvar_norm", r.pvar)
            .result("osc", r.osc);
    }
    rep.diag("samples", f.len());
    emit(&rep, &a.output)?;
    Ok(true)
}

/// One selected check: its report and whether it counts toward the exit status.
enum Check {
    Young(NormKind, YoungForm),
    Integral(IntegralVariant),
    MinS,
}

impl Check {
    fn asserted(&self) -> bool {
        !matches!(self, Check::Integral(IntegralVariant::PtvCorollary))
    }
}

fn select_checks(variant: &str) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for norm in [NormKind::PVar, NormKind::PTv] {
        for form in YoungForm::ALL {
            let name = format!("{}-{}", norm.name(), form.name());
            if variant == "all" || variant == norm.name() || variant == name {
                out.push(Check::Young(norm, form));
            }
        }
    }
    for iv in IntegralVariant::ALL {
        let family = if iv == IntegralVariant::PvarRemark {
            "pvar"
        } else {
            "ptv"
        };
        if variant == "all" || variant == family || variant == iv.name() {
            out.push(Check::Integral(iv));
        }
    }
    if variant == "all" || variant == "min-s" {
        out.push(Check::MinS);
    }
    if out.is_empty() {
        return Err(Error::BadParameter(format!("unknown variant `{variant}`")).into());
    }
    Ok(out)
}

fn run_checks(
    f: &SampledPath,
    g: &SampledPath,
    p: f64,
    q: f64,
    checks: &[Check],
) -> roughtv::Result<Vec<(BoundReport, bool)>> {
    let mut out = Vec::new();
    for c in checks {
        match c {
            Check::Young(norm, form) => {
                out.push((loeve_young_check(f, g, p, q, *norm, *form)?, true))
            }
            Check::Integral(iv) => out.push((integral_norm_check(f, g, p, q, *iv)?, c.asserted())),
            Check::MinS => {
                // Eight tags spread over the samples.
                let n = f.len();
                for k in 0..8 {
                    let xi = f.times()[k * (n - 1) / 7];
                    let mut r = corollary_min_check(f, g, p, q, xi)?;
                    r.variant = format!("min-s@{xi}");
                    out.push((r, true));
                }
            }
        }
    }
    Ok(out)
}

fn cmd_bounds(a: BoundsArgs) -> CmdResult {
    let mut rep = Report::new("bounds");
    let (f, g) = match (&a.f, &a.g) {
        (Some(fp), Some(gp)) => {
            rep.param("f", fp.display().to_string())
                .param("g", gp.display().to_string())
                .param("mode", mode_name(a.mode.into()));
            (load(fp, a.mode)?, load(gp, a.mode)?)
        }
        (None, None) => {
            rep.param("seed", a.seed).param("n", a.n);
            (
                path::gen_brownian(a.n, 1.0, a.seed)?,
                path::gen_brownian(a.n, 1.0, a.seed.wrapping_add(1))?,
            )
        }
        _ => return Err(Error::BadParameter("give both --f and --g, or neither".into()).into()),
    };
    rep.param("p", a.p)
        .param("q", a.q)
        .param("variant", a.variant.as_str());
    let checks = select_checks(&a.variant)?;
    let reports = run_checks(&f, &g, a.p, a.q, &checks)?;
    let all_pass = reports.iter().all(|(r, asserted)| r.pass || !asserted);
    let list: Vec<Value> = reports
        .iter()
        .map(|(r, asserted)| bound_json(r, *asserted))
        .collect();
    rep.result("checks", list)
        .result("all_asserted_pass", all_pass);

    if a.output.format == Some(Format::Svg) {
        let out =
            a.output.out.as_ref().ok_or_else(|| {
                Failure::Lib(Error::BadParameter("--format svg needs --out".into()))
            })?;
        let svg = sweep_svg(&f, &g, &checks)?;
        let mut w = create(out)?;
        w.write_all(svg.as_bytes())?;
        w.flush()?;
        rep.diag("svg", out.display().to_string());
        rep.write_to(io::stdout().lock())?;
    } else {
        emit(&rep, &a.output)?;
    }
    Ok(all_pass)
}

/// log10 of both sides of the first Loeve-Young check over p = q in [1.05, 1.95].
fn sweep_svg(f: &SampledPath, g: &SampledPath, checks: &[Check]) -> roughtv::Result<String> {
    let (norm, form) = checks
        .iter()
        .find_map(|c| match c {
            Check::Young(n, fm) => Some((*n, *fm)),
            _ => None,
        })
        .unwrap_or((NormKind::PTv, YoungForm::Left));
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..19 {
        let p = 1.05 + 0.05 * i as f64;
        let r = loeve_young_check(f, g, p, p, norm, form)?;
        lhs.push((p, r.lhs.log10()));
        rhs.push((p, r.rhs.log10()));
    }
    let title = format!("{}-{} bound, p = q", norm.name(), form.name());
    Ok(svg::line_chart(
        &title,
        "p",
        "log10 value",
        &[
            svg::Series {
                label: "lhs",
                color: "#1f77b4",
                points: lhs,
            },
            svg::Series {
                label: "rhs",
                color: "#d62728",
                points: rhs,
            },
        ],
    ))
}

fn cmd_solve(a: SolveArgs) -> CmdResult {
    let x = load(&a.input.input, a.input.mode)?;
    let field = LipschitzField::catalog(&a.field)?;
    let scheme = match a.scheme {
        SchemeArg::Trapezoid => Scheme::Trapezoid,
        SchemeArg::Left => Scheme::LeftPoint,
    };
    let mut rep = Report::new("solve");
    input_params(&mut rep, &a.input);
    rep.param("field", a.field.as_str())
        .param("y0", a.y0)
        .param("p", a.p)
        .param("tol", a.tol)
        .param("max_iter", a.max_iter)
        .param(
            "scheme",
            match scheme {
                Scheme::Trapezoid => "trapezoid",
                Scheme::LeftPoint => "left",
            },
        );
    let sol = picard_solve_with(
        &x,
        &field,
        a.y0,
        PicardOptions {
            p: a.p,
            tol: a.tol,
            max_iter: a.max_iter,
            scheme,
        },
    )?;
    rep.result("terminal_value", sol.path.last_value())
        .result("converged", sol.converged)
        .result("residual", sol.residual)
        .result("windows", sol.windows.len())
        .result("radius", sol.radius.map_or(Value::Null, |r| json!(r)))
        .diag("iterations", sol.iterations.clone())
        .diag("damped_windows", sol.damped_windows)
        .diag("warnings", sol.warnings.clone());
    if let Some(out) = &a.output.out {
        if a.output.format == Some(Format::Json) {
            emit(&rep, &a.output)?;
            return Ok(sol.converged);
        }
        write_path_csv(&sol.path, &Some(out.clone()))?;
        rep.diag("solution_csv", out.display().to_string());
    }
    rep.write_to(io::stdout().lock())?;
    Ok(sol.converged)
}
