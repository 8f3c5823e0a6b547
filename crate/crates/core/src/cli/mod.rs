//! The `shiftconv` command line: argument parsing, parameter resolution and
//! the sum, main-term, fit, growth, eval, verify and sigma-table commands.
//!
//! Every command produces a [`RunReport`]; JSON is the canonical output and
//! grid commands also accept `--format csv`.

mod eval;
pub mod parse;
pub mod report;
mod verify;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

pub use report::{fmt_f64, to_csv, Output, RunReport, Status, Value};
pub use verify::SUITES;

use crate::divsum::{set_sieve_limit, shifted_sum_grid, sieve_sigma, sigma, ConvolutionParams, SigmaTable};
use crate::error::{Error, Result};
use crate::parallel::{configured_threads, with_threads};
use crate::spectral::{
    geometric_grid, main_term, main_term_coefficients, residual_fit, theorem_exponents, vertical_growth_samples,
    vertical_growth_values, GrowthComponent,
};
use parse::{parse_complex, parse_grid, parse_int_grid, read_config};

#[derive(Debug, Parser)]
#[command(name = "shiftconv", version, about = "Shifted convolutions of twisted divisor sums")]
pub struct Cli {
    /// key=value file of parameter defaults; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write runtime_ms as 0, for byte-comparable reports.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Largest X a divisor sieve may cover.
    #[arg(long, global = true)]
    pub sieve_limit: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// The convolution tuple `(N, χ, ψ, u, v, k, ε)`.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long = "N")]
    pub n: Option<String>,
    #[arg(long)]
    pub chi: Option<String>,
    #[arg(long)]
    pub psi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub epsilon: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Σ_{n≤X} σ_{2u}(n,χ)σ_{2v}(n−k,ψ)/n^{u+v}, optionally against the main term.
    Sum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "X", conflicts_with = "x_grid")]
        x: Option<u64>,
        #[arg(long = "X-grid")]
        x_grid: Option<String>,
        #[arg(long)]
        with_main: bool,
    },
    /// The two main-term powers at X.
    MainTerm {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "X", conflicts_with = "x_grid")]
        x: Option<f64>,
        #[arg(long = "X-grid")]
        x_grid: Option<String>,
    },
    /// Log–log slope of |sum − main term| over an X grid.
    Fit {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "X-grid", default_value = "1e4,3e4,1e5,3e5,1e6")]
        x_grid: String,
        /// Allowed excess of the slope over the error exponent.
        #[arg(long, default_value_t = 0.15)]
        window: f64,
    },
    /// Growth exponent of one piece of L_k on a vertical line.
    Growth {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        component: ComponentArg,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        t_grid: Option<String>,
        /// Coefficients kept in L_k* for the lk-star component.
        #[arg(long, default_value_t = 20_000)]
        terms: u64,
        /// Also write the (t, log|value|) grid to this CSV file.
        #[arg(long)]
        csv_out: Option<PathBuf>,
    },
    /// Evaluate a single operation by name (`eval list` prints the names).
    Eval(eval::EvalArgs),
    /// Run a named verification suite.
    Verify {
        suite: String,
        /// Smaller sizes and widened windows.
        #[arg(long)]
        quick: bool,
    },
    /// Sieve σ_s(n,χ) for n ≤ X and write an SGT1 table.
    DumpSigma {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        chi: u64,
        #[arg(long = "X")]
        x: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Read an SGT1 table and report selected entries.
    LoadSigma {
        #[arg(long = "in")]
        input: PathBuf,
        /// Indices to report, comma list.
        #[arg(long)]
        n: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComponentArg {
    R,
    V,
    Cont,
    LkStar,
}

const PARAM_KEYS: [&str; 7] = ["N", "chi", "psi", "u", "v", "k", "epsilon"];

/// Flag values over config values over the default configuration.
#[derive(Debug, Clone)]
pub(crate) struct RawParams {
    map: BTreeMap<String, String>,
}

impl RawParams {
    fn new(args: &ParamArgs, config: &BTreeMap<String, String>) -> Self {
        let mut map: BTreeMap<String, String> = [
            ("N", "7"),
            ("chi", "2"),
            ("psi", "2"),
            ("u", "0+0.10i"),
            ("v", "0+0.07i"),
            ("k", "1"),
            ("epsilon", "0.1"),
        ]
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
        for k in PARAM_KEYS {
            if let Some(v) = config.get(k) {
                map.insert(k.into(), v.clone());
            }
        }
        let flags = [&args.n, &args.chi, &args.psi, &args.u, &args.v, &args.k, &args.epsilon];
        for (k, f) in PARAM_KEYS.iter().zip(flags) {
            if let Some(v) = f {
                map.insert(k.to_string(), v.clone());
            }
        }
        RawParams { map }
    }

    pub(crate) fn int(&self, key: &str) -> Result<u64> {
        let v = &self.map[key];
        v.parse().map_err(|_| Error::InvalidParams(format!("{key} = `{v}` is not a nonnegative integer")))
    }

    pub(crate) fn real(&self, key: &str) -> Result<f64> {
        let v = &self.map[key];
        v.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::InvalidParams(format!("{key} = `{v}` is not a real number")))
    }

    pub(crate) fn complex(&self, key: &str) -> Result<Complex64> {
        parse_complex(&self.map[key])
    }

    pub(crate) fn params(&self) -> Result<ConvolutionParams> {
        ConvolutionParams::new(
            self.int("N")?,
            self.int("chi")?,
            self.int("psi")?,
            self.complex("u")?,
            self.complex("v")?,
            self.int("k")?,
            self.real("epsilon")?,
        )
    }
}

/// A finished command: the rendered text and its status.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub status: Status,
}

/// Exit code for a failed command: 3 for resource or accuracy failures,
/// 2 for everything else (bad input).
pub fn error_exit_code(e: &Error) -> i32 {
    if e.is_resource_or_accuracy() {
        3
    } else {
        2
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = match configured_threads() {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match with_threads(threads, || execute(&cli)) {
        Ok(r) => {
            let _ = out.write_all(r.text.as_bytes());
            r.status.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_exit_code(&e)
        }
    }
}

fn grid_only(format: Format, is_grid: bool) -> Result<()> {
    if format == Format::Csv && !is_grid {
        return Err(Error::InvalidParams("--format csv applies to grid commands only".into()));
    }
    Ok(())
}

/// Runs a parsed command on the current thread pool.
pub fn execute(cli: &Cli) -> Result<Rendered> {
    let config = match &cli.config {
        Some(p) => read_config(p)?,
        None => BTreeMap::new(),
    };
    for k in config.keys() {
        if !PARAM_KEYS.contains(&k.as_str()) && k != "sieve_limit" {
            return Err(Error::InvalidParams(format!("unknown config key `{k}`")));
        }
    }
    let limit = match (cli.sieve_limit, config.get("sieve_limit")) {
        (Some(l), _) => Some(l),
        (None, Some(v)) => Some(
            v.parse::<u64>()
                .map_err(|_| Error::InvalidParams(format!("sieve_limit = `{v}` is not an integer")))?,
        ),
        (None, None) => None,
    };
    if let Some(l) = limit {
        set_sieve_limit(l);
    }
    let start = Instant::now();
    let (mut report, csv) = match &cli.command {
        Command::Sum { params, x, x_grid, with_main } => {
            let raw = RawParams::new(params, &config);
            cmd_sum(&raw.params()?, *x, x_grid.as_deref(), *with_main)?
        }
        Command::MainTerm { params, x, x_grid } => {
            let raw = RawParams::new(params, &config);
            cmd_main_term(&raw.params()?, *x, x_grid.as_deref())?
        }
        Command::Fit { params, x_grid, window } => {
            let raw = RawParams::new(params, &config);
            cmd_fit(&raw.params()?, x_grid, *window)?
        }
        Command::Growth { params, component, sigma, t_grid, terms, csv_out } => {
            let raw = RawParams::new(params, &config);
            let (r, csv) = cmd_growth(&raw.params()?, *component, *sigma, t_grid.as_deref(), *terms)?;
            if let Some(path) = csv_out {
                std::fs::write(path, csv.as_deref().unwrap_or(""))?;
            }
            (r, csv)
        }
        Command::Eval(a) => {
            let raw = RawParams::new(&a.params, &config);
            (eval::cmd_eval(a, &raw)?, None)
        }
        Command::Verify { suite, quick } => (verify::cmd_verify(suite, *quick)?, None),
        Command::DumpSigma { s, n, chi, x, out } => (cmd_dump_sigma(s, *n, *chi, *x, out)?, None),
        Command::LoadSigma { input, n } => (cmd_load_sigma(input, n.as_deref())?, None),
    };
    report.runtime_ms = start.elapsed().as_millis() as u64;
    let status = report.status;
    let text = match cli.format {
        Format::Json => report.to_json(!cli.no_timing),
        Format::Csv => {
            grid_only(cli.format, csv.is_some())?;
            csv.unwrap_or_default()
        }
    };
    Ok(Rendered { text, status })
}

type CommandOutput = (RunReport, Option<String>);

/// `ln` of a positive real, `-inf` for 0.
fn ln_abs(z: Complex64) -> f64 {
    z.norm().ln()
}

pub fn cmd_sum(p: &ConvolutionParams, x: Option<u64>, x_grid: Option<&str>, with_main: bool) -> Result<CommandOutput> {
    let (xs, is_grid) = match (x, x_grid) {
        (Some(x), None) => (vec![x], false),
        (None, Some(g)) => (parse_int_grid(g)?, true),
        (None, None) => return Err(Error::InvalidParams("sum needs --X or --X-grid".into())),
        (Some(_), Some(_)) => return Err(Error::InvalidParams("--X and --X-grid are exclusive".into())),
    };
    if xs.is_empty() {
        return Err(Error::InvalidParams("empty X grid".into()));
    }
    let mut r = RunReport::new("sum");
    r.echo_params(p);
    match x_grid {
        Some(g) => r.param("X_grid", g),
        None => r.param("X", xs[0]),
    };
    r.param("with_main", with_main);
    let sums = shifted_sum_grid(p, &xs)?;
    let mut rows = Vec::new();
    for (&x, &s) in xs.iter().zip(&sums) {
        r.output(format!("S({x})"), s);
        let mut row = vec![x as f64, s.re, s.im];
        if with_main {
            let m = main_term(p, x as f64)?;
            let q = s / m;
            r.output(format!("M({x})"), m).output(format!("S/M({x})"), q);
            row.extend([m.re, m.im, q.re, q.im, (q - 1.0).norm()]);
        }
        rows.push(row);
    }
    let header: &[&str] = if with_main {
        &["X", "S_re", "S_im", "M_re", "M_im", "ratio_re", "ratio_im", "abs_ratio_minus_1"]
    } else {
        &["X", "S_re", "S_im"]
    };
    let csv = if is_grid { Some(to_csv(header, &rows)?) } else { None };
    Ok((r, csv))
}

pub fn cmd_main_term(p: &ConvolutionParams, x: Option<f64>, x_grid: Option<&str>) -> Result<CommandOutput> {
    let (xs, is_grid) = match (x, x_grid) {
        (Some(x), None) => (vec![x], false),
        (None, Some(g)) => (parse_grid(g)?, true),
        _ => return Err(Error::InvalidParams("main-term needs exactly one of --X, --X-grid".into())),
    };
    let mut r = RunReport::new("main-term");
    r.echo_params(p);
    match x_grid {
        Some(g) => r.param("X_grid", g),
        None => r.param("X", xs[0]),
    };
    let c = main_term_coefficients(p)?;
    r.output("lower_coefficient", c.lower).output("upper_coefficient", c.upper);
    let mut rows = Vec::new();
    for &x in &xs {
        let m = main_term(p, x)?;
        r.output(format!("M({})", fmt_x(x)), m);
        rows.push(vec![x, m.re, m.im]);
    }
    let csv = if is_grid { Some(to_csv(&["X", "M_re", "M_im"], &rows)?) } else { None };
    Ok((r, csv))
}

fn fmt_x(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

pub fn cmd_fit(p: &ConvolutionParams, x_grid: &str, window: f64) -> Result<CommandOutput> {
    let xs = parse_int_grid(x_grid)?;
    let mut r = RunReport::new("fit");
    r.echo_params(p);
    r.param("X_grid", x_grid).param("window", window);
    let f = residual_fit(p, &xs)?;
    let e = theorem_exponents(p.u(), p.v());
    r.output("intercept", f.intercept)
        .output("rms_residual", f.rms_residual)
        .output("points", f.points.len())
        .output("dropped", f.dropped.len())
        .output("error_exp", e.error_exp);
    r.check_at_most("slope", f.slope, e.error_exp + window);
    let rows: Vec<Vec<f64>> = f.points.iter().map(|&(a, b)| vec![a.exp().round(), a, b]).collect();
    Ok((r, Some(to_csv(&["X", "ln_X", "ln_residual"], &rows)?)))
}

pub(crate) fn component(c: ComponentArg, terms: u64) -> GrowthComponent {
    match c {
        ComponentArg::R => GrowthComponent::R,
        ComponentArg::V => GrowthComponent::V,
        ComponentArg::Cont => GrowthComponent::Cont,
        ComponentArg::LkStar => GrowthComponent::LkStar { terms },
    }
}

/// The window a growth slope must land in, as `(name, |deviation|, bound)`.
pub(crate) fn growth_check(c: GrowthComponent, p: &ConvolutionParams, slope: f64) -> Option<(&'static str, f64, f64)> {
    match c {
        GrowthComponent::R => Some(("abs_slope", slope.abs(), 0.1)),
        GrowthComponent::V => {
            let target = 0.5 + p.u().re.max(p.v().re);
            Some(("abs_slope_minus_target", (slope - target).abs(), 0.15))
        }
        GrowthComponent::Cont => Some(("slope", slope, 1.2)),
        GrowthComponent::LkStar { .. } => None,
    }
}

pub fn cmd_growth(
    p: &ConvolutionParams,
    c: ComponentArg,
    sigma: Option<f64>,
    t_grid: Option<&str>,
    terms: u64,
) -> Result<CommandOutput> {
    let comp = component(c, terms);
    let (s0, lo, hi) = comp.default_line();
    let sigma = sigma.unwrap_or(s0);
    let ts = match t_grid {
        Some(g) => parse_grid(g)?,
        None => geometric_grid(lo, hi, 16)?,
    };
    let mut r = RunReport::new("growth");
    r.echo_params(p);
    r.param("component", comp.name()).param("sigma", sigma);
    r.param("t_grid", t_grid.map(str::to_string).unwrap_or_else(|| format!("{lo}:{hi}:16")));
    if let GrowthComponent::LkStar { terms } = comp {
        r.param("terms", terms);
    }
    let vals = vertical_growth_samples(comp, p, sigma, &ts)?;
    let f = vertical_growth_values(&ts, &vals)?;
    r.output("slope", f.slope)
        .output("intercept", f.intercept)
        .output("rms_residual", f.rms_residual)
        .output("dropped", f.dropped.len());
    if let Some((name, dev, bound)) = growth_check(comp, p, f.slope) {
        r.check_at_most(name, dev, bound);
    }
    let rows: Vec<Vec<f64>> = ts
        .iter()
        .zip(&vals)
        .map(|(&t, v)| vec![t, v.as_ref().map(|z| ln_abs(*z)).unwrap_or(f64::NAN)])
        .collect();
    Ok((r, Some(to_csv(&["t", "log_abs"], &rows)?)))
}

pub fn cmd_dump_sigma(s: &str, n: u64, chi: u64, x: u64, out: &std::path::Path) -> Result<RunReport> {
    let s = parse_complex(s)?;
    let ch = crate::chars::DirichletCharacter::new(n, chi)?;
    let t = sieve_sigma(s, &ch, x)?;
    t.save(out)?;
    let mut r = RunReport::new("dump-sigma");
    r.param("s", s).param("N", n).param("chi", chi).param("X", x).param("out", out.display().to_string());
    r.output("entries", t.values().len()).output("bytes", 44 + 16 * t.values().len());
    r.output(format!("sigma({x})"), t.get(x as i64));
    Ok(r)
}

pub fn cmd_load_sigma(input: &std::path::Path, n: Option<&str>) -> Result<RunReport> {
    let t = SigmaTable::load(input)?;
    let idx = match n {
        Some(g) => parse_int_grid(g)?,
        None => vec![t.limit()],
    };
    let mut r = RunReport::new("load-sigma");
    r.param("in", input.display().to_string());
    r.output("s", t.exponent())
        .output("N", t.character().modulus())
        .output("chi", t.character().index())
        .output("X", t.limit());
    let mut worst = 0.0f64;
    for &i in &idx {
        if i > t.limit() {
            return Err(Error::InvalidParams(format!("n = {i} exceeds the table limit {}", t.limit())));
        }
        let v = t.get(i as i64);
        r.output(format!("sigma({i})"), v);
        let d = sigma(t.exponent(), i as i64, t.character());
        worst = worst.max((v - d).norm() / d.norm().max(1.0));
    }
    r.check_at_most("max_rel_diff_vs_direct", worst, 1e-12);
    Ok(r)
}
