//! `eval`: one operation at one point.

use clap::Args;
use num_complex::Complex64;

use super::parse::parse_complex;
use super::{ParamArgs, RawParams, RunReport};
use crate::chars::DirichletCharacter;
use crate::divsum::{lk_series, lk_star, shifted_sum, sigma, TruncatedValue};
use crate::eisenstein::{
    c_mellin_closed, c_series, eisenstein_star, r_coeff_mellin_closed, r_fourier_coefficient, v_fourier_coefficient,
    Cusp, EisensteinFamily, UpperHalfPoint,
};
use crate::error::{Error, Result};
use crate::lfun::{completed_l, dirichlet_l, functional_equation_defect, hurwitz_zeta, EulerMaclaurinSpec};
use crate::special::{bessel_k, bessel_mellin_closed, bessel_product_mellin_closed, gamma, hyp2f1, ln_gamma};
use crate::spectral::{
    lk_cont, lk_r, lk_r_residue, lk_v, main_term, perron_demo, theorem_exponents, SpectralTruncation,
};

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Operation name; `list` prints them all.
    pub op: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub order: Option<String>,
    #[arg(long = "x", allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long = "y")]
    pub y: Option<f64>,
    #[arg(long = "n", allow_hyphen_values = true)]
    pub int: Option<i64>,
    #[arg(long = "m")]
    pub m: Option<u64>,
    /// Series truncation.
    #[arg(long = "T")]
    pub t: Option<u64>,
    /// Contour half-height for perron.
    #[arg(long)]
    pub height: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub nodes: Option<u32>,
    /// `one-psi-bar` or `psi-one`.
    #[arg(long, default_value = "one-psi-bar")]
    pub family: String,
    /// `inf` or `0`.
    #[arg(long, default_value = "inf")]
    pub cusp: String,
}

/// Every operation `eval` knows, with the flags it reads.
pub const OPERATIONS: [(&str, &str); 29] = [
    ("gamma", "--s"),
    ("ln_gamma", "--s"),
    ("bessel_k", "--order --y"),
    ("hyp2f1", "--a --b --c --x"),
    ("char_eval", "--N --chi --n"),
    ("gauss_sum", "--N --chi"),
    ("hurwitz_zeta", "--s --x"),
    ("dirichlet_l", "--s --N --chi"),
    ("completed_l", "--s --N --chi"),
    ("functional_equation_defect", "--s --N --chi"),
    ("sigma", "--s --n --N --chi"),
    ("bessel_mellin_closed", "--a --s --order"),
    ("bessel_product_mellin_closed", "--x --y --s --u --v"),
    ("eisenstein_star", "--family --N --chi --x --y --s --T"),
    ("shifted_sum", "params --n"),
    ("main_term", "params --x"),
    ("theorem_exponents", "--u --v"),
    ("lk_r", "params --s"),
    ("lk_r_residue", "params"),
    ("lk_v", "params --s"),
    ("lk_cont", "params --s [--omega --nodes]"),
    ("lk_star", "params --s --T"),
    ("lk_series", "params --s --T"),
    ("c_series", "params --cusp --y --T"),
    ("c_mellin_closed", "params --s --cusp"),
    ("v_fourier_coefficient", "params --m --y --T"),
    ("r_fourier_coefficient", "params --y"),
    ("r_coeff_mellin_closed", "params --s"),
    ("perron_demo", "params --x --height --T"),
];

fn need<T: Clone>(v: &Option<T>, flag: &str, op: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::InvalidParams(format!("{op} needs {flag}")))
}

fn cx(v: &Option<String>, flag: &str, op: &str) -> Result<Complex64> {
    parse_complex(&need(v, flag, op)?)
}

fn truncated(r: &mut RunReport, name: &str, t: TruncatedValue) {
    r.output(name, t.value).output("tail_bound", t.tail_bound);
}

pub(crate) fn cmd_eval(a: &EvalArgs, raw: &RawParams) -> Result<RunReport> {
    let op = a.op.as_str();
    let mut r = RunReport::new("eval");
    r.param("op", op);
    let character = || -> Result<DirichletCharacter> {
        let n = raw.int("N")?;
        if n == 1 {
            return Ok(DirichletCharacter::trivial());
        }
        DirichletCharacter::new(n, raw.int("chi")?)
    };
    let echo_char = |r: &mut RunReport| -> Result<()> {
        r.param("N", raw.int("N")?).param("chi", raw.int("chi")?);
        Ok(())
    };
    let s = || cx(&a.s, "--s", op);
    match op {
        "list" => {
            for (name, flags) in OPERATIONS {
                r.output(name, flags);
            }
        }
        "gamma" | "ln_gamma" => {
            let s = s()?;
            r.param("s", s);
            r.output(op, if op == "gamma" { gamma(s)? } else { ln_gamma(s)? });
        }
        "bessel_k" => {
            let (u, y) = (cx(&a.order, "--order", op)?, need(&a.y, "--y", op)?);
            r.param("order", u).param("y", y);
            r.output(op, bessel_k(u, y)?);
        }
        "hyp2f1" => {
            let (pa, pb, pc) = (cx(&a.a, "--a", op)?, cx(&a.b, "--b", op)?, cx(&a.c, "--c", op)?);
            let z = need(&a.x, "--x", op)?;
            r.param("a", pa).param("b", pb).param("c", pc).param("z", z);
            r.output(op, hyp2f1(pa, pb, pc, z)?);
        }
        "char_eval" => {
            let ch = character()?;
            let n = need(&a.int, "--n", op)?;
            echo_char(&mut r)?;
            r.param("n", n);
            r.output(op, ch.eval(n));
        }
        "gauss_sum" => {
            let ch = character()?;
            echo_char(&mut r)?;
            r.output(op, ch.gauss_sum());
        }
        "hurwitz_zeta" => {
            let (s, x) = (s()?, need(&a.x, "--x", op)?);
            r.param("s", s).param("a", x);
            r.output(op, hurwitz_zeta(s, x, &EulerMaclaurinSpec::for_point(s))?);
        }
        "dirichlet_l" | "completed_l" | "functional_equation_defect" => {
            let (s, ch) = (s()?, character()?);
            echo_char(&mut r)?;
            r.param("s", s);
            match op {
                "dirichlet_l" => r.output(op, dirichlet_l(s, &ch)?),
                "completed_l" => r.output(op, completed_l(s, &ch)?),
                _ => r.output(op, functional_equation_defect(s, &ch)?),
            };
        }
        "sigma" => {
            let (s, ch, n) = (s()?, character()?, need(&a.int, "--n", op)?);
            echo_char(&mut r)?;
            r.param("s", s).param("n", n);
            r.output(op, sigma(s, n, &ch));
        }
        "bessel_mellin_closed" => {
            let (pa, s, u) = (cx(&a.a, "--a", op)?, s()?, cx(&a.order, "--order", op)?);
            r.param("a", pa).param("s", s).param("order", u);
            r.output(op, bessel_mellin_closed(pa, s, u)?);
        }
        "bessel_product_mellin_closed" => {
            let (pa, pb, s) = (need(&a.x, "--x", op)?, need(&a.y, "--y", op)?, s()?);
            let (u, v) = (raw.complex("u")?, raw.complex("v")?);
            r.param("a", pa).param("b", pb).param("s", s).param("u", u).param("v", v);
            r.output(op, bessel_product_mellin_closed(pa, pb, s, u, v)?);
        }
        "eisenstein_star" => {
            let ch = character()?;
            let fam = match a.family.as_str() {
                "one-psi-bar" => EisensteinFamily::one_psi_bar(ch)?,
                "psi-one" => EisensteinFamily::psi_one(ch)?,
                f => return Err(Error::InvalidParams(format!("unknown family `{f}`"))),
            };
            let z = UpperHalfPoint::new(need(&a.x, "--x", op)?, need(&a.y, "--y", op)?)?;
            let (s, t) = (s()?, need(&a.t, "--T", op)?);
            r.param("family", a.family.as_str());
            echo_char(&mut r)?;
            r.param("x", z.x()).param("y", z.y()).param("s", s).param("T", t);
            truncated(&mut r, op, eisenstein_star(&fam, &z, s, t)?);
        }
        "theorem_exponents" => {
            let (u, v) = (raw.complex("u")?, raw.complex("v")?);
            r.param("u", u).param("v", v);
            let e = theorem_exponents(u, v);
            r.output("alpha", e.alpha)
                .output("main_exp", e.main_exp)
                .output("error_exp", e.error_exp)
                .output("ratio", e.ratio)
                .output("gap", e.gap)
                .output("admissible", e.admissible);
        }
        _ => {
            let p = raw.params()?;
            r.echo_params(&p);
            let cusp = || match a.cusp.as_str() {
                "inf" => Ok(Cusp::Infinity),
                "0" => Ok(Cusp::Zero),
                c => Err(Error::InvalidParams(format!("unknown cusp `{c}` (inf or 0)"))),
            };
            match op {
                "shifted_sum" => {
                    let x = need(&a.int, "--n", op)?;
                    if x < 0 {
                        return Err(Error::InvalidParams("--n must be ≥ 0".into()));
                    }
                    r.param("X", x);
                    r.output(op, shifted_sum(&p, x as u64)?);
                }
                "main_term" => {
                    let x = need(&a.x, "--x", op)?;
                    r.param("X", x);
                    r.output(op, main_term(&p, x)?);
                }
                "lk_r" | "lk_v" => {
                    let s = s()?;
                    r.param("s", s);
                    r.output(op, if op == "lk_r" { lk_r(&p, s)? } else { lk_v(&p, s)? });
                }
                "lk_r_residue" => {
                    r.output(op, lk_r_residue(&p)?);
                }
                "lk_cont" => {
                    let s = s()?;
                    let d = SpectralTruncation::default_for(s);
                    let tr = SpectralTruncation::new(
                        a.omega.unwrap_or(d.omega_max),
                        a.nodes.unwrap_or(d.nodes_per_unit),
                    )?;
                    r.param("s", s).param("omega_max", tr.omega_max).param("nodes_per_unit", tr.nodes_per_unit as u64);
                    truncated(&mut r, op, lk_cont(&p, s, tr)?);
                }
                "lk_star" | "lk_series" => {
                    let (s, t) = (s()?, need(&a.t, "--T", op)?);
                    r.param("s", s).param("T", t);
                    let v = if op == "lk_star" { lk_star(&p, s, t)? } else { lk_series(&p, s, t)? };
                    truncated(&mut r, op, v);
                }
                "c_series" => {
                    let (c, y, t) = (cusp()?, need(&a.y, "--y", op)?, need(&a.t, "--T", op)?);
                    r.param("cusp", c.name()).param("y", y).param("T", t);
                    truncated(&mut r, op, c_series(&p, c, y, t)?);
                }
                "c_mellin_closed" => {
                    let (s, c) = (s()?, cusp()?);
                    r.param("s", s).param("cusp", c.name());
                    r.output(op, c_mellin_closed(&p, s, c)?);
                }
                "v_fourier_coefficient" => {
                    let (m, y, t) = (need(&a.m, "--m", op)?, need(&a.y, "--y", op)?, need(&a.t, "--T", op)?);
                    r.param("m", m).param("y", y).param("T", t);
                    truncated(&mut r, op, v_fourier_coefficient(&p, m, y, t)?);
                }
                "r_fourier_coefficient" => {
                    let y = need(&a.y, "--y", op)?;
                    r.param("y", y);
                    r.output(op, r_fourier_coefficient(&p, y)?);
                }
                "r_coeff_mellin_closed" => {
                    let s = s()?;
                    r.param("s", s);
                    r.output(op, r_coeff_mellin_closed(&p, s)?);
                }
                "perron_demo" => {
                    let (x, h, t) = (need(&a.x, "--x", op)?, need(&a.height, "--height", op)?, need(&a.t, "--T", op)?);
                    r.param("X", x).param("height", h).param("series_T", t);
                    let d = perron_demo(&p, x, h, t)?;
                    r.output("line", d.line)
                        .output("integral", d.integral)
                        .output("perron_sum", d.perron_sum)
                        .output("sum4pii", d.sum4pii)
                        .output("difference", d.difference)
                        .output("difference_4pii", d.difference_4pii)
                        .output("nodes", d.nodes)
                        .output("series_tail", d.series_tail);
                }
                _ => return Err(Error::InvalidParams(format!("unknown operation `{op}` (try `eval list`)"))),
            }
        }
    }
    Ok(r)
}
