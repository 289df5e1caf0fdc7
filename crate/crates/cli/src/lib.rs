//! Batch front end for `cylhook-core`: every command maps to one library call
//! and renders its report as text or JSON.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cylhook_core::formulas::{
    bar_formula_check, f_lms, f_lmst, hook_formula_check, verify_conjecture, verify_naruse, verify_until, BarReport,
    FlmsReport, FlmstReport, HookReport, Method, NaruseReport,
};
use cylhook_core::rational::{exact_string, parse_exact, to_sci};
use cylhook_core::{
    count_linear_extensions, count_restricted, enumerate_excited_finite, enumerate_linear_extensions,
    enumerate_restricted, render_excited, render_periodic, validate_partition, BigRational, CylindricSkew,
    GeneralizedPartition, Partition, SkewShape, Stratum, Tableau, Verdict, VerificationReport,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "cylhook",
    version,
    about = "Exact hook formulas for skew and cylindric skew diagrams"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "CYLHOOK_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Draw lambda_hat (or lambda_hat / mu_hat) on a window of the strip.
    Render(RenderArgs),
    /// List the (restricted) reverse standard tableaux of a skew shape.
    Tableaux(ShapeArgs),
    /// List excited diagrams; cylindric ones are grouped by depth.
    Excited(ExcitedArgs),
    /// Compare the tableau count with the finite excited-diagram hook sum.
    VerifyNaruse(ShapeArgs),
    /// Compare the restricted tableau count with the windowed cylindric hook sum.
    VerifyCyl(CylArgs),
    /// Check one of the closed-form evaluations.
    Formula(FormulaArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ShapeArgs {
    /// Outer shape, e.g. `3,2,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub lambda: Vec<i64>,
    /// Inner shape; defaults to the empty partition for ordinary shapes.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub mu: Option<Vec<i64>>,
    /// Rows per period; with `--ell`, selects the cylindric setting.
    #[arg(long)]
    pub m: Option<i64>,
    /// Column shift per period.
    #[arg(long)]
    pub ell: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct RenderArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Extra columns drawn to the left of the shape.
    #[arg(long, default_value_t = 0)]
    pub window: i64,
}

#[derive(Args, Debug, Clone)]
pub struct ExcitedArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Cylindric case: keep diagrams at most this many columns left of the shape.
    #[arg(long, default_value_t = 4)]
    pub window: i64,
}

#[derive(Args, Debug, Clone)]
pub struct CylArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value_t = 64)]
    pub window: i64,
    /// Tolerance as an exact decimal or fraction, e.g. `1e-6` or `1/1000`.
    #[arg(long, default_value = "1e-6")]
    pub tol: String,
    /// Double the window from `--window` until decided or past this many states.
    #[arg(long)]
    pub max_states: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    /// Bar `(n)` over `(0)`: needs `--n`, `--ell`, optional `--window`.
    Bar,
    /// Hook `((ell+1)^m) / (ell^(m-1), 0)`: needs `--ell`, `--m`, optional `--window`.
    Hook,
    /// `F_(ell,m;s)`: needs `--ell`, `--m`, `--s`.
    Flms,
    /// `F_(ell,m;s,t)`: needs `--ell`, `--m`, `--s`, `--t`, optional `--trunc`.
    Flmst,
}

#[derive(Args, Debug, Clone)]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    pub kind: FormulaKind,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub ell: Option<i64>,
    #[arg(long)]
    pub s: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long, default_value_t = 60)]
    pub trunc: i64,
}

/// Exit status and the text destined for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Runs one command on a pool of `config.jobs` threads.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs as usize)
        .build()
        .context("building thread pool")?;
    pool.install(|| dispatch(config))
}

fn dispatch(config: &RunConfig) -> Result<Outcome> {
    let json = config.json;
    match &config.command {
        Command::Render(a) => render(a, json),
        Command::Tableaux(a) => tableaux(a, json),
        Command::Excited(a) => excited(a, json),
        Command::VerifyNaruse(a) => naruse(a, json),
        Command::VerifyCyl(a) => cyl(a, json),
        Command::Formula(a) => formula(a, json),
    }
}

/// `p/q ~ d.ddddddddddde-k`, or just the integer.
pub fn show(r: &BigRational) -> String {
    if r.is_integer() {
        exact_string(r)
    } else {
        format!("{} ~ {}", exact_string(r), to_sci(r, 12))
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

enum Shape {
    Ordinary(Partition, Partition),
    Cylindric(GeneralizedPartition, GeneralizedPartition),
}

fn shape_of(a: &ShapeArgs) -> Result<Shape> {
    match (a.m, a.ell) {
        (Some(m), Some(ell)) => {
            let Some(mu) = &a.mu else {
                bail!("--mu is required with --m and --ell")
            };
            Ok(Shape::Cylindric(
                validate_partition(&a.lambda, m, ell).context("invalid --lambda")?,
                validate_partition(mu, m, ell).context("invalid --mu")?,
            ))
        }
        (None, None) => Ok(Shape::Ordinary(
            Partition::new(a.lambda.clone()).context("invalid --lambda")?,
            Partition::new(a.mu.clone().unwrap_or_default()).context("invalid --mu")?,
        )),
        _ => bail!("--m and --ell must be given together"),
    }
}

fn cylindric_of(a: &ShapeArgs) -> Result<(GeneralizedPartition, GeneralizedPartition)> {
    match shape_of(a)? {
        Shape::Cylindric(l, u) => Ok((l, u)),
        Shape::Ordinary(..) => bail!("this command needs --m and --ell"),
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome { code: EXIT_OK, stdout }
}

fn render(a: &RenderArgs, json: bool) -> Result<Outcome> {
    if a.window < 0 {
        bail!("--window must be non-negative");
    }
    let (lam, mu) = match (a.shape.m, a.shape.ell) {
        (Some(m), Some(ell)) => {
            let lam = validate_partition(&a.shape.lambda, m, ell).context("invalid --lambda")?;
            let mu = match &a.shape.mu {
                Some(p) => Some(validate_partition(p, m, ell).context("invalid --mu")?),
                None => None,
            };
            (lam, mu)
        }
        _ => bail!("render needs --m and --ell"),
    };
    let (m, ell) = (lam.m(), lam.ell());
    let lo = lam.part(m) - ell + 1 - a.window;
    let hi = lam.part(1) + 1;
    let picture = render_periodic(&lam, mu.as_ref(), 1..=2 * m, lo..=hi);
    if json {
        #[derive(Serialize)]
        struct Picture<'a> {
            lambda: &'a [i64],
            mu: Option<&'a [i64]>,
            m: i64,
            ell: i64,
            rows: (i64, i64),
            cols: (i64, i64),
            picture: Vec<&'a str>,
        }
        return Ok(ok(to_json(&Picture {
            lambda: lam.parts(),
            mu: mu.as_ref().map(|u| u.parts()),
            m,
            ell,
            rows: (1, 2 * m),
            cols: (lo, hi),
            picture: picture.lines().collect(),
        })?));
    }
    Ok(ok(format!("rows 1..{}, columns {lo}..{hi}\n{picture}", 2 * m)))
}

fn tableaux(a: &ShapeArgs, json: bool) -> Result<Outcome> {
    let (count, list): (String, Vec<Tableau>) = match shape_of(a)? {
        Shape::Ordinary(l, u) => {
            let shape = SkewShape::from_partitions(&l, &u)?;
            (
                count_linear_extensions(&shape).to_string(),
                enumerate_linear_extensions(&shape).collect(),
            )
        }
        Shape::Cylindric(l, u) => (
            count_restricted(&l, &u)?.to_string(),
            enumerate_restricted(&l, &u)?.collect(),
        ),
    };
    if json {
        #[derive(Serialize)]
        struct Listing<'a> {
            count: &'a str,
            tableaux: &'a [Tableau],
        }
        return Ok(ok(to_json(&Listing {
            count: &count,
            tableaux: &list,
        })?));
    }
    let mut out = format!("count = {count}\n");
    for t in &list {
        out.push('\n');
        out.push_str(&t.render());
    }
    Ok(ok(out))
}

fn excited(a: &ExcitedArgs, json: bool) -> Result<Outcome> {
    let mut out = String::new();
    match shape_of(&a.shape)? {
        Shape::Ordinary(l, u) => {
            let diagrams = enumerate_excited_finite(&l, &u)?;
            if json {
                #[derive(Serialize)]
                struct Finite {
                    diagrams: Vec<Vec<(i64, i64)>>,
                }
                let cells = diagrams
                    .iter()
                    .map(|d| d.cells().iter().map(|c| (c.row, c.col)).collect())
                    .collect();
                return Ok(ok(to_json(&Finite { diagrams: cells })?));
            }
            writeln!(out, "{} excited diagrams", diagrams.len())?;
            for d in &diagrams {
                let cells: Vec<String> = d.cells().iter().map(|c| c.to_string()).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
        Shape::Cylindric(l, u) => {
            if a.window < 0 {
                bail!("--window must be non-negative");
            }
            let skew = CylindricSkew::new(&l, &u)?;
            let layers = skew.enumerate(a.window);
            if json {
                for layer in &layers {
                    out.push_str(&to_json(&Stratum::from_layer(layer))?);
                }
                return Ok(ok(out));
            }
            let m = l.m();
            let lo = skew.c0() - a.window;
            let hi = l.part(1) + 1;
            for layer in &layers {
                writeln!(out, "depth {}: {} diagrams", layer[0].depth(), layer.len())?;
                for d in layer {
                    let cells: Vec<String> = d.cell_pairs().iter().map(|(r, c)| format!("({r},{c})")).collect();
                    writeln!(out, "  complement {} (window {})", cells.join(" "), skew.window_of(d))?;
                    for row in render_excited(&l, d, 1..=m, lo..=hi).lines() {
                        writeln!(out, "    {row}")?;
                    }
                }
            }
        }
    }
    Ok(ok(out))
}

fn naruse(a: &ShapeArgs, json: bool) -> Result<Outcome> {
    let (lam, mu) = match shape_of(a)? {
        Shape::Ordinary(l, u) => (l, u),
        Shape::Cylindric(..) => bail!("verify-naruse takes ordinary partitions; drop --m and --ell"),
    };
    let r: NaruseReport = verify_naruse(&lam, &mu)?;
    let code = if r.verdict == Verdict::ExactPass {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    let stdout = if json {
        to_json(&r)?
    } else {
        format!(
            "lambda = {:?}, mu = {:?}, n = {}\nf = {}\nrhs = {}\nexcited diagrams = {}\nverdict: {:?}\n",
            r.lambda,
            r.mu,
            r.n,
            show(&r.lhs),
            show(&r.rhs),
            r.diagrams,
            r.verdict
        )
    };
    Ok(Outcome { code, stdout })
}

/// Exit status for a verdict.
pub fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::ExactPass | Verdict::ConvergedWithinTol => EXIT_OK,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Text form of a [`VerificationReport`].
pub fn describe(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lambda = {:?}, mu = {:?}, m = {}, ell = {}, n = {}",
        r.lambda, r.mu, r.m, r.ell, r.n
    );
    let _ = writeln!(out, "f = {}", show(&r.lhs));
    match r.method {
        Method::Enumeration => {
            let _ = writeln!(out, "g(window {}) = {}", r.window, show(&r.rhs));
            let _ = writeln!(out, "f - g = {}", show(&r.gap()));
        }
        Method::BarTupleBound => {
            let _ = writeln!(out, "g(window {}) >= {}  (bar tuple recursion)", r.window, show(&r.rhs));
            let _ = writeln!(out, "f - g <= {}", show(&r.gap()));
        }
    }
    match &r.tail_estimate {
        Some(t) => {
            let _ = writeln!(out, "tail estimate (heuristic) = {}", show(t));
        }
        None => {
            let _ = writeln!(out, "tail estimate (heuristic) = unavailable");
        }
    }
    let _ = writeln!(
        out,
        "states = {}, max depth = {}, exhausted = {}",
        r.work.states, r.work.max_depth, r.work.exhausted
    );
    let _ = writeln!(out, "verdict: {:?} (tol {})", r.verdict, show(&r.tol));
    out
}

fn cyl(a: &CylArgs, json: bool) -> Result<Outcome> {
    let (lam, mu) = cylindric_of(&a.shape)?;
    let tol = parse_exact(&a.tol).context("invalid --tol")?;
    let r = match a.max_states {
        Some(budget) => verify_until(&lam, &mu, &tol, a.window, budget)?,
        None => verify_conjecture(&lam, &mu, a.window, &tol)?,
    };
    let stdout = if json { to_json(&r)? } else { describe(&r) };
    Ok(Outcome {
        code: verdict_code(r.verdict),
        stdout,
    })
}

fn need(v: Option<i64>, flag: &str) -> Result<i64> {
    v.with_context(|| format!("--{flag} is required for this kind"))
}

fn formula(a: &FormulaArgs, json: bool) -> Result<Outcome> {
    let (holds, stdout) = match a.kind {
        FormulaKind::Bar => {
            let r: BarReport = bar_formula_check(need(a.n, "n")?, need(a.ell, "ell")?, a.window.unwrap_or(200))?;
            let text = format!(
                "bar n={} ell={} (q={}, r={})\nf = {}\nq! (ell+1)^q prod h = {}\nn! = {}\ng (closed) = {}\ng(window {}) = {}\nf - g(window) = {}\nholds: {}\n",
                r.n,
                r.ell,
                r.q,
                r.r,
                show(&r.f),
                show(&r.factorial_product),
                show(&r.n_factorial),
                show(&r.g),
                r.window,
                show(&r.g_window),
                show(&r.gap),
                r.holds
            );
            (r.holds, if json { to_json(&r)? } else { text })
        }
        FormulaKind::Hook => {
            let r: HookReport = hook_formula_check(need(a.ell, "ell")?, need(a.m, "m")?, a.window.unwrap_or(20))?;
            let last = r.partial_sums.last().cloned().unwrap_or_default();
            let text = format!(
                "hook ell={} m={} n={}\nf (restricted tableaux) = {}\nC(ell+m-2, m-1) = {}\nn! F(ell,m;1,ell+m) = {}\ng(window {}) = {}\nstrata match paths: {}, increasing: {}\nholds: {}\n",
                r.ell,
                r.m,
                r.n,
                show(&r.f),
                show(&r.binomial),
                show(&r.g_closed),
                r.window,
                show(&last),
                r.strata_match,
                r.monotone,
                r.holds
            );
            (r.holds, if json { to_json(&r)? } else { text })
        }
        FormulaKind::Flms => {
            let r: FlmsReport = f_lms(need(a.ell, "ell")?, need(a.m, "m")?, need(a.s, "s")?)?;
            let text = format!(
                "F(ell={},m={};s={})\npath sum = {}\nclosed form = {}\nequal: {}\n",
                r.ell,
                r.m,
                r.s,
                show(&r.sum),
                show(&r.closed),
                r.equal
            );
            (r.equal, if json { to_json(&r)? } else { text })
        }
        FormulaKind::Flmst => {
            let r: FlmstReport = f_lmst(
                need(a.ell, "ell")?,
                need(a.m, "m")?,
                need(a.s, "s")?,
                need(a.t, "t")?,
                a.trunc,
            )?;
            let holds = r.recurrence_ok && r.remainder_exact != Some(false) && r.base_case_ok != Some(false);
            let tail = r.tail_estimate.as_ref().map_or("unavailable".to_string(), show);
            let text = format!(
                "F(ell={},m={};s={},t={}) over shifts 0..={}\ntruncated sum = {}\nclosed form = {}\ngap = {}\ntail estimate (heuristic) = {}\nrecurrence: {}, exact remainder: {:?}, base case: {:?}\n",
                r.ell,
                r.m,
                r.s,
                r.t,
                r.trunc,
                show(&r.truncated_sum),
                show(&r.closed),
                show(&r.gap),
                tail,
                r.recurrence_ok,
                r.remainder_exact,
                r.base_case_ok
            );
            (holds, if json { to_json(&r)? } else { text })
        }
    };
    Ok(Outcome {
        code: if holds { EXIT_OK } else { EXIT_FAIL },
        stdout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("cylhook").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn shapes_need_both_period_flags() {
        let c = cfg(&["tableaux", "--lambda", "2", "--mu", "0", "--m", "1"]);
        assert!(run(&c).is_err());
    }

    #[test]
    fn negative_parts_parse() {
        let c = cfg(&[
            "tableaux", "--lambda", "0,-1", "--mu", "-1,-2", "--m", "2", "--ell", "2",
        ]);
        let Command::Tableaux(a) = &c.command else { panic!() };
        assert_eq!(a.lambda, vec![0, -1]);
        assert_eq!(run(&c).unwrap().code, EXIT_OK);
    }

    #[test]
    fn show_prints_exact_and_decimal() {
        assert_eq!(
            show(&BigRational::new(102.into(), 103.into())),
            "102/103 ~ 9.90291262136e-1"
        );
        assert_eq!(show(&BigRational::from_integer(3.into())), "3");
    }
}
