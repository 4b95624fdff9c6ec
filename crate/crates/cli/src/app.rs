//! Argument parsing, dispatch and exit codes.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use morrey_orlicz::morrey::{central_norm, chi_central_norm_closed, luxemburg_norm, weak_central_norm, weak_norm};
use morrey_orlicz::orlicz::OrliczKind;
use morrey_orlicz::potential::{maximal_function, riesz_potential};
use morrey_orlicz::verify::{
    check_condition_1, check_condition_2, check_condition_3, constant_ledger, embedding_check, example_preset,
    nontriviality_check, power_case_relations, ConditionParams, GridSpec, LedgerInputs, Preset, PresetParams,
};
use morrey_orlicz::{Ball, MorreyParams, OperatorParams, OrliczSpec, TestFunction};
use serde_json::json;

use crate::config::Config;
use crate::error::{CliError, CliResult};
use crate::grammar::{parse_function, parse_function_list, parse_list, parse_orlicz};
use crate::report::{Format, Report};
use crate::suites::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_DIVERGENT: i32 = 3;

pub const DEFAULT_TESTS: &str = "chi:t=0.5; chi:t=1; chi:t=2; chi:t=4; chi:c=3,t=1";

/// Every key a config file may set.
pub const CONFIG_KEYS: &[&str] = &[
    "a", "alpha", "b", "c0", "c0-weak", "c1", "c2", "example", "f", "format", "lambda", "mu", "n", "out", "p", "p1",
    "p2", "phi", "psi", "r-count", "r-hi", "r-lo", "radius", "seed", "shifts", "strict", "suite", "tests", "u-count",
    "u-hi", "u-lo", "weak", "x",
];

#[derive(Debug, Parser)]
#[command(name = "morlicz", version, about = "Central Morrey-Orlicz norms, Riesz potentials and boundedness checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Exit with status 3 when the report flags a divergence.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Flat key = value file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Seed for the randomised suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constant ledger from C0, C1, C2.
    Constants(ConstantsArgs),
    /// Scan the three integral conditions for a preset or a (phi, psi) pair.
    Check(CheckArgs),
    /// Central (or single-ball) Morrey-Orlicz norm of a test function.
    Norm(NormArgs),
    /// Riesz potential at points on the x1-axis.
    Riesz(PointArgs),
    /// Centred maximal function at points on the x1-axis.
    Maximal(PointArgs),
    /// Run the seeded verification suites.
    Verify(VerifyArgs),
    /// Embedding criterion between two central spaces.
    Embed(EmbedArgs),
    /// Off-centre indicator witnesses of nontriviality.
    Witness(WitnessArgs),
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    /// Strong-type maximal constant (default 1).
    #[arg(long)]
    pub c0: Option<f64>,
    /// Weak-type maximal constant (default: C0).
    #[arg(long = "c0-weak")]
    pub c0_weak: Option<f64>,
    #[arg(long)]
    pub c1: Option<f64>,
    #[arg(long)]
    pub c2: Option<f64>,
}

#[derive(Debug, Args, Default)]
pub struct GridArgs {
    #[arg(long = "u-lo")]
    pub u_lo: Option<f64>,
    #[arg(long = "u-hi")]
    pub u_hi: Option<f64>,
    #[arg(long = "u-count")]
    pub u_count: Option<usize>,
    #[arg(long = "r-lo")]
    pub r_lo: Option<f64>,
    #[arg(long = "r-hi")]
    pub r_hi: Option<f64>,
    #[arg(long = "r-count")]
    pub r_count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Example family 1, 2 or 3.
    #[arg(long)]
    pub example: Option<u8>,
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub psi: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub p1: Option<f64>,
    #[arg(long)]
    pub p2: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct NormArgs {
    /// Test function, e.g. "2*chi:t=1 + chi:c=3,t=1".
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Norm on the single ball B_r instead of the supremum over r.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Weak norm through the distribution function.
    #[arg(long)]
    pub weak: bool,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Riesz order (ignored by `maximal`).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Comma-separated x1-coordinates (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub psi: Option<String>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Test functions separated by `;`.
    #[arg(long)]
    pub tests: Option<String>,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated shifts R > 1 (default 2,4,8,16).
    #[arg(long)]
    pub shifts: Option<String>,
    /// With --psi, also report the potential lower-bound ratios.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub psi: Option<String>,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_REJECTED } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("morlicz: {e}");
            e.exit_code()
        }
    }
}

fn required<T>(v: Option<T>, key: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Config(format!("missing required value `--{key}` (flag or config key)")))
}

struct Ctx {
    cfg: Config,
}

impl Ctx {
    fn f64(&self, flag: Option<f64>, key: &str) -> CliResult<Option<f64>> {
        self.cfg.pick(flag, key)
    }

    fn usize(&self, flag: Option<usize>, key: &str) -> CliResult<Option<usize>> {
        self.cfg.pick(flag, key)
    }

    fn string(&self, flag: &Option<String>, key: &str) -> CliResult<Option<String>> {
        self.cfg.pick(flag.clone(), key)
    }

    fn flag(&self, flag: bool, key: &str) -> CliResult<bool> {
        Ok(flag || self.cfg.pick::<bool>(None, key)?.unwrap_or(false))
    }

    fn grid(&self, g: &GridArgs, side: char) -> CliResult<GridSpec> {
        let d = GridSpec::default();
        let (lo, hi, count) = match side {
            'u' => (g.u_lo, g.u_hi, g.u_count),
            _ => (g.r_lo, g.r_hi, g.r_count),
        };
        let spec = GridSpec {
            lo: self.f64(lo, &format!("{side}-lo"))?.unwrap_or(d.lo),
            hi: self.f64(hi, &format!("{side}-hi"))?.unwrap_or(d.hi),
            count: self.usize(count, &format!("{side}-count"))?.unwrap_or(d.count),
        };
        if !(spec.lo > 0.0 && spec.hi > spec.lo && spec.hi.is_finite() && spec.count >= 2) {
            return Err(CliError::Config(format!("grid {side} needs 0 < lo < hi < inf and count >= 2, got {spec:?}")));
        }
        Ok(spec)
    }
}

fn execute(cli: &Cli) -> CliResult<i32> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path, CONFIG_KEYS)?,
        None => Config::default(),
    };
    let ctx = Ctx { cfg };
    let format = ctx.cfg.pick::<String>(None, "format")?;
    let format = match (cli.format, format.as_deref()) {
        (Some(f), _) => f,
        (None, None | Some("json")) => Format::Json,
        (None, Some("csv")) => Format::Csv,
        (None, Some(other)) => return Err(CliError::Config(format!("unknown format `{other}`; expected json or csv"))),
    };
    let out = ctx.cfg.pick(cli.out.clone(), "out")?;
    let strict = ctx.flag(cli.strict, "strict")?;
    let seed = ctx.cfg.pick(cli.seed, "seed")?.unwrap_or(0);

    let (report, failed) = match &cli.command {
        Command::Constants(a) => (constants(&ctx, a)?, false),
        Command::Check(a) => (check(&ctx, a)?, false),
        Command::Norm(a) => (norm(&ctx, a)?, false),
        Command::Riesz(a) => (pointwise(&ctx, a, true)?, false),
        Command::Maximal(a) => (pointwise(&ctx, a, false)?, false),
        Command::Verify(a) => verify(&ctx, a, seed)?,
        Command::Embed(a) => (embed(&ctx, a)?, false),
        Command::Witness(a) => (witness(&ctx, a)?, false),
    };
    let text = report.render(format);
    match &out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    return Err(CliError::Io { path: PathBuf::from("<stdout>"), source: e })
                }
                _ => {}
            }
        }
    }
    Ok(if failed {
        EXIT_ERROR
    } else if strict && report.divergent {
        EXIT_DIVERGENT
    } else {
        EXIT_OK
    })
}

fn constants(ctx: &Ctx, a: &ConstantsArgs) -> CliResult<Report> {
    let c0 = ctx.f64(a.c0, "c0")?.unwrap_or(1.0);
    let inputs = LedgerInputs {
        n: required(ctx.usize(a.n, "n")?, "n")?,
        alpha: required(ctx.f64(a.alpha, "alpha")?, "alpha")?,
        lambda: ctx.f64(a.lambda, "lambda")?.unwrap_or(0.0),
        mu: ctx.f64(a.mu, "mu")?.unwrap_or(0.0),
        c0_strong: c0,
        c0_weak: ctx.f64(a.c0_weak, "c0-weak")?.unwrap_or(c0),
        c1: required(ctx.f64(a.c1, "c1")?, "c1")?,
        c2: required(ctx.f64(a.c2, "c2")?, "c2")?,
    };
    let ledger = constant_ledger(inputs)?;
    let mut r = Report::new("constants");
    r.param("inputs", inputs);
    r.claim("ledger", "constant_ledger", ledger);
    Ok(r)
}

fn preset_from_example(ctx: &Ctx, a: &CheckArgs, id: u8) -> CliResult<Preset> {
    let base = PresetParams::default_for(id)
        .ok_or_else(|| CliError::Config(format!("--example must be 1, 2 or 3, got {id}")))?;
    let f = |flag: Option<f64>, key: &str, d: f64| -> CliResult<f64> { Ok(ctx.f64(flag, key)?.unwrap_or(d)) };
    let nn = |d: usize| -> CliResult<usize> { Ok(ctx.usize(a.n, "n")?.unwrap_or(d)) };
    let params = match base {
        PresetParams::LogDamped { n, alpha, lambda, p, a: aa } => PresetParams::LogDamped {
            n: nn(n)?,
            alpha: f(a.alpha, "alpha", alpha)?,
            lambda: f(a.lambda, "lambda", lambda)?,
            p: f(a.p, "p", p)?,
            a: f(a.a, "a", aa)?,
        },
        PresetParams::MaxPowers { n, alpha, lambda, p1, p2 } => PresetParams::MaxPowers {
            n: nn(n)?,
            alpha: f(a.alpha, "alpha", alpha)?,
            lambda: f(a.lambda, "lambda", lambda)?,
            p1: f(a.p1, "p1", p1)?,
            p2: f(a.p2, "p2", p2)?,
        },
        PresetParams::PowerLog { n, alpha, lambda, p1, p2, a: aa, b } => PresetParams::PowerLog {
            n: nn(n)?,
            alpha: f(a.alpha, "alpha", alpha)?,
            lambda: f(a.lambda, "lambda", lambda)?,
            p1: f(a.p1, "p1", p1)?,
            p2: f(a.p2, "p2", p2)?,
            a: f(a.a, "a", aa)?,
            b: f(a.b, "b", b)?,
        },
    };
    Ok(example_preset(&params)?)
}

fn power_exponent(spec: &OrliczSpec) -> Option<f64> {
    match spec.kind() {
        OrliczKind::Power { p } => Some(*p),
        _ => None,
    }
}

fn check(ctx: &Ctx, a: &CheckArgs) -> CliResult<Report> {
    let example = ctx.cfg.pick(a.example, "example")?;
    let phi_text = ctx.string(&a.phi, "phi")?;
    let psi_text = ctx.string(&a.psi, "psi")?;
    let mut r = Report::new("check");
    let (phi, psi, params) = match example {
        Some(id) => {
            if phi_text.is_some() || psi_text.is_some() {
                return Err(CliError::Config("--example cannot be combined with --phi/--psi".into()));
            }
            let pr = preset_from_example(ctx, a, id)?;
            r.param("example", id);
            let derived: BTreeMap<&str, f64> = pr.derived.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            r.claim(
                "preset",
                "preset",
                json!({ "name": pr.name, "derived": derived, "constraints": pr.constraint_report }),
            );
            (pr.phi, pr.psi, pr.params)
        }
        None => {
            let phi_text = required(phi_text, "phi")?;
            let psi_text = required(psi_text, "psi")?;
            r.param("phi", &phi_text).param("psi", &psi_text);
            let params = ConditionParams::new(
                required(ctx.f64(a.alpha, "alpha")?, "alpha")?,
                required(ctx.usize(a.n, "n")?, "n")?,
                ctx.f64(a.lambda, "lambda")?.unwrap_or(0.0),
                ctx.f64(a.mu, "mu")?.unwrap_or(0.0),
            )?;
            (parse_orlicz(&phi_text)?, parse_orlicz(&psi_text)?, params)
        }
    };
    let (ug, rg) = (ctx.grid(&a.grid, 'u')?, ctx.grid(&a.grid, 'r')?);
    r.param("conditions", params).param("u_grid", ug).param("r_grid", rg);
    if let (Some(p), Some(q)) = (power_exponent(&phi), power_exponent(&psi)) {
        if let Ok(rel) = power_case_relations(p, q, params.lambda, params.mu, params.alpha, params.n) {
            r.claim("power_relations", "power_relations", rel);
        }
    }
    r.condition(&check_condition_1(&phi, &psi, params, &ug)?);
    r.condition(&check_condition_2(&phi, &psi, params, &ug, &rg)?);
    r.condition(&check_condition_3(&phi, &psi, params, &ug, &rg)?);
    Ok(r)
}

/// `Some(t)` when `f` is exactly `χ_{B_t}`.
fn centred_indicator_radius(f: &TestFunction) -> Option<f64> {
    match (f.annuli(), f.indicators()) {
        ([a], []) if a.inner == 0.0 && a.constant == 1.0 && a.powers.is_empty() && a.outer.is_finite() => Some(a.outer),
        _ => None,
    }
}

fn norm(ctx: &Ctx, a: &NormArgs) -> CliResult<Report> {
    let n = required(ctx.usize(a.n, "n")?, "n")?;
    let f_text = required(ctx.string(&a.f, "f")?, "f")?;
    let phi_text = required(ctx.string(&a.phi, "phi")?, "phi")?;
    let lambda = ctx.f64(a.lambda, "lambda")?.unwrap_or(0.0);
    let radius = ctx.f64(a.radius, "radius")?;
    let weak = ctx.flag(a.weak, "weak")?;
    let f = parse_function(&f_text, n)?;
    let prm = MorreyParams::new(parse_orlicz(&phi_text)?, lambda, n)?;
    let mut r = Report::new("norm");
    r.param("f", &f_text).param("phi", &phi_text).param("lambda", lambda).param("n", n).param("weak", weak);
    r.param("radius", radius);
    match radius {
        Some(rad) => {
            let ball = Ball::centered(n, rad)?;
            let v = if weak { weak_norm(&f, &prm, &ball)? } else { luxemburg_norm(&f, &prm, &ball)? };
            r.claim("norm", "luxemburg_norm", json!({ "value": v }));
        }
        None => {
            let c = if weak { weak_central_norm(&f, &prm, None)? } else { central_norm(&f, &prm, None)? };
            r.claim("norm", if weak { "weak_central_norm" } else { "central_norm" }, c);
            if let (Some(t), false, true) = (centred_indicator_radius(&f), weak, (0.0..=1.0).contains(&lambda)) {
                r.claim("closed_form", "indicator_central_norm", chi_central_norm_closed(&prm, t)?);
            }
        }
    }
    Ok(r)
}

fn points(ctx: &Ctx, text: &Option<String>) -> CliResult<Vec<f64>> {
    match ctx.string(text, "x")? {
        Some(s) => parse_list("x", &s),
        None => Ok(vec![0.0]),
    }
}

fn pointwise(ctx: &Ctx, a: &PointArgs, riesz: bool) -> CliResult<Report> {
    let n = required(ctx.usize(a.n, "n")?, "n")?;
    let f_text = required(ctx.string(&a.f, "f")?, "f")?;
    let f = parse_function(&f_text, n)?;
    let xs = points(ctx, &a.x)?;
    let mut r = Report::new(if riesz { "riesz" } else { "maximal" });
    r.param("f", &f_text).param("n", n).param("x", &xs);
    let op = if riesz {
        let alpha = required(ctx.f64(a.alpha, "alpha")?, "alpha")?;
        r.param("alpha", alpha);
        Some(OperatorParams::new(alpha, n)?)
    } else {
        None
    };
    let mut values = Vec::with_capacity(xs.len());
    for &x0 in &xs {
        let mut x = vec![0.0; n];
        x[0] = x0;
        let v = match &op {
            Some(op) => match riesz_potential(&f, &x, op) {
                Err(morrey_orlicz::Error::Divergence(msg)) => {
                    r.divergent = true;
                    values.push(json!({ "x": x0, "value": null, "divergence": msg }));
                    continue;
                }
                other => other?,
            },
            None => maximal_function(&f, &x)?,
        };
        values.push(json!({ "x": x0, "value": v }));
    }
    let key = if riesz { "riesz_potential" } else { "maximal_function" };
    r.claim(key, key, values);
    Ok(r)
}

fn verify(ctx: &Ctx, a: &VerifyArgs, seed: u64) -> CliResult<(Report, bool)> {
    let suite = match a.suite {
        Some(s) => s,
        None => match ctx.cfg.pick::<String>(None, "suite")? {
            Some(s) => <Suite as clap::ValueEnum>::from_str(&s, true)
                .map_err(|_| CliError::Config(format!("unknown suite `{s}`")))?,
            None => Suite::All,
        },
    };
    let results = run_suite(suite, seed)?;
    let mut r = Report::new("verify");
    r.param("suite", suite.name()).param("seed", seed);
    let (mut cases, mut passed) = (0, 0);
    for (s, res) in suite.members().into_iter().zip(&results) {
        cases += res.cases;
        passed += res.passed;
        r.claim(s.name(), s.anchor_key(), res);
    }
    r.claim("totals", "verify_totals", json!({ "cases": cases, "passed": passed, "failed": cases - passed }));
    Ok((r, passed < cases))
}

fn embed(ctx: &Ctx, a: &EmbedArgs) -> CliResult<Report> {
    let phi_text = required(ctx.string(&a.phi, "phi")?, "phi")?;
    let psi_text = required(ctx.string(&a.psi, "psi")?, "psi")?;
    let n = required(ctx.usize(a.n, "n")?, "n")?;
    let lambda = ctx.f64(a.lambda, "lambda")?.unwrap_or(0.0);
    let mu = ctx.f64(a.mu, "mu")?.unwrap_or(0.0);
    let tests_text = ctx.string(&a.tests, "tests")?.unwrap_or_else(|| DEFAULT_TESTS.to_string());
    let tests = parse_function_list(&tests_text, n)?;
    let (ug, rg) = (ctx.grid(&a.grid, 'u')?, ctx.grid(&a.grid, 'r')?);
    let rep = embedding_check(&parse_orlicz(&phi_text)?, &parse_orlicz(&psi_text)?, lambda, mu, n, &ug, &rg, &tests)?;
    let mut r = Report::new("embed");
    r.param("phi", &phi_text).param("psi", &psi_text).param("lambda", lambda).param("mu", mu).param("n", n);
    r.param("tests", &tests_text).param("u_grid", ug).param("r_grid", rg);
    r.divergent = rep.a1_divergent || rep.a2_divergent;
    r.claim("embedding", "embedding", rep);
    Ok(r)
}

fn witness(ctx: &Ctx, a: &WitnessArgs) -> CliResult<Report> {
    let phi_text = required(ctx.string(&a.phi, "phi")?, "phi")?;
    let n = required(ctx.usize(a.n, "n")?, "n")?;
    let lambda = required(ctx.f64(a.lambda, "lambda")?, "lambda")?;
    let shifts = match ctx.string(&a.shifts, "shifts")? {
        Some(s) => parse_list("shifts", &s)?,
        None => vec![2.0, 4.0, 8.0, 16.0],
    };
    let alpha = ctx.f64(a.alpha, "alpha")?;
    let psi_text = ctx.string(&a.psi, "psi")?;
    let phi = parse_orlicz(&phi_text)?;
    let psi = psi_text.as_deref().map(parse_orlicz).transpose()?;
    let potential = match (alpha, &psi) {
        (Some(al), Some(p)) => Some((al, p)),
        (None, None) => None,
        _ => return Err(CliError::Config("--alpha and --psi must be given together".into())),
    };
    let rep = nontriviality_check(&phi, lambda, n, &shifts, potential)?;
    let mut r = Report::new("witness");
    r.param("phi", &phi_text).param("lambda", lambda).param("n", n).param("shifts", &shifts);
    r.param("alpha", alpha).param("psi", &psi_text);
    let increasing = rep.ratio_sequence.windows(2).all(|w| w[1] > w[0]);
    r.claim("witness", "witness", &rep);
    if !rep.ratio_sequence.is_empty() {
        r.claim("ratio_sequence_increasing", "witness", increasing);
    }
    Ok(r)
}
