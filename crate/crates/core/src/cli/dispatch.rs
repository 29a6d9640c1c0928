use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::args::{CheckArgs, CheckName, Cli, ClosedCommand, Command, FoliationArgs, Format, SamplingArgs, ScenariosCommand};
use super::parse_poly;
use crate::error::{Error, Result};
use crate::invariants::{self as inv, closed, Assertions, PolarSampling, ReducedSingularityKind};
use crate::scenarios::{self, Registry};
use crate::stdbasis::{colength, Colength, Ideal};
use crate::{QCurve, QFoliation, QPoly};

/// Exit code for a successful command or a check that holds.
pub const EXIT_OK: i32 = 0;
/// Exit code for a check that fails.
pub const EXIT_FALSE: i32 = 1;
/// Exit code for input and precondition errors.
pub const EXIT_INPUT: i32 = 2;

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "FOLINV_SEED";

/// Result of a single non-scenario command.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub command: &'static str,
    pub inputs: Value,
    pub k: Option<u32>,
    pub result: Value,
    pub finite: bool,
    pub seed: Option<u64>,
    /// `Some(false)` makes the process exit with [`EXIT_FALSE`].
    pub verdict: Option<bool>,
}

impl Evaluation {
    fn new(command: &'static str, inputs: Value, result: impl Serialize) -> Self {
        let result = serde_json::to_value(result).expect("results serialize");
        Evaluation {
            command,
            inputs,
            k: None,
            finite: true,
            result,
            seed: None,
            verdict: None,
        }
    }

    fn k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn verdict(mut self, v: bool) -> Self {
        self.verdict = Some(v);
        self
    }

    /// The JSON document printed with `--format json`.
    pub fn to_json(&self, elapsed_ms: u64) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "k": self.k,
            "result": self.result,
            "finite": self.finite,
            "seed": self.seed,
            "elapsed_ms": elapsed_ms,
        })
    }
}

/// Captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn poly(name: &str, text: &str) -> Result<QPoly> {
    parse_poly(text).map_err(|e| Error::InvalidArgument(format!("cannot parse {name} `{text}`: {e}")))
}

fn foliation(args: &FoliationArgs) -> Result<QFoliation> {
    QFoliation::new(poly("--P", &args.p)?, poly("--Q", &args.q)?)
}

fn curve(text: &str) -> Result<QCurve> {
    QCurve::new(poly("--f", text)?)
}

fn fol_inputs(p: &str, q: &str, f: Option<&str>) -> Value {
    let mut m = Map::new();
    m.insert("P".into(), p.into());
    m.insert("Q".into(), q.into());
    if let Some(f) = f {
        m.insert("f".into(), f.into());
    }
    Value::Object(m)
}

fn resolve_seed(arg: Option<u64>) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{SEED_ENV} must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(arg.unwrap_or(PolarSampling::DEFAULT_SEED)),
    }
}

fn sampling(args: &SamplingArgs) -> Result<PolarSampling> {
    Ok(PolarSampling::new(args.samples, resolve_seed(args.seed)?))
}

fn colength_eval(command: &'static str, inputs: Value, value: Colength) -> Evaluation {
    let mut ev = Evaluation::new(command, inputs, value);
    ev.finite = value.is_finite();
    ev
}

/// Run one command other than `scenarios`.
pub fn evaluate(command: &Command) -> Result<Evaluation> {
    Ok(match command {
        Command::Vdim { polys, mk, plus_mk } => {
            let gens = polys
                .iter()
                .enumerate()
                .map(|(i, p)| poly(&format!("polynomial {}", i + 1), p))
                .collect::<Result<Vec<_>>>()?;
            let mut ideal = Ideal::new(gens).product(&Ideal::maximal_power(*mk));
            if let Some(d) = plus_mk {
                ideal = ideal.sum(&Ideal::maximal_power(*d));
            }
            let inputs = json!({ "polys": polys, "mk": mk, "plus_mk": plus_mk });
            colength_eval("vdim", inputs, colength(&ideal)).k(*mk)
        }
        Command::Intersect { f, g } => colength_eval(
            "intersect",
            json!({ "f": f, "g": g }),
            inv::intersection_number(&poly("f", f)?, &poly("g", g)?),
        ),
        Command::Milnor(a) => {
            colength_eval("milnor", json!({ "f": a.f }), inv::milnor_k(&poly("f", &a.f)?, a.k.k)).k(a.k.k)
        }
        Command::Tjurina(a) => {
            colength_eval("tjurina", json!({ "f": a.f }), inv::tjurina_k(&poly("f", &a.f)?, a.k.k)).k(a.k.k)
        }
        Command::FolMilnor { fol, k } => colength_eval(
            "fol-milnor",
            fol_inputs(&fol.p, &fol.q, None),
            inv::foliation_milnor_k(&foliation(fol)?, k.k),
        )
        .k(k.k),
        Command::FolTjurina { fol, curve: c, k } => colength_eval(
            "fol-tjurina",
            fol_inputs(&fol.p, &fol.q, Some(&c.f)),
            inv::foliation_tjurina_k(&foliation(fol)?, &curve(&c.f)?, k.k)?,
        )
        .k(k.k),
        Command::Gsv { fol, curve: c } => Evaluation::new(
            "gsv",
            fol_inputs(&fol.p, &fol.q, Some(&c.f)),
            inv::gsv_index(&foliation(fol)?, &curve(&c.f)?)?,
        ),
        Command::Polar { fol, curve: c, k, sampling: s } => {
            let s = sampling(s)?;
            let v = inv::polar_intersection_k(&foliation(fol)?, &curve(&c.f)?, k.k, s)?;
            Evaluation::new("polar", fol_inputs(&fol.p, &fol.q, Some(&c.f)), v.value)
                .k(k.k)
                .seed(s.seed)
        }
        Command::Invariant { fol, curve: c } => {
            let v = inv::is_invariant(&foliation(fol)?, &curve(&c.f)?);
            Evaluation::new("invariant", fol_inputs(&fol.p, &fol.q, Some(&c.f)), v).verdict(v)
        }
        Command::QhCheck { fol, curve: c } => {
            let (fol_v, curve_v) = (foliation(fol)?, curve(&c.f)?);
            if !inv::is_invariant(&fol_v, &curve_v) {
                return Err(Error::NotInvariant);
            }
            let v = inv::is_quasihomogeneous_foliation(&fol_v, &curve_v);
            Evaluation::new("qh-check", fol_inputs(&fol.p, &fol.q, Some(&c.f)), v).verdict(v)
        }
        Command::Check(args) => check(args)?,
        Command::Closed(c) => closed_form(c)?,
        Command::Weights { f } => {
            let w = inv::weighted_homogeneous_weights(&poly("f", f)?);
            Evaluation::new("weights", json!({ "f": f }), w)
        }
        Command::Scenarios(_) => {
            return Err(Error::InvalidArgument("`scenarios` cannot be evaluated as a single command".into()))
        }
    })
}

fn required<'a>(value: &'a Option<String>, flag: &str, name: &str) -> Result<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument(format!("check {name} requires {flag}")))
}

fn check(args: &CheckArgs) -> Result<Evaluation> {
    let name = args.name;
    let label = match name {
        CheckName::GsvTheorem => "gsv-theorem",
        CheckName::TeissierK => "teissier-k",
        CheckName::PolarGsv => "polar-gsv",
        CheckName::Bound => "bound",
        CheckName::QhIdentity => "qh-identity",
        CheckName::SecondType => "second-type",
        CheckName::Conjecture1 => "conjecture1",
        CheckName::Ratio => "ratio",
    };
    let assertions = Assertions {
        second_type: args.assert_second_type,
        generalized_curve: args.assert_generalized_curve,
    };
    let needs_foliation = !matches!(name, CheckName::TeissierK | CheckName::Conjecture1 | CheckName::Ratio);
    let f_text = required(&args.f, "--f", label)?;
    let (fol, inputs) = if needs_foliation {
        let p = required(&args.p, "--P", label)?;
        let q = required(&args.q, "--Q", label)?;
        (Some(QFoliation::new(poly("--P", p)?, poly("--Q", q)?)?), fol_inputs(p, q, Some(f_text)))
    } else {
        (None, json!({ "f": f_text }))
    };
    let k_max = args.k_max.unwrap_or(args.k);
    let command: &'static str = "check";
    let with_inputs = |mut inputs: Value| {
        inputs["check"] = label.into();
        inputs
    };
    let inputs = with_inputs(inputs);
    let fol = || fol.as_ref().expect("foliation parsed");
    let ev = match name {
        CheckName::GsvTheorem => {
            let r = inv::gsv_theorem_check(fol(), &curve(f_text)?, k_max)?;
            Evaluation::new(command, inputs, &r).k(k_max).verdict(r.holds)
        }
        CheckName::TeissierK => {
            let s = sampling(&args.sampling)?;
            let r = inv::teissier_k_check(&poly("--f", f_text)?, args.k, s)?;
            Evaluation::new(command, inputs, &r).k(args.k).seed(s.seed).verdict(r.holds)
        }
        CheckName::PolarGsv => {
            let s = sampling(&args.sampling)?;
            let r = inv::polar_gsv_check(fol(), &curve(f_text)?, k_max, s, assertions)?;
            Evaluation::new(command, inputs, &r).k(k_max).seed(s.seed).verdict(r.holds)
        }
        CheckName::Bound => {
            let r = inv::milnor_bound_check(fol(), &curve(f_text)?, args.k, assertions)?;
            Evaluation::new(command, inputs, r).k(args.k).verdict(r.holds)
        }
        CheckName::QhIdentity => {
            let r = inv::quasihomogeneous_identity_check(fol(), &curve(f_text)?, args.k, assertions)?;
            Evaluation::new(command, inputs, r).k(args.k).verdict(r.holds)
        }
        CheckName::SecondType => {
            let r = inv::second_type_milnor_check(fol(), &curve(f_text)?, k_max, assertions)?;
            Evaluation::new(command, inputs, &r).k(k_max).verdict(r.holds)
        }
        CheckName::Conjecture1 => {
            let r = inv::check_conjecture1(&poly("--f", f_text)?, args.k)?;
            let holds = r.holds;
            Evaluation::new(command, inputs, r).k(args.k).verdict(holds)
        }
        CheckName::Ratio => {
            // Reports the comparison either way; never a failed check.
            let r = inv::ratio_check(&poly("--f", f_text)?, args.k)?;
            Evaluation::new(command, inputs, r).k(args.k)
        }
    };
    Ok(ev)
}

fn closed_form(c: &ClosedCommand) -> Result<Evaluation> {
    Ok(match *c {
        ClosedCommand::MilnorK { mu, m, k } => {
            if m == 0 {
                return Err(Error::InvalidArgument("--m must be at least 1".into()));
            }
            Evaluation::new("closed", json!({ "formula": "milnor-k", "mu": mu, "m": m }), closed::milnor_k_closed(mu, m, k))
                .k(k)
        }
        ClosedCommand::MkPlusF { m, k } => {
            if m == 0 {
                return Err(Error::InvalidArgument("--m must be at least 1".into()));
            }
            Evaluation::new("closed", json!({ "formula": "mk-plus-f", "m": m }), closed::dim_mk_plus_f_closed(m, k)).k(k)
        }
        ClosedCommand::Reduced { ell, k } => {
            let kind = match ell {
                None => ReducedSingularityKind::NonDegenerate,
                Some(l) => ReducedSingularityKind::SaddleNode(l),
            };
            let (mu, tau) = inv::reduced_singularity_invariants(kind, k)?;
            Evaluation::new(
                "closed",
                json!({ "formula": "reduced", "ell": ell }),
                json!({ "mu_k": mu, "tau_k": tau }),
            )
            .k(k)
        }
        ClosedCommand::Ell { a1, a2, k } => {
            Evaluation::new("closed", json!({ "formula": "ell", "a1": a1, "a2": a2 }), inv::ell_k(a1, a2, k)?).k(k)
        }
    })
}

fn render_table(value: &Value) -> String {
    match value {
        Value::Null => "infinite".to_string(),
        Value::String(s) => s.clone(),
        Value::Object(map) => {
            let mut out = Vec::new();
            for (key, v) in map {
                match v {
                    Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                        let cols: Vec<&String> = rows[0].as_object().expect("object row").keys().collect();
                        out.push(cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("\t"));
                        for row in rows {
                            let cells: Vec<String> = cols.iter().map(|c| render_table(&row[c.as_str()])).collect();
                            out.push(cells.join("\t"));
                        }
                    }
                    _ => out.push(format!("{key}: {}", render_table(v))),
                }
            }
            out.join("\n")
        }
        other => other.to_string(),
    }
}

fn render(ev: &Evaluation, format: Format, elapsed_ms: u64) -> String {
    match format {
        Format::Json => ev.to_json(elapsed_ms).to_string(),
        Format::Table => render_table(&ev.result),
    }
}

fn run_scenarios(cmd: &ScenariosCommand, format: Format) -> Result<(String, i32)> {
    let load = |path: &Option<std::path::PathBuf>| match path {
        Some(p) => Registry::from_path(p),
        None => Ok(Registry::bundled()),
    };
    match cmd {
        ScenariosCommand::List { filter, registry } => {
            let reg = load(registry)?;
            let lines: Vec<String> = reg
                .select(filter.as_deref(), None)
                .map(|s| match format {
                    Format::Json => serde_json::to_string(s).expect("scenario serializes"),
                    Format::Table => format!("{}\t{}\t{}", s.id, s.tags.join(","), s.description),
                })
                .collect();
            Ok((lines.join("\n"), EXIT_OK))
        }
        ScenariosCommand::Run { all, filter, id, registry, no_timing } => {
            let reg = load(registry)?;
            if !all && filter.is_none() && id.is_none() {
                return Err(Error::InvalidArgument("scenarios run needs --all, --filter or --id".into()));
            }
            if let Some(id) = id {
                if reg.get(id).is_none() {
                    return Err(Error::UnknownScenario(id.clone()));
                }
            }
            let report = scenarios::run_all(&reg, filter.as_deref(), id.as_deref());
            let text = match format {
                Format::Json => report.to_json_lines(!no_timing),
                Format::Table => report.to_table(!no_timing),
            };
            let code = if report.summary.failed == 0 { EXIT_OK } else { EXIT_FALSE };
            Ok((text, code))
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code }
            } else {
                Output { stdout: text, stderr: String::new(), code }
            };
        }
    };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Scenarios(cmd) => run_scenarios(cmd, cli.format),
        other => evaluate(other).map(|ev| {
            let elapsed = start.elapsed().as_millis() as u64;
            let code = if ev.verdict == Some(false) { EXIT_FALSE } else { EXIT_OK };
            (render(&ev, cli.format, elapsed), code)
        }),
    };
    match outcome {
        Ok((text, code)) => Output { stdout: with_newline(text), stderr: String::new(), code },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        },
    }
}

fn with_newline(mut s: String) -> String {
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Evaluate a scenario's argument list (without the program name).
pub fn evaluate_args(args: &[String]) -> Result<Evaluation> {
    let cli = Cli::try_parse_from(std::iter::once("folinv".to_string()).chain(args.iter().cloned()))
        .map_err(|e| Error::InvalidArgument(e.kind().to_string()))?;
    evaluate(&cli.command)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("folinv").chain(args.iter().copied()))
    }

    #[test]
    fn worked_invocations() {
        assert_eq!(run_args(&["tjurina", "--k", "8", "x^5+y^5+x^3*y^3"]).stdout, "50\n");
        assert_eq!(run_args(&["gsv", "--P", "4*x*y", "--Q", "y-2*x^2", "--f", "y"]).stdout, "2\n");
        assert_eq!(run_args(&["vdim", "x^4-y^3", "y^5-x^7+x^4*y^4", "--mk", "4"]).stdout, "39\n");
        assert_eq!(run_args(&["vdim", "x^4-y^3", "--plus-mk", "4"]).stdout, "9\n");
        assert_eq!(run_args(&["vdim", "--mk", "1", "--", "-x", "-y"]).stdout, "3\n");
        assert_eq!(run_args(&["milnor", "-x^2-y^2", "--k", "1"]).stdout, "3\n");
        assert_eq!(run_args(&["gsv", "--P", "-3*y", "--Q", "2*x", "--f", "y^2-x^3"]).stdout, "-1\n");
    }

    #[test]
    fn infinite_and_errors() {
        let out = run_args(&["milnor", "x^2*y"]);
        assert_eq!((out.stdout.as_str(), out.code), ("infinite\n", 0));
        let out = run_args(&["milnor", "x^"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("offset 2"));
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["check", "bound", "--P", "2*x", "--Q", "2*y", "--f", "x^2+y^2"]).code, EXIT_INPUT);
    }

    #[test]
    fn verdict_exit_codes() {
        assert_eq!(run_args(&["invariant", "--P", "-y", "--Q", "x", "--f", "x+y^2"]).code, EXIT_FALSE);
        assert_eq!(run_args(&["check", "ratio", "--f", "x^5+y^5+x^3*y^3", "--k", "0"]).code, EXIT_OK);
        assert_eq!(run_args(&["check", "conjecture1", "--f", "y^3-x^7", "--k", "1"]).code, EXIT_OK);
    }

    #[test]
    fn json_document() {
        let out = run_args(&["--format", "json", "milnor", "x^2*y"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["result"], Value::Null);
        assert_eq!(v["finite"], Value::Bool(false));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 7);
    }
}
