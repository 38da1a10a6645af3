//! Command-line dispatch. Every subcommand prints a human summary, or with
//! `--json` a `{"schema": "v1", "command", "result"}` document.

pub mod reproduce;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::fields::{build_biquad, QuadField};
use crate::lfunctions::{leopoldt_at_one, parse_character, PadicLSeries};
use crate::linvariants::{fg_check, general_regulator, report, UnitTable};
use crate::localalg::{build_model, model_report, ModelCase};
use crate::padic::{check_prime, hensel_root, iwasawa_log, padic_exp, teichmuller, Padic};
use crate::thetaforms::{class_characters, theta_qexp, up_identity_check, ClassCharacter};

pub const SCHEMA: &str = "v1";

#[derive(Parser, Debug)]
#[command(name = "padic-linv", version, about = "p-adic L-invariants, theta series and Hecke ring models")]
struct Cli {
    /// Emit a versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Working p-adic precision.
    #[arg(long, global = true, env = "PADIC_LINV_PREC", default_value_t = 30)]
    prec: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// p-adic scalar functions.
    #[command(subcommand)]
    Padic(PadicCmd),
    /// Kubota-Leopoldt series.
    #[command(subcommand)]
    Lfun(LfunCmd),
    /// L-invariants of biquadratic configurations.
    #[command(subcommand)]
    Linv(LinvCmd),
    /// Theta series of class group characters.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Truncated local Hecke ring models.
    #[command(subcommand)]
    Localalg(LocalalgCmd),
    /// Acceptance runs.
    #[command(subcommand)]
    Reproduce(ReproduceCmd),
}

#[derive(Args, Debug)]
struct ScalarArgs {
    #[arg(long)]
    p: u64,
    /// A rational `a/b` or a p-adic JSON object.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
}

#[derive(Subcommand, Debug)]
enum PadicCmd {
    /// Iwasawa logarithm.
    Log(ScalarArgs),
    /// Exponential on its disc of convergence.
    Exp(ScalarArgs),
    /// Teichmüller lift of a unit.
    Teich(ScalarArgs),
    /// Root of an integer polynomial lifted from a simple residue root.
    Hensel {
        #[arg(long)]
        p: u64,
        /// Comma-separated coefficients, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        seed: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum LfunCmd {
    /// Evaluate `L_p(chi, s)`.
    Eval {
        /// `quad:<disc>[*omega^k]` or `trivial`.
        #[arg(long)]
        chi: String,
        #[arg(long)]
        p: u64,
        /// A rational `a/b` or a p-adic JSON object.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// `L_p(chi, 1)` by Leopoldt's formula next to the series value.
    Leopoldt {
        #[arg(long)]
        chi: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand, Debug)]
enum LinvCmd {
    /// Slope, L-invariants and route agreement.
    Report {
        #[arg(long = "dK", allow_hyphen_values = true, required_unless_present = "config")]
        d_k: Option<i64>,
        #[arg(long = "dF", allow_hyphen_values = true, required_unless_present = "config")]
        d_f: Option<i64>,
        #[arg(long, required_unless_present = "config")]
        p: Option<u64>,
        /// A serialized configuration; rebuilt and its embeddings compared.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Derivative at the trivial zero against the class number formula.
    FgCheck {
        #[arg(long = "dKprime", allow_hyphen_values = true)]
        d_kprime: i64,
        #[arg(long)]
        p: u64,
    },
    /// Regulator of a unit table read from JSON.
    General {
        #[arg(long)]
        units: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ThetaCmd {
    /// Coefficients `a_0 .. a_len` of a theta series.
    Qexp {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        /// Index into the class group characters; 0 is trivial.
        #[arg(long = "char", default_value_t = 1)]
        character: usize,
        #[arg(long, default_value_t = 100)]
        len: usize,
    },
    /// `U_p` on the theta series and its p-stabilization.
    UpCheck {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 600)]
        len: usize,
        #[arg(long = "char", default_value_t = 1)]
        character: usize,
    },
}

#[derive(Subcommand, Debug)]
enum LocalalgCmd {
    /// Build a model; `--report` adds dimensions, socle and congruence ideals.
    Model {
        #[arg(long)]
        case: ModelCase,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long = "D")]
        degree: Option<u32>,
        #[arg(long)]
        report: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ReproduceCmd {
    /// Run every acceptance criterion and print the table.
    All {
        /// Also run the randomized property suites.
        #[arg(long)]
        properties: bool,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// Result of a subcommand: JSON payload, text rendering, and whether its checks held.
struct Outcome {
    result: Value,
    text: String,
    passed: bool,
}

impl Outcome {
    fn new(result: impl Serialize, text: String) -> Result<Self, String> {
        Ok(Outcome { result: serde_json::to_value(result).map_err(|e| e.to_string())?, text, passed: true })
    }

    fn check(mut self, passed: bool) -> Self {
        self.passed = passed;
        self
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = json!({ "schema": SCHEMA, "command": name, "result": out.result });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn command_name(c: &Command) -> String {
    let (group, sub) = match c {
        Command::Padic(s) => ("padic", match s {
            PadicCmd::Log(_) => "log",
            PadicCmd::Exp(_) => "exp",
            PadicCmd::Teich(_) => "teich",
            PadicCmd::Hensel { .. } => "hensel",
        }),
        Command::Lfun(s) => ("lfun", match s {
            LfunCmd::Eval { .. } => "eval",
            LfunCmd::Leopoldt { .. } => "leopoldt",
        }),
        Command::Linv(s) => ("linv", match s {
            LinvCmd::Report { .. } => "report",
            LinvCmd::FgCheck { .. } => "fg-check",
            LinvCmd::General { .. } => "general",
        }),
        Command::Theta(s) => ("theta", match s {
            ThetaCmd::Qexp { .. } => "qexp",
            ThetaCmd::UpCheck { .. } => "up-check",
        }),
        Command::Localalg(LocalalgCmd::Model { .. }) => ("localalg", "model"),
        Command::Reproduce(ReproduceCmd::All { .. }) => ("reproduce", "all"),
    };
    format!("{group} {sub}")
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    let prec = cli.prec;
    if prec < 8 {
        return Err(format!("precision {prec} is below 8"));
    }
    match &cli.command {
        Command::Padic(cmd) => padic(cmd, prec),
        Command::Lfun(cmd) => lfun(cmd, prec),
        Command::Linv(cmd) => linv(cmd, prec),
        Command::Theta(cmd) => theta(cmd),
        Command::Localalg(LocalalgCmd::Model { case, r, e, degree, report }) => model(*case, *r, *e, *degree, *report),
        Command::Reproduce(ReproduceCmd::All { properties, seed }) => reproduce_all(prec, properties.then_some(*seed)),
    }
}

/// A rational `a/b` or a p-adic JSON object, at `prec` digits.
fn parse_scalar(p: u64, s: &str, prec: u32) -> Result<Padic, String> {
    check_prime(p).map_err(err)?;
    let s = s.trim();
    if s.starts_with('{') {
        let x: Padic = serde_json::from_str(s).map_err(err)?;
        if x.p() != p {
            return Err(format!("scalar is {}-adic, expected {p}", x.p()));
        }
        return Ok(x);
    }
    let q = BigRational::from_str(s).map_err(|_| format!("cannot parse {s:?} as a rational or p-adic JSON"))?;
    Ok(Padic::from_rational(p, &q, prec))
}

fn padic_line(label: &str, x: &Padic) -> String {
    format!("{label} = {x}\n")
}

fn padic(cmd: &PadicCmd, prec: u32) -> Result<Outcome, String> {
    let (label, value) = match cmd {
        PadicCmd::Log(a) => ("log_p(x)", iwasawa_log(&parse_scalar(a.p, &a.x, prec)?).map_err(err)?),
        PadicCmd::Exp(a) => ("exp_p(x)", padic_exp(&parse_scalar(a.p, &a.x, prec)?).map_err(err)?),
        PadicCmd::Teich(a) => ("omega(x)", teichmuller(&parse_scalar(a.p, &a.x, prec)?, prec).map_err(err)?),
        PadicCmd::Hensel { p, coeffs, seed } => {
            let coeffs = coeffs
                .split(',')
                .map(|c| BigInt::from_str(c.trim()).map_err(|_| format!("bad coefficient {c:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            ("root", hensel_root(*p, &coeffs, seed, prec).map_err(err)?)
        }
    };
    Outcome::new(&value, padic_line(label, &value))
}

fn lfun(cmd: &LfunCmd, prec: u32) -> Result<Outcome, String> {
    match cmd {
        LfunCmd::Eval { chi, p, s } => {
            let chi = parse_character(chi, Some(*p)).map_err(err)?;
            let s = parse_scalar(*p, s, 2 * prec + 12)?;
            let value = PadicLSeries::new(chi, *p, prec).and_then(|series| series.eval(&s)).map_err(err)?;
            let text = format!("L_{p}({chi}, s) = {value}\n");
            Outcome::new(json!({ "chi": chi.to_string(), "p": p, "value": value, "digits": value.to_string() }), text)
        }
        LfunCmd::Leopoldt { chi, p } => {
            let chi = parse_character(chi, Some(*p)).map_err(err)?;
            let leopoldt = leopoldt_at_one(&chi, *p, prec).map_err(err)?;
            let one = Padic::one(*p, 4 * prec);
            let series = PadicLSeries::new(chi, *p, prec).and_then(|s| s.eval(&one)).map_err(err)?;
            let agreement = leopoldt.agreement(&series);
            let text = format!(
                "{}{}agreement: {agreement} digits\n",
                padic_line("Leopoldt formula", &leopoldt),
                padic_line("series at s = 1", &series)
            );
            let passed = agreement >= prec as i64 - 2;
            Ok(Outcome::new(json!({ "chi": chi.to_string(), "p": p, "leopoldt": leopoldt, "series": series, "agreementDigits": agreement }), text)?
                .check(passed))
        }
    }
}

fn read_json(path: &PathBuf) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn linv(cmd: &LinvCmd, prec: u32) -> Result<Outcome, String> {
    match cmd {
        LinvCmd::Report { d_k, d_f, p, config } => {
            let stored = config.as_ref().map(read_json).transpose()?;
            let field = |key: &str| stored.as_ref().and_then(|v| v.get(key)).and_then(Value::as_i64);
            let d_k = d_k.or(field("dK")).ok_or("missing dK")?;
            let d_f = d_f.or(field("dF")).ok_or("missing dF")?;
            let p = p.or(field("p").map(|p| p as u64)).ok_or("missing p")?;
            let prec = field("prec").map(|n| n as u32).unwrap_or(prec);
            let built = build_biquad(d_k, d_f, p, prec).map_err(err)?;
            let mut passed = true;
            let mut text = String::new();
            if let Some(stored) = &stored {
                for key in ["embedK", "embedF", "embedKprime"] {
                    let given: Padic = stored
                        .get(key)
                        .cloned()
                        .ok_or_else(|| format!("configuration lacks {key}"))
                        .and_then(|v| serde_json::from_value(v).map_err(err))?;
                    let rebuilt = serde_json::to_value(&built).map_err(err)?;
                    let ours: Padic = serde_json::from_value(rebuilt[key].clone()).map_err(err)?;
                    let same = given.eq_to_prec(&ours);
                    passed &= same;
                    let _ = writeln!(text, "{key}: {}", if same { "matches" } else { "differs from the rebuilt embedding" });
                }
            }
            let r = report(&built).map_err(err)?;
            passed &= r.route_agreement_digits >= prec as i64 - 4;
            let _ = writeln!(text, "K = Q(sqrt {d_k}), F = Q(sqrt {d_f}), p = {p}, precision {prec}");
            text += &padic_line("slope", &r.slope);
            text += &padic_line("L_p", &r.ell_p);
            text += &padic_line("L_-", &r.ell_minus);
            text += &padic_line("L(psi)", &r.ell_psi);
            let _ = writeln!(text, "route agreement: {} digits", r.route_agreement_digits);
            Ok(Outcome::new(&r, text)?.check(passed))
        }
        LinvCmd::FgCheck { d_kprime, p } => {
            let r = fg_check(*d_kprime, *p, prec).map_err(err)?;
            let text = format!(
                "{}{}agreement: {} digits\n",
                padic_line("L_p'(eps omega, 0)", &r.lhs),
                padic_line("-L(eps) L(eps, 0)", &r.rhs),
                r.agreement_digits
            );
            let passed = r.agreement_digits >= prec as i64 - 5;
            Ok(Outcome::new(&r, text)?.check(passed))
        }
        LinvCmd::General { units } => {
            let table: UnitTable = serde_json::from_value(read_json(units)?).map_err(err)?;
            let value = general_regulator(&table).map_err(err)?;
            Outcome::new(&value, padic_line("regulator", &value))
        }
    }
}

fn character(disc: i64, index: usize) -> Result<ClassCharacter, String> {
    let k = QuadField::new(disc).map_err(err)?;
    let chars = class_characters(&k).map_err(err)?;
    let count = chars.len();
    chars.into_iter().nth(index).ok_or_else(|| format!("disc {disc} has {count} class group characters"))
}

fn theta(cmd: &ThetaCmd) -> Result<Outcome, String> {
    match cmd {
        ThetaCmd::Qexp { disc, character: index, len } => {
            let q = theta_qexp(&character(*disc, *index)?, *len).map_err(err)?;
            let mut text = format!("level {}, weight {}, nebentypus {}, cuspidal {}\n", q.level, q.weight, q.nebentypus, q.cuspidal);
            for (n, a) in q.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                let _ = writeln!(text, "a_{n} = {a}");
            }
            Outcome::new(&q, text)
        }
        ThetaCmd::UpCheck { disc, p, len, character: index } => {
            let c = up_identity_check(&character(*disc, *index)?, *p, *len).map_err(err)?;
            let text = format!(
                "psi(p) = {}\nidentities hold through q^{}\nU_p matrix [[{}, {}], [{}, {}]]\nnilpotency index {}, semisimple {}\n",
                c.psi_p,
                c.checked_up_to,
                c.matrix[0][0],
                c.matrix[0][1],
                c.matrix[1][0],
                c.matrix[1][1],
                c.nilpotency_index,
                c.semisimple
            );
            let passed = !c.semisimple;
            Ok(Outcome::new(&c, text)?.check(passed))
        }
    }
}

fn model(case: ModelCase, r: u32, e: u32, degree: Option<u32>, full: bool) -> Result<Outcome, String> {
    let degree = degree.unwrap_or(2 * r + 4);
    if full {
        let m = model_report(case, r, e, degree).map_err(err)?;
        let mut text = presentation_text(case, r, e, degree, &m.generators, &m.relations, m.dim);
        let _ = writeln!(text, "tangent dim {}, special fiber dim {}", m.tangent_dim, m.special_fiber_dim);
        let _ = writeln!(
            text,
            "Gorenstein {}, socle dim {}",
            m.gorenstein.is_gorenstein, m.gorenstein.socle_dim
        );
        let _ = writeln!(text, "congruence ideals X^{} (psi), X^{} (psi tau)", m.congruence_psi.exponent, m.congruence_psi_tau.exponent);
        let _ = writeln!(text, "stable under larger truncation: {}", m.stable);
        return Outcome::new(&m, text);
    }
    let m = build_model(case, r, e, degree).map_err(err)?;
    let names: Vec<String> = m.ring.names().to_vec();
    let relations: Vec<String> = m.ring.relations().iter().map(|rel| rel.display(&names).to_string()).collect();
    let text = presentation_text(case, r, e, degree, &names, &relations, m.ring.dim());
    Outcome::new(
        json!({ "case": case, "r": r, "e": e, "truncation": degree, "generators": names, "relations": relations, "dim": m.ring.dim(), "stable": m.stable }),
        text,
    )
}

fn presentation_text(case: ModelCase, r: u32, e: u32, degree: u32, names: &[String], relations: &[String], dim: usize) -> String {
    format!(
        "case {case}, r = {r}, e = {e}, truncated at degree {degree}\ngenerators: {}\nrelations: {}\ndimension {dim}\n",
        names.join(", "),
        relations.join(", ")
    )
}

fn reproduce_all(prec: u32, seed: Option<u64>) -> Result<Outcome, String> {
    let criteria = reproduce::run_all(prec, seed);
    let passed = criteria.iter().all(|c| c.ok());
    Ok(Outcome::new(json!({ "prec": prec, "seed": seed, "criteria": criteria, "passed": passed }), table(&criteria))?.check(passed))
}

/// Pass/fail table with timings and per-case details.
pub fn table(criteria: &[reproduce::Criterion]) -> String {
    let mut out = String::new();
    for c in criteria {
        let status = match (c.passed, c.within_budget) {
            (true, true) => "PASS",
            (true, false) => "SLOW",
            _ => "FAIL",
        };
        let _ = writeln!(out, "{} {status} {:>7.2}s  {}", c.id, c.seconds, c.title);
        for line in &c.detail {
            let _ = writeln!(out, "      {line}");
        }
    }
    out
}
