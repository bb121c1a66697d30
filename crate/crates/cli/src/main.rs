use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use largeness::estimation::{greatest_below, inflate};
use largeness::fundamental::{fs, reaches, Reach};
use largeness::hardy::{
    extend_to_exactly_large, hardy_eval, hardy_value, ks_trace, largeness, split_point, Carrier, FinSet, Outcome,
    StepKind, DEFAULT_BUDGET,
};
use largeness::oracle::{enum_psn_bounded, verify, Universe, Verdict, DEFAULT_CAP, MAX_BITS};
use largeness::ramsey::{
    check_homogeneity, lk_conclusion, split_color, subsets, Coloring, Homogeneity, KsColoring, LkConclusion,
    TupleColoring,
};
use largeness::{parse_ordinal, render, Error, Ordinal, Style};

#[derive(Parser)]
#[command(name = "largeness", version, about = "Ordinals below epsilon_omega, Hardy functions and alpha-large sets")]
struct Cli {
    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normalize an expression.
    Eval { expr: Ord },
    /// Compare two ordinals.
    Cmp { a: Ord, b: Ord },
    /// Pseudonorm.
    Psn { expr: Ord },
    /// Level, height and pseudonorm.
    Measures { expr: Ord },
    /// The n-th element of the fundamental sequence.
    Fs { expr: Ord, n: u64 },
    /// The chain of n-steps from EXPR down to the floor.
    Chain {
        expr: Ord,
        n: u64,
        #[arg(long, default_value = "0")]
        floor: Ord,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Natural (commutative) sum.
    Natsum { a: Ord, b: Ord },
    /// Greatest ordinal below EXPR with pseudonorm at most A.
    Go { a: u64, expr: Ord },
    /// The largeness-inflation function.
    #[command(name = "F")]
    F { expr: Ord },
    /// Hardy function, over the successor or over a set.
    Hardy {
        expr: Ord,
        x: u64,
        #[arg(long)]
        set: Option<SetArg>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Emit every step.
        #[arg(long)]
        trace: bool,
    },
    /// Classify a set as small, exactly large or properly large.
    Large {
        expr: Ord,
        #[arg(long)]
        set: SetArg,
    },
    /// Ketonen-Solovay images of the elements of a set.
    Ks {
        expr: Ord,
        #[arg(long)]
        set: SetArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Split a (beta (+) alpha)-large set into alpha- and beta-large parts.
    Split {
        #[arg(long)]
        set: SetArg,
        #[arg(long)]
        alpha: Ord,
        #[arg(long)]
        beta: Ord,
    },
    /// Extend a small set by consecutive naturals to an exactly large one.
    Extend {
        #[arg(long)]
        set: SetArg,
        #[arg(long)]
        alpha: Ord,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Color ordinal tuples, or k-subsets of a set through their KS images.
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: i32,
        /// Descending ordinals (without --set) or ascending naturals (with --set).
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        tuple: Vec<String>,
        #[arg(long)]
        set: Option<SetArg>,
        /// Starting ordinal for the KS images; defaults to tow_{k-1}(e_m).
        #[arg(long)]
        mu: Option<Ord>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Estimating function or size bound for a homogeneous set.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        gamma: Vec<Ord>,
    },
    /// Enumerate the ordinals below a bound with bounded pseudonorm.
    Enum {
        #[arg(long)]
        bound: Ord,
        #[arg(long)]
        psn: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run a brute-force lemma verifier; parameters are KEY=VALUE.
    Verify {
        lemma_id: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone)]
struct Ord(Ordinal);

impl std::str::FromStr for Ord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_ordinal(s).map(Ord)
    }
}

/// A set given inline (`2,3,5`) or as a file of one natural per line.
#[derive(Clone)]
struct SetArg(FinSet);

impl std::str::FromStr for SetArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if Path::new(s).is_file() {
            let text = std::fs::read_to_string(s).map_err(|e| format!("{s}: {e}"))?;
            let mut elems = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                elems.push(line.parse::<u64>().map_err(|_| format!("{s}:{}: not a natural: {line}", i + 1))?);
            }
            return FinSet::ascending(elems).map(SetArg).map_err(|e| format!("{s}: {e}"));
        }
        s.parse::<FinSet>().map(SetArg).map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct Record {
    kind: &'static str,
    ordinal: Option<String>,
    position: Option<u64>,
    extra: Value,
}

struct Out {
    human: bool,
    sink: io::StdoutLock<'static>,
}

impl Out {
    fn emit(&mut self, kind: &'static str, ordinal: Option<&Ordinal>, position: Option<u64>, extra: Value) -> io::Result<()> {
        if self.human {
            let mut line = kind.to_string();
            if let Some(p) = position {
                line.push_str(&format!(" @{p}"));
            }
            if let Some(o) = ordinal {
                line.push_str(&format!("  {}", render(o, Style::Unicode)));
            }
            if !extra.is_null() && extra != json!({}) {
                line.push_str(&format!("  {extra}"));
            }
            writeln!(self.sink, "{line}")
        } else {
            let rec = Record { kind, ordinal: ordinal.map(|o| render(o, Style::Ascii)), position, extra };
            writeln!(self.sink, "{}", serde_json::to_string(&rec).expect("records serialize"))
        }
    }

    fn ordinal(&mut self, kind: &'static str, o: &Ordinal) -> io::Result<()> {
        self.emit(kind, Some(o), None, json!({}))
    }
}

/// Exit codes: 0 success, 1 a checked property failed, 2 usage or
/// precondition error, 3 budget exhausted or check skipped.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

const FAILED: u8 = 1;
const SKIPPED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { human: cli.human, sink: io::stdout().lock() };
    match run(cli.cmd, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("largeness: {e}");
            ExitCode::from(match e {
                CliError::Core(Error::Budget(_) | Error::CapExceeded { .. }) => SKIPPED,
                CliError::Io(_) => 1,
                _ => 2,
            })
        }
    }
}

fn strs(xs: &[Ordinal]) -> Vec<String> {
    xs.iter().map(|x| render(x, Style::Ascii)).collect()
}

fn run(cmd: Cmd, out: &mut Out) -> Result<u8, CliError> {
    match cmd {
        Cmd::Eval { expr } => out.ordinal("ordinal", &expr.0)?,
        Cmd::Cmp { a, b } => {
            let order = match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            out.emit("cmp", None, None, json!({ "a": render(&a.0, Style::Ascii), "order": order, "b": render(&b.0, Style::Ascii) }))?;
        }
        Cmd::Psn { expr } => out.emit("psn", Some(&expr.0), None, json!({ "psn": expr.0.psn() }))?,
        Cmd::Measures { expr } => {
            let (l, h) = if expr.0.is_zero() { (0, 0) } else { expr.0.level_and_height()? };
            out.emit("measures", Some(&expr.0), None, json!({ "level": l, "height": h, "psn": expr.0.psn() }))?;
        }
        Cmd::Fs { expr, n } => out.emit("fs", Some(&fs(&expr.0, n)?), Some(n), json!({ "of": render(&expr.0, Style::Ascii) }))?,
        Cmd::Chain { expr, n, floor, budget } => {
            let (chain, reached) = match reaches(&expr.0, &floor.0, n, budget)? {
                Reach::Yes(c) => (Some(c), "yes"),
                Reach::No => (None, "no"),
                Reach::BudgetExceeded(c) => (Some(c), "budget_exceeded"),
            };
            if let Some(c) = &chain {
                for (i, step) in c.steps.iter().enumerate() {
                    out.emit("step", Some(step), Some(i as u64 + 1), json!({}))?;
                }
            }
            let extra = json!({ "from": render(&expr.0, Style::Ascii), "index": n, "reached": reached });
            out.emit("chain", Some(&floor.0), None, extra)?;
            return Ok(match reached {
                "yes" => 0,
                "no" => FAILED,
                _ => SKIPPED,
            });
        }
        Cmd::Natsum { a, b } => out.ordinal("natsum", &a.0.natural_sum(&b.0))?,
        Cmd::Go { a, expr } => out.ordinal("go", &greatest_below(a, &expr.0)?)?,
        Cmd::F { expr } => out.ordinal("F", &inflate(&expr.0))?,
        Cmd::Hardy { expr, x, set, budget, trace } => {
            let carrier = set.as_ref().map_or(Carrier::Successor, |s| Carrier::Set(&s.0));
            let outcome = if trace {
                let t = hardy_eval(&expr.0, x, carrier, budget)?;
                for e in &t.entries {
                    let kind = match e.kind {
                        StepKind::LimitStep => "limit_step",
                        StepKind::SuccessorStep => "successor_step",
                    };
                    out.emit(kind, Some(&e.ordinal), Some(e.position), json!({}))?;
                }
                t.outcome
            } else {
                hardy_value(&expr.0, x, carrier, budget)?
            };
            let (value, extra) = match outcome {
                Outcome::Value(v) => (Some(v), json!({ "outcome": "value" })),
                Outcome::Undefined => (None, json!({ "outcome": "undefined" })),
                Outcome::BudgetExceeded(s) => (None, json!({ "outcome": "budget_exceeded", "at_least": x + s })),
            };
            out.emit("hardy", Some(&expr.0), value, extra)?;
            if matches!(outcome, Outcome::BudgetExceeded(_)) {
                return Ok(SKIPPED);
            }
        }
        Cmd::Large { expr, set } => {
            let l = largeness(&set.0, &expr.0)?;
            out.emit("largeness", Some(&expr.0), None, json!({ "set": set.0.to_string(), "result": l }))?;
        }
        Cmd::Ks { expr, set, budget } => {
            for (x, v) in ks_trace(&expr.0, &set.0, budget)? {
                out.emit("ks", Some(&v), Some(x), json!({}))?;
            }
        }
        Cmd::Split { set, alpha, beta } => {
            let u = split_point(&set.0, &alpha.0, &beta.0)?;
            let low = set.0.between(0, u).map(|s| s.to_string());
            let high = set.0.between(u, u64::MAX).map(|s| s.to_string());
            out.emit("split", Some(&beta.0.natural_sum(&alpha.0)), Some(u), json!({ "low": low, "high": high }))?;
        }
        Cmd::Extend { set, alpha, budget } => {
            let added = extend_to_exactly_large(&set.0, &alpha.0, budget)?;
            let extra = json!({ "added": added.to_string(), "set": set.0.union(&added).to_string() });
            out.emit("extend", Some(&alpha.0), None, extra)?;
        }
        Cmd::Color { k, m, tuple, set, mu, budget } => color(out, k, m, &tuple, set, mu, budget)?,
        Cmd::Theta { m, k, gamma } => return theta(out, m, k, &gamma.into_iter().map(|g| g.0).collect::<Vec<_>>()),
        Cmd::Enum { bound, psn, cap } => {
            let all = enum_psn_bounded(&Universe::new(bound.0.clone(), psn).with_cap(cap))?;
            for (i, o) in all.iter().enumerate() {
                out.emit("ordinal", Some(o), Some(i as u64), json!({}))?;
            }
            out.emit("count", Some(&bound.0), Some(all.len() as u64), json!({ "psn": psn }))?;
        }
        Cmd::Verify { lemma_id, params, seed } => {
            let mut map = BTreeMap::new();
            for p in params {
                let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage(format!("expected KEY=VALUE, got `{p}`")))?;
                map.insert(k.to_string(), v.to_string());
            }
            let report = verify(&lemma_id, &map, seed)?;
            if out.human {
                let verdict = match &report.verdict {
                    Verdict::Pass => "PASS".to_string(),
                    Verdict::Fail { counterexample } => format!("FAIL: {counterexample}"),
                    Verdict::Skipped { reason } => format!("SKIPPED: {reason}"),
                };
                writeln!(out.sink, "{} ({} instances, seed {}): {verdict}", report.lemma_id, report.instances, report.seed)?;
            } else {
                writeln!(out.sink, "{}", serde_json::to_string(&report).expect("reports serialize"))?;
            }
            return Ok(match report.verdict {
                Verdict::Pass => 0,
                Verdict::Fail { .. } => FAILED,
                Verdict::Skipped { .. } => SKIPPED,
            });
        }
    }
    Ok(0)
}

fn color_record(out: &mut Out, k: usize, tuple: Value, c: u64) -> io::Result<()> {
    let (head, rest) = split_color(k, c);
    out.emit("color", None, None, json!({ "tuple": tuple, "color": c, "head": head, "rest": rest }))
}

fn color(
    out: &mut Out,
    k: usize,
    m: i32,
    tuple: &[String],
    set: Option<SetArg>,
    mu: Option<Ord>,
    budget: u64,
) -> Result<(), CliError> {
    let Some(set) = set else {
        let t = tuple.iter().map(|s| parse_ordinal(s)).collect::<Result<Vec<_>, _>>()?;
        let c = TupleColoring { m, k }.color(&t)?;
        return Ok(color_record(out, k, json!(strs(&t)), c)?);
    };
    let coloring = match mu {
        Some(mu) => KsColoring::with_mu(m, k, &mu.0, set.0.clone(), budget)?,
        None => KsColoring::new(m, k, set.0.clone(), budget)?,
    };
    let tuples: Vec<Vec<u64>> = if tuple.is_empty() {
        let elems = set.0.elements();
        subsets(elems.len(), k).map(|idx| idx.iter().map(|&i| elems[i]).collect()).collect()
    } else {
        let t = tuple
            .iter()
            .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("not a natural: {s}"))))
            .collect::<Result<Vec<_>, _>>()?;
        vec![t]
    };
    for t in tuples {
        let c = coloring.color(&t)?;
        color_record(out, k, json!(t), c)?;
    }
    Ok(())
}

fn theta(out: &mut Out, m: i32, k: usize, gamma: &[Ordinal]) -> Result<u8, CliError> {
    match check_homogeneity(&TupleColoring { m, k }, gamma)? {
        Homogeneity::Homogeneous(c) => {
            let (head, rest) = split_color(k, c);
            out.emit("homogeneous", None, None, json!({ "k": k, "color": c, "head": head, "rest": rest }))?;
        }
        Homogeneity::Witness { first, second } => {
            let extra = json!({
                "first": { "tuple": strs(&first.0), "color": first.1 },
                "second": { "tuple": strs(&second.0), "color": second.1 },
            });
            out.emit("not_homogeneous", None, None, extra)?;
            return Ok(FAILED);
        }
    }
    match lk_conclusion(m, k, gamma, MAX_BITS)? {
        LkConclusion::Estimating(t) => {
            for (g, v) in t.domain.iter().zip(&t.values) {
                out.emit("theta", Some(v), None, json!({ "arg": render(g, Style::Ascii) }))?;
            }
            out.emit("theta_bound", Some(&t.bound), None, json!({ "domain_size": t.domain.len() }))?;
        }
        LkConclusion::SizeBound { size, bound } => {
            let bound = bound.map(|b| b.to_string());
            out.emit("size_bound", None, Some(size as u64), json!({ "bound": bound }))?;
        }
    }
    Ok(0)
}
