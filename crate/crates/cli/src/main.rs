//! `hopf-partial`: build Taft and Nichols Hopf algebras, construct partial
//! actions and coactions on them, and check every axiom exhaustively.
//!
//! Exit status is 0 when every asserted property holds, 1 when a check fails
//! (the JSON report carries the counterexample) and 2 on usage or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf_partial::corpus::{run_example, Artifact, Example, ExampleConfig, T4Case};
use hopf_partial::cyclotomic::{CycNum, RootOfUnity};
use hopf_partial::hopf::{check_hopf_axioms, group_algebra, nichols_algebra, taft_algebra, HopfData, HopfKind};
use hopf_partial::linalg::Vector;
use hopf_partial::mutation::run_mutation_suite;
use hopf_partial::paction::{
    check_partial_action, construct_nichols_action, construct_taft_action, taft_parameters, ActionError, ActionTable,
    PartialCnAction,
};
use hopf_partial::pcoaction::{
    check_partial_coaction, construct_nichols_coaction, construct_taft_coaction, dualize_action, dualize_coaction,
    CoactionTable,
};
use hopf_partial::qcomb::{verify_grid, IdentityTag};
use hopf_partial::targets::{parse_element, TargetAlgebra, TargetSpec};

#[derive(Parser)]
#[command(name = "hopf-partial", version, about = "Exact partial (co)actions of Taft and Nichols Hopf algebras")]
struct Cli {
    /// Print reports on one line instead of indented.
    #[arg(long, global = true)]
    compact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the q-binomial identity suite over a grid of roots of unity.
    VerifyIdentities {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Restrict to these identities (repeatable).
        #[arg(long = "tag")]
        tags: Vec<String>,
    },
    /// Build a Hopf algebra and write its structure constants.
    Build {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Exponent t of q = ζₙ^t (Taft only).
        #[arg(long, default_value_t = 1)]
        q_power: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Hopf algebra axioms of a JSON file or a named algebra.
    CheckHopf {
        /// `taft:n:t`, `nichols:n`, `group:n` or a path to a JSON file.
        hopf: String,
    },
    /// Construct a partial action from g·1, w and the classification formulas.
    ConstructAction(Construct),
    /// Check the partial action axioms of an action table.
    CheckAction { input: PathBuf },
    /// Convert between a partial action of H* and a partial coaction of H.
    Dualize {
        #[arg(long, value_enum)]
        direction: Direction,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a partial coaction from g·1 and w.
    ConstructCoaction(Construct),
    /// Check a partial coaction through its dual action.
    CheckCoaction { input: PathBuf },
    /// Reproduce a worked example and compare it with its printed display.
    Examples {
        /// h4, t3, t4, nichols:n or one of these with a -coaction suffix.
        #[arg(long)]
        paper: String,
        #[arg(long, default_value = "field")]
        target: String,
        /// The element x·1 (repeatable for Nichols algebras).
        #[arg(long = "w", allow_hyphen_values = true)]
        w: Vec<String>,
        #[arg(long, default_value_t = 1)]
        q_power: u32,
        /// Which T4 family to build: degenerate, twisted or identity.
        #[arg(long, default_value = "degenerate")]
        t4_case: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perturb single coefficients of an action table and count how many the checker catches.
    Mutate {
        input: PathBuf,
        #[arg(long, default_value_t = 60)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Construct {
    /// `taft:n:t`, `nichols:n` or a path to a JSON file.
    #[arg(long)]
    hopf: String,
    #[arg(long, default_value = "field")]
    target: String,
    /// The element x·1 (repeatable for Nichols algebras), e.g. "z" or "e12 + q*e23".
    #[arg(long = "w", allow_hyphen_values = true)]
    w: Vec<String>,
    /// JSON partial group action of Cₙ; defaults to the one with g·1 = 0.
    #[arg(long)]
    cn_action: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Taft,
    Nichols,
    Group,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ActionToCoaction,
    CoactionToAction,
}

struct Output {
    compact: bool,
}

impl Output {
    fn render(&self, v: &impl serde::Serialize) -> Result<String> {
        let s = if self.compact { serde_json::to_string(v)? } else { serde_json::to_string_pretty(v)? };
        Ok(s + "\n")
    }

    fn report(&self, v: &impl serde::Serialize) -> Result<()> {
        print!("{}", self.render(v)?);
        Ok(())
    }

    /// Writes to `out` when given, otherwise to stdout.
    fn emit(&self, v: &impl serde::Serialize, out: Option<&Path>) -> Result<()> {
        match out {
            Some(p) => fs::write(p, self.render(v)?).with_context(|| format!("writing {}", p.display())),
            None => self.report(v),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_num(s: &str, what: &str) -> Result<u32> {
    s.parse().with_context(|| format!("bad {what} {s:?}"))
}

fn load_hopf(spec: &str) -> Result<HopfData> {
    let parts: Vec<&str> = spec.split(':').collect();
    let built = match parts.as_slice() {
        ["taft", n] | ["taft", n, _] => {
            let n = parse_num(n, "n")?;
            let t = parts.get(2).map(|t| parse_num(t, "q-power")).transpose()?.unwrap_or(1);
            taft_algebra(n, &RootOfUnity::new(n, t as i64)?)?
        }
        ["nichols", n] => nichols_algebra(parse_num(n, "n")?)?,
        ["group", n] => group_algebra(parse_num(n, "n")?)?,
        _ => return read_json(Path::new(spec)),
    };
    Ok(built)
}

fn parse_w(exprs: &[String], target: &TargetAlgebra, q: Option<&CycNum>) -> Result<Vec<Vector>> {
    exprs
        .iter()
        .map(|e| parse_element(e, &target.alg, q).with_context(|| format!("parsing w = {e:?}")))
        .collect()
}

fn refusal(err: &ActionError) -> Value {
    match err {
        ActionError::Precondition(p) => json!({ "refused": err.to_string(), "precondition": p }),
        _ => json!({ "refused": err.to_string() }),
    }
}

enum Built {
    Action(ActionTable),
    Coaction(CoactionTable),
}

/// `Ok(false)` means the inputs parsed but the construction was refused.
fn construct(args: &Construct, coaction: bool, out: &Output) -> Result<bool> {
    let hopf = Arc::new(load_hopf(&args.hopf)?);
    let conductor = hopf.conductor();
    let built = match hopf.kind() {
        HopfKind::Taft { .. } => {
            let (n, q) = taft_parameters(&hopf)?;
            let pca = match &args.cn_action {
                Some(p) => read_json::<PartialCnAction>(p)?,
                None => {
                    let spec: TargetSpec = args.target.parse()?;
                    PartialCnAction::degenerate(n, Arc::new(spec.build()?.embed(conductor)?))
                }
            };
            let w = match parse_w(&args.w, pca.target(), Some(&q.value()))?.as_slice() {
                [] => pca.target().alg.zero(),
                [w] => w.clone(),
                _ => bail!("a Taft algebra takes a single --w"),
            };
            if coaction {
                construct_taft_coaction(hopf, &pca, &w).map(Built::Coaction)
            } else {
                construct_taft_action(hopf, &pca, &w).map(Built::Action)
            }
        }
        HopfKind::Nichols { .. } => {
            if args.cn_action.is_some() {
                bail!("--cn-action applies to Taft algebras only");
            }
            let spec: TargetSpec = args.target.parse()?;
            let target = Arc::new(spec.build()?.embed(conductor)?);
            let w = parse_w(&args.w, &target, None)?;
            if coaction {
                construct_nichols_coaction(hopf, target, &w).map(Built::Coaction)
            } else {
                construct_nichols_action(hopf, target, &w).map(Built::Action)
            }
        }
        _ => bail!("constructions are available for Taft and Nichols algebras"),
    };
    let out_path = args.out.as_deref();
    match built {
        Ok(Built::Action(t)) => out.emit(&t, out_path)?,
        Ok(Built::Coaction(t)) => out.emit(&t, out_path)?,
        Err(e @ (ActionError::Precondition(_) | ActionError::GlobalityViolated { .. } | ActionError::Pa1Fails)) => {
            out.report(&refusal(&e))?;
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    let out = Output { compact: cli.compact };
    match cli.command {
        Command::VerifyIdentities { n_min, n_max, tags } => {
            if n_min < 2 || n_max < n_min {
                bail!("need 2 <= n-min <= n-max");
            }
            let tags = if tags.is_empty() {
                IdentityTag::ALL.to_vec()
            } else {
                tags.iter()
                    .map(|t| IdentityTag::parse(t).ok_or_else(|| anyhow!("unknown identity tag {t:?}")))
                    .collect::<Result<_>>()?
            };
            let report = verify_grid(n_min, n_max, &tags);
            out.report(&report)?;
            Ok(report.passed())
        }
        Command::Build { family, n, q_power, out: path } => {
            let h = match family {
                Family::Taft => taft_algebra(n, &RootOfUnity::new(n, q_power as i64)?)?,
                Family::Nichols => nichols_algebra(n)?,
                Family::Group => group_algebra(n)?,
            };
            out.emit(&h, path.as_deref())?;
            Ok(true)
        }
        Command::CheckHopf { hopf } => {
            let report = check_hopf_axioms(&load_hopf(&hopf)?);
            out.report(&report)?;
            Ok(report.passed())
        }
        Command::ConstructAction(args) => construct(&args, false, &out),
        Command::ConstructCoaction(args) => construct(&args, true, &out),
        Command::CheckAction { input } => {
            let act: ActionTable = read_json(&input)?;
            let report = check_partial_action(&act);
            out.report(&report)?;
            Ok(report.is_partial_action())
        }
        Command::CheckCoaction { input } => {
            let co: CoactionTable = read_json(&input)?;
            let report = check_partial_coaction(&co)?;
            out.report(&report)?;
            Ok(report.is_partial_coaction())
        }
        Command::Dualize { direction, input, out: path } => {
            match direction {
                Direction::ActionToCoaction => out.emit(&dualize_action(&read_json(&input)?)?, path.as_deref())?,
                Direction::CoactionToAction => out.emit(&dualize_coaction(&read_json(&input)?)?, path.as_deref())?,
            }
            Ok(true)
        }
        Command::Examples { paper, target, w, q_power, t4_case, out: path } => {
            let example: Example = paper.parse().map_err(|e: String| anyhow!(e))?;
            let spec: TargetSpec = target.parse()?;
            let case: T4Case = t4_case.parse().map_err(|e: String| anyhow!(e))?;
            let w: Vec<&str> = w.iter().map(String::as_str).collect();
            let cfg = ExampleConfig::new(example, spec)?.with_w(&w).with_q_power(q_power).with_t4_case(case);
            let report = match run_example(&cfg) {
                Ok(r) => r,
                Err(e @ ActionError::Precondition(_)) => {
                    out.report(&refusal(&e))?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let ok = report.passed();
            if let Some(p) = path.as_deref() {
                if report.artifact.passes_checker() {
                    match &report.artifact {
                        Artifact::Action { table, .. } => out.emit(table, Some(p))?,
                        Artifact::Coaction { table, .. } => out.emit(table, Some(p))?,
                    }
                } else {
                    eprintln!("artifact fails its checker; {} not written", p.display());
                }
            }
            out.report(&report)?;
            Ok(ok)
        }
        Command::Mutate { input, count, seed } => {
            let act: ActionTable = read_json(&input)?;
            let report = run_mutation_suite(&act, count, seed);
            out.report(&report)?;
            Ok(report.passed())
        }
    }
}

fn init_workers() -> Result<()> {
    if let Ok(v) = std::env::var("HOPF_PARTIAL_WORKERS") {
        let n: usize = v.parse().with_context(|| format!("HOPF_PARTIAL_WORKERS={v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_workers().and_then(|_| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
