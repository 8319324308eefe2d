//! Argument parsing and command dispatch.
//!
//! Every run produces a [`RunReport`]; `--json` switches the output from
//! human text to the machine form. Exit codes: 0 when every requested
//! check passed, 1 on a failed check or verdict, 2 on usage and input
//! errors, 3 on budget refusals.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monoideal::decomp::{
    alexander_dual, associated_primes, irreducible_decomposition, minimal_primes, symbolic_power,
    PrimeIdeal,
};
use monoideal::graph::Graph;
use monoideal::ntf::{beta1, is_minimally_not_ntf, is_ntf_up_to};
use monoideal::{MonomialIdeal, VarContext};

use crate::error::CliError;
use crate::files::{self, ParsedIdeal};
use crate::report::{self, format_prime, ideal_result, prime_json, InputDigest, Payload, RunReport};
use crate::suite::{self, ScenarioStatus};

#[derive(Parser)]
#[command(
    name = "monoideal",
    version,
    about = "Exact computations with square-free monomial ideals",
    arg_required_else_help = true
)]
pub struct Cli {
    /// Emit the machine-readable JSON report instead of human text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the canonical minimal generating set of an ideal.
    Min { file: PathBuf },
    /// Print the associated primes, one bracketed prime per line.
    Ass { file: PathBuf },
    /// Print the minimal primes.
    Minprimes { file: PathBuf },
    /// Print the irredundant irreducible decomposition.
    Decompose { file: PathBuf },
    /// Print the Alexander dual (square-free input).
    Dual { file: PathBuf },
    /// Print the k-th power.
    Power {
        file: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Print the k-th symbolic power (square-free input).
    Symbolic {
        file: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Intersect two or more ideals over the same variables.
    Intersect {
        #[arg(num_args = 2.., required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the colon ideal (I : m).
    Colon {
        file: PathBuf,
        /// The monomial to colon by, e.g. x2*x3^2.
        #[arg(long, value_name = "MONOMIAL")]
        by: String,
    },
    /// Print a single-variable minor: --delete sets the variable to zero,
    /// --contract to one.
    Minor {
        file: PathBuf,
        #[arg(long, value_name = "VAR")]
        delete: Option<String>,
        #[arg(long, value_name = "VAR")]
        contract: Option<String>,
    },
    /// Scan Ass(I^k) up to a horizon and report torsion-freeness.
    Ntf {
        file: PathBuf,
        #[arg(long, value_name = "K", default_value_t = 3)]
        max_power: u32,
    },
    /// Decide whether the ideal fails torsion-freeness minimally.
    Mnnt {
        file: PathBuf,
        #[arg(long, value_name = "K", default_value_t = 3)]
        max_power: u32,
    },
    /// Print the largest number of pairwise-coprime minimal generators.
    Beta1 { file: PathBuf },
    /// Build or read a graph and print one of its ideals.
    Graph(GraphArgs),
    /// Run the verification scenarios A..G.
    Suite(SuiteArgs),
}

#[derive(Args)]
pub struct GraphArgs {
    /// Graph family to build (with --n).
    #[arg(long = "type", value_enum, value_name = "FAMILY")]
    pub family: Option<GraphFamily>,
    /// Vertex count for --type.
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
    /// Seed for --type tree.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Read the graph from a file instead of building one.
    #[arg(long, value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// Which ideal of the graph to print.
    #[arg(long, value_enum, value_name = "KIND")]
    pub ideal: GraphIdealKind,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFamily {
    Path,
    Cycle,
    Star,
    /// A uniformly seeded random labeled tree.
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphIdealKind {
    /// Edge ideal: one generator per edge.
    Edge,
    /// Cover ideal: one generator per minimal vertex cover.
    Cover,
    /// Closed neighborhood ideal.
    Ni,
    /// Dominating ideal: one generator per minimal dominating set.
    Di,
}

#[derive(Args)]
pub struct SuiteArgs {
    /// Run a single scenario A..G; default runs all of them.
    #[arg(long, value_name = "LABEL")]
    pub scenario: Option<String>,
    /// Power horizon for the torsion-freeness scans (at least 3).
    #[arg(long, value_name = "K", default_value_t = 3)]
    pub max_power: u32,
    /// Seed for the randomized scenarios.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Entry point: parses `argv`, runs the command, emits the report, and
/// returns the process exit code.
pub fn main_with(argv: Vec<String>) -> ExitCode {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command_echo = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let started = Instant::now();
    match execute(&cli.command) {
        Ok(payload) => {
            let report = RunReport {
                command: command_echo,
                inputs: payload.inputs,
                result: payload.result,
                verdict: payload.verdict,
                witnesses: payload.witnesses,
                timing_ms: started.elapsed().as_millis() as u64,
                seed: payload.seed,
            };
            if cli.json {
                print!("{}", report::to_json(&report));
            } else {
                print!("{}", payload.human);
            }
            ExitCode::from(payload.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs one command to a report payload.
pub fn execute(command: &Command) -> Result<Payload, CliError> {
    match command {
        Command::Min { file } => {
            let (parsed, inputs) = load_ideal(file)?;
            Ok(Payload::ideal(&parsed.ctx, &parsed.ideal, inputs))
        }
        Command::Ass { file } => {
            let (parsed, inputs) = load_ideal(file)?;
            let primes = associated_primes(&parsed.ideal)?;
            Ok(primes_payload(&parsed.ctx, &primes, inputs))
        }
        Command::Minprimes { file } => {
            let (parsed, inputs) = load_ideal(file)?;
            let primes = minimal_primes(&parsed.ideal)?;
            Ok(primes_payload(&parsed.ctx, &primes, inputs))
        }
        Command::Decompose { file } => cmd_decompose(file),
        Command::Dual { file } => {
            let (parsed, inputs) = load_ideal(file)?;
            let dual = alexander_dual(&parsed.ideal)?;
            Ok(Payload::ideal(&parsed.ctx, &dual, inputs))
        }
        Command::Power { file, k } => {
            let (parsed, inputs) = load_ideal(file)?;
            let power = parsed.ideal.power(*k)?;
            Ok(Payload::ideal(&parsed.ctx, &power, inputs))
        }
        Command::Symbolic { file, k } => {
            let (parsed, inputs) = load_ideal(file)?;
            let symbolic = symbolic_power(&parsed.ideal, *k)?;
            Ok(Payload::ideal(&parsed.ctx, &symbolic, inputs))
        }
        Command::Intersect { files } => cmd_intersect(files),
        Command::Colon { file, by } => {
            let (parsed, inputs) = load_ideal(file)?;
            let monomial = parsed
                .ctx
                .parse_monomial(by)
                .map_err(|e| CliError::Usage(format!("bad monomial '{by}': {e}")))?;
            let colon = parsed.ideal.colon(&monomial)?;
            Ok(Payload::ideal(&parsed.ctx, &colon, inputs))
        }
        Command::Minor { file, delete, contract } => cmd_minor(file, delete, contract),
        Command::Ntf { file, max_power } => cmd_ntf(file, *max_power),
        Command::Mnnt { file, max_power } => cmd_mnnt(file, *max_power),
        Command::Beta1 { file } => {
            let (parsed, inputs) = load_ideal(file)?;
            let b = beta1(&parsed.ideal)?;
            Ok(Payload {
                inputs,
                result: json!({ "beta1": b }),
                verdict: None,
                witnesses: Vec::new(),
                human: format!("beta1: {b}\n"),
                exit_code: 0,
                seed: None,
            })
        }
        Command::Graph(args) => cmd_graph(args),
        Command::Suite(args) => cmd_suite(args),
    }
}

fn load_ideal(file: &Path) -> Result<(ParsedIdeal, Vec<InputDigest>), CliError> {
    let (parsed, bytes) = files::read_ideal_file(file)?;
    let digest = InputDigest::new(file.display().to_string(), &bytes);
    Ok((parsed, vec![digest]))
}

fn primes_payload(
    ctx: &VarContext,
    primes: &BTreeSet<PrimeIdeal>,
    inputs: Vec<InputDigest>,
) -> Payload {
    let human: String = primes.iter().map(|p| format!("{}\n", format_prime(ctx, p))).collect();
    let listed: Vec<Value> = primes.iter().map(|p| prime_json(ctx, p)).collect();
    Payload {
        inputs,
        result: json!({ "vars": ctx.names().join(" "), "primes": listed }),
        verdict: None,
        witnesses: Vec::new(),
        human,
        exit_code: 0,
        seed: None,
    }
}

fn cmd_decompose(file: &Path) -> Result<Payload, CliError> {
    let (parsed, inputs) = load_ideal(file)?;
    let decomposition = irreducible_decomposition(&parsed.ideal)?;
    let components: Vec<String> = decomposition
        .components
        .iter()
        .map(|c| parsed.ctx.format_ideal(&c.as_ideal()))
        .collect();
    let mut human = String::new();
    for component in &components {
        human.push_str(&format!("component: {component}\n"));
    }
    human.push_str(&format!("irredundant: {}\n", decomposition.irredundant));
    Ok(Payload {
        inputs,
        result: json!({
            "vars": parsed.ctx.names().join(" "),
            "components": components,
            "irredundant": decomposition.irredundant,
        }),
        verdict: None,
        witnesses: Vec::new(),
        human,
        exit_code: 0,
        seed: None,
    })
}

fn cmd_intersect(paths: &[PathBuf]) -> Result<Payload, CliError> {
    let mut inputs = Vec::new();
    let mut parsed = Vec::new();
    for path in paths {
        let (p, digest) = load_ideal(path)?;
        inputs.extend(digest);
        parsed.push(p);
    }
    let ctx = parsed[0].ctx.clone();
    for (path, p) in paths.iter().zip(&parsed).skip(1) {
        if p.ctx.names() != ctx.names() {
            return Err(CliError::Usage(format!(
                "{}: variable context differs from {}",
                path.display(),
                paths[0].display()
            )));
        }
    }
    let ideals: Vec<MonomialIdeal> = parsed.into_iter().map(|p| p.ideal).collect();
    let met = MonomialIdeal::intersect_many(&ideals)?;
    Ok(Payload::ideal(&ctx, &met, inputs))
}

fn cmd_minor(
    file: &Path,
    delete: &Option<String>,
    contract: &Option<String>,
) -> Result<Payload, CliError> {
    let (parsed, inputs) = load_ideal(file)?;
    let (label, is_delete) = match (delete, contract) {
        (Some(v), None) => (v, true),
        (None, Some(v)) => (v, false),
        _ => {
            return Err(CliError::Usage(
                "exactly one of --delete or --contract is required".to_string(),
            ))
        }
    };
    let index = parsed
        .ctx
        .index_of(label)
        .ok_or_else(|| CliError::Usage(format!("unknown variable '{label}'")))?;
    let minor =
        if is_delete { parsed.ideal.deletion(index)? } else { parsed.ideal.contraction(index)? };
    Ok(Payload::ideal(&parsed.ctx, &minor, inputs))
}

fn cmd_ntf(file: &Path, max_power: u32) -> Result<Payload, CliError> {
    let (parsed, inputs) = load_ideal(file)?;
    let ctx = &parsed.ctx;
    let scan = is_ntf_up_to(&parsed.ideal, max_power)?;
    let verdict = scan.verdict.to_string();
    let mut human = format!("verdict: {verdict}\n");
    let mut witnesses = Vec::new();
    if let Some(entry) = scan.failure() {
        for p in &entry.new_primes {
            human.push_str(&format!("embedded: {} at k={}\n", format_prime(ctx, p), entry.k));
            witnesses.push(json!({ "embedded": prime_json(ctx, p), "k": entry.k }));
        }
    }
    let per_power: Vec<Value> = scan
        .per_k
        .iter()
        .map(|entry| {
            json!({
                "k": entry.k,
                "ass": entry.ass.iter().map(|p| prime_json(ctx, p)).collect::<Vec<_>>(),
                "new": entry.new_primes.iter().map(|p| prime_json(ctx, p)).collect::<Vec<_>>(),
                "power_eq_symbolic": entry.power_eq_symbolic,
            })
        })
        .collect();
    let exit_code = u8::from(!scan.is_ntf());
    Ok(Payload {
        inputs,
        result: json!({
            "vars": ctx.names().join(" "),
            "ideal": ctx.format_ideal(&parsed.ideal),
            "horizon": max_power,
            "per_power": per_power,
        }),
        verdict: Some(verdict),
        witnesses,
        human,
        exit_code,
        seed: None,
    })
}

fn cmd_mnnt(file: &Path, max_power: u32) -> Result<Payload, CliError> {
    let (parsed, inputs) = load_ideal(file)?;
    let ctx = &parsed.ctx;
    let profile = is_minimally_not_ntf(&parsed.ideal, max_power)?;
    let verdict = profile.verdict.to_string();
    let m_text = profile.m.map_or_else(|| "-".to_string(), |m| m.to_string());
    let human = format!("verdict: {verdict}\nm: {m_text}\nbeta1: {}\n", profile.beta1);
    let witnesses = if profile.verdict.holds() {
        Vec::new()
    } else {
        vec![json!({ "reason": verdict.clone() })]
    };
    let per_power: Vec<Value> = profile
        .per_k
        .iter()
        .map(|(k, ass)| {
            json!({
                "k": k,
                "ass": ass.iter().map(|p| prime_json(ctx, p)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let minors: Vec<Value> = profile
        .minor_verdicts
        .iter()
        .map(|mv| {
            json!({
                "op": mv.kind.to_string(),
                "var": ctx.name(mv.var),
                "verdict": mv.verdict.map_or_else(|| "vacuous".to_string(), |v| v.to_string()),
            })
        })
        .collect();
    let exit_code = u8::from(!profile.verdict.holds());
    Ok(Payload {
        inputs,
        result: json!({
            "vars": ctx.names().join(" "),
            "ideal": ctx.format_ideal(&parsed.ideal),
            "horizon": max_power,
            "m": profile.m,
            "beta1": profile.beta1,
            "per_power": per_power,
            "minors": minors,
        }),
        verdict: Some(verdict),
        witnesses,
        human,
        exit_code,
        seed: None,
    })
}

fn cmd_graph(args: &GraphArgs) -> Result<Payload, CliError> {
    let (graph, inputs, seed, source) = match (&args.family, &args.file) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--type and --file are mutually exclusive".to_string(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage("one of --type or --file is required".to_string()))
        }
        (Some(family), None) => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--type requires --n".to_string()))?;
            let graph = match family {
                GraphFamily::Path => Graph::path(n)?,
                GraphFamily::Cycle => Graph::cycle(n)?,
                GraphFamily::Star => Graph::star(n)?,
                GraphFamily::Tree => Graph::random_tree(n, args.seed)?,
            };
            let seed = (*family == GraphFamily::Tree).then_some(args.seed);
            let source = match family {
                GraphFamily::Path => "path",
                GraphFamily::Cycle => "cycle",
                GraphFamily::Star => "star",
                GraphFamily::Tree => "tree",
            };
            (graph, Vec::new(), seed, source.to_string())
        }
        (None, Some(path)) => {
            let (graph, bytes) = files::read_graph_file(path)?;
            let digest = InputDigest::new(path.display().to_string(), &bytes);
            (graph, vec![digest], None, "file".to_string())
        }
    };
    let ctx = VarContext::numbered(graph.order());
    let (kind, ideal) = match args.ideal {
        GraphIdealKind::Edge => ("edge", graph.edge_ideal()),
        GraphIdealKind::Cover => ("cover", graph.cover_ideal()?),
        GraphIdealKind::Ni => ("ni", graph.neighborhood_ideal()),
        GraphIdealKind::Di => ("di", graph.dominating_ideal()?),
    };
    let (_, human) = ideal_result(&ctx, &ideal);
    let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    Ok(Payload {
        inputs,
        result: json!({
            "source": source,
            "n": graph.order(),
            "edges": edges,
            "kind": kind,
            "vars": ctx.names().join(" "),
            "ideal": ctx.format_ideal(&ideal),
        }),
        verdict: None,
        witnesses: Vec::new(),
        human,
        exit_code: 0,
        seed,
    })
}

fn cmd_suite(args: &SuiteArgs) -> Result<Payload, CliError> {
    if args.max_power < 3 {
        return Err(CliError::Usage("--max-power must be at least 3".to_string()));
    }
    let labels: Vec<char> = match &args.scenario {
        None => suite::LABELS.to_vec(),
        Some(text) => {
            let upper = text.trim().to_ascii_uppercase();
            let mut chars = upper.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_uppercase() && c <= 'G' => vec![c],
                _ => {
                    return Err(CliError::Usage(format!(
                        "scenario must be one of A..G, got '{text}'"
                    )))
                }
            }
        }
    };

    let reports = suite::run_scenarios(&labels, args.max_power, args.seed);

    let any_fail = reports.iter().any(|r| r.status == ScenarioStatus::Fail);
    let any_refused =
        reports.iter().any(|r| matches!(r.status, ScenarioStatus::Refused(_)));
    let (verdict, exit_code) = if any_fail {
        ("fail", 1u8)
    } else if any_refused {
        ("refused", 3u8)
    } else {
        ("pass", 0u8)
    };

    let mut human = format!(
        "suite: scenarios {}, max power {}, seed {}\n",
        labels.iter().collect::<String>(),
        args.max_power,
        args.seed
    );
    let mut witnesses = Vec::new();
    let mut scenario_values = Vec::new();
    for report in &reports {
        match &report.status {
            ScenarioStatus::Pass => {
                human.push_str(&format!("scenario {}: pass  {}\n", report.label, report.title));
            }
            ScenarioStatus::Refused(reason) => {
                human.push_str(&format!(
                    "scenario {}: refused  {} ({reason})\n",
                    report.label, report.title
                ));
            }
            ScenarioStatus::Fail => {
                human.push_str(&format!("scenario {}: FAIL  {}\n", report.label, report.title));
                for check in report.checks.iter().filter(|c| !c.pass) {
                    human.push_str(&format!("  FAIL {}\n", check.name));
                    if let Some(witness) = &check.witness {
                        human.push_str(&format!("       witness: {witness}\n"));
                    }
                }
            }
        }
        for check in report.checks.iter().filter(|c| !c.pass) {
            witnesses.push(json!({
                "scenario": report.label.to_string(),
                "check": check.name,
                "witness": check.witness,
            }));
        }
        let status_text = match &report.status {
            ScenarioStatus::Pass => "pass",
            ScenarioStatus::Fail => "fail",
            ScenarioStatus::Refused(_) => "refused",
        };
        let refusal = match &report.status {
            ScenarioStatus::Refused(reason) => Some(reason.clone()),
            _ => None,
        };
        scenario_values.push(json!({
            "label": report.label.to_string(),
            "title": report.title,
            "status": status_text,
            "refusal": refusal,
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
        }));
    }

    Ok(Payload {
        inputs: vec![InputDigest::new(
            "builtin:construction8.ideal",
            suite::fixtures::CONSTRUCTION8.as_bytes(),
        )],
        result: json!({ "max_power": args.max_power, "scenarios": scenario_values }),
        verdict: Some(verdict.to_string()),
        witnesses,
        human,
        exit_code,
        seed: Some(args.seed),
    })
}
