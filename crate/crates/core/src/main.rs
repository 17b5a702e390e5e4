use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use domlab::catalog::{realize_spec, verify_catalog, Scope, Status};
use domlab::engine::{Engine, Invariant};
use domlab::record::{Cache, CacheKey, ResultRecord, ENGINE_VERSION};
use domlab::sim::{monte_carlo, parse_script, simulate, Adversary, ProtocolConfig};
use domlab::{io, Error, Graph, GraphSpec, Limits};

/// Exact domination invariants, autonomous guard families and guard games.
#[derive(Parser)]
#[command(name = "domlab", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest move graph, in projected configurations.
    #[arg(long, global = true, default_value_t = Limits::default().node_cap)]
    cap: u64,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one invariant: gamma, eternal, foolproof or autonomous.
    Compute { spec: GraphSpec, invariant: Invariant },
    /// Autonomous feasibility for each k from gamma to KMAX.
    Profile {
        spec: GraphSpec,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Shortest legal play from START to an unanswerable attack.
    Refute { spec: GraphSpec, k: usize, start: String },
    /// Build and check a graph with the given (gamma, eternal, autonomous).
    Realize { a: usize, b: usize, c: usize },
    /// Play the guard protocol against an adversary.
    Simulate {
        spec: GraphSpec,
        start: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        rounds: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// uniform, greedy, oracle or scripted:FILE
        #[arg(long, default_value = "uniform")]
        adversary: String,
        /// Write the (first failing, or only) trajectory as JSON lines.
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
    /// Check the expected-value table and realizability cases.
    VerifyPaper {
        #[arg(long, default_value = "default")]
        scope: String,
    },
    /// Print the graph in DOT, optionally highlighting a vertex set.
    ExportDot {
        spec: GraphSpec,
        #[arg(long)]
        highlight: Option<String>,
    },
}

enum Failure {
    Mismatch(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Io(_) | Error::Json(_) | Error::BoundViolation(_) | Error::DanglingComponent(_) | Error::NoRefutation(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool set once");
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let engine = Engine::new(Limits { node_cap: cli.cap });
    match &cli.cmd {
        Cmd::Compute { spec, invariant } => compute(cli, &engine, spec, *invariant),
        Cmd::Profile { spec, kmax } => {
            let g = spec.generate()?;
            let kmax = kmax.unwrap_or(g.order() - g.min_degree());
            let profile = engine.feasibility_profile(&g, kmax)?;
            if cli.json {
                print_json(&profile);
            } else {
                println!("{:>3}  {:<10} {:>10} {:>11} {:>7}", "k", "feasible", "nodes", "components", "secure");
                for r in &profile.rows {
                    let f = if r.feasible { "feasible" } else { "infeasible" };
                    println!("{:>3}  {:<10} {:>10} {:>11} {:>7}", r.k, f, r.nodes, r.components, r.secure_components);
                }
            }
            Ok(())
        }
        Cmd::Refute { spec, k, start } => {
            let g = spec.generate()?;
            let start = g.parse_vertex_set(start)?;
            let t = engine.refute(&g, *k, &start)?;
            if cli.json {
                print!("{}", t.to_jsonl());
            } else {
                print!("{}", t.render(&g));
            }
            Ok(())
        }
        Cmd::Realize { a, b, c } => {
            let (case, spec) = realize_spec(*a, *b, *c)?;
            let g = spec.generate()?;
            let got = [
                engine.domination_number(&g).value,
                engine.eternal_domination_number(&g)?.value,
                engine.autonomous_number(&g)?.value,
            ];
            let ok = got == [*a, *b, *c];
            if cli.json {
                print_json(&json!({
                    "spec": spec.to_string(), "case": case.label, "construction": case.construction,
                    "expected": [a, b, c], "computed": got, "verified": ok,
                }));
            } else {
                println!("{spec}");
                println!("case {}: {}", case.label, case.construction);
                println!("computed ({}, {}, {}) {}", got[0], got[1], got[2], if ok { "verified" } else { "MISMATCH" });
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("{spec} gives {got:?}, wanted ({a}, {b}, {c})")))
            }
        }
        Cmd::Simulate { spec, start, seed, rounds, trials, adversary, trajectory } => {
            let g = spec.generate()?;
            let start = g.parse_vertex_set(start)?;
            let adversary = match adversary.strip_prefix("scripted:") {
                Some(file) => Adversary::Scripted(parse_script(&g, &std::fs::read_to_string(file).map_err(Error::from)?)?),
                None => adversary.parse().map_err(|m: String| Error::Parameter { family: "adversary", msg: m })?,
            };
            let cfg = ProtocolConfig { limits: engine.limits, ..ProtocolConfig::new(*seed, *rounds, adversary) };
            if *trials == 1 {
                let out = simulate(&g, &start, &cfg)?;
                if let Some(path) = trajectory {
                    std::fs::write(path, out.trajectory.to_jsonl()).map_err(Error::from)?;
                }
                if cli.json {
                    print_json(&out);
                } else {
                    print!("{}", out.trajectory.render(&g));
                    match out.verdict {
                        domlab::sim::Verdict::Survived => println!("survived {} rounds", out.rounds),
                        domlab::sim::Verdict::Failed { round, attack } => println!("FAILED at round {round}, attack {}", g.label(attack)),
                    }
                }
            } else {
                let stats = monte_carlo(&g, &start, &cfg, *trials)?;
                if let (Some(path), Some(out)) = (trajectory, &stats.example_failure) {
                    std::fs::write(path, out.trajectory.to_jsonl()).map_err(Error::from)?;
                }
                if cli.json {
                    print_json(&stats);
                } else {
                    println!("trials {}  failures {}", stats.trials, stats.failures);
                    if let Some(m) = stats.mean_failure_round {
                        println!("mean failure round {m:.2}");
                    }
                }
            }
            Ok(())
        }
        Cmd::VerifyPaper { scope } => {
            let scope: Scope = scope.parse()?;
            let report = verify_catalog(&engine, &scope)?;
            if cli.json {
                print_json(&report);
            } else {
                for e in &report.entries {
                    let detail: Vec<String> = e
                        .checks
                        .iter()
                        .map(|c| match c.status {
                            Status::Pass => format!("{}={}", c.what, c.actual),
                            _ => format!("{}={} (want {})", c.what, c.actual, c.expected),
                        })
                        .collect();
                    println!("{:<8} {:<16} {:<44} {}", e.status, e.group, e.spec, detail.join(" "));
                }
                println!("{} passed, {} failed, {} unknown", report.passed, report.failed, report.unknown);
            }
            if report.failed > 0 {
                Err(Failure::Mismatch(format!("{} entries failed", report.failed)))
            } else if report.unknown > 0 {
                Err(Failure::Lib(Error::CapExceeded { projected: 0, cap: cli.cap }))
            } else {
                Ok(())
            }
        }
        Cmd::ExportDot { spec, highlight } => {
            let g = spec.generate()?;
            let h = match highlight {
                Some(text) => g.parse_vertex_set(text)?,
                None => g.empty_set(),
            };
            print!("{}", io::to_dot(&g, &h));
            Ok(())
        }
    }
}

fn compute(cli: &Cli, engine: &Engine, spec: &GraphSpec, invariant: Invariant) -> Result<(), Failure> {
    let g: Graph = spec.generate()?;
    let key = CacheKey {
        hash: io::canonical_hash(&g),
        invariant: invariant.to_string(),
        k: None,
        engine_version: ENGINE_VERSION.to_string(),
    };
    let mut cache = if cli.no_cache { None } else { Some(Cache::open(Cache::default_path())?) };
    let (line, record) = match cache.as_ref().and_then(|c| c.get(&key)) {
        Some((line, record)) => (line.to_string(), record),
        None => {
            let report = engine.compute(&g, invariant)?;
            let record = ResultRecord::from_report(&spec.to_string(), &g, &report);
            let line = match cache.as_mut() {
                Some(c) => c.insert(&record)?,
                None => serde_json::to_string(&record).map_err(Error::from)?,
            };
            (line, record)
        }
    };
    if cli.json {
        println!("{line}");
    } else {
        println!("{}", record.value.expect("only successful records are stored"));
        println!("{}", record.certificate);
    }
    Ok(())
}
