use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dijoin::apps::Hypergraph;
use dijoin::generate::{random_2ec_graph, random_digraft, random_digraph_tau2, rng};
use dijoin_cli::certificate::Certificate;
use dijoin_cli::commands::{cmd_basis, cmd_orient, cmd_padic, cmd_partition, cmd_verify, recheck, Method};
use dijoin_cli::error::CliError;
use dijoin_cli::fixtures;
use dijoin_cli::instance::{digraph_instance, HypergraphInstance, Instance};
use dijoin_cli::sweep::{self, Suite, SweepConfig};

#[derive(Parser)]
#[command(name = "dijoin", version, about = "Integral bases of dijoin and strengthening-set faces, with self-verifying certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a digraft and print its face analysis.
    Verify { instance: String },
    /// Integral basis of the face, by search, by recursion, or both.
    Basis {
        instance: String,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Integer combination of strengthening sets summing to the all-ones vector.
    Partition { instance: String },
    /// Fractional dijoin packing with p-adic entries.
    Padic {
        instance: String,
        #[arg(long)]
        prime: u64,
    },
    /// Integer combination of strongly connected hypergraph orientations.
    Orient { instance: String },
    /// Recompute the checklist of a saved certificate.
    Recheck { instance: String, certificate: PathBuf },
    /// Bundled fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Print a seeded random instance.
    Generate {
        #[arg(long, value_enum, default_value = "digraft")]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 14)]
        max_arcs: usize,
    },
    /// Run a property suite over seeded random instances.
    Sweep {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 14)]
        max_arcs: usize,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Digraft,
    Tau2,
    Graph,
}

/// Reads a path, or a bundled fixture written as `fixture:NAME`.
fn load(spec: &str) -> Result<Instance, CliError> {
    let text = match spec.strip_prefix("fixture:") {
        Some(name) => fixtures::text(name)
            .ok_or_else(|| CliError::Input(format!("no bundled fixture named {name:?}")))?
            .to_string(),
        None => std::fs::read_to_string(spec).map_err(|e| CliError::Input(format!("{spec}: {e}")))?,
    };
    Ok(Instance::parse(&text)?)
}

fn emit(cert: Certificate) -> Result<(), CliError> {
    println!("{}", cert.to_json());
    if cert.all_pass() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("failed checks: {}", cert.failed().join("; "))))
    }
}

fn generate(kind: GenKind, seed: u64, max_vertices: usize, max_arcs: usize) -> Instance {
    let mut r = rng(seed);
    let name = format!("generated-{seed}");
    match kind {
        GenKind::Digraft => {
            let g = random_digraft(&mut r, max_vertices, max_arcs);
            digraph_instance(&name, g.digraph().clone(), Some(g.family().clone()), None)
        }
        GenKind::Tau2 => digraph_instance(&name, random_digraph_tau2(&mut r, max_vertices, max_arcs), None, None),
        GenKind::Graph => {
            let (n, edges) = random_2ec_graph(&mut r, max_vertices, max_arcs);
            let labels = (0..n).map(|v| format!("v{v}")).collect();
            let h = Hypergraph::new(labels, edges.iter().map(|&(a, b)| vec![a, b]).collect())
                .expect("2-edge-connected graphs are valid 2-uniform hypergraphs");
            Instance::Hypergraph(HypergraphInstance {
                name,
                hypergraph: h,
                edge_ids: (0..edges.len()).map(|e| format!("e{e}")).collect(),
            })
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify { instance } => emit(cmd_verify(&load(&instance)?)?),
        Command::Basis { instance, method } => emit(cmd_basis(&load(&instance)?, method)?),
        Command::Partition { instance } => emit(cmd_partition(&load(&instance)?)?),
        Command::Padic { instance, prime } => emit(cmd_padic(&load(&instance)?, prime)?),
        Command::Orient { instance } => emit(cmd_orient(&load(&instance)?)?),
        Command::Recheck { instance, certificate } => {
            let inst = load(&instance)?;
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| CliError::Input(format!("{}: {e}", certificate.display())))?;
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", certificate.display())))?;
            let fresh = recheck(&cert, &inst)?;
            for c in &fresh {
                println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            }
            if fresh != cert.checklist {
                return Err(CliError::Violation("recomputed checklist differs from the certificate".into()));
            }
            if fresh.iter().any(|c| !c.pass) {
                return Err(CliError::Violation("the certificate has failing checks".into()));
            }
            Ok(())
        }
        Command::Fixtures { action: FixtureAction::List } => {
            for name in fixtures::names() {
                let inst = fixtures::load(name).expect("listed").map_err(CliError::from)?;
                println!("{name}\t{}", inst.kind());
            }
            Ok(())
        }
        Command::Fixtures { action: FixtureAction::Show { name } } => {
            let text = fixtures::text(&name).ok_or_else(|| CliError::Input(format!("no bundled fixture named {name:?}")))?;
            print!("{text}");
            Ok(())
        }
        Command::Generate { kind, seed, max_vertices, max_arcs } => {
            if max_vertices < 3 || max_arcs < 4 {
                return Err(CliError::Input("need --max-vertices >= 3 and --max-arcs >= 4".into()));
            }
            print!("{}", generate(kind, seed, max_vertices, max_arcs).to_text());
            Ok(())
        }
        Command::Sweep { suite, count, seed, max_vertices, max_arcs } => {
            if max_vertices < 3 || max_arcs < 4 {
                return Err(CliError::Input("need --max-vertices >= 3 and --max-arcs >= 4".into()));
            }
            let cfg = SweepConfig { count, seed, max_vertices, max_arcs };
            match sweep::run(suite, cfg) {
                Ok(rep) => {
                    println!("{suite:?}: {} instances, {} checks, no falsifier", rep.instances, rep.checks);
                    Ok(())
                }
                Err(f) => {
                    eprintln!("falsifier: {}", f.reason);
                    print!("{}", f.instance.to_text());
                    Err(CliError::Violation(f.reason))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
