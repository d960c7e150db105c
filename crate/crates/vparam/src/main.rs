use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vparam::bench::{run_bench, to_csv, BenchPlan, Family};
use vparam::report::{to_json, GadgetReportJson, MatrixReport, SolveReport, Status};
use vparam::{matrix, parse_graph, run_suite, solve_param, write_graph, Deadline, GraphFormat, SolverChoice, Suite, SuiteConfig, SuiteSummary};
use vparam_core::gadgets::{verify_identity, Gadget};
use vparam_core::{generators, Graph, ParameterKind};

#[derive(Debug, Parser)]
#[command(name = "vparam", version, about = "Exact and FPT solvers for seven graph vertex parameters")]
struct Cli {
    /// Graph file format for input and output.
    #[arg(long, global = true, value_enum, default_value = "edgelist")]
    format: GraphFormat,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Budget per solver invocation (per trial for `verify`).
    #[arg(long, global = true, default_value_t = 60_000)]
    timeout_ms: u64,
    /// Solver for `param`, `matrix` and `bench`.
    #[arg(long, global = true, value_enum, default_value = "fpt-nu")]
    solver: SolverChoice,
    /// Report format; JSON by default, CSV for `bench`.
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetName {
    AddDominatingVertex,
    DoubleCopy,
    PendantMatching,
    EdgeProduct,
    CliqueBlowup,
    PruneMonochromatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    FptVsOracle,
    Fvs,
    GadgetIdentities,
    ReductionCallBounds,
    Inequalities,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one parameter.
    Param {
        file: PathBuf,
        /// alpha, tau, omega, chi, gamma, i or nu.
        #[arg(long = "param", short = 'p')]
        parameter: String,
    },
    /// Compute all seven parameters and check the inequality chain.
    Matrix { file: PathBuf },
    /// Build a gadget graph; with `--verify`, check its identities instead.
    Gadget {
        #[arg(value_enum)]
        name: GadgetName,
        file: PathBuf,
        /// Vertices receiving pendants (pendant-matching), comma separated.
        #[arg(long, value_delimiter = ',')]
        vprime: Vec<usize>,
        /// Number of copies (clique-blowup) or colors (prune-monochromatic).
        #[arg(long)]
        k: Option<usize>,
        /// One color in 1..=k per vertex (prune-monochromatic), comma separated.
        #[arg(long, value_delimiter = ',')]
        coloring: Vec<usize>,
        /// Print a GadgetReport instead of the graph.
        #[arg(long)]
        verify: bool,
        /// Also write the gadget graph to this file.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Generate a seeded random graph.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge probability (gnp).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, value_enum, default_value = "gnp")]
        family: Family,
        /// Extra edges on top of the tree (tree-plus).
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
    /// Run property suites against the exact oracle.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Time a solver over a graph family; CSV by default.
    Bench {
        #[arg(long, value_enum, default_value = "gnp")]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long = "param", default_value = "gamma")]
        parameter: String,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 6)]
        extra: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(path: &Path, format: GraphFormat) -> anyhow::Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let g = parse_graph(&text, format).with_context(|| format!("parsing {}", path.display()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).filter(|s| s != "-");
    Ok(match name {
        Some(name) => g.with_name(name),
        None => g,
    })
}

fn parameter(name: &str) -> anyhow::Result<ParameterKind> {
    match ParameterKind::from_name(name) {
        Some(kind) => Ok(kind),
        None => bail!("unknown parameter `{name}`; expected one of alpha, tau, omega, chi, gamma, i, nu"),
    }
}

fn csv_list(items: &[usize]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Timeout => "timeout",
        Status::Error => "error",
    }
}

fn param_csv(r: &SolveReport) -> String {
    format!(
        "graph,parameter,value,witness,solver,oracle_calls,runtime_ms,status\n{},{},{},{},{},{},{},{}\n",
        r.graph,
        r.parameter,
        opt(r.value),
        r.witness.as_deref().map(csv_list).unwrap_or_default(),
        r.solver,
        opt(r.oracle_calls),
        r.runtime_ms,
        status_str(r.status)
    )
}

fn matrix_csv(m: &MatrixReport) -> String {
    let v = &m.values;
    format!(
        "graph,n,max_degree,alpha,tau,omega,chi,gamma,i,nu,violations,status\n{},{},{},{},{},{},{},{},{},{},{},{}\n",
        m.graph,
        m.n,
        m.max_degree,
        opt(v.alpha),
        opt(v.tau),
        opt(v.omega),
        opt(v.chi),
        opt(v.gamma),
        opt(v.i),
        opt(v.nu),
        m.inequality_violations.as_ref().map(|v| v.join(" ")).unwrap_or_default(),
        status_str(m.status)
    )
}

#[derive(Serialize)]
struct VerifyReport {
    suites: Vec<SuiteSummary>,
    all_pass: bool,
}

fn build_gadget(
    name: GadgetName,
    g: &Graph,
    vprime: &[usize],
    k: Option<usize>,
    coloring: &[usize],
    seed: u64,
) -> Gadget {
    match name {
        GadgetName::AddDominatingVertex => Gadget::AddDominatingVertex,
        GadgetName::DoubleCopy => Gadget::DoubleCopy,
        GadgetName::PendantMatching => Gadget::PendantMatching { vprime: vprime.to_vec() },
        GadgetName::EdgeProduct => Gadget::EdgeProduct,
        GadgetName::CliqueBlowup => Gadget::CliqueBlowup { k },
        GadgetName::PruneMonochromatic => {
            let coloring = if coloring.is_empty() {
                let k = k.unwrap_or_else(|| g.n().max(1));
                generators::random_coloring(g.n(), k, seed)
            } else {
                coloring.to_vec()
            };
            let k = k.or_else(|| coloring.iter().copied().max()).unwrap_or(1);
            Gadget::PruneMonochromatic { coloring, k }
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let timeout = Duration::from_millis(cli.timeout_ms);
    let default = if matches!(cli.command, Command::Bench { .. }) { Output::Csv } else { Output::Json };
    let csv = cli.output.unwrap_or(default) == Output::Csv;
    match &cli.command {
        Command::Param { file, parameter: name } => {
            let g = load_graph(file, cli.format)?;
            let report = solve_param(&g, parameter(name)?, cli.solver, timeout);
            print!("{}", if csv { param_csv(&report) } else { to_json(&report) });
            Ok(report.status.exit_code())
        }
        Command::Matrix { file } => {
            let g = load_graph(file, cli.format)?;
            let report = matrix(&g, cli.solver, timeout);
            print!("{}", if csv { matrix_csv(&report) } else { to_json(&report) });
            Ok(report.status.exit_code())
        }
        Command::Gadget { name, file, vprime, k, coloring, verify, write } => {
            let g = load_graph(file, cli.format)?;
            let gadget = build_gadget(*name, &g, vprime, *k, coloring, cli.seed);
            let stop = Deadline::after(timeout);
            let out = gadget.build(&g, &stop).map_err(anyhow::Error::msg)?;
            let out = out.with_name(format!("{}-{}", gadget.name(), vparam::report::graph_label(&g)));
            if let Some(path) = write {
                std::fs::write(path, write_graph(&out, cli.format)).with_context(|| format!("writing {}", path.display()))?;
            }
            if !*verify {
                print!("{}", write_graph(&out, cli.format));
                return Ok(0);
            }
            let report = match verify_identity(&gadget, &g, &stop) {
                Ok(r) => r,
                Err(vparam_core::Error::Timeout) => return Ok(Status::Timeout.exit_code()),
                Err(e) => bail!(e),
            };
            let json = GadgetReportJson::from(&report);
            if csv {
                let mut s = String::from("gadget,base_graph,relation,lhs,comparison,rhs,holds\n");
                for r in &json.measured {
                    let _ = writeln!(s, "{},{},\"{}\",{},{},{},{}", json.gadget, json.base_graph, r.relation, r.lhs, r.comparison, r.rhs, r.holds);
                }
                print!("{s}");
            } else {
                print!("{}", to_json(&json));
            }
            Ok(if json.all_hold { 0 } else { 1 })
        }
        Command::Random { n, p, family, extra } => {
            if !(0.0..=1.0).contains(p) {
                bail!("edge probability must lie in [0, 1]");
            }
            let g = family.build(*n, *p, *extra, cli.seed);
            print!("{}", write_graph(&g, cli.format));
            Ok(0)
        }
        Command::Verify { suite, trials, min_n, max_n } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::FptVsOracle => vec![Suite::FptVsOracle],
                SuiteArg::Fvs => vec![Suite::Fvs],
                SuiteArg::GadgetIdentities => vec![Suite::GadgetIdentities],
                SuiteArg::ReductionCallBounds => vec![Suite::ReductionCallBounds],
                SuiteArg::Inequalities => vec![Suite::Inequalities],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut cfg = SuiteConfig::new(*trials, cli.seed, *min_n, *max_n);
            cfg.timeout = timeout;
            let summaries: Vec<SuiteSummary> = suites.into_iter().map(|s| run_suite(s, &cfg)).collect();
            let report = VerifyReport { all_pass: summaries.iter().all(|s| s.all_pass), suites: summaries };
            if csv {
                let mut s = String::from("suite,property,passed,failed\n");
                for summary in &report.suites {
                    for p in &summary.properties {
                        let _ = writeln!(s, "{},{},{},{}", summary.suite.name(), p.name, p.passed, p.failed);
                    }
                }
                print!("{s}");
            } else {
                print!("{}", to_json(&report));
            }
            Ok(if report.all_pass { 0 } else { 1 })
        }
        Command::Bench { family, sizes, parameter: name, p, extra } => {
            let plan = BenchPlan {
                family: *family,
                sizes: sizes.clone(),
                parameter: parameter(name)?,
                solver: cli.solver,
                p: *p,
                extra: *extra,
                seed: cli.seed,
                timeout,
            };
            let rows = run_bench(&plan);
            print!("{}", if !csv { to_json(&rows) } else { to_csv(&rows) });
            let worst = rows.iter().fold(Status::Ok, |acc, r| acc.worst(r.status));
            Ok(worst.exit_code())
        }
    }
}
