//! `vdapprox` command-line front end.
//!
//! Exit codes: 0 ok, 2 infeasible output, 3 certificate violation (or any
//! degraded check under `--strict`), 64 usage, 65 bad input, 70 internal.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vdapprox::cert::Certificate;
use vdapprox::config::{config_doc, Config};
use vdapprox::harness::bench::{run_bench, solve_instance, summary, write_outputs, Suite};
use vdapprox::harness::gen::{gen_instance, GenSpec};
use vdapprox::harness::oracle::{exact_oracle, Problem, ProblemKind};
use vdapprox::io::{instance_to_json, read_instance, vertex_set_from_json, Instance};
use vdapprox::lp::{solve_cover_lp_lenient, DhOracle, HoleOracle};
use vdapprox::multicut::{multicut_lp, MulticutInstance};
use vdapprox::rational::fmt_q;
use vdapprox::{chordal, Error};

const EXIT_INFEASIBLE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_DATAERR: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;

#[derive(Parser, Debug)]
#[command(name = "vdapprox", version, about = "Approximate weighted vertex deletion with certificates")]
struct Cli {
    /// Print machine-readable JSON instead of the one-line summary.
    #[arg(long, global = true)]
    json: bool,
    /// Exit 3 when a repair fires or an internal check degrades.
    #[arg(long, global = true)]
    strict: bool,
    /// TOML config; its keys override flags, which override defaults.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads for `bench`.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Instance: `.json`, or an edge list with an optional `<file>.w`.
    #[arg(long, short)]
    input: PathBuf,
    /// Write the certificate JSON here.
    #[arg(long, value_name = "FILE")]
    dump_cert: Option<PathBuf>,
    /// Also run the exact oracle (small instances only).
    #[arg(long)]
    exact: bool,
    /// Separator search: exhaustive on small graphs (auto), always
    /// heuristic, or exhaustive up to 24 vertices.
    #[arg(long, value_enum, default_value_t = SepStrategy::Auto)]
    separator_strategy: SepStrategy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SepStrategy {
    Auto,
    Heuristic,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rounding {
    /// Bin rounding when the graph is chordal, region growing otherwise.
    Auto,
    Chordal,
    General,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LpProblem {
    Cvd,
    Dhvd,
    Multicut,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Weighted chordal vertex deletion.
    Cvd {
        #[command(flatten)]
        solve: SolveArgs,
        /// Holes up to this length are hit before the main LP (default 12).
        #[arg(long)]
        short_hole_len: Option<usize>,
    },
    /// Weighted distance-hereditary vertex deletion.
    Dhvd {
        #[command(flatten)]
        solve: SolveArgs,
        /// Obstructions up to this size are hit before the main LP (default 8).
        #[arg(long)]
        obstruction_size: Option<usize>,
    },
    /// Weighted deletion to exclude a small planar minor.
    Pmfd {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long, value_parser = ["k2", "c3", "k4"])]
        family: String,
    },
    /// Vertex multicut; pairs come from the instance file.
    Multicut {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long, value_enum, default_value_t = Rounding::Auto)]
        rounding: Rounding,
    },
    /// Generate an instance from a JSON spec.
    Gen {
        #[arg(long)]
        spec: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark suite (`default` for the built-in one).
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that deleting a vertex set solves an instance.
    Verify {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Solve the cover LP and print its value.
    Lp {
        #[arg(long, value_enum)]
        problem: LpProblem,
        #[arg(long, short)]
        input: PathBuf,
        /// Write rows and solution as JSON here.
        #[arg(long, value_name = "FILE")]
        dump_lp: Option<PathBuf>,
        /// Cutting-plane row budget; 0 means max(10n, 256).
        #[arg(long)]
        row_budget: Option<usize>,
    },
    /// Print the configuration reference (CONFIG.md).
    #[command(hide = true)]
    ConfigDoc,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Input(_) | Error::UnknownVertex(_) | Error::Io(_) | Error::Json(_) | Error::TooLarge { .. } => {
                EXIT_DATAERR
            }
            Error::NotChordal(_) | Error::NotDistanceHereditary(_) | Error::Unsupported(_) => EXIT_DATAERR,
            Error::Lp(_) | Error::Internal(_) => EXIT_SOFTWARE,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn input_err(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    if f.code == EXIT_SOFTWARE {
        return f;
    }
    f.code = EXIT_DATAERR;
    f.msg = format!("{}: {}", path.display(), f.msg);
    f
}

fn read_text(path: &Path) -> Run<String> {
    std::fs::read_to_string(path).map_err(|e| input_err(path, e.into()))
}

fn load(path: &Path) -> Run<Instance> {
    read_instance(path).map_err(|e| input_err(path, e))
}

fn write(path: &Path, text: &str) -> Run<()> {
    std::fs::write(path, text).map_err(|e| Failure {
        code: EXIT_DATAERR,
        msg: format!("{}: {e}", path.display()),
    })
}

/// Defaults, then flags, then the config file.
fn build_config(cli: &Cli) -> Run<Config> {
    let mut cfg = Config {
        strict: cli.strict,
        ..Config::default()
    };
    if let Some(j) = cli.jobs {
        cfg.jobs = j;
    }
    match &cli.cmd {
        Cmd::Cvd { solve, short_hole_len } => {
            if let Some(l) = short_hole_len {
                cfg.cvd.short_hole_len = *l;
            }
            apply_strategy(&mut cfg, solve.separator_strategy);
        }
        Cmd::Dhvd { solve, obstruction_size } => {
            if let Some(s) = obstruction_size {
                cfg.dhvd.obstruction_size = *s;
            }
            apply_strategy(&mut cfg, solve.separator_strategy);
        }
        Cmd::Pmfd { solve, .. } | Cmd::Multicut { solve, .. } => apply_strategy(&mut cfg, solve.separator_strategy),
        Cmd::Lp { row_budget: Some(b), .. } => cfg.lp.row_budget = *b,
        _ => {}
    }
    if let Some(p) = &cli.config {
        let text = read_text(p)?;
        cfg = cfg.layered(&text).map_err(|e| input_err(p, e))?;
    }
    cfg.validate().map_err(|e| Failure {
        code: EXIT_USAGE,
        msg: e.to_string(),
    })?;
    Ok(cfg)
}

fn apply_strategy(cfg: &mut Config, s: SepStrategy) {
    match s {
        SepStrategy::Auto => {}
        SepStrategy::Heuristic => cfg.separator.exact_threshold = 0,
        SepStrategy::Exact => cfg.separator.exact_threshold = 24,
    }
}

/// Exit code for a finished certificate.
fn cert_code(c: &Certificate, strict: bool) -> u8 {
    if !c.feasible {
        EXIT_INFEASIBLE
    } else if !c.within_bound() {
        EXIT_VIOLATION
    } else if strict && (c.repairs > 0 || !c.audit.violations.is_empty() || c.audit.counters.contains_key("lp_incomplete")) {
        EXIT_VIOLATION
    } else {
        0
    }
}

fn run_solve(cli: &Cli, cfg: &Config, kind: ProblemKind, family: Option<&str>, args: &SolveArgs) -> Run<u8> {
    let inst = load(&args.input)?;
    let mut cert = solve_instance(kind, family, &inst, cfg)?;
    if args.exact {
        let limit = if kind == ProblemKind::Pmfd { cfg.oracle.max_n_pmfd } else { cfg.oracle.max_n };
        let r = exact_oracle(&Problem::new(kind, family)?, &inst, limit)?;
        cert.exact_opt = Some(r.weight);
    }
    if let Some(p) = &args.dump_cert {
        write(p, &cert.to_json_string())?;
    }
    if cli.json {
        print!("{}", cert.to_json_string());
    } else {
        println!("{}", cert.summary());
    }
    Ok(cert_code(&cert, cfg.strict))
}

fn run(cli: &Cli) -> Run<u8> {
    let cfg = build_config(cli)?;
    match &cli.cmd {
        Cmd::Cvd { solve, .. } => run_solve(cli, &cfg, ProblemKind::Cvd, None, solve),
        Cmd::Dhvd { solve, .. } => run_solve(cli, &cfg, ProblemKind::Dhvd, None, solve),
        Cmd::Pmfd { solve, family } => run_solve(cli, &cfg, ProblemKind::Pmfd, Some(family), solve),
        Cmd::Multicut { solve, rounding } => {
            let kind = match rounding {
                Rounding::Chordal => ProblemKind::MulticutChordal,
                Rounding::General => ProblemKind::MulticutGeneral,
                Rounding::Auto => {
                    let inst = load(&solve.input)?;
                    if chordal::is_chordal(&inst.graph) {
                        ProblemKind::MulticutChordal
                    } else {
                        ProblemKind::MulticutGeneral
                    }
                }
            };
            run_solve(cli, &cfg, kind, None, solve)
        }
        Cmd::Gen { spec, out } => {
            let text = read_text(spec)?;
            let s: GenSpec = serde_json::from_str(&text).map_err(|e| input_err(spec, e.into()))?;
            let inst = gen_instance(&s).map_err(|e| input_err(spec, e))?;
            let mut json = instance_to_json(&inst.graph, &inst.pairs);
            json.push('\n');
            match out {
                Some(p) => write(p, &json)?,
                None => print!("{json}"),
            }
            Ok(0)
        }
        Cmd::Bench { suite, out } => {
            let s = if suite == "default" {
                Suite::default_suite()
            } else {
                let p = Path::new(suite);
                Suite::from_json(&read_text(p)?).map_err(|e| input_err(p, e))?
            };
            let records = run_bench(&s, &cfg)?;
            write_outputs(out, &records, &s, &cfg).map_err(|e| Failure {
                code: EXIT_DATAERR,
                msg: format!("{}: {e}", out.display()),
            })?;
            let sum = summary(&records);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&sum).expect("plain data"));
            } else {
                let bad = records.iter().filter(|r| !r.ok()).count();
                let repairs = sum["repairs"].as_u64().unwrap_or(0);
                println!("bench {}: {} instances, {} not ok, {} repairs", s.name, records.len(), bad, repairs);
                if let Some(m) = sum["problems"].as_object() {
                    for (k, v) in m {
                        println!(
                            "  {k}: {}/{} feasible, max ratio {}, median ratio {}, max exact ratio {}",
                            v["feasible"],
                            v["instances"],
                            v["max_ratio"]["approx"].as_str().unwrap_or("-"),
                            v["median_ratio"]["approx"].as_str().unwrap_or("-"),
                            v["max_exact_ratio"]["approx"].as_str().unwrap_or("-"),
                        );
                    }
                }
            }
            let infeasible = records
                .iter()
                .any(|r| r.error.is_some() || r.cert.as_ref().is_some_and(|c| !c.feasible));
            Ok(if infeasible {
                EXIT_INFEASIBLE
            } else if !records.iter().all(|r| r.ok()) {
                EXIT_VIOLATION
            } else if cfg.strict && records.iter().any(|r| r.cert.as_ref().is_some_and(|c| cert_code(c, true) != 0)) {
                EXIT_VIOLATION
            } else {
                0
            })
        }
        Cmd::Verify {
            problem,
            family,
            graph,
            solution,
        } => {
            let kind = ProblemKind::parse(problem).map_err(|e| Failure {
                code: EXIT_USAGE,
                msg: e.to_string(),
            })?;
            let p = Problem::new(kind, family.as_deref()).map_err(|e| Failure {
                code: EXIT_USAGE,
                msg: e.to_string(),
            })?;
            let inst = load(graph)?;
            let s = vertex_set_from_json(&read_text(solution)?).map_err(|e| input_err(solution, e))?;
            let ok = p.feasible(&inst, &s).map_err(|e| input_err(solution, e))?;
            let w = inst.graph.weight_of(&s);
            if cli.json {
                println!("{}", serde_json::json!({"problem": kind.name(), "feasible": ok, "weight": fmt_q(&w), "size": s.len()}));
            } else {
                println!("{}: feasible={} weight={} |S|={}", kind.name(), ok, fmt_q(&w), s.len());
            }
            Ok(if ok { 0 } else { EXIT_INFEASIBLE })
        }
        Cmd::Lp { problem, input, dump_lp, .. } => {
            let inst = load(input)?;
            let g = &inst.graph;
            let sol = match problem {
                LpProblem::Cvd => solve_cover_lp_lenient(g, &mut HoleOracle { min_len: 4 }, &cfg.lp)?,
                LpProblem::Dhvd => solve_cover_lp_lenient(g, &mut DhOracle::new(), &cfg.lp)?,
                LpProblem::Multicut => multicut_lp(&MulticutInstance::new(g.clone(), inst.pairs.clone())?, &cfg.lp)?,
            };
            let dump = sol.to_json();
            if let Some(p) = dump_lp {
                let mut s = serde_json::to_string_pretty(&dump).expect("plain data");
                s.push('\n');
                write(p, &s)?;
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&dump).expect("plain data"));
            } else {
                println!(
                    "lp: value={} lower_bound={} rows={} rounds={} complete={}",
                    fmt_q(&sol.value),
                    fmt_q(&sol.lower_bound),
                    sol.rows.len(),
                    sol.rounds,
                    sol.complete
                );
            }
            Ok(if cfg.strict && !sol.complete { EXIT_VIOLATION } else { 0 })
        }
        Cmd::ConfigDoc => {
            print!("{}", config_doc());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
