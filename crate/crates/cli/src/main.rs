use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gpgame::formulas::{
    gpg_prime_upper_class_g, gpg_upper_max_edge, gpg_upper_min_max, tree_gpg_prime_upper, FormulaResult,
};
use gpgame::graph::{write_graph, DistanceMatrix, Graph};
use gpgame::solver::{
    gp_lower_number_with, gp_number_with, solve_game_with, Player, SolveError, SolverConfig, DEFAULT_NODE_BUDGET,
};
use gpgame::verify::{Suite, VerifyConfig};
use gpgame_cli::gen::{self, FAMILY_HELP};
use gpgame_cli::play::{game_name, play_game, Terminal};
use gpgame_cli::report::{self, SolveLine, Summary};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "gpgame", version, about = "Exact solver for the general position achievement game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game on a graph file
    Solve(SolveArgs),
    /// Write a graph from a named family
    #[command(after_help = FAMILY_HELP)]
    Gen(GenArgs),
    /// Run a verification suite (or `all`) against the known formulas
    Verify(VerifyArgs),
    /// Play against the solver in the terminal
    Play(PlayArgs),
}

#[derive(Args)]
struct Budget {
    /// Search node budget per solve
    #[arg(long, env = "GPGAME_NODE_BUDGET")]
    budget: Option<u64>,
}

impl Budget {
    fn get(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_NODE_BUDGET)
    }
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Who moves first: builder (gpg) or blocker (gpg')
    #[arg(long, default_value = "builder")]
    first: Player,
    /// Also compute gp, gp- and the applicable upper bounds
    #[arg(long)]
    all: bool,
    /// Write a report file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Threads for the root of the search
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct GenArgs {
    family: String,
    params: Vec<String>,
    /// Add `c label` comment lines
    #[arg(long)]
    labels: bool,
    /// Caterpillar subdivisions: one count for every edge, or a list per edge
    #[arg(long)]
    subdiv: Option<String>,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or `all`
    suite: String,
    /// Write a report file with one record per instance
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print every record, not only failures
    #[arg(long, short)]
    verbose: bool,
    /// Include per-instance wall times in the report
    #[arg(long)]
    timings: bool,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct PlayArgs {
    graph: PathBuf,
    /// The side you play
    #[arg(long, default_value = "builder")]
    human: Player,
    /// Who moves first
    #[arg(long, default_value = "builder")]
    first: Player,
    #[command(flatten)]
    budget: Budget,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("gpgame: {msg}");
    ExitCode::from(code)
}

fn solve_failure(e: SolveError) -> ExitCode {
    match e {
        SolveError::BudgetExhausted { .. } => fail(EXIT_BUDGET, e),
        _ => fail(EXIT_MISMATCH, e),
    }
}

fn load(path: &Path) -> Result<Graph, ExitCode> {
    gen::read_graph_file(path).map_err(|e| fail(EXIT_USAGE, e))
}

fn write_report(path: &Path, lines: &[String]) -> Result<(), ExitCode> {
    let write = || -> io::Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        for l in lines {
            writeln!(w, "{l}")?;
        }
        w.flush()
    };
    write().map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn bound_text(f: &FormulaResult<usize>, value: usize) -> String {
    match f {
        Ok(f) if value <= f.value => format!("{} (holds)", f.value),
        Ok(f) => format!("{} (VIOLATED)", f.value),
        Err(_) => "n/a".into(),
    }
}

fn solve(args: SolveArgs, argv: &[String]) -> Result<(), ExitCode> {
    let g = load(&args.graph)?;
    let cfg = SolverConfig { node_budget: args.budget.get(), threads: args.threads.max(1), ..Default::default() };
    let out = solve_game_with(&g, args.first, &cfg).map_err(solve_failure)?;
    let mut line = SolveLine {
        graph: args.graph.display().to_string(),
        order: g.order(),
        size: g.size(),
        first: args.first.to_string(),
        value: out.value,
        pv: out.principal_variation.clone(),
        nodes: out.stats.nodes,
        ..Default::default()
    };
    let pv = out.principal_variation.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    println!("graph: {} ({} vertices, {} edges)", args.graph.display(), g.order(), g.size());
    println!("{} ({} first): {}", game_name(args.first), args.first, out.value);
    println!("optimal line: {}", if pv.is_empty() { "-" } else { &pv });
    if args.all {
        let d = DistanceMatrix::new(&g);
        let gp = gp_number_with(&d, cfg.node_budget).map_err(solve_failure)?;
        let gpl = gp_lower_number_with(&d, cfg.node_budget).map_err(solve_failure)?;
        println!("gp: {gp}");
        println!("gp-: {gpl}");
        line.gp = Some(gp);
        line.gp_lower = Some(gpl);
        let bounds: Vec<(&str, FormulaResult<usize>)> = match args.first {
            Player::Builder => {
                vec![("bound_min_max", gpg_upper_min_max(&d)), ("bound_max_edge", gpg_upper_max_edge(&d))]
            }
            Player::Blocker => {
                vec![("bound_class_g", gpg_prime_upper_class_g(&d)), ("bound_tree_leaves", tree_gpg_prime_upper(&g))]
            }
        };
        for (name, f) in &bounds {
            let text = bound_text(f, out.value);
            println!("{}: {text}", name.replace('_', " "));
            line.bounds.push((name.to_string(), f.as_ref().map_or_else(|_| "n/a".into(), |f| f.value.to_string())));
        }
    }
    println!("nodes: {}", out.stats.nodes);
    if let Some(path) = &args.out {
        write_report(path, &[report::header(argv), line.render()])?;
    }
    Ok(())
}

fn generate(args: GenArgs) -> Result<(), ExitCode> {
    let g = gen::generate(&args.family, &args.params, args.subdiv.as_deref()).map_err(|e| fail(EXIT_USAGE, e))?;
    let written = match &args.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            write_graph(&g, &mut w, args.labels)?;
            w.flush()
        }),
        None => write_graph(&g, io::stdout().lock(), args.labels),
    };
    written.map_err(|e| fail(EXIT_USAGE, e))
}

fn verify(args: VerifyArgs, argv: &[String]) -> Result<(), ExitCode> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args
            .suite
            .parse()
            .map_err(|e| fail(EXIT_USAGE, format!("{e} (expected one of: {}, all)", suite_names())))?]
    };
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global().map_err(|e| fail(EXIT_USAGE, e))?;
    }
    let cfg = VerifyConfig { node_budget: args.budget.get() };
    let mut lines = vec![report::header(argv)];
    let mut all = Vec::new();
    for suite in suites {
        let records = suite.run(&cfg);
        let s = Summary::of(&records);
        for r in &records {
            if args.verbose {
                println!("{}", report::record_line(r, args.timings));
            }
            for d in report::diff_lines(r) {
                println!("FAIL {suite}: {d}");
            }
            lines.push(report::record_line(r, args.timings));
        }
        println!(
            "{} {suite}: {} instances, {} passed, {} failed{}",
            if s.failed() == 0 { "PASS" } else { "FAIL" },
            s.records,
            s.passed,
            s.failed(),
            if s.budget_exhausted > 0 { format!(" ({} out of budget)", s.budget_exhausted) } else { String::new() }
        );
        all.extend(records);
    }
    let total = Summary::of(&all);
    lines.push(total.line());
    println!("total: {} instances, {} passed, {} failed", total.records, total.passed, total.failed());
    if let Some(path) = &args.out {
        write_report(path, &lines)?;
    }
    if total.mismatched() > 0 {
        Err(ExitCode::from(EXIT_MISMATCH))
    } else if total.budget_exhausted > 0 {
        Err(ExitCode::from(EXIT_BUDGET))
    } else {
        Ok(())
    }
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}

fn play(args: PlayArgs) -> Result<(), ExitCode> {
    let g = load(&args.graph)?;
    let cfg = SolverConfig { node_budget: args.budget.get(), ..Default::default() };
    let stdin = io::stdin().lock();
    let mut term = Terminal::new(&g, stdin, io::stdout());
    play_game(&g, args.human, args.first, cfg, &mut term).map_err(solve_failure)?;
    Ok(())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => solve(a, &argv),
        Command::Gen(a) => generate(a),
        Command::Verify(a) => verify(a, &argv),
        Command::Play(a) => play(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
