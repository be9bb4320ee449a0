//! `redlab`: generate, solve, reduce and verify instances from the shell.
//!
//! Exit codes: 0 for YES or success, 1 for NO or failed verification, 2 for
//! usage and I/O errors.

mod dot;
mod example;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use redlab::harness::{
    default_spec, fit_shortness, fit_turing, generate, resolve, verify_m_reduction,
    verify_t_reduction, GenSpec,
};
use redlab::instances::{parse, serialize, LinMode, Tag};
use redlab::oracles::{decide, solve_dstcon};
use redlab::reductions::{ap2dm_to_dstcon_queries, apply, pair_graph, TURING_NAME};
use redlab::{Instance, ProblemClass, Result};

#[derive(Parser, Debug)]
#[command(
    name = "redlab",
    version,
    about = "Short reductions between NL problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a seeded random instance.
    Gen {
        /// cnf2, digraph, graph, xce, ap2dm, lin or xor.
        class: ProblemClass,
        #[arg(long)]
        size: usize,
        /// Comma-separated tags such as occ_bound=3,exact.
        #[arg(long, value_delimiter = ',')]
        tags: Vec<Tag>,
        /// Clauses, edges, sets, pairs, rows or constraints.
        #[arg(long)]
        items: Option<usize>,
        #[arg(long, default_value = "geq")]
        mode: LinMode,
        /// Chance of planting a solution.
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long, default_value_t = 0.3)]
        exempt: f64,
        /// Emit digraphs in normalized endpoint shape.
        #[arg(long)]
        normalized: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide an instance; exit 0 on YES and 1 on NO.
    Solve { file: PathBuf },
    /// Apply a named reduction after its preparation step.
    Reduce {
        name: String,
        input: PathBuf,
        output: PathBuf,
        /// Where to write the size report (stdout by default).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check membership equivalence and the size bound over seeded trials.
    Verify {
        name: String,
        #[command(flatten)]
        run: RunArgs,
        /// Directory for counterexample files.
        #[arg(long, default_value = "redlab-run")]
        out: PathBuf,
    },
    /// Fit the observed output sizes against the declared bound.
    Fit {
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a worked example, its reduction and both verdicts.
    Example { figure: Figure },
    /// Graphviz rendering of a graph-shaped instance.
    Dot {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Largest instance size; the reduction's default family otherwise.
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

fn read_instance(path: &Path) -> Result<Instance> {
    parse(&fs::read_to_string(path)?, None)
}

fn spec_for(name: &str, run: &RunArgs) -> Result<GenSpec> {
    let mut spec = default_spec(name, run.seed)?;
    if let Some(m) = run.max_size {
        spec.size = m;
    }
    Ok(spec)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            class,
            size,
            tags,
            items,
            mode,
            bias,
            exempt,
            normalized,
            seed,
            output,
        } => {
            let mut spec = GenSpec::new(class, size, seed)
                .with_tags(&tags)
                .with_mode(mode)
                .with_bias(bias);
            spec.items = items;
            spec.exempt_density = exempt;
            spec.normalized = normalized;
            fs::write(output, serialize(&generate(&spec)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { file } => {
            let d = decide(&read_instance(&file)?)?;
            println!("{d}");
            Ok(if d.yes {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Reduce {
            name,
            input,
            output,
            report,
        } => {
            let x = read_instance(&input)?;
            let (image, text) = if name == TURING_NAME {
                let a = x.as_ap2dm()?;
                let out = ap2dm_to_dstcon_queries(a, &mut |g| Ok(solve_dstcon(g)?.yes))?;
                eprintln!("answer: {}", if out.yes { "YES" } else { "NO" });
                (Instance::Digraph(pair_graph(a)), out.report.to_string())
            } else {
                let r = resolve(&name)?;
                let applied = apply(r, &r.prepare(&x)?)?;
                for note in &applied.output.notes {
                    eprintln!("note: {note}");
                }
                (applied.output.instance, applied.report.to_string())
            };
            fs::write(output, serialize(&image))?;
            match report {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { name, run, out } => {
            let spec = spec_for(&name, &run)?;
            let result = if name == TURING_NAME {
                verify_t_reduction(&spec, run.trials)
            } else {
                verify_m_reduction(resolve(&name)?, &spec, run.trials)
            };
            if !result.counterexamples.is_empty() {
                result.write_counterexamples(&out)?;
            }
            print!("{result}");
            Ok(if result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Fit { name, run } => {
            let spec = spec_for(&name, &run)?;
            let fit = if name == TURING_NAME {
                fit_turing(&spec, run.trials)
            } else {
                fit_shortness(resolve(&name)?, &spec, run.trials)
            };
            print!("{fit}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { figure } => {
            let text = match figure {
                Figure::Fig1 => example::fig1()?,
                Figure::Fig2 => example::fig2()?,
                Figure::Fig3 => example::fig3()?,
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { file, output } => {
            fs::write(output, dot::render(&read_instance(&file)?, None)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
