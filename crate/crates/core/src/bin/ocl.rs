use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ocl_core::algorithms::{run, RunResult};
use ocl_core::combiner::{a_prime_with, combine, Restart};
use ocl_core::experiment::{
    run_experiment, verdict, with_model, write_csv, ExperimentConfig, GeneratorSpec, Verdict,
};
use ocl_core::io::{parse_document, write_document, InstanceDocument};
use ocl_core::oracle::{Oracle, OracleLimits, ORACLE_LIMIT_ENV};
use ocl_core::registry::AlgoSpec;
use ocl_core::structure::{extract_clique_partition, verify_partition};
use ocl_core::FirstFit;

const EXIT_BOUND_VIOLATED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_ROW_ERRORS: u8 = 3;

#[derive(Parser)]
#[command(name = "ocl", version, about = "Online graph coloring with predictions")]
struct Cli {
    /// Largest vertex count for the exact oracle.
    #[arg(long, global = true, env = ORACLE_LIMIT_ENV)]
    oracle_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file in the canonical JSON format; `-` or omitted reads stdin.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen {
        /// crown-a, crown-b, kkblocks, singletons or random.
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs, e.g. `n=8,p=0.5`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// none, perfect or corrupted:<rate>. Default keeps the family's own.
        #[arg(long)]
        predictions: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one algorithm.
    Run {
        #[arg(long)]
        algo: String,
        #[command(flatten)]
        io: InstanceArgs,
        /// Also print one JSON line per step.
        #[arg(long)]
        trace: bool,
    },
    /// Run the combiner over several algorithms.
    Combine {
        /// Comma-separated, e.g. `ffp,ff` or `scripts`.
        #[arg(long)]
        algos: String,
        #[command(flatten)]
        io: InstanceArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Follow predictions, then switch to the combiner (chromatic number known).
    Aprime {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "ff")]
        classical: String,
        /// Start phase two from scratch on the suffix instead of replaying
        /// the whole input.
        #[arg(long)]
        fresh_suffix: bool,
        #[command(flatten)]
        io: InstanceArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Exact prediction error with its witness.
    Eta {
        #[command(flatten)]
        io: InstanceArgs,
    },
    /// Run FirstFit and extract its clique family.
    Extract {
        #[command(flatten)]
        io: InstanceArgs,
    },
    /// Batch run from a JSON config; writes CSV.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let oracle = Oracle::new(
        cli.oracle_limit
            .map(OracleLimits::uniform)
            .unwrap_or_default(),
    );
    match execute(cli.command, &oracle) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_document(path: Option<&Path>) -> CliResult<InstanceDocument> {
    let bytes = match path {
        None => read_stdin()?,
        Some(p) if p == Path::new("-") => read_stdin()?,
        Some(p) => std::fs::read(p).map_err(|e| format!("reading {}: {e}", p.display()))?,
    };
    parse_document(&bytes).map_err(|e| e.to_string())
}

fn read_stdin() -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    std::io::stdin()
        .read_to_end(&mut buf)
        .map_err(|e| format!("reading stdin: {e}"))?;
    Ok(buf)
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("writing stdout: {e}")),
    }
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serialisable")
}

fn describe_run(result: &RunResult, trace: bool) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "distinct_colors={}", result.distinct_colors);
    let _ = writeln!(text, "palettes={}", json(&result.per_palette_counts));
    if trace {
        for step in &result.per_step {
            let _ = writeln!(text, "{}", json(step));
        }
    }
    text
}

fn execute(command: Command, oracle: &Oracle) -> CliResult<ExitCode> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            predictions,
            out,
        } => {
            let spec = GeneratorSpec::from_params(&family, &params).map_err(|e| e.to_string())?;
            let mut doc = spec.generate(seed).map_err(|e| e.to_string())?;
            if let Some(model) = predictions {
                doc.instance =
                    with_model(doc.instance, &model, seed, oracle).map_err(|e| e.to_string())?;
            }
            let text = write_document(&doc.instance, doc.scripts.as_deref()) + "\n";
            emit(out.as_deref(), &text)?;
        }
        Command::Run { algo, io, trace } => {
            let doc = read_document(io.instance.as_deref())?;
            let spec: AlgoSpec = algo.parse().map_err(|e: ocl_core::registry::AlgoError| e.to_string())?;
            let mut colorer = spec.build(doc.scripts.as_deref()).map_err(|e| e.to_string())?;
            let result = run(&mut colorer, &doc.instance).map_err(|e| e.to_string())?;
            emit(io.out.as_deref(), &describe_run(&result, trace))?;
        }
        Command::Combine { algos, io, trace } => {
            let doc = read_document(io.instance.as_deref())?;
            let spec: AlgoSpec = format!("combine:{}", algos.replace(',', "+"))
                .parse()
                .map_err(|e: ocl_core::registry::AlgoError| e.to_string())?;
            let AlgoSpec::Combine(parts) = &spec else {
                unreachable!("parsed with combine: prefix")
            };
            let subs = AlgoSpec::expand(parts, doc.scripts.as_deref())
                .iter()
                .map(|p| p.build(doc.scripts.as_deref()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            if subs.is_empty() {
                return Err("no algorithms to combine".into());
            }
            let combined = combine(subs, &doc.instance).map_err(|e| e.to_string())?;
            let mut text = describe_run(&combined.result, trace);
            let _ = writeln!(text, "sub_counts={}", json(&combined.sub_counts));
            let _ = writeln!(text, "chosen={}", json(&combined.chosen));
            emit(io.out.as_deref(), &text)?;
        }
        Command::Aprime {
            k,
            classical,
            fresh_suffix,
            io,
            trace,
        } => {
            let doc = read_document(io.instance.as_deref())?;
            let classical: AlgoSpec = classical
                .parse()
                .map_err(|e: ocl_core::registry::AlgoError| e.to_string())?;
            let factory = classical
                .factory(doc.scripts.as_deref())
                .map_err(|e| e.to_string())?;
            let restart = if fresh_suffix {
                Restart::Fresh
            } else {
                Restart::Replay
            };
            let outcome =
                a_prime_with(k, factory, restart, &doc.instance).map_err(|e| e.to_string())?;
            let mut text = describe_run(&outcome.result, trace);
            match outcome.switch_step {
                Some(s) => {
                    let _ = writeln!(text, "switch_step={s}");
                }
                None => text.push_str("switch_step=none\n"),
            }
            let _ = writeln!(text, "chosen={}", json(&outcome.chosen));
            emit(io.out.as_deref(), &text)?;
        }
        Command::Eta { io } => {
            let doc = read_document(io.instance.as_deref())?;
            let result = oracle.prediction_error(&doc.instance).map_err(|e| e.to_string())?;
            let text = format!(
                "eta={}\n{}\n",
                result.eta,
                json(&serde_json::json!({
                    "partition": result.witness_partition.classes,
                    "assignment": result.witness_assignment,
                }))
            );
            emit(io.out.as_deref(), &text)?;
        }
        Command::Extract { io } => {
            let doc = read_document(io.instance.as_deref())?;
            let result = run(&mut FirstFit::new(), &doc.instance).map_err(|e| e.to_string())?;
            let partition =
                extract_clique_partition(doc.instance.graph(), &result).map_err(|e| e.to_string())?;
            let defects: Vec<String> = verify_partition(doc.instance.graph(), &partition)
                .iter()
                .map(ToString::to_string)
                .collect();
            let text = json(&serde_json::json!({
                "x": partition.x,
                "q": partition.q,
                "cliques": partition.cliques,
                "valid": defects.is_empty(),
                "defects": defects,
            })) + "\n";
            emit(io.out.as_deref(), &text)?;
            if !defects.is_empty() {
                return Ok(ExitCode::from(EXIT_BOUND_VIOLATED));
            }
        }
        Command::Experiment { config, out, seed } => {
            let bytes = std::fs::read(&config)
                .map_err(|e| format!("reading {}: {e}", config.display()))?;
            let mut cfg: ExperimentConfig = serde_json::from_slice(&bytes)
                .map_err(|e| format!("{}: {e}", config.display()))?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            let base = config.parent().unwrap_or(Path::new("."));
            let rows = run_experiment(&cfg, base, oracle).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| e.to_string())?;
            let text = String::from_utf8(buf).expect("csv is utf-8");
            let target = out.or_else(|| cfg.out.as_ref().map(|o| base.join(o)));
            emit(target.as_deref(), &text)?;
            return Ok(match verdict(&rows) {
                Verdict::Ok => ExitCode::SUCCESS,
                Verdict::BoundViolated => ExitCode::from(EXIT_BOUND_VIOLATED),
                Verdict::RowErrors => ExitCode::from(EXIT_ROW_ERRORS),
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}
