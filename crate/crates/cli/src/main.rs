use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symrank::construct::{
    distinct_radical_space, hyperbolic_rank2_space, odd_partition, positive_rank2t_space, spread, trace_space,
    ward_space,
};
use symrank::field::MODULUS_RULE_VERSION;
use symrank::io::{read_form_space, write_form_space, write_partition, CensusReport};
use symrank::search::{max_constant_rank_dim, SearchMode, SearchSpec};
use symrank::verify::{run_suite, Status, SuiteOptions};
use symrank::{parse_field_spec, Field, FormSpace, Limits};

#[derive(Parser)]
#[command(name = "symrank", version = MODULUS_RULE_VERSION, about = "Constant-rank spaces of symmetric forms over odd finite fields")]
struct Cli {
    /// Largest span `q^d` any enumeration may walk.
    #[arg(long, global = true, default_value_t = Limits::default().span)]
    span_budget: u64,
    /// Largest vector count `q^n` any enumeration may walk.
    #[arg(long, global = true, default_value_t = Limits::default().vectors)]
    vector_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Trace,
    DistinctRadical,
    Hyperbolic,
    Positive2t,
    Ward,
    Spread,
    OddPartition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Ward,
    Bounds,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write it in the text file format.
    Construct {
        kind: Construction,
        /// Field order, `9` or `3^2`.
        #[arg(long, default_value = "3")]
        q: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite. Exits 1 when any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Node budget of each randomized search in the bounds suite.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
    /// Largest constant-rank subspace search.
    Search {
        #[arg(long)]
        q: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "plain")]
        mode: SearchMode,
        /// Walk the canonical tree; otherwise sample randomly.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Form-space file to start from.
        #[arg(long)]
        seed: Option<PathBuf>,
        /// Worker threads, 0 for the rayon default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the field parameters and the modulus in use.
    FieldInfo {
        #[arg(long)]
        q: String,
    },
    /// Type census of a form-space file, with formula and brute-force counts.
    Census {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Check,
    Usage(String),
}

impl From<symrank::Error> for Failure {
    fn from(e: symrank::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this construction")))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_json(path: &Option<PathBuf>, value: &impl serde::Serialize) -> Result<(), Failure> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).expect("report serializes");
        write(path, &(text + "\n"))?;
    }
    Ok(())
}

fn gram_json(m: &FormSpace) -> Value {
    let mats: Vec<Vec<Vec<u32>>> = m
        .basis()
        .iter()
        .map(|g| (0..g.n()).map(|i| (0..g.n()).map(|j| g.get(i, j).0).collect()).collect())
        .collect();
    json!(mats)
}

fn construct(kind: Construction, f: &Field, n: Option<usize>, m: Option<usize>, t: Option<usize>) -> Result<String, Failure> {
    Ok(match kind {
        Construction::Trace => write_form_space(&trace_space(f, need(n, "n")?)?.1),
        Construction::DistinctRadical => write_form_space(&distinct_radical_space(f, need(n, "n")?, need(m, "m")?)?.space),
        Construction::Hyperbolic => write_form_space(&hyperbolic_rank2_space(f, need(n, "n")?)?),
        Construction::Positive2t => write_form_space(&positive_rank2t_space(f, need(n, "n")?, need(t, "t")?)?),
        Construction::Ward => write_form_space(&ward_space()?.space),
        Construction::Spread => write_partition(&spread(f, need(m, "m")?)?),
        Construction::OddPartition => write_partition(&odd_partition(f, need(m, "m")?)?),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits { span: cli.span_budget, vectors: cli.vector_budget };
    match cli.command {
        Command::Construct { kind, q, n, m, t, out } => {
            let f = parse_field_spec(&q)?;
            let text = construct(kind, &f, n, m, t)?;
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Verify { suite, json, budget, rng_seed } => {
            let name = match suite {
                Suite::Core => "core",
                Suite::Ward => "ward",
                Suite::Bounds => "bounds",
                Suite::All => "all",
            };
            let opts = SuiteOptions { limits, random_budget: budget, rng_seed };
            let results = run_suite(name, &opts)?;
            let mut failed = 0;
            for r in &results {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skipped",
                };
                let instance = r.params.get("instance").and_then(Value::as_str).unwrap_or("");
                println!("{status:7} {} {instance}", r.name);
                failed += (r.status == Status::Fail) as usize;
            }
            println!("{} checks, {failed} failed", results.len());
            write_json(&json, &results)?;
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
        Command::Search { q, n, rank, mode, exhaustive, budget, seed, jobs, rng_seed, json } => {
            let f = parse_field_spec(&q)?;
            let mut spec = SearchSpec::new(&f, n, rank, mode);
            spec.exhaustive = exhaustive;
            spec.budget = budget;
            spec.jobs = jobs;
            spec.rng_seed = rng_seed;
            if let Some(path) = seed {
                spec.seed = Some(read_form_space(&read(&path)?)?);
            }
            let out = max_constant_rank_dim(&spec)?;
            println!("best_dim {}", out.best_dim);
            println!("exhaustive_proof {}", out.exhaustive_proof);
            println!("nodes_visited {}", out.nodes_visited);
            if let Some(w) = &out.witness {
                print!("{}", write_form_space(w));
            }
            let report = json!({
                "q": f.q(),
                "n": n,
                "rank": rank,
                "mode": mode,
                "best_dim": out.best_dim,
                "exhaustive_proof": out.exhaustive_proof,
                "nodes_visited": out.nodes_visited,
                "witness": out.witness.as_ref().map(gram_json),
            });
            write_json(&json, &report)?;
        }
        Command::FieldInfo { q } => {
            let f = parse_field_spec(&q)?;
            let modulus: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
            println!("p {}", f.p());
            println!("k {}", f.k());
            println!("q {}", f.q());
            println!("modulus {}", modulus.join(" "));
            println!("generator {}", f.generator().0);
            println!("rule {MODULUS_RULE_VERSION}");
        }
        Command::Census { file, json } => {
            let m = read_form_space(&read(&file)?)?;
            let r = CensusReport::compute(&m, &limits)?;
            println!("q {} n {} d {}", r.q, r.n, r.d);
            for (rank, count) in &r.rank_histogram {
                println!("rank {rank}: {count}");
            }
            println!("A {} B {}", r.a, r.b);
            println!("common isotropic (brute force) {}", r.common_isotropic_total);
            println!("common isotropic (formula) {}", r.formula_value);
            println!("agreement {}", r.agreement);
            write_json(&json, &r)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
