//! `maxmult`: enumerate maximal dominant weights of the level-`k` basic
//! module for affine sl(n), and compute their multiplicities by four
//! independent combinatorial methods.
//!
//! Subcommands: `maxweights` (list the weights), `multiplicity` (one weight,
//! chosen method or all), `crosscheck` (sweep all weights up to a size cap
//! and compare methods), `trace` (print the full bijection chain for one
//! crystal element). Exit codes: 0 success, 2 usage or inadmissible input,
//! 3 method disagreement (or an inconsistent cache).

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use maxmult::{
    check_admissible_pair, count_constrained_avoiding, count_syt_pairs, count_triples,
    crystal_to_triple, enumerate_max_dominant, enumerate_weight_space, lambda_coefficients,
    rsk_forward, rsk_reverse, syt_pair_to_triple, triple_to_crystal, triple_to_syt_pair,
    AlphaVector, MaximalDominantWeight, Partition,
};

/// Above this many total boxes the exponential crystal method requires the
/// `--allow-crystal` opt-in.
const CRYSTAL_BOX_GATE: usize = 40;

#[derive(Parser)]
#[command(
    name = "maxmult",
    version,
    about = "Maximal dominant weight multiplicities for level-k basic modules of affine sl(n)",
    propagate_version = true
)]
struct Cli {
    /// Append results to this newline-delimited JSON cache file
    /// (also read from the MAXMULT_CACHE environment variable).
    #[arg(long, global = true, env = "MAXMULT_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Check on startup that all cached records with the same input key
    /// report the same multiplicity.
    #[arg(long, global = true)]
    verify_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every maximal dominant weight of the level-k module at rank n.
    Maxweights {
        /// Rank parameter (number of residues), n ≥ 2.
        #[arg(long)]
        n: usize,
        /// Level, k ≥ 1.
        #[arg(long)]
        k: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compute the multiplicity of one weight.
    Multiplicity {
        /// Rank parameter (number of residues), n ≥ 2.
        #[arg(long)]
        n: usize,
        /// Level, k ≥ 1.
        #[arg(long)]
        k: usize,
        /// Common size of the two partitions.
        #[arg(long)]
        ell: usize,
        /// First partition, comma-separated weakly decreasing parts, e.g. 4,3,3.
        #[arg(long)]
        a: Partition,
        /// Second partition, comma-separated weakly decreasing parts.
        #[arg(long)]
        b: Partition,
        /// Counting method.
        #[arg(long, value_enum, default_value_t = MethodChoice::All)]
        method: MethodChoice,
        /// Run the exponential crystal method even above the size gate.
        #[arg(long)]
        allow_crystal: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run several methods across all weights with ell ≤ max-ell and compare.
    Crosscheck {
        /// Rank parameter (number of residues), n ≥ 2.
        #[arg(long)]
        n: usize,
        /// Level, k ≥ 1.
        #[arg(long)]
        k: usize,
        /// Largest partition size to include.
        #[arg(long)]
        max_ell: usize,
        /// Comma-separated methods to run.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "triples,syt,rsk")]
        methods: Vec<Method>,
        /// Worker threads for the per-weight computations (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Run the exponential crystal method even above the size gate.
        #[arg(long)]
        allow_crystal: bool,
    },
    /// Print the full bijection chain for one crystal element.
    Trace {
        /// Rank parameter (number of residues), n ≥ 2.
        #[arg(long)]
        n: usize,
        /// Level, k ≥ 1.
        #[arg(long)]
        k: usize,
        /// Common size of the two partitions.
        #[arg(long)]
        ell: usize,
        /// First partition, comma-separated weakly decreasing parts.
        #[arg(long)]
        a: Partition,
        /// Second partition, comma-separated weakly decreasing parts.
        #[arg(long)]
        b: Partition,
        /// Which element of the weight space, in canonical order (0-based).
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Print the largest letter of the permutation as 0.
        #[arg(long)]
        zero_for_largest: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// One concrete counting method.
#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    /// Exhaustive search of the crystal weight space (exponential).
    Crystal,
    /// Decrement-chain triples with memoized chain counting.
    Triples,
    /// Same-shape tableau pairs with block conditions.
    Syt,
    /// Constrained pattern-avoiding permutations.
    Rsk,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Crystal => "crystal",
            Method::Triples => "triples",
            Method::Syt => "syt",
            Method::Rsk => "rsk",
        }
    }
}

/// `--method` argument: a concrete method or `all`.
#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    Crystal,
    Triples,
    Syt,
    Rsk,
    All,
}

/// One cached computation, stored as a line of JSON.
#[derive(Serialize, Deserialize)]
struct ResultRecord {
    n: usize,
    k: usize,
    ell: usize,
    #[serde(rename = "A")]
    a: Partition,
    #[serde(rename = "B")]
    b: Partition,
    multiplicity: u64,
    method: Method,
    elapsed_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if cli.verify_cache {
        match &cli.cache {
            Some(path) => {
                if let Err(message) = verify_cache(path)? {
                    eprintln!("cache inconsistency: {message}");
                    return Ok(ExitCode::from(3));
                }
            }
            None => eprintln!("warning: --verify-cache given without a cache path; nothing to verify"),
        }
    }

    match cli.command {
        Command::Maxweights { n, k, format } => cmd_maxweights(n, k, format),
        Command::Multiplicity {
            n,
            k,
            ell,
            a,
            b,
            method,
            allow_crystal,
            format,
        } => cmd_multiplicity(n, k, ell, &a, &b, method, allow_crystal, format, cli.cache.as_deref()),
        Command::Crosscheck {
            n,
            k,
            max_ell,
            methods,
            jobs,
            allow_crystal,
        } => cmd_crosscheck(n, k, max_ell, &methods, jobs, allow_crystal, cli.cache.as_deref()),
        Command::Trace {
            n,
            k,
            ell,
            a,
            b,
            index,
            zero_for_largest,
        } => cmd_trace(n, k, ell, &a, &b, index, zero_for_largest),
    }
}

fn usage_error(message: &str) -> Result<ExitCode> {
    eprintln!("error: {message}");
    Ok(ExitCode::from(2))
}

fn check_rank_level(n: usize, k: usize) -> Option<String> {
    if n < 2 {
        return Some(format!("n must be at least 2, got {n}"));
    }
    if k < 1 {
        return Some(format!("k must be at least 1, got {k}"));
    }
    None
}

fn cmd_maxweights(n: usize, k: usize, format: Format) -> Result<ExitCode> {
    if let Some(message) = check_rank_level(n, k) {
        return usage_error(&message);
    }
    let weights = enumerate_max_dominant(n, k);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&weights)?),
        Format::Table => {
            println!("{:>5}  {:<24} {:<24} alpha", "ell", "A", "B");
            for w in &weights {
                let a = w.a.as_ref().map_or("-".to_string(), Partition::to_string);
                let b = w.b.as_ref().map_or("-".to_string(), Partition::to_string);
                println!("{:>5}  {a:<24} {b:<24} {}", w.ell, w.alpha);
            }
            println!("{} weights of the level-{k} module at n={n}", weights.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Validates the full input of a single-weight command; `Err` holds the
/// user-facing message.
fn validate_instance(
    n: usize,
    k: usize,
    ell: usize,
    a: &Partition,
    b: &Partition,
) -> std::result::Result<AlphaVector, String> {
    if let Some(message) = check_rank_level(n, k) {
        return Err(message);
    }
    if ell == 0 {
        return Err("ell must be at least 1 (the ell = 0 weight is the highest weight itself, multiplicity 1)".into());
    }
    check_admissible_pair(a, b, ell, k, n).map_err(|e| format!("inadmissible input: {e}"))?;
    Ok(lambda_coefficients(a, b, ell, n))
}

/// Runs one method on one weight. `alpha` carries the crystal target.
fn run_method(
    method: Method,
    n: usize,
    k: usize,
    ell: usize,
    a: &Partition,
    b: &Partition,
    alpha: &AlphaVector,
) -> (u64, Duration) {
    let start = Instant::now();
    let count = match method {
        Method::Crystal => enumerate_weight_space(n, k, alpha).len() as u64,
        Method::Triples => count_triples(a, b, ell, k),
        Method::Syt => count_syt_pairs(a, b, ell, k),
        Method::Rsk => count_constrained_avoiding(a, b, ell, k),
    };
    (count, start.elapsed())
}

/// The crystal gate: boxes = Σ alpha coefficients; above the threshold the
/// caller must opt in.
fn crystal_gate(alpha: &AlphaVector, allow_crystal: bool) -> std::result::Result<(), String> {
    let boxes = alpha.sum();
    if boxes > CRYSTAL_BOX_GATE && !allow_crystal {
        return Err(format!(
            "the crystal method enumerates a weight space of {boxes} boxes (> {CRYSTAL_BOX_GATE}); \
             this is exponential — pass --allow-crystal to run it anyway"
        ));
    }
    if boxes > CRYSTAL_BOX_GATE {
        eprintln!(
            "warning: crystal search over {boxes} boxes may take a long time (opted in via --allow-crystal)"
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_multiplicity(
    n: usize,
    k: usize,
    ell: usize,
    a: &Partition,
    b: &Partition,
    method: MethodChoice,
    allow_crystal: bool,
    format: Format,
    cache: Option<&std::path::Path>,
) -> Result<ExitCode> {
    let alpha = match validate_instance(n, k, ell, a, b) {
        Ok(alpha) => alpha,
        Err(message) => return usage_error(&message),
    };

    let methods: Vec<Method> = match method {
        MethodChoice::Crystal => vec![Method::Crystal],
        MethodChoice::Triples => vec![Method::Triples],
        MethodChoice::Syt => vec![Method::Syt],
        MethodChoice::Rsk => vec![Method::Rsk],
        MethodChoice::All => vec![Method::Triples, Method::Syt, Method::Rsk, Method::Crystal],
    };
    let methods: Vec<Method> = if methods.contains(&Method::Crystal) {
        match crystal_gate(&alpha, allow_crystal) {
            Ok(()) => methods,
            Err(message) if method == MethodChoice::All => {
                // `all` degrades gracefully: skip crystal above the gate.
                eprintln!("note: skipping crystal — {message}");
                methods.into_iter().filter(|m| *m != Method::Crystal).collect()
            }
            Err(message) => return usage_error(&message),
        }
    } else {
        methods
    };

    let mut records = Vec::new();
    for m in &methods {
        let (count, elapsed) = run_method(*m, n, k, ell, a, b, &alpha);
        records.push(ResultRecord {
            n,
            k,
            ell,
            a: a.clone(),
            b: b.clone(),
            multiplicity: count,
            method: *m,
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
        });
    }

    if let Some(path) = cache {
        append_records(path, &records)?;
    }

    let agreed = records.windows(2).all(|w| w[0].multiplicity == w[1].multiplicity);
    if !agreed {
        eprintln!(
            "method disagreement at n={n}, k={k}, ell={ell}, A={a}, B={b}:"
        );
        for r in &records {
            eprintln!("  {:>8}: {}", r.method.name(), r.multiplicity);
        }
        return Ok(ExitCode::from(3));
    }

    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&records)?),
        Format::Table => {
            println!("{}", records[0].multiplicity);
            if records.len() > 1 {
                for r in &records {
                    eprintln!("  {:>8}: {:.3} ms", r.method.name(), r.elapsed_ms);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Per-weight crosscheck row in the JSON report.
#[derive(Serialize)]
struct CrosscheckRow {
    ell: usize,
    #[serde(rename = "A")]
    a: Partition,
    #[serde(rename = "B")]
    b: Partition,
    multiplicity: u64,
}

#[derive(Serialize)]
struct CrosscheckReport {
    n: usize,
    k: usize,
    max_ell: usize,
    methods: Vec<&'static str>,
    weights: usize,
    agreed: bool,
    total_ms_by_method: std::collections::BTreeMap<&'static str, f64>,
    rows: Vec<CrosscheckRow>,
}

fn cmd_crosscheck(
    n: usize,
    k: usize,
    max_ell: usize,
    methods: &[Method],
    jobs: Option<usize>,
    allow_crystal: bool,
    cache: Option<&std::path::Path>,
) -> Result<ExitCode> {
    if let Some(message) = check_rank_level(n, k) {
        return usage_error(&message);
    }
    if max_ell < 1 {
        return usage_error("max-ell must be at least 1");
    }
    let mut methods: Vec<Method> = methods.to_vec();
    methods.dedup();
    if methods.is_empty() {
        return usage_error("no methods selected");
    }
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("initializing the worker pool")?;
    }

    let weights: Vec<MaximalDominantWeight> = enumerate_max_dominant(n, k)
        .into_iter()
        .filter(|w| w.ell >= 1 && w.ell <= max_ell)
        .collect();

    if methods.contains(&Method::Crystal) {
        // Gate on the largest instance in the sweep.
        if let Some(biggest) = weights.iter().max_by_key(|w| w.alpha.sum()) {
            if let Err(message) = crystal_gate(&biggest.alpha, allow_crystal) {
                return usage_error(&message);
            }
        }
    }

    use rayon::prelude::*;
    let results: Vec<(MaximalDominantWeight, Vec<ResultRecord>)> = weights
        .into_par_iter()
        .map(|w| {
            let (a, b) = (w.a.clone().unwrap(), w.b.clone().unwrap());
            let records: Vec<ResultRecord> = methods
                .iter()
                .map(|m| {
                    let (count, elapsed) = run_method(*m, n, k, w.ell, &a, &b, &w.alpha);
                    ResultRecord {
                        n,
                        k,
                        ell: w.ell,
                        a: a.clone(),
                        b: b.clone(),
                        multiplicity: count,
                        method: *m,
                        elapsed_ms: elapsed.as_secs_f64() * 1e3,
                    }
                })
                .collect();
            (w, records)
        })
        .collect();

    if let Some(path) = cache {
        let flat: Vec<ResultRecord> = results
            .iter()
            .flat_map(|(_, records)| records.iter())
            .map(|r| ResultRecord {
                a: r.a.clone(),
                b: r.b.clone(),
                method: r.method,
                ..*r
            })
            .collect();
        append_records(path, &flat)?;
    }

    for (w, records) in &results {
        if records.windows(2).any(|pair| pair[0].multiplicity != pair[1].multiplicity) {
            let witness = serde_json::json!({
                "n": n, "k": k, "ell": w.ell,
                "A": w.a, "B": w.b,
                "counts": records
                    .iter()
                    .map(|r| (r.method.name(), r.multiplicity))
                    .collect::<std::collections::BTreeMap<_, _>>(),
            });
            eprintln!("method disagreement: {witness}");
            return Ok(ExitCode::from(3));
        }
    }

    let mut total_ms_by_method = std::collections::BTreeMap::new();
    for (_, records) in &results {
        for r in records {
            *total_ms_by_method.entry(r.method.name()).or_insert(0.0) += r.elapsed_ms;
        }
    }
    let report = CrosscheckReport {
        n,
        k,
        max_ell,
        methods: methods.iter().map(|m| m.name()).collect(),
        weights: results.len(),
        agreed: true,
        total_ms_by_method,
        rows: results
            .iter()
            .map(|(w, records)| CrosscheckRow {
                ell: w.ell,
                a: w.a.clone().unwrap(),
                b: w.b.clone().unwrap(),
                multiplicity: records[0].multiplicity,
            })
            .collect(),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_trace(
    n: usize,
    k: usize,
    ell: usize,
    a: &Partition,
    b: &Partition,
    index: usize,
    zero_for_largest: bool,
) -> Result<ExitCode> {
    let alpha = match validate_instance(n, k, ell, a, b) {
        Ok(alpha) => alpha,
        Err(message) => return usage_error(&message),
    };
    let space = enumerate_weight_space(n, k, &alpha);
    if index >= space.len() {
        return usage_error(&format!(
            "index {index} out of range: the weight space has {} elements",
            space.len()
        ));
    }
    let element = &space[index];
    println!("crystal element {index} of {}:", space.len());
    print!("{}", element.render());

    let triple = crystal_to_triple(element, a, b);
    println!("triple:");
    println!("{}", serde_json::to_string(&triple)?);

    let pair = triple_to_syt_pair(&triple, a, b);
    println!("tableau pair:");
    print!("M:\n{}N:\n{}", pair.m.render(), pair.n.render());

    let word = rsk_reverse(&pair);
    println!("permutation:");
    print!("{}", word.render(zero_for_largest));

    // Replay the chain backwards; each map is bijective, so anything other
    // than the original data is an internal error.
    anyhow::ensure!(rsk_forward(&word) == pair, "permutation did not replay to the pair");
    anyhow::ensure!(
        syt_pair_to_triple(&pair, a, b) == triple,
        "pair did not strip back to the triple"
    );
    anyhow::ensure!(
        &triple_to_crystal(&triple, a, b, k, n) == element,
        "triple did not rebuild the crystal element"
    );
    println!("backward verification: ok");
    Ok(ExitCode::SUCCESS)
}

/// Appends records to the newline-delimited JSON cache.
fn append_records(path: &std::path::Path, records: &[ResultRecord]) -> Result<()> {
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening cache {}", path.display()))?;
    for record in records {
        serde_json::to_writer(&mut file, record)?;
        file.write_all(b"\n")?;
    }
    Ok(())
}

/// Checks that all records sharing an input key agree on the multiplicity.
/// `Ok(Err(message))` is an inconsistency; IO or parse failures are hard
/// errors.
fn verify_cache(path: &std::path::Path) -> Result<std::result::Result<(), String>> {
    if !path.exists() {
        return Ok(Ok(()));
    }
    let file = std::fs::File::open(path)
        .with_context(|| format!("opening cache {}", path.display()))?;
    let mut by_key: std::collections::HashMap<String, (u64, String)> = std::collections::HashMap::new();
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: ResultRecord = serde_json::from_str(&line)
            .with_context(|| format!("cache line {} is not a valid record", lineno + 1))?;
        let key = format!(
            "n={} k={} ell={} A={} B={}",
            record.n, record.k, record.ell, record.a, record.b
        );
        match by_key.get(&key) {
            None => {
                by_key.insert(key, (record.multiplicity, record.method.name().to_string()));
            }
            Some((previous, method)) if *previous != record.multiplicity => {
                return Ok(Err(format!(
                    "{key}: {} reported {} but {method} previously reported {previous}",
                    record.method.name(),
                    record.multiplicity
                )));
            }
            Some(_) => {}
        }
    }
    Ok(Ok(()))
}
