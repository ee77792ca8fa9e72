mod cache;
mod record;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use icpart::coalition::{verify_ic_partition, ClassVerdict, Partition};
use icpart::graph6::{encode_graph6, parse_graph6, read_stream_raw, Graph6Error};
use icpart::theorems::{run_check, TheoremId};
use icpart::{par, FamilySpec, Graph, Parallelism};

use cache::{Cache, CACHE_ENV};
use record::{Bounds, ScanRecord, CSV_HEADER};

const GRAMMAR: &str = "\
Graph inputs are graph6 strings (e.g. `Bw`) or family specs `<name>[:<p>[,<p>...]]`:
  path:N  cycle:N  complete:N  empty:N  star:N  doublestar:P,Q
  multipartite:N1,N2,...  familyB:N  deltasharp:N  K0  familyK:K

The results cache is a JSON-lines file at $ICPART_CACHE, by default
<user cache dir>/icpart/records.jsonl.

Exit codes: 0 success or valid, 1 invalid partition or counterexample,
2 usage, parse or bound error.";

#[derive(Parser)]
#[command(name = "icpart", version, about = "Independent coalition partitions of small graphs", after_help = GRAMMAR)]
struct Cli {
    /// Cache file (overrides $ICPART_CACHE).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct BoundArgs {
    /// Largest order for which IC(G) is computed.
    #[arg(long, default_value_t = Bounds::default().ic, value_name = "N")]
    skip_ic_above: usize,
    /// Largest order for which C(G) is computed.
    #[arg(long, default_value_t = Bounds::default().coalition, value_name = "N")]
    skip_coalition_above: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            ic: self.skip_ic_above,
            coalition: self.skip_coalition_above,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the full record of one graph as JSON.
    Compute {
        /// graph6 string or family spec.
        input: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Check a partition, printing a verdict per class.
    Verify {
        /// graph6 string or family spec.
        graph: String,
        /// Classes as `0,2;1;3` or `{0,2} {1} {3}`.
        partition: String,
    },
    /// Compute records for a stream of graph6 lines.
    Scan {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Worker threads; 1 runs sequentially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Replay the structural results over enumerated graphs.
    Theorems {
        /// Check ids, or `all`.
        #[arg(default_value = "all")]
        ids: Vec<String>,
        /// Override the order bound of every selected check.
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
        /// Worker threads; 1 runs sequentially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// List the ids with their default scopes and exit.
        #[arg(long)]
        list: bool,
    },
    /// Inspect or clear the results cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache file location and entry count.
    Path,
    /// Delete the cache file.
    Clear,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cache_path = cli.cache.clone().unwrap_or_else(cache::default_path);
    let open_cache = || -> Result<Option<Cache>> {
        if cli.no_cache {
            Ok(None)
        } else {
            Cache::open(&cache_path).map(Some)
        }
    };
    match cli.command {
        Command::Compute {
            ref input,
            ref bounds,
        } => {
            let g = parse_graph_input(input)?;
            let bounds = bounds.bounds();
            if g.order() > bounds.ic {
                bail!(
                    "solver bound exceeded: order {} is above {} (raise --skip-ic-above to force)",
                    g.order(),
                    bounds.ic
                );
            }
            let mut cache = open_cache()?;
            let record = lookup_or_compute(&mut cache, &g, bounds)?;
            println!("{}", serde_json::to_string_pretty(&record)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            ref graph,
            ref partition,
        } => {
            let g = parse_graph_input(graph)?;
            let p = Partition::parse(g.order(), partition)
                .with_context(|| format!("partition {partition:?}"))?;
            let report = verify_ic_partition(&g, &p)?;
            let mut out = io::stdout().lock();
            for (i, (class, verdict)) in p.classes().iter().zip(&report.verdicts).enumerate() {
                let text = match verdict {
                    ClassVerdict::SingletonDominating => "singleton dominating".to_string(),
                    ClassVerdict::HasPartners(js) => format!(
                        "partners {}",
                        js.iter()
                            .map(|j| j.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    ClassVerdict::Violation(reason) => format!("violation {reason}"),
                };
                writeln!(out, "class {i} {class}: {text}")?;
            }
            writeln!(out, "{}", if report.valid { "valid" } else { "invalid" })?;
            Ok(if report.valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Scan {
            ref input,
            format,
            ref bounds,
            jobs,
        } => {
            let reader: Box<dyn BufRead> = match input {
                Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(
                    File::open(p).with_context(|| format!("opening {}", p.display()))?,
                )),
                _ => Box::new(io::stdin().lock()),
            };
            let mut cache = open_cache()?;
            let out = io::stdout().lock();
            scan(reader, out, format, bounds.bounds(), jobs, &mut cache)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Theorems {
            ref ids,
            max_order,
            jobs,
            list,
        } => {
            if list {
                for &id in TheoremId::ALL {
                    println!("{id}: {}", id.default_scope());
                }
                return Ok(ExitCode::SUCCESS);
            }
            let selected = select_theorems(ids)?;
            let (mode, pool) = parallelism(jobs)?;
            let mut all_pass = true;
            for id in selected {
                let scope = max_order.map_or(id.default_scope(), |m| id.scope_with_order(m));
                let check = pool.install(|| run_check(id, scope, mode));
                all_pass &= check.passed();
                println!("{check}");
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Cache { action } => {
            let mut cache = Cache::open(&cache_path)?;
            match action {
                CacheAction::Path => {
                    println!("{} ({} entries)", cache.path().display(), cache.len());
                    if cli.cache.is_none() && std::env::var_os(CACHE_ENV).is_none() {
                        println!("set {CACHE_ENV} to move it");
                    }
                }
                CacheAction::Clear => {
                    cache.clear()?;
                    println!("cleared {}", cache.path().display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// A family spec when the text names one, otherwise a graph6 string.
fn parse_graph_input(text: &str) -> Result<Graph> {
    let text = text.trim();
    match text.parse::<FamilySpec>() {
        Ok(spec) => return Ok(spec.generate()?),
        Err(e) if text.contains(':') => {
            return Err(anyhow!(e).context(format!("family spec {text:?}")))
        }
        Err(_) => {}
    }
    parse_graph6(text).map_err(|e| graph6_diagnostic(text, 1, &e))
}

fn graph6_diagnostic(text: &str, line: usize, e: &Graph6Error) -> anyhow::Error {
    match e {
        Graph6Error::InvalidByte { position, .. } => {
            anyhow!("line {line}, character {}: {e} in {text:?}", position + 1)
        }
        _ => anyhow!("line {line}: {e} in {text:?}"),
    }
}

fn select_theorems(ids: &[String]) -> Result<Vec<TheoremId>> {
    if ids.iter().any(|s| s == "all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    ids.iter()
        .map(|s| s.parse::<TheoremId>().map_err(anyhow::Error::from))
        .collect()
}

fn parallelism(jobs: usize) -> Result<(Parallelism, rayon::ThreadPool)> {
    let mode = if jobs == 1 {
        Parallelism::Sequential
    } else {
        Parallelism::Parallel
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("starting worker threads")?;
    Ok((mode, pool))
}

fn lookup_or_compute(cache: &mut Option<Cache>, g: &Graph, bounds: Bounds) -> Result<ScanRecord> {
    let key = encode_graph6(g);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(hit.clone().within(bounds));
    }
    let record = ScanRecord::compute(g, bounds);
    if let Some(c) = cache {
        c.put_all([&record])?;
    }
    Ok(record)
}

/// One input line: its number, its text, and the decoded record or error.
type Row = (usize, String, Result<ScanRecord, String>);

fn scan<W: Write>(
    reader: impl BufRead,
    out: W,
    format: Format,
    bounds: Bounds,
    jobs: usize,
    cache: &mut Option<Cache>,
) -> Result<()> {
    let lines: Vec<(usize, Result<String, Graph6Error>)> = read_stream_raw(reader).collect();
    let (mode, pool) = parallelism(jobs)?;
    let cached = cache.as_ref();
    let rows: Vec<Row> = pool.install(|| {
        par::map(&lines, mode, |(no, line)| {
            let text = line.clone().unwrap_or_default();
            let record = match line {
                Err(e) => Err(e.to_string()),
                Ok(l) => match parse_graph6(l) {
                    Err(e) => Err(graph6_diagnostic(l, *no, &e).to_string()),
                    Ok(g) => Ok(match cached.and_then(|c| c.get(l)) {
                        Some(hit) => hit.clone().within(bounds),
                        None => ScanRecord::compute(&g, bounds),
                    }),
                },
            };
            (*no, text, record)
        })
    });
    if let Some(c) = cache {
        c.put_all(rows.iter().filter_map(|(_, _, r)| r.as_ref().ok()))?;
    }
    let mut out = BufWriter::new(out);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            let mut header: Vec<&str> = CSV_HEADER.to_vec();
            header.push("error");
            w.write_record(&header)?;
            for (_, text, record) in &rows {
                match record {
                    Ok(r) => {
                        let mut fields = r.csv_fields().to_vec();
                        fields.push(String::new());
                        w.write_record(&fields)?;
                    }
                    Err(e) => {
                        let mut fields = vec![String::new(); CSV_HEADER.len() + 1];
                        fields[0] = text.clone();
                        fields[CSV_HEADER.len()] = e.clone();
                        w.write_record(&fields)?;
                    }
                }
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for (no, text, record) in &rows {
                let line = match record {
                    Ok(r) => serde_json::to_string(r)?,
                    Err(e) => {
                        serde_json::json!({ "graph6": text, "line": no, "error": e }).to_string()
                    }
                };
                writeln!(out, "{line}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
