//! `hgo`: canonical forms, catalogs and orbit counts from the command line.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hgo_core::hostfile::read_host_graph;
use hgo_core::store::write_catalog;
use hgo_core::{
    count_graphlets, count_orbits, CatalogStore, Canonizer, ColoredGraph, Error, Generator, Limits,
};

#[derive(Parser)]
#[command(name = "hgo", version, about = "Heterogeneous graphlet orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical key of a graph, or of an anchored orbit with --ref.
    Canonical {
        file: PathBuf,
        /// Reference vertex (0-based).
        #[arg(long = "ref")]
        reference: Option<usize>,
        /// Treat an undirected file as a symmetric digraph.
        #[arg(long)]
        directed: bool,
    },
    /// Print the catalog of all graphs (or orbits) of a type.
    Generate {
        #[arg(short = 'n')]
        order: usize,
        #[arg(long)]
        vcolors: u8,
        #[arg(long)]
        ecolors: u8,
        #[arg(long)]
        orbits: bool,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        directed: bool,
        /// Write the catalog here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Count orbit (or graphlet) occurrences in a host graph.
    Count {
        file: PathBuf,
        /// Reference vertex (0-based); required unless --graphlets.
        #[arg(long = "ref", required_unless_present = "graphlets", conflicts_with = "graphlets")]
        reference: Option<usize>,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        vcolors: u8,
        #[arg(long)]
        ecolors: u8,
        #[arg(long)]
        connected: bool,
        /// Treat an undirected file as a symmetric digraph.
        #[arg(long)]
        directed: bool,
        /// Count whole graphlets instead of orbits at --ref.
        #[arg(long)]
        graphlets: bool,
        /// Print the full vector on one line.
        #[arg(long, conflicts_with = "sparse")]
        dense: bool,
        /// Print `index:count` per nonzero entry and a total (default).
        #[arg(long)]
        sparse: bool,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args)]
struct RunOpts {
    /// Catalog cache directory (default: $HGO_CACHE_DIR, else the user cache dir).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the catalog cache.
    #[arg(long, conflicts_with = "cache_dir")]
    no_cache: bool,
    /// Report elapsed wall time on stderr.
    #[arg(long)]
    time: bool,
    /// Largest catalog order allowed.
    #[arg(long, default_value_t = Limits::default().max_order)]
    max_order: usize,
    /// Largest catalog size allowed.
    #[arg(long, default_value_t = Limits::default().max_catalog)]
    max_catalog: usize,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

impl RunOpts {
    fn generator(&self) -> Result<Generator, Error> {
        if let Some(jobs) = self.jobs {
            // only fails if a pool already exists, which cannot happen here
            let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        }
        let gen = Generator::new().with_limits(Limits {
            max_order: self.max_order,
            max_catalog: self.max_catalog,
        });
        if self.no_cache {
            return Ok(gen);
        }
        let dir = CatalogStore::resolve_dir(self.cache_dir.as_deref());
        Ok(gen.with_store(CatalogStore::create(dir)?))
    }
}

/// Exit status and greppable tag for an error.
fn classify(err: &Error) -> (u8, &'static str) {
    match err {
        Error::Parse { .. } => (2, "parse"),
        Error::Io(_) => (2, "io"),
        Error::ColorOutOfBounds { .. } => (3, "palette"),
        Error::VertexOutOfRange { .. } => (3, "vertex-range"),
        Error::KExceedsOrder { .. } => (3, "k-exceeds-order"),
        Error::OrderTooLarge { .. } | Error::TypeTooLarge(_) => (4, "guard"),
        Error::CorruptCatalog { .. } => (5, "cache-corrupt"),
        Error::CacheDirMissing(_) => (5, "cache-dir"),
        _ => (3, "invalid"),
    }
}

fn load(file: &Path, directed: bool) -> Result<ColoredGraph, Error> {
    let g = read_host_graph(file)?;
    Ok(if directed { g.to_directed() } else { g })
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Canonical {
            file,
            reference,
            directed,
        } => {
            let g = load(&file, directed)?;
            let canon = Canonizer::default();
            let key = match reference {
                Some(r) => canon.orbit(&g, r)?,
                None => canon.graph(&g)?,
            };
            writeln!(out, "{key}")?;
        }
        Command::Generate {
            order,
            vcolors,
            ecolors,
            orbits,
            connected,
            directed,
            out: target,
            run,
        } => {
            let gen = run.generator()?;
            let t = Instant::now();
            let catalog = if orbits {
                gen.orbits(order, vcolors, ecolors, directed, connected)?
            } else {
                gen.graphs(order, vcolors, ecolors, directed, connected)?
            };
            if run.time {
                eprintln!("time: {:.3}s", t.elapsed().as_secs_f64());
            }
            match target {
                Some(path) => write_catalog(&catalog, BufWriter::new(File::create(path)?))?,
                None => write_catalog(&catalog, &mut out)?,
            }
        }
        Command::Count {
            file,
            reference,
            k,
            vcolors,
            ecolors,
            connected,
            directed,
            graphlets,
            dense,
            sparse: _,
            run,
        } => {
            let g = load(&file, directed)?;
            let gen = run.generator()?;
            let t = Instant::now();
            let counts = match reference {
                Some(r) if !graphlets => count_orbits(&gen, &g, r, k, vcolors, ecolors, connected)?,
                _ => count_graphlets(&gen, &g, k, vcolors, ecolors, connected)?,
            };
            if run.time {
                eprintln!("time: {:.3}s", t.elapsed().as_secs_f64());
            }
            if dense {
                let line: Vec<String> = counts.counts().iter().map(u64::to_string).collect();
                writeln!(out, "{}", line.join(","))?;
            } else {
                for (i, c) in counts.nonzero() {
                    writeln!(out, "{i}:{c}")?;
                }
                writeln!(out, "total={}", counts.total())?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (code, tag) = classify(&err);
            eprintln!("error[{tag}]: {err}");
            ExitCode::from(code)
        }
    }
}
