//! `hic`: higher independence complex toolkit.
//!
//! Subcommands expose the library over edge-list graph files: exact reduced
//! homology of `Ind_r(G)`, the chordal homotopy-type engine, exact
//! domination numbers, support families, wedge-realizing synthesis, graph
//! generators, and the theorem verification suites.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hic_core::chordal::{chordal_homotopy_type, ChordalLimits};
use hic_core::complex::{build_ind_complex, BuildLimits};
use hic_core::domination::{
    distance_domination_number, set_domination_number, strong_domination_number, supports,
};
use hic_core::generate::{generate_graph, GeneratorSpec};
use hic_core::graph::Graph;
use hic_core::homology::{betti_mod_p, reduced_homology};
use hic_core::synthesis::{synthesize_chordal, WedgeSpec};
use hic_core::verify::{run_suite, SuiteConfig, SuiteName};

#[derive(Parser)]
#[command(name = "hic", version, about = "higher independence complexes of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact reduced integral homology of Ind_r(G) (or GF(p) ranks).
    Homology {
        /// Graph file in edge-list format.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// Compute GF(p) Betti numbers instead of integral homology.
        #[arg(long)]
        mod_p: Option<u64>,
        /// Face budget for complex construction.
        #[arg(long)]
        max_faces: Option<usize>,
    },
    /// Symbolic homotopy type of Ind_r(G) for chordal G.
    Chordal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// Write the decomposition trace as JSON to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exact domination numbers with witnesses.
    Domination {
        #[arg(long)]
        graph: PathBuf,
        /// Radius for distance/set domination; ignored by `strong`.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long)]
        kind: DominationKind,
    },
    /// All r-supports of a vertex, with hypothesis flags.
    Supports {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        r: usize,
    },
    /// Build a chordal graph realizing a prescribed wedge of spheres.
    Synthesize {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        /// Summands as `d1:k1,d2:k2,...`.
        #[arg(long)]
        summands: String,
        /// Output file for the edge list; a `.json` sidecar is written next
        /// to it with labels and the expected wedge.
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a named graph family.
    Generate {
        /// One of: path, cycle, wheel, complete, star_of_paths,
        /// erdos_renyi, random_chordal.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `12` or `5,2` or `9,0.3`.
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit code 0 iff it passed conclusively.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DominationKind {
    Distance,
    Set,
    Strong,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Homology {
            graph,
            r,
            mod_p,
            max_faces,
        } => {
            let g = load_graph(&graph)?;
            let mut limits = BuildLimits::default();
            if let Some(max_faces) = max_faces {
                limits.max_faces = max_faces;
            }
            let complex = build_ind_complex(&g, r as usize, &limits)?;
            let value = match mod_p {
                Some(p) => betti_mod_p(&complex, p)?.to_json(),
                None => reduced_homology(&complex).to_json(),
            };
            println!("{value}");
        }
        Command::Chordal { graph, r, trace } => {
            let g = load_graph(&graph)?;
            let (t, decomposition) =
                chordal_homotopy_type(&g, r as usize, &ChordalLimits::default())?;
            if let Some(path) = trace {
                let mut text = serde_json::to_string_pretty(&decomposition.to_json())?;
                text.push('\n');
                std::fs::write(&path, text)
                    .with_context(|| format!("writing trace to {}", path.display()))?;
            }
            println!("{}", t.to_json());
        }
        Command::Domination { graph, r, kind } => {
            let g = load_graph(&graph)?;
            let r = r as usize;
            let value = match kind {
                DominationKind::Distance => {
                    distance_domination_number(&g, r)?.to_json("gamma_r", Some(r))
                }
                DominationKind::Set => set_domination_number(&g, r)?.to_json("omega_r", Some(r)),
                DominationKind::Strong => strong_domination_number(&g)?.to_json("strong", None),
            };
            println!("{value}");
        }
        Command::Supports { graph, vertex, r } => {
            let g = load_graph(&graph)?;
            let family = supports(&g, vertex, r)?;
            println!("{}", family.to_json());
        }
        Command::Synthesize { r, summands, out } => {
            let summands = WedgeSpec::parse_summands(&summands)
                .map_err(|e| anyhow::anyhow!("bad --summands: {e}"))?;
            let spec = WedgeSpec::new(r as usize, summands)?;
            let result = synthesize_chordal(&spec)?;
            std::fs::write(&out, result.graph.serialize())
                .with_context(|| format!("writing graph to {}", out.display()))?;
            let sidecar = sidecar_path(&out);
            let mut text = serde_json::to_string_pretty(&result.sidecar_json())?;
            text.push('\n');
            std::fs::write(&sidecar, text)
                .with_context(|| format!("writing sidecar to {}", sidecar.display()))?;
            eprintln!(
                "wrote {} ({} vertices) and {}",
                out.display(),
                result.graph.n(),
                sidecar.display()
            );
        }
        Command::Generate {
            family,
            params,
            seed,
            out,
        } => {
            let spec = parse_generator(&family, &params, seed)?;
            let g = generate_graph(&spec)?;
            match out {
                Some(path) => std::fs::write(&path, g.serialize())
                    .with_context(|| format!("writing graph to {}", path.display()))?,
                None => print!("{}", g.serialize()),
            }
        }
        Command::Verify {
            suite,
            trials,
            max_n,
            r_max,
            seed,
            json,
        } => {
            let suite: SuiteName = suite.parse().map_err(|e: String| anyhow::anyhow!(e))?;
            let config = SuiteConfig::new(suite, trials, max_n, r_max, seed);
            let report = run_suite(&config);
            println!("{}", report.summary_line());
            for cex in &report.counterexamples {
                println!(
                    "counterexample trial={} r={:?} details={}",
                    cex.trial, cex.r, cex.details
                );
                print!("{}", cex.graph);
            }
            if let Some(path) = json {
                std::fs::write(&path, report.to_json_string())
                    .with_context(|| format!("writing report to {}", path.display()))?;
            }
            if !report.success() {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading graph from {}", path.display()))?;
    Ok(Graph::parse(&text)?)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".json");
    PathBuf::from(name)
}

fn parse_generator(family: &str, params: &str, seed: u64) -> Result<GeneratorSpec> {
    let parts: Vec<&str> = params.split(',').map(str::trim).collect();
    let int = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .with_context(|| format!("missing parameter {i}"))?
            .parse::<usize>()
            .with_context(|| format!("parameter {i} must be an integer, got `{}`", parts[i]))
    };
    let spec = match family {
        "path" => GeneratorSpec::Path { n: int(0)? },
        "cycle" => GeneratorSpec::Cycle { n: int(0)? },
        "wheel" => GeneratorSpec::Wheel { n: int(0)? },
        "complete" => GeneratorSpec::Complete { n: int(0)? },
        "star_of_paths" => GeneratorSpec::StarOfPaths {
            arms: int(0)?,
            arm_length: int(1)?,
        },
        "erdos_renyi" => {
            let p: f64 = parts
                .get(1)
                .context("erdos_renyi needs `n,p`")?
                .parse()
                .context("p must be a float")?;
            GeneratorSpec::ErdosRenyi { n: int(0)?, p, seed }
        }
        "random_chordal" => GeneratorSpec::RandomChordal { n: int(0)?, seed },
        other => bail!(
            "unknown family `{other}`; known: path, cycle, wheel, complete, \
             star_of_paths, erdos_renyi, random_chordal"
        ),
    };
    Ok(spec)
}
