//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so it can be driven from tests.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::address::{grid_address, hypercube_address};
use crate::embed::{embed_tree, lattice_dimension, Embedding};
use crate::tree::{parse_edge_list, Tree};
use crate::verify::{
    brute_force_min_dimension, contract_to_star, verify_isometric_parallel, verify_sampled,
    VerifyError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code plus everything the command wrote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        CommandOutcome {
            code: EXIT_FAILED,
            stdout,
            stderr,
        }
    }

    fn usage(stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandOutcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "treedim",
    version,
    about = "Minimum-dimension lattice embeddings of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// JSON output (default)
    #[arg(long)]
    json: bool,
    /// Tab-separated output
    #[arg(long)]
    tsv: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Scheme {
    Hypercube,
    Grid,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Embed a tree into Z^d with d = ceil(leaves / 2), normalized to start at 0
    Embed {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Check that an embedding preserves all tree distances
    Verify {
        file: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        /// Check all edges plus N random pairs instead of every pair
        #[arg(long, value_name = "N")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for full verification
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
    },
    /// Print a hypercube or grid address table
    Address {
        file: PathBuf,
        #[arg(long, value_enum)]
        scheme: Scheme,
        /// Root for hypercube labels (defaults to the smallest vertex id)
        #[arg(long)]
        root: Option<u64>,
        #[command(flatten)]
        format: Format,
    },
    /// Print leaf count, lattice dimension and isometric dimension
    Dims { file: PathBuf },
    /// Contract an embedding to a star and print the lower-bound certificate
    Contract {
        file: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Exhaustive minimum-dimension search (at most 10 vertices)
    Oracle {
        file: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Print a uniformly random labeled tree as an edge list
    Random {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        vertices: u64,
        #[arg(long)]
        seed: u64,
    },
}

/// Runs the CLI on `args`, where `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                CommandOutcome::usage(text)
            } else {
                CommandOutcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => CommandOutcome::usage(format!("error: {message}")),
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_tree(path: &Path) -> Result<Tree, String> {
    parse_edge_list(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_embedding(path: &Path) -> Result<Embedding, String> {
    Embedding::from_json(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Serialize)]
struct Dims {
    leaves: usize,
    lattice_dim: usize,
    isometric_dim: usize,
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn dispatch(command: Command) -> Result<CommandOutcome, String> {
    match command {
        Command::Embed { file, format } => {
            let tree = read_tree(&file)?;
            let embedding = embed_tree(&tree).map_err(|e| e.to_string())?.normalize();
            Ok(CommandOutcome::ok(if format.tsv {
                embedding.to_tsv()
            } else {
                line(embedding.to_json())
            }))
        }
        Command::Verify {
            file,
            embedding,
            sample,
            seed,
            threads,
        } => {
            let tree = read_tree(&file)?;
            let embedding = read_embedding(&embedding)?;
            let report = match sample {
                Some(n) => verify_sampled(&tree, &embedding, n, seed),
                None => verify_isometric_parallel(&tree, &embedding, threads as usize),
            }
            .map_err(|e| e.to_string())?;
            let out = line(report.to_json());
            Ok(if report.passed {
                CommandOutcome::ok(out)
            } else {
                let v = report.first_violation.unwrap();
                CommandOutcome::failed(
                    out,
                    format!(
                        "not isometric: d({}, {}) = {} but l1 = {}\n",
                        v.u, v.v, v.tree_distance, v.l1_distance
                    ),
                )
            })
        }
        Command::Address {
            file,
            scheme,
            root,
            format,
        } => {
            let tree = read_tree(&file)?;
            let table = match scheme {
                Scheme::Hypercube => {
                    let root = root.unwrap_or_else(|| tree.vertices().next().unwrap());
                    hypercube_address(&tree, root)
                }
                Scheme::Grid => {
                    if root.is_some() {
                        return Err("--root only applies to --scheme hypercube".into());
                    }
                    let embedding = embed_tree(&tree).map_err(|e| e.to_string())?.normalize();
                    grid_address(&embedding)
                }
            }
            .map_err(|e| e.to_string())?;
            Ok(CommandOutcome::ok(if format.tsv {
                table.to_tsv()
            } else {
                line(table.to_json())
            }))
        }
        Command::Dims { file } => {
            let tree = read_tree(&file)?;
            let doc = Dims {
                leaves: tree.leaf_count(),
                lattice_dim: lattice_dimension(&tree),
                isometric_dim: tree.edge_count(),
            };
            Ok(CommandOutcome::ok(line(
                serde_json::to_string(&doc).unwrap(),
            )))
        }
        Command::Contract { file, embedding } => {
            let tree = read_tree(&file)?;
            let embedding = read_embedding(&embedding)?;
            match contract_to_star(&tree, &embedding) {
                Ok(cert) => Ok(CommandOutcome::ok(line(cert.to_json()))),
                Err(
                    e @ (VerifyError::Tree(_)
                    | VerifyError::NoStarCenter(_)
                    | VerifyError::VertexSetMismatch(_)
                    | VerifyError::Embed(_)),
                ) => Err(e.to_string()),
                Err(e) => Ok(CommandOutcome::failed(
                    line(json!({ "passed": false, "error": e.to_string() }).to_string()),
                    format!("contraction failed: {e}\n"),
                )),
            }
        }
        Command::Oracle { file, max_dim } => {
            let tree = read_tree(&file)?;
            let max_dim = max_dim.unwrap_or(tree.edge_count().max(1));
            match brute_force_min_dimension(&tree, max_dim) {
                Ok(d) => Ok(CommandOutcome::ok(line(
                    json!({ "min_dimension": d }).to_string(),
                ))),
                Err(VerifyError::NoEmbeddingWithin { max_dim }) => Ok(CommandOutcome::failed(
                    line(json!({ "min_dimension": null, "max_dim": max_dim }).to_string()),
                    format!("no isometric embedding in dimension {max_dim} or lower\n"),
                )),
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Random { vertices, seed } => {
            let tree = Tree::random(vertices as usize, seed).map_err(|e| e.to_string())?;
            Ok(CommandOutcome::ok(tree.to_edge_list()))
        }
    }
}
