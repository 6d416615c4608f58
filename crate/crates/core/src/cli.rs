//! `domdraw` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 input format error,
//! 3 verification failure. Diagnostics go to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::channels::{min_channel_decomposition, width};
use crate::ctc::build_ctc;
use crate::draw::{draw_kd, make_distinct, verify_dominance, DominanceDrawing};
use crate::error::Error;
use crate::graph::{
    max_antichain_bruteforce_with_limit, parse_edge_list, to_st_graph, Dag, StGraph,
};
use crate::modular::{
    dimensional_neck, find_congruence_partition, module_induced_graphs, nd_draw, quotient_graph,
    validate_partition, CongruencePartition, NeckProfile, PartitionJson,
};
use crate::query::{build_index, format_answers, parse_pairs};
use crate::svg::{render_svg_with_cell, DEFAULT_CELL};

const EXIT_USAGE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "domdraw",
    version,
    about = "Dominance drawings and reachability indexes for DAGs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the width (size of a minimum channel decomposition).
    Width {
        input: PathBuf,
        /// Cross-check against the brute-force antichain oracle when the
        /// graph has at most N vertices.
        #[arg(long, value_name = "N")]
        oracle_limit: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit a minimum channel decomposition as JSON.
    Channels {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the compressed transitive closure as JSON.
    Ctc {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute a dominance drawing and emit it as JSON.
    Draw {
        input: PathBuf,
        #[command(flatten)]
        draw: DrawArgs,
        /// Check the drawing against the reachability oracle first.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit a congruence partition and its dimensional neck.
    Modules {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        partition: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Answer reachability queries from a drawing (or an edge list).
    Query {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        pairs: PathBuf,
        #[command(flatten)]
        draw: DrawArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a drawing against the reachability oracle; exit 3 on violations.
    Verify {
        input: PathBuf,
        /// Drawing JSON to check instead of computing one.
        #[arg(long, value_name = "FILE")]
        drawing: Option<PathBuf>,
        #[command(flatten)]
        draw: DrawArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Render a 2-dimensional drawing as SVG.
    Render {
        input: PathBuf,
        /// Edge list whose edges are drawn when the input is a drawing.
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CELL)]
        cell: u32,
        #[command(flatten)]
        draw: DrawArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Kd,
    Nd,
}

#[derive(Debug, Args)]
struct DrawArgs {
    #[arg(long, value_enum, default_value_t = Method::Kd)]
    method: Method,
    /// Re-rank every dimension into distinct coordinates.
    #[arg(long)]
    distinct: bool,
    /// Partition JSON for `--method nd`; found automatically if absent.
    #[arg(long, value_name = "FILE")]
    partition: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Keep virtual source/sink vertices in the output.
    #[arg(long)]
    include_virtual: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotTwoDimensional(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_graph(path: &Path) -> CliResult<Dag> {
    let text = read(path)?;
    parse_edge_list(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(out: &OutputArgs, stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    let result = match &out.output {
        Some(path) => fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    result.map_err(|e| Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

/// Reads a partition file; virtual vertices the file does not mention are
/// added as singleton blocks.
fn load_partition(st: &StGraph, path: &Path) -> CliResult<CongruencePartition> {
    let text = read(path)?;
    let mut file: PartitionJson = serde_json::from_str(&text).map_err(Error::from)?;
    for v in 0..st.n() {
        let id = st.dag().id(v);
        if st.is_virtual(v) && !file.blocks.iter().flatten().any(|b| b == id) {
            file.blocks.push(vec![id.to_owned()]);
        }
    }
    Ok(CongruencePartition::from_ids(st, &file.blocks)?)
}

fn partition_for(st: &StGraph, path: Option<&Path>) -> CliResult<CongruencePartition> {
    match path {
        Some(p) => load_partition(st, p),
        None => Ok(find_congruence_partition(st)),
    }
}

/// Drawing over the st-augmented graph, virtual vertices included.
fn compute_drawing(st: &StGraph, args: &DrawArgs) -> CliResult<DominanceDrawing> {
    let drawing = match args.method {
        Method::Kd => draw_kd(st),
        Method::Nd => {
            let p = partition_for(st, args.partition.as_deref())?;
            nd_draw(st, &p)?
        }
    };
    if args.distinct {
        Ok(make_distinct(&drawing, &st.dag().topological_ids())?)
    } else {
        Ok(drawing)
    }
}

fn user_facing(drawing: DominanceDrawing, st: &StGraph, include_virtual: bool) -> DominanceDrawing {
    if include_virtual {
        drawing
    } else {
        drawing.without_virtual(st)
    }
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// A drawing JSON file is used as-is; an edge list is drawn per `args`.
/// Returns the drawing and, for edge lists, the parsed graph.
fn drawing_from_input(
    path: &Path,
    args: &DrawArgs,
    include_virtual: bool,
) -> CliResult<(DominanceDrawing, Option<Dag>)> {
    let text = read(path)?;
    if looks_like_json(&text) {
        let drawing = serde_json::from_str(&text).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        })?;
        return Ok((drawing, None));
    }
    let g = parse_edge_list(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    let st = to_st_graph(g.clone());
    let drawing = compute_drawing(&st, args)?;
    Ok((user_facing(drawing, &st, include_virtual), Some(g)))
}

#[derive(Serialize)]
struct ModulesJson {
    blocks: Vec<Vec<String>>,
    neck: NeckProfile,
    w_g: usize,
}

fn execute(command: Command, stdout: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Width {
            input,
            oracle_limit,
            out,
        } => {
            let g = load_graph(&input)?;
            let st = to_st_graph(g.clone());
            let w = width(&st);
            if let Some(limit) = oracle_limit.filter(|&l| g.n() <= l) {
                let brute = max_antichain_bruteforce_with_limit(&g, limit)?.len().max(1);
                if brute != w {
                    return Err(Failure {
                        code: EXIT_VERIFY,
                        message: format!("width {w} disagrees with brute-force antichain {brute}"),
                    });
                }
            }
            emit(&out, stdout, &format!("{w}\n"))
        }
        Command::Channels { input, out } => {
            let st = to_st_graph(load_graph(&input)?);
            let d = min_channel_decomposition(&st);
            emit(&out, stdout, &json(&d.to_json(&st, out.include_virtual)))
        }
        Command::Ctc { input, out } => {
            let st = to_st_graph(load_graph(&input)?);
            let d = min_channel_decomposition(&st);
            let ctc = build_ctc(&st, &d)?;
            emit(&out, stdout, &json(&ctc.to_json(out.include_virtual)))
        }
        Command::Draw {
            input,
            draw,
            verify,
            out,
        } => {
            let g = load_graph(&input)?;
            let st = to_st_graph(g.clone());
            let drawing = user_facing(compute_drawing(&st, &draw)?, &st, out.include_virtual);
            if verify {
                let report = verify_dominance(&g, &drawing)?;
                if let Some(v) = report.violations.first() {
                    return Err(Failure {
                        code: EXIT_VERIFY,
                        message: format!("{} violations, first: {v}", report.violations.len()),
                    });
                }
            }
            emit(&out, stdout, &json(&drawing))
        }
        Command::Modules {
            input,
            partition,
            out,
        } => {
            let st = to_st_graph(load_graph(&input)?);
            let p = partition_for(&st, partition.as_deref())?;
            let report = validate_partition(&st, &p)?;
            if let Some(v) = report.violations.first() {
                return Err(Failure {
                    code: EXIT_INPUT,
                    message: format!("not a congruence partition: {v}"),
                });
            }
            let quotient = quotient_graph(&st, &p)?;
            let members = module_induced_graphs(&st, &p)?;
            let summary = ModulesJson {
                blocks: p.to_json(&st, out.include_virtual).blocks,
                neck: dimensional_neck(&quotient, &members),
                w_g: width(&st),
            };
            emit(&out, stdout, &json(&summary))
        }
        Command::Query {
            input,
            pairs,
            draw,
            out,
        } => {
            let (drawing, _) = drawing_from_input(&input, &draw, out.include_virtual)?;
            let pairs = parse_pairs(&read(&pairs)?)?;
            let index = build_index(&drawing)?;
            let answers = index.batch_query(&pairs)?;
            emit(&out, stdout, &format_answers(&pairs, &answers))
        }
        Command::Verify {
            input,
            drawing,
            draw,
            out,
        } => {
            let g = load_graph(&input)?;
            let drawing = match drawing {
                Some(path) => serde_json::from_str(&read(&path)?).map_err(Error::from)?,
                None => {
                    let st = to_st_graph(g.clone());
                    user_facing(compute_drawing(&st, &draw)?, &st, out.include_virtual)
                }
            };
            let report = verify_dominance(&g, &drawing)?;
            if report.is_empty() {
                let line = format!(
                    "ok: {} vertices, k = {}, no violations\n",
                    g.n(),
                    drawing.k()
                );
                return emit(&out, stdout, &line);
            }
            let lines: String = report.violations.iter().map(|v| format!("{v}\n")).collect();
            emit(&out, stdout, &lines)?;
            Err(Failure {
                code: EXIT_VERIFY,
                message: format!("{} violations", report.violations.len()),
            })
        }
        Command::Render {
            input,
            graph,
            cell,
            draw,
            out,
        } => {
            let (drawing, parsed) = drawing_from_input(&input, &draw, out.include_virtual)?;
            let g = match (parsed, graph) {
                (Some(g), _) => g,
                (None, Some(path)) => load_graph(&path)?,
                (None, None) => Dag::builder().build().expect("empty graph"),
            };
            let svg = render_svg_with_cell(&drawing, &g, cell)?;
            emit(&out, stdout, &svg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("domdraw").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["draw", "x.txt", "--method", "zz"]).0, EXIT_USAGE);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("width"));
    }

    #[test]
    fn missing_file_is_input_error() {
        let (code, _, err) = run_args(&["width", "/nonexistent/graph.txt"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error:"));
    }
}
