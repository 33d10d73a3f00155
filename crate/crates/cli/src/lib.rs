//! Command-line front end.
//!
//! [`run`] takes the argument vector and a stdin reader and returns the exit
//! code with everything that would be written to stdout and stderr, so the
//! binary is a thin wrapper and tests can drive every subcommand in-process.
//!
//! Exit codes: 0 on success, 1 when the input is rejected by a parser or an
//! algorithm (the message names the error kind), 2 on usage errors.

use std::fmt::Display;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use algepath_core::io::{
    biguint_json, distance_json, parse_graph_with_limit, parse_transition_table, path_json,
    path_map_json, render, GraphDocument, GraphFormat, JsonWeight, Labeled, LetterGrid, OutputMode,
    Render, WeightedArcs, DEFAULT_MAX_VERTICES,
};
use algepath_core::{
    count_paths, enumerate_m_subwords, enumerate_paths_with_limits, floyd_warshall,
    letter_power_closure, longest_paths_dag, m_complexity, modified_adjacency, reconstruct_path,
    transitive_closure, CountError, EnumerateError, EnumerationLimits, GapSet, PathError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const DEFAULT_MAX_INPUT_BYTES: u64 = 64 * 1024 * 1024;

#[derive(Parser, Debug)]
#[command(
    name = "algepath",
    version,
    about = "Path problems on small dense digraphs, solved with one Warshall kernel"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,

    /// Refuse inputs larger than this many bytes.
    #[arg(long, default_value_t = DEFAULT_MAX_INPUT_BYTES, global = true)]
    max_input_bytes: u64,

    /// Refuse graphs and automata with more vertices or states than this.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES, global = true)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Json,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,

    /// Input format. Defaults to json for `.json` files, edge-list otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transitive closure of the arc relation.
    Closure(GraphInput),
    /// All-pairs shortest distances; unweighted arcs count as 1.
    Shortest {
        #[command(flatten)]
        graph: GraphInput,
        /// Also print one shortest path; repeatable.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"], action = clap::ArgAction::Append)]
        path: Vec<String>,
    },
    /// All-pairs longest distances in an acyclic digraph.
    Longest(GraphInput),
    /// Number of paths between every pair of an acyclic digraph.
    Count(GraphInput),
    /// Every simple path between every pair.
    Enumerate {
        #[command(flatten)]
        graph: GraphInput,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Largest number of paths allowed in one cell.
        #[arg(long, default_value_t = 100_000)]
        max_paths: usize,
    },
    /// Scattered-subword complexity of a rainbow word.
    Subwords {
        /// Word length.
        #[arg(long)]
        n: Option<usize>,
        /// Allowed gaps, comma separated (may be empty).
        #[arg(long, default_value = "", value_parser = parse_gaps)]
        gaps: GapList,
        /// The rainbow word itself; defaults to the first n letters a, b, c, ...
        #[arg(long)]
        word: Option<String>,
        /// List the subwords.
        #[arg(long)]
        list: bool,
        /// Include single letters in the list.
        #[arg(long)]
        with_singletons: bool,
    },
    /// Letters whose powers lead from one state to another.
    Automata {
        /// JSON transition table, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Clone, Debug)]
struct GapList(Vec<usize>);

fn parse_gaps(s: &str) -> Result<GapList, String> {
    if s.trim().is_empty() {
        return Ok(GapList(Vec::new()));
    }
    s.split(',')
        .map(|g| {
            g.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid gap {g:?}"))
        })
        .collect::<Result<_, _>>()
        .map(GapList)
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    pub fn stdout_str(&self) -> &str {
        std::str::from_utf8(&self.stdout).expect("output is UTF-8")
    }

    pub fn stderr_str(&self) -> &str {
        std::str::from_utf8(&self.stderr).expect("output is UTF-8")
    }
}

/// A rejected input: error kind plus message.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
    usage: bool,
}

impl Failure {
    fn new(kind: &'static str, message: impl Display) -> Self {
        Self {
            kind,
            message: message.to_string(),
            usage: false,
        }
    }

    fn usage(message: impl Display) -> Self {
        Self {
            kind: "UsageError",
            message: message.to_string(),
            usage: true,
        }
    }
}

macro_rules! impl_failure_from {
    ($($err:ty),* $(,)?) => {
        $(impl From<$err> for Failure {
            fn from(e: $err) -> Self {
                Failure::new(e.kind(), &e)
            }
        })*
    };
}

impl_failure_from!(
    algepath_core::io::GraphError,
    algepath_core::io::TableError,
    algepath_core::SubwordError,
);

// The core errors below point at vertices by index; report names instead.

fn path_failure(e: PathError, names: &[String]) -> Failure {
    let message = match &e {
        PathError::NegativeCycle { vertex } => {
            format!("negative cycle through vertex {}", names[*vertex])
        }
        PathError::CyclicInput { vertex } => format!(
            "directed cycle through vertex {}; longest paths are undefined",
            names[*vertex]
        ),
        PathError::InvalidDiagonal { .. } => e.to_string(),
    };
    Failure::new(e.kind(), message)
}

fn count_failure(e: CountError, names: &[String]) -> Failure {
    let CountError::CyclicInput { vertex } = &e;
    Failure::new(
        e.kind(),
        format!(
            "directed cycle through vertex {}; path counts are unbounded",
            names[*vertex]
        ),
    )
}

fn enumerate_failure(e: EnumerateError, names: &[String]) -> Failure {
    let message = match &e {
        EnumerateError::SelfLoop { vertex } => format!(
            "self-loop at vertex {}; simple-path enumeration needs a loop-free digraph",
            names[*vertex]
        ),
        EnumerateError::TooManyVertices { n, max } => {
            format!("{n} vertices exceeds the limit of {max}; raise it with --max-n")
        }
        EnumerateError::TooManyPaths {
            from,
            to,
            count,
            max,
        } => format!(
            "cell {} -> {} grew to {count} paths, over the limit of {max}; raise it with --max-paths",
            names[*from], names[*to]
        ),
    };
    Failure::new(e.kind(), message)
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T, R>(args: I, stdin: R) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    R: Read,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string().into_bytes();
            let (stdout, stderr) = if code == 0 {
                (text, Vec::new())
            } else {
                (Vec::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let mode = match cli.output {
        Output::Text => OutputMode::Text,
        Output::Json => OutputMode::Json,
    };
    let mut input = InputSource {
        stdin: Some(stdin),
        limit: cli.max_input_bytes,
        max_vertices: cli.max_vertices,
    };
    match execute(&cli.command, mode, &mut input) {
        Ok(out) => Outcome {
            code: 0,
            stdout: out.into_bytes(),
            stderr: Vec::new(),
        },
        Err(f) => {
            let stderr = match mode {
                OutputMode::Json => {
                    let mut s =
                        json!({"error": {"kind": f.kind, "message": f.message}}).to_string();
                    s.push('\n');
                    s
                }
                OutputMode::Text => format!("error[{}]: {}\n", f.kind, f.message),
            };
            Outcome {
                code: if f.usage { 2 } else { 1 },
                stdout: Vec::new(),
                stderr: stderr.into_bytes(),
            }
        }
    }
}

struct InputSource<R> {
    stdin: Option<R>,
    limit: u64,
    max_vertices: usize,
}

impl<R: Read> InputSource<R> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let mut bytes = Vec::new();
        let limit = self.limit;
        let read = if path == "-" {
            let stdin = self
                .stdin
                .take()
                .ok_or_else(|| Failure::usage("stdin can only be read once"))?;
            stdin.take(limit + 1).read_to_end(&mut bytes)
        } else {
            File::open(path)
                .and_then(|f| f.take(limit + 1).read_to_end(&mut bytes))
                .map_err(|e| Failure::new("IoError", format!("{path}: {e}")))?;
            Ok(bytes.len())
        };
        read.map_err(|e| Failure::new("IoError", format!("{path}: {e}")))?;
        if bytes.len() as u64 > limit {
            return Err(Failure::new(
                "InputTooLarge",
                format!("{path}: input exceeds {limit} bytes"),
            ));
        }
        String::from_utf8(bytes)
            .map_err(|e| Failure::new("ParseError", format!("{path}: input is not UTF-8: {e}")))
    }

    fn graph(&mut self, g: &GraphInput) -> Result<GraphDocument, Failure> {
        let text = self.read(&g.input)?;
        let format = match g.format {
            Some(Format::Json) => GraphFormat::Json,
            Some(Format::EdgeList) => GraphFormat::EdgeList,
            None if Path::new(&g.input).extension().is_some_and(|e| e == "json") => {
                GraphFormat::Json
            }
            None => GraphFormat::EdgeList,
        };
        Ok(parse_graph_with_limit(&text, format, self.max_vertices)?)
    }
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn execute<R: Read>(
    command: &Command,
    mode: OutputMode,
    input: &mut InputSource<R>,
) -> Result<String, Failure> {
    match command {
        Command::Closure(g) => {
            let doc = input.graph(g)?;
            let w = transitive_closure(&doc.relation_matrix());
            Ok(matrix_output(
                doc.vertices(),
                &Labeled::new(doc.vertices(), &w),
                mode,
            ))
        }
        Command::Count(g) => {
            let doc = input.graph(g)?;
            let w = count_paths(&doc.relation_matrix())
                .map_err(|e| count_failure(e, doc.vertices()))?;
            Ok(matrix_output(
                doc.vertices(),
                &Labeled::new(doc.vertices(), &w),
                mode,
            ))
        }
        Command::Shortest { graph, path } => {
            let doc = input.graph(graph)?;
            let queries = path
                .chunks(2)
                .map(|q| {
                    let idx = |name: &str| {
                        doc.vertex_index(name).ok_or_else(|| {
                            Failure::new(
                                "UnknownVertex",
                                format!("--path: unknown vertex {name:?}"),
                            )
                        })
                    };
                    Ok((idx(&q[0])?, idx(&q[1])?))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            match doc.weighted_arcs() {
                WeightedArcs::Int(arcs) => shortest(&doc, &arcs, &queries, mode),
                WeightedArcs::Float(arcs) => shortest(&doc, &arcs, &queries, mode),
            }
        }
        Command::Longest(g) => {
            let doc = input.graph(g)?;
            match doc.weighted_arcs() {
                WeightedArcs::Int(arcs) => longest(&doc, &arcs, mode),
                WeightedArcs::Float(arcs) => longest(&doc, &arcs, mode),
            }
        }
        Command::Enumerate {
            graph,
            max_n,
            max_paths,
        } => {
            let doc = input.graph(graph)?;
            let limits = EnumerationLimits {
                max_vertices: Some(*max_n),
                max_paths_per_cell: Some(*max_paths),
            };
            let w = enumerate_paths_with_limits(&doc.relation_matrix(), limits)
                .map_err(|e| enumerate_failure(e, doc.vertices()))?;
            Ok(match mode {
                OutputMode::Json => json_line(path_map_json(doc.vertices(), &w)),
                OutputMode::Text => Labeled::new(doc.vertices(), &w).to_text(),
            })
        }
        Command::Subwords {
            n,
            gaps,
            word,
            list,
            with_singletons,
        } => subwords(*n, &gaps.0, word.as_deref(), *list, *with_singletons, mode),
        Command::Automata { input: path } => {
            let text = input.read(path)?;
            let table = parse_transition_table(&text)?;
            if table.states().len() > input.max_vertices {
                return Err(Failure::new(
                    "TooManyStates",
                    format!(
                        "{} states exceeds the limit of {}",
                        table.states().len(),
                        input.max_vertices
                    ),
                ));
            }
            let w = letter_power_closure(&table);
            let grid = LetterGrid {
                table: &table,
                matrix: &w,
            };
            Ok(match mode {
                OutputMode::Json => json_line(json!({
                    "states": table.states(),
                    "alphabet": table.alphabet(),
                    "matrix": grid.to_json(),
                })),
                OutputMode::Text => grid.to_text(),
            })
        }
    }
}

fn matrix_output<R: Render>(vertices: &[String], m: &R, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => json_line(json!({"vertices": vertices, "matrix": m.to_json()})),
        OutputMode::Text => render(m, mode),
    }
}

fn shortest<W: JsonWeight>(
    doc: &GraphDocument,
    arcs: &[(usize, usize, W)],
    queries: &[(usize, usize)],
    mode: OutputMode,
) -> Result<String, Failure> {
    let (d, next) = floyd_warshall(&modified_adjacency(doc.n(), arcs))
        .map_err(|e| path_failure(e, doc.vertices()))?;
    let names = doc.vertices();
    let grid = Labeled::new(names, &d);
    Ok(match mode {
        OutputMode::Json => {
            let paths: Vec<Value> = queries
                .iter()
                .map(|&(s, t)| {
                    let p = reconstruct_path(&next, s, t);
                    json!({
                        "from": names[s],
                        "to": names[t],
                        "distance": distance_json(&d[(s, t)]),
                        "path": path_json(names, &p.into()),
                    })
                })
                .collect();
            json_line(json!({"vertices": names, "distances": grid.to_json(), "paths": paths}))
        }
        OutputMode::Text => {
            let mut out = grid.to_text();
            for &(s, t) in queries {
                let p = reconstruct_path(&next, s, t);
                if p.is_empty() {
                    out.push_str(&format!("path {} -> {}: unreachable\n", names[s], names[t]));
                } else {
                    let hops: Vec<&str> = p.iter().map(|&v| names[v].as_str()).collect();
                    out.push_str(&format!(
                        "path {} -> {}: {} (distance {})\n",
                        names[s],
                        names[t],
                        hops.join(" "),
                        d[(s, t)]
                    ));
                }
            }
            out
        }
    })
}

fn longest<W: JsonWeight>(
    doc: &GraphDocument,
    arcs: &[(usize, usize, W)],
    mode: OutputMode,
) -> Result<String, Failure> {
    let l = longest_paths_dag(&modified_adjacency(doc.n(), arcs))
        .map_err(|e| path_failure(e, doc.vertices()))?;
    let grid = Labeled::new(doc.vertices(), &l);
    Ok(match mode {
        OutputMode::Json => {
            json_line(json!({"vertices": doc.vertices(), "distances": grid.to_json()}))
        }
        OutputMode::Text => grid.to_text(),
    })
}

fn subwords(
    n: Option<usize>,
    gaps: &[usize],
    word: Option<&str>,
    list: bool,
    with_singletons: bool,
    mode: OutputMode,
) -> Result<String, Failure> {
    let word: Option<String> = match (n, word) {
        (None, None) => return Err(Failure::usage("subwords needs --n or --word")),
        (Some(n), Some(w)) if w.chars().count() != n => {
            return Err(Failure::usage(format!(
                "--n {n} does not match the length of --word {w:?}"
            )))
        }
        (_, Some(w)) => Some(w.to_owned()),
        (Some(n), None) if list => {
            if n > 26 {
                return Err(Failure::usage(
                    "--list with --n above 26 needs an explicit --word",
                ));
            }
            Some(('a'..='z').take(n).collect())
        }
        (Some(_), None) => None,
    };
    let n = n.unwrap_or_else(|| word.as_ref().map_or(0, |w| w.chars().count()));
    let gap_set = GapSet::new(n, gaps.iter().copied())?;
    // Validates the word even when no list was asked for.
    let words = match &word {
        Some(w) => Some(enumerate_m_subwords(w, &gap_set, with_singletons)?),
        None => None,
    };
    let report = m_complexity(n, &gap_set)?;
    Ok(match mode {
        OutputMode::Json => {
            let mut obj = json!({
                "n": n,
                "gaps": gap_set.iter().collect::<Vec<_>>(),
                "k": biguint_json(&report.k),
                "k_without_singletons": biguint_json(&report.k_without_singletons()),
                "w": Labeled::new(&index_labels(n), &report.w).to_json(),
            });
            if let (true, Some(words)) = (list, &words) {
                obj["subwords"] = json!(words);
            }
            json_line(obj)
        }
        OutputMode::Text => {
            let mut out = format!(
                "K = {}\nK without singletons = {}\n",
                report.k,
                report.k_without_singletons()
            );
            if let (true, Some(words)) = (list, &words) {
                out.push_str(&format!("subwords ({}):\n", words.len()));
                for w in words {
                    out.push_str(w);
                    out.push('\n');
                }
            }
            out
        }
    })
}

fn index_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}
