//! DIMACS and edge-list readers, the DIMACS writer, and solution files.

use std::io::{self, BufRead, Write};
use std::path::Path;

use hycolor_core::{BuildStats, Coloring, Graph, GraphError};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: edge before the problem line")]
    MissingProblemLine { line: usize },
    #[error("no problem line")]
    NoProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: expected an integer, found {token:?}")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: malformed {what} line")]
    Malformed { line: usize, what: &'static str },
    #[error("input has no edges")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dimacs,
    Edgelist,
    Auto,
}

/// A parsed instance and what was dropped on the way.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub stats: BuildStats,
    /// Edge count from the DIMACS problem line, if any.
    pub declared_edges: Option<usize>,
}

fn integer(tok: &str, line: usize) -> Result<u64, ParseError> {
    tok.parse().map_err(|_| ParseError::NotAnInteger {
        line,
        token: tok.to_owned(),
    })
}

/// Reads DIMACS `.col`/`.clq`: `c` comments, one `p edge <n> <m>` line, then
/// `e <u> <v>` with 1-based ids. Node-weight (`n`) lines are ignored.
pub fn parse_dimacs<R: BufRead>(input: R) -> Result<Parsed, ParseError> {
    let mut problem: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, text) in input.lines().enumerate() {
        let text = text?;
        let line = i + 1;
        let mut toks = text.split_whitespace();
        match toks.next() {
            None | Some("c") | Some("n") => {}
            Some("p") => {
                if problem.is_some() {
                    return Err(ParseError::DuplicateProblemLine { line });
                }
                let (Some(_kind), Some(n), Some(m), None) =
                    (toks.next(), toks.next(), toks.next(), toks.next())
                else {
                    return Err(ParseError::Malformed { line, what: "problem" });
                };
                let n = integer(n, line)? as usize;
                let m = integer(m, line)? as usize;
                edges.reserve(m);
                problem = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = problem else {
                    return Err(ParseError::MissingProblemLine { line });
                };
                let (Some(u), Some(v), None) = (toks.next(), toks.next(), toks.next()) else {
                    return Err(ParseError::Malformed { line, what: "edge" });
                };
                let mut ends = [0usize; 2];
                for (end, tok) in ends.iter_mut().zip([u, v]) {
                    let x = integer(tok, line)?;
                    if x == 0 || x > n as u64 {
                        return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                    }
                    *end = x as usize - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            Some(c) if c.starts_with('c') => {}
            Some(_) => return Err(ParseError::Malformed { line, what: "unknown" }),
        }
    }
    let (n, m) = problem.ok_or(ParseError::NoProblemLine)?;
    let (graph, stats) = Graph::from_edges(n, edges)?;
    Ok(Parsed {
        graph,
        stats,
        declared_edges: Some(m),
    })
}

/// Reads whitespace-separated id pairs; `#` and `%` start comment lines. An
/// optional third numeric column (edge weight) is ignored, and a Matrix
/// Market header makes the first data line a size line to skip. Ids are
/// remapped to `0..n` in ascending order and kept as labels.
pub fn parse_edgelist<R: BufRead>(input: R) -> Result<Parsed, ParseError> {
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    let mut skip_size_line = false;
    for (i, text) in input.lines().enumerate() {
        let text = text?;
        let line = i + 1;
        let t = text.trim();
        if t.starts_with("%%MatrixMarket") {
            skip_size_line = true;
            continue;
        }
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        if skip_size_line {
            skip_size_line = false;
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        let weight_ok = toks.len() == 3 && toks[2].parse::<f64>().is_ok();
        if toks.len() != 2 && !weight_ok {
            return Err(ParseError::Malformed { line, what: "edge" });
        }
        pairs.push((integer(toks[0], line)?, integer(toks[1], line)?));
    }
    if pairs.is_empty() {
        return Err(ParseError::EmptyGraph);
    }
    let mut labels: Vec<u64> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |x: u64| labels.binary_search(&x).unwrap();
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(u, v)| (id(u), id(v))).collect();
    let (graph, stats) = Graph::from_edges(labels.len(), edges)?;
    let graph = graph.with_labels(labels)?;
    Ok(Parsed {
        graph,
        stats,
        declared_edges: None,
    })
}

/// Picks a format from the file extension, falling back to the content:
/// a first record starting with `c` or `p` means DIMACS.
pub fn detect(path: &Path, content: &str) -> Format {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase());
    match ext.as_deref() {
        Some("col" | "clq" | "dimacs") => return Format::Dimacs,
        Some("txt" | "edges" | "el" | "mtx" | "tsv") => return Format::Edgelist,
        _ => {}
    }
    let first = content.lines().map(str::trim).find(|l| !l.is_empty());
    match first.and_then(|l| l.chars().next()) {
        Some('c' | 'p') => Format::Dimacs,
        _ => Format::Edgelist,
    }
}

pub fn parse_str(content: &str, format: Format, path: &Path) -> Result<Parsed, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(content.as_bytes()),
        Format::Edgelist => parse_edgelist(content.as_bytes()),
        Format::Auto => parse_str(content, detect(path, content), path),
    }
}

pub fn read_graph(path: &Path, format: Format) -> Result<Parsed, ParseError> {
    let content = std::fs::read_to_string(path)?;
    parse_str(&content, format, path)
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    out.flush()
}

#[derive(Debug, thiserror::Error)]
pub enum SolutionError {
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("line {line}: {what}")]
    Invalid { line: usize, what: String },
    #[error("header says {declared} colors, found {found}")]
    ColorCount { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// `k <colors>` then `v <label> <color>` per vertex, colors from 1, vertices
/// by ascending label.
pub fn write_solution<W: Write>(g: &Graph, c: &Coloring, mut out: W) -> Result<(), SolutionError> {
    let mut rows = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let color = c.get(v).ok_or(SolutionError::Uncolored(v))?;
        rows.push((g.label(v), color as u64 + 1));
    }
    rows.sort_unstable();
    writeln!(out, "k {}", c.num_colors())?;
    for (label, color) in rows {
        writeln!(out, "v {label} {color}")?;
    }
    out.flush()?;
    Ok(())
}

/// Inverse of [`write_solution`] against the graph the solution belongs to.
pub fn read_solution<R: BufRead>(g: &Graph, input: R) -> Result<Coloring, SolutionError> {
    let by_label = |label: u64| match g.labels() {
        Some(ls) => ls.binary_search(&label).ok(),
        None => (label >= 1 && label <= g.n() as u64).then(|| label as usize - 1),
    };
    let invalid = |line, what: &str| SolutionError::Invalid {
        line,
        what: what.to_owned(),
    };
    let mut declared = None;
    let mut c = Coloring::empty(g.n());
    for (i, text) in input.lines().enumerate() {
        let text = text?;
        let line = i + 1;
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["k", k] => {
                if declared.is_some() {
                    return Err(invalid(line, "repeated header"));
                }
                declared = Some(k.parse::<usize>().map_err(|_| invalid(line, "bad color count"))?);
            }
            ["v", label, color] => {
                if declared.is_none() {
                    return Err(SolutionError::MissingHeader);
                }
                let label: u64 = label.parse().map_err(|_| invalid(line, "bad label"))?;
                let color: u32 = color.parse().map_err(|_| invalid(line, "bad color"))?;
                let v = by_label(label).ok_or_else(|| invalid(line, "unknown label"))?;
                if color == 0 {
                    return Err(invalid(line, "colors start at 1"));
                }
                if c.get(v).is_some() {
                    return Err(invalid(line, "vertex listed twice"));
                }
                c.set(v, color - 1);
            }
            _ => return Err(invalid(line, "unrecognized line")),
        }
    }
    let declared = declared.ok_or(SolutionError::MissingHeader)?;
    if let Some(v) = (0..g.n()).find(|&v| c.get(v).is_none()) {
        return Err(SolutionError::Uncolored(v));
    }
    let found = c.num_colors();
    if found != declared {
        return Err(SolutionError::ColorCount { declared, found });
    }
    Ok(c)
}
