//! Plain-text edge lists: one `u v w` line per edge, `#` comment lines.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use sldendro_core::{Edge, TreeError, WeightedTree};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
}

fn parse_line(text: &str, line: usize) -> Result<Edge, LoadError> {
    let err = |message: String| LoadError::Parse { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| {
        fields
            .next()
            .ok_or_else(|| err(format!("missing {name}, expected `u v w`")))
    };
    let (u, v, w) = (next("u")?, next("v")?, next("w")?);
    let vertex = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| err(format!("bad vertex id {s:?}: {e}")))
    };
    let (u, v) = (vertex(u)?, vertex(v)?);
    let w = w
        .parse::<f64>()
        .map_err(|e| err(format!("bad weight {w:?}: {e}")))?;
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected field {extra:?}")));
    }
    Ok(Edge::new(u, v, w))
}

/// Parses an edge list. The vertex count is the largest id plus one, so ids
/// must be contiguous for the tree to validate.
pub fn parse_edge_list(text: &str) -> Result<WeightedTree, LoadError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        edges.push(parse_line(line, i + 1)?);
    }
    Ok(WeightedTree::from_edges(edges)?)
}

pub fn load_edge_list(path: &Path) -> Result<WeightedTree, LoadError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

/// Writes `tree` after one `# ` comment line per entry of `comments`.
/// Weights are printed in their shortest round-trip form.
pub fn write_edge_list<W: Write>(
    out: &mut W,
    tree: &WeightedTree,
    comments: &[String],
) -> io::Result<()> {
    for c in comments {
        writeln!(out, "# {c}")?;
    }
    for e in tree.edges() {
        writeln!(out, "{} {} {:?}", e.u, e.v, e.weight)?;
    }
    Ok(())
}

pub fn save_edge_list(path: &Path, tree: &WeightedTree, comments: &[String]) -> io::Result<()> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    write_edge_list(&mut out, tree, comments)?;
    out.flush()
}
