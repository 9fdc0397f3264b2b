//! Dendrogram text files.
//!
//! ```text
//! #dendrogram v1 n=<edges> nv=<vertices>
//! E <rank> <parent rank, or -1 for the root>     one line per rank
//! V <vertex> <parent rank>                        one line per vertex
//! ```

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use sldendro_core::Dendrogram;

const MAGIC: &str = "#dendrogram v1";

#[derive(Debug, thiserror::Error)]
pub enum DendrogramFileError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

pub fn write_dendrogram<W: Write>(out: &mut W, d: &Dendrogram) -> io::Result<()> {
    writeln!(out, "{MAGIC} n={} nv={}", d.num_edges(), d.num_vertices())?;
    for (rank, parent) in d.edge_parents().iter().enumerate() {
        match parent {
            Some(p) => writeln!(out, "E {rank} {p}")?,
            None => writeln!(out, "E {rank} -1")?,
        }
    }
    for (v, p) in d.vertex_parents().iter().enumerate() {
        writeln!(out, "V {v} {p}")?;
    }
    Ok(())
}

pub fn save_dendrogram(path: &Path, d: &Dendrogram) -> io::Result<()> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    write_dendrogram(&mut out, d)?;
    out.flush()
}

fn header_field(token: Option<&str>, key: &str) -> Option<usize> {
    token?.strip_prefix(key)?.strip_prefix('=')?.parse().ok()
}

/// Parses a dendrogram file. Lines must appear in the order written by
/// [`write_dendrogram`] and every parent must be a valid rank.
pub fn parse_dendrogram(text: &str) -> Result<Dendrogram, DendrogramFileError> {
    let fail = |line: usize, message: String| DendrogramFileError::Format { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let eof = text.lines().count() + 1;

    let (_, header) = lines.next().ok_or_else(|| fail(1, "empty file".into()))?;
    let rest = header
        .strip_prefix(MAGIC)
        .ok_or_else(|| fail(1, format!("expected header `{MAGIC} n=.. nv=..`")))?;
    let mut tokens = rest.split_whitespace();
    let n = header_field(tokens.next(), "n").ok_or_else(|| fail(1, "bad n=".into()))?;
    let nv = header_field(tokens.next(), "nv").ok_or_else(|| fail(1, "bad nv=".into()))?;
    if tokens.next().is_some() {
        return Err(fail(1, "trailing header fields".into()));
    }

    let mut record = |tag: &str, index: usize| -> Result<(usize, i64), DendrogramFileError> {
        let (line, text) = lines
            .next()
            .ok_or_else(|| fail(eof, format!("file ends before {tag} {index}")))?;
        let mut f = text.split_whitespace();
        let ok =
            f.next() == Some(tag) && f.next().and_then(|s| s.parse::<usize>().ok()) == Some(index);
        let parent = f.next().and_then(|s| s.parse::<i64>().ok());
        match (ok, parent, f.next()) {
            (true, Some(p), None) => Ok((line, p)),
            _ => Err(fail(line, format!("expected `{tag} {index} <parent>`"))),
        }
    };

    let mut edge_parent = Vec::with_capacity(n);
    for rank in 0..n {
        let (line, p) = record("E", rank)?;
        edge_parent.push(match p {
            -1 => None,
            p if p >= 0 && (p as usize) < n => Some(p as usize),
            _ => return Err(fail(line, format!("parent {p} out of range"))),
        });
    }
    let mut vertex_parent = Vec::with_capacity(nv);
    for v in 0..nv {
        let (line, p) = record("V", v)?;
        if p < 0 || p as usize >= n {
            return Err(fail(line, format!("parent {p} out of range")));
        }
        vertex_parent.push(p as usize);
    }
    if let Some((line, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(fail(line, format!("unexpected line {extra:?}")));
    }
    Ok(Dendrogram::new(edge_parent, vertex_parent))
}

pub fn load_dendrogram(path: &Path) -> Result<Dendrogram, DendrogramFileError> {
    parse_dendrogram(&fs::read_to_string(path)?)
}

/// First place where two dendrograms differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divergence {
    Size {
        edges: (usize, usize),
        vertices: (usize, usize),
    },
    Edge {
        rank: usize,
        parents: (Option<usize>, Option<usize>),
    },
    Vertex {
        vertex: usize,
        parents: (usize, usize),
    },
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: Option<usize>| p.map_or("-1".to_string(), |p| p.to_string());
        match *self {
            Divergence::Size { edges, vertices } => write!(
                f,
                "sizes differ: n={} nv={} vs n={} nv={}",
                edges.0, vertices.0, edges.1, vertices.1
            ),
            Divergence::Edge { rank, parents } => write!(
                f,
                "edge {rank}: parent {} vs {}",
                show(parents.0),
                show(parents.1)
            ),
            Divergence::Vertex { vertex, parents } => {
                write!(f, "vertex {vertex}: parent {} vs {}", parents.0, parents.1)
            }
        }
    }
}

pub fn first_divergence(a: &Dendrogram, b: &Dendrogram) -> Option<Divergence> {
    if a.num_edges() != b.num_edges() || a.num_vertices() != b.num_vertices() {
        return Some(Divergence::Size {
            edges: (a.num_edges(), b.num_edges()),
            vertices: (a.num_vertices(), b.num_vertices()),
        });
    }
    let edges = a.edge_parents().iter().zip(b.edge_parents());
    if let Some((rank, (&x, &y))) = edges.enumerate().find(|(_, (x, y))| x != y) {
        return Some(Divergence::Edge {
            rank,
            parents: (x, y),
        });
    }
    let vertices = a.vertex_parents().iter().zip(b.vertex_parents());
    vertices
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(vertex, (&x, &y))| Divergence::Vertex {
            vertex,
            parents: (x, y),
        })
}
