//! Graph ingestion and serialization.
//!
//! Two on-disk formats are supported:
//!
//! * **Edge list** — UTF-8 text, one `src<TAB>dst` edge per line, `#` starts
//!   a comment line, blank lines ignored. Ids are opaque strings; an edge
//!   `(x, y)` means "x cites y". Ingestion normalizes: dense ids are assigned
//!   in first-appearance order, self-loops are dropped and duplicate edges
//!   collapsed (both counted in the [`IngestReport`]), and every edge gets
//!   unit weight.
//! * **Normalized graph** — the crate's single-file format, written by
//!   [`write_normalized`]. Line-based, tab-separated:
//!
//!   ```text
//!   eqrank-graph<TAB>1
//!   vertices<TAB><n>
//!   edges<TAB><m>
//!   id<TAB><dense><TAB><external>      (n lines, present when ids are known)
//!   edge<TAB><src><TAB><dst><TAB><w>   (m lines, canonical (src, dst) order)
//!   ```
//!
//!   Weights are printed with the shortest decimal representation that
//!   round-trips, so load ∘ serialize is the identity on normalized graphs.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{EqRankError, Result};
use crate::graph::{IdMap, VertexId, WeightedDigraph};

/// Input format accepted by [`load_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Normalized,
}

/// What ingestion normalization did to the raw input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub vertices: usize,
    pub edges: usize,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: WeightedDigraph,
    pub report: IngestReport,
}

pub fn load_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<LoadedGraph> {
    match format {
        GraphFormat::EdgeList => load_edge_list(reader),
        GraphFormat::Normalized => load_normalized(reader),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> EqRankError {
    EqRankError::Parse {
        line,
        msg: msg.into(),
    }
}

fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut ids = IdMap::new();
    let mut seen: HashMap<(VertexId, VertexId), ()> = HashMap::new();
    let mut edges: Vec<(VertexId, VertexId, f64)> = Vec::new();
    let mut report = IngestReport::default();

    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split('\t');
        let src = fields.next().unwrap_or("");
        let dst = fields.next().unwrap_or("");
        if src.is_empty() || dst.is_empty() || fields.next().is_some() {
            return Err(parse_err(
                lineno,
                format!("expected `src<TAB>dst`, got {trimmed:?}"),
            ));
        }
        let s = ids.intern(src);
        let d = ids.intern(dst);
        if s == d {
            report.self_loops_dropped += 1;
            continue;
        }
        if seen.insert((s, d), ()).is_some() {
            report.duplicates_collapsed += 1;
            continue;
        }
        edges.push((s, d, 1.0));
    }

    report.vertices = ids.len();
    report.edges = edges.len();
    let n = ids.len();
    let graph = WeightedDigraph::with_ids(n, edges, Some(ids))?;
    Ok(LoadedGraph { graph, report })
}

fn load_normalized<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut lines = reader.lines().enumerate();
    let mut next_line = || -> Result<Option<(usize, String)>> {
        match lines.next() {
            Some((i, line)) => Ok(Some((i + 1, line?))),
            None => Ok(None),
        }
    };

    let (lineno, header) = next_line()?.ok_or_else(|| parse_err(1, "empty file"))?;
    if header.trim_end() != "eqrank-graph\t1" {
        return Err(parse_err(lineno, "missing `eqrank-graph<TAB>1` header"));
    }

    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut names: Vec<(VertexId, String)> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId, f64)> = Vec::new();

    while let Some((lineno, line)) = next_line()? {
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').collect();
        match fields[0] {
            "vertices" if fields.len() == 2 => {
                n = Some(
                    fields[1]
                        .parse()
                        .map_err(|_| parse_err(lineno, "bad vertex count"))?,
                );
            }
            "edges" if fields.len() == 2 => {
                m = Some(
                    fields[1]
                        .parse()
                        .map_err(|_| parse_err(lineno, "bad edge count"))?,
                );
            }
            "id" if fields.len() == 3 => {
                let dense: VertexId = fields[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad dense id"))?;
                names.push((dense, fields[2].to_owned()));
            }
            "edge" if fields.len() == 4 => {
                let s: VertexId = fields[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad src"))?;
                let d: VertexId = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad dst"))?;
                let w: f64 = fields[3]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad weight"))?;
                edges.push((s, d, w));
            }
            other => {
                return Err(parse_err(lineno, format!("unknown record {other:?}")));
            }
        }
    }

    let n = n.ok_or_else(|| parse_err(0, "missing `vertices` record"))?;
    let m = m.ok_or_else(|| parse_err(0, "missing `edges` record"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    let ids = if names.is_empty() {
        None
    } else {
        if names.len() != n {
            return Err(parse_err(
                0,
                format!("{} id records for {n} vertices", names.len()),
            ));
        }
        names.sort_by_key(|(dense, _)| *dense);
        for (i, (dense, _)) in names.iter().enumerate() {
            if *dense as usize != i {
                return Err(parse_err(0, format!("id records do not cover 0..{n}")));
            }
        }
        Some(IdMap::from_names(
            names.into_iter().map(|(_, name)| name).collect(),
        )?)
    };

    let graph = WeightedDigraph::with_ids(n, edges, ids)?;
    let report = IngestReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        ..IngestReport::default()
    };
    Ok(LoadedGraph { graph, report })
}

/// Writes the normalized single-file format described in the module docs.
pub fn write_normalized<W: Write>(graph: &WeightedDigraph, mut out: W) -> Result<()> {
    writeln!(out, "eqrank-graph\t1")?;
    writeln!(out, "vertices\t{}", graph.vertex_count())?;
    writeln!(out, "edges\t{}", graph.edge_count())?;
    if let Some(ids) = graph.ids() {
        for v in 0..graph.vertex_count() as VertexId {
            writeln!(out, "id\t{v}\t{}", ids.name(v))?;
        }
    }
    for (s, d, w) in graph.edges() {
        writeln!(out, "edge\t{s}\t{d}\t{w}")?;
    }
    Ok(())
}
