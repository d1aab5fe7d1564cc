//! Per-document metadata: titles, authors, dates.
//!
//! Metadata arrives as UTF-8 text, one record per line:
//!
//! ```text
//! id<TAB>date<TAB>title<TAB>author1;author2;...
//! ```
//!
//! `date` is `YYYY` or `YYYY-MM`. Records are joined against the graph's
//! external-id map; ids not present in the graph and implausible years are
//! reported as warnings and skipped rather than aborting the load.

use std::fmt;
use std::io::BufRead;

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};

/// Accepted publication-year range; anything outside is treated as a typo.
pub const YEAR_RANGE: std::ops::RangeInclusive<i32> = 1950..=2100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentMeta {
    pub vertex: VertexId,
    pub title: String,
    pub authors: Vec<String>,
    pub year: i32,
    pub month: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetaWarning {
    UnknownId { line: usize, id: String },
    YearOutOfRange { line: usize, id: String, year: i32 },
    DuplicateRecord { line: usize, id: String },
}

impl fmt::Display for MetaWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetaWarning::UnknownId { line, id } => {
                write!(f, "line {line}: id {id:?} not present in the graph")
            }
            MetaWarning::YearOutOfRange { line, id, year } => {
                write!(f, "line {line}: id {id:?} has implausible year {year}")
            }
            MetaWarning::DuplicateRecord { line, id } => {
                write!(f, "line {line}: duplicate metadata for id {id:?}")
            }
        }
    }
}

/// Metadata indexed by dense vertex id.
#[derive(Debug, Clone, Default)]
pub struct MetaStore {
    entries: Vec<Option<DocumentMeta>>,
}

impl MetaStore {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            entries: vec![None; vertex_count],
        }
    }

    pub fn insert(&mut self, meta: DocumentMeta) {
        let v = meta.vertex as usize;
        if v >= self.entries.len() {
            self.entries.resize(v + 1, None);
        }
        self.entries[v] = Some(meta);
    }

    pub fn get(&self, v: VertexId) -> Option<&DocumentMeta> {
        self.entries.get(v as usize).and_then(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Min and max year over the given members, if any are dated.
    pub fn year_span(&self, members: &[VertexId]) -> Option<(i32, i32)> {
        let mut span: Option<(i32, i32)> = None;
        for &v in members {
            if let Some(meta) = self.get(v) {
                span = Some(match span {
                    None => (meta.year, meta.year),
                    Some((lo, hi)) => (lo.min(meta.year), hi.max(meta.year)),
                });
            }
        }
        span
    }
}

/// Collapses runs of whitespace and trims; the full extent of author
/// "normalization" this crate performs (disambiguation is out of scope).
pub fn normalize_author(raw: &str) -> String {
    raw.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn parse_date(s: &str) -> Option<(i32, Option<u8>)> {
    let (year_str, month_str) = match s.split_once('-') {
        Some((y, m)) => (y, Some(m)),
        None => (s, None),
    };
    let year: i32 = year_str.parse().ok()?;
    let month = match month_str {
        Some(m) => {
            let m: u8 = m.parse().ok()?;
            if !(1..=12).contains(&m) {
                return None;
            }
            Some(m)
        }
        None => None,
    };
    Some((year, month))
}

/// Parses metadata and joins it against `graph`'s external-id map.
pub fn load_metadata<R: BufRead>(
    reader: R,
    graph: &WeightedDigraph,
) -> Result<(MetaStore, Vec<MetaWarning>)> {
    let ids = graph.ids().ok_or_else(|| {
        EqRankError::InvalidGraph("metadata requires a graph with an external-id map".into())
    })?;
    let mut store = MetaStore::new(graph.vertex_count());
    let mut warnings = Vec::new();

    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').collect();
        if fields.len() != 4 {
            return Err(EqRankError::Parse {
                line: lineno,
                msg: format!("expected 4 tab-separated fields, got {}", fields.len()),
            });
        }
        let (id, date, title, authors) = (fields[0], fields[1], fields[2], fields[3]);
        let (year, month) = parse_date(date).ok_or_else(|| EqRankError::Parse {
            line: lineno,
            msg: format!("bad date {date:?} (expected YYYY or YYYY-MM)"),
        })?;
        let Some(vertex) = ids.lookup(id) else {
            warnings.push(MetaWarning::UnknownId {
                line: lineno,
                id: id.to_owned(),
            });
            continue;
        };
        if !YEAR_RANGE.contains(&year) {
            warnings.push(MetaWarning::YearOutOfRange {
                line: lineno,
                id: id.to_owned(),
                year,
            });
            continue;
        }
        if store.get(vertex).is_some() {
            warnings.push(MetaWarning::DuplicateRecord {
                line: lineno,
                id: id.to_owned(),
            });
            continue;
        }
        let authors = authors
            .split(';')
            .map(normalize_author)
            .filter(|a| !a.is_empty())
            .collect();
        store.insert(DocumentMeta {
            vertex,
            title: title.to_owned(),
            authors,
            year,
            month,
        });
    }
    Ok((store, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{load_graph, GraphFormat};

    fn graph_abc() -> WeightedDigraph {
        load_graph(std::io::Cursor::new("a\tb\nb\tc\n"), GraphFormat::EdgeList)
            .unwrap()
            .graph
    }

    #[test]
    fn parses_records_and_joins() {
        let g = graph_abc();
        let text = "a\t1999-07\tQuantum Widgets\tAlice  Smith;Bob Jones\n\
                    b\t2001\tClassical Widgets\tCarol Doe\n";
        let (store, warnings) = load_metadata(std::io::Cursor::new(text), &g).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(store.len(), 2);
        let a = store.get(0).unwrap();
        assert_eq!(a.year, 1999);
        assert_eq!(a.month, Some(7));
        assert_eq!(a.authors, vec!["Alice Smith", "Bob Jones"]);
        assert_eq!(store.year_span(&[0, 1, 2]), Some((1999, 2001)));
        assert_eq!(store.year_span(&[2]), None);
    }

    #[test]
    fn dangling_id_is_warning_not_error() {
        let g = graph_abc();
        let text = "zz\t1999\tGhost\tNobody\n";
        let (store, warnings) = load_metadata(std::io::Cursor::new(text), &g).unwrap();
        assert_eq!(store.len(), 0);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn implausible_year_is_warning() {
        let g = graph_abc();
        let text = "a\t1200\tAncient\tNobody\n";
        let (_, warnings) = load_metadata(std::io::Cursor::new(text), &g).unwrap();
        assert!(matches!(warnings[0], MetaWarning::YearOutOfRange { .. }));
    }

    #[test]
    fn malformed_record_is_error_with_line() {
        let g = graph_abc();
        let err = load_metadata(std::io::Cursor::new("a\t1999\tonly three\n"), &g).unwrap_err();
        assert!(matches!(err, EqRankError::Parse { line: 1, .. }));
    }
}
