//! Authority and hub numbers for papers and authors within a theme.
//!
//! The local authorities of a paper are the targets of its maximally
//! weighted outgoing links (all ties); its local hubs are the sources of its
//! maximally weighted incoming links. A paper's authority number sums the
//! link weights of the theme members that picked it as a local authority;
//! the hub number is the mirror image. Author numbers sum the numbers of the
//! author's papers in the theme, full credit to every listed co-author.

use std::collections::HashMap;

use crate::graph::{VertexId, WeightedDigraph};
use crate::meta::MetaStore;

/// Per-vertex max-link target sets with the corresponding edge weights.
#[derive(Debug, Clone)]
pub struct LocalMaps {
    /// `authorities[p]`: the local authorities of p — targets of p's
    /// max-weight outgoing edges, with that edge's weight.
    authorities: Vec<Vec<(VertexId, f64)>>,
    /// `hubs[p]`: the local hubs of p — sources of p's max-weight incoming
    /// edges, with that edge's weight.
    hubs: Vec<Vec<(VertexId, f64)>>,
}

impl LocalMaps {
    pub fn compute(graph: &WeightedDigraph) -> Self {
        let n = graph.vertex_count();
        let mut authorities = vec![Vec::new(); n];
        for v in 0..n as u32 {
            let mut best = f64::NEG_INFINITY;
            for (_, w) in graph.out_edges(v) {
                if w > best {
                    best = w;
                }
            }
            for (d, w) in graph.out_edges(v) {
                if w == best {
                    authorities[v as usize].push((d, w));
                }
            }
        }
        let inc = graph.in_adjacency();
        let mut hubs = vec![Vec::new(); n];
        for v in 0..n as u32 {
            let mut best = f64::NEG_INFINITY;
            for (_, w) in inc.entries(v) {
                if w > best {
                    best = w;
                }
            }
            for (s, w) in inc.entries(v) {
                if w == best {
                    hubs[v as usize].push((s, w));
                }
            }
        }
        Self { authorities, hubs }
    }

    pub fn local_authorities(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.authorities[v as usize]
    }

    pub fn local_hubs(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.hubs[v as usize]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PaperScore {
    pub vertex: VertexId,
    pub authority: f64,
    pub hub: f64,
}

/// Authority and hub numbers for every member of a theme.
#[derive(Debug, Clone)]
pub struct PaperRanks {
    scores: Vec<PaperScore>,
}

impl PaperRanks {
    /// Scores indexed in ascending vertex order.
    pub fn scores(&self) -> &[PaperScore] {
        &self.scores
    }

    pub fn by_authority(&self) -> Vec<PaperScore> {
        let mut v = self.scores.clone();
        v.sort_by(|a, b| {
            b.authority
                .partial_cmp(&a.authority)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.vertex.cmp(&b.vertex))
        });
        v
    }

    pub fn by_hub(&self) -> Vec<PaperScore> {
        let mut v = self.scores.clone();
        v.sort_by(|a, b| {
            b.hub
                .partial_cmp(&a.hub)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.vertex.cmp(&b.vertex))
        });
        v
    }

    pub fn total_authority(&self) -> f64 {
        self.scores.iter().map(|s| s.authority).sum()
    }

    pub fn total_hub(&self) -> f64 {
        self.scores.iter().map(|s| s.hub).sum()
    }
}

/// Computes authority and hub numbers for the members of one theme.
/// `members` must be sorted ascending. Only attribution between two theme
/// members counts; links to or from outside vertices are ignored.
pub fn rank_papers(members: &[VertexId], maps: &LocalMaps) -> PaperRanks {
    let in_theme = |v: VertexId| members.binary_search(&v).is_ok();
    let mut authority: HashMap<VertexId, f64> = HashMap::new();
    let mut hub: HashMap<VertexId, f64> = HashMap::new();
    for &p in members {
        for &(target, w) in maps.local_authorities(p) {
            if in_theme(target) {
                *authority.entry(target).or_insert(0.0) += w;
            }
        }
        for &(source, w) in maps.local_hubs(p) {
            if in_theme(source) {
                *hub.entry(source).or_insert(0.0) += w;
            }
        }
    }
    let scores = members
        .iter()
        .map(|&v| PaperScore {
            vertex: v,
            authority: authority.get(&v).copied().unwrap_or(0.0),
            hub: hub.get(&v).copied().unwrap_or(0.0),
        })
        .collect();
    PaperRanks { scores }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuthorScore {
    pub name: String,
    pub authority: f64,
    pub hub: f64,
}

/// Per-author sums of paper numbers within a theme.
#[derive(Debug, Clone)]
pub struct AuthorRanks {
    scores: Vec<AuthorScore>,
}

impl AuthorRanks {
    /// Scores in ascending name order.
    pub fn scores(&self) -> &[AuthorScore] {
        &self.scores
    }

    pub fn by_authority(&self) -> Vec<AuthorScore> {
        let mut v = self.scores.clone();
        v.sort_by(|a, b| {
            b.authority
                .partial_cmp(&a.authority)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.name.cmp(&b.name))
        });
        v
    }

    pub fn by_hub(&self) -> Vec<AuthorScore> {
        let mut v = self.scores.clone();
        v.sort_by(|a, b| {
            b.hub
                .partial_cmp(&a.hub)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.name.cmp(&b.name))
        });
        v
    }
}

pub fn rank_authors(ranks: &PaperRanks, meta: &MetaStore) -> AuthorRanks {
    let mut by_name: HashMap<&str, (f64, f64)> = HashMap::new();
    for score in ranks.scores() {
        let Some(doc) = meta.get(score.vertex) else {
            continue;
        };
        for author in &doc.authors {
            let entry = by_name.entry(author.as_str()).or_insert((0.0, 0.0));
            entry.0 += score.authority;
            entry.1 += score.hub;
        }
    }
    let mut scores: Vec<AuthorScore> = by_name
        .into_iter()
        .map(|(name, (authority, hub))| AuthorScore {
            name: name.to_owned(),
            authority,
            hub,
        })
        .collect();
    scores.sort_by(|a, b| a.name.cmp(&b.name));
    AuthorRanks { scores }
}
