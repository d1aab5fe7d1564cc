//! Directed weighted graph over dense vertex ids.
//!
//! The graph is immutable after construction. Edges are stored in CSR form
//! sorted by `(src, dst)`, so iteration order and everything derived from it
//! is deterministic. An edge `(x, y)` reads "x cites y" throughout the crate.

use std::collections::HashMap;

use crate::error::{EqRankError, Result};

pub type VertexId = u32;

/// Bijection between external string ids and dense vertex ids.
#[derive(Debug, Clone, Default)]
pub struct IdMap {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl IdMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the dense id for `name`, inserting it on first sight.
    pub fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len() as VertexId;
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), id);
        id
    }

    pub fn from_names(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i as VertexId).is_some() {
                return Err(EqRankError::InvalidGraph(format!(
                    "duplicate external id {name:?}"
                )));
            }
        }
        Ok(Self { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Directed graph with nonnegative edge weights.
///
/// Invariants enforced at construction: no self-loops, no duplicate
/// `(src, dst)` pairs, every weight finite and `>= 0`, and the external-id
/// map (when present) is a bijection onto `0..n`.
#[derive(Debug, Clone)]
pub struct WeightedDigraph {
    vertex_count: usize,
    out_offsets: Vec<usize>,
    dst: Vec<VertexId>,
    weight: Vec<f64>,
    ids: Option<IdMap>,
}

impl WeightedDigraph {
    /// Builds a graph from an edge list with weights.
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId, f64)>) -> Result<Self> {
        Self::with_ids(vertex_count, edges, None)
    }

    pub fn with_ids(
        vertex_count: usize,
        mut edges: Vec<(VertexId, VertexId, f64)>,
        ids: Option<IdMap>,
    ) -> Result<Self> {
        if let Some(map) = &ids {
            if map.len() != vertex_count {
                return Err(EqRankError::InvalidGraph(format!(
                    "id map has {} entries for {} vertices",
                    map.len(),
                    vertex_count
                )));
            }
        }
        for &(s, d, w) in &edges {
            if s as usize >= vertex_count || d as usize >= vertex_count {
                return Err(EqRankError::InvalidGraph(format!(
                    "edge ({s}, {d}) out of range for {vertex_count} vertices"
                )));
            }
            if s == d {
                return Err(EqRankError::InvalidGraph(format!("self-loop at vertex {s}")));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(EqRankError::InvalidGraph(format!(
                    "edge ({s}, {d}) has invalid weight {w}"
                )));
            }
        }
        edges.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for pair in edges.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(EqRankError::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    pair[0].0, pair[0].1
                )));
            }
        }

        let mut out_offsets = vec![0usize; vertex_count + 1];
        for &(s, _, _) in &edges {
            out_offsets[s as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            out_offsets[i + 1] += out_offsets[i];
        }
        let dst = edges.iter().map(|e| e.1).collect();
        let weight = edges.iter().map(|e| e.2).collect();
        Ok(Self {
            vertex_count,
            out_offsets,
            dst,
            weight,
            ids,
        })
    }

    /// Convenience constructor with unit weights.
    pub fn from_unit_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new(
            vertex_count,
            edges.iter().map(|&(s, d)| (s, d, 1.0)).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.dst.len()
    }

    pub fn ids(&self) -> Option<&IdMap> {
        self.ids.as_ref()
    }

    pub fn set_ids(&mut self, ids: Option<IdMap>) -> Result<()> {
        if let Some(map) = &ids {
            if map.len() != self.vertex_count {
                return Err(EqRankError::InvalidGraph(format!(
                    "id map has {} entries for {} vertices",
                    map.len(),
                    self.vertex_count
                )));
            }
        }
        self.ids = ids;
        Ok(())
    }

    /// External name of a vertex, falling back to its decimal dense id.
    pub fn vertex_name(&self, v: VertexId) -> String {
        match &self.ids {
            Some(map) => map.name(v).to_owned(),
            None => v.to_string(),
        }
    }

    /// Out-neighbors of `v` with edge weights, sorted by destination.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        let r = self.out_range(v);
        self.dst[r.clone()]
            .iter()
            .copied()
            .zip(self.weight[r].iter().copied())
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.dst[self.out_range(v)]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_range(v).len()
    }

    fn out_range(&self, v: VertexId) -> std::ops::Range<usize> {
        self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]
    }

    /// All edges in `(src, dst, weight)` order, sorted by `(src, dst)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        (0..self.vertex_count as VertexId)
            .flat_map(move |v| self.out_edges(v).map(move |(d, w)| (v, d, w)))
    }

    pub fn total_weight(&self) -> f64 {
        self.weight.iter().sum()
    }

    /// Weight of edge `(src, dst)` if present.
    pub fn edge_weight(&self, src: VertexId, dst: VertexId) -> Option<f64> {
        let r = self.out_range(src);
        let pos = self.dst[r.clone()].binary_search(&dst).ok()?;
        Some(self.weight[r.start + pos])
    }

    /// In-adjacency as CSR `(offsets, srcs, weights)`; srcs sorted per vertex.
    pub fn in_adjacency(&self) -> InAdjacency {
        let n = self.vertex_count;
        let mut offsets = vec![0usize; n + 1];
        for &d in &self.dst {
            offsets[d as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut src = vec![0 as VertexId; self.dst.len()];
        let mut weight = vec![0f64; self.dst.len()];
        for (s, d, w) in self.edges() {
            let slot = cursor[d as usize];
            src[slot] = s;
            weight[slot] = w;
            cursor[d as usize] += 1;
        }
        InAdjacency {
            offsets,
            src,
            weight,
        }
    }

    /// Replaces all edge weights, preserving structure. `new_weights` must be
    /// keyed in the graph's canonical `(src, dst)` edge order.
    pub fn with_weights(&self, new_weights: Vec<f64>) -> Result<Self> {
        if new_weights.len() != self.dst.len() {
            return Err(EqRankError::InvalidGraph(format!(
                "{} weights for {} edges",
                new_weights.len(),
                self.dst.len()
            )));
        }
        for &w in &new_weights {
            if !w.is_finite() || w < 0.0 {
                return Err(EqRankError::InvalidGraph(format!("invalid weight {w}")));
            }
        }
        Ok(Self {
            vertex_count: self.vertex_count,
            out_offsets: self.out_offsets.clone(),
            dst: self.dst.clone(),
            weight: new_weights,
            ids: self.ids.clone(),
        })
    }

    /// Induced subgraph on `vertices` (ascending, deduplicated by the caller).
    /// Returns the subgraph and the local-to-parent vertex map.
    pub fn subgraph(&self, vertices: &[VertexId]) -> Result<(Self, Vec<VertexId>)> {
        let mut local = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if v as usize >= self.vertex_count {
                return Err(EqRankError::InvalidGraph(format!("vertex {v} out of range")));
            }
            if local.insert(v, i as VertexId).is_some() {
                return Err(EqRankError::InvalidGraph(format!("duplicate vertex {v}")));
            }
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for (d, w) in self.out_edges(v) {
                if let Some(&ld) = local.get(&d) {
                    edges.push((local[&v], ld, w));
                }
            }
        }
        let ids = self.ids.as_ref().map(|map| {
            IdMap::from_names(vertices.iter().map(|&v| map.name(v).to_owned()).collect())
                .expect("parent ids are unique")
        });
        let sub = Self::with_ids(vertices.len(), edges, ids)?;
        Ok((sub, vertices.to_vec()))
    }
}

/// In-adjacency in CSR form; `src[offsets[v]..offsets[v+1]]` lists the
/// vertices citing `v`, ascending, with parallel edge weights.
pub struct InAdjacency {
    pub offsets: Vec<usize>,
    pub src: Vec<VertexId>,
    pub weight: Vec<f64>,
}

impl InAdjacency {
    pub fn sources(&self, v: VertexId) -> &[VertexId] {
        &self.src[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn entries(&self, v: VertexId) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        let r = self.offsets[v as usize]..self.offsets[v as usize + 1];
        self.src[r.clone()]
            .iter()
            .copied()
            .zip(self.weight[r].iter().copied())
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(WeightedDigraph::new(2, vec![(0, 0, 1.0)]).is_err());
        assert!(WeightedDigraph::new(2, vec![(0, 1, 1.0), (0, 1, 2.0)]).is_err());
        assert!(WeightedDigraph::new(2, vec![(0, 1, -1.0)]).is_err());
        assert!(WeightedDigraph::new(2, vec![(0, 1, f64::NAN)]).is_err());
        assert!(WeightedDigraph::new(2, vec![(0, 2, 1.0)]).is_err());
    }

    #[test]
    fn csr_layout_is_sorted() {
        let g = WeightedDigraph::new(4, vec![(2, 1, 5.0), (0, 3, 1.0), (0, 1, 2.0)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1, 2.0), (0, 3, 1.0), (2, 1, 5.0)]);
        assert_eq!(g.out_neighbors(0), &[1, 3]);
        assert_eq!(g.edge_weight(2, 1), Some(5.0));
        assert_eq!(g.edge_weight(1, 2), None);
    }

    #[test]
    fn in_adjacency_mirrors_edges() {
        let g = WeightedDigraph::new(3, vec![(0, 2, 1.5), (1, 2, 2.5)]).unwrap();
        let inc = g.in_adjacency();
        assert_eq!(inc.sources(2), &[0, 1]);
        assert_eq!(inc.in_degree(0), 0);
        let entries: Vec<_> = inc.entries(2).collect();
        assert_eq!(entries, vec![(0, 1.5), (1, 2.5)]);
    }

    #[test]
    fn subgraph_keeps_internal_edges() {
        let g = WeightedDigraph::new(4, vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0)]).unwrap();
        let (sub, back) = g.subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1, 2.0)]);
        assert_eq!(back, vec![1, 2]);
    }
}
