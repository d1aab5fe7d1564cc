//! Elementary graph operations the clustering kernel is built from:
//! inversion, max-link pruning, factoring by a partition, sinks, and
//! weakly connected components.

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};
use crate::partition::Partition;

/// A graph over partition blocks together with the projection that
/// produced it. Edge `(X, Y)` exists iff some parent edge crosses from
/// block X to block Y, weighted by the sum of all such parent edges.
#[derive(Debug, Clone)]
pub struct FactorGraph {
    pub graph: WeightedDigraph,
    pub projection: Partition,
}

impl FactorGraph {
    /// Wraps a graph as its own factor under the identity partition.
    pub fn identity(graph: WeightedDigraph) -> Self {
        let projection = Partition::singletons(graph.vertex_count());
        Self { graph, projection }
    }
}

/// Reverses every edge; `w'(p, p') = w(p', p)`. Involution.
pub fn invert(graph: &WeightedDigraph) -> WeightedDigraph {
    let edges = graph.edges().map(|(s, d, w)| (d, s, w)).collect();
    WeightedDigraph::with_ids(graph.vertex_count(), edges, graph.ids().cloned())
        .expect("inverted edges are valid")
}

/// Keeps, for every vertex with outgoing edges, exactly the edges achieving
/// the maximum outgoing weight — all ties retained. Sinks stay sinks.
pub fn max_links(graph: &WeightedDigraph) -> WeightedDigraph {
    let mut edges = Vec::new();
    for v in 0..graph.vertex_count() as VertexId {
        let mut best = f64::NEG_INFINITY;
        for (_, w) in graph.out_edges(v) {
            if w > best {
                best = w;
            }
        }
        for (d, w) in graph.out_edges(v) {
            if w == best {
                edges.push((v, d, w));
            }
        }
    }
    WeightedDigraph::with_ids(graph.vertex_count(), edges, graph.ids().cloned())
        .expect("pruned edges are valid")
}

/// Vertices with no outgoing edges.
pub fn sinks(graph: &WeightedDigraph) -> Vec<VertexId> {
    (0..graph.vertex_count() as VertexId)
        .filter(|&v| graph.out_degree(v) == 0)
        .collect()
}

/// Factors the graph by a partition. Intra-block edges vanish; edges
/// between distinct blocks are merged with summed weights.
pub fn factor(graph: &WeightedDigraph, partition: &Partition) -> Result<FactorGraph> {
    if partition.vertex_count() != graph.vertex_count() {
        return Err(EqRankError::PartitionMismatch(format!(
            "partition over {} vertices applied to graph with {}",
            partition.vertex_count(),
            graph.vertex_count()
        )));
    }
    // Accumulate in canonical edge order so float sums are reproducible.
    let mut sums: std::collections::HashMap<(u32, u32), f64> = std::collections::HashMap::new();
    let mut order: Vec<(u32, u32)> = Vec::new();
    for (s, d, w) in graph.edges() {
        let key = (partition.block_of(s), partition.block_of(d));
        if key.0 == key.1 {
            continue;
        }
        match sums.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += w,
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(w);
                order.push(key);
            }
        }
    }
    let edges = order
        .into_iter()
        .map(|key| (key.0, key.1, sums[&key]))
        .collect();
    let graph = WeightedDigraph::new(partition.block_count(), edges)?;
    Ok(FactorGraph {
        graph,
        projection: partition.clone(),
    })
}

/// Maximal sets of vertices connected when edge direction is ignored.
pub fn weakly_connected_components(graph: &WeightedDigraph) -> Partition {
    let n = graph.vertex_count();
    let mut parent: Vec<u32> = (0..n as u32).collect();

    fn find(parent: &mut [u32], v: u32) -> u32 {
        let mut root = v;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = v;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    for (s, d, _) in graph.edges() {
        let rs = find(&mut parent, s);
        let rd = find(&mut parent, d);
        if rs != rd {
            let (lo, hi) = if rs < rd { (rs, rd) } else { (rd, rs) };
            parent[hi as usize] = lo;
        }
    }
    let labels: Vec<u32> = (0..n as u32).map(|v| find(&mut parent, v)).collect();
    Partition::from_labels(&labels)
}
