//! The three equivalence relations on graph vertices.
//!
//! * **AuthR** ("classic themes"): x ~ y iff x and y reach the same sinks in
//!   the SCC-condensation of the max-link graph. The shared sinks are the
//!   root authorities — typically seminal papers a line of work rests on.
//! * **HubR** ("modern themes"): the same on the inverted graph; shared
//!   sinks are the root hubs — recent papers nothing cites yet.
//! * **EqRank**: the common refinement of the two. Members of one block
//!   share both their root hubs and their root authorities.
//!
//! [`eqrank_prime_oracle`] is an intentionally different second route to the
//! same partitions on small acyclic graphs: it iterates the successor map on
//! subsets until it stabilizes, with no condensation, no topological order
//! and no root-set propagation. Tests hold the two routes against each other.

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};
use crate::ops::{invert, max_links};
use crate::partition::Partition;
use crate::roots::root_sets;
use crate::scc::{condense_scc, topological_order};

/// One relation's partition plus, per block, the shared root set flattened
/// to the graph's own vertex ids (members of the sink components).
#[derive(Debug, Clone)]
pub struct RelationAnalysis {
    pub partition: Partition,
    pub block_roots: Vec<Vec<VertexId>>,
}

/// AuthR analysis of `graph` (no inversion).
pub fn auth_analysis(graph: &WeightedDigraph) -> RelationAnalysis {
    analyze(graph)
}

/// HubR analysis of `graph` (root sets of the inverted max-link graph).
pub fn hub_analysis(graph: &WeightedDigraph) -> RelationAnalysis {
    analyze(&invert(graph))
}

fn analyze(graph: &WeightedDigraph) -> RelationAnalysis {
    let pruned = max_links(graph);
    let condensed = condense_scc(&pruned);
    let roots = root_sets(&condensed.graph).expect("condensation is acyclic");

    // Vertices inherit the root set of their strong component.
    let labels: Vec<u32> = (0..graph.vertex_count() as u32)
        .map(|v| roots.set_id(condensed.projection.block_of(v)))
        .collect();
    let partition = Partition::from_labels(&labels);

    let block_roots = partition
        .blocks()
        .iter()
        .map(|members| {
            let block = condensed.projection.block_of(members[0]);
            let mut flat: Vec<VertexId> = roots
                .set_of(block)
                .iter()
                .flat_map(|&sink_block| condensed.projection.members(sink_block).iter().copied())
                .collect();
            flat.sort_unstable();
            flat
        })
        .collect();

    RelationAnalysis {
        partition,
        block_roots,
    }
}

pub fn auth_relation(graph: &WeightedDigraph) -> Partition {
    auth_analysis(graph).partition
}

pub fn hub_relation(graph: &WeightedDigraph) -> Partition {
    hub_analysis(graph).partition
}

/// Both constituent analyses and their intersection.
#[derive(Debug, Clone)]
pub struct EqRankAnalysis {
    pub hub: RelationAnalysis,
    pub auth: RelationAnalysis,
    pub partition: Partition,
}

pub fn eqrank_analysis(graph: &WeightedDigraph) -> EqRankAnalysis {
    let hub = hub_analysis(graph);
    let auth = auth_analysis(graph);
    let partition = hub
        .partition
        .intersect(&auth.partition)
        .expect("both partitions cover the same graph");
    EqRankAnalysis {
        hub,
        auth,
        partition,
    }
}

pub fn eqrank_relation(graph: &WeightedDigraph) -> Partition {
    eqrank_analysis(graph).partition
}

/// Largest graph [`eqrank_prime_oracle`] accepts; subsets are u64 bitmasks.
pub const ORACLE_VERTEX_LIMIT: usize = 64;

/// Literal fixed-point computation of the recursive equivalence on a small
/// acyclic graph.
///
/// The successor map sends a vertex to the set of vertices it points to
/// (sinks map to themselves); extended to subsets by union. Starting from
/// each singleton `{v}`, the map is applied `n` times — beyond the longest
/// path everything has landed on sinks and stopped moving — and vertices
/// are equivalent iff the resulting subsets are equal. Equality on sink
/// subsets is the finest base relation, which makes this the finest
/// solution of the recursion.
pub fn eqrank_prime_oracle(graph: &WeightedDigraph) -> Result<Partition> {
    let n = graph.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(EqRankError::TooLarge {
            size: n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    if topological_order(graph).is_none() {
        return Err(EqRankError::CyclicGraph);
    }

    // step(mask) = union of successor images of every vertex in the mask.
    let image: Vec<u64> = (0..n as u32)
        .map(|v| {
            let succs = graph.out_neighbors(v);
            if succs.is_empty() {
                1u64 << v
            } else {
                succs.iter().fold(0u64, |m, &w| m | (1u64 << w))
            }
        })
        .collect();
    let step = |mask: u64| -> u64 {
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= image[v];
        }
        out
    };

    let mut final_masks = vec![0u64; n];
    for v in 0..n {
        let mut mask = 1u64 << v;
        for _ in 0..n {
            mask = step(mask);
        }
        final_masks[v] = mask;
    }

    let mut ids: std::collections::HashMap<u64, u32> = std::collections::HashMap::new();
    let labels: Vec<u32> = final_masks
        .iter()
        .map(|&m| {
            let next = ids.len() as u32;
            *ids.entry(m).or_insert(next)
        })
        .collect();
    Ok(Partition::from_labels(&labels))
}
