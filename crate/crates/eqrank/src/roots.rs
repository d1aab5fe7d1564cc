//! Root sets: for each vertex of an acyclic graph, the set of sinks
//! reachable from it.
//!
//! Every vertex reaches itself by the empty path, so a sink's root set is
//! the singleton of itself; root sets are therefore always nonempty. Sets
//! are propagated in reverse topological order and hash-consed: each
//! distinct set is stored once, and a vertex whose successors all share one
//! set reuses it without copying. On max-link graphs most vertices have a
//! single successor, which is what makes this near-linear in practice.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::{VertexId, WeightedDigraph};
use crate::scc::topological_order;

/// Per-vertex root sets over an acyclic graph, interned so that set
/// equality is id equality.
#[derive(Debug, Clone)]
pub struct RootAssignment {
    set_ids: Vec<u32>,
    sets: Vec<Vec<VertexId>>,
}

impl RootAssignment {
    /// The root set of `v`: sorted, nonempty, a subset of the graph's sinks.
    pub fn set_of(&self, v: VertexId) -> &[VertexId] {
        &self.sets[self.set_ids[v as usize] as usize]
    }

    /// Interned id of `v`'s root set; two vertices share a root set iff
    /// their ids are equal.
    pub fn set_id(&self, v: VertexId) -> u32 {
        self.set_ids[v as usize]
    }

    pub fn set_ids(&self) -> &[u32] {
        &self.set_ids
    }

    pub fn distinct_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.set_ids.len()
    }
}

/// Computes root sets by reverse topological propagation.
///
/// Errors with [`crate::EqRankError::CyclicGraph`] if the input has a cycle;
/// callers are expected to pass condensed graphs.
pub fn root_sets(graph: &WeightedDigraph) -> Result<RootAssignment> {
    let order = topological_order(graph).ok_or(crate::error::EqRankError::CyclicGraph)?;
    let n = graph.vertex_count();
    let mut interner: HashMap<Vec<VertexId>, u32> = HashMap::new();
    let mut sets: Vec<Vec<VertexId>> = Vec::new();
    let mut set_ids = vec![u32::MAX; n];

    let mut intern = |set: Vec<VertexId>, sets: &mut Vec<Vec<VertexId>>| -> u32 {
        if let Some(&id) = interner.get(&set) {
            return id;
        }
        let id = sets.len() as u32;
        interner.insert(set.clone(), id);
        sets.push(set);
        id
    };

    // Reverse topological order: successors are finished first.
    for &v in order.iter().rev() {
        let succs = graph.out_neighbors(v);
        let id = if succs.is_empty() {
            intern(vec![v], &mut sets)
        } else {
            let first = set_ids[succs[0] as usize];
            if succs[1..].iter().all(|&w| set_ids[w as usize] == first) {
                first
            } else {
                let mut union: Vec<VertexId> = Vec::new();
                for &w in succs {
                    union.extend_from_slice(&sets[set_ids[w as usize] as usize]);
                }
                union.sort_unstable();
                union.dedup();
                intern(union, &mut sets)
            }
        };
        set_ids[v as usize] = id;
    }
    Ok(RootAssignment { set_ids, sets })
}
