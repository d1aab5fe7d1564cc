//! Iterated EqRank reduction to a fixed point.

use crate::error::Result;
use crate::graph::{VertexId, WeightedDigraph};
use crate::ops::{factor, FactorGraph};
use crate::partition::Partition;
use crate::relations::eqrank_relation;

/// The sequence of reduced graphs. `levels[0]` is the input graph under the
/// identity projection; each later level factors the previous one by its
/// EqRank partition. Vertex counts strictly decrease between stored levels;
/// the sequence stops at the first graph EqRank leaves the same size (that
/// fixed point is the last stored level, not duplicated).
#[derive(Debug, Clone)]
pub struct Hierarchy {
    pub levels: Vec<FactorGraph>,
    pub terminal: bool,
}

impl Hierarchy {
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.graph.vertex_count()).collect()
    }

    /// Maps every level-0 vertex to its block at `level` by composing the
    /// projections.
    pub fn composed_assignment(&self, level: usize) -> Vec<u32> {
        let n = self.levels[0].graph.vertex_count();
        let mut assignment: Vec<u32> = (0..n as u32).collect();
        for fac in &self.levels[1..=level] {
            for slot in assignment.iter_mut() {
                *slot = fac.projection.block_of(*slot);
            }
        }
        assignment
    }

    /// Original members of every block at `level`.
    pub fn level_members(&self, level: usize) -> Vec<Vec<VertexId>> {
        let assignment = self.composed_assignment(level);
        let mut members = vec![Vec::new(); self.levels[level].graph.vertex_count()];
        for (v, &b) in assignment.iter().enumerate() {
            members[b as usize].push(v as VertexId);
        }
        members
    }
}

/// Iterates `G_i = G_{i-1} / EqRank(G_{i-1})` until the vertex count stops
/// decreasing.
pub fn eqrank_hierarchy(graph: &WeightedDigraph) -> Hierarchy {
    eqrank_hierarchy_with(graph, |_, _, partition| Ok(partition))
        .expect("identity hook cannot fail")
}

/// Same, with a per-level hook that may adjust the partition before
/// factoring (level indices start at 1). This is where a cutoff pass is
/// interposed without changing the kernel itself.
pub fn eqrank_hierarchy_with<F>(graph: &WeightedDigraph, mut hook: F) -> Result<Hierarchy>
where
    F: FnMut(usize, &WeightedDigraph, Partition) -> Result<Partition>,
{
    let mut levels = vec![FactorGraph::identity(graph.clone())];
    let mut level = 1;
    loop {
        let current = &levels.last().unwrap().graph;
        let raw = eqrank_relation(current);
        let partition = hook(level, current, raw)?;
        if partition.block_count() == current.vertex_count() {
            // Fixed point: factoring would reproduce a graph of equal size.
            break;
        }
        let next = factor(current, &partition)?;
        levels.push(next);
        level += 1;
    }
    Ok(Hierarchy {
        levels,
        terminal: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_terminates_immediately() {
        let g = WeightedDigraph::new(1, vec![]).unwrap();
        let h = eqrank_hierarchy(&g);
        assert_eq!(h.level_count(), 1);
        assert!(h.terminal);
    }

    #[test]
    fn all_singletons_is_a_fixed_point() {
        // Isolated vertices are their own root in both directions, so
        // EqRank is all-singletons and the input is already terminal.
        let g = WeightedDigraph::new(2, vec![]).unwrap();
        assert!(eqrank_relation(&g).is_singletons());
        let h = eqrank_hierarchy(&g);
        assert_eq!(h.level_count(), 1);
    }

    #[test]
    fn chain_reduces_to_one_vertex() {
        let g = WeightedDigraph::from_unit_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = eqrank_hierarchy(&g);
        assert_eq!(h.level_sizes(), vec![4, 1]);
        assert_eq!(h.composed_assignment(1), vec![0, 0, 0, 0]);
    }

    #[test]
    fn strictly_decreasing_level_sizes() {
        let g = WeightedDigraph::new(
            8,
            vec![
                (2, 0, 3.0),
                (3, 0, 1.0),
                (4, 1, 1.0),
                (5, 1, 3.0),
                (6, 2, 2.0),
                (6, 4, 1.0),
                (7, 5, 2.0),
                (7, 3, 1.0),
            ],
        )
        .unwrap();
        let h = eqrank_hierarchy(&g);
        let sizes = h.level_sizes();
        for w in sizes.windows(2) {
            assert!(w[1] < w[0], "sizes must strictly decrease: {sizes:?}");
        }
        assert!(h.level_count() <= g.vertex_count() + 1);
    }

    #[test]
    fn hook_can_coarsen_level_one() {
        let g = WeightedDigraph::from_unit_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let h = eqrank_hierarchy_with(&g, |level, _, p| {
            if level == 1 {
                Ok(Partition::single_block(p.vertex_count()))
            } else {
                Ok(p)
            }
        })
        .unwrap();
        assert_eq!(h.level_sizes(), vec![4, 1]);
    }

    #[test]
    fn composed_membership_covers_everything() {
        let g = WeightedDigraph::from_unit_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let h = eqrank_hierarchy(&g);
        let top = h.level_count() - 1;
        let members = h.level_members(top);
        let total: usize = members.iter().map(|m| m.len()).sum();
        assert_eq!(total, 5);
        for m in &members {
            assert!(!m.is_empty());
        }
    }
}
