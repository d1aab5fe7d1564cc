//! Strong connectivity: Tarjan's algorithm and condensation.

use crate::error::Result;
use crate::graph::{VertexId, WeightedDigraph};
use crate::ops::{factor, FactorGraph};
use crate::partition::Partition;

/// Strongly connected components as a partition. Iterative Tarjan, so deep
/// chains do not overflow the call stack.
pub fn strongly_connected_components(graph: &WeightedDigraph) -> Partition {
    let n = graph.vertex_count();
    const UNVISITED: u32 = u32::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNVISITED; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut comp_count = 0u32;

    // Explicit DFS frames: (vertex, next out-edge position).
    let mut frames: Vec<(u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if index[root as usize] != UNVISITED {
            continue;
        }
        frames.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            let succs = graph.out_neighbors(v);
            if *pos < succs.len() {
                let w = succs[*pos];
                *pos += 1;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w as usize] = false;
                        comp[w as usize] = comp_count;
                        if w == v {
                            break;
                        }
                    }
                    comp_count += 1;
                }
            }
        }
    }
    Partition::from_labels(&comp)
}

/// Condenses the graph by its strongly connected components. The result is
/// acyclic; cross-component weights are summed.
pub fn condense_scc(graph: &WeightedDigraph) -> FactorGraph {
    let sccs = strongly_connected_components(graph);
    factor(graph, &sccs).expect("scc partition matches graph")
}

/// Topological order of an acyclic graph, or `None` if a cycle exists.
pub fn topological_order(graph: &WeightedDigraph) -> Option<Vec<VertexId>> {
    let n = graph.vertex_count();
    let mut in_degree = vec![0usize; n];
    for (_, d, _) in graph.edges() {
        in_degree[d as usize] += 1;
    }
    let mut ready: Vec<u32> = (0..n as u32).filter(|&v| in_degree[v as usize] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in graph.out_neighbors(v) {
            in_degree[w as usize] -= 1;
            if in_degree[w as usize] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_acyclic(graph: &WeightedDigraph) -> bool {
    topological_order(graph).is_some()
}

/// Checked variant for callers that promised an acyclic input.
pub fn require_acyclic(graph: &WeightedDigraph) -> Result<()> {
    if is_acyclic(graph) {
        Ok(())
    } else {
        Err(crate::error::EqRankError::CyclicGraph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_plus_tail() {
        // a<->b, b->c: blocks {a,b} and {c}, one edge between them.
        let g = WeightedDigraph::new(3, vec![(0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0)]).unwrap();
        let f = condense_scc(&g);
        assert_eq!(f.projection.block_count(), 2);
        assert_eq!(f.projection.members(0), &[0, 1]);
        assert_eq!(f.projection.members(1), &[2]);
        assert_eq!(f.graph.edges().collect::<Vec<_>>(), vec![(0, 1, 1.0)]);
    }

    #[test]
    fn dag_condenses_to_itself() {
        let g = WeightedDigraph::new(4, vec![(0, 1, 1.0), (1, 2, 2.0), (0, 3, 3.0)]).unwrap();
        let f = condense_scc(&g);
        assert!(f.projection.is_singletons());
        assert_eq!(
            f.graph.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn two_cycles_bridged_one_direction() {
        // Two 2-cycles {0,1} and {2,3} with weight-1 bridges 0->2 and 1->3.
        // Condensation: 2 blocks and a single factor edge of summed weight 2.
        let g = WeightedDigraph::new(
            4,
            vec![
                (0, 1, 1.0),
                (1, 0, 1.0),
                (2, 3, 1.0),
                (3, 2, 1.0),
                (0, 2, 1.0),
                (1, 3, 1.0),
            ],
        )
        .unwrap();
        let f = condense_scc(&g);
        assert_eq!(f.projection.block_count(), 2);
        assert_eq!(f.graph.edges().collect::<Vec<_>>(), vec![(0, 1, 2.0)]);
        assert!(is_acyclic(&f.graph));
    }

    #[test]
    fn mutual_bridges_merge_everything() {
        let g = WeightedDigraph::new(
            4,
            vec![
                (0, 1, 1.0),
                (1, 0, 1.0),
                (2, 3, 1.0),
                (3, 2, 1.0),
                (1, 2, 1.0),
                (2, 1, 1.0),
            ],
        )
        .unwrap();
        let f = condense_scc(&g);
        assert_eq!(f.projection.block_count(), 1);
        assert_eq!(f.graph.edge_count(), 0);
    }

    #[test]
    fn condensation_is_always_acyclic() {
        let g = WeightedDigraph::new(
            5,
            vec![
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 0, 1.0),
                (2, 3, 1.0),
                (3, 4, 1.0),
                (4, 3, 1.0),
            ],
        )
        .unwrap();
        let f = condense_scc(&g);
        assert!(is_acyclic(&f.graph));
        assert!(!is_acyclic(&g));
    }

    #[test]
    fn deep_chain_does_not_overflow() {
        let n = 200_000;
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|v| (v as u32, v as u32 + 1)).collect();
        let g = WeightedDigraph::from_unit_edges(n, &edges).unwrap();
        let p = strongly_connected_components(&g);
        assert_eq!(p.block_count(), n);
    }
}
