//! Brute-force reference implementations used as test oracles.
//!
//! Everything here recomputes results from first principles — dense
//! reachability matrices, quadratic scans, mutual-reachability components —
//! and deliberately shares no code path with the library internals it
//! checks.

#![allow(dead_code)]

use eqrank::graph::{VertexId, WeightedDigraph};
use eqrank::partition::Partition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense reachability: `reach[x][y]` iff y is reachable from x (self
/// included), by iterating closure until it stops changing.
pub fn reach_matrix(g: &WeightedDigraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
    }
    for (s, d, _) in g.edges() {
        reach[s as usize][d as usize] = true;
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if !reach[x][y] {
                    continue;
                }
                for z in 0..n {
                    if reach[y][z] && !reach[x][z] {
                        reach[x][z] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return reach;
        }
    }
}

/// Strong components by mutual reachability.
pub fn scc_oracle(g: &WeightedDigraph) -> Partition {
    let n = g.vertex_count();
    let reach = reach_matrix(g);
    let mut labels = vec![u32::MAX; n];
    let mut next = 0u32;
    for v in 0..n {
        if labels[v] != u32::MAX {
            continue;
        }
        for w in 0..n {
            if reach[v][w] && reach[w][v] {
                labels[w] = next;
            }
        }
        next += 1;
    }
    Partition::from_labels(&labels)
}

/// Max-link edge selection by quadratic scan over the full edge list.
pub fn max_links_oracle(g: &WeightedDigraph) -> Vec<(VertexId, VertexId, f64)> {
    let edges: Vec<_> = g.edges().collect();
    let mut kept = Vec::new();
    for v in 0..g.vertex_count() as u32 {
        let outgoing: Vec<_> = edges.iter().filter(|e| e.0 == v).collect();
        if outgoing.is_empty() {
            continue;
        }
        let best = outgoing.iter().map(|e| e.2).fold(f64::NEG_INFINITY, f64::max);
        kept.extend(outgoing.into_iter().filter(|e| e.2 == best).copied());
    }
    kept
}

/// Root sets over an acyclic graph: sinks reachable from each vertex,
/// straight from the dense reachability matrix.
pub fn root_sets_oracle(g: &WeightedDigraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let reach = reach_matrix(g);
    let sinks: Vec<usize> = (0..n).filter(|&v| g.out_degree(v as u32) == 0).collect();
    (0..n)
        .map(|v| {
            sinks
                .iter()
                .filter(|&&s| reach[v][s])
                .map(|&s| s as VertexId)
                .collect()
        })
        .collect()
}

/// AuthR from first principles: max links, mutual-reachability components,
/// sink-component reachability, grouped by equal root sets.
pub fn auth_relation_oracle(g: &WeightedDigraph) -> Partition {
    let kept = max_links_oracle(g);
    let pruned = WeightedDigraph::new(g.vertex_count(), kept).unwrap();
    let comps = scc_oracle(&pruned);
    let mut factor_edges = std::collections::BTreeSet::new();
    for (s, d, _) in pruned.edges() {
        let (bs, bd) = (comps.block_of(s), comps.block_of(d));
        if bs != bd {
            factor_edges.insert((bs, bd));
        }
    }
    let condensed = WeightedDigraph::from_unit_edges(
        comps.block_count(),
        &factor_edges.into_iter().collect::<Vec<_>>(),
    )
    .unwrap();
    let roots = root_sets_oracle(&condensed);
    // Group original vertices by the root set of their component.
    let mut key_ids: std::collections::HashMap<Vec<u32>, u32> = std::collections::HashMap::new();
    let labels: Vec<u32> = (0..g.vertex_count() as u32)
        .map(|v| {
            let key = roots[comps.block_of(v) as usize].clone();
            let next = key_ids.len() as u32;
            *key_ids.entry(key).or_insert(next)
        })
        .collect();
    Partition::from_labels(&labels)
}

pub fn hub_relation_oracle(g: &WeightedDigraph) -> Partition {
    let inverted: Vec<_> = g.edges().map(|(s, d, w)| (d, s, w)).collect();
    auth_relation_oracle(&WeightedDigraph::new(g.vertex_count(), inverted).unwrap())
}

/// Dense co-citation / bibliographic-coupling counts for one edge.
pub fn dense_weight_oracle(g: &WeightedDigraph, a: f64) -> Vec<(VertexId, VertexId, f64)> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (s, d, _) in g.edges() {
        adj[s as usize][d as usize] = true;
    }
    g.edges()
        .map(|(x, y, _)| {
            let mut cocitation = 0usize;
            let mut coupling = 0usize;
            for p in 0..n {
                if adj[p][x as usize] && adj[p][y as usize] {
                    cocitation += 1;
                }
                if adj[x as usize][p] && adj[y as usize][p] {
                    coupling += 1;
                }
            }
            (x, y, a * cocitation as f64 + (1.0 - a) * coupling as f64)
        })
        .collect()
}

/// Random digraph (cycles allowed) with integer weights in 1..=9.
pub fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize) -> WeightedDigraph {
    let n = rng.gen_range(1..=max_n);
    let max_edges = n * (n.saturating_sub(1));
    let m = if max_edges == 0 {
        0
    } else {
        rng.gen_range(0..=max_edges.min(3 * n))
    };
    let mut set = std::collections::BTreeSet::new();
    for _ in 0..m {
        let s = rng.gen_range(0..n) as u32;
        let d = rng.gen_range(0..n) as u32;
        if s != d {
            set.insert((s, d));
        }
    }
    let edges: Vec<(u32, u32, f64)> = set
        .into_iter()
        .map(|(s, d)| (s, d, rng.gen_range(1..=9) as f64))
        .collect();
    WeightedDigraph::new(n, edges).unwrap()
}

/// Random DAG: edges only from higher to lower ids, integer weights.
pub fn random_dag(rng: &mut ChaCha8Rng, max_n: usize) -> WeightedDigraph {
    let n = rng.gen_range(1..=max_n);
    let mut set = std::collections::BTreeSet::new();
    let m = rng.gen_range(0..=(n * 2));
    for _ in 0..m {
        let s = rng.gen_range(0..n) as u32;
        let d = rng.gen_range(0..n) as u32;
        if s > d {
            set.insert((s, d));
        }
    }
    let edges: Vec<(u32, u32, f64)> = set
        .into_iter()
        .map(|(s, d)| (s, d, rng.gen_range(1..=9) as f64))
        .collect();
    WeightedDigraph::new(n, edges).unwrap()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
