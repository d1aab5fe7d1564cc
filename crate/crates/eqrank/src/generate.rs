//! Reproducible random graphs for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};

/// Generator families. All output unit weights; run the weight synthesis or
/// assign weights afterwards as needed.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphModel {
    /// Directed Erdős–Rényi: each ordered pair gets an edge independently
    /// with probability `avg_degree / (n - 1)`.
    Poisson { vertices: usize, avg_degree: f64 },
    /// Vertices arranged in layers; each vertex points to random vertices
    /// of earlier layers. One layer means no edges.
    LayeredDag {
        layers: usize,
        layer_width: usize,
        out_degree: usize,
    },
    /// Citation-shaped: vertex v > 0 cites earlier vertices, targets chosen
    /// by preferential attachment, so the result is acyclic with a heavy
    /// in-degree tail.
    CitationLike {
        vertices: usize,
        avg_out_degree: f64,
    },
}

/// Generates a graph for the model; identical `(model, seed)` pairs yield
/// identical graphs.
pub fn generate_test_graph(model: &GraphModel, seed: u64) -> Result<WeightedDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *model {
        GraphModel::Poisson {
            vertices,
            avg_degree,
        } => {
            if avg_degree < 0.0 || !avg_degree.is_finite() {
                return Err(EqRankError::Config(format!(
                    "avg_degree must be nonnegative, got {avg_degree}"
                )));
            }
            let p = if vertices > 1 {
                (avg_degree / (vertices as f64 - 1.0)).min(1.0)
            } else {
                0.0
            };
            let mut edges = Vec::new();
            for s in 0..vertices as VertexId {
                for d in 0..vertices as VertexId {
                    if s != d && rng.gen_bool(p) {
                        edges.push((s, d));
                    }
                }
            }
            WeightedDigraph::from_unit_edges(vertices, &edges)
        }
        GraphModel::LayeredDag {
            layers,
            layer_width,
            out_degree,
        } => {
            if layers == 0 || layer_width == 0 {
                return Err(EqRankError::Config(
                    "layers and layer_width must be positive".into(),
                ));
            }
            let n = layers * layer_width;
            let mut edges = Vec::new();
            for layer in 1..layers {
                for slot in 0..layer_width {
                    let v = (layer * layer_width + slot) as VertexId;
                    let earlier = layer * layer_width;
                    let mut picked = std::collections::BTreeSet::new();
                    for _ in 0..out_degree.min(earlier) {
                        // Retry a few times on collision; the cap keeps the
                        // loop bounded when out_degree approaches `earlier`.
                        for _ in 0..16 {
                            let t = rng.gen_range(0..earlier) as VertexId;
                            if picked.insert(t) {
                                break;
                            }
                        }
                    }
                    edges.extend(picked.into_iter().map(|t| (v, t)));
                }
            }
            WeightedDigraph::from_unit_edges(n, &edges)
        }
        GraphModel::CitationLike {
            vertices,
            avg_out_degree,
        } => {
            if avg_out_degree < 1.0 || !avg_out_degree.is_finite() {
                return Err(EqRankError::Config(format!(
                    "avg_out_degree must be at least 1, got {avg_out_degree}"
                )));
            }
            let max_refs = (2.0 * avg_out_degree).round() as usize - 1;
            let mut edges = Vec::new();
            // Endpoints of earlier edges; sampling from this list is what
            // produces preferential attachment.
            let mut attach: Vec<VertexId> = vec![0];
            for v in 1..vertices as VertexId {
                let refs = rng.gen_range(1..=max_refs.max(1)).min(v as usize);
                let mut picked = std::collections::BTreeSet::new();
                for _ in 0..refs {
                    for _ in 0..16 {
                        let t = if rng.gen_bool(0.3) {
                            rng.gen_range(0..v)
                        } else {
                            attach[rng.gen_range(0..attach.len())]
                        };
                        if t < v && picked.insert(t) {
                            break;
                        }
                    }
                }
                for &t in &picked {
                    edges.push((v, t));
                    attach.push(t);
                }
                attach.push(v);
            }
            WeightedDigraph::from_unit_edges(vertices, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scc::is_acyclic;

    #[test]
    fn single_layer_dag_is_edgeless() {
        let g = generate_test_graph(
            &GraphModel::LayeredDag {
                layers: 1,
                layer_width: 5,
                out_degree: 3,
            },
            7,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn same_seed_same_graph() {
        let model = GraphModel::CitationLike {
            vertices: 200,
            avg_out_degree: 5.0,
        };
        let a = generate_test_graph(&model, 42).unwrap();
        let b = generate_test_graph(&model, 42).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = generate_test_graph(&model, 43).unwrap();
        assert_ne!(
            a.edges().collect::<Vec<_>>(),
            c.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn citation_like_is_acyclic() {
        let g = generate_test_graph(
            &GraphModel::CitationLike {
                vertices: 1000,
                avg_out_degree: 6.0,
            },
            11,
        )
        .unwrap();
        assert!(is_acyclic(&g));
    }

    #[test]
    fn citation_like_hits_requested_density() {
        let g = generate_test_graph(
            &GraphModel::CitationLike {
                vertices: 5000,
                avg_out_degree: 12.0,
            },
            3,
        )
        .unwrap();
        let avg = g.edge_count() as f64 / g.vertex_count() as f64;
        assert!((8.0..16.0).contains(&avg), "avg out-degree {avg}");
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(generate_test_graph(
            &GraphModel::LayeredDag {
                layers: 0,
                layer_width: 3,
                out_degree: 1
            },
            0
        )
        .is_err());
        assert!(generate_test_graph(
            &GraphModel::Poisson {
                vertices: 10,
                avg_degree: -1.0
            },
            0
        )
        .is_err());
    }
}
