//! Self-consistent hierarchical clustering of directed weighted graphs.
//!
//! The core idea: vertices are equivalent if the vertices they point to (or
//! the vertices pointing to them) are equivalent. Concretely, after keeping
//! only maximally weighted links and condensing strong components, two
//! vertices fall in the same block when they reach the same sinks — the same
//! "root authorities" along outgoing links and the same "root hubs" along
//! incoming ones. Factoring the graph by that partition and repeating yields
//! a hierarchy whose depth the graph itself determines.
//!
//! Around the kernel sits a citation-network pipeline: link weights
//! synthesized from co-citation and bibliographic coupling, absorption of
//! sub-cutoff themes into their closest neighbor, title-based theme labels,
//! per-paper and per-author authority/hub rankings, community-index quality
//! scores, and per-theme yearly trend classification.

pub mod error;
pub mod evaluation;
pub mod generate;
pub mod graph;
pub mod hierarchy;
pub mod io;
pub mod labels;
pub mod meta;
pub mod ops;
pub mod partition;
pub mod ranking;
pub mod relations;
pub mod roots;
pub mod scc;
pub mod themes;
pub mod weights;

pub use error::{EqRankError, Result};
pub use graph::{IdMap, VertexId, WeightedDigraph};
pub use hierarchy::{eqrank_hierarchy, eqrank_hierarchy_with, Hierarchy};
pub use ops::{factor, invert, max_links, sinks, weakly_connected_components, FactorGraph};
pub use partition::{BlockId, Partition};
pub use relations::{
    auth_relation, eqrank_analysis, eqrank_prime_oracle, eqrank_relation, hub_relation,
};
pub use roots::{root_sets, RootAssignment};
pub use scc::{condense_scc, strongly_connected_components};
pub use themes::{absorb_small_themes, build_theme_hierarchy, CutoffConfig, Theme, ThemeHierarchy};
pub use weights::{compute_weights, degree_stats, WeightConfig};
