//! From raw partitions to themes: the cutoff pass and the two-stage
//! hierarchy over a weighted graph.

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};
use crate::hierarchy::Hierarchy;
use crate::ops::{factor, FactorGraph};
use crate::partition::Partition;
use crate::relations::eqrank_analysis;

/// Minimal number of papers a first-level theme must have to stand on its
/// own; smaller blocks are absorbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutoffConfig {
    pub f_cut: usize,
}

impl CutoffConfig {
    pub fn new(f_cut: usize) -> Result<Self> {
        if f_cut < 1 {
            return Err(EqRankError::Config("f_cut must be >= 1".into()));
        }
        Ok(Self { f_cut })
    }
}

impl Default for CutoffConfig {
    fn default() -> Self {
        Self { f_cut: 20 }
    }
}

/// Result of the absorption pass.
#[derive(Debug, Clone)]
pub struct AbsorbOutcome {
    pub partition: Partition,
    /// `(small block, target block)` pairs in the input partition's ids.
    pub merged: Vec<(u32, u32)>,
    /// Blocks of the output partition that stayed below the cutoff because
    /// they have no link weight to any actual theme.
    pub orphan_blocks: Vec<u32>,
    /// For each output block, the input block forming its surviving core:
    /// the actual theme others were merged into, or the orphan itself.
    pub core_blocks: Vec<u32>,
}

/// Merges every block smaller than the cutoff into the actual theme (block
/// of size >= f_cut) it shares the most total link weight with, counting
/// links in both directions. Ties go to the smaller target block id. Small
/// blocks with zero weight to every actual theme stay put and are reported
/// as orphans. All small blocks are evaluated against the original actual
/// themes in one pass; closeness never chains through other small blocks.
pub fn absorb_small_themes(
    graph: &WeightedDigraph,
    partition: &Partition,
    cfg: &CutoffConfig,
) -> Result<AbsorbOutcome> {
    if partition.vertex_count() != graph.vertex_count() {
        return Err(EqRankError::PartitionMismatch(format!(
            "partition over {} vertices applied to graph with {}",
            partition.vertex_count(),
            graph.vertex_count()
        )));
    }
    let is_actual: Vec<bool> = partition
        .blocks()
        .iter()
        .map(|b| b.len() >= cfg.f_cut)
        .collect();
    if !is_actual.iter().any(|&a| a) {
        let largest = partition.blocks().iter().map(|b| b.len()).max().unwrap_or(0);
        return Err(EqRankError::CutoffTooHigh {
            f_cut: cfg.f_cut,
            largest,
        });
    }

    // Undirected closeness between each small block and each actual theme,
    // accumulated in canonical edge order.
    let mut closeness: std::collections::HashMap<(u32, u32), f64> =
        std::collections::HashMap::new();
    for (s, d, w) in graph.edges() {
        let (bs, bd) = (partition.block_of(s), partition.block_of(d));
        if bs == bd {
            continue;
        }
        for (small, actual) in [(bs, bd), (bd, bs)] {
            if !is_actual[small as usize] && is_actual[actual as usize] {
                *closeness.entry((small, actual)).or_insert(0.0) += w;
            }
        }
    }

    let mut target: Vec<u32> = (0..partition.block_count() as u32).collect();
    let mut merged = Vec::new();
    let mut orphan_old_ids = Vec::new();
    for small in 0..partition.block_count() as u32 {
        if is_actual[small as usize] {
            continue;
        }
        let mut best: Option<(f64, u32)> = None;
        for actual in 0..partition.block_count() as u32 {
            if !is_actual[actual as usize] {
                continue;
            }
            let Some(&w) = closeness.get(&(small, actual)) else {
                continue;
            };
            if w <= 0.0 {
                continue;
            }
            // Strict comparison with ascending actual id: ties keep the
            // smaller block id.
            if best.map_or(true, |(bw, _)| w > bw) {
                best = Some((w, actual));
            }
        }
        match best {
            Some((_, actual)) => {
                target[small as usize] = actual;
                merged.push((small, actual));
            }
            None => orphan_old_ids.push(small),
        }
    }

    let labels: Vec<u32> = (0..graph.vertex_count() as u32)
        .map(|v| target[partition.block_of(v) as usize])
        .collect();
    let new_partition = Partition::from_labels(&labels);
    // Every vertex of a new block carries the same target label, which is
    // the input block id of the block's core.
    let core_blocks: Vec<u32> = new_partition
        .blocks()
        .iter()
        .map(|block| target[partition.block_of(block[0]) as usize])
        .collect();
    let orphan_blocks: Vec<u32> = orphan_old_ids
        .iter()
        .map(|&old| new_partition.block_of(partition.members(old)[0]))
        .collect();
    Ok(AbsorbOutcome {
        partition: new_partition,
        merged,
        orphan_blocks,
        core_blocks,
    })
}

/// A block enriched with everything reports need.
#[derive(Debug, Clone)]
pub struct Theme {
    /// Hierarchy level, starting at 1.
    pub level: usize,
    /// Block id at that level (also the vertex id in the next factor graph).
    pub id: u32,
    /// Original (level-0) vertex ids, ascending.
    pub members: Vec<VertexId>,
    /// Root hubs as vertices of the graph clustered at this level: for
    /// level 1 these are papers; for deeper levels, previous-level themes.
    pub root_hubs: Vec<VertexId>,
    /// Root authorities, same id space as `root_hubs`.
    pub root_authorities: Vec<VertexId>,
    /// Word pairs naming the theme; empty until labeling runs.
    pub label: Vec<(String, String)>,
    pub size: usize,
}

/// The full two-stage clustering of one weighted graph.
#[derive(Debug, Clone)]
pub struct ThemeHierarchy {
    pub hierarchy: Hierarchy,
    /// Themes per level; `levels[i]` holds level `i + 1`.
    pub levels: Vec<Vec<Theme>>,
    /// Number of informative levels: deeper levels count while they still
    /// group more than one vertex; a first level that immediately collapses
    /// to a single theme still counts as one.
    pub depth: usize,
    pub absorb_merged: Vec<(u32, u32)>,
    pub absorb_orphans: Vec<u32>,
}

/// Clusters a weighted graph: level 1 applies EqRank plus the cutoff
/// absorption; every later level applies plain EqRank to the factor graph
/// until the vertex count stops decreasing.
pub fn build_theme_hierarchy(
    graph: &WeightedDigraph,
    cfg: &CutoffConfig,
) -> Result<ThemeHierarchy> {
    let mut levels = vec![FactorGraph::identity(graph.clone())];
    let mut theme_levels: Vec<Vec<Theme>> = Vec::new();
    let mut absorb_merged = Vec::new();
    let mut absorb_orphans = Vec::new();

    // Original members per current-level vertex.
    let mut orig_members: Vec<Vec<VertexId>> =
        (0..graph.vertex_count() as u32).map(|v| vec![v]).collect();

    let mut level = 1usize;
    loop {
        let current = &levels.last().unwrap().graph;
        let analysis = eqrank_analysis(current);
        let raw = analysis.partition.clone();

        // Core block (in raw ids) per final block: after absorption a merged
        // theme keeps the root sets of its surviving actual theme.
        let (partition, cores) = if level == 1 {
            let outcome = absorb_small_themes(current, &raw, cfg)?;
            absorb_merged = outcome.merged;
            absorb_orphans = outcome.orphan_blocks.clone();
            (outcome.partition, outcome.core_blocks)
        } else {
            let cores = (0..raw.block_count() as u32).collect();
            (raw.clone(), cores)
        };

        if partition.block_count() == current.vertex_count() {
            break;
        }

        // Build this level's themes before factoring.
        let mut new_members: Vec<Vec<VertexId>> = vec![Vec::new(); partition.block_count()];
        for (b, block) in partition.blocks().iter().enumerate() {
            for &v in block {
                new_members[b].extend_from_slice(&orig_members[v as usize]);
            }
            new_members[b].sort_unstable();
        }
        let themes = partition
            .blocks()
            .iter()
            .enumerate()
            .map(|(b, _)| {
                let rep = raw.members(cores[b])[0];
                let hub_block = analysis.hub.partition.block_of(rep);
                let auth_block = analysis.auth.partition.block_of(rep);
                Theme {
                    level,
                    id: b as u32,
                    members: new_members[b].clone(),
                    root_hubs: analysis.hub.block_roots[hub_block as usize].clone(),
                    root_authorities: analysis.auth.block_roots[auth_block as usize].clone(),
                    label: Vec::new(),
                    size: new_members[b].len(),
                }
            })
            .collect();
        theme_levels.push(themes);

        let next = factor(current, &partition)?;
        levels.push(next);
        orig_members = new_members;
        level += 1;
    }

    let hierarchy = Hierarchy {
        levels,
        terminal: true,
    };
    let depth = if theme_levels.is_empty() {
        0
    } else {
        let grouping = theme_levels
            .iter()
            .filter(|themes| themes.len() >= 2)
            .count();
        grouping.max(1)
    };
    Ok(ThemeHierarchy {
        hierarchy,
        levels: theme_levels,
        depth,
        absorb_merged,
        absorb_orphans,
    })
}
