//! Clustering-quality and dynamics analytics.

use crate::error::{EqRankError, Result};
use crate::graph::{VertexId, WeightedDigraph};
use crate::meta::MetaStore;

/// Ratio of inner link weight to inner-plus-outgoing link weight of a
/// vertex subset. Inner links join two members; outer links start at a
/// member and leave the subset (incoming links do not count). A subset with
/// no weight on links starting inside it gets index 1, the limit of the
/// ratio. Above 0.5 the subset is an "ideal community": its members point
/// at each other more than they point outside.
pub fn community_index(graph: &WeightedDigraph, members: &[VertexId]) -> Result<f64> {
    if members.is_empty() {
        return Err(EqRankError::EmptyInput("community of no vertices".into()));
    }
    let mut inside = vec![false; graph.vertex_count()];
    for &v in members {
        inside[v as usize] = true;
    }
    let mut inner = 0.0;
    let mut outer = 0.0;
    for &v in members {
        for (d, w) in graph.out_edges(v) {
            if inside[d as usize] {
                inner += w;
            } else {
                outer += w;
            }
        }
    }
    if inner + outer == 0.0 {
        return Ok(1.0);
    }
    Ok(inner / (inner + outer))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThemeCommunity {
    pub theme: u32,
    pub size: usize,
    pub index: f64,
    pub ideal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommunityReport {
    pub themes: Vec<ThemeCommunity>,
    /// Size-weighted mean of the indices.
    pub weighted_mean: f64,
}

/// Community indices for the themes of one level, plus their size-weighted
/// mean. `themes` supplies `(theme id, members)` pairs in the graph's own
/// vertex ids.
pub fn community_report(
    graph: &WeightedDigraph,
    themes: &[(u32, &[VertexId])],
) -> Result<CommunityReport> {
    let mut out = Vec::with_capacity(themes.len());
    let mut weighted = 0.0;
    let mut total = 0usize;
    for &(id, members) in themes {
        let index = community_index(graph, members)?;
        weighted += members.len() as f64 * index;
        total += members.len();
        out.push(ThemeCommunity {
            theme: id,
            size: members.len(),
            index,
            ideal: index > 0.5,
        });
    }
    let weighted_mean = if total == 0 {
        0.0
    } else {
        weighted / total as f64
    };
    Ok(CommunityReport {
        themes: out,
        weighted_mean,
    })
}

/// Evolution trend of a theme's yearly paper counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrendClass {
    /// "+": counts grow over the window.
    Growing,
    /// "-": counts decline.
    Fading,
    /// "0": counts stay flat.
    Stable,
    /// "++": the final year explodes past the earlier average.
    Emergent,
}

impl std::fmt::Display for TrendClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TrendClass::Growing => "+",
            TrendClass::Fading => "-",
            TrendClass::Stable => "0",
            TrendClass::Emergent => "++",
        };
        f.write_str(s)
    }
}

/// Thresholds for the trend classifier. The paper counts are classified
/// "++" when the last year exceeds `burst_factor` times the mean of the
/// earlier years; otherwise by the sign of the least-squares slope against
/// a dead zone of `epsilon_frac` times the mean yearly count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrendConfig {
    pub epsilon_frac: f64,
    pub burst_factor: f64,
}

impl Default for TrendConfig {
    fn default() -> Self {
        Self {
            epsilon_frac: 0.05,
            burst_factor: 2.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrendEntry {
    pub theme: u32,
    /// `(year, papers)` for every year of the window, zeros included.
    pub yearly: Vec<(i32, usize)>,
    pub slope: f64,
    /// `None` when fewer than two window years carry data.
    pub class: Option<TrendClass>,
    pub dated_members: usize,
}

/// Yearly counts, fitted slope and trend class for one theme. The window
/// defaults to the span of the members' own dates.
pub fn theme_dynamics(
    theme: u32,
    members: &[VertexId],
    meta: &MetaStore,
    window: Option<(i32, i32)>,
    cfg: &TrendConfig,
) -> TrendEntry {
    let window = window.or_else(|| meta.year_span(members));
    let Some((lo, hi)) = window else {
        return TrendEntry {
            theme,
            yearly: Vec::new(),
            slope: 0.0,
            class: None,
            dated_members: 0,
        };
    };
    let mut counts: Vec<usize> = vec![0; (hi - lo + 1).max(0) as usize];
    let mut dated = 0usize;
    for &v in members {
        if let Some(doc) = meta.get(v) {
            dated += 1;
            if (lo..=hi).contains(&doc.year) {
                counts[(doc.year - lo) as usize] += 1;
            }
        }
    }
    let yearly: Vec<(i32, usize)> = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| (lo + i as i32, c))
        .collect();

    let years_with_data = yearly.iter().filter(|(_, c)| *c > 0).count();
    if yearly.len() < 2 || years_with_data < 2 {
        return TrendEntry {
            theme,
            yearly,
            slope: 0.0,
            class: None,
            dated_members: dated,
        };
    }

    // Least squares over all window years, zeros included.
    let n = yearly.len() as f64;
    let mean_x = yearly.iter().map(|(y, _)| *y as f64).sum::<f64>() / n;
    let mean_y = yearly.iter().map(|(_, c)| *c as f64).sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for &(y, c) in &yearly {
        let dx = y as f64 - mean_x;
        sxy += dx * (c as f64 - mean_y);
        sxx += dx * dx;
    }
    let slope = sxy / sxx;

    let last = yearly.last().unwrap().1 as f64;
    let prior_mean = yearly[..yearly.len() - 1]
        .iter()
        .map(|(_, c)| *c as f64)
        .sum::<f64>()
        / (yearly.len() - 1) as f64;
    let epsilon = cfg.epsilon_frac * mean_y;
    let class = if last > cfg.burst_factor * prior_mean {
        TrendClass::Emergent
    } else if slope > epsilon {
        TrendClass::Growing
    } else if slope < -epsilon {
        TrendClass::Fading
    } else {
        TrendClass::Stable
    };
    TrendEntry {
        theme,
        yearly,
        slope,
        class: Some(class),
        dated_members: dated,
    }
}

/// Fraction of an external reference list contained in the theme.
pub fn reference_overlap(members: &[VertexId], external: &[VertexId]) -> Result<f64> {
    if external.is_empty() {
        return Err(EqRankError::EmptyInput("external reference list".into()));
    }
    let member_set: std::collections::HashSet<VertexId> = members.iter().copied().collect();
    let hits = external.iter().filter(|v| member_set.contains(v)).count();
    Ok(hits as f64 / external.len() as f64)
}

/// Resolves external string ids against the graph's id map; unresolved ids
/// are returned separately for reporting, never silently dropped.
pub fn resolve_external_ids(
    graph: &WeightedDigraph,
    ids: &[String],
) -> (Vec<VertexId>, Vec<String>) {
    let mut resolved = Vec::new();
    let mut unresolved = Vec::new();
    for id in ids {
        match graph.ids().and_then(|map| map.lookup(id)) {
            Some(v) => resolved.push(v),
            None => unresolved.push(id.clone()),
        }
    }
    resolved.sort_unstable();
    resolved.dedup();
    (resolved, unresolved)
}

/// Double-counting check for a level's community sums: every edge starts in
/// exactly one theme of a partition, so summing inner-plus-outgoing weight
/// over all themes covers each edge once and equals the graph's total
/// edge weight.
pub fn community_weight_conservation(
    graph: &WeightedDigraph,
    themes: &[&[VertexId]],
) -> (f64, f64) {
    let mut covered = 0.0;
    for members in themes {
        for &v in *members {
            for (_, w) in graph.out_edges(v) {
                covered += w;
            }
        }
    }
    (covered, graph.total_weight())
}
