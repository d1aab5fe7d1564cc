//! Partitions of a vertex set into disjoint blocks.

use crate::error::{EqRankError, Result};
use crate::graph::VertexId;

pub type BlockId = u32;

/// A partition of `0..n` into nonempty disjoint blocks.
///
/// Blocks are always stored in canonical form: each block's members sorted
/// ascending, and block ids assigned by the smallest contained vertex, so
/// equal partitions compare equal and output is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<BlockId>,
    blocks: Vec<Vec<VertexId>>,
}

impl Partition {
    /// Builds a partition from arbitrary per-vertex labels; labels are
    /// renumbered canonically.
    pub fn from_labels(labels: &[u32]) -> Self {
        let n = labels.len();
        // Renumber labels by first appearance. Scanning vertices in ascending
        // order, a label's first appearance is its block's smallest member,
        // so first-appearance order is already the canonical order.
        let mut remap = std::collections::HashMap::new();
        let mut assignment = vec![0 as BlockId; n];
        for (v, &lab) in labels.iter().enumerate() {
            let next = remap.len() as u32;
            assignment[v] = *remap.entry(lab).or_insert(next);
        }
        let mut blocks: Vec<Vec<VertexId>> = vec![Vec::new(); remap.len()];
        for (v, &b) in assignment.iter().enumerate() {
            blocks[b as usize].push(v as VertexId);
        }
        Self { assignment, blocks }
    }

    /// Builds a partition from explicit blocks covering `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut labels = vec![u32::MAX; n];
        for (b, members) in blocks.iter().enumerate() {
            if members.is_empty() {
                return Err(EqRankError::PartitionMismatch("empty block".into()));
            }
            for &v in members {
                if v as usize >= n {
                    return Err(EqRankError::PartitionMismatch(format!(
                        "vertex {v} out of range"
                    )));
                }
                if labels[v as usize] != u32::MAX {
                    return Err(EqRankError::PartitionMismatch(format!(
                        "vertex {v} assigned twice"
                    )));
                }
                labels[v as usize] = b as u32;
            }
        }
        if labels.iter().any(|&l| l == u32::MAX) {
            return Err(EqRankError::PartitionMismatch(
                "blocks do not cover all vertices".into(),
            ));
        }
        Ok(Self::from_labels(&labels))
    }

    /// All-singletons partition.
    pub fn singletons(n: usize) -> Self {
        Self {
            assignment: (0..n as u32).collect(),
            blocks: (0..n as u32).map(|v| vec![v]).collect(),
        }
    }

    /// Everything in one block (empty partition for n = 0).
    pub fn single_block(n: usize) -> Self {
        if n == 0 {
            return Self {
                assignment: Vec::new(),
                blocks: Vec::new(),
            };
        }
        Self {
            assignment: vec![0; n],
            blocks: vec![(0..n as u32).collect()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: VertexId) -> BlockId {
        self.assignment[v as usize]
    }

    pub fn assignment(&self) -> &[BlockId] {
        &self.assignment
    }

    pub fn members(&self, b: BlockId) -> &[VertexId] {
        &self.blocks[b as usize]
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.assignment.len()
    }

    /// True when every block of `self` is contained in one block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.vertex_count() != coarser.vertex_count() {
            return false;
        }
        self.blocks.iter().all(|members| {
            let target = coarser.block_of(members[0]);
            members.iter().all(|&v| coarser.block_of(v) == target)
        })
    }

    /// Common refinement: x ~ y iff equivalent under both `self` and `other`.
    pub fn intersect(&self, other: &Partition) -> Result<Partition> {
        if self.vertex_count() != other.vertex_count() {
            return Err(EqRankError::PartitionMismatch(format!(
                "{} vs {} vertices",
                self.vertex_count(),
                other.vertex_count()
            )));
        }
        let mut key_ids = std::collections::HashMap::new();
        let mut labels = vec![0u32; self.vertex_count()];
        for v in 0..self.vertex_count() {
            let key = (self.assignment[v], other.assignment[v]);
            let next = key_ids.len() as u32;
            labels[v] = *key_ids.entry(key).or_insert(next);
        }
        Ok(Partition::from_labels(&labels))
    }
}
