//! Theme labels from member titles.
//!
//! A label is up to seven pairs of consecutive title words. Pairs are formed
//! after dropping stop words, so "condensation of the tachyon" yields the
//! pair (condensation, tachyon). Each pair is scored by how often it occurs
//! in the theme's titles times how specific it is to the theme:
//!
//! ```text
//! score(pair) = count_in_theme(pair) * ln(total_themes / themes_containing(pair))
//! ```
//!
//! Ties break by raw count, then lexicographically, so labels are
//! deterministic. Pairs appearing in every theme score zero and sink below
//! theme-specific pairs. Overlapping pairs sharing a word are emitted as-is.

use std::collections::{HashMap, HashSet};

use crate::graph::VertexId;
use crate::meta::MetaStore;

/// Number of word pairs in a full label.
pub const LABEL_PAIRS: usize = 7;

const BUILTIN_STOP_WORDS: &[&str] = &[
    "a", "an", "the", "and", "or", "nor", "but", "if", "then", "than", "so", "such", "of", "in",
    "on", "at", "to", "from", "by", "with", "for", "as", "into", "onto", "over", "under",
    "between", "among", "through", "during", "without", "within", "per", "about", "above",
    "below", "after", "before", "up", "down", "out", "off", "via", "versus", "vs", "is", "are",
    "was", "were", "be", "been", "being", "do", "does", "did", "done", "have", "has", "had",
    "having", "can", "could", "may", "might", "will", "would", "shall", "should", "must", "this",
    "that", "these", "those", "it", "its", "we", "our", "us", "you", "your", "they", "their",
    "them", "he", "she", "his", "her", "i", "my", "me", "not", "no", "some", "any", "each",
    "all", "both", "few", "more", "most", "other", "own", "same", "too", "very", "using",
    "based", "towards", "toward", "new", "note", "notes", "comment", "comments", "remarks",
];

/// Words skipped when forming title word pairs.
#[derive(Debug, Clone)]
pub struct StopList {
    words: HashSet<String>,
}

impl Default for StopList {
    fn default() -> Self {
        Self {
            words: BUILTIN_STOP_WORDS.iter().map(|w| w.to_string()).collect(),
        }
    }
}

impl StopList {
    pub fn from_words<I: IntoIterator<Item = String>>(words: I) -> Self {
        Self {
            words: words.into_iter().map(|w| w.to_lowercase()).collect(),
        }
    }

    /// One word per line, `#` comments allowed.
    pub fn from_reader<R: std::io::BufRead>(reader: R) -> crate::error::Result<Self> {
        let mut words = HashSet::new();
        for line in reader.lines() {
            let line = line?;
            let w = line.trim();
            if w.is_empty() || w.starts_with('#') {
                continue;
            }
            words.insert(w.to_lowercase());
        }
        Ok(Self { words })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Drops `$...$` spans (an unclosed `$` drops the rest of the line).
fn strip_math(title: &str) -> String {
    let mut out = String::with_capacity(title.len());
    let mut in_math = false;
    for c in title.chars() {
        if c == '$' {
            in_math = !in_math;
            out.push(' ');
        } else if !in_math {
            out.push(c);
        }
    }
    out
}

/// Lowercases, strips math and punctuation, and removes stop words. Hyphens
/// and slashes inside words survive ("pp-wave", "ads/cft").
pub fn tokenize_title(title: &str, stop: &StopList) -> Vec<String> {
    strip_math(title)
        .split_whitespace()
        .filter_map(|raw| {
            let token: String = raw
                .to_lowercase()
                .chars()
                .filter(|c| c.is_alphanumeric() || matches!(c, '-' | '/' | '\''))
                .collect();
            let token = token.trim_matches(|c: char| !c.is_alphanumeric()).to_string();
            if token.is_empty() || token.chars().all(|c| !c.is_alphanumeric()) {
                return None;
            }
            if stop.contains(&token) {
                return None;
            }
            Some(token)
        })
        .collect()
}

/// Consecutive pairs over the surviving tokens of one title.
pub fn title_pairs(title: &str, stop: &StopList) -> Vec<(String, String)> {
    let tokens = tokenize_title(title, stop);
    tokens
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

/// Corpus-wide statistics needed to score pair specificity.
#[derive(Debug, Clone)]
pub struct LabelContext {
    total_themes: usize,
    themes_containing: HashMap<(String, String), usize>,
}

impl LabelContext {
    /// Builds pair document frequencies over the themes of one level.
    pub fn build(theme_members: &[&[VertexId]], meta: &MetaStore, stop: &StopList) -> Self {
        let mut themes_containing: HashMap<(String, String), usize> = HashMap::new();
        for members in theme_members {
            let mut seen: HashSet<(String, String)> = HashSet::new();
            for &v in *members {
                if let Some(doc) = meta.get(v) {
                    for pair in title_pairs(&doc.title, stop) {
                        seen.insert(pair);
                    }
                }
            }
            for pair in seen {
                *themes_containing.entry(pair).or_insert(0) += 1;
            }
        }
        Self {
            total_themes: theme_members.len(),
            themes_containing,
        }
    }

    pub fn total_themes(&self) -> usize {
        self.total_themes
    }
}

/// Labels one theme: the top pairs by frequency-times-specificity. Returns
/// an empty label when no member has a usable title.
pub fn label_theme(
    members: &[VertexId],
    meta: &MetaStore,
    stop: &StopList,
    ctx: &LabelContext,
) -> Vec<(String, String)> {
    let mut counts: HashMap<(String, String), usize> = HashMap::new();
    for &v in members {
        if let Some(doc) = meta.get(v) {
            for pair in title_pairs(&doc.title, stop) {
                *counts.entry(pair).or_insert(0) += 1;
            }
        }
    }
    let mut scored: Vec<((String, String), usize, f64)> = counts
        .into_iter()
        .map(|(pair, count)| {
            let df = ctx.themes_containing.get(&pair).copied().unwrap_or(1).max(1);
            let idf = (ctx.total_themes as f64 / df as f64).ln();
            let score = count as f64 * idf;
            (pair, count, score)
        })
        .collect();
    scored.sort_by(|a, b| {
        b.2.partial_cmp(&a.2)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(b.1.cmp(&a.1))
            .then(a.0.cmp(&b.0))
    });
    scored
        .into_iter()
        .take(LABEL_PAIRS)
        .map(|(pair, _, _)| pair)
        .collect()
}
