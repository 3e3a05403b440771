//! Canonical labels by exhaustive permutation search.
//!
//! The label is the graph6 string of the relabeling whose upper-triangle
//! adjacency bits (graph6 column order) are lexicographically smallest.
//! Permutations are built one position at a time; a partial assignment whose
//! fixed prefix already exceeds the best string is abandoned, so the search
//! is exact and still visits every permutation that could win.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{bits, encode_graph6, Graph};

/// Default bound on `n` for [`canonical_form`].
pub const DEFAULT_CANON_MAX_N: usize = 9;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", self.0)
    }
}

/// Canonical label with the default size bound.
pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    canonical_relabeling(g, DEFAULT_CANON_MAX_N).map(|(c, _)| CanonicalLabel(encode_graph6(&c)))
}

/// Returns the canonical graph and the permutation (`perm[v]` = new index of
/// `v`) producing it.
pub fn canonical_relabeling(g: &Graph, max_n: usize) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n > max_n {
        return Err(Error::Cap(format!(
            "canonical form needs n <= {max_n}, got {n}"
        )));
    }
    let mut s = Search {
        g,
        n,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        used: 0,
        best_cols: Vec::new(),
        best_order: Vec::new(),
    };
    s.dfs(false);
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((g.relabel(&perm)?, perm))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// `order[p]` is the vertex placed at position `p`.
    order: Vec<usize>,
    cols: Vec<u64>,
    used: u64,
    best_cols: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// `tied` means the current prefix equals the best prefix; otherwise it
    /// is strictly smaller (or no best exists yet). Returns whether the best
    /// was replaced inside this subtree.
    fn dfs(&mut self, mut tied: bool) -> bool {
        let depth = self.order.len();
        if depth == self.n {
            if self.best_order.is_empty() || !tied {
                self.best_cols.clone_from(&self.cols);
                self.best_order.clone_from(&self.order);
                return true;
            }
            return false;
        }
        let mut replaced = false;
        for v in bits(!self.used & super::low_mask(self.n)) {
            let nb = self.g.neighbors_mask(v);
            let col = self
                .order
                .iter()
                .fold(0u64, |acc, &u| (acc << 1) | u64::from(nb & (1 << u) != 0));
            let child_tied = if tied {
                match col.cmp(&self.best_cols[depth]) {
                    Ordering::Greater => continue,
                    Ordering::Less => false,
                    Ordering::Equal => true,
                }
            } else {
                false
            };
            self.order.push(v);
            self.cols.push(col);
            self.used |= 1 << v;
            if self.dfs(child_tied) {
                replaced = true;
                tied = true;
            }
            self.used &= !(1 << v);
            self.cols.pop();
            self.order.pop();
        }
        replaced
    }
}
