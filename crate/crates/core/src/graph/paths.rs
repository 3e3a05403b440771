use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};

use super::Graph;

/// Path length `t` (edges per path) of the hypergraph `H_t(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathHypergraphSpec {
    t: usize,
}

impl PathHypergraphSpec {
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::Invalid("path length t must be at least 1".into()));
        }
        Ok(PathHypergraphSpec { t })
    }

    pub fn t(self) -> usize {
        self.t
    }
}

/// `H_t(G)`: the `(t+1)`-subsets of `V(G)` that can be ordered so consecutive
/// vertices are adjacent in `G` (a spanning path, not necessarily induced).
pub fn build_path_hypergraph(g: &Graph, spec: PathHypergraphSpec) -> Clutter {
    let t = spec.t();
    let mut sets = BTreeSet::new();
    if t < g.n() {
        for start in 0..g.n() {
            extend(g, start, 1 << start, t, &mut sets);
        }
    }
    Clutter::from_masks(g.n(), sets.into_iter().collect())
        .expect("equal-size vertex sets form an antichain")
}

fn extend(g: &Graph, last: usize, used: u64, remaining: usize, out: &mut BTreeSet<u64>) {
    if remaining == 0 {
        out.insert(used);
        return;
    }
    for next in super::bits(g.neighbors_mask(last) & !used) {
        extend(g, next, used | (1 << next), remaining - 1, out);
    }
}
