//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n` internally. Every text format uses 1-based labels
//! (`x1 … xn`).

mod canon;
mod family;
mod io;
mod paths;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_relabeling, CanonicalLabel, DEFAULT_CANON_MAX_N};
pub use family::{make_family, Family, FamilySpec};
pub use io::{encode_graph6, parse_edge_list, parse_graph6};
pub use paths::{build_path_hypergraph, PathHypergraphSpec};

/// Largest vertex count representable with the bitmask adjacency.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Wire form: vertex count plus 1-based edge list.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let mut g = Graph::empty(r.n)?;
        for [u, v] in r.edges {
            if u == 0 || v == 0 {
                return Err(Error::InvalidGraph("vertex labels are 1-based".into()));
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }
}

impl Graph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::Cap(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges. Repeated edges are merged.
    /// From symmetric adjacency masks without loops.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, m)| m >> v & 1 == 0));
        Graph { n: adj.len(), adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge {{{}, {}}} has an endpoint outside 1..={}",
                u + 1,
                v + 1,
                self.n
            )));
        }
        let fresh = self.adj[u] & (1 << v) == 0;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(fresh)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Mask with the low `n` bits set.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Connected with a single component; a lone vertex counts.
    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Graphviz rendering. `labels`, when given, are shown next to the
    /// vertex names (used for fractional-vertex figures).
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            match labels.and_then(|l| l.get(v)) {
                Some(l) => s.push_str(&format!("  x{} [label=\"x{}\\n{}\"];\n", v + 1, v + 1, l)),
                None => s.push_str(&format!("  x{};\n", v + 1)),
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  x{} -- x{};\n", u + 1, v + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Invalid(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= n || seen & (1 << p) != 0 {
            return Err(Error::Invalid("not a permutation".into()));
        }
        seen |= 1 << p;
    }
    Ok(())
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
