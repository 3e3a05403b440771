//! Clutters (simple hypergraphs) on at most 64 vertices.
//!
//! Edges are vertex bitmasks kept in lexicographic order of their sorted
//! member lists, which is also the row order of the incidence matrix.
//! Vertices carry a [`VertexLabel`] so minors and duplications stay
//! traceable to the original hypergraph.

mod minors;
mod solve;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, MAX_VERTICES};
use crate::linalg::ExactMatrix;

pub use minors::MinorEntry;
pub use solve::MfmcProbe;

/// Identity of a vertex: the index in the original hypergraph and, after
/// duplication, which copy it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub original: usize,
    pub copy: usize,
}

impl VertexLabel {
    pub fn plain(original: usize) -> Self {
        VertexLabel { original, copy: 0 }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copy == 0 {
            write!(f, "x{}", self.original + 1)
        } else {
            write!(f, "x{}'{}", self.original + 1, self.copy)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    labels: Vec<VertexLabel>,
    edges: Vec<u64>,
}

/// Result of an operation that can produce the empty edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Minor {
    /// Some edge became empty: the unit ideal.
    Unit,
    Clutter(Clutter),
}

impl Minor {
    pub fn is_unit(&self) -> bool {
        matches!(self, Minor::Unit)
    }

    pub fn clutter(&self) -> Option<&Clutter> {
        match self {
            Minor::Unit => None,
            Minor::Clutter(c) => Some(c),
        }
    }

    pub fn into_clutter(self) -> Option<Clutter> {
        match self {
            Minor::Unit => None,
            Minor::Clutter(c) => Some(c),
        }
    }

    /// Deletion; the unit ideal stays the unit ideal.
    pub fn delete(&self, v: usize) -> Result<Minor> {
        match self {
            Minor::Unit => Ok(Minor::Unit),
            Minor::Clutter(c) => c.delete(v).map(Minor::Clutter),
        }
    }

    pub fn contract(&self, v: usize) -> Result<Minor> {
        match self {
            Minor::Unit => Ok(Minor::Unit),
            Minor::Clutter(c) => c.contract(v),
        }
    }
}

/// Drops every edge that strictly contains another and every duplicate.
/// Returns [`Minor::Unit`] when the empty set is among `edges`.
pub fn minimalize(n: usize, edges: &[u64]) -> Result<Minor> {
    Clutter::check_n(n)?;
    let labels = (0..n).map(VertexLabel::plain).collect();
    minimalize_labeled(labels, edges.to_vec())
}

fn minimalize_labeled(labels: Vec<VertexLabel>, mut edges: Vec<u64>) -> Result<Minor> {
    let full = low_mask(labels.len());
    if let Some(&bad) = edges.iter().find(|&&e| e & !full != 0) {
        return Err(Error::Invalid(format!(
            "edge mask {bad:#x} outside {} vertices",
            labels.len()
        )));
    }
    if edges.contains(&0) {
        return Ok(Minor::Unit);
    }
    edges.sort_unstable_by_key(|e| e.count_ones());
    edges.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(edges.len());
    for e in edges {
        if !kept.iter().any(|&k| k & !e == 0) {
            kept.push(e);
        }
    }
    Ok(Minor::Clutter(Clutter::assemble(labels, kept)))
}

impl Clutter {
    fn check_n(n: usize) -> Result<()> {
        if n > MAX_VERTICES {
            return Err(Error::Cap(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(())
    }

    fn assemble(labels: Vec<VertexLabel>, mut edges: Vec<u64>) -> Clutter {
        edges.sort_unstable_by_key(|&e| lex_key(e));
        Clutter { labels, edges }
    }

    /// Builds a clutter from bitmask edges, rejecting non-antichains and the
    /// empty edge.
    pub fn from_masks(n: usize, edges: Vec<u64>) -> Result<Clutter> {
        Clutter::check_n(n)?;
        let count = edges.len();
        let mut uniq = edges.clone();
        uniq.sort_unstable();
        uniq.dedup();
        match minimalize(n, &edges)? {
            Minor::Unit => Err(Error::Invalid("the empty edge is not allowed".into())),
            Minor::Clutter(c) if c.edges.len() == count && uniq.len() == count => Ok(c),
            Minor::Clutter(_) => Err(Error::Invalid("edges do not form an antichain".into())),
        }
    }

    /// Builds a clutter from 0-based vertex lists.
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Clutter> {
        let masks = edges
            .iter()
            .map(|e| {
                e.iter().try_fold(0u64, |m, &v| {
                    if v >= n {
                        Err(Error::Invalid(format!("vertex {} outside 1..={n}", v + 1)))
                    } else {
                        Ok(m | (1 << v))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Clutter::from_masks(n, masks)
    }

    /// The clutter with no edges.
    pub fn empty(n: usize) -> Result<Clutter> {
        Clutter::from_masks(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges as sorted 0-based vertex lists.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| bits(e).collect()).collect()
    }

    pub fn contains_edge(&self, vertices: &[usize]) -> bool {
        let mask = vertices.iter().fold(0u64, |m, &v| m | (1 << v));
        self.edges.contains(&mask)
    }

    /// Common edge size, if all edges have the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.count_ones();
        self.edges
            .iter()
            .all(|e| e.count_ones() == first)
            .then_some(first as usize)
    }

    /// `m × n` 0/1 matrix; rows follow edge order, columns vertex order.
    pub fn incidence_matrix(&self) -> ExactMatrix {
        let rows: Vec<Vec<i64>> = self
            .edges
            .iter()
            .map(|&e| {
                (0..self.n())
                    .map(|v| i64::from(e & (1 << v) != 0))
                    .collect()
            })
            .collect();
        ExactMatrix::from_int_rows(self.n(), &rows)
    }

    /// Removes vertex `v` and every edge through it.
    pub fn delete(&self, v: usize) -> Result<Clutter> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & (1 << v) == 0)
            .map(|&e| squeeze(e, v))
            .collect();
        let mut labels = self.labels.clone();
        labels.remove(v);
        Ok(Clutter::assemble(labels, edges))
    }

    /// Removes vertex `v` from every edge and minimalizes.
    pub fn contract(&self, v: usize) -> Result<Minor> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .map(|&e| squeeze(e & !(1 << v), v))
            .collect();
        let mut labels = self.labels.clone();
        labels.remove(v);
        minimalize_labeled(labels, edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::Invalid(format!(
                "vertex {} outside 1..={}",
                v + 1,
                self.n()
            )));
        }
        Ok(())
    }

    /// Replaces vertex `i` by `a[i]` copies (deleting it when `a[i] = 0`).
    /// Each edge is replaced by every choice of one copy per member.
    pub fn duplicate(&self, a: &[u32]) -> Result<Clutter> {
        if a.len() != self.n() {
            return Err(Error::Dimension(format!(
                "multiplicity vector has length {}, clutter has {} vertices",
                a.len(),
                self.n()
            )));
        }
        let total: u64 = a.iter().map(|&x| u64::from(x)).sum();
        if total > MAX_VERTICES as u64 {
            return Err(Error::Cap(format!(
                "duplication would create {total} vertices"
            )));
        }
        let mut labels = Vec::with_capacity(total as usize);
        let mut first = vec![0usize; self.n()];
        for (i, &k) in a.iter().enumerate() {
            first[i] = labels.len();
            let base = self.labels[i];
            for j in 0..k as usize {
                labels.push(VertexLabel {
                    original: base.original,
                    copy: base.copy * k as usize + j,
                });
            }
        }
        let mut edges = Vec::new();
        for &e in &self.edges {
            let members: Vec<usize> = bits(e).collect();
            if members.iter().any(|&v| a[v] == 0) {
                continue;
            }
            let mut partial = vec![0u64];
            for &v in &members {
                let mut next = Vec::with_capacity(partial.len() * a[v] as usize);
                for &p in &partial {
                    for j in 0..a[v] as usize {
                        next.push(p | (1 << (first[v] + j)));
                    }
                }
                partial = next;
            }
            edges.extend(partial);
        }
        match minimalize_labeled(labels, edges)? {
            Minor::Clutter(c) => Ok(c),
            Minor::Unit => unreachable!("duplication of nonempty edges is nonempty"),
        }
    }

    /// Relabels vertices: vertex `v` moves to position `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Clutter> {
        crate::graph::check_permutation(perm, self.n())?;
        let mut labels = self.labels.clone();
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&e| bits(e).fold(0u64, |m, v| m | (1 << perm[v])))
            .collect();
        Ok(Clutter::assemble(labels, edges))
    }

    /// Line format: `n <count>` then one 1-based sorted vertex list per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n());
        for e in self.edges() {
            let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses [`Clutter::to_text`] output. Input edges must form an antichain.
    pub fn parse_text(text: &str) -> Result<Clutter> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let mut toks = line.split_whitespace();
            if n.is_none() {
                match (toks.next(), toks.next(), toks.next()) {
                    (Some("n"), Some(c), None) => {
                        n = Some(
                            c.parse()
                                .map_err(|_| err(format!("bad vertex count `{c}`")))?,
                        );
                        continue;
                    }
                    _ => return Err(err("expected header `n <count>`".into())),
                }
            }
            let count = n.unwrap_or_default();
            let edge = line
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if (1..=count).contains(&v) => Ok(v - 1),
                    _ => Err(err(format!("`{t}` is not a vertex in 1..={count}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            edges.push(edge);
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing header `n <count>`".into(),
        })?;
        Clutter::new(n, &edges)
    }
}

/// Removes bit `v`, shifting higher bits down by one.
fn squeeze(mask: u64, v: usize) -> u64 {
    let low = mask & low_mask(v);
    let high = if v + 1 >= 64 {
        0
    } else {
        (mask >> (v + 1)) << v
    };
    low | high
}

/// Sort key giving lexicographic order of sorted member lists.
fn lex_key(mask: u64) -> Vec<u32> {
    bits(mask).map(|v| v as u32).collect()
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&e| {
                let names: Vec<String> = bits(e).map(|v| self.labels[v].to_string()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        write!(f, "Clutter(n={}, [{}])", self.n(), edges.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct ClutterRepr {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

impl Serialize for Clutter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let identity = self
            .labels
            .iter()
            .enumerate()
            .all(|(i, l)| *l == VertexLabel::plain(i));
        ClutterRepr {
            n: self.n(),
            edges: self
                .edges()
                .into_iter()
                .map(|e| e.into_iter().map(|v| v + 1).collect())
                .collect(),
            labels: (!identity).then(|| self.labels.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Clutter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = ClutterRepr::deserialize(d)?;
        let edges: Vec<Vec<usize>> = r
            .edges
            .iter()
            .map(|e| {
                e.iter()
                    .map(|&v| {
                        v.checked_sub(1)
                            .ok_or_else(|| D::Error::custom("labels are 1-based"))
                    })
                    .collect()
            })
            .collect::<std::result::Result<_, _>>()?;
        let mut c = Clutter::new(r.n, &edges).map_err(D::Error::custom)?;
        if let Some(labels) = r.labels {
            if labels.len() != c.n() {
                return Err(D::Error::custom("label count differs from n"));
            }
            c.labels = labels;
        }
        Ok(c)
    }
}
