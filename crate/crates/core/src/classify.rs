//! Graph-class predicates for Mengerian `H_3(G)` and the exact decision
//! pipeline.
//!
//! The pipeline tries, in order: empty hypergraph (vacuously Mengerian), a
//! totally unimodular incidence matrix (Mengerian), a fractional vertex of the
//! covering polyhedron (not Mengerian), and finally the exact power-equality
//! test `I^k = I^(k)` for `k ≤ ⌈μ/2⌉`.

use serde::{Deserialize, Serialize};

use crate::clutter::{Clutter, MinorEntry};
use crate::error::{Error, Result};
use crate::graph::{
    build_path_hypergraph, canonical_form, encode_graph6, make_family, CanonicalLabel, Graph,
    PathHypergraphSpec, DEFAULT_CANON_MAX_N,
};
use crate::ideal::{is_normally_torsion_free_capped, NtfCheck};
use crate::linalg::{
    is_ideal, is_totally_unimodular, IdealCheck, PolyhedronVertex, TuCheck, TuWitness,
};

/// A tree in which at most two vertices are adjacent to leaves. Covers paths
/// and stars, a single vertex and a single edge.
pub fn is_path_with_double_stars(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let leaf_neighbours = (0..g.n())
        .filter(|&v| g.neighbors(v).any(|u| g.degree(u) == 1))
        .count();
    leaf_neighbours <= 2
}

/// A star `K_{1,k}` (`k ≥ 2`) with one extra edge joining two leaves. `K3`
/// counts.
pub fn is_star_plus_edge(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !g.is_connected() || g.edge_count() != n {
        return false;
    }
    // a centre of degree n-1 leaves exactly one edge among the rest
    (0..n).any(|c| g.degree(c) == n - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Clause {
    FourVertices,
    C8,
    PathWithDoubleStars,
    StarPlusEdge,
    NotMengerian,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::FourVertices => "FOUR_VERTICES",
            Clause::C8 => "C8",
            Clause::PathWithDoubleStars => "PATH_WITH_DOUBLE_STARS",
            Clause::StarPlusEdge => "STAR_PLUS_EDGE",
            Clause::NotMengerian => "NOT_MENGERIAN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub mengerian: bool,
    pub clause: Clause,
    pub note: String,
}

/// Classifies a connected graph by the first matching clause:
/// `|V| ≤ 4`, `C8`, path with double stars, star plus an edge.
pub fn classify_mengerian(g: &Graph) -> Result<ClassVerdict> {
    if !g.is_connected() {
        return Err(Error::InvalidGraph(
            "classification needs a connected graph".into(),
        ));
    }
    let n = g.n();
    let (clause, note) = if n <= 4 {
        (Clause::FourVertices, format!("{n} vertices"))
    } else if n == 8
        && g.edge_count() == 8
        && canonical_form(g)? == canonical_form(&make_family("cycle", &[8])?)?
    {
        (Clause::C8, "isomorphic to the 8-cycle".to_string())
    } else if is_path_with_double_stars(g) {
        (
            Clause::PathWithDoubleStars,
            "tree with at most two leaf-adjacent vertices".to_string(),
        )
    } else if is_star_plus_edge(g) {
        (
            Clause::StarPlusEdge,
            format!("star with {} leaves plus an edge", n - 1),
        )
    } else {
        (Clause::NotMengerian, "no clause applies".to_string())
    };
    Ok(ClassVerdict {
        mengerian: clause != Clause::NotMengerian,
        clause,
        note,
    })
}

/// Resource bounds for [`decide_mengerian_with`]. Exceeding one is an error,
/// never an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest vertex count for the polyhedron and power computations.
    pub max_n: usize,
    /// Largest power `⌈μ/2⌉` the power-equality test may need.
    pub max_power: usize,
    /// Largest vertex count for which the `3^n` minor scan runs.
    pub max_packing_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 24,
            max_power: 6,
            max_packing_n: 6,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecideOptions {
    pub caps: Caps,
    /// Run the power-equality test even when a shortcut already decided.
    pub force_power_equality: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MethodTrace {
    Empty,
    TuShortcut,
    NonIdeal,
    PowerEquality,
}

impl MethodTrace {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodTrace::Empty => "EMPTY",
            MethodTrace::TuShortcut => "TU_SHORTCUT",
            MethodTrace::NonIdeal => "NON_IDEAL",
            MethodTrace::PowerEquality => "POWER_EQUALITY",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub connected: bool,
    pub graph6: String,
    /// Present when `n` is within the canonical-form bound.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalLabel>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Result<GraphSummary> {
        let canonical = if g.n() <= DEFAULT_CANON_MAX_N {
            Some(canonical_form(g)?)
        } else {
            None
        };
        Ok(GraphSummary {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
            connected: g.is_connected(),
            graph6: encode_graph6(g),
            canonical,
        })
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&[u, v]| match (u.checked_sub(1), v.checked_sub(1)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(Error::InvalidGraph("vertex labels are 1-based".into())),
            })
            .collect::<Result<_>>()?;
        Graph::from_edges(self.n, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSummary {
    pub t: usize,
    pub m: usize,
    pub uniformity: Option<usize>,
    pub clutter: Clutter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuResult {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<TuWitness>,
}

impl From<TuCheck> for TuResult {
    fn from(c: TuCheck) -> Self {
        TuResult {
            holds: c.is_unimodular(),
            witness: c.witness().cloned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealResult {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<PolyhedronVertex>,
}

impl From<IdealCheck> for IdealResult {
    fn from(c: IdealCheck) -> Self {
        IdealResult {
            holds: c.is_ideal(),
            vertex: c.certificate().cloned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KonigResult {
    pub holds: bool,
    pub tau: usize,
    pub nu: usize,
    /// A minimum cover, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<usize>>,
    /// A maximum matching, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<Vec<usize>>>,
}

impl KonigResult {
    pub fn of(c: &Clutter) -> KonigResult {
        let cover = c.min_cover();
        let matching = c.max_matching();
        let one_based = |m: u64| crate::graph::bits(m).map(|v| v + 1).collect::<Vec<_>>();
        KonigResult {
            holds: cover.count_ones() as usize == matching.len(),
            tau: cover.count_ones() as usize,
            nu: matching.len(),
            cover: Some(one_based(cover)),
            matching: Some(matching.into_iter().map(one_based).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    /// `None` when the minor scan was skipped by the cap.
    pub holds: Option<bool>,
    /// A non-unit minor without the König property, 1-based vertex sets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<MinorWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub deleted: Vec<usize>,
    pub contracted: Vec<usize>,
}

impl From<MinorEntry> for MinorWitness {
    fn from(e: MinorEntry) -> Self {
        MinorWitness {
            deleted: e.deleted.iter().map(|v| v + 1).collect(),
            contracted: e.contracted.iter().map(|v| v + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtfResult {
    pub holds: bool,
    #[serde(flatten)]
    pub check: NtfCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub tu: TuResult,
    /// Skipped when the matrix is totally unimodular.
    pub ideal: Option<IdealResult>,
    pub konig: KonigResult,
    pub packing: PackingResult,
    /// Only run on the power-equality path (or when forced).
    pub ntf: Option<NtfResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub schema: u32,
    pub graph: GraphSummary,
    pub hypergraph: HypergraphSummary,
    pub checks: Checks,
    pub trace: MethodTrace,
    pub mengerian: bool,
    pub classifier: Option<ClassVerdict>,
    /// `classifier.mengerian == mengerian`, when the classifier ran.
    pub agreement: Option<bool>,
}

impl DecisionReport {
    /// Whether the matrix is TU or the clutter is not ideal.
    pub fn in_dichotomy(&self) -> bool {
        self.checks.tu.holds || self.checks.ideal.as_ref().is_some_and(|i| !i.holds)
    }

    /// Drops every witness except the one the verdict rests on.
    pub fn strip_certificates(&mut self) {
        self.checks.tu.witness = None;
        self.checks.konig.cover = None;
        self.checks.konig.matching = None;
        self.checks.packing.violation = None;
        if self.trace != MethodTrace::NonIdeal {
            if let Some(i) = self.checks.ideal.as_mut() {
                i.vertex = None;
            }
        }
    }
}

/// [`decide_mengerian_with`] under the default caps.
pub fn decide_mengerian_exact(g: &Graph, t: usize) -> Result<DecisionReport> {
    decide_mengerian_with(g, t, &DecideOptions::default())
}

pub fn decide_mengerian_with(g: &Graph, t: usize, opts: &DecideOptions) -> Result<DecisionReport> {
    let caps = opts.caps;
    let c = build_path_hypergraph(g, PathHypergraphSpec::new(t)?);
    let hypergraph = HypergraphSummary {
        t,
        m: c.edge_count(),
        uniformity: c.uniformity(),
        clutter: c.clone(),
    };

    let tu = TuResult::from(is_totally_unimodular(&c.incidence_matrix())?);
    let konig = KonigResult::of(&c);
    let packing = if c.n() <= caps.max_packing_n {
        let v = c.packing_violation()?;
        PackingResult {
            holds: Some(v.is_none()),
            violation: v.map(MinorWitness::from),
        }
    } else {
        PackingResult {
            holds: None,
            violation: None,
        }
    };

    let ideal = if c.is_empty() || tu.holds {
        None
    } else {
        if c.n() > caps.max_n {
            return Err(Error::Cap(format!(
                "{} vertices exceed the cap {}",
                c.n(),
                caps.max_n
            )));
        }
        Some(IdealResult::from(is_ideal(&c)?))
    };

    let trace = if c.is_empty() {
        MethodTrace::Empty
    } else if tu.holds {
        MethodTrace::TuShortcut
    } else if ideal.as_ref().is_some_and(|i| !i.holds) {
        MethodTrace::NonIdeal
    } else {
        MethodTrace::PowerEquality
    };

    let ntf = if trace == MethodTrace::PowerEquality || (opts.force_power_equality && !c.is_empty())
    {
        if c.n() > caps.max_n {
            return Err(Error::Cap(format!(
                "{} vertices exceed the cap {}",
                c.n(),
                caps.max_n
            )));
        }
        let check = is_normally_torsion_free_capped(&c, Some(caps.max_power))?;
        Some(NtfResult {
            holds: check.holds(),
            check,
        })
    } else {
        None
    };

    let mengerian = match trace {
        MethodTrace::Empty | MethodTrace::TuShortcut => true,
        MethodTrace::NonIdeal => false,
        MethodTrace::PowerEquality => ntf.as_ref().is_some_and(|r| r.holds),
    };

    let classifier = if t == 3 && g.is_connected() {
        Some(classify_mengerian(g)?)
    } else {
        None
    };
    let agreement = classifier.as_ref().map(|v| v.mengerian == mengerian);

    Ok(DecisionReport {
        schema: crate::SCHEMA_VERSION,
        graph: GraphSummary::of(g)?,
        hypergraph,
        checks: Checks {
            tu,
            ideal,
            konig,
            packing,
            ntf,
        },
        trace,
        mengerian,
        classifier,
        agreement,
    })
}
