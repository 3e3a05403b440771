//! Exhaustive runs over small connected graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{decide_mengerian_with, Caps, DecideOptions, DecisionReport, MethodTrace};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_relabeling, encode_graph6, CanonicalLabel, Graph, DEFAULT_CANON_MAX_N,
};
use crate::parallel;

/// Default largest `n` for [`enumerate_connected`].
pub const DEFAULT_MAX_N: usize = 7;

/// Largest `n` the enumerator accepts at all (`2^28` adjacency masks).
pub const HARD_MAX_N: usize = 8;

/// One connected graph per isomorphism class on `n` vertices, in canonical
/// form, sorted by canonical label.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_capped(n, DEFAULT_MAX_N)
}

pub fn enumerate_connected_capped(n: usize, max_n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidGraph(
            "graphs need at least one vertex".into(),
        ));
    }
    if n > max_n.min(HARD_MAX_N) {
        return Err(Error::Cap(format!(
            "enumeration on {n} vertices exceeds the cap {}",
            max_n.min(HARD_MAX_N)
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1usize << pairs.len();
    let found = parallel::flat_map_index(total, |mask| {
        let mut adj = vec![0u64; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let g = Graph::from_adjacency(adj);
        if !g.is_connected() {
            return Vec::new();
        }
        let (canon, _) =
            canonical_relabeling(&g, DEFAULT_CANON_MAX_N).expect("n is within the canonical bound");
        // keep only masks that already are their canonical form
        if canon == g {
            vec![(encode_graph6(&canon), canon)]
        } else {
            Vec::new()
        }
    });
    let unique: BTreeMap<String, Graph> = found.into_iter().collect();
    Ok(unique.into_values().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub t: usize,
    pub caps: Caps,
    /// Cap on `n_max`; raised by the caller for extended runs.
    pub max_n: usize,
    /// Further graphs decided alongside the enumeration (e.g. `C8`).
    pub extra: Vec<Graph>,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            n_min: 1,
            n_max: 6,
            t: 3,
            caps: Caps::default(),
            max_n: DEFAULT_MAX_N,
            extra: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyEntry {
    pub n: usize,
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<DecisionReport>,
    /// Why the instance is INCOMPLETE.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incomplete: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub total: usize,
    pub complete: usize,
    pub incomplete: usize,
    pub mengerian: usize,
    pub empty: usize,
    pub tu: usize,
    pub non_ideal: usize,
    pub power_equality: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerN {
    pub n: usize,
    pub classes: usize,
    pub mengerian: usize,
}

/// A graph whose packing verdict differs from its Mengerian verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingDisagreement {
    pub graph6: String,
    pub packing: bool,
    pub mengerian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub schema: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub t: usize,
    pub counters: Counters,
    pub per_n: Vec<PerN>,
    /// Graphs where the classifier and the exact pipeline disagree.
    pub mismatches: Vec<String>,
    pub packing_disagreements: Vec<PackingDisagreement>,
    /// Graphs that are neither TU nor non-ideal.
    pub dichotomy_exceptions: Vec<String>,
    pub entries: Vec<SurveyEntry>,
}

impl SurveyReport {
    /// No mismatch and no INCOMPLETE instance.
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty() && self.counters.incomplete == 0
    }

    /// One row per graph.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("n,graph6,canonical,clause,trace,mengerian,tu,ideal,packing,agreement\n");
        let flag = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
        for e in &self.entries {
            match &e.report {
                Some(r) => {
                    let canonical = r
                        .graph
                        .canonical
                        .as_ref()
                        .map(CanonicalLabel::to_string)
                        .unwrap_or_default();
                    let clause = r.classifier.as_ref().map_or("", |v| v.clause.as_str());
                    let ideal = if r.checks.tu.holds {
                        Some(true)
                    } else {
                        r.checks.ideal.as_ref().map(|i| i.holds)
                    };
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{}",
                        e.n,
                        csv_field(&e.graph6),
                        csv_field(&canonical),
                        clause,
                        r.trace.as_str(),
                        r.mengerian,
                        r.checks.tu.holds,
                        flag(ideal),
                        flag(r.checks.packing.holds),
                        flag(r.agreement),
                    );
                }
                None => {
                    let _ = writeln!(out, "{},{},,,INCOMPLETE,,,,,", e.n, csv_field(&e.graph6));
                }
            }
        }
        out
    }
}

/// graph6 uses printable ASCII, which may include `,` and `"`.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Decides every connected graph with `n_min ≤ n ≤ n_max` (plus `extra`),
/// comparing against the classifier when `t = 3`.
pub fn cross_check(opts: &SurveyOptions) -> Result<SurveyReport> {
    if opts.n_min == 0 || opts.n_min > opts.n_max {
        return Err(Error::Invalid(format!(
            "empty range {}..={}",
            opts.n_min, opts.n_max
        )));
    }
    let mut graphs = Vec::new();
    for n in opts.n_min..=opts.n_max {
        graphs.extend(enumerate_connected_capped(n, opts.max_n)?);
    }
    let known: BTreeSet<String> = graphs.iter().map(encode_graph6).collect();
    for g in &opts.extra {
        let g = if g.n() <= DEFAULT_CANON_MAX_N {
            canonical_relabeling(g, DEFAULT_CANON_MAX_N)?.0
        } else {
            g.clone()
        };
        if !known.contains(&encode_graph6(&g)) {
            graphs.push(g);
        }
    }
    let decide = DecideOptions {
        caps: opts.caps,
        force_power_equality: false,
    };
    let entries = parallel::map(&graphs, |g| {
        let graph6 = encode_graph6(g);
        match decide_mengerian_with(g, opts.t, &decide) {
            Ok(r) => SurveyEntry {
                n: g.n(),
                graph6,
                report: Some(r),
                incomplete: None,
            },
            Err(e) => {
                log::warn!("{graph6}: {e}");
                SurveyEntry {
                    n: g.n(),
                    graph6,
                    report: None,
                    incomplete: Some(e.to_string()),
                }
            }
        }
    });
    Ok(summarize(opts, entries))
}

fn summarize(opts: &SurveyOptions, entries: Vec<SurveyEntry>) -> SurveyReport {
    let mut c = Counters {
        total: entries.len(),
        ..Default::default()
    };
    let mut per_n: BTreeMap<usize, PerN> = BTreeMap::new();
    let mut mismatches = Vec::new();
    let mut packing_disagreements = Vec::new();
    let mut dichotomy_exceptions = Vec::new();
    for e in &entries {
        let slot = per_n.entry(e.n).or_insert(PerN {
            n: e.n,
            classes: 0,
            mengerian: 0,
        });
        slot.classes += 1;
        let Some(r) = &e.report else {
            c.incomplete += 1;
            continue;
        };
        c.complete += 1;
        if r.mengerian {
            c.mengerian += 1;
            slot.mengerian += 1;
        }
        match r.trace {
            MethodTrace::Empty => c.empty += 1,
            MethodTrace::TuShortcut => c.tu += 1,
            MethodTrace::NonIdeal => c.non_ideal += 1,
            MethodTrace::PowerEquality => c.power_equality += 1,
        }
        if r.agreement == Some(false) {
            mismatches.push(e.graph6.clone());
        }
        if let Some(p) = r.checks.packing.holds {
            if p != r.mengerian {
                packing_disagreements.push(PackingDisagreement {
                    graph6: e.graph6.clone(),
                    packing: p,
                    mengerian: r.mengerian,
                });
            }
        }
        if !r.in_dichotomy() {
            dichotomy_exceptions.push(e.graph6.clone());
        }
    }
    SurveyReport {
        schema: crate::SCHEMA_VERSION,
        n_min: opts.n_min,
        n_max: opts.n_max,
        t: opts.t,
        counters: c,
        per_n: per_n.into_values().collect(),
        mismatches,
        packing_disagreements,
        dichotomy_exceptions,
        entries,
    }
}
