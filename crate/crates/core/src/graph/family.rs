//! Named graph families.
//!
//! Vertex numbering (0-based) per family:
//!
//! | family             | numbering                                                       |
//! |--------------------|-----------------------------------------------------------------|
//! | `path k`           | `0 - 1 - … - (k-1)`                                             |
//! | `cycle k`          | `0 - 1 - … - (k-1) - 0`                                         |
//! | `star k`           | centre `0`, leaves `1..=k`                                      |
//! | `double_star p,q`  | centres `0 - 1`; leaves of `0` are `2..2+p`, then leaves of `1` |
//! | `spider l1,…,lr`   | centre `0`; legs numbered outward, one leg after another        |
//! | `star_plus_edge k` | `star k` plus the edge `1 - 2`                                  |
//! | `complete k`       | all pairs                                                       |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Spider,
    StarPlusEdge,
    Complete,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::DoubleStar,
        Family::Spider,
        Family::StarPlusEdge,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::DoubleStar => "double_star",
            Family::Spider => "spider",
            Family::StarPlusEdge => "star_plus_edge",
            Family::Complete => "complete",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `name:p1,p2,…`, e.g. `cycle:8` or `spider:2,1,1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        build(self.family, &self.params)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let family: Family = name.parse()?;
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>().map_err(|_| Error::FamilyParams {
                    family: family.name().into(),
                    msg: format!("`{p}` is not a nonnegative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { family, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family.name(), ps.join(","))
    }
}

/// Builds the family `name` with the given parameters.
pub fn make_family(name: &str, params: &[usize]) -> Result<Graph> {
    build(name.parse()?, params)
}

fn build(family: Family, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Error::FamilyParams {
        family: family.name().into(),
        msg: msg.into(),
    };
    let single = |min: usize| -> Result<usize> {
        match params {
            [k] if *k >= min => Ok(*k),
            [_] => Err(bad(&format!("parameter must be at least {min}"))),
            _ => Err(bad("expected exactly one parameter")),
        }
    };
    match family {
        Family::Path => {
            let k = single(1)?;
            let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            Graph::from_edges(k, &edges)
        }
        Family::Cycle => {
            let k = single(3)?;
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Graph::from_edges(k, &edges)
        }
        Family::Star => {
            let k = single(1)?;
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        Family::StarPlusEdge => {
            let k = single(2)?;
            let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            edges.push((1, 2));
            Graph::from_edges(k + 1, &edges)
        }
        Family::Complete => {
            let k = single(1)?;
            let mut edges = Vec::new();
            for u in 0..k {
                for v in u + 1..k {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(k, &edges)
        }
        Family::DoubleStar => {
            let [p, q] = params else {
                return Err(bad("expected two leaf counts p,q"));
            };
            let mut edges = vec![(0, 1)];
            edges.extend((0..*p).map(|i| (0, 2 + i)));
            edges.extend((0..*q).map(|i| (1, 2 + p + i)));
            Graph::from_edges(2 + p + q, &edges)
        }
        Family::Spider => {
            if params.is_empty() || params.contains(&0) {
                return Err(bad("expected one or more positive leg lengths"));
            }
            let n = 1 + params.iter().sum::<usize>();
            let mut edges = Vec::with_capacity(n - 1);
            let mut next = 1;
            for &len in params {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_eight_matches_listed_edges() {
        let g = make_family("cycle", &[8]).unwrap();
        let mut expected: Vec<(usize, usize)> = (0..7).map(|i| (i, i + 1)).collect();
        expected.push((0, 7));
        expected.sort();
        assert_eq!(g.edges(), expected);
    }

    #[test]
    fn degenerate_path() {
        let g = make_family("path", &[1]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn star_plus_edge_shape() {
        let g = make_family("star_plus_edge", &[4]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn spec_strings() {
        let s: FamilySpec = "spider:2,1,1".parse().unwrap();
        assert_eq!(s.family, Family::Spider);
        assert_eq!(s.params, vec![2, 1, 1]);
        assert_eq!(s.build().unwrap().n(), 5);
        assert_eq!(s.to_string(), "spider:2,1,1");
        assert!("cycle:2".parse::<FamilySpec>().unwrap().build().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert_eq!(
            "star-plus-edge:3".parse::<FamilySpec>().unwrap().family,
            Family::StarPlusEdge
        );
    }

    #[test]
    fn double_star_layout() {
        let g = make_family("double_star", &[2, 3]).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 4);
        assert!(g.is_tree());
    }
}
