//! Independent re-checking of refutation certificates.
//!
//! Each check recomputes from the clutter alone, using routines other than
//! the ones that produced the certificate where possible: rational Gaussian
//! elimination instead of fraction-free Bareiss, a cover degree-sum test
//! instead of the intersection fold, plain τ/ν search on the named minor.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::classify::{DecisionReport, MethodTrace};
use crate::clutter::{Clutter, Minor};
use crate::error::{Error, Result};
use crate::graph::{build_path_hypergraph, PathHypergraphSpec};
use crate::ideal::{edge_ideal, in_symbolic_power, Monomial};
use crate::linalg::{rational_vec, ExactMatrix, Rational, TuWitness};

/// A self-contained refutation: the clutter plus a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A vertex of `Q(A)` with a non-integer coordinate: not ideal.
    FractionalVertex {
        clutter: Clutter,
        #[serde(with = "rational_vec")]
        coords: Vec<Rational>,
    },
    /// A square submatrix with determinant outside `{0, ±1}`: not TU.
    NonTu {
        clutter: Clutter,
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    /// `m ∈ I^(k) \ I^k`: not normally torsion-free.
    PowerGap {
        clutter: Clutter,
        k: usize,
        monomial: Monomial,
    },
    /// A non-unit minor (1-based vertex sets) with `τ ≠ ν`: no packing.
    PackingViolation {
        clutter: Clutter,
        deleted: Vec<usize>,
        contracted: Vec<usize>,
    },
    /// A cost vector with integer min cover above integer max packing.
    MfmcGap { clutter: Clutter, cost: Vec<u32> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::FractionalVertex { .. } => "fractional_vertex",
            Certificate::NonTu { .. } => "non_tu",
            Certificate::PowerGap { .. } => "power_gap",
            Certificate::PackingViolation { .. } => "packing_violation",
            Certificate::MfmcGap { .. } => "mfmc_gap",
        }
    }

    pub fn non_tu(clutter: &Clutter, w: &TuWitness) -> Certificate {
        Certificate::NonTu {
            clutter: clutter.clone(),
            rows: w.rows.clone(),
            cols: w.cols.clone(),
        }
    }
}

/// Outcome of [`verify`]: `valid` plus a one-line explanation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub kind: String,
    pub valid: bool,
    pub detail: String,
}

fn verdict(kind: &str, valid: bool, detail: String) -> Verification {
    Verification {
        kind: kind.to_string(),
        valid,
        detail,
    }
}

/// Re-checks `cert`. Malformed certificates (wrong dimensions, bad indices)
/// are errors; well-formed but false ones come back with `valid = false`.
pub fn verify(cert: &Certificate) -> Result<Verification> {
    let kind = cert.kind();
    match cert {
        Certificate::FractionalVertex { clutter, coords } => {
            let a = clutter.incidence_matrix();
            let (valid, detail) = check_vertex(&a, coords)?;
            Ok(verdict(kind, valid, detail))
        }
        Certificate::NonTu {
            clutter,
            rows,
            cols,
        } => {
            let a = clutter.incidence_matrix();
            if rows.len() != cols.len() || rows.is_empty() {
                return Err(Error::Dimension(
                    "witness submatrix must be square and nonempty".into(),
                ));
            }
            if rows.iter().any(|&r| r >= a.rows()) || cols.iter().any(|&c| c >= a.cols()) {
                return Err(Error::Dimension("witness index out of range".into()));
            }
            let d = a.submatrix(rows, cols).det()?;
            let valid = d.abs() > Rational::from_integer(1.into());
            Ok(verdict(kind, valid, format!("determinant {d}")))
        }
        Certificate::PowerGap {
            clutter,
            k,
            monomial,
        } => {
            if monomial.n() != clutter.n() {
                return Err(Error::Dimension(
                    "monomial has the wrong number of variables".into(),
                ));
            }
            if clutter.is_empty() || *k == 0 {
                return Err(Error::Invalid(
                    "power gap needs a nonempty clutter and k ≥ 1".into(),
                ));
            }
            let symbolic = in_symbolic_power(monomial, &clutter.minimal_covers(), *k);
            let ordinary = edge_ideal(clutter).member_of_power(monomial, *k);
            Ok(verdict(
                kind,
                symbolic && !ordinary,
                format!("{monomial}: in I^({k}) {symbolic}, in I^{k} {ordinary}"),
            ))
        }
        Certificate::PackingViolation {
            clutter,
            deleted,
            contracted,
        } => {
            let d = one_based_mask(deleted, clutter.n())?;
            let c = one_based_mask(contracted, clutter.n())?;
            match clutter.minor(d, c)? {
                Minor::Unit => Ok(verdict(kind, false, "minor is the unit clutter".into())),
                Minor::Clutter(m) => {
                    let (tau, nu) = (m.tau(), m.nu());
                    Ok(verdict(
                        kind,
                        tau != nu,
                        format!("minor has tau {tau}, nu {nu}"),
                    ))
                }
            }
        }
        Certificate::MfmcGap { clutter, cost } => {
            let cover = clutter.weighted_cover_min(cost)?;
            let pack = clutter.max_integer_packing(cost)?;
            Ok(verdict(
                kind,
                cover > pack,
                format!("min cover {cover}, max packing {pack}"),
            ))
        }
    }
}

fn one_based_mask(vs: &[usize], n: usize) -> Result<u64> {
    vs.iter().try_fold(0u64, |m, &v| {
        if v == 0 || v > n {
            Err(Error::Dimension(format!("vertex {v} outside 1..={n}")))
        } else {
            Ok(m | 1 << (v - 1))
        }
    })
}

/// Feasibility, then a rank check of the tight rows by Gaussian elimination.
fn check_vertex(a: &ExactMatrix, x: &[Rational]) -> Result<(bool, String)> {
    let n = a.cols();
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "point of length {} in dimension {n}",
            x.len()
        )));
    }
    if x.iter().all(|v| v.is_integer()) {
        return Ok((false, "point is integral".into()));
    }
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    if x.iter().any(|v| *v < zero) {
        return Ok((false, "negative coordinate".into()));
    }
    let mut tight: Vec<Vec<Rational>> = Vec::new();
    for r in 0..a.rows() {
        let load: Rational = (0..n).map(|c| a.get(r, c) * &x[c]).sum();
        if load < one {
            return Ok((false, format!("edge row {r} has load {load} < 1")));
        }
        if load == one {
            tight.push(a.row(r).to_vec());
        }
    }
    for (j, v) in x.iter().enumerate() {
        if *v == zero {
            let mut e = vec![zero.clone(); n];
            e[j] = one.clone();
            tight.push(e);
        }
    }
    let count = tight.len();
    let rank = if count == 0 {
        0
    } else {
        ExactMatrix::from_rows(n, tight)?.rank()
    };
    Ok((
        rank == n,
        format!("{count} tight constraints of rank {rank} in dimension {n}"),
    ))
}

/// Every certificate a report carries, with the clutter rebuilt from the
/// report's graph so that a tampered hypergraph section is caught.
pub fn certificates_of(report: &DecisionReport) -> Result<Vec<Certificate>> {
    let g = report.graph.to_graph()?;
    let clutter = build_path_hypergraph(&g, PathHypergraphSpec::new(report.hypergraph.t)?);
    if clutter != report.hypergraph.clutter {
        return Err(Error::Invalid(
            "hypergraph section does not match the graph".into(),
        ));
    }
    let mut out = Vec::new();
    if let Some(w) = &report.checks.tu.witness {
        out.push(Certificate::non_tu(&clutter, w));
    }
    if let Some(v) = report.checks.ideal.as_ref().and_then(|i| i.vertex.as_ref()) {
        out.push(Certificate::FractionalVertex {
            clutter: clutter.clone(),
            coords: v.coords.clone(),
        });
    }
    if let Some(p) = &report.checks.packing.violation {
        out.push(Certificate::PackingViolation {
            clutter: clutter.clone(),
            deleted: p.deleted.clone(),
            contracted: p.contracted.clone(),
        });
    }
    if let Some((k, m)) = report.checks.ntf.as_ref().and_then(|r| r.check.violation()) {
        out.push(Certificate::PowerGap {
            clutter: clutter.clone(),
            k,
            monomial: m.clone(),
        });
    }
    Ok(out)
}

/// Checks every certificate in `report` and that a negative verdict has one.
pub fn verify_report(report: &DecisionReport) -> Result<Vec<Verification>> {
    let certs = certificates_of(report)?;
    let mut out = certs.iter().map(verify).collect::<Result<Vec<_>>>()?;
    if !report.mengerian {
        let backed = match report.trace {
            MethodTrace::NonIdeal => certs
                .iter()
                .any(|c| matches!(c, Certificate::FractionalVertex { .. })),
            MethodTrace::PowerEquality => certs
                .iter()
                .any(|c| matches!(c, Certificate::PowerGap { .. })),
            _ => false,
        };
        out.push(verdict(
            "verdict",
            backed,
            format!("negative verdict via {}", report.trace.as_str()),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::decide_mengerian_exact;
    use crate::graph::make_family;
    use crate::linalg::rational;

    fn h3(name: &str, p: usize) -> Clutter {
        build_path_hypergraph(
            &make_family(name, &[p]).unwrap(),
            PathHypergraphSpec::new(3).unwrap(),
        )
    }

    #[test]
    fn fractional_vertex() {
        let c = h3("cycle", 5);
        let good = Certificate::FractionalVertex {
            clutter: c.clone(),
            coords: vec![rational(1, 4); 5],
        };
        assert!(verify(&good).unwrap().valid);
        let interior = Certificate::FractionalVertex {
            clutter: c.clone(),
            coords: vec![rational(1, 2); 5],
        };
        assert!(!verify(&interior).unwrap().valid);
        let infeasible = Certificate::FractionalVertex {
            clutter: c,
            coords: vec![rational(1, 8); 5],
        };
        assert!(!verify(&infeasible).unwrap().valid);
    }

    #[test]
    fn non_tu() {
        let c = h3("cycle", 5);
        let all: Vec<usize> = (0..5).collect();
        let cert = Certificate::NonTu {
            clutter: c.clone(),
            rows: all.clone(),
            cols: all,
        };
        let v = verify(&cert).unwrap();
        assert!(v.valid);
        assert!(v.detail.contains('4'));
        let one = Certificate::NonTu {
            clutter: c.clone(),
            rows: vec![0],
            cols: vec![0],
        };
        assert!(!verify(&one).unwrap().valid);
        let bad = Certificate::NonTu {
            clutter: c,
            rows: vec![0, 9],
            cols: vec![0, 1],
        };
        assert!(verify(&bad).is_err());
    }

    #[test]
    fn power_gap() {
        let c = h3("cycle", 5);
        let m = Monomial::parse("x1*x2*x3*x4*x5", 5).unwrap();
        assert!(
            verify(&Certificate::PowerGap {
                clutter: c.clone(),
                k: 2,
                monomial: m
            })
            .unwrap()
            .valid
        );
        let sq = Monomial::parse("x1^2*x2^2*x3^2*x4^2", 5).unwrap();
        assert!(
            !verify(&Certificate::PowerGap {
                clutter: c,
                k: 2,
                monomial: sq
            })
            .unwrap()
            .valid
        );
    }

    #[test]
    fn packing_and_mfmc() {
        let c = h3("cycle", 5);
        let whole = Certificate::PackingViolation {
            clutter: c.clone(),
            deleted: vec![],
            contracted: vec![],
        };
        assert!(verify(&whole).unwrap().valid);
        let gap = Certificate::MfmcGap {
            clutter: c.clone(),
            cost: vec![1; 5],
        };
        assert!(verify(&gap).unwrap().valid);
        let none = Certificate::MfmcGap {
            clutter: h3("path", 6),
            cost: vec![1; 6],
        };
        assert!(!verify(&none).unwrap().valid);
        let bad = Certificate::PackingViolation {
            clutter: c,
            deleted: vec![0],
            contracted: vec![],
        };
        assert!(verify(&bad).is_err());
    }

    #[test]
    fn reports_verify() {
        for g in [
            make_family("cycle", &[5]).unwrap(),
            make_family("cycle", &[7]).unwrap(),
        ] {
            let r = decide_mengerian_exact(&g, 3).unwrap();
            let checks = verify_report(&r).unwrap();
            assert!(checks.iter().all(|v| v.valid), "{checks:?}");
        }
    }

    #[test]
    fn tampered_report_is_rejected() {
        let mut r = decide_mengerian_exact(&make_family("cycle", &[6]).unwrap(), 3).unwrap();
        r.hypergraph.clutter = h3("path", 6);
        assert!(verify_report(&r).is_err());
    }

    #[test]
    fn json_shape() {
        let cert = Certificate::MfmcGap {
            clutter: h3("cycle", 5),
            cost: vec![1; 5],
        };
        let text = serde_json::to_string(&cert).unwrap();
        assert!(text.starts_with("{\"kind\":\"mfmc_gap\""));
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
    }
}
