//! Total unimodularity by exhaustive subdeterminant scan.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parallel;

use super::{bareiss, rational_str, ExactMatrix, Rational};

/// A square submatrix whose determinant is not in `{0, ±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "rational_str")]
    pub det: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TuCheck {
    Unimodular,
    Violation(TuWitness),
}

impl TuCheck {
    pub fn is_unimodular(&self) -> bool {
        matches!(self, TuCheck::Unimodular)
    }

    pub fn witness(&self) -> Option<&TuWitness> {
        match self {
            TuCheck::Unimodular => None,
            TuCheck::Violation(w) => Some(w),
        }
    }
}

fn sign_entries(m: &ExactMatrix) -> Result<Vec<i8>> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            match m.int_entry(r, c) {
                Some(v @ -1..=1) => out.push(v as i8),
                _ => return Err(Error::NotSignMatrix(m.get(r, c).to_string())),
            }
        }
    }
    Ok(out)
}

/// Scans square submatrices by increasing size and stops at the first
/// determinant outside `{0, ±1}`.
///
/// At size `k` every smaller minor is already known to be in `{0, ±1}`, so a
/// submatrix with a row or column holding at most one nonzero is skipped:
/// its determinant is zero or ± a smaller minor.
pub fn is_totally_unimodular(m: &ExactMatrix) -> Result<TuCheck> {
    let a = sign_entries(m)?;
    let (rows, cols) = (m.rows(), m.cols());
    let at = |r: usize, c: usize| a[r * cols + c];
    for k in 2..=rows.min(cols) {
        let col_sets: Vec<Vec<usize>> = (0..cols).combinations(k).collect();
        let hit = parallel::find_map_first(&col_sets, |cs| {
            let eligible: Vec<usize> = (0..rows)
                .filter(|&r| cs.iter().filter(|&&c| at(r, c) != 0).count() >= 2)
                .collect();
            if eligible.len() < k {
                return None;
            }
            let mut buf = vec![0i128; k * k];
            for rs in eligible.iter().copied().combinations(k) {
                let thin_col = cs
                    .iter()
                    .any(|&c| rs.iter().filter(|&&r| at(r, c) != 0).count() < 2);
                if thin_col {
                    continue;
                }
                for (i, &r) in rs.iter().enumerate() {
                    for (j, &c) in cs.iter().enumerate() {
                        buf[i * k + j] = i128::from(at(r, c));
                    }
                }
                let d = bareiss::det(&mut buf, k);
                if d.abs() > 1 {
                    return Some(TuWitness {
                        rows: rs,
                        cols: cs.clone(),
                        det: Rational::from_integer(d.into()),
                    });
                }
            }
            None
        });
        if let Some(w) = hit {
            return Ok(TuCheck::Violation(w));
        }
    }
    Ok(TuCheck::Unimodular)
}

/// Ghouila-Houri: every column subset can be signed so the signed column sum
/// lies in `{0, ±1}^m`. Independent of the determinant scan; exponential in
/// the column count, meant for cross-validation on small matrices.
pub fn is_totally_unimodular_ghouila_houri(m: &ExactMatrix) -> Result<bool> {
    let a = sign_entries(m)?;
    let (rows, cols) = (m.rows(), m.cols());
    if cols > 20 {
        return Err(Error::Cap(format!("Ghouila-Houri check on {cols} columns")));
    }
    let subsets: Vec<u32> = (1u32..1 << cols).collect();
    Ok(parallel::find_map_first(&subsets, |&s| {
        let members: Vec<usize> = (0..cols).filter(|&c| s & (1 << c) != 0).collect();
        // fixing the sign of the first member loses nothing
        let signable = (0u32..1 << (members.len() - 1)).any(|signs| {
            (0..rows).all(|r| {
                let sum: i32 = members
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let v = i32::from(a[r * cols + c]);
                        if i > 0 && signs & (1 << (i - 1)) != 0 {
                            -v
                        } else {
                            v
                        }
                    })
                    .sum();
                sum.abs() <= 1
            })
        });
        (!signable).then_some(())
    })
    .is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path_hypergraph, make_family, PathHypergraphSpec};

    fn incidence(name: &str, p: &[usize]) -> ExactMatrix {
        let g = make_family(name, p).unwrap();
        build_path_hypergraph(&g, PathHypergraphSpec::new(3).unwrap()).incidence_matrix()
    }

    #[test]
    fn path_six_is_tu() {
        let a = incidence("path", &[6]);
        assert!(is_totally_unimodular(&a).unwrap().is_unimodular());
        assert!(is_totally_unimodular_ghouila_houri(&a).unwrap());
    }

    #[test]
    fn all_ones_row_is_tu() {
        let a = ExactMatrix::from_int_rows(4, &[vec![1, 1, 1, 1]]);
        assert!(is_totally_unimodular(&a).unwrap().is_unimodular());
    }

    #[test]
    fn cycle_eight_is_not_tu() {
        let a = incidence("cycle", &[8]);
        let TuCheck::Violation(w) = is_totally_unimodular(&a).unwrap() else {
            panic!("expected a violation");
        };
        let sub = a.submatrix(&w.rows, &w.cols);
        assert_eq!(sub.det().unwrap(), w.det);
        assert!(w.det.numer().magnitude() > &1u32.into());
        assert!(!is_totally_unimodular_ghouila_houri(&a).unwrap());
    }

    #[test]
    fn odd_cycle_of_graph_edges() {
        // vertex-edge incidence of a triangle: det 2
        let a = ExactMatrix::from_int_rows(3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let w = is_totally_unimodular(&a).unwrap();
        assert_eq!(w.witness().unwrap().det, Rational::from_integer(2.into()));
    }

    #[test]
    fn signed_network_matrix() {
        let a = ExactMatrix::from_int_rows(3, &[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]);
        assert!(is_totally_unimodular(&a).unwrap().is_unimodular());
        assert!(is_totally_unimodular_ghouila_houri(&a).unwrap());
    }

    #[test]
    fn rejects_other_entries() {
        let a = ExactMatrix::from_int_rows(2, &[vec![2, 0]]);
        assert!(matches!(
            is_totally_unimodular(&a),
            Err(Error::NotSignMatrix(_))
        ));
    }

    #[test]
    fn empty_matrix_is_tu() {
        assert!(is_totally_unimodular(&ExactMatrix::zeros(0, 4))
            .unwrap()
            .is_unimodular());
    }
}
