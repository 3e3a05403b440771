//! Vertices of the covering polyhedron `Q(A) = {x ≥ 0 : Ax ≥ 1}`.
//!
//! A point of `Q(A)` is a vertex exactly when its tight constraints have
//! full column rank. Enumeration picks a basis of `n` constraints: the
//! nonnegativity rows fix `x_Z = 0` and `|S|` edge rows (with `S` the
//! complementary support) give a square 0/1 system `A[R, S] x_S = 1`.
//! Supports that are not vertex covers are skipped because they leave some
//! edge with `Σ x = 0 < 1`; that loses no vertex.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::parallel;

use super::{bareiss, is_nonnegative, rational_vec, ExactMatrix, Rational};

/// A vertex of `Q(A)` with the constraints it makes tight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronVertex {
    #[serde(with = "rational_vec")]
    pub coords: Vec<Rational>,
    /// Rows `i` with `⟨A_i, x⟩ = 1`.
    pub tight_edges: Vec<usize>,
    /// Coordinates with `x_j = 0`.
    pub tight_nonneg: Vec<usize>,
}

impl PolyhedronVertex {
    /// Checks that `coords` is a vertex of `Q(a)` and returns it with its
    /// tight constraints.
    pub fn certify(a: &ExactMatrix, coords: Vec<Rational>) -> Result<PolyhedronVertex> {
        let n = a.cols();
        if coords.len() != n {
            return Err(Error::Dimension(format!(
                "point of length {} in dimension {n}",
                coords.len()
            )));
        }
        if !is_nonnegative(&coords) {
            return Err(Error::Invalid("point has a negative coordinate".into()));
        }
        let loads = a.mul_vec(&coords)?;
        let one = Rational::one();
        if let Some(i) = loads.iter().position(|l| *l < one) {
            return Err(Error::Invalid(format!("edge constraint {i} is violated")));
        }
        let tight_edges: Vec<usize> = (0..a.rows()).filter(|&i| loads[i] == one).collect();
        let tight_nonneg: Vec<usize> = (0..n).filter(|&j| coords[j].is_zero()).collect();
        let rank = tight_matrix(a, &tight_edges, &tight_nonneg).rank();
        if rank < n {
            return Err(Error::Invalid(format!(
                "tight constraints have rank {rank} < {n}: not a vertex"
            )));
        }
        Ok(PolyhedronVertex {
            coords,
            tight_edges,
            tight_nonneg,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    pub fn tight_count(&self) -> usize {
        self.tight_edges.len() + self.tight_nonneg.len()
    }

    /// Rank of the tight subsystem.
    pub fn tight_rank(&self, a: &ExactMatrix) -> usize {
        tight_matrix(a, &self.tight_edges, &self.tight_nonneg).rank()
    }
}

fn tight_matrix(a: &ExactMatrix, edges: &[usize], zeros: &[usize]) -> ExactMatrix {
    let n = a.cols();
    let mut rows: Vec<Vec<Rational>> = edges.iter().map(|&i| a.row(i).to_vec()).collect();
    for &j in zeros {
        let mut r = vec![Rational::zero(); n];
        r[j] = Rational::one();
        rows.push(r);
    }
    ExactMatrix::from_rows(n, rows).expect("rows have n entries")
}

/// Row masks of a 0/1 matrix.
fn row_masks(a: &ExactMatrix) -> Result<Vec<u64>> {
    if a.cols() > 64 {
        return Err(Error::Cap(format!("{} columns", a.cols())));
    }
    (0..a.rows())
        .map(|r| {
            (0..a.cols()).try_fold(0u64, |m, c| match a.int_entry(r, c) {
                Some(0) => Ok(m),
                Some(1) => Ok(m | (1 << c)),
                _ => Err(Error::Invalid(format!("entry ({r}, {c}) is not 0/1"))),
            })
        })
        .collect()
}

/// A feasible basic solution as `(numerators, common denominator)`, reduced.
type Scaled = (Vec<i128>, i128);

/// Supports worth trying, smallest first.
fn supports(n: usize, edges: &[u64]) -> Vec<u64> {
    let mut s: Vec<u64> = (0u64..1 << n)
        .filter(|&s| edges.iter().all(|e| e & s != 0))
        .collect();
    s.sort_by_key(|m| (m.count_ones(), *m));
    s
}

/// Solves every basis with support `s`, calling `visit` on each feasible
/// point until it returns `Some`.
fn scan_support<R>(
    n: usize,
    edges: &[u64],
    s: u64,
    mut visit: impl FnMut(Scaled) -> Option<R>,
) -> Option<R> {
    let cols: Vec<usize> = bits(s).collect();
    let k = cols.len();
    let eligible: Vec<usize> = (0..edges.len()).filter(|&i| edges[i] & s != 0).collect();
    let mut buf = vec![0i128; k * (k + 1)];
    for rs in eligible.into_iter().combinations(k) {
        for (i, &r) in rs.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                buf[i * (k + 1) + j] = i128::from(edges[r] & (1 << c) != 0);
            }
            buf[i * (k + 1) + k] = 1;
        }
        let Some((mut y, mut d)) = bareiss::solve_scaled(&mut buf, k) else {
            continue;
        };
        if d < 0 {
            d = -d;
            y.iter_mut().for_each(|v| *v = -*v);
        }
        if y.iter().any(|&v| v < 0) {
            continue;
        }
        let mut full = vec![0i128; n];
        for (j, &c) in cols.iter().enumerate() {
            full[c] = y[j];
        }
        if edges
            .iter()
            .any(|&e| bits(e).map(|c| full[c]).sum::<i128>() < d)
        {
            continue;
        }
        let g = full.iter().fold(d, |g, &v| g.gcd(&v));
        full.iter_mut().for_each(|v| *v /= g);
        if let Some(r) = visit((full, d / g)) {
            return Some(r);
        }
    }
    None
}

fn to_vertex(a: &ExactMatrix, (nums, den): Scaled) -> PolyhedronVertex {
    let coords = nums
        .iter()
        .map(|&v| Rational::new(BigInt::from(v), BigInt::from(den)))
        .collect();
    PolyhedronVertex::certify(a, coords).expect("basic feasible solutions are vertices")
}

/// Every vertex of `Q(a)` for a 0/1 matrix `a`, sorted by coordinates.
pub fn covering_polyhedron_vertices(a: &ExactMatrix) -> Result<Vec<PolyhedronVertex>> {
    let edges = row_masks(a)?;
    let n = a.cols();
    if n > 24 {
        return Err(Error::Cap(format!("vertex enumeration in dimension {n}")));
    }
    let found: Vec<Scaled> = parallel::map(&supports(n, &edges), |&s| {
        let mut pts = Vec::new();
        scan_support::<()>(n, &edges, s, |p| {
            pts.push(p);
            None
        });
        pts
    })
    .into_iter()
    .flatten()
    .collect();
    let mut unique: BTreeMap<Vec<Rational>, Scaled> = BTreeMap::new();
    for p in found {
        let key =
            p.0.iter()
                .map(|&v| Rational::new(BigInt::from(v), BigInt::from(p.1)))
                .collect();
        unique.entry(key).or_insert(p);
    }
    Ok(unique.into_values().map(|p| to_vertex(a, p)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealCheck {
    Ideal,
    /// A vertex of `Q(A)` with a non-integer coordinate.
    Fractional(PolyhedronVertex),
}

impl IdealCheck {
    pub fn is_ideal(&self) -> bool {
        matches!(self, IdealCheck::Ideal)
    }

    pub fn certificate(&self) -> Option<&PolyhedronVertex> {
        match self {
            IdealCheck::Ideal => None,
            IdealCheck::Fractional(v) => Some(v),
        }
    }
}

/// Whether every vertex of `Q(A)` is integral; stops at the first
/// fractional one, trying larger supports first so that a fractional
/// `A⁻¹1` is the one reported. The empty clutter is ideal.
pub fn is_ideal(c: &Clutter) -> Result<IdealCheck> {
    if c.is_empty() {
        return Ok(IdealCheck::Ideal);
    }
    let a = c.incidence_matrix();
    let edges = row_masks(&a)?;
    let n = a.cols();
    if n > 24 {
        return Err(Error::Cap(format!("vertex enumeration in dimension {n}")));
    }
    let mut order = supports(n, &edges);
    order.reverse();
    let hit = parallel::find_map_first(&order, |&s| {
        scan_support(n, &edges, s, |p| (p.1 != 1).then_some(p))
    });
    Ok(match hit {
        Some(p) => IdealCheck::Fractional(to_vertex(&a, p)),
        None => IdealCheck::Ideal,
    })
}

#[cfg(test)]
/// `true` when `x` is a vertex of `Q(a)` with a fractional coordinate.
pub(crate) fn is_fractional_vertex(a: &ExactMatrix, x: &[Rational]) -> bool {
    PolyhedronVertex::certify(a, x.to_vec()).is_ok_and(|v| !v.is_integral())
}
