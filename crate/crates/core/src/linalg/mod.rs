//! Exact rational linear algebra.

mod bareiss;
mod polyhedron;
mod tu;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use polyhedron::{covering_polyhedron_vertices, is_ideal, IdealCheck, PolyhedronVertex};
pub use tu::{is_totally_unimodular, is_totally_unimodular_ghouila_houri, TuCheck, TuWitness};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` (or `p` for integers); never floating point.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("`{s}` is not a rational p/q"));
    let s = s.trim();
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Serde adapter: `Vec<Rational>` as `["1/2", "0", …]`.
pub mod rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter: a single `Rational` as `"p/q"`.
pub mod rational_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Integer rows, each of length `cols` (needed when there are no rows).
    pub fn from_int_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().map(|&x| Rational::from_integer(BigInt::from(x))));
        }
        ExactMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let m = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(ExactMatrix {
            rows: m,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// The entry as `i64` when it is an integer that fits.
    pub fn int_entry(&self, r: usize, c: usize) -> Option<i64> {
        let v = self.get(r, c);
        if v.is_integer() {
            v.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Exact determinant by Bareiss elimination on the row-scaled integer
    /// matrix.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let k = self.rows;
        let mut scale = BigInt::one();
        let mut ints: Vec<BigInt> = Vec::with_capacity(k * k);
        for r in 0..k {
            let lcm = self
                .row(r)
                .iter()
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            for x in self.row(r) {
                ints.push(x.numer() * (&lcm / x.denom()));
            }
            scale *= lcm;
        }
        Ok(Rational::new(bareiss::det(&mut ints, k), scale))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Row echelon form and its pivot columns.
    fn echelon(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut a: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for x in &mut a[row][col..] {
                *x = &*x * &inv;
            }
            let pivot_row = a[row].clone();
            for (r, line) in a.iter_mut().enumerate() {
                if r != row && !line[col].is_zero() {
                    let f = line[col].clone();
                    for (x, p) in line[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    /// Unique solution of `self · x = b`.
    ///
    /// `Ok(None)` when the system is inconsistent; an error when it is
    /// consistent but the columns are dependent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        if pivots.len() < self.cols {
            return Err(Error::Underdetermined {
                rank: pivots.len(),
                cols: self.cols,
            });
        }
        Ok(Some(
            (0..self.cols).map(|i| red[i][self.cols].clone()).collect(),
        ))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Clutter;
    use crate::graph::{build_path_hypergraph, make_family, PathHypergraphSpec};

    fn incidence(name: &str, k: usize) -> ExactMatrix {
        let g = make_family(name, &[k]).unwrap();
        build_path_hypergraph(&g, PathHypergraphSpec::new(3).unwrap()).incidence_matrix()
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &ExactMatrix) -> Rational {
        let k = m.rows();
        if k == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for c in 0..k {
            if m.get(0, c).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..k).collect();
            let cols: Vec<usize> = (0..k).filter(|&j| j != c).collect();
            let term = m.get(0, c) * cofactor_det(&m.submatrix(&rows, &cols));
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_examples() {
        assert_eq!(incidence("cycle", 5).det().unwrap(), rational(4, 1));
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), rational(1, 1));
        let c8 = incidence("cycle", 8);
        assert_eq!(cofactor_det(&c8), Rational::zero());
        assert_eq!(c8.det().unwrap(), Rational::zero());
        assert!(ExactMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn det_with_fractions() {
        let m = ExactMatrix::from_rows(
            2,
            vec![
                vec![rational(1, 2), rational(1, 3)],
                vec![rational(2, 1), rational(5, 7)],
            ],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&m));
        assert_eq!(m.det().unwrap(), rational(5, 14) - rational(2, 3));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(incidence("cycle", 5).rank(), 5);
        assert_eq!(incidence("cycle", 8).rank(), 5);
        assert_eq!(Clutter::empty(3).unwrap().incidence_matrix().rank(), 0);
    }

    #[test]
    fn solve_examples() {
        let id = ExactMatrix::identity(2);
        assert_eq!(
            id.solve(&[rational(1, 1), rational(2, 1)]).unwrap(),
            Some(vec![rational(1, 1), rational(2, 1)])
        );

        let m = ExactMatrix::from_int_rows(
            5,
            &[
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![1, 1, 0, 1, 1],
                vec![1, 0, 1, 0, 0],
                vec![0, 1, 1, 0, 0],
            ],
        );
        let b: Vec<Rational> = [0, 0, 1, 1, 1].iter().map(|&x| rational(x, 1)).collect();
        let half = rational(1, 2);
        let zero = Rational::zero();
        assert_eq!(
            m.solve(&b).unwrap(),
            Some(vec![half.clone(), half.clone(), half, zero.clone(), zero])
        );

        let inconsistent = ExactMatrix::from_int_rows(1, &[vec![1], vec![1]]);
        assert_eq!(
            inconsistent
                .solve(&[rational(0, 1), rational(1, 1)])
                .unwrap(),
            None
        );

        let under = ExactMatrix::from_int_rows(2, &[vec![1, 1]]);
        assert!(matches!(
            under.solve(&[rational(1, 1)]),
            Err(Error::Underdetermined { rank: 1, cols: 2 })
        ));
        assert!(id.solve(&[rational(1, 1)]).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&rational(2, 4)), "1/2");
        assert_eq!(format_rational(&rational(0, 3)), "0");
        assert_eq!(parse_rational("3/6").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), rational(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }
}
