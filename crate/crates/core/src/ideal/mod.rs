//! Monomial ideals given by minimal generators.

mod symbolic;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::bits;

pub use symbolic::{
    in_symbolic_power, is_normally_torsion_free, is_normally_torsion_free_capped, ntf_bound,
    powers_equal, symbolic_power, symbolic_power_degree_sum, NtfCheck, NtfStep, PowerCheck,
};

/// Exponent vector `x1^e1 ⋯ xn^en`. Serializes as [`MonomialRepr`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "MonomialRepr", try_from = "MonomialRepr")]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// Product of the variables in `mask`.
    pub fn squarefree(n: usize, mask: u64) -> Self {
        Monomial((0..n).map(|v| u32::from(mask & (1 << v) != 0)).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self / other`, assuming `other` divides `self`.
    fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Parses `x1*x3^2` (or `1`) in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let bad = |msg: String| Error::Invalid(format!("monomial `{s}`: {msg}"));
        let mut e = vec![0u32; n];
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial(e));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, pow) = factor.split_once('^').unwrap_or((factor, "1"));
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .filter(|&i| (1..=n).contains(&i))
                .ok_or_else(|| bad(format!("`{var}` is not one of x1..x{n}")))?;
            let pow: u32 = pow
                .parse()
                .map_err(|_| bad(format!("bad exponent `{pow}`")))?;
            e[idx - 1] += pow;
        }
        Ok(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Exponent vector plus its `x1*x3^2` rendering, as written into reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRepr {
    pub exponents: Vec<u32>,
    pub text: String,
}

impl From<&Monomial> for MonomialRepr {
    fn from(m: &Monomial) -> Self {
        MonomialRepr {
            exponents: m.0.clone(),
            text: m.to_string(),
        }
    }
}

impl From<Monomial> for MonomialRepr {
    fn from(m: Monomial) -> Self {
        MonomialRepr::from(&m)
    }
}

impl TryFrom<MonomialRepr> for Monomial {
    type Error = Error;

    fn try_from(r: MonomialRepr) -> Result<Monomial> {
        let m = Monomial(r.exponents);
        if Monomial::parse(&r.text, m.n())? != m {
            return Err(Error::Invalid(format!(
                "monomial text `{}` disagrees with its exponents",
                r.text
            )));
        }
        Ok(m)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Degree first, then exponent vectors in descending lexicographic order
/// (so `x1x2x3x4` precedes `x2x3x4x5`).
fn gen_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

/// Keeps the divisibility-minimal elements, sorted by [`gen_order`].
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(gen_order);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::Dimension(format!(
                "monomial {g} has {} variables, expected {n}",
                g.n()
            )));
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `μ(I)`: number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I · J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(out),
        })
    }

    /// Minimal generators of `I^k`.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::Invalid("power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(out),
        })
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!(
                "ideals in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Whether `m ∈ I^k`: some `k` generators (with repetition) have a
    /// product dividing `m`.
    pub fn member_of_power(&self, m: &Monomial, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if m.n() != self.n {
            return false;
        }
        let min_deg = self
            .gens
            .iter()
            .map(Monomial::degree)
            .min()
            .unwrap_or(u32::MAX);
        if u64::from(m.degree()) < k as u64 * u64::from(min_deg) {
            return false;
        }
        let mut failed = HashSet::new();
        power_search(&self.gens, m, k, 0, &mut failed)
    }
}

/// Multiset search with generators taken in nondecreasing index order.
fn power_search(
    gens: &[Monomial],
    budget: &Monomial,
    k: usize,
    start: usize,
    failed: &mut HashSet<(Monomial, usize, usize)>,
) -> bool {
    if k == 0 {
        return true;
    }
    let key = (budget.clone(), k, start);
    if failed.contains(&key) {
        return false;
    }
    // best fit first: generators using the most of the remaining budget
    let mut fits: Vec<usize> = (start..gens.len())
        .filter(|&i| gens[i].divides(budget))
        .collect();
    fits.sort_by_key(|&i| std::cmp::Reverse(gens[i].degree()));
    for i in fits {
        if power_search(gens, &budget.quotient(&gens[i]), k - 1, i, failed) {
            return true;
        }
    }
    failed.insert(key);
    false
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gs.join(", "))
    }
}

/// `I(c)`: one squarefree generator per edge. The empty clutter gives the
/// zero ideal.
pub fn edge_ideal(c: &Clutter) -> MonomialIdeal {
    let gens = c
        .edge_masks()
        .iter()
        .map(|&e| Monomial::squarefree(c.n(), e))
        .collect();
    MonomialIdeal {
        n: c.n(),
        gens: minimalize(gens),
    }
}

/// Minimal generators of `P^k` for the monomial prime `P = (x_i : i ∈ cover)`:
/// all degree-`k` monomials in the cover variables.
pub fn prime_power(cover: u64, k: usize, n: usize) -> Result<MonomialIdeal> {
    if cover == 0 {
        return Err(Error::Invalid("prime of an empty cover".into()));
    }
    if k == 0 {
        return Err(Error::Invalid("power exponent must be at least 1".into()));
    }
    let vars: Vec<usize> = bits(cover).collect();
    if vars.last().is_some_and(|&v| v >= n) {
        return Err(Error::Invalid("cover variable outside the ring".into()));
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    compositions(&vars, 0, k as u32, &mut e, &mut out);
    Ok(MonomialIdeal {
        n,
        gens: minimalize(out),
    })
}

fn compositions(vars: &[usize], i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i + 1 == vars.len() {
        e[vars[i]] = left;
        out.push(Monomial(e.clone()));
        e[vars[i]] = 0;
        return;
    }
    for take in (0..=left).rev() {
        e[vars[i]] = take;
        compositions(vars, i + 1, left - take, e, out);
    }
    e[vars[i]] = 0;
}
