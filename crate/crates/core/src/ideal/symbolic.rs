//! Symbolic powers and the power-equality decision.

use serde::{Deserialize, Serialize};

use super::{edge_ideal, minimalize, prime_power, Monomial, MonomialIdeal};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::parallel;

/// Largest `(k+1)^n` box the degree-sum route will scan.
const MAX_BOX: u64 = 1 << 24;

fn check_args(c: &Clutter, k: usize) -> Result<()> {
    if c.is_empty() {
        return Err(Error::Invalid(
            "the zero ideal has no symbolic powers here".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Invalid("power exponent must be at least 1".into()));
    }
    Ok(())
}

/// `I^(k)` as the intersection of `P_C^k` over minimal covers `C`, smallest
/// covers first.
pub fn symbolic_power(c: &Clutter, k: usize) -> Result<MonomialIdeal> {
    check_args(c, k)?;
    let mut acc: Option<MonomialIdeal> = None;
    for cover in c.minimal_covers() {
        let p = prime_power(cover, k, c.n())?;
        acc = Some(match acc {
            None => p,
            Some(a) => a.intersect(&p)?,
        });
    }
    Ok(acc.expect("a nonempty clutter has a cover"))
}

/// Whether `m` has degree at least `k` on every cover in `covers`.
pub fn in_symbolic_power(m: &Monomial, covers: &[u64], k: usize) -> bool {
    let e = m.exponents();
    covers
        .iter()
        .all(|&c| bits(c).map(|v| u64::from(e[v])).sum::<u64>() >= k as u64)
}

/// `I^(k)` by filtering the box `{0..k}^n` with the cover degree-sum test and
/// keeping points whose every unit decrement leaves the ideal.
pub fn symbolic_power_degree_sum(c: &Clutter, k: usize) -> Result<MonomialIdeal> {
    check_args(c, k)?;
    let n = c.n();
    let side = k as u64 + 1;
    let size = side
        .checked_pow(n as u32)
        .filter(|&s| s <= MAX_BOX)
        .ok_or_else(|| Error::Cap(format!("degree-sum box ({side})^{n} is too large")))?;
    let covers = c.minimal_covers();
    let gens = parallel::flat_map_index(size as usize, |idx| {
        let mut e = vec![0u32; n];
        let mut r = idx as u64;
        for slot in e.iter_mut() {
            *slot = (r % side) as u32;
            r /= side;
        }
        let m = Monomial::new(e);
        if !in_symbolic_power(&m, &covers, k) {
            return Vec::new();
        }
        let mut probe = m.clone();
        for i in 0..n {
            if m.0[i] == 0 {
                continue;
            }
            probe.0[i] -= 1;
            let inside = in_symbolic_power(&probe, &covers, k);
            probe.0[i] += 1;
            if inside {
                return Vec::new();
            }
        }
        vec![m]
    });
    Ok(MonomialIdeal {
        n,
        gens: minimalize(gens),
    })
}

/// Outcome of comparing `I^k` with `I^(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerCheck {
    pub k: usize,
    pub symbolic_generators: usize,
    pub violation: Option<Monomial>,
}

impl PowerCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// `I^k = I^(k)`; on failure the first generator of `I^(k)` outside `I^k`.
pub fn powers_equal(c: &Clutter, k: usize) -> Result<PowerCheck> {
    check_args(c, k)?;
    let i = edge_ideal(c);
    let sym = symbolic_power(c, k)?;
    let violation = parallel::find_map_first(sym.gens(), |g| {
        (!i.member_of_power(g, k)).then(|| g.clone())
    });
    Ok(PowerCheck {
        k,
        symbolic_generators: sym.mu(),
        violation,
    })
}

/// One step of the normally-torsion-free transcript.
pub type NtfStep = PowerCheck;

/// Result of checking `I^k = I^(k)` for `k = 2..=⌈μ/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtfCheck {
    pub mu: usize,
    pub bound: usize,
    pub steps: Vec<NtfStep>,
}

impl NtfCheck {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(PowerCheck::holds)
    }

    /// `(k, m)` with `m ∈ I^(k) \ I^k`.
    pub fn violation(&self) -> Option<(usize, &Monomial)> {
        self.steps
            .iter()
            .find_map(|s| s.violation.as_ref().map(|m| (s.k, m)))
    }
}

/// `⌈μ/2⌉`.
pub fn ntf_bound(mu: usize) -> usize {
    mu.div_ceil(2)
}

pub fn is_normally_torsion_free(c: &Clutter) -> Result<NtfCheck> {
    is_normally_torsion_free_capped(c, None)
}

/// As [`is_normally_torsion_free`], failing with a cap error when the bound
/// exceeds `max_k`. Stops at the first failing `k`.
pub fn is_normally_torsion_free_capped(c: &Clutter, max_k: Option<usize>) -> Result<NtfCheck> {
    let mu = c.edge_count();
    let bound = ntf_bound(mu);
    if let Some(cap) = max_k {
        if bound > cap {
            return Err(Error::Cap(format!(
                "power bound {bound} exceeds the cap {cap}"
            )));
        }
    }
    let mut steps = Vec::new();
    for k in 2..=bound {
        let step = powers_equal(c, k)?;
        let done = !step.holds();
        log::debug!(
            "k={k}: {} symbolic generators, equal={}",
            step.symbolic_generators,
            step.holds()
        );
        steps.push(step);
        if done {
            break;
        }
    }
    Ok(NtfCheck { mu, bound, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::tests::h3;

    #[test]
    fn first_symbolic_power_is_the_edge_ideal() {
        for (name, p) in [("cycle", 5), ("cycle", 6), ("path", 6), ("complete", 5)] {
            let c = h3(name, p);
            assert_eq!(symbolic_power(&c, 1).unwrap(), edge_ideal(&c), "{name} {p}");
            assert_eq!(symbolic_power_degree_sum(&c, 1).unwrap(), edge_ideal(&c));
        }
    }

    #[test]
    fn cycle_five_square() {
        let c = h3("cycle", 5);
        let all = Monomial::parse("x1*x2*x3*x4*x5", 5).unwrap();
        let sym = symbolic_power(&c, 2).unwrap();
        assert!(sym.contains(&all));
        assert!(in_symbolic_power(&all, &c.minimal_covers(), 2));
        assert_eq!(sym, symbolic_power_degree_sum(&c, 2).unwrap());
        let check = powers_equal(&c, 2).unwrap();
        assert_eq!(check.violation, Some(all));
        let ntf = is_normally_torsion_free(&c).unwrap();
        assert!(!ntf.holds());
        assert_eq!(ntf.violation().map(|(k, _)| k), Some(2));
    }

    #[test]
    fn cycle_eight_square() {
        let c = h3("cycle", 8);
        let i = edge_ideal(&c);
        assert_eq!(symbolic_power(&c, 2).unwrap(), i.power(2).unwrap());
        assert!(powers_equal(&c, 2).unwrap().holds());
    }

    #[test]
    fn trivial_cases() {
        let single = Clutter::new(4, &[vec![0, 1, 2, 3]]).unwrap();
        let ntf = is_normally_torsion_free(&single).unwrap();
        assert!(ntf.holds());
        assert!(ntf.steps.is_empty());
        assert_eq!(ntf.bound, 1);
        assert!(powers_equal(&h3("cycle", 6), 1).unwrap().holds());

        let empty = Clutter::empty(4).unwrap();
        assert!(is_normally_torsion_free(&empty).unwrap().holds());
        assert!(symbolic_power(&empty, 2).is_err());
        assert!(symbolic_power(&single, 0).is_err());
    }

    #[test]
    fn cap_is_reported() {
        let c = h3("cycle", 8);
        assert!(matches!(
            is_normally_torsion_free_capped(&c, Some(3)),
            Err(Error::Cap(_))
        ));
    }

    #[test]
    fn bound_is_ceiling() {
        assert_eq!(ntf_bound(8), 4);
        assert_eq!(ntf_bound(7), 4);
        assert_eq!(ntf_bound(1), 1);
        assert_eq!(ntf_bound(0), 0);
    }
}
