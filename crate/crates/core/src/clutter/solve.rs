//! Exact covering and packing numbers by branch and bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bits;
use crate::parallel;

use super::Clutter;

/// Outcome of a bounded max-flow min-cut scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MfmcProbe {
    /// Integer min cover exceeds integer max packing at `cost`.
    Refuted {
        cost: Vec<u32>,
        cover_min: u64,
        packing_max: u64,
    },
    /// No violation with entries up to `cmax`.
    Undecided { cmax: u32 },
}

impl Clutter {
    /// A minimum vertex cover (as a mask).
    pub fn min_cover(&self) -> u64 {
        let costs = vec![1; self.n()];
        self.weighted_cover(&costs).1
    }

    /// Minimum vertex-cover size; 0 for the empty clutter.
    pub fn tau(&self) -> usize {
        self.min_cover().count_ones() as usize
    }

    /// A maximum matching (pairwise disjoint edges), as edge masks.
    pub fn max_matching(&self) -> Vec<u64> {
        let mut s = MatchSearch {
            edges: &self.edges,
            best: Vec::new(),
            cur: Vec::new(),
        };
        let union = self.edges.iter().fold(0, |m, e| m | e);
        s.run(union);
        s.best
    }

    pub fn nu(&self) -> usize {
        self.max_matching().len()
    }

    pub fn has_konig(&self) -> bool {
        self.tau() == self.nu()
    }

    /// All inclusion-minimal vertex covers, sorted by size then
    /// lexicographically, as masks.
    ///
    /// Built edge by edge: a minimal transversal of the first `i+1` edges is
    /// either a transversal of the first `i` that meets the new edge, or
    /// one extended by a vertex of it.
    pub fn minimal_covers(&self) -> Vec<u64> {
        let mut covers: Vec<u64> = vec![0];
        for &e in &self.edges {
            let mut next: Vec<u64> = Vec::new();
            for &t in &covers {
                if t & e != 0 {
                    next.push(t);
                } else {
                    next.extend(bits(e).map(|v| t | (1 << v)));
                }
            }
            next.sort_unstable_by_key(|m| (m.count_ones(), *m));
            next.dedup();
            let mut kept: Vec<u64> = Vec::with_capacity(next.len());
            for t in next {
                if !kept.iter().any(|&k| k & !t == 0) {
                    kept.push(t);
                }
            }
            covers = kept;
        }
        covers.sort_unstable_by_key(|&m| (m.count_ones(), super::lex_key(m)));
        covers
    }

    /// Minimum of `⟨cost, x⟩` over 0/1 covers `x`, with a witness mask.
    pub fn weighted_cover(&self, cost: &[u32]) -> (u64, u64) {
        assert_eq!(cost.len(), self.n(), "cost vector length");
        // free vertices go in unconditionally
        let free = (0..self.n())
            .filter(|&v| cost[v] == 0)
            .fold(0u64, |m, v| m | (1 << v));
        let edges: Vec<u64> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e & free == 0)
            .collect();
        let mut s = CoverSearch {
            edges: &edges,
            cost,
            best: u64::MAX,
            best_set: 0,
        };
        s.run(0, 0, 0);
        let witness = s.best_set | (free & self.edges.iter().fold(0, |m, e| m | e));
        (s.best, witness)
    }

    /// Integer left side of max-flow min-cut: min `⟨cost, x⟩`, `x ∈ {0,1}^n`, `Ax ≥ 1`.
    pub fn weighted_cover_min(&self, cost: &[u32]) -> Result<u64> {
        self.check_cost(cost)?;
        Ok(self.weighted_cover(cost).0)
    }

    /// Integer right side: max `Σ y_e` over `y ∈ ℕ^m` with `yᵀA ≤ cost`.
    pub fn max_integer_packing(&self, cost: &[u32]) -> Result<u64> {
        self.check_cost(cost)?;
        Ok(self.integer_packing(cost).0)
    }

    /// Optimal edge multiplicities alongside the value.
    pub fn integer_packing(&self, cost: &[u32]) -> (u64, Vec<u32>) {
        assert_eq!(cost.len(), self.n(), "cost vector length");
        let mut s = PackSearch {
            edges: &self.edges,
            cap: cost.to_vec(),
            y: vec![0; self.edges.len()],
            total: 0,
            best: 0,
            best_y: vec![0; self.edges.len()],
        };
        s.run(0);
        (s.best, s.best_y)
    }

    fn check_cost(&self, cost: &[u32]) -> Result<()> {
        if cost.len() != self.n() {
            return Err(Error::Dimension(format!(
                "cost vector has length {}, clutter has {} vertices",
                cost.len(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Scans every cost vector in `{0..=cmax}^n` (first coordinate varies
    /// slowest) for a gap between the two integer sides. Refutation only.
    pub fn mengerian_bounded(&self, cmax: u32) -> Result<MfmcProbe> {
        if cmax == 0 {
            return Err(Error::Invalid("cmax must be positive".into()));
        }
        let n = self.n();
        let base = u64::from(cmax) + 1;
        let total = base
            .checked_pow(n as u32)
            .filter(|&t| t <= 1 << 32)
            .ok_or_else(|| Error::Cap(format!("{base}^{n} cost vectors")))?
            as usize;
        let decode = |mut code: usize| -> Vec<u32> {
            let mut c = vec![0u32; n];
            for slot in c.iter_mut().rev() {
                *slot = (code as u64 % base) as u32;
                code = (code as u64 / base) as usize;
            }
            c
        };
        let hit = parallel::find_map_first_index(total, |code| {
            let cost = decode(code);
            let cover = self.weighted_cover(&cost).0;
            let pack = self.integer_packing(&cost).0;
            (cover > pack).then_some(MfmcProbe::Refuted {
                cost,
                cover_min: cover,
                packing_max: pack,
            })
        });
        Ok(hit.unwrap_or(MfmcProbe::Undecided { cmax }))
    }
}

struct CoverSearch<'a> {
    edges: &'a [u64],
    cost: &'a [u32],
    best: u64,
    best_set: u64,
}

impl CoverSearch<'_> {
    /// `banned` vertices were already branched on and rejected at an
    /// ancestor; they may not be added again.
    fn run(&mut self, chosen: u64, banned: u64, spent: u64) {
        if spent >= self.best {
            return;
        }
        let mut open = self.edges.iter().copied().filter(|e| e & chosen == 0);
        let Some(first) = open.next() else {
            self.best = spent;
            self.best_set = chosen;
            return;
        };
        // disjoint open edges each need their own cheapest vertex
        let mut used = first;
        let mut bound = spent.saturating_add(self.cheapest(first & !banned));
        for e in open {
            if e & used == 0 {
                used |= e;
                bound = bound.saturating_add(self.cheapest(e & !banned));
            }
        }
        if bound >= self.best {
            return;
        }
        let mut banned = banned;
        let mut options: Vec<usize> = bits(first & !banned).collect();
        options.sort_by_key(|&v| self.cost[v]);
        for v in options {
            self.run(chosen | (1 << v), banned, spent + u64::from(self.cost[v]));
            banned |= 1 << v;
        }
    }

    fn cheapest(&self, mask: u64) -> u64 {
        // an edge with every vertex banned cannot be covered: infinite cost
        bits(mask)
            .map(|v| u64::from(self.cost[v]))
            .min()
            .unwrap_or(u64::MAX)
    }
}

struct MatchSearch<'a> {
    edges: &'a [u64],
    best: Vec<u64>,
    cur: Vec<u64>,
}

impl MatchSearch<'_> {
    /// `avail`: vertices still usable by further edges.
    fn run(&mut self, avail: u64) {
        if self.cur.len() > self.best.len() {
            self.best.clone_from(&self.cur);
        }
        let min_size = self
            .edges
            .iter()
            .filter(|&&e| e & !avail == 0)
            .map(|e| e.count_ones())
            .min();
        let Some(min_size) = min_size else { return };
        if self.cur.len() + (avail.count_ones() / min_size) as usize <= self.best.len() {
            return;
        }
        // branch on the lowest available vertex that lies in a usable edge
        let usable = self
            .edges
            .iter()
            .filter(|&&e| e & !avail == 0)
            .fold(0, |m, e| m | e);
        let v = usable.trailing_zeros();
        for &e in self.edges {
            if e & (1 << v) != 0 && e & !avail == 0 {
                self.cur.push(e);
                self.run(avail & !e);
                self.cur.pop();
            }
        }
        self.run((avail & usable) & !(1 << v));
    }
}

struct PackSearch<'a> {
    edges: &'a [u64],
    cap: Vec<u32>,
    y: Vec<u32>,
    total: u64,
    best: u64,
    best_y: Vec<u32>,
}

impl PackSearch<'_> {
    fn run(&mut self, i: usize) {
        if self.total > self.best {
            self.best = self.total;
            self.best_y.clone_from(&self.y);
        }
        if i == self.edges.len() {
            return;
        }
        // load bound: remaining edges share the capacity left on their union
        let rest = &self.edges[i..];
        let union = rest.iter().fold(0, |m, e| m | e);
        let min_size = rest
            .iter()
            .map(|e| e.count_ones())
            .min()
            .unwrap_or(1)
            .max(1);
        let room: u64 = bits(union).map(|v| u64::from(self.cap[v])).sum();
        if self.total + room / u64::from(min_size) <= self.best {
            return;
        }
        let e = self.edges[i];
        let most = bits(e).map(|v| self.cap[v]).min().unwrap_or(0);
        for k in (0..=most).rev() {
            for v in bits(e) {
                self.cap[v] -= k;
            }
            self.y[i] = k;
            self.total += u64::from(k);
            self.run(i + 1);
            self.total -= u64::from(k);
            self.y[i] = 0;
            for v in bits(e) {
                self.cap[v] += k;
            }
        }
    }
}
