use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask};
use crate::parallel;

use super::{minimalize_labeled, Clutter, Minor};

/// One minor `c \ D / C`, with `D` and `C` given as 0-based vertex indices
/// of the parent clutter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorEntry {
    pub deleted: Vec<usize>,
    pub contracted: Vec<usize>,
    #[serde(skip)]
    pub minor: Minor,
}

/// Largest clutter for which [`Clutter::minors`] will enumerate `3^n` minors.
pub const MAX_MINOR_N: usize = 16;

impl Clutter {
    /// Deletes `deleted` and contracts `contracted` in one step. The two sets
    /// must be disjoint.
    pub fn minor(&self, deleted: u64, contracted: u64) -> Result<Minor> {
        let full = low_mask(self.n());
        if deleted & contracted != 0 || (deleted | contracted) & !full != 0 {
            return Err(Error::Invalid(
                "deletion and contraction sets must be disjoint vertex sets".into(),
            ));
        }
        let keep = full & !(deleted | contracted);
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & deleted == 0)
            .map(|&e| compress(e & keep, keep))
            .collect();
        let labels = bits(keep).map(|v| self.labels[v]).collect();
        minimalize_labeled(labels, edges)
    }

    /// Every minor, in base-3 order of the assignment
    /// (digit `v`: 0 keep, 1 delete, 2 contract).
    pub fn minors(&self) -> Result<Vec<MinorEntry>> {
        let total = minor_count(self.n())?;
        let entries = parallel::flat_map_index(total, |code| {
            let (d, c) = decode(code, self.n());
            let minor = self.minor(d, c).expect("decoded sets are disjoint");
            vec![MinorEntry {
                deleted: bits(d).collect(),
                contracted: bits(c).collect(),
                minor,
            }]
        });
        Ok(entries)
    }

    /// First non-unit minor (in [`Clutter::minors`] order) without the König
    /// property, if any.
    pub fn packing_violation(&self) -> Result<Option<MinorEntry>> {
        let total = minor_count(self.n())?;
        Ok(parallel::find_map_first_index(total, |code| {
            let (d, c) = decode(code, self.n());
            let minor = self.minor(d, c).expect("decoded sets are disjoint");
            match minor.clutter() {
                Some(m) if !m.has_konig() => Some(MinorEntry {
                    deleted: bits(d).collect(),
                    contracted: bits(c).collect(),
                    minor,
                }),
                _ => None,
            }
        }))
    }

    /// The clutter and all of its non-unit minors satisfy König.
    pub fn has_packing(&self) -> Result<bool> {
        Ok(self.packing_violation()?.is_none())
    }
}

fn minor_count(n: usize) -> Result<usize> {
    if n > MAX_MINOR_N {
        return Err(Error::Cap(format!(
            "3^{n} minors exceeds the enumeration limit (n <= {MAX_MINOR_N})"
        )));
    }
    Ok(3usize.pow(n as u32))
}

fn decode(mut code: usize, n: usize) -> (u64, u64) {
    let (mut d, mut c) = (0u64, 0u64);
    for v in 0..n {
        match code % 3 {
            1 => d |= 1 << v,
            2 => c |= 1 << v,
            _ => {}
        }
        code /= 3;
    }
    (d, c)
}

/// Packs the bits of `mask` that lie in `keep` into the low bits.
fn compress(mask: u64, keep: u64) -> u64 {
    bits(keep)
        .enumerate()
        .fold(0u64, |acc, (i, v)| acc | (((mask >> v) & 1) << i))
}
