//! Fraction-free Gaussian elimination.

use num_traits::{One, Zero};
use std::ops::{Div, Mul, Neg, Rem, Sub};

pub(crate) trait Ring:
    Clone
    + Zero
    + One
    + PartialEq
    + Mul<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Rem<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Zero
        + One
        + PartialEq
        + Mul<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
        + Rem<Output = T>
        + Neg<Output = T>
{
}

/// Determinant of the row-major `k × k` integer matrix `a` (consumed as
/// scratch space).
///
/// Each update `(a_ij·p − a_ik·a_kj) / prev` divides exactly; the assertion
/// guards that invariant.
pub(crate) fn det<T: Ring>(a: &mut [T], k: usize) -> T {
    debug_assert_eq!(a.len(), k * k);
    if k == 0 {
        return T::one();
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for p in 0..k {
        if a[p * k + p].is_zero() {
            let Some(swap) = (p + 1..k).find(|&r| !a[r * k + p].is_zero()) else {
                return T::zero();
            };
            for c in 0..k {
                a.swap(p * k + c, swap * k + c);
            }
            sign_flip = !sign_flip;
        }
        let pivot = a[p * k + p].clone();
        for r in p + 1..k {
            let factor = a[r * k + p].clone();
            for c in p + 1..k {
                let num =
                    a[r * k + c].clone() * pivot.clone() - factor.clone() * a[p * k + c].clone();
                assert!(
                    (num.clone() % prev.clone()).is_zero(),
                    "Bareiss step is not exact"
                );
                a[r * k + c] = num / prev.clone();
            }
            a[r * k + p] = T::zero();
        }
        prev = pivot;
    }
    let d = a[k * k - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Solves the square system `M y = D b` where `D` is the returned
/// determinant of `M` (up to row order); returns `None` when singular.
///
/// `a` is `k × (k+1)` row-major, the last column being `b`. By Cramer's
/// rule `D·x` is integral, so every back-substitution division is exact.
pub(crate) fn solve_scaled<T: Ring>(a: &mut [T], k: usize) -> Option<(Vec<T>, T)> {
    let w = k + 1;
    debug_assert_eq!(a.len(), k * w);
    let mut prev = T::one();
    for p in 0..k {
        if a[p * w + p].is_zero() {
            let swap = (p + 1..k).find(|&r| !a[r * w + p].is_zero())?;
            for c in 0..w {
                a.swap(p * w + c, swap * w + c);
            }
        }
        let pivot = a[p * w + p].clone();
        for r in p + 1..k {
            let factor = a[r * w + p].clone();
            for c in p + 1..w {
                let num =
                    a[r * w + c].clone() * pivot.clone() - factor.clone() * a[p * w + c].clone();
                a[r * w + c] = num / prev.clone();
            }
            a[r * w + p] = T::zero();
        }
        prev = pivot;
    }
    if k == 0 {
        return Some((Vec::new(), T::one()));
    }
    let d = a[(k - 1) * w + (k - 1)].clone();
    let mut y = vec![T::zero(); k];
    for i in (0..k).rev() {
        let mut acc = d.clone() * a[i * w + k].clone();
        for j in i + 1..k {
            acc = acc - a[i * w + j].clone() * y[j].clone();
        }
        debug_assert!((acc.clone() % a[i * w + i].clone()).is_zero());
        y[i] = acc / a[i * w + i].clone();
    }
    Some((y, d))
}
