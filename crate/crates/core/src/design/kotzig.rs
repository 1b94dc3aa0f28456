//! Kotzig arrays and quasi Kotzig arrays.

use crate::design::existence::{ka_exists, KA_CONDITION};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// An array whose rows are permutations of `1..=cols`.
///
/// A true Kotzig array (`quasi == false`) has every column summing to
/// `rows * (cols + 1) / 2`. A quasi Kotzig array has half its columns one
/// below and half one above that (non-integral) value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KotzigMatrix {
    pub matrix: IntMatrix,
    pub quasi: bool,
}

impl KotzigMatrix {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn column(&self, t: usize) -> Vec<u32> {
        self.matrix.col(t)
    }
}

/// `[1, 2, .., b]` over `[b, .., 2, 1]`.
fn reversal_pair(b: usize) -> [Vec<u32>; 2] {
    let up: Vec<u32> = (1..=b as u32).collect();
    let down: Vec<u32> = up.iter().rev().copied().collect();
    [up, down]
}

/// Three rows with equal column sums `3(b+1)/2`, for odd `b`.
///
/// Row two walks down the odd values then the even ones; row three is
/// whatever makes the column sum constant.
fn kotzig_triple(b: usize) -> Result<[Vec<u32>; 3]> {
    debug_assert!(b % 2 == 1);
    let first: Vec<u32> = (1..=b as u32).collect();
    let second: Vec<u32> = (0..b)
        .map(|j| {
            let half = b.div_ceil(2);
            if j < half {
                (b - 2 * j) as u32
            } else {
                (b - 1 - 2 * (j - half)) as u32
            }
        })
        .collect();
    let target = 3 * (b as u32 + 1) / 2;
    let third: Vec<u32> = first
        .iter()
        .zip(&second)
        .map(|(x, y)| target - x - y)
        .collect();
    let mut seen = vec![false; b + 1];
    for &v in &third {
        let v = v as usize;
        if v == 0 || v > b || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Construction(format!(
                "third Kotzig row for b={b} is not a permutation"
            )));
        }
    }
    Ok([first, second, third])
}

/// A Kotzig array KA(a, b).
///
/// Even `a` stacks `a/2` reversal pairs. Odd `a` (with odd `b`) puts a
/// three-row block on top of `(a-3)/2` reversal pairs.
pub fn kotzig_array(a: usize, b: usize) -> Result<KotzigMatrix> {
    if !ka_exists(a, b)? {
        return Err(Error::nonexistent(format!("KA({a},{b})"), KA_CONDITION));
    }
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(a);
    let mut remaining = a;
    if a % 2 == 1 {
        rows.extend(kotzig_triple(b)?);
        remaining -= 3;
    }
    for _ in 0..remaining / 2 {
        rows.extend(reversal_pair(b));
    }
    Ok(KotzigMatrix {
        matrix: IntMatrix::from_rows(&rows)?,
        quasi: false,
    })
}

/// The 3 x 2k quasi Kotzig array used for odd row counts and even widths.
fn quasi_triple(r: usize) -> [Vec<u32>; 3] {
    let k = r / 2;
    let first: Vec<u32> = (1..=r as u32).collect();
    let second: Vec<u32> = (0..r)
        .map(|j| {
            if j < k {
                (2 * (k - j) - 1) as u32
            } else {
                (2 * (r - j)) as u32
            }
        })
        .collect();
    let third: Vec<u32> = (0..r)
        .map(|j| {
            if j < k {
                (k + 1 + j) as u32
            } else {
                (j - k + 1) as u32
            }
        })
        .collect();
    [first, second, third]
}

/// A quasi Kotzig array QKA(m, r) for odd `m >= 3` and even `r >= 2`.
///
/// Columns `1..=r/2` sum to `(m(r+1)-1)/2`, the rest to `(m(r+1)+1)/2`.
pub fn quasi_kotzig_array(m: usize, r: usize) -> Result<KotzigMatrix> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::invalid(format!(
            "QKA(m,r) needs odd m >= 3, got m={m}"
        )));
    }
    if r < 2 || r % 2 == 1 {
        return Err(Error::invalid(format!(
            "QKA(m,r) needs even r >= 2, got r={r}"
        )));
    }
    let mut rows: Vec<Vec<u32>> = quasi_triple(r).into();
    for _ in 0..(m - 3) / 2 {
        rows.extend(reversal_pair(r));
    }
    Ok(KotzigMatrix {
        matrix: IntMatrix::from_rows(&rows)?,
        quasi: true,
    })
}
