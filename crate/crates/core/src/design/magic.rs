//! Magic squares, magic rectangles and nearly magic rectangles.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::design::existence::{mr_exists, nmr_exists, MR_CONDITION, NMR_CONDITION};
use crate::design::fixtures;
use crate::design::mrs::magic_rectangle_set;
use crate::design::solver::{anneal, SumTargets, SOLVER_SEED};
use crate::design::verify::{verify_array, ArrayKind};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Second Latin square used by [`odd_magic_square`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `N2[i][j] = (i - j - 1) mod n + 1`
    N2,
    /// `N3[i][j] = (i - j) mod n + 1`
    N3,
}

/// `N1 + n(N2 - J)` (or with `N3`), where `N1[i][j] = (i + j) mod n + 1`.
///
/// Only row and column sums are magic; the diagonals are not.
pub fn odd_magic_square(n: usize, variant: Variant) -> Result<IntMatrix> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!(
            "odd magic square needs odd n >= 3, got {n}"
        )));
    }
    let shift = match variant {
        Variant::N2 => n - 1,
        Variant::N3 => 0,
    };
    IntMatrix::from_fn(n, n, |i, j| {
        let n1 = (i + j) % n;
        let second = (i + n - j + shift) % n;
        (n1 + n * second + 1) as u32
    })
}

/// De la Loubere's method: 1 in the middle of the top row, then step up
/// and right with wraparound, dropping one cell down when blocked.
///
/// The middle column reads `1, m+2, 2m+3, .., m^2`.
pub fn siamese_magic_square(m: usize) -> Result<IntMatrix> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::invalid(format!(
            "Siamese square needs odd m >= 3, got {m}"
        )));
    }
    let mut sq = IntMatrix::zeros(m, m)?;
    let (mut i, mut j) = (0, m / 2);
    sq.set(i, j, 1);
    for k in 2..=(m * m) as u32 {
        let (ni, nj) = ((i + m - 1) % m, (j + 1) % m);
        if sq.get(ni, nj) == 0 {
            (i, j) = (ni, nj);
        } else {
            i = (i + 1) % m;
        }
        sq.set(i, j, k);
    }
    Ok(sq)
}

/// Keyed by (nearly magic?, rows, cols).
type Cache = Mutex<HashMap<(bool, usize, usize), IntMatrix>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(
    key: (bool, usize, usize),
    build: impl FnOnce() -> Result<IntMatrix>,
) -> Result<IntMatrix> {
    if let Some(m) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(m.clone());
    }
    let m = build()?;
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, m.clone());
    Ok(m)
}

/// A magic rectangle MR(a, b): rows sum to `b(ab+1)/2`, columns to
/// `a(ab+1)/2`.
///
/// Deterministic for given `(a, b)`. Shapes with `a > b` are built as the
/// transpose of MR(b, a).
pub fn magic_rectangle(a: usize, b: usize) -> Result<IntMatrix> {
    if !mr_exists(a, b) {
        return Err(Error::nonexistent(format!("MR({a},{b})"), MR_CONDITION));
    }
    if a > b {
        return Ok(magic_rectangle(b, a)?.transpose());
    }
    cached((false, a, b), || {
        let m = build_rectangle(a, b)?;
        let report = verify_array(std::slice::from_ref(&m), ArrayKind::MagicRectangle);
        if !report.passed {
            return Err(Error::Construction(format!(
                "MR({a},{b}) failed verification: {}",
                report.violations.join("; ")
            )));
        }
        Ok(m)
    })
}

/// `a <= b`, same parity, `ab > 4`.
fn build_rectangle(a: usize, b: usize) -> Result<IntMatrix> {
    if (a, b) == (7, 11) {
        return Ok(fixtures::mr_7_11());
    }
    if a % 2 == 0 {
        if a == 2 {
            return two_row_rectangle(b);
        }
        // c rectangles of MRS(2,b;c) stacked on top of each other
        return IntMatrix::vstack(&magic_rectangle_set(2, b, a / 2)?);
    }
    if a == b {
        return odd_magic_square(a, Variant::N2);
    }
    if b % a == 0 {
        return IntMatrix::hstack(&magic_rectangle_set(a, a, b / a)?);
    }
    if let Some(d) = (3..a).find(|d| a % d == 0) {
        return IntMatrix::vstack(&magic_rectangle_set(d, b, a / d)?);
    }
    anneal(
        &SumTargets {
            rows: vec![(b * (a * b + 1) / 2) as i64; a],
            cols: vec![(a * (a * b + 1) / 2) as i64; b],
        },
        SOLVER_SEED,
    )
}

/// MR(2, b) for even `b >= 4`.
///
/// Column `v` holds the pair `{v, 2b+1-v}`; the top row takes the small
/// element on a set of columns chosen so the top row sums to `b(2b+1)/2`.
fn two_row_rectangle(b: usize) -> Result<IntMatrix> {
    let top_small: Vec<bool> = if b % 4 == 0 {
        (1..=b).map(|v| v % 4 <= 1).collect()
    } else {
        let tail = b - 5;
        (1..=b)
            .map(|v| {
                if v < tail {
                    v % 4 <= 1
                } else {
                    matches!(v - tail, 0 | 2)
                }
            })
            .collect()
    };
    let big = 2 * b as u32 + 1;
    IntMatrix::from_fn(2, b, |i, j| {
        let v = j as u32 + 1;
        let small_on_top = top_small[j];
        if (i == 0) == small_on_top {
            v
        } else {
            big - v
        }
    })
}

/// A nearly magic rectangle NMR(a, b), `a` even and `b` odd.
///
/// Columns sum to `a(ab+1)/2`; the first `a/2` rows sum to
/// `(b(ab+1)+1)/2`, the remaining rows one less.
pub fn nearly_magic_rectangle(a: usize, b: usize) -> Result<IntMatrix> {
    if !nmr_exists(a, b) {
        return Err(Error::nonexistent(format!("NMR({a},{b})"), NMR_CONDITION));
    }
    cached((true, a, b), || {
        let m = if (a, b) == (4, 3) {
            fixtures::nmr_4_3()
        } else {
            let high = (b * (a * b + 1)).div_ceil(2);
            let rows = (0..a)
                .map(|i| if i < a / 2 { high } else { high - 1 } as i64)
                .collect();
            anneal(
                &SumTargets {
                    rows,
                    cols: vec![(a * (a * b + 1) / 2) as i64; b],
                },
                SOLVER_SEED,
            )?
        };
        let report = verify_array(std::slice::from_ref(&m), ArrayKind::NearlyMagicRectangle);
        if !report.passed {
            return Err(Error::Construction(format!(
                "NMR({a},{b}) failed verification: {}",
                report.violations.join("; ")
            )));
        }
        Ok(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_equal(v: &[u64], x: u64) -> bool {
        v.iter().all(|&s| s == x)
    }

    #[test]
    fn three_by_three_formula() {
        let m = odd_magic_square(3, Variant::N2).unwrap();
        // N1 = (i+j)%3+1, N2 = (i-j-1)%3+1
        assert_eq!(
            m.to_rows(),
            vec![vec![7, 5, 3], vec![2, 9, 4], vec![6, 1, 8]]
        );
        assert!(all_equal(&m.row_sums(), 15) && all_equal(&m.col_sums(), 15));
    }

    #[test]
    fn n3_variant_is_magic() {
        let m = odd_magic_square(5, Variant::N3).unwrap();
        assert!(all_equal(&m.row_sums(), 65) && all_equal(&m.col_sums(), 65));
        let mut e = m.entries().to_vec();
        e.sort_unstable();
        assert_eq!(e, (1..=25).collect::<Vec<_>>());
    }

    #[test]
    fn even_order_rejected() {
        assert!(odd_magic_square(4, Variant::N2).is_err());
        assert!(siamese_magic_square(1).is_err());
        assert!(siamese_magic_square(6).is_err());
    }

    #[test]
    fn siamese_middle_column() {
        let m = siamese_magic_square(7).unwrap();
        assert_eq!(m.col(3), vec![1, 9, 17, 25, 33, 41, 49]);
        assert_eq!(m.row(0), &[30, 39, 48, 1, 10, 19, 28]);
        let m = siamese_magic_square(5).unwrap();
        assert_eq!(m.col(2), vec![1, 7, 13, 19, 25]);
        assert!(all_equal(&m.row_sums(), 65) && all_equal(&m.col_sums(), 65));
        let m = siamese_magic_square(3).unwrap();
        assert!(all_equal(&m.row_sums(), 15) && all_equal(&m.col_sums(), 15));
    }

    #[test]
    fn two_row_rectangles() {
        for b in [4, 6, 8, 10, 12, 14] {
            let m = magic_rectangle(2, b).unwrap();
            let rho = (b * (2 * b + 1) / 2) as u64;
            assert!(all_equal(&m.row_sums(), rho), "b={b}");
        }
    }

    #[test]
    fn rectangles_across_routes() {
        for (a, b) in [
            (3, 3),
            (3, 5),
            (3, 9),
            (4, 6),
            (9, 11),
            (5, 7),
            (6, 4),
            (4, 4),
            (7, 11),
        ] {
            let m = magic_rectangle(a, b).unwrap();
            assert_eq!((m.rows(), m.cols()), (a, b));
            let n = (a * b + 1) as u64;
            assert!(all_equal(&m.row_sums(), b as u64 * n / 2), "{a}x{b}");
            assert!(all_equal(&m.col_sums(), a as u64 * n / 2), "{a}x{b}");
        }
    }

    #[test]
    fn four_by_six_constants() {
        let m = magic_rectangle(4, 6).unwrap();
        assert!(all_equal(&m.row_sums(), 75) && all_equal(&m.col_sums(), 50));
    }

    #[test]
    fn seven_by_eleven_is_the_fixture() {
        assert_eq!(magic_rectangle(7, 11).unwrap(), fixtures::mr_7_11());
        assert_eq!(
            magic_rectangle(11, 7).unwrap(),
            fixtures::mr_7_11().transpose()
        );
    }

    #[test]
    fn nonexistent_rectangles() {
        assert!(matches!(
            magic_rectangle(2, 2),
            Err(Error::NonexistentDesign { .. })
        ));
        assert!(matches!(
            magic_rectangle(4, 3),
            Err(Error::NonexistentDesign { .. })
        ));
        assert!(matches!(
            nearly_magic_rectangle(3, 4),
            Err(Error::NonexistentDesign { .. })
        ));
    }

    #[test]
    fn nearly_magic() {
        let m = nearly_magic_rectangle(4, 3).unwrap();
        assert_eq!(m, fixtures::nmr_4_3());
        assert!(all_equal(&m.col_sums(), 26));
        assert_eq!(m.row_sums(), vec![20, 20, 19, 19]);

        let m = nearly_magic_rectangle(2, 3).unwrap();
        assert!(all_equal(&m.col_sums(), 7));
        assert_eq!(m.row_sums(), vec![11, 10]);
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            magic_rectangle(5, 7).unwrap(),
            build_rectangle(5, 7).unwrap()
        );
        assert_eq!(
            nearly_magic_rectangle(6, 5).unwrap(),
            nearly_magic_rectangle(6, 5).unwrap()
        );
    }
}
