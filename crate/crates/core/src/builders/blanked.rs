use crate::builders::{color_count, BlankedMatrix, BuildRecipe, RecipeTag};
use crate::design::{magic_rectangle, nearly_magic_rectangle, odd_magic_square, Variant};
use crate::error::{Error, Result};
use crate::matrix::{distinct, IntMatrix};

fn blanked(
    tag: RecipeTag,
    (m, n): (usize, usize),
    matrix: IntMatrix,
    rows: Vec<u64>,
    cols: Vec<u64>,
    hub: u64,
) -> Result<BlankedMatrix> {
    let (rows, cols) = (distinct(&rows), distinct(&cols));
    BlankedMatrix {
        recipe: BuildRecipe {
            tag,
            m,
            n,
            r: 1,
            claimed_colors: color_count(&[&rows, &cols, &[hub]]),
        },
        matrix,
        claimed_row_sums: rows,
        claimed_col_sums: cols,
        claimed_hub: hub,
    }
    .checked()
}

/// Swaps rows and columns so that 1 lands at (1,1), subtracts 1 and blanks
/// that cell.
fn pin_one_and_blank(mut a: IntMatrix) -> Result<IntMatrix> {
    let (i, j) = a
        .position_of(1)
        .ok_or_else(|| Error::Construction("array has no entry 1".into()))?;
    a.swap_rows(0, i);
    a.swap_cols(0, j);
    let mut b = a.map(|v| v - 1);
    b.set_blank(Some((0, 0)))?;
    Ok(b)
}

/// Blanked MR(m+1, n+1) for `m != n` of equal parity.
///
/// Rows sum to `rho - (n+1)` and columns to `sigma - (m+1)`, where `rho`
/// and `sigma` are the constants of MR(m+1, n+1).
pub fn build_b_same_parity(m: usize, n: usize) -> Result<BlankedMatrix> {
    if m < 2 || n < 2 || m == n || m % 2 != n % 2 {
        return Err(Error::invalid(format!(
            "same-parity B matrix needs distinct m, n >= 2 of equal parity, got m={m}, n={n}"
        )));
    }
    let b = pin_one_and_blank(magic_rectangle(m + 1, n + 1)?)?;
    let (p, q) = ((m + 1) as u64, (n + 1) as u64);
    let row = q * (p * q + 1) / 2 - q;
    let col = p * (p * q + 1) / 2 - p;
    blanked(
        RecipeTag::BSameParity,
        (m, n),
        b,
        vec![row],
        vec![col],
        row + col,
    )
}

/// Blanked NMR(m+1, n+1) for odd `m` and even `n`; the other orientation
/// is built transposed.
///
/// Columns sum to `sigma - (m+1)`; rows take the two NMR row values less
/// `n + 1`. The hub's row is whichever NMR row held the 1.
pub fn build_b_mixed_parity(m: usize, n: usize) -> Result<BlankedMatrix> {
    if m < 2 || n < 2 || m % 2 == n % 2 {
        return Err(Error::invalid(format!(
            "mixed-parity B matrix needs m, n >= 2 of different parity, got m={m}, n={n}"
        )));
    }
    if m % 2 == 0 {
        return Ok(build_b_mixed_parity(n, m)?.transpose());
    }
    let nmr = nearly_magic_rectangle(m + 1, n + 1)?;
    let (p, q) = ((m + 1) as u64, (n + 1) as u64);
    let hi = (q * (p * q + 1)).div_ceil(2) - q;
    let col = p * (p * q + 1) / 2 - p;
    let (one_row, _) = nmr.position_of(1).expect("NMR contains 1");
    let hub_row = if one_row < m.div_ceil(2) { hi } else { hi - 1 };
    let b = pin_one_and_blank(nmr)?;
    let rows = b.row_sums()[1..].to_vec();
    if rows.iter().any(|&s| s != hi && s != hi - 1) {
        return Err(Error::Construction(
            "NMR row sums outside the two expected values".into(),
        ));
    }
    blanked(
        RecipeTag::BMixedParity,
        (m, n),
        b,
        rows,
        vec![col],
        hub_row + col,
    )
}

/// The `(n+1) x (n+1)` array for `K_{1,n,n}`, `n` odd.
///
/// With `s = (n+1)/2`, row `i` interleaves `4st + i` and `4s(t+1) + 1 - i`
/// for `t < s`. After subtracting 1, columns `j` and `n+3-j` trade their
/// entries in rows `1..=s` for `2 <= j <= s`. Every row then sums to
/// `n(n+1)(n+2)/2` and columns `2..` to `(n+1)(n^2+3n+1)/2`.
pub fn build_b_odd_square(n: usize) -> Result<BlankedMatrix> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!(
            "odd-square B matrix needs odd n >= 3, got {n}"
        )));
    }
    let s = n.div_ceil(2);
    let mut a = IntMatrix::from_fn(n + 1, n + 1, |i0, j| {
        let (i, t) = (i0 + 1, j / 2);
        let v = if j % 2 == 0 {
            4 * s * t + i
        } else {
            4 * s * (t + 1) + 1 - i
        };
        v as u32
    })?;
    a = a.map(|v| v - 1);
    // 1-based columns j and n+3-j are 0-based j-1 and n+2-j
    for j in 2..=s {
        for i in 0..s {
            a.swap_cells((i, j - 1), (i, n + 2 - j));
        }
    }
    a.set_blank(Some((0, 0)))?;
    let n64 = n as u64;
    let row = n64 * (n64 + 1) * (n64 + 2) / 2;
    let col = (n64 + 1) * (n64 * n64 + 3 * n64 + 1) / 2;
    let first_col = n64 * (n64 + 1) / 2;
    blanked(
        RecipeTag::BOddSquare,
        (n, n),
        a,
        vec![row],
        vec![col],
        row + first_col,
    )
}

/// The `(m+1) x (m+1)` array for `K_{1,m,m}`, `m` even.
///
/// Starts from `N1 + p(N3 - J)` with `p = m + 1`, swaps the first-row
/// entries of columns `j, j+1` for `j = 2, 4, .., p-1` (each pair differs
/// by exactly `p - 1`), subtracts 1 and blanks (1,1). Rows sum to
/// `R = p(p^2+1)/2 - p`; the remaining columns alternate `R - (p-1)` and
/// `R + (p-1)`.
pub fn build_b_even_square(m: usize) -> Result<BlankedMatrix> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::invalid(format!(
            "even-square B matrix needs even m >= 2, got {m}"
        )));
    }
    let p = m + 1;
    let mut a = odd_magic_square(p, Variant::N3)?;
    for j in (1..p - 1).step_by(2) {
        let (x, y) = (a.get(0, j), a.get(0, j + 1));
        if x.abs_diff(y) as usize != p - 1 {
            return Err(Error::Construction(format!(
                "first-row entries {x} and {y} do not differ by {}",
                p - 1
            )));
        }
        a.swap_cells((0, j), (0, j + 1));
    }
    if a.get(0, 0) != 1 {
        return Err(Error::Construction("entry at (1,1) is not 1".into()));
    }
    let mut b = a.map(|v| v - 1);
    b.set_blank(Some((0, 0)))?;
    let p64 = p as u64;
    let row = p64 * (p64 * p64 + 1) / 2 - p64;
    blanked(
        RecipeTag::BEvenSquare,
        (m, m),
        b,
        vec![row],
        vec![row - (p64 - 1), row + (p64 - 1)],
        2 * row,
    )
}
