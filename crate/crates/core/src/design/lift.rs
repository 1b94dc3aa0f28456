use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Lifts one Kotzig column to an `m x n` array.
///
/// Columns `0..m` form the circulant `u[i][j] = column[(i + j) mod m]`.
/// Past that, columns come in pairs: the first of each pair copies column
/// 0, the second is `r + 1` minus its left neighbour. Every row of the
/// result therefore sums to `sum(column) + (n - m)(r + 1)/2`.
pub fn circulant_lift(column: &[u32], n: usize, r: u32) -> Result<IntMatrix> {
    let m = column.len();
    if m == 0 {
        return Err(Error::invalid("circulant lift of an empty column"));
    }
    if n < m || (n - m) % 2 == 1 {
        return Err(Error::invalid(format!(
            "circulant lift needs n >= m with n - m even, got m={m}, n={n}"
        )));
    }
    if let Some(&bad) = column.iter().find(|&&v| v == 0 || v > r) {
        return Err(Error::invalid(format!("lift entry {bad} outside 1..={r}")));
    }
    let mut out = IntMatrix::zeros(m, n)?;
    for i in 0..m {
        for j in 0..m {
            out.set(i, j, column[(i + j) % m]);
        }
        for j in m..n {
            let v = if (j - m) % 2 == 0 {
                out.get(i, 0)
            } else {
                r + 1 - out.get(i, j - 1)
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}
