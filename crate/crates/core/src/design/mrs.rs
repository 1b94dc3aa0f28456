//! Magic rectangle sets.

use crate::design::existence::{mrs_exists, MRS_CONDITION};
use crate::design::kotzig::kotzig_array;
use crate::design::lift::circulant_lift;
use crate::design::magic::magic_rectangle;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// MRS(a, b; c): `c` disjoint `a x b` arrays covering `1..=abc`, each with
/// rows summing to `b(abc+1)/2` and columns to `a(abc+1)/2`.
///
/// With `a <= b`, rectangle `t` is `c(M - 1) + U^t` where `M` is MR(a, b)
/// and `U^t` is the circulant lift of column `t` of KA(a, c). For `c = 1`
/// this is MR(a, b) itself. `a > b` returns the transposed set.
pub fn magic_rectangle_set(a: usize, b: usize, c: usize) -> Result<Vec<IntMatrix>> {
    if !mrs_exists(a, b, c) {
        return Err(Error::nonexistent(
            format!("MRS({a},{b};{c})"),
            MRS_CONDITION,
        ));
    }
    if a > b {
        return Ok(magic_rectangle_set(b, a, c)?
            .iter()
            .map(IntMatrix::transpose)
            .collect());
    }
    let base = magic_rectangle(a, b)?;
    if c == 1 {
        return Ok(vec![base]);
    }
    let cc = c as u32;
    let w = base.map(|v| cc * (v - 1));
    let ka = kotzig_array(a, c)?;
    (0..c)
        .map(|t| w.add(&circulant_lift(&ka.column(t), b, cc)?))
        .collect()
}
