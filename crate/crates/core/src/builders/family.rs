use crate::builders::{color_count, BuildRecipe, MatrixFamily, RecipeTag};
use crate::design::existence::{mrs_exists, MRS_CONDITION};
use crate::design::{
    circulant_lift, kotzig_array, magic_rectangle, magic_rectangle_set, nearly_magic_rectangle,
    quasi_kotzig_array, siamese_magic_square, KotzigMatrix,
};
use crate::error::{Error, Result};
use crate::matrix::{distinct, IntMatrix};

/// `w[i][j] = r(m[i][j] - 1)`.
pub fn shift_scale(m: &IntMatrix, r: u32) -> Result<IntMatrix> {
    if r == 0 {
        return Err(Error::invalid("scale factor must be at least 1"));
    }
    if m.entries().contains(&0) {
        return Err(Error::invalid("shift_scale expects entries starting at 1"));
    }
    Ok(m.map(|v| r * (v - 1)))
}

/// Shifts the middle column of a Siamese square up by one, wrapping the
/// 1 at the top to the bottom.
///
/// Column sums are unchanged. All rows but the last gain `m + 1`; the last
/// row loses `m^2 - 1`.
pub fn modify_mstar(m: &IntMatrix) -> Result<IntMatrix> {
    let k = m.rows();
    if k != m.cols() || k < 3 || k % 2 == 0 {
        return Err(Error::invalid(format!(
            "M* needs an odd square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mid = k / 2;
    let progression = (0..k).all(|i| m.get(i, mid) as usize == 1 + i * (k + 1));
    if !progression {
        return Err(Error::invalid(
            "middle column is not 1, m+2, .., m^2; input is not a Siamese square",
        ));
    }
    let mut out = m.clone();
    for i in 0..k {
        out.set(i, mid, m.get((i + 1) % k, mid));
    }
    Ok(out)
}

fn recipe(tag: RecipeTag, m: usize, n: usize, r: usize, rows: &[u64], cols: &[u64]) -> BuildRecipe {
    BuildRecipe {
        tag,
        m,
        n,
        r,
        claimed_colors: color_count(&[rows, cols]),
    }
}

fn family(
    tag: RecipeTag,
    (m, n, r): (usize, usize, usize),
    copies: Vec<IntMatrix>,
    rows: Vec<u64>,
    cols: Vec<u64>,
) -> Result<MatrixFamily> {
    let (rows, cols) = (distinct(&rows), distinct(&cols));
    MatrixFamily {
        copies,
        recipe: recipe(tag, m, n, r, &rows, &cols),
        claimed_row_sums: rows,
        claimed_col_sums: cols,
    }
    .checked()
}

fn lifts(w: &IntMatrix, ka: &KotzigMatrix, r: usize) -> Result<Vec<IntMatrix>> {
    (0..r)
        .map(|t| w.add(&circulant_lift(&ka.column(t), w.cols(), r as u32)?))
        .collect()
}

/// An MRS(m,n;r) used directly: every `v` weighs `n(rmn+1)/2`, every `u`
/// weighs `m(rmn+1)/2`.
pub fn build_mrs_family(m: usize, n: usize, r: usize) -> Result<MatrixFamily> {
    if m == n {
        return Err(Error::invalid("the MRS family needs m != n"));
    }
    if !mrs_exists(m, n, r) {
        return Err(Error::nonexistent(
            format!("MRS({m},{n};{r})"),
            MRS_CONDITION,
        ));
    }
    let (m64, n64) = (m as u64, n as u64);
    let total = (r * m * n) as u64 + 1;
    family(
        RecipeTag::Mrs,
        (m, n, r),
        magic_rectangle_set(m, n, r)?,
        vec![n64 * total / 2],
        vec![m64 * total / 2],
    )
}

/// `Z^t = r(MR(m,n) - 1) + lift(QKA(m,r) column t)` for odd `m < n` and
/// even `r`.
///
/// Copies `1..=r/2` have rows summing to `rho1 = (rmn^2 + n - 1)/2`, the
/// rest to `rho1 + 1`; every copy has columns summing to
/// `sigma1 = (rm^2 n + m - 1)/2` and `sigma1 + 1`. A request with `m > n`
/// is built transposed.
pub fn build_zt_family_bipartite(m: usize, n: usize, r: usize) -> Result<MatrixFamily> {
    if m > n {
        return Ok(build_zt_family_bipartite(n, m, r)?.transpose());
    }
    if m < 3 || m == n || m % 2 == 0 || n % 2 == 0 {
        return Err(Error::invalid(format!(
            "Z family needs distinct odd m, n >= 3, got m={m}, n={n}"
        )));
    }
    if r < 2 || r % 2 == 1 {
        return Err(Error::invalid(format!(
            "Z family needs even r >= 2, got {r}"
        )));
    }
    let w = shift_scale(&magic_rectangle(m, n)?, r as u32)?;
    let copies = lifts(&w, &quasi_kotzig_array(m, r)?, r)?;
    let (m64, n64, r64) = (m as u64, n as u64, r as u64);
    let rho1 = (r64 * m64 * n64 * n64 + n64 - 1) / 2;
    let sigma1 = (r64 * m64 * m64 * n64 + m64 - 1) / 2;
    family(
        RecipeTag::ZtBipartite,
        (m, n, r),
        copies,
        vec![rho1, rho1 + 1],
        vec![sigma1, sigma1 + 1],
    )
}

/// `Z^t = [MRS(m,2;r)_t | MRS(m,m-2;r)_t + 2rm]` for even `m >= 4`.
///
/// Rows all sum to `m(rm^2+1)/2`; the first two columns to `m(2rm+1)/2`
/// and the others to `m(rm^2+1)/2 + rm^2`.
pub fn build_zt_family_glued(m: usize, r: usize) -> Result<MatrixFamily> {
    if m < 4 || m % 2 == 1 {
        return Err(Error::invalid(format!(
            "glued family needs even m >= 4, got {m}"
        )));
    }
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let left = magic_rectangle_set(m, 2, r)?;
    let right = magic_rectangle_set(m, m - 2, r)?;
    let offset = (2 * r * m) as u32;
    let copies = left
        .iter()
        .zip(&right)
        .map(|(l, rt)| IntMatrix::hstack(&[l.clone(), rt.map(|v| v + offset)]))
        .collect::<Result<Vec<_>>>()?;
    let (m64, r64) = (m as u64, r as u64);
    let rho = m64 * (r64 * m64 * m64 + 1) / 2;
    family(
        RecipeTag::GluedMrs,
        (m, m, r),
        copies,
        vec![rho],
        vec![m64 * (2 * r64 * m64 + 1) / 2, rho + r64 * m64 * m64],
    )
}

/// `Z^t = r(M* - 1) + lift(column t)` for odd `m`, where `M*` is the
/// shifted Siamese square and the columns come from KA(m,r) (odd `r`) or
/// QKA(m,r) (even `r`).
///
/// With `sigma = m(rm^2+1)/2`, odd `r` gives columns `sigma`, rows
/// `sigma + r(m+1)` and a last row `sigma - r(m^2-1)`. Even `r` splits
/// each of those into the two values around the half-integer `sigma`.
pub fn build_zt_family_square(m: usize, r: usize) -> Result<MatrixFamily> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::invalid(format!(
            "square Z family needs odd m >= 3, got {m}"
        )));
    }
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let w = shift_scale(&modify_mstar(&siamese_magic_square(m)?)?, r as u32)?;
    let (m64, r64) = (m as u64, r as u64);
    let twice_sigma = m64 * (r64 * m64 * m64 + 1);
    let (up, down) = (r64 * (m64 + 1), r64 * (m64 * m64 - 1));
    let (tag, ka, sigmas) = if r % 2 == 1 {
        (
            RecipeTag::ZtSquareKotzig,
            kotzig_array(m, r)?,
            vec![twice_sigma / 2],
        )
    } else {
        let lo = (twice_sigma - 1) / 2;
        (
            RecipeTag::ZtSquareQuasi,
            quasi_kotzig_array(m, r)?,
            vec![lo, lo + 1],
        )
    };
    let copies = lifts(&w, &ka, r)?;
    let rows = sigmas.iter().flat_map(|&s| [s + up, s - down]).collect();
    family(tag, (m, m, r), copies, rows, sigmas)
}

/// A single NMR labeling `K_{m,n}`, `m` even and `n` odd (or transposed).
///
/// The `v` side takes the two row sums and the `u` side the column sum.
pub fn build_nmr_single(m: usize, n: usize) -> Result<MatrixFamily> {
    if m % 2 == 1 && n % 2 == 0 {
        return Ok(build_nmr_single(n, m)?.transpose());
    }
    let nmr = nearly_magic_rectangle(m, n)?;
    let (m64, n64) = (m as u64, n as u64);
    let total = m64 * n64 + 1;
    let lo = (n64 * total - 1) / 2;
    family(
        RecipeTag::NmrSingle,
        (m, n, 1),
        vec![nmr],
        vec![lo, lo + 1],
        vec![m64 * total / 2],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::fixtures;

    #[test]
    fn shift_scale_matches_published_w() {
        let w = shift_scale(&fixtures::mr_7_11(), 4).unwrap();
        assert_eq!(&w.row(0)[..4], &[304, 224, 168, 220]);
        let m = fixtures::nmr_4_3();
        assert_eq!(shift_scale(&m, 1).unwrap(), m.map(|v| v - 1));
        assert!(shift_scale(&m, 0).is_err());
    }

    #[test]
    fn mstar_for_seven() {
        let s = modify_mstar(&siamese_magic_square(7).unwrap()).unwrap();
        assert_eq!(s.row_sums(), vec![183, 183, 183, 183, 183, 183, 127]);
        assert!(s.col_sums().iter().all(|&c| c == 175));
        assert_eq!(s.row(0), &[30, 39, 48, 9, 10, 19, 28]);
        assert_eq!(s.row(6), &[22, 31, 40, 1, 2, 11, 20]);
        let w = shift_scale(&s, 4).unwrap();
        assert!(w.col_sums().iter().all(|&c| c == 672));
    }

    #[test]
    fn mstar_for_three() {
        let s = modify_mstar(&siamese_magic_square(3).unwrap()).unwrap();
        // 15 + 4 twice, 15 - 8 once
        assert_eq!(s.row_sums(), vec![19, 19, 7]);
        assert!(s.col_sums().iter().all(|&c| c == 15));
    }

    #[test]
    fn mstar_rejects_other_squares() {
        let m = crate::design::odd_magic_square(5, crate::design::Variant::N2).unwrap();
        assert!(modify_mstar(&m).is_err());
    }

    #[test]
    fn bipartite_small() {
        let f = build_zt_family_bipartite(3, 5, 2).unwrap();
        assert_eq!(f.claimed_row_sums, vec![77, 78]);
        assert_eq!(f.claimed_col_sums, vec![46, 47]);
        assert_eq!(f.recipe.claimed_colors, 4);
        assert!(build_zt_family_bipartite(3, 5, 3).is_err());
        assert!(build_zt_family_bipartite(3, 3, 2).is_err());
        assert!(build_zt_family_bipartite(4, 6, 2).is_err());
    }

    #[test]
    fn bipartite_transposed() {
        let f = build_zt_family_bipartite(5, 3, 2).unwrap();
        assert_eq!((f.rows(), f.cols()), (5, 3));
        assert_eq!(f.claimed_row_sums, vec![46, 47]);
        assert!(f.violations().is_empty());
    }

    #[test]
    fn glued_constants() {
        let f = build_zt_family_glued(4, 2).unwrap();
        assert_eq!(f.claimed_row_sums, vec![66]);
        assert_eq!(f.claimed_col_sums, vec![34, 98]);
        let f = build_zt_family_glued(4, 1).unwrap();
        assert_eq!(f.claimed_row_sums, vec![34]);
        assert!(build_zt_family_glued(2, 1).is_err());
        assert!(build_zt_family_glued(5, 1).is_err());
    }

    #[test]
    fn square_odd_r() {
        let f = build_zt_family_square(3, 3).unwrap();
        assert_eq!(f.claimed_col_sums, vec![42]);
        assert_eq!(f.claimed_row_sums, vec![18, 54]);
        for z in &f.copies {
            assert_eq!(z.row_sums(), vec![54, 54, 18]);
        }
        assert_eq!(f.recipe.tag, RecipeTag::ZtSquareKotzig);
    }

    #[test]
    fn square_even_r() {
        let f = build_zt_family_square(7, 4).unwrap();
        assert_eq!(f.claimed_col_sums, vec![689, 690]);
        assert_eq!(f.claimed_row_sums, vec![497, 498, 721, 722]);
        assert_eq!(f.recipe.claimed_colors, 6);
    }

    #[test]
    fn mrs_family() {
        let f = build_mrs_family(3, 5, 3).unwrap();
        assert_eq!(f.claimed_row_sums, vec![115]);
        assert_eq!(f.claimed_col_sums, vec![69]);
        let f = build_mrs_family(4, 6, 2).unwrap();
        assert_eq!(f.claimed_row_sums, vec![147]);
        assert_eq!(f.claimed_col_sums, vec![98]);
        assert!(build_mrs_family(2, 2, 3).is_err());
        assert!(build_mrs_family(3, 3, 3).is_err());
    }

    #[test]
    fn nmr_single() {
        let f = build_nmr_single(4, 3).unwrap();
        assert_eq!(f.claimed_row_sums, vec![19, 20]);
        assert_eq!(f.claimed_col_sums, vec![26]);
        let t = build_nmr_single(3, 4).unwrap();
        assert_eq!(t.claimed_row_sums, vec![26]);
    }
}
