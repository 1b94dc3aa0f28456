//! Matrix families for `rK_{m,n}` and blanked matrices for `K_{1,m,n}`.
//!
//! Each builder computes its claimed sums from closed-form constants and
//! then checks them against the sums it actually produced, so a returned
//! value is always internally consistent.

mod blanked;
mod family;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{distinct, IntMatrix};

pub use crate::design::lift::circulant_lift;
pub use blanked::{
    build_b_even_square, build_b_mixed_parity, build_b_odd_square, build_b_same_parity,
};
pub use family::{
    build_mrs_family, build_nmr_single, build_zt_family_bipartite, build_zt_family_glued,
    build_zt_family_square, modify_mstar, shift_scale,
};

/// Which construction produced an object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecipeTag {
    /// One MRS rectangle per copy; 2 colors.
    Mrs,
    /// `r(MR - 1)` plus QKA lifts, odd `m != n`, even `r`; 4 colors.
    ZtBipartite,
    /// MRS(m,2;r) glued to a shifted MRS(m,m-2;r); 3 colors.
    GluedMrs,
    /// Shifted Siamese square plus KA lifts, odd `r`; 3 colors.
    ZtSquareKotzig,
    /// Shifted Siamese square plus QKA lifts, even `r`; 6 colors.
    ZtSquareQuasi,
    /// Blanked MR(m+1,n+1).
    BSameParity,
    /// Blanked NMR(m+1,n+1).
    BMixedParity,
    /// Interleaved `(n+1) x (n+1)` array with column swaps, odd `n`.
    BOddSquare,
    /// Blanked odd magic square with first-row swaps, even `m`.
    BEvenSquare,
    /// A single NMR labeling `K_{m,n}` of mixed parity.
    NmrSingle,
}

impl RecipeTag {
    pub const ALL: [RecipeTag; 10] = [
        RecipeTag::Mrs,
        RecipeTag::ZtBipartite,
        RecipeTag::GluedMrs,
        RecipeTag::ZtSquareKotzig,
        RecipeTag::ZtSquareQuasi,
        RecipeTag::BSameParity,
        RecipeTag::BMixedParity,
        RecipeTag::BOddSquare,
        RecipeTag::BEvenSquare,
        RecipeTag::NmrSingle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RecipeTag::Mrs => "mrs",
            RecipeTag::ZtBipartite => "zt-bipartite",
            RecipeTag::GluedMrs => "glued-mrs",
            RecipeTag::ZtSquareKotzig => "zt-square-kotzig",
            RecipeTag::ZtSquareQuasi => "zt-square-quasi",
            RecipeTag::BSameParity => "b-same-parity",
            RecipeTag::BMixedParity => "b-mixed-parity",
            RecipeTag::BOddSquare => "b-odd-square",
            RecipeTag::BEvenSquare => "b-even-square",
            RecipeTag::NmrSingle => "nmr-single",
        }
    }

    /// The parameters a recipe covers, in words.
    pub fn scope(self) -> &'static str {
        match self {
            RecipeTag::Mrs => "rK_{m,n}, 1 < m < n, m and n even, or m, n, r all odd",
            RecipeTag::ZtBipartite => "rK_{m,n}, m != n both odd, r even",
            RecipeTag::GluedMrs => "rK_{m,m}, m even and at least 4",
            RecipeTag::ZtSquareKotzig => "rK_{m,m}, m odd and at least 3, r odd",
            RecipeTag::ZtSquareQuasi => "rK_{m,m}, m odd and at least 3, r even",
            RecipeTag::BSameParity => "K_{1,m,n}, 2 <= m != n of equal parity",
            RecipeTag::BMixedParity => "K_{1,m,n}, m, n >= 2 of different parity",
            RecipeTag::BOddSquare => "K_{1,n,n}, n odd and at least 3",
            RecipeTag::BEvenSquare => "K_{1,m,m}, m even and at least 2",
            RecipeTag::NmrSingle => "K_{m,n}, m, n >= 2 of different parity",
        }
    }

    /// Whether the recipe labels `K_{1,m,n}` rather than `rK_{m,n}`.
    pub fn is_tripartite(self) -> bool {
        matches!(
            self,
            RecipeTag::BSameParity
                | RecipeTag::BMixedParity
                | RecipeTag::BOddSquare
                | RecipeTag::BEvenSquare
        )
    }
}

impl fmt::Display for RecipeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RecipeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RecipeTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown recipe {s:?}")))
    }
}

/// Dispatch record: the recipe, its parameters, and how many weight
/// classes the construction produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildRecipe {
    #[serde(rename = "theorem")]
    pub tag: RecipeTag,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub claimed_colors: usize,
}

/// `r` equally shaped matrices whose entries together are `1..=r*m*n`.
///
/// Row `i` of copy `t` labels the edges at `v_i` in copy `t`, so the
/// claimed row sums are the possible `v`-side weights and the claimed
/// column sums the `u`-side weights. Both are sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFamily {
    pub copies: Vec<IntMatrix>,
    pub claimed_row_sums: Vec<u64>,
    pub claimed_col_sums: Vec<u64>,
    pub recipe: BuildRecipe,
}

impl MatrixFamily {
    pub fn rows(&self) -> usize {
        self.copies.first().map_or(0, IntMatrix::rows)
    }

    pub fn cols(&self) -> usize {
        self.copies.first().map_or(0, IntMatrix::cols)
    }

    pub fn observed_row_sums(&self) -> Vec<u64> {
        distinct(
            &self
                .copies
                .iter()
                .flat_map(IntMatrix::row_sums)
                .collect::<Vec<_>>(),
        )
    }

    pub fn observed_col_sums(&self) -> Vec<u64> {
        distinct(
            &self
                .copies
                .iter()
                .flat_map(IntMatrix::col_sums)
                .collect::<Vec<_>>(),
        )
    }

    /// Re-derives everything from the entries. Empty means consistent.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let Some(first) = self.copies.first() else {
            return vec!["family has no copies".into()];
        };
        if self
            .copies
            .iter()
            .any(|c| c.rows() != first.rows() || c.cols() != first.cols())
        {
            v.push("copies differ in shape".into());
            return v;
        }
        if self.copies.iter().any(|c| c.blank().is_some()) {
            v.push("family copies may not contain a blank cell".into());
        }
        let mut all: Vec<u32> = self
            .copies
            .iter()
            .flat_map(|c| c.entries().iter().copied())
            .collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(k, &x)| x as usize != k + 1) {
            v.push(format!("entries are not exactly 1..={}", all.len()));
        }
        let (rows, cols) = (self.observed_row_sums(), self.observed_col_sums());
        if rows != self.claimed_row_sums {
            v.push(format!(
                "row sums {rows:?} differ from claimed {:?}",
                self.claimed_row_sums
            ));
        }
        if cols != self.claimed_col_sums {
            v.push(format!(
                "column sums {cols:?} differ from claimed {:?}",
                self.claimed_col_sums
            ));
        }
        v
    }

    pub fn transpose(&self) -> MatrixFamily {
        MatrixFamily {
            copies: self.copies.iter().map(IntMatrix::transpose).collect(),
            claimed_row_sums: self.claimed_col_sums.clone(),
            claimed_col_sums: self.claimed_row_sums.clone(),
            recipe: BuildRecipe {
                m: self.recipe.n,
                n: self.recipe.m,
                ..self.recipe
            },
        }
    }

    pub(crate) fn checked(self) -> Result<Self> {
        let v = self.violations();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Construction(format!(
                "{}: {}",
                self.recipe.tag,
                v.join("; ")
            )))
        }
    }
}

/// An `(m+1) x (n+1)` array with its `(1,1)` cell blanked, labeling
/// `K_{1,m,n}`.
///
/// The claims are per vertex side: rows `2..` give the `v` weights,
/// columns `2..` the `u` weights, and `hub` is row 1 plus column 1, the
/// weight of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlankedMatrix {
    pub matrix: IntMatrix,
    pub claimed_row_sums: Vec<u64>,
    pub claimed_col_sums: Vec<u64>,
    pub claimed_hub: u64,
    pub recipe: BuildRecipe,
}

impl BlankedMatrix {
    pub fn observed_row_sums(&self) -> Vec<u64> {
        distinct(&self.matrix.row_sums()[1..])
    }

    pub fn observed_col_sums(&self) -> Vec<u64> {
        distinct(&self.matrix.col_sums()[1..])
    }

    pub fn observed_hub(&self) -> u64 {
        self.matrix.row_sums()[0] + self.matrix.col_sums()[0]
    }

    pub fn violations(&self) -> Vec<String> {
        let mut v = blanked_structure(&self.matrix);
        if !v.is_empty() {
            return v;
        }
        if self.observed_row_sums() != self.claimed_row_sums {
            v.push(format!(
                "row sums {:?} differ from claimed {:?}",
                self.observed_row_sums(),
                self.claimed_row_sums
            ));
        }
        if self.observed_col_sums() != self.claimed_col_sums {
            v.push(format!(
                "column sums {:?} differ from claimed {:?}",
                self.observed_col_sums(),
                self.claimed_col_sums
            ));
        }
        if self.observed_hub() != self.claimed_hub {
            v.push(format!(
                "hub weight {} differs from claimed {}",
                self.observed_hub(),
                self.claimed_hub
            ));
        }
        v
    }

    pub fn transpose(&self) -> BlankedMatrix {
        BlankedMatrix {
            matrix: self.matrix.transpose(),
            claimed_row_sums: self.claimed_col_sums.clone(),
            claimed_col_sums: self.claimed_row_sums.clone(),
            claimed_hub: self.claimed_hub,
            recipe: BuildRecipe {
                m: self.recipe.n,
                n: self.recipe.m,
                ..self.recipe
            },
        }
    }

    pub(crate) fn checked(self) -> Result<Self> {
        let v = self.violations();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Construction(format!(
                "{}: {}",
                self.recipe.tag,
                v.join("; ")
            )))
        }
    }
}

/// Shape, blank position and entry range of a blanked matrix; no sums.
pub fn blanked_structure(m: &IntMatrix) -> Vec<String> {
    let mut v = Vec::new();
    if m.rows() < 2 || m.cols() < 2 {
        v.push(format!(
            "blanked matrix must be at least 2x2, got {}x{}",
            m.rows(),
            m.cols()
        ));
        return v;
    }
    if m.blank() != Some((0, 0)) {
        v.push("the blank must sit at (1,1)".into());
    }
    let mut live: Vec<u32> = m.live_entries().collect();
    live.sort_unstable();
    if live.iter().enumerate().any(|(k, &x)| x as usize != k + 1) {
        v.push(format!("live entries are not exactly 1..={}", live.len()));
    }
    v
}

/// Number of distinct values across the given weight lists.
pub(crate) fn color_count(parts: &[&[u64]]) -> usize {
    distinct(&parts.concat()).len()
}
