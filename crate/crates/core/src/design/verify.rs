//! Independent checks of the defining equations of each array kind.
//!
//! Everything here is recomputed from entries; nothing trusts a claim made
//! by a constructor.

use serde::{Deserialize, Serialize};

use crate::matrix::{distinct, IntMatrix, MagicConstants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrayKind {
    MagicSquare,
    MagicRectangle,
    #[serde(rename = "nmr")]
    NearlyMagicRectangle,
    #[serde(rename = "ka")]
    Kotzig,
    #[serde(rename = "qka")]
    QuasiKotzig,
    #[serde(rename = "mrs")]
    MagicRectangleSet,
}

impl ArrayKind {
    pub fn name(self) -> &'static str {
        match self {
            ArrayKind::MagicSquare => "magic-square",
            ArrayKind::MagicRectangle => "magic-rectangle",
            ArrayKind::NearlyMagicRectangle => "nmr",
            ArrayKind::Kotzig => "ka",
            ArrayKind::QuasiKotzig => "qka",
            ArrayKind::MagicRectangleSet => "mrs",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            ArrayKind::MagicSquare,
            ArrayKind::MagicRectangle,
            ArrayKind::NearlyMagicRectangle,
            ArrayKind::Kotzig,
            ArrayKind::QuasiKotzig,
            ArrayKind::MagicRectangleSet,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ArrayKind,
    pub passed: bool,
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn sums(&self) -> MagicConstants {
        MagicConstants {
            row_sums: self.row_sums.clone(),
            col_sums: self.col_sums.clone(),
        }
    }
}

/// Checks `matrices` against the definition of `kind`.
///
/// Never fails: every problem becomes a line in `violations`.
pub fn verify_array(matrices: &[IntMatrix], kind: ArrayKind) -> VerificationReport {
    let observed = MagicConstants::observe(matrices);
    let mut v = Vec::new();
    check(matrices, kind, &mut v);
    VerificationReport {
        kind,
        passed: v.is_empty(),
        row_sums: observed.row_sums,
        col_sums: observed.col_sums,
        violations: v,
    }
}

fn check(ms: &[IntMatrix], kind: ArrayKind, v: &mut Vec<String>) {
    let Some(first) = ms.first() else {
        v.push("no arrays supplied".into());
        return;
    };
    let (a, b) = (first.rows(), first.cols());
    if ms.iter().any(|m| m.rows() != a || m.cols() != b) {
        v.push("arrays in the set differ in shape".into());
        return;
    }
    if ms.iter().any(|m| m.blank().is_some()) {
        v.push("design arrays may not contain a blank cell".into());
    }
    if kind != ArrayKind::MagicRectangleSet && ms.len() != 1 {
        v.push(format!("expected a single array, got {}", ms.len()));
        return;
    }
    let (a64, b64) = (a as u64, b as u64);
    match kind {
        ArrayKind::MagicSquare | ArrayKind::MagicRectangle => {
            if kind == ArrayKind::MagicSquare && a != b {
                v.push(format!("a magic square must be square, got {a}x{b}"));
            }
            check_range(ms, v);
            let n = a64 * b64 + 1;
            check_constant(&ms[0].row_sums(), b64 * n, "row", v);
            check_constant(&ms[0].col_sums(), a64 * n, "column", v);
        }
        ArrayKind::NearlyMagicRectangle => {
            if a % 2 == 1 || b % 2 == 0 {
                v.push(format!("NMR needs even rows and odd columns, got {a}x{b}"));
                return;
            }
            check_range(ms, v);
            let n = a64 * b64 + 1;
            check_constant(&ms[0].col_sums(), a64 * n, "column", v);
            check_split(&ms[0].row_sums(), b64 * n, "row", v);
        }
        ArrayKind::Kotzig | ArrayKind::QuasiKotzig => {
            check_row_permutations(&ms[0], v);
            let total = a64 * (b64 + 1);
            if kind == ArrayKind::Kotzig {
                check_constant(&ms[0].col_sums(), total, "column", v);
            } else {
                if a % 2 == 0 || b % 2 == 1 {
                    v.push(format!("QKA needs odd rows and even columns, got {a}x{b}"));
                    return;
                }
                check_split(&ms[0].col_sums(), total, "column", v);
            }
        }
        ArrayKind::MagicRectangleSet => {
            check_range(ms, v);
            let n = a64 * b64 * ms.len() as u64 + 1;
            for (t, m) in ms.iter().enumerate() {
                let mut local = Vec::new();
                check_constant(&m.row_sums(), b64 * n, "row", &mut local);
                check_constant(&m.col_sums(), a64 * n, "column", &mut local);
                v.extend(
                    local
                        .into_iter()
                        .map(|s| format!("rectangle {}: {s}", t + 1)),
                );
            }
        }
    }
}

/// Live entries across all arrays must be exactly `1..=N`.
fn check_range(ms: &[IntMatrix], v: &mut Vec<String>) {
    let mut all: Vec<u32> = ms.iter().flat_map(|m| m.live_entries()).collect();
    all.sort_unstable();
    let n = all.len() as u32;
    if let Some(&bad) = all.iter().find(|&&x| x == 0 || x > n) {
        v.push(format!("entry {bad} outside 1..={n}"));
    }
    if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
        v.push(format!("entry {} appears more than once", w[0]));
    }
}

/// `twice` is twice the expected common value.
fn check_constant(sums: &[u64], twice: u64, what: &str, v: &mut Vec<String>) {
    if twice % 2 == 1 {
        v.push(format!("{what} constant {twice}/2 is not an integer"));
        return;
    }
    let want = twice / 2;
    for (k, &s) in sums.iter().enumerate() {
        if s != want {
            v.push(format!("{what} {} sums to {s}, expected {want}", k + 1));
        }
    }
}

/// Half the sums equal `(twice-1)/2`, half `(twice+1)/2`.
fn check_split(sums: &[u64], twice: u64, what: &str, v: &mut Vec<String>) {
    if twice % 2 == 0 || sums.len() % 2 == 1 {
        v.push(format!("{what} sums cannot split evenly around {twice}/2"));
        return;
    }
    let (lo, hi) = ((twice - 1) / 2, twice.div_ceil(2));
    let lows = sums.iter().filter(|&&s| s == lo).count();
    let highs = sums.iter().filter(|&&s| s == hi).count();
    if lows + highs != sums.len() {
        v.push(format!(
            "{what} sums {:?} are not all in {{{lo}, {hi}}}",
            distinct(sums)
        ));
    } else if lows != highs {
        v.push(format!("{lows} {what}s sum to {lo} but {highs} to {hi}"));
    }
}

fn check_row_permutations(m: &IntMatrix, v: &mut Vec<String>) {
    let b = m.cols();
    for i in 0..m.rows() {
        let mut r = m.row(i).to_vec();
        r.sort_unstable();
        if r.iter().enumerate().any(|(k, &x)| x as usize != k + 1) {
            v.push(format!("row {} is not a permutation of 1..={b}", i + 1));
        }
    }
}
