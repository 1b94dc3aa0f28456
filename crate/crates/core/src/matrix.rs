//! Dense integer arrays shared by every construction.

use std::fmt;

use crate::error::{Error, Result};

/// Dimensions of an array, or of a set of equally shaped arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArrayShape {
    pub rows: usize,
    pub cols: usize,
    /// Number of arrays in a set; 1 for a single array.
    pub count: usize,
}

impl ArrayShape {
    pub fn new(rows: usize, cols: usize, count: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || count == 0 {
            return Err(Error::invalid(format!(
                "array shape {rows}x{cols} (count {count}) has a zero dimension"
            )));
        }
        Ok(ArrayShape { rows, cols, count })
    }

    pub fn single(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, 1)
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }
}

/// Row-major rectangular array of nonnegative integers.
///
/// At most one cell may be blanked; a blanked cell is ignored by sums and by
/// entry-range checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    blank: Option<(usize, usize)>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        ArrayShape::single(rows, cols)?;
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries supplied for a {rows}x{cols} array",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
            blank: None,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0; rows * cols])
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> ArrayShape {
        ArrayShape {
            rows: self.rows,
            cols: self.cols,
            count: 1,
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn blank(&self) -> Option<(usize, usize)> {
        self.blank
    }

    pub fn is_blank(&self, i: usize, j: usize) -> bool {
        self.blank == Some((i, j))
    }

    /// Marks one cell as blank. Its stored value is left untouched.
    pub fn set_blank(&mut self, cell: Option<(usize, usize)>) -> Result<()> {
        if let Some((i, j)) = cell {
            if i >= self.rows || j >= self.cols {
                return Err(Error::ShapeMismatch(format!(
                    "blank cell ({i},{j}) outside {}x{}",
                    self.rows, self.cols
                )));
            }
        }
        self.blank = cell;
        Ok(())
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries that are not blanked, row-major.
    pub fn live_entries(&self) -> impl Iterator<Item = u32> + '_ {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .filter(move |(k, _)| self.blank != Some((k / cols, k % cols)))
            .map(|(_, &v)| v)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self.is_blank(i, j))
                    .map(|j| u64::from(self.get(i, j)))
                    .sum()
            })
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .filter(|&i| !self.is_blank(i, j))
                    .map(|i| u64::from(self.get(i, j)))
                    .sum()
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
            .expect("transpose of a valid matrix is valid");
        t.blank = self.blank.map(|(i, j)| (j, i));
        t
    }

    pub fn map(&self, mut f: impl FnMut(u32) -> u32) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&v| f(v)).collect(),
            blank: self.blank,
        }
    }

    /// Entrywise sum of two equally shaped matrices.
    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            blank: self.blank,
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn swap_cells(&mut self, a: (usize, usize), b: (usize, usize)) {
        self.entries
            .swap(a.0 * self.cols + a.1, b.0 * self.cols + b.1);
    }

    pub fn position_of(&self, v: u32) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|&x| x == v)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Horizontal concatenation.
    pub fn hstack(parts: &[IntMatrix]) -> Result<IntMatrix> {
        let rows = parts.first().map_or(0, IntMatrix::rows);
        if parts.iter().any(|p| p.rows != rows) {
            return Err(Error::ShapeMismatch("hstack needs equal row counts".into()));
        }
        let cols = parts.iter().map(IntMatrix::cols).sum();
        let mut out = IntMatrix::zeros(rows, cols)?;
        let mut offset = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, offset + j, p.get(i, j));
                }
            }
            offset += p.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[IntMatrix]) -> Result<IntMatrix> {
        let cols = parts.first().map_or(0, IntMatrix::cols);
        if parts.iter().any(|p| p.cols != cols) {
            return Err(Error::ShapeMismatch(
                "vstack needs equal column counts".into(),
            ));
        }
        let rows = parts.iter().map(IntMatrix::rows).sum();
        let entries = parts
            .iter()
            .flat_map(|p| p.entries.iter().copied())
            .collect();
        IntMatrix::new(rows, cols, entries)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                if self.is_blank(i, j) {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{:>width$}", self.get(i, j))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Observed row and column sums of one array or of a whole set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MagicConstants {
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
}

impl MagicConstants {
    pub fn observe(matrices: &[IntMatrix]) -> Self {
        let mut out = MagicConstants::default();
        for m in matrices {
            out.row_sums.extend(m.row_sums());
            out.col_sums.extend(m.col_sums());
        }
        out
    }

    pub fn distinct_rows(&self) -> Vec<u64> {
        distinct(&self.row_sums)
    }

    pub fn distinct_cols(&self) -> Vec<u64> {
        distinct(&self.col_sums)
    }
}

/// Sorted distinct values.
pub fn distinct(values: &[u64]) -> Vec<u64> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
