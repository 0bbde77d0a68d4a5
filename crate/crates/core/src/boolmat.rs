//! Boolean matrices and partial bijections.
//!
//! An `n x d` Boolean matrix is read interchangeably as a `d`-tuple of
//! column subsets of the rows or an `n`-tuple of row subsets of the columns.
//! Indices are zero-based in the API; the textual form is one-based.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::subset;

/// Row-major, bit-packed `n x d` zero-one matrix. `rows[i]` is the set of
/// columns `j` with `S_ij = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMatrix {
    n: usize,
    d: usize,
    rows: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize, d: usize) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(d)?;
        Ok(BoolMatrix {
            n,
            d,
            rows: vec![0; n],
        })
    }

    pub fn ones(n: usize, d: usize) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(d)?;
        Ok(BoolMatrix {
            n,
            d,
            rows: vec![subset::full(d); n],
        })
    }

    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut m = Self::zeros(n, d)?;
        for (i, row) in m.rows.iter_mut().enumerate() {
            for j in 0..d {
                if f(i, j) {
                    *row |= subset::singleton(j);
                }
            }
        }
        Ok(m)
    }

    /// Builds from row masks; bits beyond column `d` are rejected.
    pub fn from_row_masks(d: usize, rows: Vec<u64>) -> Result<Self> {
        subset::check_dim(rows.len())?;
        subset::check_dim(d)?;
        if let Some(i) = rows
            .iter()
            .position(|r| !subset::is_subset(*r, subset::full(d)))
        {
            return Err(Error::IndexOutOfRange {
                index: 63 - rows[i].leading_zeros() as usize,
                len: d,
            });
        }
        Ok(BoolMatrix {
            n: rows.len(),
            d,
            rows,
        })
    }

    /// Builds from column masks over the rows (the `d`-tuple view).
    pub fn from_column_masks(n: usize, columns: &[u64]) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(columns.len())?;
        let mut rows = vec![0u64; n];
        for (j, &col) in columns.iter().enumerate() {
            if !subset::is_subset(col, subset::full(n)) {
                return Err(Error::IndexOutOfRange {
                    index: 63 - col.leading_zeros() as usize,
                    len: n,
                });
            }
            for i in subset::elements(col) {
                rows[i] |= subset::singleton(j);
            }
        }
        Ok(BoolMatrix {
            n,
            d: columns.len(),
            rows,
        })
    }

    /// Builds from explicit zero-based column index lists.
    pub fn from_columns(n: usize, columns: &[&[usize]]) -> Result<Self> {
        let mut masks = Vec::with_capacity(columns.len());
        for col in columns {
            if let Some(&i) = col.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            masks.push(subset::from_indices(col.iter().copied()));
        }
        Self::from_column_masks(n, &masks)
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        subset::contains(self.rows[i], j)
    }

    /// Returns a copy with entry `(i, j)` set to `value`.
    pub fn with(&self, i: usize, j: usize, value: bool) -> Self {
        let mut out = self.clone();
        if value {
            out.rows[i] |= subset::singleton(j);
        } else {
            out.rows[i] &= !subset::singleton(j);
        }
        out
    }

    /// `S_{i*}` as a column mask.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// `S_{*j}` as a row mask.
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| subset::contains(**r, j))
            .fold(0, |acc, (i, _)| acc | subset::singleton(i))
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    pub fn column_masks(&self) -> Vec<u64> {
        (0..self.d).map(|j| self.column(j)).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(|r| subset::len(*r)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| *r == 0)
    }

    pub fn same_shape(&self, other: &BoolMatrix) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::ShapeMismatch {
                expected_rows: self.n,
                expected_cols: self.d,
                rows: other.n,
                cols: other.d,
            });
        }
        Ok(())
    }

    /// The entrywise order: `self ⪯ other` iff every one of `self` is a one of `other`.
    pub fn leq(&self, other: &BoolMatrix) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| subset::is_subset(*a, *b)))
    }

    /// Entrywise AND.
    pub fn meet(&self, other: &BoolMatrix) -> Result<BoolMatrix> {
        self.same_shape(other)?;
        Ok(BoolMatrix {
            n: self.n,
            d: self.d,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & b)
                .collect(),
        })
    }

    pub fn transpose(&self) -> BoolMatrix {
        BoolMatrix {
            n: self.d,
            d: self.n,
            rows: self.column_masks(),
        }
    }

    /// At most one one in each row and in each column.
    pub fn is_partial_bijection(&self) -> bool {
        let mut seen_cols = 0u64;
        for &r in &self.rows {
            if subset::len(r) > 1 || r & seen_cols != 0 {
                return false;
            }
            seen_cols |= r;
        }
        true
    }

    /// Every partial bijection `Σ ⪯ self`, the empty one first, in
    /// lexicographic order of the per-column choice (unassigned before rows,
    /// rows ascending, column 0 most significant).
    pub fn contained_partial_bijections(&self) -> ContainedBijections<'_> {
        ContainedBijections {
            matrix: self,
            choice: vec![None; self.d],
            used_rows: 0,
            started: false,
            done: false,
        }
    }

    /// Every entry `(i, j)` with `S_ij = 1`, row-major.
    pub fn ones_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| subset::elements(*r).map(move |j| (i, j)))
    }
}

/// Column form, one-based: `({2},{1,2},{1},{1,3})`.
impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for j in 0..self.d {
            if j > 0 {
                f.write_str(",")?;
            }
            write_set(f, self.column(j))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolMatrix[{}x{}]{}", self.n, self.d, self)
    }
}

pub(crate) fn write_set(f: &mut fmt::Formatter<'_>, set: u64) -> fmt::Result {
    f.write_str("{")?;
    for (k, i) in subset::elements(set).enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", i + 1)?;
    }
    f.write_str("}")
}

/// An injective partial map from columns to rows, stored as `(row, column)`
/// pairs sorted by column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialBijection {
    n: usize,
    d: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialBijection {
    pub fn empty(n: usize, d: usize) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(d)?;
        Ok(PartialBijection {
            n,
            d,
            pairs: Vec::new(),
        })
    }

    pub fn new(n: usize, d: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(d)?;
        let mut rows = 0u64;
        let mut cols = 0u64;
        for &(i, j) in &pairs {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            if j >= d {
                return Err(Error::IndexOutOfRange { index: j, len: d });
            }
            if subset::contains(rows, i) {
                return Err(Error::InvalidBijection("row used twice"));
            }
            if subset::contains(cols, j) {
                return Err(Error::InvalidBijection("column used twice"));
            }
            rows |= subset::singleton(i);
            cols |= subset::singleton(j);
        }
        pairs.sort_by_key(|&(i, j)| (j, i));
        Ok(PartialBijection { n, d, pairs })
    }

    /// Reads a Boolean matrix with at most one one per row and column.
    pub fn from_matrix(m: &BoolMatrix) -> Result<Self> {
        if !m.is_partial_bijection() {
            return Err(Error::InvalidBijection(
                "matrix has a row or column with two ones",
            ));
        }
        Self::new(m.rows(), m.cols(), m.ones_iter().collect())
    }

    pub(crate) fn from_sorted_unchecked(n: usize, d: usize, pairs: Vec<(usize, usize)>) -> Self {
        PartialBijection { n, d, pairs }
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `(row, column)` pairs, sorted by column.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The domain `J ⊆ [d]` as a column mask.
    pub fn domain(&self) -> u64 {
        subset::from_indices(self.pairs.iter().map(|p| p.1))
    }

    /// The image `I ⊆ [n]` as a row mask.
    pub fn image(&self) -> u64 {
        subset::from_indices(self.pairs.iter().map(|p| p.0))
    }

    pub fn image_of(&self, j: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == j).map(|p| p.0)
    }

    pub fn to_matrix(&self) -> BoolMatrix {
        let mut rows = vec![0u64; self.n];
        for &(i, j) in &self.pairs {
            rows[i] |= subset::singleton(j);
        }
        BoolMatrix {
            n: self.n,
            d: self.d,
            rows,
        }
    }

    /// `Σ ⪯ S`.
    pub fn is_contained_in(&self, s: &BoolMatrix) -> bool {
        self.n == s.n && self.d == s.d && self.pairs.iter().all(|&(i, j)| s.get(i, j))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", j + 1, i + 1)?;
        }
        f.write_str("}")
    }
}

/// Lazy odometer over the partial bijections contained in a matrix.
pub struct ContainedBijections<'a> {
    matrix: &'a BoolMatrix,
    choice: Vec<Option<usize>>,
    used_rows: u64,
    started: bool,
    done: bool,
}

impl ContainedBijections<'_> {
    fn current(&self) -> PartialBijection {
        let pairs = self
            .choice
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.map(|i| (i, j)))
            .collect();
        PartialBijection::from_sorted_unchecked(self.matrix.n, self.matrix.d, pairs)
    }

    /// Moves column `j` to its next admissible option, if any.
    fn bump(&mut self, j: usize) -> bool {
        let column = self.matrix.column(j);
        let start = match self.choice[j] {
            None => 0,
            Some(i) => {
                self.used_rows &= !subset::singleton(i);
                i + 1
            }
        };
        let free = column & !self.used_rows & !subset::full(start);
        if free == 0 {
            self.choice[j] = None;
            false
        } else {
            let i = free.trailing_zeros() as usize;
            self.choice[j] = Some(i);
            self.used_rows |= subset::singleton(i);
            true
        }
    }
}

impl Iterator for ContainedBijections<'_> {
    type Item = PartialBijection;

    fn next(&mut self) -> Option<PartialBijection> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        // Later columns are all unassigned after a bump, so the first
        // column (from the right) that can advance gives the successor.
        for j in (0..self.matrix.d).rev() {
            if self.bump(j) {
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}
