//! Exact min-plus geometry of an arrangement: residuation, domination,
//! types of points, satisfiability of Boolean matrices and the strict
//! feasibility check that decides whether a matrix is the type of a point.
//!
//! Sectors of the hyperplane with apex `a` are `Dom_i(a)`, the points `y`
//! with `y_i - a_i = min_k (y_k - a_k)`. Column spaces and combinations are
//! max-plus.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::boolmat::BoolMatrix;
use crate::diffcon::{self, Perturbed, System};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset;

/// A point of `R^n` with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&v| Scalar::from_integer(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    /// `λ ⊗ x`, i.e. `x + (λ, .., λ)`.
    pub fn translate(&self, lambda: &Scalar) -> Point {
        Point(self.0.iter().map(|v| v + lambda).collect())
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn same_len(&self, other: &Point) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Point {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `⟨x | y⟩ = max{λ : λ ⊗ x <= y} = min_k (y_k - x_k)`.
pub fn residuation(x: &Point, y: &Point) -> Result<Scalar> {
    x.same_len(y)?;
    x.0.iter()
        .zip(&y.0)
        .map(|(a, b)| b - a)
        .min()
        .ok_or(Error::UnsupportedDimension(0))
}

/// Coordinates of `x` in `R^{n-1}` after quotienting by `R(1, .., 1)`:
/// `(v_1 - v_n, .., v_{n-1} - v_n)`.
pub fn project_to_plane(x: &Point) -> Result<Point> {
    let n = x.len();
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let last = &x.0[n - 1];
    Ok(Point(x.0[..n - 1].iter().map(|v| v - last).collect()))
}

/// An `n x d` rational matrix whose columns are apexes of min-plus
/// hyperplanes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    n: usize,
    d: usize,
    entries: Vec<Scalar>,
}

impl Arrangement {
    /// `entries` is row-major.
    pub fn new(n: usize, d: usize, entries: Vec<Scalar>) -> Result<Self> {
        subset::check_dim(n)?;
        subset::check_dim(d)?;
        if entries.len() != n * d {
            return Err(Error::DimensionMismatch {
                expected: n * d,
                found: entries.len(),
            });
        }
        Ok(Arrangement { n, d, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.len(),
            });
        }
        Self::new(n, d, rows.into_iter().flatten().collect())
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_integer(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.d + j]
    }

    /// The apex `M_{*j}`.
    pub fn column(&self, j: usize) -> Point {
        Point((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub(crate) fn check_point(&self, x: &Point) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_matrix(&self, s: &BoolMatrix) -> Result<()> {
        if s.rows() != self.n || s.cols() != self.d {
            return Err(Error::ShapeMismatch {
                expected_rows: self.n,
                expected_cols: self.d,
                rows: s.rows(),
                cols: s.cols(),
            });
        }
        Ok(())
    }

    /// `⟨M_{*j} | y⟩`.
    fn residual(&self, j: usize, y: &Point) -> Scalar {
        (0..self.n)
            .map(|k| &y.0[k] - self.get(k, j))
            .min()
            .expect("n >= 1")
    }

    /// Rows `i` where `y_i - M_{ij}` is minimal.
    fn sector_set(&self, j: usize, y: &Point) -> u64 {
        let diffs: Vec<Scalar> = (0..self.n).map(|k| &y.0[k] - self.get(k, j)).collect();
        let min = diffs.iter().min().expect("n >= 1");
        subset::from_indices((0..self.n).filter(|&k| diffs[k] == *min))
    }

    /// Whether the apex `M_{*j}` dominates `y` in position `i`.
    pub fn dominates(&self, j: usize, y: &Point, i: usize) -> Result<bool> {
        self.check_point(y)?;
        if j >= self.d {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.d,
            });
        }
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n,
            });
        }
        Ok(&y.0[i] - self.get(i, j) == self.residual(j, y))
    }

    /// The type of `x`: `T_ij = 1` iff `M_{*j}` dominates `x` in position `i`.
    pub fn type_of(&self, x: &Point) -> Result<BoolMatrix> {
        self.check_point(x)?;
        let columns: Vec<u64> = (0..self.d).map(|j| self.sector_set(j, x)).collect();
        BoolMatrix::from_column_masks(self.n, &columns)
    }

    /// `x_i - x_k <= M_ij - M_kj` for every one `(i, j)` of `s` and every `k`.
    fn satisfaction_system(&self, s: &BoolMatrix) -> System<Scalar> {
        let mut sys = System::new(self.n);
        for (i, j) in s.ones_iter() {
            for k in (0..self.n).filter(|&k| k != i) {
                sys.add(k, i, self.get(i, j) - self.get(k, j));
            }
        }
        sys
    }

    /// Whether some point lies in every sector that `s` asks for.
    pub fn is_satisfiable(&self, s: &BoolMatrix) -> Result<bool> {
        self.check_matrix(s)?;
        Ok(self.satisfaction_system(s).solve().is_some())
    }

    /// A point `x` with `s ⪯ type(x)`, when one exists.
    pub fn witness(&self, s: &BoolMatrix) -> Result<Option<Point>> {
        self.check_matrix(s)?;
        Ok(self.satisfaction_system(s).solve().map(Point))
    }

    /// Equalities inside each column of `t`, strict inequalities against
    /// every row outside it. `None` when some column is empty.
    fn realization_system(&self, t: &BoolMatrix) -> Option<System<Perturbed>> {
        let mut sys = System::new(self.n);
        for j in 0..self.d {
            let col = t.column(j);
            if col == 0 {
                return None;
            }
            for i in subset::elements(col) {
                for k in (0..self.n).filter(|&k| k != i) {
                    let w = self.get(i, j) - self.get(k, j);
                    let w = if subset::contains(col, k) {
                        Perturbed::weak(w)
                    } else {
                        Perturbed::strict(w)
                    };
                    sys.add(k, i, w);
                }
            }
        }
        Some(sys)
    }

    /// Whether some point has type exactly `t`.
    pub fn is_realized_type(&self, t: &BoolMatrix) -> Result<bool> {
        self.check_matrix(t)?;
        Ok(self
            .realization_system(t)
            .is_some_and(|sys| sys.solve().is_some()))
    }

    /// A point whose type is exactly `t`, when one exists.
    pub fn realizing_point(&self, t: &BoolMatrix) -> Result<Option<Point>> {
        self.check_matrix(t)?;
        let Some(sys) = self.realization_system(t) else {
            return Ok(None);
        };
        Ok(sys.solve().map(|p| Point(diffcon::realize(&sys, &p))))
    }

    /// `⊕_j λ_j ⊗ M_{*j}` over the given `(j, λ_j)` terms.
    pub fn max_plus_combination<'a, I>(&self, terms: I) -> Point
    where
        I: IntoIterator<Item = (usize, &'a Scalar)>,
    {
        let mut out: Vec<Option<Scalar>> = alloc::vec![None; self.n];
        for (j, lambda) in terms {
            for (k, slot) in out.iter_mut().enumerate() {
                let v = lambda + self.get(k, j);
                match slot {
                    Some(old) if *old >= v => {}
                    _ => *slot = Some(v),
                }
            }
        }
        Point(
            out.into_iter()
                .map(|v| v.expect("at least one term"))
                .collect(),
        )
    }

    /// `u = ⊕_l min(⟨M_{*l}|x⟩, ⟨M_{*l}|y⟩) ⊗ M_{*l}`.
    ///
    /// `u <= x` and `u <= y`, and any column dominating both `x` and `y` in
    /// position `p` also dominates `u` there.
    pub fn combine_satisfiers(&self, x: &Point, y: &Point) -> Result<Point> {
        self.check_point(x)?;
        self.check_point(y)?;
        let coeffs: Vec<Scalar> = (0..self.d)
            .map(|l| core::cmp::min(self.residual(l, x), self.residual(l, y)))
            .collect();
        Ok(self.max_plus_combination(coeffs.iter().enumerate()))
    }

    /// `y* = ⊕_j ⟨M_{*j}|y⟩ ⊗ M_{*j}`, the largest point of the max-plus
    /// column space below `y`.
    pub fn column_space_projection(&self, y: &Point) -> Result<Point> {
        self.check_point(y)?;
        let coeffs: Vec<Scalar> = (0..self.d).map(|j| self.residual(j, y)).collect();
        Ok(self.max_plus_combination(coeffs.iter().enumerate()))
    }

    pub fn in_column_space(&self, y: &Point) -> Result<bool> {
        Ok(self.column_space_projection(y)? == *y)
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrangement[{}x{}][", self.n, self.d)?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.d {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}
