//! The face poset of the tropical complex.
//!
//! A Boolean matrix `S` is the type of a point exactly when
//!
//! 1. every column of `S` is non-empty,
//! 2. every partial bijection contained in `S` is permanent-attaining, and
//! 3. for every contained bijection with domain `J` and image `I`, every
//!    permanent-attaining bijection `J -> I` is also contained in `S`.
//!
//! These conditions only consult the permanent structure, so the whole face
//! poset is computed here without any geometry. The geometric route lives in
//! [`Arrangement::is_realized_type`] and is used to cross-check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::boolmat::{BoolMatrix, PartialBijection};
use crate::error::{Error, Result};
use crate::facemonoid::OrderedSetPartition;
use crate::permanent::PermanentStructure;
use crate::subset;
use crate::tropical::Arrangement;

/// Largest `n·d` that [`enumerate_types`] accepts by default.
pub const DEFAULT_TYPE_ENUMERATION_CAP: usize = 24;

/// A type of the arrangement together with the dimension and boundedness of
/// its cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeCell {
    ty: BoolMatrix,
    dimension: usize,
    bounded: bool,
}

impl TypeCell {
    fn from_type(ty: BoolMatrix) -> Self {
        TypeCell {
            dimension: tie_dimension(&ty),
            bounded: is_bounded(&ty),
            ty,
        }
    }

    pub fn type_matrix(&self) -> &BoolMatrix {
        &self.ty
    }

    /// Dimension of the cell in tropical projective space `R^n / R(1,..,1)`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }
}

/// `(#components of the tie graph) - 1`, where rows `i, k` are joined when
/// they share a column of `t`. This is the dimension of the solution set of
/// the cell's equalities modulo `R(1, .., 1)`.
pub fn tie_dimension(t: &BoolMatrix) -> usize {
    let n = t.rows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for col in t.column_masks() {
        let mut members = subset::elements(col);
        let Some(first) = members.next() else {
            continue;
        };
        for other in members {
            let (a, b) = (find(&mut parent, first), find(&mut parent, other));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components - 1
}

/// Every row non-empty.
pub fn is_bounded(t: &BoolMatrix) -> bool {
    t.row_masks().iter().all(|r| *r != 0)
}

/// Whether `b` is a face of `a`: faces carry more ties, so this is `a ⪯ b`.
pub fn face_relation(a: &TypeCell, b: &TypeCell) -> bool {
    a.ty.leq(&b.ty).unwrap_or(false)
}

impl PermanentStructure {
    /// Decides whether `s` is a type using only the permanent structure.
    pub fn is_type(&self, s: &BoolMatrix) -> Result<bool> {
        self.arrangement().check_matrix(s)?;
        if (0..s.cols()).any(|j| s.column(j) == 0) {
            return Ok(false);
        }
        let mut closed = BTreeSet::new();
        for sigma in s.contained_partial_bijections() {
            if sigma.is_empty() {
                continue;
            }
            let key = (sigma.image(), sigma.domain());
            let optima = self.optimal(key.0, key.1)?;
            if optima.binary_search(&sigma).is_err() {
                return Ok(false);
            }
            if closed.insert(key) && !optima.iter().all(|tau| tau.is_contained_in(s)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The decorated cell of `t`, or [`Error::NotAType`].
    pub fn cell(&self, t: &BoolMatrix) -> Result<TypeCell> {
        if !self.is_type(t)? {
            return Err(Error::NotAType);
        }
        Ok(TypeCell::from_type(t.clone()))
    }
}

/// Free-function form of [`PermanentStructure::is_type`].
pub fn is_type(structure: &PermanentStructure, s: &BoolMatrix) -> Result<bool> {
    structure.is_type(s)
}

/// Dimension of the cell labelled by `t`; errors when `t` is not a type.
pub fn cell_dimension(structure: &PermanentStructure, t: &BoolMatrix) -> Result<usize> {
    Ok(structure.cell(t)?.dimension)
}

/// `T ∘ P`. The result is always a type again; a failure here means the
/// implementation is wrong and aborts.
pub fn act_on_type(
    structure: &PermanentStructure,
    cell: &TypeCell,
    p: &OrderedSetPartition,
) -> Result<TypeCell> {
    structure.arrangement().check_matrix(&cell.ty)?;
    let moved = p.act_matrix(&cell.ty)?;
    assert!(
        structure.is_type(&moved)?,
        "face monoid action left the face poset: {} ∘ {} = {}",
        cell.ty,
        p,
        moved
    );
    Ok(TypeCell::from_type(moved))
}

/// All cells of the tropical complex, sorted by decreasing dimension and
/// then by column masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    n: usize,
    d: usize,
    cells: Vec<TypeCell>,
}

impl FacePoset {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.d
    }

    pub fn cells(&self) -> &[TypeCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn find(&self, t: &BoolMatrix) -> Option<&TypeCell> {
        self.cells.iter().find(|c| c.ty == *t)
    }

    pub fn contains(&self, t: &BoolMatrix) -> bool {
        self.find(t).is_some()
    }

    /// Number of cells per dimension.
    pub fn counts_by_dimension(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in &self.cells {
            *out.entry(c.dimension).or_insert(0) += 1;
        }
        out
    }

    /// Faces of `cell` (including itself) present in the poset.
    pub fn faces_of<'a>(&'a self, cell: &'a TypeCell) -> impl Iterator<Item = &'a TypeCell> + 'a {
        self.cells.iter().filter(move |c| face_relation(cell, c))
    }
}

/// Enumerates every type of `arrangement` with the default `n·d` cap.
pub fn enumerate_types(arrangement: &Arrangement) -> Result<FacePoset> {
    enumerate_types_with_cap(arrangement, DEFAULT_TYPE_ENUMERATION_CAP)
}

pub fn enumerate_types_with_cap(arrangement: &Arrangement, cap: usize) -> Result<FacePoset> {
    let size = arrangement.rows() * arrangement.cols();
    if size > cap {
        return Err(Error::CapExceeded {
            what: "candidate matrix",
            size,
            cap,
        });
    }
    let structure = PermanentStructure::full(arrangement.clone())?;
    enumerate_with(&structure)
}

/// Enumerates every type using an existing permanent structure.
pub fn enumerate_with(structure: &PermanentStructure) -> Result<FacePoset> {
    let arr = structure.arrangement();
    let (n, d) = (arr.rows(), arr.cols());
    if structure.k_max() < n.min(d) {
        return Err(Error::CapExceeded {
            what: "permanent structure coverage",
            size: n.min(d),
            cap: structure.k_max(),
        });
    }
    let mut search = Enumeration {
        structure,
        n,
        d,
        columns: Vec::with_capacity(d),
        found: Vec::new(),
    };
    let empty = PartialBijection::empty(n, d)?;
    search.extend(&[empty])?;
    let mut cells = search.found;
    cells.sort_by(|a, b| {
        Reverse(a.dimension)
            .cmp(&Reverse(b.dimension))
            .then_with(|| a.ty.column_masks().cmp(&b.ty.column_masks()))
    });
    Ok(FacePoset { n, d, cells })
}

/// Column-by-column search. When column `j` is fixed, every contained
/// bijection whose domain has `j` as its largest column is final, so the
/// attaining condition and the closure condition for it are checked there.
struct Enumeration<'a> {
    structure: &'a PermanentStructure,
    n: usize,
    d: usize,
    columns: Vec<u64>,
    found: Vec<TypeCell>,
}

impl Enumeration<'_> {
    fn contains(&self, tau: &PartialBijection) -> bool {
        tau.pairs()
            .iter()
            .all(|&(i, j)| subset::contains(self.columns[j], i))
    }

    /// `contained` holds every bijection inside the columns fixed so far.
    fn extend(&mut self, contained: &[PartialBijection]) -> Result<()> {
        let j = self.columns.len();
        if j == self.d {
            let ty = BoolMatrix::from_column_masks(self.n, &self.columns)?;
            self.found.push(TypeCell::from_type(ty));
            return Ok(());
        }
        'candidates: for col in 1..=subset::full(self.n) {
            self.columns.push(col);
            let mut fresh = Vec::new();
            let mut closed = BTreeSet::new();
            for base in contained {
                for i in subset::elements(col & !base.image()) {
                    let mut pairs = base.pairs().to_vec();
                    pairs.push((i, j));
                    let sigma = PartialBijection::new(self.n, self.d, pairs)?;
                    let key = (sigma.image(), sigma.domain());
                    let optima = self.structure.optimal(key.0, key.1)?;
                    let ok = optima.binary_search(&sigma).is_ok()
                        && (!closed.insert(key) || optima.iter().all(|t| self.contains(t)));
                    if !ok {
                        self.columns.pop();
                        continue 'candidates;
                    }
                    fresh.push(sigma);
                }
            }
            let mut next = contained.to_vec();
            next.extend(fresh);
            self.extend(&next)?;
            self.columns.pop();
        }
        Ok(())
    }
}
