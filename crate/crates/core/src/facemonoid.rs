//! The face monoid of the braid arrangement.
//!
//! Faces of the arrangement `x_i = x_j` in `R^n` are ordered set partitions
//! of `[n]`. The product refines the left factor by the right one, and the
//! monoid acts on the right of subsets of `[n]` (and columnwise on Boolean
//! matrices) by keeping the right-most non-empty intersection with a block.

use alloc::vec::Vec;
use core::fmt;

use crate::boolmat::{write_set, BoolMatrix};
use crate::error::{Error, Result};
use crate::subset;

/// Largest `n` that [`enumerate`] accepts unless told otherwise.
/// The ordered Bell number at 6 is 4683.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

/// An ordered partition `(F_1, .., F_l)` of `[n]` into non-empty blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<u64>) -> Result<Self> {
        subset::check_dim(n)?;
        let mut seen = 0u64;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPartition("empty block"));
            }
            if !subset::is_subset(b, subset::full(n)) {
                return Err(Error::InvalidPartition("block element out of range"));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition("blocks overlap"));
            }
            seen |= b;
        }
        if seen != subset::full(n) {
            return Err(Error::InvalidPartition(
                "blocks do not cover the ground set",
            ));
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    /// Blocks given as zero-based index lists.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            if let Some(&i) = b.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            let mask = subset::from_indices(b.iter().copied());
            if subset::len(mask) != b.len() {
                return Err(Error::InvalidPartition("repeated element in a block"));
            }
            masks.push(mask);
        }
        Self::new(n, masks)
    }

    /// The one-block partition `([n])`, the identity of the monoid.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, alloc::vec![subset::full(n)])
    }

    /// The chamber `({τ(1)}, .., {τ(n)})` for a permutation given zero-based.
    pub fn chamber(order: &[usize]) -> Result<Self> {
        Self::new(
            order.len(),
            order.iter().map(|&i| subset::singleton(i)).collect(),
        )
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn is_chamber(&self) -> bool {
        self.blocks.iter().all(|b| subset::len(*b) == 1)
    }

    fn check_ground(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    /// `F * G = (F_1 ∩ G_1, .., F_1 ∩ G_r, F_2 ∩ G_1, .., F_l ∩ G_r)` with
    /// empty intersections dropped.
    pub fn product(&self, other: &OrderedSetPartition) -> Result<OrderedSetPartition> {
        self.check_ground(other.n)?;
        let blocks = self
            .blocks
            .iter()
            .flat_map(|f| other.blocks.iter().map(move |g| f & g))
            .filter(|b| *b != 0)
            .collect();
        Ok(OrderedSetPartition { n: self.n, blocks })
    }

    /// `I ∘ F`: the right-most non-empty intersection of `set` with a block,
    /// or the empty set when `set` is empty.
    pub fn act_subset(&self, set: u64) -> u64 {
        self.blocks
            .iter()
            .rev()
            .map(|b| set & b)
            .find(|x| *x != 0)
            .unwrap_or(0)
    }

    /// Applies [`act_subset`](Self::act_subset) to every column of `s`.
    pub fn act_matrix(&self, s: &BoolMatrix) -> Result<BoolMatrix> {
        self.check_ground(s.rows())?;
        let columns: Vec<u64> = s
            .column_masks()
            .into_iter()
            .map(|c| self.act_subset(c))
            .collect();
        BoolMatrix::from_column_masks(s.rows(), &columns)
    }
}

/// Free-function form of [`OrderedSetPartition::act_subset`].
pub fn act_subset(set: u64, f: &OrderedSetPartition) -> u64 {
    f.act_subset(set)
}

/// Free-function form of [`OrderedSetPartition::act_matrix`].
pub fn act_matrix(s: &BoolMatrix, f: &OrderedSetPartition) -> Result<BoolMatrix> {
    f.act_matrix(s)
}

/// Text form `({1,3}|{2})`, one-based.
impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write_set(f, *b)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All ordered set partitions of `[n]`, `n <= DEFAULT_ENUMERATION_CAP`.
pub fn enumerate(n: usize) -> Result<Vec<OrderedSetPartition>> {
    enumerate_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// All ordered set partitions of `[n]`, ordered by number of blocks and then
/// lexicographically by the blocks' sorted element lists.
pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<OrderedSetPartition>> {
    subset::check_dim(n)?;
    if n > cap {
        return Err(Error::CapExceeded {
            what: "ordered set partition ground set",
            size: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut labels = alloc::vec![0usize; n];
    for l in 1..=n {
        surjections(&mut labels, 0, l, &mut out);
    }
    let mut keyed: Vec<(Vec<Vec<usize>>, OrderedSetPartition)> = out
        .into_iter()
        .map(|p| {
            (
                p.blocks
                    .iter()
                    .map(|b| subset::elements(*b).collect())
                    .collect(),
                p,
            )
        })
        .collect();
    keyed.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

fn surjections(labels: &mut [usize], pos: usize, l: usize, out: &mut Vec<OrderedSetPartition>) {
    let n = labels.len();
    if pos == n {
        let mut blocks = alloc::vec![0u64; l];
        for (i, &b) in labels.iter().enumerate() {
            blocks[b] |= subset::singleton(i);
        }
        if blocks.iter().all(|b| *b != 0) {
            out.push(OrderedSetPartition { n, blocks });
        }
        return;
    }
    for b in 0..l {
        labels[pos] = b;
        surjections(labels, pos + 1, l, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;

    fn osp(n: usize, blocks: &[&[usize]]) -> OrderedSetPartition {
        let zero: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| b.iter().map(|i| i - 1).collect())
            .collect();
        let refs: Vec<&[usize]> = zero.iter().map(|b| b.as_slice()).collect();
        OrderedSetPartition::from_blocks(n, &refs).unwrap()
    }

    fn ordered_bell(n: usize) -> usize {
        // a(n) = sum_k C(n,k) a(n-k), a(0) = 1
        let mut a = vec![1usize];
        for m in 1..=n {
            let mut binom = 1usize;
            let mut s = 0;
            for k in 1..=m {
                binom = binom * (m - k + 1) / k;
                s += binom * a[m - k];
            }
            a.push(s);
        }
        a[n]
    }

    #[test]
    fn rejects_malformed_partitions() {
        assert!(OrderedSetPartition::new(3, vec![0b011, 0]).is_err());
        assert!(OrderedSetPartition::new(3, vec![0b011, 0b110]).is_err());
        assert!(OrderedSetPartition::new(3, vec![0b011]).is_err());
        assert!(OrderedSetPartition::new(2, vec![0b111]).is_err());
    }

    #[test]
    fn product_examples() {
        let id = OrderedSetPartition::identity(3).unwrap();
        for g in enumerate(3).unwrap() {
            assert_eq!(id.product(&g).unwrap(), g);
            let c = osp(3, &[&[1], &[2], &[3]]);
            assert_eq!(c.product(&g).unwrap(), c);
        }
        let f = osp(4, &[&[1, 3, 4], &[2]]);
        let g = osp(4, &[&[2, 4], &[1, 3]]);
        assert_eq!(f.product(&g).unwrap(), osp(4, &[&[4], &[1, 3], &[2]]));
        assert!(f.product(&id).is_err());
    }

    #[test]
    fn act_subset_examples() {
        for f in enumerate(3).unwrap() {
            assert_eq!(f.act_subset(0), 0);
        }
        let id = OrderedSetPartition::identity(4).unwrap();
        for set in 0..16 {
            assert_eq!(id.act_subset(set), set);
        }
        let f = osp(3, &[&[3], &[2], &[1]]);
        assert_eq!(f.act_subset(0b101), 0b001);
    }

    #[test]
    fn act_matrix_examples() {
        let h = BoolMatrix::from_columns(3, &[&[1], &[0, 1], &[0], &[0, 2]]).unwrap();
        let e = BoolMatrix::from_columns(3, &[&[1], &[0], &[0], &[0]]).unwrap();
        let id = OrderedSetPartition::identity(3).unwrap();
        assert_eq!(id.act_matrix(&h).unwrap(), h);
        let z = BoolMatrix::zeros(3, 4).unwrap();
        for f in enumerate(3).unwrap() {
            assert_eq!(f.act_matrix(&z).unwrap(), z);
            assert!(f.act_matrix(&h).unwrap().leq(&h).unwrap());
        }
        assert_eq!(osp(3, &[&[3], &[2], &[1]]).act_matrix(&h).unwrap(), e);
        assert!(OrderedSetPartition::identity(2)
            .unwrap()
            .act_matrix(&h)
            .is_err());
    }

    #[test]
    fn enumerate_examples() {
        let p1 = enumerate(1).unwrap();
        assert_eq!(p1.len(), 1);
        assert_eq!(p1[0].to_string(), "({1})");
        let p2: Vec<_> = enumerate(2)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(p2, ["({1,2})", "({1}|{2})", "({2}|{1})"]);
        assert_eq!(enumerate(3).unwrap().len(), 13);
        for n in 1..=6 {
            let all = enumerate(n).unwrap();
            assert_eq!(all.len(), ordered_bell(n));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert!(enumerate(7).is_err());
        assert_eq!(enumerate_with_cap(7, 7).unwrap().len(), 47293);
    }

    #[test]
    fn is_chamber_examples() {
        assert!(osp(3, &[&[1], &[2], &[3]]).is_chamber());
        assert!(!OrderedSetPartition::identity(3).unwrap().is_chamber());
        assert!(!osp(7, &[&[1, 3, 4], &[6], &[2, 7], &[5]]).is_chamber());
        assert_eq!(
            format!("{}", osp(7, &[&[1, 3, 4], &[6], &[2, 7], &[5]])),
            "({1,3,4}|{6}|{2,7}|{5})"
        );
    }

    #[test]
    fn left_regular_band_laws_up_to_4() {
        for n in 1..=4 {
            let all = enumerate(n).unwrap();
            let id = OrderedSetPartition::identity(n).unwrap();
            for f in &all {
                assert_eq!(f.product(f).unwrap(), *f);
                assert_eq!(f.product(&id).unwrap(), *f);
                assert_eq!(id.product(f).unwrap(), *f);
                for g in &all {
                    let fg = f.product(g).unwrap();
                    assert_eq!(fg.product(f).unwrap(), fg);
                    if f.is_chamber() {
                        assert_eq!(fg, *f);
                    }
                    for h in &all {
                        assert_eq!(
                            fg.product(h).unwrap(),
                            f.product(&g.product(h).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn action_laws_up_to_4() {
        for n in 1..=4 {
            let all = enumerate(n).unwrap();
            for f in &all {
                for set in 0..1u64 << n {
                    let fs = f.act_subset(set);
                    assert!(subset::is_subset(fs, set));
                    for g in &all {
                        let lhs = f.product(g).unwrap().act_subset(set);
                        assert_eq!(lhs, g.act_subset(fs));
                    }
                    // I ⊆ J: either I∘F ⊆ J∘F or they are disjoint
                    let mut sub = set;
                    loop {
                        let a = f.act_subset(sub);
                        let b = fs;
                        assert!(subset::is_subset(a, b) || a & b == 0);
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & set;
                    }
                }
            }
        }
    }
}
