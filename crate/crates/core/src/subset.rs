//! Subsets of `{0, .., 63}` packed into a `u64`.

pub const MAX_DIM: usize = 64;

#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(set: u64, i: usize) -> bool {
    set >> i & 1 == 1
}

#[inline]
pub fn singleton(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub fn len(set: u64) -> usize {
    set.count_ones() as usize
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Elements of `set` in increasing order.
pub fn elements(set: u64) -> Elements {
    Elements(set)
}

pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> u64 {
    indices.into_iter().fold(0, |acc, i| acc | singleton(i))
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = len(self.0);
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub(crate) fn check_dim(n: usize) -> crate::Result<()> {
    if n == 0 || n > MAX_DIM {
        Err(crate::Error::UnsupportedDimension(n))
    } else {
        Ok(())
    }
}
