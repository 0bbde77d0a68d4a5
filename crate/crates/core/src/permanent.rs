//! Max-plus permanents and the permanent structure of an arrangement.
//!
//! A partial bijection `σ` with domain `J` and image `I` is
//! permanent-attaining when `Σ_{j∈J} M_{σ(j),j}` is maximal among all
//! bijections `J -> I`. Optima are found by an exact branch-and-bound scan
//! over permutations, which is fine at the sizes this crate targets.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::boolmat::PartialBijection;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset;
use crate::tropical::{Arrangement, Point};

/// Largest assignment size scanned exhaustively (8! = 40320 permutations).
pub const PERMANENT_SIZE_CAP: usize = 8;

/// Optimum of a `k x k` assignment problem and every permutation attaining
/// it, each given as `perm[c] = r` (column `c` is matched to row `r`).
struct Assignments {
    value: Scalar,
    optima: Vec<Vec<usize>>,
}

fn solve_assignment<'a>(k: usize, weight: impl Fn(usize, usize) -> &'a Scalar) -> Assignments {
    // bound[c] = sum of column maxima over columns c..k
    let mut bound = vec![Scalar::zero(); k + 1];
    for c in (0..k).rev() {
        let best = (0..k).map(|r| weight(r, c)).max().expect("k >= 1");
        bound[c] = best + &bound[c + 1];
    }

    struct Search<'w, F> {
        k: usize,
        weight: &'w F,
        bound: &'w [Scalar],
        perm: Vec<usize>,
        used: u64,
        best: Option<Scalar>,
        optima: Vec<Vec<usize>>,
    }

    impl<'a, F: Fn(usize, usize) -> &'a Scalar> Search<'_, F> {
        fn run(&mut self, c: usize, partial: Scalar) {
            if let Some(best) = &self.best {
                if &partial + &self.bound[c] < *best {
                    return;
                }
            }
            if c == self.k {
                match &self.best {
                    Some(best) if partial < *best => {}
                    Some(best) if partial == *best => self.optima.push(self.perm.clone()),
                    _ => {
                        self.best = Some(partial);
                        self.optima.clear();
                        self.optima.push(self.perm.clone());
                    }
                }
                return;
            }
            for r in 0..self.k {
                if subset::contains(self.used, r) {
                    continue;
                }
                self.used |= subset::singleton(r);
                self.perm.push(r);
                let next = &partial + (self.weight)(r, c);
                self.run(c + 1, next);
                self.perm.pop();
                self.used &= !subset::singleton(r);
            }
        }
    }

    let mut search = Search {
        k,
        weight: &weight,
        bound: &bound,
        perm: Vec::with_capacity(k),
        used: 0,
        best: None,
        optima: Vec::new(),
    };
    search.run(0, Scalar::zero());
    Assignments {
        value: search.best.expect("at least one permutation"),
        optima: search.optima,
    }
}

fn check_size(k: usize) -> Result<()> {
    if k > PERMANENT_SIZE_CAP {
        return Err(Error::CapExceeded {
            what: "permanent",
            size: k,
            cap: PERMANENT_SIZE_CAP,
        });
    }
    Ok(())
}

/// `perm(X) = max_τ Σ_j X_{τ(j),j}` for a square matrix given by rows.
pub fn tropical_permanent(rows: &[Vec<Scalar>]) -> Result<Scalar> {
    let k = rows.len();
    if k == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    if let Some(r) = rows.iter().find(|r| r.len() != k) {
        return Err(Error::NotSquare {
            rows: k,
            cols: r.len(),
        });
    }
    check_size(k)?;
    Ok(solve_assignment(k, |r, c| &rows[r][c]).value)
}

impl Arrangement {
    /// `Σ_{j∈J} M_{σ(j),j}`.
    pub fn bijection_weight(&self, sigma: &PartialBijection) -> Scalar {
        sigma.pairs().iter().map(|&(i, j)| self.get(i, j)).sum()
    }

    fn check_bijection(&self, sigma: &PartialBijection) -> Result<()> {
        if sigma.rows() != self.rows() || sigma.cols() != self.cols() {
            return Err(Error::ShapeMismatch {
                expected_rows: self.rows(),
                expected_cols: self.cols(),
                rows: sigma.rows(),
                cols: sigma.cols(),
            });
        }
        Ok(())
    }

    fn assignments(&self, rows: u64, cols: u64) -> Result<(Vec<usize>, Vec<usize>, Assignments)> {
        if !subset::is_subset(rows, subset::full(self.rows()))
            || !subset::is_subset(cols, subset::full(self.cols()))
        {
            return Err(Error::IndexOutOfRange {
                index: 64,
                len: self.rows().max(self.cols()),
            });
        }
        let (k_rows, k_cols) = (subset::len(rows), subset::len(cols));
        if k_rows != k_cols {
            return Err(Error::UnequalSubsets {
                rows: k_rows,
                cols: k_cols,
            });
        }
        check_size(k_rows)?;
        let r: Vec<usize> = subset::elements(rows).collect();
        let c: Vec<usize> = subset::elements(cols).collect();
        let a = solve_assignment(r.len(), |a, b| self.get(r[a], c[b]));
        Ok((r, c, a))
    }

    /// Whether `σ` attains the max-plus permanent of its `I x J` submatrix.
    pub fn is_permanent_attaining(&self, sigma: &PartialBijection) -> Result<bool> {
        self.check_bijection(sigma)?;
        if sigma.is_empty() {
            return Ok(true);
        }
        let (_, _, a) = self.assignments(sigma.image(), sigma.domain())?;
        Ok(self.bijection_weight(sigma) == a.value)
    }

    /// The max-plus permanent of the submatrix on `rows x cols`.
    pub fn submatrix_permanent(&self, rows: u64, cols: u64) -> Result<Scalar> {
        if rows == 0 && cols == 0 {
            return Ok(Scalar::zero());
        }
        Ok(self.assignments(rows, cols)?.2.value)
    }

    /// Every bijection `cols -> rows` attaining the permanent of that
    /// submatrix, in lexicographic order.
    pub fn optimal_bijections(&self, rows: u64, cols: u64) -> Result<Vec<PartialBijection>> {
        if rows == 0 && cols == 0 {
            return Ok(vec![PartialBijection::empty(self.rows(), self.cols())?]);
        }
        let (r, c, a) = self.assignments(rows, cols)?;
        let mut out: Vec<PartialBijection> = a
            .optima
            .into_iter()
            .map(|perm| {
                let pairs = perm
                    .iter()
                    .enumerate()
                    .map(|(b, &a)| (r[a], c[b]))
                    .collect();
                PartialBijection::new(self.rows(), self.cols(), pairs).expect("perm is injective")
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// A point of the max-plus column space satisfying `σ`, built from a
    /// satisfying point `x` as `⊕_{j∈J} ⟨X_{*j} | x|_I⟩ ⊗ M_{*j}` where `X`
    /// is the `I x J` submatrix. `None` when `σ` is not satisfiable.
    pub fn column_space_witness(&self, sigma: &PartialBijection) -> Result<Option<Point>> {
        self.check_bijection(sigma)?;
        if sigma.is_empty() {
            return Ok(Some(self.column(0)));
        }
        let Some(x) = self.witness(&sigma.to_matrix())? else {
            return Ok(None);
        };
        let image: Vec<usize> = subset::elements(sigma.image()).collect();
        let coeffs: Vec<(usize, Scalar)> = subset::elements(sigma.domain())
            .map(|j| {
                let alpha = image
                    .iter()
                    .map(|&t| &x[t] - self.get(t, j))
                    .min()
                    .expect("non-empty image");
                (j, alpha)
            })
            .collect();
        Ok(Some(
            self.max_plus_combination(coeffs.iter().map(|(j, a)| (*j, a))),
        ))
    }
}

type OptimaCache = spin::RwLock<BTreeMap<(u64, u64), Arc<[PartialBijection]>>>;

/// The permanent-attaining partial bijections of an arrangement, up to a
/// size bound, with argmax sets cached per `(I, J)`.
pub struct PermanentStructure {
    arrangement: Arrangement,
    k_max: usize,
    cache: OptimaCache,
}

impl PermanentStructure {
    pub fn new(arrangement: Arrangement, k_max: usize) -> Result<Self> {
        let limit = arrangement.rows().min(arrangement.cols());
        if k_max == 0 || k_max > limit {
            return Err(Error::IndexOutOfRange {
                index: k_max,
                len: limit + 1,
            });
        }
        check_size(k_max)?;
        Ok(PermanentStructure {
            arrangement,
            k_max,
            cache: spin::RwLock::new(BTreeMap::new()),
        })
    }

    /// Covers every size up to `min(n, d)`.
    pub fn full(arrangement: Arrangement) -> Result<Self> {
        let k = arrangement.rows().min(arrangement.cols());
        Self::new(arrangement, k)
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// The argmax set for `rows x cols`, computed at most once per pair
    /// from the caller's point of view.
    pub fn optimal(&self, rows: u64, cols: u64) -> Result<Arc<[PartialBijection]>> {
        if let Some(hit) = self.cache.read().get(&(rows, cols)) {
            return Ok(hit.clone());
        }
        let k = subset::len(rows);
        if k > self.k_max {
            return Err(Error::CapExceeded {
                what: "permanent structure query",
                size: k,
                cap: self.k_max,
            });
        }
        let fresh: Arc<[PartialBijection]> =
            self.arrangement.optimal_bijections(rows, cols)?.into();
        let mut cache = self.cache.write();
        Ok(cache.entry((rows, cols)).or_insert(fresh).clone())
    }

    pub fn is_attaining(&self, sigma: &PartialBijection) -> Result<bool> {
        if sigma.is_empty() {
            return Ok(true);
        }
        let optima = self.optimal(sigma.image(), sigma.domain())?;
        Ok(optima.binary_search(sigma).is_ok())
    }

    /// Every permanent-attaining partial bijection of size at most `k_max`,
    /// the empty one included.
    pub fn bijections(&self) -> Result<Vec<PartialBijection>> {
        let (n, d) = (self.arrangement.rows(), self.arrangement.cols());
        let mut out = vec![PartialBijection::empty(n, d)?];
        for k in 1..=self.k_max {
            for rows in subsets_of_size(n, k) {
                for cols in subsets_of_size(d, k) {
                    out.extend(self.optimal(rows, cols)?.iter().cloned());
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

impl core::fmt::Debug for PermanentStructure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PermanentStructure")
            .field("arrangement", &self.arrangement)
            .field("k_max", &self.k_max)
            .finish_non_exhaustive()
    }
}

/// Free-function form of [`PermanentStructure::new`].
pub fn permanent_structure(arrangement: &Arrangement, k_max: usize) -> Result<PermanentStructure> {
    PermanentStructure::new(arrangement.clone(), k_max)
}

/// All `k`-element subsets of `[n]`, in increasing numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    // Gosper's hack
    let limit = subset::full(n);
    let mut next = if k == 0 {
        Some(0)
    } else if k <= n {
        Some(subset::full(k))
    } else {
        None
    };
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let candidate = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && candidate <= limit && subset::is_subset(candidate, limit))
                .then_some(candidate)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolmat::BoolMatrix;
    use crate::tropical::tests::{arrangement_strategy, example};
    use proptest::prelude::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    /// Brute force over all `k!` permutations (Heap's algorithm).
    fn brute_force(rows: &[Vec<Scalar>]) -> (Scalar, Vec<Vec<usize>>) {
        let k = rows.len();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut all = vec![perm.clone()];
        let mut c = vec![0usize; k];
        let mut i = 0;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                all.push(perm.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        let value = |p: &Vec<usize>| -> Scalar {
            p.iter().enumerate().map(|(col, &r)| &rows[r][col]).sum()
        };
        let best = all.iter().map(value).max().unwrap();
        let mut argmax: Vec<Vec<usize>> = all.into_iter().filter(|p| value(p) == best).collect();
        argmax.sort();
        (best, argmax)
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(tropical_permanent(&[vec![s(7)]]).unwrap(), s(7));
        let zeros = vec![vec![s(0); 3]; 3];
        assert_eq!(tropical_permanent(&zeros).unwrap(), s(0));
        let x = vec![vec![s(-8), s(10)], vec![s(10), s(10)]];
        assert_eq!(tropical_permanent(&x).unwrap(), s(20));
        assert!(tropical_permanent(&[vec![s(1), s(2)]]).is_err());
        assert!(tropical_permanent(&[]).is_err());
        assert!(tropical_permanent(&vec![vec![s(0); 9]; 9]).is_err());
    }

    #[test]
    fn attaining_examples() {
        let m = example();
        assert!(m
            .is_permanent_attaining(&PartialBijection::empty(3, 4).unwrap())
            .unwrap());
        for i in 0..3 {
            for j in 0..4 {
                let single = PartialBijection::new(3, 4, vec![(i, j)]).unwrap();
                assert!(m.is_permanent_attaining(&single).unwrap());
            }
        }
        let diag = PartialBijection::new(3, 4, vec![(0, 0), (1, 1)]).unwrap();
        let swap = PartialBijection::new(3, 4, vec![(1, 0), (0, 1)]).unwrap();
        assert!(!m.is_permanent_attaining(&diag).unwrap());
        assert!(m.is_permanent_attaining(&swap).unwrap());
    }

    #[test]
    fn optimal_bijection_examples() {
        let zero = Arrangement::from_integers(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(zero.optimal_bijections(0b111, 0b111).unwrap().len(), 6);
        let m = example();
        let got = m.optimal_bijections(0b011, 0b0011).unwrap();
        assert_eq!(
            got,
            vec![PartialBijection::new(3, 4, vec![(1, 0), (0, 1)]).unwrap()]
        );
        assert_eq!(m.submatrix_permanent(0b011, 0b0011).unwrap(), s(20));
        let one = m.optimal_bijections(0b100, 0b1000).unwrap();
        assert_eq!(
            one,
            vec![PartialBijection::new(3, 4, vec![(2, 3)]).unwrap()]
        );
        assert!(matches!(
            m.optimal_bijections(0b011, 0b1),
            Err(Error::UnequalSubsets { .. })
        ));
    }

    #[test]
    fn structure_examples() {
        let m = example();
        let p1 = permanent_structure(&m, 1).unwrap();
        assert_eq!(p1.bijections().unwrap().len(), 3 * 4 + 1);
        let zero = Arrangement::from_integers(&[&[0, 0], &[0, 0]]).unwrap();
        let pz = permanent_structure(&zero, 2).unwrap();
        let all: Vec<_> = BoolMatrix::ones(2, 2)
            .unwrap()
            .contained_partial_bijections()
            .collect();
        let mut all_sorted = all.clone();
        all_sorted.sort();
        assert_eq!(pz.bijections().unwrap(), all_sorted);
        assert!(permanent_structure(&m, 0).is_err());
        assert!(permanent_structure(&m, 4).is_err());
        let full = PermanentStructure::full(m.clone()).unwrap();
        assert_eq!(full.k_max(), 3);
        // repeated queries return the very same cached slice
        let a = full.optimal(0b011, 0b0011).unwrap();
        let b = full.optimal(0b011, 0b0011).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn structure_is_downward_closed_on_example() {
        let p = PermanentStructure::full(example()).unwrap();
        for sigma in p.bijections().unwrap() {
            for drop in 0..sigma.len() {
                let mut pairs = sigma.pairs().to_vec();
                pairs.remove(drop);
                let tau = PartialBijection::new(3, 4, pairs).unwrap();
                assert!(p.is_attaining(&tau).unwrap());
            }
        }
    }

    #[test]
    fn subsets_of_size_enumerates_binomials() {
        for n in 1..=7 {
            for k in 0..=n {
                let all: Vec<u64> = subsets_of_size(n, k).collect();
                let want: Vec<u64> = (0u64..1 << n).filter(|m| subset::len(*m) == k).collect();
                assert_eq!(all, want, "n={n} k={k}");
            }
            assert_eq!(subsets_of_size(n, n + 1).count(), 0);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn branch_and_bound_matches_brute_force(k in 1usize..=5, seed in proptest::collection::vec(-3i64..=3, 25)) {
            let rows: Vec<Vec<Scalar>> = (0..k).map(|r| (0..k).map(|c| s(seed[r * 5 + c])).collect()).collect();
            let (value, argmax) = brute_force(&rows);
            prop_assert_eq!(tropical_permanent(&rows).unwrap(), value.clone());
            let mut found = solve_assignment(k, |r, c| &rows[r][c]).optima;
            found.sort();
            prop_assert_eq!(found, argmax);
        }

        #[test]
        fn downward_closed_up_to_5x5(m in arrangement_strategy(5, 5)) {
            let p = PermanentStructure::full(m).unwrap();
            for sigma in p.bijections().unwrap() {
                prop_assert!(p.arrangement().is_permanent_attaining(&sigma).unwrap());
                for drop in 0..sigma.len() {
                    let mut pairs = sigma.pairs().to_vec();
                    pairs.remove(drop);
                    prop_assert!(p.is_attaining(&PartialBijection::new(5, 5, pairs).unwrap()).unwrap());
                }
            }
        }

        #[test]
        fn attaining_iff_satisfiable_iff_column_space_witness(m in arrangement_strategy(3, 4)) {
            for sigma in BoolMatrix::ones(3, 4).unwrap().contained_partial_bijections() {
                let attaining = m.is_permanent_attaining(&sigma).unwrap();
                let satisfiable = m.is_satisfiable(&sigma.to_matrix()).unwrap();
                let in_span = match m.column_space_witness(&sigma).unwrap() {
                    Some(y) => m.in_column_space(&y).unwrap()
                        && sigma.to_matrix().leq(&m.type_of(&y).unwrap()).unwrap(),
                    None => false,
                };
                prop_assert_eq!(attaining, satisfiable, "{}", sigma);
                prop_assert_eq!(attaining, in_span, "{}", sigma);
            }
        }

        #[test]
        fn optimal_values_equal_the_permanent(m in arrangement_strategy(4, 4), rows in 1u64..16, cols in 1u64..16) {
            prop_assume!(subset::len(rows) == subset::len(cols));
            let value = m.submatrix_permanent(rows, cols).unwrap();
            for sigma in m.optimal_bijections(rows, cols).unwrap() {
                prop_assert_eq!(m.bijection_weight(&sigma), value.clone());
            }
        }
    }
}
