//! Difference-constraint systems `x_to - x_from <= w` solved by Bellman-Ford
//! from a virtual source joined to every node by a zero edge.
//!
//! Strict constraints are handled by working over `Perturbed` weights
//! `w - k·ε` for an infinitesimal `ε`, ordered lexicographically. A system
//! is infeasible iff the constraint graph has a cycle that is negative in
//! that order: either a negative cycle, or a zero cycle through a strict
//! edge.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::scalar::Scalar;

pub(crate) trait Weight: Clone + Ord {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl Weight for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

/// `value + eps·ε` for a positive infinitesimal `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbed {
    pub value: Scalar,
    pub eps: i64,
}

impl Perturbed {
    pub fn weak(value: Scalar) -> Self {
        Perturbed { value, eps: 0 }
    }

    pub fn strict(value: Scalar) -> Self {
        Perturbed { value, eps: -1 }
    }
}

impl PartialOrd for Perturbed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Perturbed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value).then(self.eps.cmp(&other.eps))
    }
}

impl Weight for Perturbed {
    fn zero() -> Self {
        Perturbed::weak(Scalar::zero())
    }
    fn plus(&self, other: &Self) -> Self {
        Perturbed {
            value: &self.value + &other.value,
            eps: self.eps + other.eps,
        }
    }
}

/// Dense system over `n` variables keeping the tightest bound per ordered pair.
pub(crate) struct System<W> {
    n: usize,
    bound: Vec<Option<W>>,
}

impl<W: Weight> System<W> {
    pub fn new(n: usize) -> Self {
        System {
            n,
            bound: vec![None; n * n],
        }
    }

    /// Adds `x_to - x_from <= w`.
    pub fn add(&mut self, from: usize, to: usize, w: W) {
        if from == to {
            // x - x = 0 <= w, which only fails for a negative w; keep it
            // as a self loop so the cycle check sees it.
            if w >= W::zero() {
                return;
            }
        }
        let slot = &mut self.bound[from * self.n + to];
        match slot {
            Some(old) if *old <= w => {}
            _ => *slot = Some(w),
        }
    }

    /// Shortest-path potentials `p` with `p_to <= p_from + w` for every
    /// edge, or `None` when a negative cycle exists.
    pub fn solve(&self) -> Option<Vec<W>> {
        let n = self.n;
        let edges: Vec<(usize, usize, &W)> = self
            .bound
            .iter()
            .enumerate()
            .filter_map(|(k, w)| w.as_ref().map(|w| (k / n, k % n, w)))
            .collect();
        let mut dist = vec![W::zero(); n];
        for _ in 0..n {
            let mut changed = false;
            for &(from, to, w) in &edges {
                let cand = dist[from].plus(w);
                if cand < dist[to] {
                    dist[to] = cand;
                    changed = true;
                }
            }
            if !changed {
                return Some(dist);
            }
        }
        None
    }
}

/// Picks a concrete `ε > 0` so that `a + b·ε` satisfies every edge of
/// `system` strictly where the perturbed solution does, then evaluates it.
pub(crate) fn realize(system: &System<Perturbed>, potentials: &[Perturbed]) -> Vec<Scalar> {
    let n = system.n;
    let mut eps = Scalar::from_integer(1);
    for (k, w) in system.bound.iter().enumerate() {
        let Some(w) = w else { continue };
        let (from, to) = (k / n, k % n);
        let slack = &w.value - &(&potentials[to].value - &potentials[from].value);
        let drift = potentials[to].eps - potentials[from].eps;
        if slack.is_positive() && drift > 0 {
            let limit = slack.div(&Scalar::from_integer(drift));
            if limit < eps {
                eps = limit;
            }
        }
    }
    let eps = eps.half();
    potentials
        .iter()
        .map(|p| &p.value + &eps.mul(&Scalar::from_integer(p.eps)))
        .collect()
}
