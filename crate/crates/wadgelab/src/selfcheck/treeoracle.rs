//! Independent derivative oracle for functions of the one-counter shape
//! `f(x) = values[min(#ones(x), cap)]`.
//!
//! Sets of the form `{ min(#ones, cap) in J }` are closed under the
//! derivative: intersections intersect the index sets, and the closure of
//! `S_J` is `S_{0..=max J}` because a prefix extends into `S_J` exactly when
//! its capped count is still below `max J`. The whole computation is index
//! arithmetic, with no automata products, closures or minimization involved.

use crate::rational::Rat;

/// A one-counter function: value per capped count of ones.
#[derive(Clone, Debug)]
pub struct CounterFunction {
    pub values: Vec<Rat>,
}

/// Index set over capped counts `0..values.len()`.
pub type IndexSet = Vec<bool>;

impl CounterFunction {
    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    fn level_low(&self, t: Rat) -> IndexSet {
        self.values.iter().map(|&v| v <= t).collect()
    }

    fn level_high(&self, t: Rat) -> IndexSet {
        self.values.iter().map(|&v| v >= t).collect()
    }

    /// One neighborhood-oscillation step: keep the counts of `p` from which
    /// both level sets stay reachable inside `p`.
    pub fn derivative(&self, p: &IndexSet, low: Rat, high: Rat) -> IndexSet {
        let lo = intersect(p, &self.level_low(low));
        let hi = intersect(p, &self.level_high(high));
        let in_closure = |set: &IndexSet, c: usize| match max_index(set) {
            Some(m) => c <= m,
            None => false,
        };
        (0..self.values.len())
            .map(|c| p[c] && in_closure(&lo, c) && in_closure(&hi, c))
            .collect()
    }

    /// All stages from the full space to the first empty one.
    pub fn chain(&self, low: Rat, high: Rat) -> Vec<IndexSet> {
        let mut stages = vec![vec![true; self.values.len()]];
        loop {
            let last = stages.last().unwrap();
            if last.iter().all(|&b| !b) {
                return stages;
            }
            let next = self.derivative(last, low, high);
            assert!(
                &next != last,
                "counter-set derivative must strictly shrink until empty"
            );
            stages.push(next);
        }
    }

    /// Depth-limited prefix tree of `S_J`: whether each binary word `u` with
    /// `|u| <= depth` has an extension in the set; nodes indexed heap-style.
    pub fn tree_restriction(&self, set: &IndexSet, depth: usize) -> Vec<bool> {
        let total = (1usize << (depth + 1)) - 1;
        let mut out = vec![false; total + 1];
        let max = max_index(set);
        // walk the tree tracking the capped count of ones
        let mut stack = vec![(1usize, 0usize, 0usize)];
        while let Some((node, d, count)) = stack.pop() {
            out[node] = match max {
                Some(m) => count <= m,
                None => false,
            };
            if d < depth {
                stack.push((2 * node, d + 1, count));
                stack.push((2 * node + 1, d + 1, (count + 1).min(self.cap())));
            }
        }
        out
    }
}

fn intersect(a: &IndexSet, b: &IndexSet) -> IndexSet {
    a.iter().zip(b).map(|(&x, &y)| x && y).collect()
}

fn max_index(set: &IndexSet) -> Option<usize> {
    set.iter().rposition(|&b| b)
}
