use serde::{Deserialize, Serialize};

use super::FunctionAutomaton;
use crate::automata::{Acceptance, OmegaAutomaton};
use crate::error::Result;
use crate::rational::Rat;
use crate::wadge::TwoBotPair;

/// Rational thresholds `low < high` cutting the range of a function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdPair {
    pub low: Rat,
    pub high: Rat,
}

impl ThresholdPair {
    pub fn new(low: Rat, high: Rat) -> Self {
        assert!(low < high, "threshold pair needs low < high");
        ThresholdPair { low, high }
    }
}

/// Parity automaton for the lower level set `{f <= t}`.
pub fn low_set(f: &FunctionAutomaton, t: Rat) -> OmegaAutomaton {
    threshold_set(f, |v| v <= t)
}

/// Parity automaton for the upper level set `{f >= t}`.
pub fn high_set(f: &FunctionAutomaton, t: Rat) -> OmegaAutomaton {
    threshold_set(f, |v| v >= t)
}

fn threshold_set(f: &FunctionAutomaton, good: impl Fn(Rat) -> bool) -> OmegaAutomaton {
    let a = f.automaton();
    let prios = a.outputs().iter().map(|&v| usize::from(!good(v))).collect();
    OmegaAutomaton::new(
        a.alphabet(),
        a.initial(),
        a.delta().to_vec(),
        Acceptance::Parity(prios),
    )
    .expect("level set automaton is well-formed")
}

/// The pair `({f <= low}, {f >= high})`; membership of a run is decided by
/// the output of its terminal component.
pub fn level_sets(f: &FunctionAutomaton, t: &ThresholdPair) -> Result<TwoBotPair> {
    TwoBotPair::new(low_set(f, t.low), high_set(f, t.high))
}

/// One representative pair per level-set class.
///
/// Level sets only change when a threshold crosses a range value, so a class
/// is a pair of the open "gaps" around the range (below the minimum, between
/// consecutive values, above the maximum), the same gap twice included. All
/// representatives sit strictly inside gaps, which also fixes the strict
/// sets `{f < high}` and `{f > low}` used by the sidedness tests.
pub fn critical_pairs(f: &FunctionAutomaton) -> Vec<ThresholdPair> {
    let vals = f.range();
    let gaps = gap_points(vals);
    let mut pairs = Vec::new();
    for i in 0..gaps.len() {
        let (lo, hi) = gaps[i];
        pairs.push(ThresholdPair::new(lo, hi));
        for &(lo2, _) in gaps.iter().skip(i + 1) {
            pairs.push(ThresholdPair::new(lo, lo2));
        }
    }
    pairs.sort_by_key(|t| (t.low, t.high));
    pairs
}

/// Two rationals strictly inside each gap of the sorted range.
fn gap_points(vals: &[Rat]) -> Vec<(Rat, Rat)> {
    assert!(!vals.is_empty(), "function with empty range");
    let k = vals.len();
    let mut gaps = Vec::with_capacity(k + 1);
    gaps.push((vals[0] - Rat::int(2), vals[0] - Rat::int(1)));
    for i in 0..k - 1 {
        let lo = vals[i] + (vals[i + 1] - vals[i]) / Rat::int(3);
        let hi = vals[i] + (vals[i + 1] - vals[i]) * Rat::new(2, 3);
        gaps.push((lo, hi));
    }
    gaps.push((vals[k - 1] + Rat::int(1), vals[k - 1] + Rat::int(2)));
    gaps
}

/// The level-pair family of a function, indexed by representative pairs.
#[derive(Clone, Debug)]
pub struct SepFunction {
    pub pairs: Vec<(ThresholdPair, TwoBotPair)>,
}

pub fn sep_function(f: &FunctionAutomaton) -> Result<SepFunction> {
    let mut pairs = Vec::new();
    for t in critical_pairs(f) {
        pairs.push((t, level_sets(f, &t)?));
    }
    Ok(SepFunction { pairs })
}
