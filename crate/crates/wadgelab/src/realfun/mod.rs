//! Finite-range functions on the sequence space, represented as
//! eventually-stable output automata: every strongly connected component
//! with a cycle carries one output value, so each run's output stabilizes.

mod build;
mod level;
mod reduce;

pub use build::{
    char_fun, constant_fn, first_letter_fn, half_indicator, interleave, prefix_pair_indicator,
    staircase_flipped, staircase_fn, two_letter_three_values,
};
pub use level::{
    critical_pairs, high_set, level_sets, low_set, sep_function, SepFunction, ThresholdPair,
};
pub use reduce::{m_reducible, MRealOutcome};

use crate::automata::{Acceptance, LassoWord, OmegaAutomaton};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Verdict of the stability check.
#[derive(Clone, Debug)]
pub enum StabilityCheck {
    Ok,
    /// Two mutually reachable states with different outputs, plus a lasso
    /// whose run visits both forever.
    Violation {
        state_a: usize,
        state_b: usize,
        witness: LassoWord,
    },
}

/// Deterministic automaton with rational state outputs whose runs all
/// stabilize; a finite-rank Baire-one function on the input space.
#[derive(Clone, Debug)]
pub struct FunctionAutomaton {
    automaton: OmegaAutomaton,
    range: Vec<Rat>,
}

impl FunctionAutomaton {
    /// Validates SCC-homogeneity on construction.
    pub fn new(automaton: OmegaAutomaton) -> Result<Self> {
        if !matches!(automaton.acceptance(), Acceptance::WeakOutput(_)) {
            return Err(Error::InvalidAutomaton(
                "function automata use weak-output acceptance".into(),
            ));
        }
        match validate_stable(&automaton) {
            StabilityCheck::Ok => {}
            StabilityCheck::Violation { .. } => return Err(Error::StableViolation),
        }
        let range = attained_range(&automaton);
        Ok(FunctionAutomaton { automaton, range })
    }

    pub fn automaton(&self) -> &OmegaAutomaton {
        &self.automaton
    }

    /// Attained values, sorted ascending.
    pub fn range(&self) -> &[Rat] {
        &self.range
    }

    /// Stabilized output on an ultimately periodic point.
    pub fn eval(&self, w: &LassoWord) -> Result<Rat> {
        self.automaton.output_on_lasso(w)
    }
}

/// SCC-homogeneity check; on failure returns two differently-labeled states
/// on a common cycle and a lasso witnessing the output oscillation.
pub fn validate_stable(automaton: &OmegaAutomaton) -> StabilityCheck {
    let outs = match automaton.acceptance() {
        Acceptance::WeakOutput(o) => o,
        Acceptance::Parity(_) => return StabilityCheck::Ok,
    };
    let scc = automaton.scc_info();
    for comp in scc.components() {
        if !scc.has_internal_edge(comp, automaton.delta()) {
            continue;
        }
        let v0 = outs[comp[0]];
        let Some(&bad) = comp.iter().find(|&&s| outs[s] != v0) else {
            continue;
        };
        let witness = oscillation_lasso(automaton, comp[0], bad);
        return StabilityCheck::Violation {
            state_a: comp[0],
            state_b: bad,
            witness,
        };
    }
    StabilityCheck::Ok
}

/// Lasso visiting both states forever: reach `a`, then loop a -> b -> a.
fn oscillation_lasso(automaton: &OmegaAutomaton, a: usize, b: usize) -> LassoWord {
    let prefix = word_between(automaton, automaton.initial(), a);
    let mut cycle = word_between(automaton, a, b);
    cycle.extend(word_between(automaton, b, a));
    if cycle.is_empty() {
        cycle.push(0);
    }
    LassoWord::new(prefix, cycle).unwrap()
}

fn word_between(automaton: &OmegaAutomaton, from: usize, to: usize) -> Vec<usize> {
    let k = automaton.alphabet().size();
    let n = automaton.state_count();
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[from] = true;
    queue.push_back(from);
    while let Some(s) = queue.pop_front() {
        if s == to {
            break;
        }
        for x in 0..k {
            let t = automaton.step(s, x);
            if !seen[t] {
                seen[t] = true;
                pred[t] = Some((s, x));
                queue.push_back(t);
            }
        }
    }
    let mut letters = Vec::new();
    let mut v = to;
    while v != from {
        let (u, x) = pred[v].expect("states in one SCC are mutually reachable");
        letters.push(x);
        v = u;
    }
    letters.reverse();
    letters
}

/// Values of reachable components that can host a run forever.
fn attained_range(automaton: &OmegaAutomaton) -> Vec<Rat> {
    let outs = automaton.outputs();
    let n = automaton.state_count();
    let k = automaton.alphabet().size();
    let mut reach = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    reach[automaton.initial()] = true;
    queue.push_back(automaton.initial());
    while let Some(s) = queue.pop_front() {
        for x in 0..k {
            let t = automaton.step(s, x);
            if !reach[t] {
                reach[t] = true;
                queue.push_back(t);
            }
        }
    }
    let scc = automaton.scc_info();
    let settle = scc.settleable(automaton.delta());
    let mut vals: Vec<Rat> = (0..n)
        .filter(|&s| reach[s] && settle[scc.comp_of[s]])
        .map(|s| outs[s])
        .collect();
    vals.sort();
    vals.dedup();
    vals
}
