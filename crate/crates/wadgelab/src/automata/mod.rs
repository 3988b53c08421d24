//! Deterministic omega-automata over finite alphabets.
//!
//! Automata are complete and deterministic. Parity acceptance uses the
//! min-even convention: a run is accepting iff the least priority seen
//! infinitely often is even. Weak-output automata carry a rational output
//! per state; on SCC-homogeneous automata every run's output stabilizes.

mod io;
mod ops;
mod scc;

pub use io::{automaton_from_json, automaton_to_json};
pub use ops::{
    closure, complement, constant_automaton, equivalent, find_accepting_lasso, is_empty,
    is_safety_language, minimize_safety, product_combine, BoolOp,
};
pub use scc::{tarjan_scc, SccInfo};

use crate::error::{Error, Result};
use crate::rational::Rat;

pub type StateId = usize;
pub type Letter = usize;

/// Finite alphabet `{0, .., size-1}` with at least two letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidAutomaton(format!("alphabet size {size} < 2")));
        }
        Ok(Alphabet(size))
    }

    pub fn size(&self) -> usize {
        self.0
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.0
    }
}

/// Ultimately periodic word `prefix . cycle^omega`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LassoWord {
    prefix: Vec<Letter>,
    cycle: Vec<Letter>,
}

impl LassoWord {
    pub fn new(prefix: Vec<Letter>, cycle: Vec<Letter>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidAutomaton("empty lasso cycle".into()));
        }
        Ok(LassoWord { prefix, cycle })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn fits(&self, alphabet: Alphabet) -> bool {
        self.prefix
            .iter()
            .chain(&self.cycle)
            .all(|&a| a < alphabet.size())
    }

    /// Letter at position `i` of the infinite word.
    pub fn at(&self, i: usize) -> Letter {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }
}

impl std::fmt::Display for LassoWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_word = |w: &[Letter]| w.iter().map(|a| a.to_string()).collect::<String>();
        write!(f, "{}({})^w", fmt_word(&self.prefix), fmt_word(&self.cycle))
    }
}

/// State-based acceptance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acceptance {
    /// Priority per state, min-even convention.
    Parity(Vec<usize>),
    /// Rational output per state.
    WeakOutput(Vec<Rat>),
}

/// Complete deterministic automaton over infinite words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaAutomaton {
    alphabet: Alphabet,
    initial: StateId,
    delta: Vec<Vec<StateId>>,
    acceptance: Acceptance,
}

impl OmegaAutomaton {
    pub fn new(
        alphabet: Alphabet,
        initial: StateId,
        delta: Vec<Vec<StateId>>,
        acceptance: Acceptance,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        for (s, row) in delta.iter().enumerate() {
            if row.len() != alphabet.size() {
                return Err(Error::InvalidAutomaton(format!(
                    "state {s} has {} transitions, alphabet has {} letters",
                    row.len(),
                    alphabet.size()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidAutomaton(format!(
                    "transition {s} -> {t} out of range"
                )));
            }
        }
        let acc_len = match &acceptance {
            Acceptance::Parity(p) => p.len(),
            Acceptance::WeakOutput(o) => o.len(),
        };
        if acc_len != n {
            return Err(Error::InvalidAutomaton(format!(
                "acceptance labels {acc_len} states, automaton has {n}"
            )));
        }
        Ok(OmegaAutomaton {
            alphabet,
            initial,
            delta,
            acceptance,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn step(&self, s: StateId, a: Letter) -> StateId {
        self.delta[s][a]
    }

    pub fn delta(&self) -> &[Vec<StateId>] {
        &self.delta
    }

    pub fn acceptance(&self) -> &Acceptance {
        &self.acceptance
    }

    pub fn is_parity(&self) -> bool {
        matches!(self.acceptance, Acceptance::Parity(_))
    }

    pub fn priorities(&self) -> &[usize] {
        match &self.acceptance {
            Acceptance::Parity(p) => p,
            Acceptance::WeakOutput(_) => panic!("expected parity acceptance"),
        }
    }

    pub fn outputs(&self) -> &[Rat] {
        match &self.acceptance {
            Acceptance::WeakOutput(o) => o,
            Acceptance::Parity(_) => panic!("expected weak-output acceptance"),
        }
    }

    /// State reached after reading a finite word from `from`.
    pub fn run_word(&self, from: StateId, word: &[Letter]) -> StateId {
        word.iter().fold(from, |s, &a| self.step(s, a))
    }

    /// Same automaton re-rooted at `state`.
    pub fn rerooted(&self, state: StateId) -> OmegaAutomaton {
        let mut a = self.clone();
        a.initial = state;
        a
    }

    /// States of the unique run cycle on `w`: the pairs (state, position in
    /// cycle) repeat, and the segment between repeats is what the run visits
    /// infinitely often.
    pub fn run_cycle_states(&self, w: &LassoWord) -> Result<Vec<StateId>> {
        if !w.fits(self.alphabet) {
            return Err(Error::AlphabetMismatch(format!(
                "lasso {w} over alphabet {}",
                self.alphabet.size()
            )));
        }
        let mut s = self.run_word(self.initial, w.prefix());
        let cyc = w.cycle();
        let mut seen = vec![usize::MAX; self.state_count() * cyc.len()];
        let mut trace: Vec<StateId> = Vec::new();
        let mut pos = 0usize;
        loop {
            let key = s * cyc.len() + pos;
            if seen[key] != usize::MAX {
                return Ok(trace[seen[key]..].to_vec());
            }
            seen[key] = trace.len();
            trace.push(s);
            s = self.step(s, cyc[pos]);
            pos = (pos + 1) % cyc.len();
        }
    }

    /// Parity acceptance of the unique run on `w`.
    pub fn accepts_lasso(&self, w: &LassoWord) -> Result<bool> {
        let prios = self.priorities();
        let cyc = self.run_cycle_states(w)?;
        let min = cyc.iter().map(|&s| prios[s]).min().unwrap();
        Ok(min % 2 == 0)
    }

    /// Stabilized output of the run on `w` (weak-output acceptance).
    ///
    /// Meaningful when the run cycle is output-homogeneous, which holds for
    /// every automaton passing the stability check.
    pub fn output_on_lasso(&self, w: &LassoWord) -> Result<Rat> {
        let outs = self.outputs();
        let cyc = self.run_cycle_states(w)?;
        Ok(outs[cyc[0]])
    }

    /// Strongly connected components of the transition graph.
    pub fn scc_info(&self) -> SccInfo {
        tarjan_scc(&self.delta)
    }

    /// Per-state acceptance parity if every SCC containing a cycle is
    /// priority-parity homogeneous; `None` for genuinely non-weak automata.
    pub fn weak_acceptance(&self) -> Option<Vec<bool>> {
        let prios = self.priorities();
        let scc = self.scc_info();
        for comp in scc.components() {
            if !scc.has_internal_edge(comp, &self.delta) {
                continue;
            }
            let parity = prios[comp[0]] % 2;
            if comp.iter().any(|&s| prios[s] % 2 != parity) {
                return None;
            }
        }
        Some((0..self.state_count()).map(|s| prios[s] % 2 == 0).collect())
    }
}

/// Acceptance outcome of the run on `w`: boolean for parity automata,
/// the stabilized value for weak-output automata.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LassoOutcome {
    Accepted(bool),
    Value(Rat),
}

/// Membership or output evaluation of a single ultimately periodic word.
pub fn run_lasso(a: &OmegaAutomaton, w: &LassoWord) -> Result<LassoOutcome> {
    match a.acceptance() {
        Acceptance::Parity(_) => Ok(LassoOutcome::Accepted(a.accepts_lasso(w)?)),
        Acceptance::WeakOutput(_) => Ok(LassoOutcome::Value(a.output_on_lasso(w)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_accepting() -> OmegaAutomaton {
        OmegaAutomaton::new(
            Alphabet::new(2).unwrap(),
            0,
            vec![vec![0, 0]],
            Acceptance::Parity(vec![0]),
        )
        .unwrap()
    }

    fn at_least_one_one() -> OmegaAutomaton {
        // state 0: no 1 seen (reject), state 1: some 1 seen (accept)
        OmegaAutomaton::new(
            Alphabet::new(2).unwrap(),
            0,
            vec![vec![0, 1], vec![1, 1]],
            Acceptance::Parity(vec![1, 0]),
        )
        .unwrap()
    }

    #[test]
    fn single_state_priorities_decide_everything() {
        let yes = all_accepting();
        let no = complement(&yes);
        let w = LassoWord::new(vec![1, 0], vec![1]).unwrap();
        assert!(yes.accepts_lasso(&w).unwrap());
        assert!(!no.accepts_lasso(&w).unwrap());
    }

    #[test]
    fn two_state_reachability_run() {
        let a = at_least_one_one();
        let zero_tail = LassoWord::new(vec![], vec![0]).unwrap();
        let one_then_zeros = LassoWord::new(vec![1], vec![0]).unwrap();
        assert!(!a.accepts_lasso(&zero_tail).unwrap());
        assert!(a.accepts_lasso(&one_then_zeros).unwrap());
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let a = at_least_one_one();
        let w = LassoWord::new(vec![2], vec![0]).unwrap();
        assert!(matches!(
            a.accepts_lasso(&w),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn alphabet_needs_two_letters() {
        assert!(Alphabet::new(1).is_err());
        assert!(Alphabet::new(2).is_ok());
    }

    #[test]
    fn lasso_cycle_must_be_nonempty() {
        assert!(LassoWord::new(vec![0], vec![]).is_err());
    }
}
