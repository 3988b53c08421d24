use crate::automata::{
    is_empty, is_safety_language, product_combine, Acceptance, Alphabet, BoolOp, Letter,
    OmegaAutomaton, StateId,
};
use crate::error::{Error, Result};

/// Finite union of cylinders, kept as the included prefixes of a pruned
/// prefix tree.
#[derive(Clone, Debug)]
pub struct ClopenSet {
    alphabet: Alphabet,
    cylinders: Vec<Vec<Letter>>,
}

impl ClopenSet {
    pub fn cylinders(&self) -> &[Vec<Letter>] {
        &self.cylinders
    }

    /// Safety automaton of the union: a prefix trie whose included leaves
    /// jump to an accept-all state.
    pub fn to_automaton(&self) -> OmegaAutomaton {
        let k = self.alphabet.size();
        // 0 = accept-all, 1 = reject-all, then trie nodes
        let mut delta: Vec<Vec<StateId>> = vec![vec![0; k], vec![1; k]];
        let mut prios: Vec<usize> = vec![0, 1];
        let root = if self.cylinders.iter().any(|c| c.is_empty()) {
            0
        } else if self.cylinders.is_empty() {
            1
        } else {
            let root = delta.len();
            delta.push(vec![1; k]);
            prios.push(1);
            for cyl in &self.cylinders {
                let mut node = root;
                for (i, &a) in cyl.iter().enumerate() {
                    let last = i + 1 == cyl.len();
                    let target = delta[node][a];
                    if last {
                        delta[node][a] = 0;
                    } else if target == 1 {
                        let fresh = delta.len();
                        delta.push(vec![1; k]);
                        prios.push(1);
                        delta[node][a] = fresh;
                        node = fresh;
                    } else {
                        node = target;
                    }
                }
            }
            root
        };
        OmegaAutomaton::new(self.alphabet, root, delta, Acceptance::Parity(prios)).unwrap()
    }
}

const DEFAULT_DEPTH_CAP: usize = 20;

/// Clopen separator between two disjoint closed sets: `A` inside, `B`
/// outside, found by pruning the prefix tree at the first depth where each
/// branch has lost one of the two residuals. Compactness bounds the search;
/// the depth cap guards against malformed inputs.
pub fn separate_closed(
    a: &OmegaAutomaton,
    b: &OmegaAutomaton,
) -> Result<(ClopenSet, OmegaAutomaton)> {
    separate_closed_with_cap(a, b, DEFAULT_DEPTH_CAP)
}

pub fn separate_closed_with_cap(
    a: &OmegaAutomaton,
    b: &OmegaAutomaton,
    cap: usize,
) -> Result<(ClopenSet, OmegaAutomaton)> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch("separate_closed".into()));
    }
    if !is_safety_language(a)? || !is_safety_language(b)? {
        return Err(Error::NotClosed);
    }
    if !is_empty(&product_combine(a, b, BoolOp::And)?) {
        return Err(Error::NotDisjoint);
    }

    let live = |aut: &OmegaAutomaton| -> Vec<bool> {
        (0..aut.state_count())
            .map(|s| !is_empty(&aut.rerooted(s)))
            .collect()
    };
    let live_a = live(a);
    let live_b = live(b);

    let mut cylinders: Vec<Vec<Letter>> = Vec::new();
    // frontier of prefixes whose cylinder still meets both sets
    let mut frontier: Vec<(StateId, StateId, Vec<Letter>)> = Vec::new();
    let push = |sa: StateId,
                sb: StateId,
                word: Vec<Letter>,
                cylinders: &mut Vec<Vec<Letter>>,
                frontier: &mut Vec<(StateId, StateId, Vec<Letter>)>| {
        match (live_a[sa], live_b[sb]) {
            (false, _) => {}                       // cylinder misses A: exclude
            (true, false) => cylinders.push(word), // cylinder misses B: include whole
            (true, true) => frontier.push((sa, sb, word)),
        }
    };
    push(
        a.initial(),
        b.initial(),
        Vec::new(),
        &mut cylinders,
        &mut frontier,
    );
    let mut depth = 0usize;
    while !frontier.is_empty() {
        if depth >= cap {
            return Err(Error::DepthExceeded(cap));
        }
        depth += 1;
        let mut next = Vec::new();
        for (sa, sb, word) in frontier {
            for x in a.alphabet().letters() {
                let mut w = word.clone();
                w.push(x);
                push(a.step(sa, x), b.step(sb, x), w, &mut cylinders, &mut next);
            }
        }
        frontier = next;
    }

    let clopen = ClopenSet {
        alphabet: a.alphabet(),
        cylinders,
    };
    let automaton = clopen.to_automaton();
    // verified contract: A inside, B outside
    if !is_empty(&product_combine(a, &automaton, BoolOp::Minus)?) {
        return Err(Error::NotDisjoint);
    }
    if !is_empty(&product_combine(b, &automaton, BoolOp::And)?) {
        return Err(Error::NotDisjoint);
    }
    Ok((clopen, automaton))
}
