//! Seeded generators for test material: lasso words, small game arenas and
//! small SCC-homogeneous automata. Everything routes through one ChaCha
//! stream so a seed pins the whole suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{Acceptance, Alphabet, LassoWord, OmegaAutomaton};
use crate::games::{GameArena, GameNode, Player};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_lasso(rng: &mut ChaCha8Rng, alphabet: Alphabet, max_len: usize) -> LassoWord {
    let k = alphabet.size();
    let plen = rng.gen_range(0..=max_len);
    let clen = rng.gen_range(1..=max_len.max(1));
    let prefix = (0..plen).map(|_| rng.gen_range(0..k)).collect();
    let cycle = (0..clen).map(|_| rng.gen_range(0..k)).collect();
    LassoWord::new(prefix, cycle).unwrap()
}

pub fn random_lassos(
    seed: u64,
    alphabet: Alphabet,
    max_len: usize,
    count: usize,
) -> Vec<LassoWord> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_lasso(&mut r, alphabet, max_len))
        .collect()
}

pub fn random_arena(rng: &mut ChaCha8Rng, max_nodes: usize, max_priority: usize) -> GameArena {
    let n = rng.gen_range(1..=max_nodes);
    let nodes = (0..n)
        .map(|_| {
            let owner = if rng.gen_bool(0.5) {
                Player::I
            } else {
                Player::II
            };
            let degree = rng.gen_range(1..=3usize);
            let successors = (0..degree).map(|_| rng.gen_range(0..n)).collect();
            GameNode {
                owner,
                priority: rng.gen_range(0..=max_priority),
                successors,
            }
        })
        .collect();
    GameArena::new(nodes).expect("generated arenas have successors")
}

/// Random deterministic parity automaton with priorities constant on each
/// SCC, so every reducibility game accepts it.
pub fn random_weak_automaton(
    rng: &mut ChaCha8Rng,
    alphabet: Alphabet,
    max_states: usize,
) -> OmegaAutomaton {
    let n = rng.gen_range(1..=max_states);
    let k = alphabet.size();
    let delta: Vec<Vec<usize>> = (0..n)
        .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let shell =
        OmegaAutomaton::new(alphabet, 0, delta.clone(), Acceptance::Parity(vec![0; n])).unwrap();
    let scc = shell.scc_info();
    let comp_prio: Vec<usize> = (0..scc.count()).map(|_| rng.gen_range(0..2)).collect();
    let prios = (0..n).map(|s| comp_prio[scc.comp_of[s]]).collect();
    OmegaAutomaton::new(alphabet, 0, delta, Acceptance::Parity(prios)).unwrap()
}

/// Random stable output automaton: outputs drawn per SCC from a small
/// rational pool, so homogeneity holds by construction.
pub fn random_function(
    rng: &mut ChaCha8Rng,
    alphabet: Alphabet,
    max_states: usize,
) -> crate::realfun::FunctionAutomaton {
    use crate::rational::Rat;
    let pool = [Rat::zero(), Rat::new(1, 3), Rat::new(1, 2), Rat::one()];
    let n = rng.gen_range(1..=max_states);
    let k = alphabet.size();
    let delta: Vec<Vec<usize>> = (0..n)
        .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let shell =
        OmegaAutomaton::new(alphabet, 0, delta.clone(), Acceptance::Parity(vec![0; n])).unwrap();
    let scc = shell.scc_info();
    let comp_out: Vec<_> = (0..scc.count())
        .map(|_| pool[rng.gen_range(0..pool.len())])
        .collect();
    let outputs = (0..n).map(|s| comp_out[scc.comp_of[s]]).collect();
    let a = OmegaAutomaton::new(alphabet, 0, delta, Acceptance::WeakOutput(outputs)).unwrap();
    crate::realfun::FunctionAutomaton::new(a).expect("per-component outputs are stable")
}
