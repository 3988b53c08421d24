//! Offline stress sweep: two-pipeline agreement on many random functions.
//! Forward-biased transition tables produce deep component chains, which
//! drive the rank and sided-type machinery into the interesting regions.

use std::collections::HashMap;

use rand::Rng;
use wadgelab::automata::{Acceptance, Alphabet, OmegaAutomaton};
use wadgelab::bourgain::{analyze, decide_m_by_rank};
use wadgelab::rational::Rat;
use wadgelab::realfun::{m_reducible, FunctionAutomaton};
use wadgelab::sampling;

fn layered_function(rng: &mut rand_chacha::ChaCha8Rng, ab: Alphabet) -> FunctionAutomaton {
    let pool = [Rat::zero(), Rat::new(1, 3), Rat::new(1, 2), Rat::one()];
    let n = rng.gen_range(2..=7usize);
    let k = ab.size();
    // mostly stay or move forward; occasional back edges
    let delta: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            (0..k)
                .map(|_| {
                    let roll: f64 = rng.gen();
                    if roll < 0.5 {
                        s
                    } else if roll < 0.9 {
                        (s + rng.gen_range(1..=2)).min(n - 1)
                    } else {
                        s.saturating_sub(1)
                    }
                })
                .collect()
        })
        .collect();
    let shell = OmegaAutomaton::new(ab, 0, delta.clone(), Acceptance::Parity(vec![0; n])).unwrap();
    let scc = shell.scc_info();
    let comp_out: Vec<_> = (0..scc.count())
        .map(|_| pool[rng.gen_range(0..pool.len())])
        .collect();
    let outputs = (0..n).map(|s| comp_out[scc.comp_of[s]]).collect();
    let a = OmegaAutomaton::new(ab, 0, delta, Acceptance::WeakOutput(outputs)).unwrap();
    FunctionAutomaton::new(a).unwrap()
}

fn main() {
    let ab = Alphabet::new(2).unwrap();
    let mut histogram: HashMap<(usize, &'static str), usize> = HashMap::new();
    let mut total = 0usize;
    for seed in 0..8u64 {
        let mut rng = sampling::rng(seed * 7919 + 1);
        let funs: Vec<_> = (0..16).map(|_| layered_function(&mut rng, ab)).collect();
        for f in &funs {
            let a = analyze(f).unwrap();
            *histogram.entry((a.alpha, a.sided.name())).or_default() += 1;
        }
        for f in &funs {
            for g in &funs {
                let games = m_reducible(f, g).unwrap().reducible;
                let ranks = decide_m_by_rank(f, g).unwrap();
                assert_eq!(games, ranks, "DISAGREEMENT at seed {seed}");
                total += 1;
            }
        }
        println!("seed {seed}: 256 ordered pairs agree");
    }
    let mut hist: Vec<_> = histogram.into_iter().collect();
    hist.sort();
    println!("total {total} ordered pairs, classification histogram:");
    for ((alpha, sided), count) in hist {
        println!("  alpha {alpha} type {sided}: {count}");
    }
}
