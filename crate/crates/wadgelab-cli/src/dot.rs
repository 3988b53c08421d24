//! DOT dumps of automata and derivative chains.

use wadgelab::automata::{Acceptance, OmegaAutomaton};
use wadgelab::bourgain::DerivativeChain;

pub fn automaton_to_dot(a: &OmegaAutomaton, graph: &str) -> String {
    let mut out = format!("digraph \"{graph}\" {{\n");
    for s in 0..a.state_count() {
        let label = match a.acceptance() {
            Acceptance::Parity(p) => format!("{s}:{}", p[s]),
            Acceptance::WeakOutput(o) => format!("{s}:{}", o[s]),
        };
        let shape = if s == a.initial() {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!("  s{s} [shape={shape}, label=\"{label}\"];\n"));
    }
    for s in 0..a.state_count() {
        for x in 0..a.alphabet().size() {
            out.push_str(&format!("  s{s} -> s{} [label=\"{x}\"];\n", a.step(s, x)));
        }
    }
    out.push_str("}\n");
    out
}

/// One digraph per stage, concatenated; stage 0 is the full space.
pub fn chain_to_dot(chain: &DerivativeChain) -> String {
    chain
        .stages
        .iter()
        .enumerate()
        .map(|(i, stage)| automaton_to_dot(stage, &format!("stage_{i}")))
        .collect()
}
