use std::collections::HashMap;

use super::{Acceptance, Alphabet, LassoWord, OmegaAutomaton, StateId};
use crate::error::{Error, Result};

/// Boolean combination realized by `product_combine`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    Minus,
}

/// Complement of a parity automaton: same transitions, every priority
/// shifted up by one.
pub fn complement(a: &OmegaAutomaton) -> OmegaAutomaton {
    let prios = a.priorities().iter().map(|p| p + 1).collect();
    OmegaAutomaton::new(
        a.alphabet(),
        a.initial(),
        a.delta().to_vec(),
        Acceptance::Parity(prios),
    )
    .expect("complement preserves well-formedness")
}

/// Deterministic product automaton recognizing `L(a) op L(b)`.
///
/// When both factors are parity-homogeneous per SCC the product carries one
/// priority per product SCC. Otherwise the two priority streams run through
/// an appearance-record monitor over the Streett pairs of the conjunction.
pub fn product_combine(
    a: &OmegaAutomaton,
    b: &OmegaAutomaton,
    op: BoolOp,
) -> Result<OmegaAutomaton> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "product of alphabets {} and {}",
            a.alphabet().size(),
            b.alphabet().size()
        )));
    }
    if !a.is_parity() || !b.is_parity() {
        return Err(Error::InvalidAutomaton(
            "product_combine needs parity acceptance".into(),
        ));
    }
    Ok(match op {
        BoolOp::And => and_product(a, b),
        BoolOp::Minus => and_product(a, &complement(b)),
        BoolOp::Or => complement(&and_product(&complement(a), &complement(b))),
    })
}

fn and_product(a: &OmegaAutomaton, b: &OmegaAutomaton) -> OmegaAutomaton {
    match (a.weak_acceptance(), b.weak_acceptance()) {
        (Some(wa), Some(wb)) => weak_and_product(a, b, &wa, &wb),
        _ => record_and_product(a, b),
    }
}

/// Reachable product with per-SCC priorities: a run settles in one product
/// SCC, whose projections settle in factor SCCs, so the pair of factor
/// verdicts is constant there.
fn weak_and_product(
    a: &OmegaAutomaton,
    b: &OmegaAutomaton,
    wa: &[bool],
    wb: &[bool],
) -> OmegaAutomaton {
    let k = a.alphabet().size();
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut delta: Vec<Vec<StateId>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    let intern = |s: StateId,
                  t: StateId,
                  pairs: &mut Vec<(StateId, StateId)>,
                  queue: &mut std::collections::VecDeque<StateId>,
                  ids: &mut HashMap<(StateId, StateId), StateId>| {
        *ids.entry((s, t)).or_insert_with(|| {
            pairs.push((s, t));
            queue.push_back(pairs.len() - 1);
            pairs.len() - 1
        })
    };
    intern(a.initial(), b.initial(), &mut pairs, &mut queue, &mut ids);
    while let Some(id) = queue.pop_front() {
        let (s, t) = pairs[id];
        let row: Vec<StateId> = (0..k)
            .map(|x| intern(a.step(s, x), b.step(t, x), &mut pairs, &mut queue, &mut ids))
            .collect();
        debug_assert_eq!(delta.len(), id);
        delta.push(row);
    }

    let scc = super::scc::tarjan_scc(&delta);
    let prios = (0..pairs.len())
        .map(|id| {
            let rep = scc.component(scc.comp_of[id])[0];
            let (s, t) = pairs[rep];
            usize::from(!(wa[s] && wb[t]))
        })
        .collect();
    OmegaAutomaton::new(a.alphabet(), 0, delta, Acceptance::Parity(prios))
        .expect("product is well-formed")
}

/// Streett pairs of "min priority seen infinitely often is even".
fn streett_pairs(prios: &[usize]) -> Vec<usize> {
    let mut odds: Vec<usize> = prios.iter().copied().filter(|p| p % 2 == 1).collect();
    odds.sort_unstable();
    odds.dedup();
    odds
}

/// Conjunction of two parity conditions through an index-appearance record.
///
/// The record is a permutation of the Streett pair indices; an index moves to
/// the front whenever its answer set is hit. Deep unanswered requests emit
/// dominant odd priorities, deep answers dominant even ones.
fn record_and_product(a: &OmegaAutomaton, b: &OmegaAutomaton) -> OmegaAutomaton {
    let k = a.alphabet().size();
    let pa = a.priorities();
    let pb = b.priorities();
    let odds_a = streett_pairs(pa);
    let odds_b = streett_pairs(pb);
    let m = odds_a.len() + odds_b.len();

    // request/answer hits of the pair indices at a product position
    let hits = |s: StateId, t: StateId| -> (Vec<usize>, Vec<usize>) {
        let mut e = Vec::new();
        let mut f = Vec::new();
        for (i, &odd) in odds_a.iter().enumerate() {
            if pa[s] == odd {
                e.push(i);
            }
            if pa[s] < odd {
                f.push(i);
            }
        }
        for (j, &odd) in odds_b.iter().enumerate() {
            if pb[t] == odd {
                e.push(odds_a.len() + j);
            }
            if pb[t] < odd {
                f.push(odds_a.len() + j);
            }
        }
        (e, f)
    };

    type Rec = Vec<usize>;
    let mut ids: HashMap<(StateId, StateId, Rec), StateId> = HashMap::new();
    let mut keys: Vec<(StateId, StateId, Rec)> = Vec::new();
    let mut delta: Vec<Vec<StateId>> = Vec::new();
    let mut prios: Vec<usize> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    let initial_rec: Rec = (0..m).collect();
    ids.insert((a.initial(), b.initial(), initial_rec.clone()), 0);
    keys.push((a.initial(), b.initial(), initial_rec));
    queue.push_back(0usize);

    while let Some(id) = queue.pop_front() {
        let (s, t, rec) = keys[id].clone();
        let (e_hits, f_hits) = hits(s, t);
        let pos = |i: usize| rec.iter().position(|&x| x == i).unwrap() + 1;
        let e_deep = e_hits.iter().map(|&i| pos(i)).max().unwrap_or(0);
        let f_deep = f_hits.iter().map(|&i| pos(i)).max().unwrap_or(0);
        let prio = if e_deep > f_deep {
            2 * (m - e_deep) + 1
        } else if f_deep > 0 {
            2 * (m - f_deep)
        } else {
            2 * m
        };
        let mut next_rec: Rec = f_hits.clone();
        next_rec.extend(rec.iter().copied().filter(|i| !f_hits.contains(i)));

        let row: Vec<StateId> = (0..k)
            .map(|x| {
                let key = (a.step(s, x), b.step(t, x), next_rec.clone());
                *ids.entry(key.clone()).or_insert_with(|| {
                    keys.push(key);
                    queue.push_back(keys.len() - 1);
                    keys.len() - 1
                })
            })
            .collect();
        debug_assert_eq!(delta.len(), id);
        delta.push(row);
        prios.push(prio);
    }

    OmegaAutomaton::new(a.alphabet(), 0, delta, Acceptance::Parity(prios))
        .expect("record product is well-formed")
}

/// Accepting lasso, if any: a reachable cycle whose minimal priority is even.
pub fn find_accepting_lasso(a: &OmegaAutomaton) -> Option<LassoWord> {
    let prios = a.priorities();
    let n = a.state_count();
    let k = a.alphabet().size();

    // predecessors of the reachable part, for prefix reconstruction
    let mut reach = vec![false; n];
    let mut pred: Vec<Option<(StateId, usize)>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    reach[a.initial()] = true;
    queue.push_back(a.initial());
    while let Some(s) = queue.pop_front() {
        for x in 0..k {
            let t = a.step(s, x);
            if !reach[t] {
                reach[t] = true;
                pred[t] = Some((s, x));
                queue.push_back(t);
            }
        }
    }

    let mut evens: Vec<usize> = prios.iter().copied().filter(|p| p % 2 == 0).collect();
    evens.sort_unstable();
    evens.dedup();

    for p in evens {
        let keep: Vec<bool> = (0..n).map(|s| prios[s] >= p).collect();
        let delta_sub: Vec<Vec<StateId>> = (0..n)
            .map(|s| {
                if !keep[s] {
                    return vec![s; k];
                }
                // self-loops on removed letters keep the table total without
                // creating cross-component edges that matter here
                (0..k)
                    .map(|x| {
                        let t = a.step(s, x);
                        if keep[t] {
                            t
                        } else {
                            s
                        }
                    })
                    .collect()
            })
            .collect();
        // real internal edges only: recompute components over kept states
        let scc = super::scc::tarjan_scc(&delta_sub);
        for s in 0..n {
            if !keep[s] || !reach[s] || prios[s] != p {
                continue;
            }
            // cycle through s inside its component of the restricted graph
            if let Some(cycle) = cycle_through(a, s, &keep, &scc) {
                let mut prefix = Vec::new();
                let mut v = s;
                while let Some((u, x)) = pred[v] {
                    prefix.push(x);
                    v = u;
                }
                prefix.reverse();
                return Some(LassoWord::new(prefix, cycle).unwrap());
            }
        }
    }
    None
}

fn cycle_through(
    a: &OmegaAutomaton,
    s: StateId,
    keep: &[bool],
    scc: &super::scc::SccInfo,
) -> Option<Vec<usize>> {
    let comp = scc.comp_of[s];
    let k = a.alphabet().size();
    // BFS from the successors of s back to s, staying in the component
    let mut pred: HashMap<StateId, (StateId, usize)> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for x in 0..k {
        let t = a.step(s, x);
        if keep[t] && scc.comp_of[t] == comp && !pred.contains_key(&t) {
            pred.insert(t, (s, x));
            queue.push_back(t);
            if t == s {
                return Some(vec![x]);
            }
        }
    }
    while let Some(u) = queue.pop_front() {
        for x in 0..k {
            let t = a.step(u, x);
            if !keep[t] || scc.comp_of[t] != comp {
                continue;
            }
            if t == s {
                let mut letters = vec![x];
                let mut v = u;
                while v != s {
                    let (w, y) = pred[&v];
                    letters.push(y);
                    v = w;
                }
                letters.reverse();
                return Some(letters);
            }
            if let std::collections::hash_map::Entry::Vacant(e) = pred.entry(t) {
                e.insert((u, x));
                queue.push_back(t);
            }
        }
    }
    None
}

/// Language emptiness via accepting-lasso search.
pub fn is_empty(a: &OmegaAutomaton) -> bool {
    find_accepting_lasso(a).is_none()
}

/// Language equality through the two difference products.
pub fn equivalent(a: &OmegaAutomaton, b: &OmegaAutomaton) -> Result<bool> {
    Ok(is_empty(&product_combine(a, b, BoolOp::Minus)?)
        && is_empty(&product_combine(b, a, BoolOp::Minus)?))
}

/// Safety automaton for the topological closure of `L(a)`: states with empty
/// residual language are pruned and their transitions routed to a rejecting
/// sink; every surviving state gets priority 0.
pub fn closure(a: &OmegaAutomaton) -> OmegaAutomaton {
    let n = a.state_count();
    let k = a.alphabet().size();
    let live: Vec<bool> = (0..n).map(|s| !is_empty(&a.rerooted(s))).collect();

    let mut id = vec![usize::MAX; n];
    let mut live_count = 0;
    for s in 0..n {
        if live[s] {
            id[s] = live_count;
            live_count += 1;
        }
    }
    let sink = live_count;
    let mut delta = Vec::with_capacity(live_count + 1);
    for s in 0..n {
        if !live[s] {
            continue;
        }
        let row = (0..k)
            .map(|x| {
                let t = a.step(s, x);
                if live[t] {
                    id[t]
                } else {
                    sink
                }
            })
            .collect();
        delta.push(row);
    }
    delta.push(vec![sink; k]);
    let mut prios = vec![0usize; live_count];
    prios.push(1);
    let initial = if live[a.initial()] {
        id[a.initial()]
    } else {
        sink
    };
    OmegaAutomaton::new(a.alphabet(), initial, delta, Acceptance::Parity(prios))
        .expect("closure is well-formed")
}

/// Whether `a` recognizes a closed set.
pub fn is_safety_language(a: &OmegaAutomaton) -> Result<bool> {
    equivalent(a, &closure(a))
}

/// Minimal safety automaton for a closed language: closure-prune, then merge
/// residual-equivalent states by partition refinement over {live, sink}.
pub fn minimize_safety(a: &OmegaAutomaton) -> OmegaAutomaton {
    let c = closure(a);
    let n = c.state_count();
    let k = c.alphabet().size();
    let sink_class = |s: StateId| usize::from(c.priorities()[s] == 0);

    let mut class: Vec<usize> = (0..n).map(sink_class).collect();
    let mut count = class.iter().collect::<std::collections::HashSet<_>>().len();
    loop {
        let mut sig: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for s in 0..n {
            let key = (
                class[s],
                (0..k).map(|x| class[c.step(s, x)]).collect::<Vec<_>>(),
            );
            let fresh = sig.len();
            next.push(*sig.entry(key).or_insert(fresh));
        }
        let refined = sig.len();
        class = next;
        // refinement with an unchanged class count is the fixpoint
        if refined == count {
            break;
        }
        count = refined;
    }

    let classes = class.iter().copied().max().unwrap() + 1;
    let mut rep = vec![usize::MAX; classes];
    for s in 0..n {
        if rep[class[s]] == usize::MAX {
            rep[class[s]] = s;
        }
    }
    // keep only classes reachable from the initial one
    let mut id = vec![usize::MAX; classes];
    let mut order: Vec<usize> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    id[class[c.initial()]] = 0;
    order.push(class[c.initial()]);
    queue.push_back(class[c.initial()]);
    while let Some(cl) = queue.pop_front() {
        for x in 0..k {
            let t = class[c.step(rep[cl], x)];
            if id[t] == usize::MAX {
                id[t] = order.len();
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    let delta: Vec<Vec<StateId>> = order
        .iter()
        .map(|&cl| (0..k).map(|x| id[class[c.step(rep[cl], x)]]).collect())
        .collect();
    let prios: Vec<usize> = order.iter().map(|&cl| c.priorities()[rep[cl]]).collect();
    OmegaAutomaton::new(c.alphabet(), 0, delta, Acceptance::Parity(prios))
        .expect("quotient is well-formed")
}

/// One-state automaton accepting everything or nothing.
pub fn constant_automaton(alphabet: Alphabet, accept: bool) -> OmegaAutomaton {
    OmegaAutomaton::new(
        alphabet,
        0,
        vec![vec![0; alphabet.size()]],
        Acceptance::Parity(vec![usize::from(!accept)]),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn at_least(k: usize) -> OmegaAutomaton {
        // counter of 1s capped at k; accept once the count reaches k
        let n = k + 1;
        let delta = (0..n).map(|c| vec![c, (c + 1).min(k)]).collect::<Vec<_>>();
        let prios = (0..n).map(|c| usize::from(c < k)).collect();
        OmegaAutomaton::new(ab2(), 0, delta, Acceptance::Parity(prios)).unwrap()
    }

    #[test]
    fn complement_flips_membership_pointwise() {
        let a = at_least(1);
        let c = complement(&a);
        for w in [
            LassoWord::new(vec![], vec![0]).unwrap(),
            LassoWord::new(vec![1], vec![0]).unwrap(),
            LassoWord::new(vec![], vec![1]).unwrap(),
        ] {
            assert_ne!(a.accepts_lasso(&w).unwrap(), c.accepts_lasso(&w).unwrap());
        }
    }

    #[test]
    fn complement_of_open_set_accepts_only_zero_tail() {
        let c = complement(&at_least(1));
        let zs = LassoWord::new(vec![], vec![0]).unwrap();
        let one = LassoWord::new(vec![1], vec![0]).unwrap();
        let ones = LassoWord::new(vec![], vec![1]).unwrap();
        assert!(c.accepts_lasso(&zs).unwrap());
        assert!(!c.accepts_lasso(&one).unwrap());
        assert!(!c.accepts_lasso(&ones).unwrap());
    }

    #[test]
    fn tautology_and_contradiction_products() {
        let a = at_least(1);
        let na = complement(&a);
        assert!(is_empty(&product_combine(&a, &na, BoolOp::And).unwrap()));
        let full = product_combine(&a, &na, BoolOp::Or).unwrap();
        assert!(is_empty(
            &product_combine(&constant_automaton(ab2(), true), &full, BoolOp::Minus).unwrap()
        ));
    }

    #[test]
    fn minus_separates_one_from_two() {
        let d = product_combine(&at_least(1), &at_least(2), BoolOp::Minus).unwrap();
        let one = LassoWord::new(vec![1], vec![0]).unwrap();
        let two = LassoWord::new(vec![1, 1], vec![0]).unwrap();
        assert!(d.accepts_lasso(&one).unwrap());
        assert!(!d.accepts_lasso(&two).unwrap());
    }

    #[test]
    fn closure_of_open_set_is_full_space() {
        let cl = closure(&at_least(1));
        assert!(equivalent(&cl, &constant_automaton(ab2(), true)).unwrap());
    }

    #[test]
    fn closure_of_singleton_is_itself() {
        let single = complement(&at_least(1)); // {0^w}
        assert!(equivalent(&closure(&single), &single).unwrap());
    }

    #[test]
    fn closure_of_clopen_prefix_set_is_itself() {
        // first letter is 1
        let a = OmegaAutomaton::new(
            ab2(),
            0,
            vec![vec![1, 2], vec![1, 1], vec![2, 2]],
            Acceptance::Parity(vec![1, 1, 0]),
        )
        .unwrap();
        assert!(equivalent(&closure(&a), &a).unwrap());
    }

    #[test]
    fn emptiness_of_product_with_complement() {
        let a = at_least(1);
        let none = product_combine(&a, &complement(&a), BoolOp::And).unwrap();
        assert!(is_empty(&none));
        assert!(!is_empty(&a));
    }

    #[test]
    fn accepting_lasso_witness_is_accepted() {
        let a = at_least(2);
        let w = find_accepting_lasso(&a).unwrap();
        assert!(a.accepts_lasso(&w).unwrap());
    }

    #[test]
    fn record_product_handles_nonweak_buchi_intersection() {
        // infinitely many 1s: priority 0 on the step reading 1
        let inf_ones = OmegaAutomaton::new(
            ab2(),
            0,
            vec![vec![0, 1], vec![0, 1]],
            Acceptance::Parity(vec![1, 0]),
        )
        .unwrap();
        assert!(inf_ones.weak_acceptance().is_none());
        // infinitely many 0s
        let inf_zeros = OmegaAutomaton::new(
            ab2(),
            0,
            vec![vec![1, 0], vec![1, 0]],
            Acceptance::Parity(vec![1, 0]),
        )
        .unwrap();
        let both = product_combine(&inf_ones, &inf_zeros, BoolOp::And).unwrap();
        let alt = LassoWord::new(vec![], vec![0, 1]).unwrap();
        let ones = LassoWord::new(vec![], vec![1]).unwrap();
        let zeros = LassoWord::new(vec![], vec![0]).unwrap();
        assert!(both.accepts_lasso(&alt).unwrap());
        assert!(!both.accepts_lasso(&ones).unwrap());
        assert!(!both.accepts_lasso(&zeros).unwrap());
        assert!(!is_empty(&both));
        // and the union
        let either = product_combine(&inf_ones, &inf_zeros, BoolOp::Or).unwrap();
        assert!(either.accepts_lasso(&ones).unwrap());
        assert!(either.accepts_lasso(&zeros).unwrap());
    }

    #[test]
    fn minimize_safety_collapses_duplicate_paths() {
        // two redundant states recognizing the same closed set {0^w}
        let a = OmegaAutomaton::new(
            ab2(),
            0,
            vec![vec![1, 3], vec![2, 3], vec![1, 3], vec![3, 3]],
            Acceptance::Parity(vec![0, 0, 0, 1]),
        )
        .unwrap();
        let m = minimize_safety(&a);
        assert!(m.state_count() < a.state_count());
        assert!(equivalent(&m, &a).unwrap());
    }
}
