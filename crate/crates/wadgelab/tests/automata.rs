//! Cross-cutting automata invariants: complement flips membership, closure
//! behaves like a closure operator, products agree with boolean logic on
//! sampled lassos, equivalence is an equivalence.

use proptest::prelude::*;

use wadgelab::automata::{
    automaton_from_json, automaton_to_json, closure, complement, constant_automaton, equivalent,
    is_empty, product_combine, Alphabet, BoolOp, OmegaAutomaton,
};
use wadgelab::sampling;
use wadgelab::wadge::catalog::{at_most_ones, delta_ji, delta_jr, pi_complete, sigma_complete};

fn ab() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn small_catalog() -> Vec<OmegaAutomaton> {
    let mut out = vec![
        constant_automaton(ab(), true),
        constant_automaton(ab(), false),
        sigma_complete(ab(), 1),
        sigma_complete(ab(), 2),
        sigma_complete(ab(), 3),
        pi_complete(ab(), 1),
        pi_complete(ab(), 2),
        at_most_ones(ab(), 1),
    ];
    out.push(delta_jr(ab(), 1).unwrap());
    out.push(delta_jr(ab(), 2).unwrap());
    out.push(delta_ji(ab(), 2).unwrap());
    out
}

#[test]
fn complement_disagrees_on_every_sampled_lasso() {
    let lassos = sampling::random_lassos(11, ab(), 6, 300);
    for a in small_catalog() {
        let c = complement(&a);
        for w in &lassos {
            assert_ne!(
                a.accepts_lasso(w).unwrap(),
                c.accepts_lasso(w).unwrap(),
                "complement agreed on {w}"
            );
        }
    }
}

#[test]
fn double_complement_is_language_equivalent() {
    for a in small_catalog() {
        let cc = complement(&complement(&a));
        assert!(equivalent(&a, &cc).unwrap());
    }
}

#[test]
fn products_agree_with_boolean_logic_on_thousand_lassos() {
    let lassos = sampling::random_lassos(12, ab(), 6, 1000);
    let cat = small_catalog();
    for a in &cat {
        for b in &cat {
            let and = product_combine(a, b, BoolOp::And).unwrap();
            let or = product_combine(a, b, BoolOp::Or).unwrap();
            let minus = product_combine(a, b, BoolOp::Minus).unwrap();
            for w in &lassos {
                let x = a.accepts_lasso(w).unwrap();
                let y = b.accepts_lasso(w).unwrap();
                assert_eq!(and.accepts_lasso(w).unwrap(), x && y);
                assert_eq!(or.accepts_lasso(w).unwrap(), x || y);
                assert_eq!(minus.accepts_lasso(w).unwrap(), x && !y);
            }
        }
    }
}

#[test]
fn closure_is_extensive_idempotent_and_monotone() {
    let lassos = sampling::random_lassos(13, ab(), 6, 200);
    let cat = small_catalog();
    for a in &cat {
        let cl = closure(a);
        // extensive on samples
        for w in &lassos {
            if a.accepts_lasso(w).unwrap() {
                assert!(cl.accepts_lasso(w).unwrap());
            }
        }
        // idempotent up to language
        assert!(equivalent(&closure(&cl), &cl).unwrap());
    }
    // monotone: A subset B implies cl A subset cl B, via differences
    for a in &cat {
        for b in &cat {
            if is_empty(&product_combine(a, b, BoolOp::Minus).unwrap()) {
                let d = product_combine(&closure(a), &closure(b), BoolOp::Minus).unwrap();
                assert!(is_empty(&d));
            }
        }
    }
}

#[test]
fn equivalence_is_reflexive_symmetric_transitive_on_catalog() {
    let cat = small_catalog();
    for a in &cat {
        assert!(equivalent(a, a).unwrap());
    }
    for a in &cat {
        for b in &cat {
            let ab_eq = equivalent(a, b).unwrap();
            assert_eq!(ab_eq, equivalent(b, a).unwrap());
            if !ab_eq {
                continue;
            }
            for c in &cat {
                if equivalent(b, c).unwrap() {
                    assert!(equivalent(a, c).unwrap());
                }
            }
        }
    }
}

#[test]
fn closure_of_difference_catalog_sets_is_computed_exactly() {
    // closure of "exactly one 1" is "at most one 1"
    let cl = closure(&sigma_complete(ab(), 2));
    assert!(equivalent(&cl, &at_most_ones(ab(), 1)).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random weak automata and lassos: the complement flips acceptance and
    /// run evaluation matches a long plain simulation of priorities.
    #[test]
    fn complement_flip_on_random_automata(seed in 0u64..10_000) {
        let mut rng = sampling::rng(seed);
        let a = sampling::random_weak_automaton(&mut rng, ab(), 5);
        let w = sampling::random_lasso(&mut rng, ab(), 5);
        let acc = a.accepts_lasso(&w).unwrap();
        prop_assert_ne!(acc, complement(&a).accepts_lasso(&w).unwrap());

        // oracle: simulate far enough that the run is inside its cycle, then
        // take the minimum priority over one further cycle period
        let horizon = a.state_count() * w.cycle().len() + w.prefix().len();
        let mut s = a.initial();
        for i in 0..horizon {
            s = a.step(s, w.at(i));
        }
        let mut min = usize::MAX;
        let mut t = s;
        for i in 0..a.state_count() * w.cycle().len() {
            min = min.min(a.priorities()[t]);
            t = a.step(t, w.at(horizon + i));
        }
        prop_assert_eq!(acc, min % 2 == 0);
    }

    /// Serialization round-trips bit-exactly.
    #[test]
    fn json_roundtrip_random_automata(seed in 0u64..10_000) {
        let mut rng = sampling::rng(seed);
        let a = sampling::random_weak_automaton(&mut rng, ab(), 6);
        let text = automaton_to_json(&a);
        let back = automaton_from_json(&text).unwrap();
        prop_assert_eq!(automaton_to_json(&back), text);
        prop_assert_eq!(back, a);
    }
}

/// Random parity automata, usually not SCC-homogeneous, to drive the
/// appearance-record product path.
fn random_parity(rng: &mut rand_chacha::ChaCha8Rng, max_states: usize) -> OmegaAutomaton {
    use rand::Rng;
    let n = rng.gen_range(1..=max_states);
    let delta: Vec<Vec<usize>> = (0..n)
        .map(|_| (0..2).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let prios = (0..n).map(|_| rng.gen_range(0..4)).collect();
    OmegaAutomaton::new(
        ab(),
        0,
        delta,
        wadgelab::automata::Acceptance::Parity(prios),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The record-monitor product agrees with boolean logic even on
    /// genuinely non-weak inputs.
    #[test]
    fn record_products_agree_on_random_parity_automata(seed in 0u64..10_000) {
        let mut rng = sampling::rng(seed);
        let a = random_parity(&mut rng, 4);
        let b = random_parity(&mut rng, 4);
        let and = product_combine(&a, &b, BoolOp::And).unwrap();
        let or = product_combine(&a, &b, BoolOp::Or).unwrap();
        let minus = product_combine(&a, &b, BoolOp::Minus).unwrap();
        for _ in 0..40 {
            let w = sampling::random_lasso(&mut rng, ab(), 5);
            let x = a.accepts_lasso(&w).unwrap();
            let y = b.accepts_lasso(&w).unwrap();
            prop_assert_eq!(and.accepts_lasso(&w).unwrap(), x && y);
            prop_assert_eq!(or.accepts_lasso(&w).unwrap(), x || y);
            prop_assert_eq!(minus.accepts_lasso(&w).unwrap(), x && !y);
        }
        // emptiness of the contradiction, via the same path
        let contra = product_combine(&a, &complement(&a), BoolOp::And).unwrap();
        prop_assert!(is_empty(&contra));
    }
}
