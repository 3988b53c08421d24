//! Derivative-pipeline invariants: contraction and monotonicity, point
//! ranks attained by witnesses, the irreducibility checks, and agreement of
//! the two decision routes on mixed samples.

use wadgelab::automata::{find_accepting_lasso, is_empty, product_combine, Alphabet, BoolOp};
use wadgelab::bourgain::{
    analyze, attaining_pairs, bourgain_rank, decide_m_by_rank, derivative_step, point_rank,
    rank_chain, rank_report, sep_rank, SidedType,
};
use wadgelab::rational::Rat;
use wadgelab::realfun::{char_fun, constant_fn, critical_pairs, m_reducible, staircase_fn};
use wadgelab::sampling;
use wadgelab::wadge::catalog::{delta_jr, pi_complete, sigma_complete};

fn ab() -> Alphabet {
    Alphabet::new(2).unwrap()
}

#[test]
fn derivative_is_monotone_on_chain_stages() {
    let f = char_fun(&delta_jr(ab(), 3).unwrap()).unwrap();
    for t in critical_pairs(&f) {
        let chain = rank_chain(&f, &t).unwrap();
        // stage_{k+1} is a subset of stage_k, so its derivative is too
        for win in chain.stages.windows(2) {
            if is_empty(&win[1]) {
                continue;
            }
            let d_small = derivative_step(&f, &t, &win[1]).unwrap();
            let d_big = derivative_step(&f, &t, &win[0]).unwrap();
            let diff = product_combine(&d_small, &d_big, BoolOp::Minus).unwrap();
            assert!(is_empty(&diff), "monotonicity failed");
        }
    }
}

#[test]
fn point_rank_is_bounded_and_attained() {
    let lassos = sampling::random_lassos(53, ab(), 6, 100);
    let funs = [
        char_fun(&sigma_complete(ab(), 1)).unwrap(),
        char_fun(&pi_complete(ab(), 2)).unwrap(),
        staircase_fn(),
    ];
    for f in &funs {
        for t in critical_pairs(f) {
            let chain = rank_chain(f, &t).unwrap();
            let rank = chain.rank();
            for w in &lassos {
                assert!(point_rank(f, &t, w).unwrap() <= rank);
            }
            // a point surviving until the last nonempty stage attains it
            let deepest = find_accepting_lasso(&chain.stages[rank - 1])
                .expect("nonempty stage has a witness");
            assert_eq!(point_rank(f, &t, &deepest).unwrap(), rank);
        }
    }
}

#[test]
fn rank_is_attained_and_never_type_f() {
    let funs = [
        constant_fn(ab(), Rat::one()),
        char_fun(&sigma_complete(ab(), 2)).unwrap(),
        char_fun(&delta_jr(ab(), 2).unwrap()).unwrap(),
        staircase_fn(),
    ];
    for f in &funs {
        // some representative pair attains the rank
        assert!(!attaining_pairs(f).unwrap().is_empty());
        // and the reducible type cannot co-occur with an attained rank
        let a = analyze(f).unwrap();
        assert_ne!(a.sided, SidedType::F);
    }
}

#[test]
fn decision_routes_agree_on_mixed_samples() {
    let funs = vec![
        constant_fn(ab(), Rat::new(2, 3)),
        wadgelab::realfun::first_letter_fn(),
        staircase_fn(),
        wadgelab::realfun::staircase_flipped(),
        char_fun(&sigma_complete(ab(), 1)).unwrap(),
        char_fun(&pi_complete(ab(), 1)).unwrap(),
        char_fun(&delta_jr(ab(), 2).unwrap()).unwrap(),
    ];
    for f in &funs {
        for g in &funs {
            assert_eq!(
                m_reducible(f, g).unwrap().reducible,
                decide_m_by_rank(f, g).unwrap(),
            );
        }
    }
}

#[test]
fn separation_rank_tracks_the_derivative_rank() {
    let funs = [
        constant_fn(ab(), Rat::zero()),
        char_fun(&sigma_complete(ab(), 2)).unwrap(),
        char_fun(&delta_jr(ab(), 3).unwrap()).unwrap(),
    ];
    for f in &funs {
        assert_eq!(sep_rank(f, 5).unwrap(), bourgain_rank(f).unwrap());
    }
}

#[test]
fn rank_overflow_is_unreachable_for_validated_functions() {
    // the rank of a validated automaton is bounded by its component count;
    // a deep staircase still terminates quickly
    let values: Vec<Rat> = (0..12).map(|i| Rat::new(i, 12)).collect();
    let delta: Vec<Vec<usize>> = (0..12).map(|c| vec![c, (c + 1).min(11)]).collect();
    let a = wadgelab::automata::OmegaAutomaton::new(
        ab(),
        0,
        delta,
        wadgelab::automata::Acceptance::WeakOutput(values),
    )
    .unwrap();
    let f = wadgelab::realfun::FunctionAutomaton::new(a).unwrap();
    assert!(bourgain_rank(&f).unwrap() >= 2);
}

#[test]
fn rank_report_serializes_with_the_expected_fields() {
    let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
    let report = rank_report(&f, 5).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    assert!(text.starts_with("{\"alpha\":2,\"per_pair\":["));
    assert!(text.contains("\"type\":\"l\""));
    assert!(text.contains("\"m_rank\":2"));
    assert!(text.contains("\"sep_rank\":2"));
    let back: wadgelab::bourgain::RankReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.alpha, 2);
}

#[test]
fn spec_surface_wrappers_agree_with_the_analysis() {
    use wadgelab::bourgain::{m_rank_of, sided_type};
    let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
    assert_eq!(sided_type(&f).unwrap(), SidedType::L);
    assert_eq!(m_rank_of(&f).unwrap(), 2);
    let c = constant_fn(ab(), Rat::one());
    assert_eq!(sided_type(&c).unwrap(), SidedType::O);
    assert_eq!(m_rank_of(&c).unwrap(), 0);
}

#[test]
fn decision_routes_agree_on_random_and_structured_functions() {
    // the strongest cross-check: arbitrary stable automata against the
    // structured ladder, both pipelines on every ordered pair
    let mut rng = sampling::rng(101);
    let mut funs: Vec<_> = (0..14)
        .map(|_| sampling::random_function(&mut rng, ab(), 5))
        .collect();
    funs.push(constant_fn(ab(), Rat::new(1, 3)));
    funs.push(wadgelab::realfun::first_letter_fn());
    funs.push(staircase_fn());
    funs.push(char_fun(&sigma_complete(ab(), 1)).unwrap());
    funs.push(char_fun(&pi_complete(ab(), 1)).unwrap());
    funs.push(char_fun(&sigma_complete(ab(), 2)).unwrap());
    funs.push(char_fun(&delta_jr(ab(), 2).unwrap()).unwrap());

    let mut positives = 0;
    let mut negatives = 0;
    for f in &funs {
        for g in &funs {
            let games = m_reducible(f, g).unwrap().reducible;
            let ranks = decide_m_by_rank(f, g).unwrap();
            assert_eq!(games, ranks, "pipelines disagree");
            if games {
                positives += 1;
            } else {
                negatives += 1;
            }
        }
    }
    // the sample must exercise both verdicts
    assert!(positives > 50 && negatives > 50, "{positives}/{negatives}");
}

#[test]
fn separation_search_respects_the_level_cap() {
    // rank 4 cannot be matched within a cap of 2
    let f = char_fun(&sigma_complete(ab(), 3)).unwrap();
    assert!(matches!(
        sep_rank(&f, 2),
        Err(wadgelab::Error::LevelOutOfRange { .. })
    ));
}
