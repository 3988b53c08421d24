//! Function-automaton invariants: level-set structure on samples, the
//! preorder laws of the level-pair reduction, interleave degrees, and the
//! never-constant property of the level-pair family.

use wadgelab::automata::{Acceptance, Alphabet, OmegaAutomaton};
use wadgelab::rational::Rat;
use wadgelab::realfun::{
    char_fun, constant_fn, critical_pairs, first_letter_fn, interleave, level_sets, m_reducible,
    staircase_fn, FunctionAutomaton,
};
use wadgelab::sampling;
use wadgelab::wadge::catalog::{pi_complete, sigma_complete};

fn ab() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn small_function_set() -> Vec<(String, FunctionAutomaton)> {
    vec![
        ("const".into(), constant_fn(ab(), Rat::new(1, 4))),
        ("first-letter".into(), first_letter_fn()),
        ("staircase".into(), staircase_fn()),
        (
            "chi-sigma1".into(),
            char_fun(&sigma_complete(ab(), 1)).unwrap(),
        ),
        ("chi-pi1".into(), char_fun(&pi_complete(ab(), 1)).unwrap()),
        (
            "chi-sigma2".into(),
            char_fun(&sigma_complete(ab(), 2)).unwrap(),
        ),
    ]
}

#[test]
fn level_sets_partition_against_eval_on_samples() {
    let lassos = sampling::random_lassos(41, ab(), 6, 500);
    for (name, f) in small_function_set() {
        for t in critical_pairs(&f) {
            let pair = level_sets(&f, &t).unwrap();
            for w in &lassos {
                let v = f.eval(w).unwrap();
                assert_eq!(
                    pair.zero_part().accepts_lasso(w).unwrap(),
                    v <= t.low,
                    "{name} zero part at {w}"
                );
                assert_eq!(
                    pair.one_part().accepts_lasso(w).unwrap(),
                    v >= t.high,
                    "{name} one part at {w}"
                );
            }
        }
    }
}

#[test]
fn m_reduction_is_a_preorder_on_the_sample_set() {
    let fs = small_function_set();
    let n = fs.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = m_reducible(&fs[i].1, &fs[j].1).unwrap().reducible;
        }
        assert!(rel[i][i], "{} not reflexive", fs[i].0);
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rel[i][j] && rel[j][k] {
                    assert!(rel[i][k], "{} {} {}", fs[i].0, fs[j].0, fs[k].0);
                }
            }
        }
    }
}

#[test]
fn every_point_lands_on_both_sides_of_some_pair() {
    let lassos = sampling::random_lassos(43, ab(), 6, 200);
    for (name, f) in small_function_set() {
        let pairs = critical_pairs(&f);
        for w in &lassos {
            let mut some_zero = false;
            let mut some_one = false;
            for t in &pairs {
                let pair = level_sets(&f, t).unwrap();
                some_zero |= pair.zero_part().accepts_lasso(w).unwrap();
                some_one |= pair.one_part().accepts_lasso(w).unwrap();
            }
            assert!(
                some_zero && some_one,
                "{name}: {w} missed a side of the family"
            );
        }
    }
}

#[test]
fn char_fun_rejects_genuinely_buchi_conditions() {
    // infinitely many ones
    let buchi = OmegaAutomaton::new(
        ab(),
        0,
        vec![vec![0, 1], vec![0, 1]],
        Acceptance::Parity(vec![1, 0]),
    )
    .unwrap();
    assert!(matches!(
        char_fun(&buchi),
        Err(wadgelab::Error::NotWeaklyRepresentable(_))
    ));
}

#[test]
fn interleave_of_both_sides_realizes_the_join_layer() {
    // blocks from both sides of level 1: the indicator of each block sits
    // below the interleave, the interleave below the full join indicator
    let s = char_fun(&sigma_complete(ab(), 1)).unwrap();
    let p = char_fun(&pi_complete(ab(), 1)).unwrap();
    let weights = [6, 5, 4, 3, 2, 1].map(Rat::int);
    let g = interleave(&[&s, &p], &weights).unwrap();
    assert!(m_reducible(&s, &g).unwrap().reducible);
    assert!(m_reducible(&p, &g).unwrap().reducible);
    assert!(!m_reducible(&g, &s).unwrap().reducible);
    assert!(!m_reducible(&g, &p).unwrap().reducible);

    let top = char_fun(&wadgelab::wadge::catalog::delta_jr(ab(), 2).unwrap()).unwrap();
    assert!(m_reducible(&g, &top).unwrap().reducible);
    assert!(!m_reducible(&top, &g).unwrap().reducible);
}

#[test]
fn certificates_replay_cleanly_on_positive_verdicts() {
    let lassos = sampling::random_lassos(47, ab(), 6, 300);
    let c = constant_fn(ab(), Rat::zero());
    let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
    let out = m_reducible(&c, &f).unwrap();
    assert!(out.reducible);
    for (fp, gp, strategy) in &out.certificate {
        let violations = wadgelab::wadge::certify_witness(
            &wadgelab::wadge::SideSpec::Level {
                fun: &c,
                low: fp.low,
                high: fp.high,
            },
            &wadgelab::wadge::SideSpec::Level {
                fun: &f,
                low: gp.low,
                high: gp.high,
            },
            strategy,
            &lassos,
        )
        .unwrap();
        assert_eq!(violations, 0);
    }
}

#[test]
fn indicators_of_trivial_sets_are_constant() {
    use wadgelab::automata::constant_automaton;
    let one = char_fun(&constant_automaton(ab(), true)).unwrap();
    let zero = char_fun(&constant_automaton(ab(), false)).unwrap();
    assert_eq!(one.range(), &[Rat::one()]);
    assert_eq!(zero.range(), &[Rat::zero()]);
}
