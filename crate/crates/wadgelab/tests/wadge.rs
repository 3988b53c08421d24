//! Reducibility-game invariants: preorder laws, the semi-linear ordering,
//! self-duality phenomena, joins and shifts, pass encoding and separation.

use wadgelab::automata::{complement, constant_automaton, equivalent, Alphabet, OmegaAutomaton};
use wadgelab::sampling;
use wadgelab::wadge::catalog::{delta_ji, delta_jr, pi_complete, sigma_complete};
use wadgelab::wadge::{
    decompose, is_m_sigma_ji, is_self_dual, join, leq_w, m_leq, pair_leq, pass_encode,
    separate_closed, shift, GameMode, SetOrPair, TwoBotPair,
};

fn ab() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn catalog_list() -> Vec<(String, OmegaAutomaton)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("sigma{n}"), sigma_complete(ab(), n)));
        out.push((format!("pi{n}"), pi_complete(ab(), n)));
    }
    out.push(("deltajr1".into(), delta_jr(ab(), 1).unwrap()));
    out.push(("deltajr2".into(), delta_jr(ab(), 2).unwrap()));
    out.push(("deltaji2".into(), delta_ji(ab(), 2).unwrap()));
    out
}

#[test]
fn leq_w_is_reflexive_on_the_catalog() {
    for (name, a) in catalog_list() {
        for mode in [GameMode::Wadge, GameMode::Lipschitz] {
            assert!(leq_w(&a, &a, mode).unwrap().reducible, "{name}");
        }
    }
}

#[test]
fn leq_w_is_transitive_by_decision_and_by_composition() {
    let cat = catalog_list();
    let lassos = sampling::random_lassos(17, ab(), 5, 200);
    let mut verdicts = vec![vec![false; cat.len()]; cat.len()];
    let mut witnesses = vec![vec![None; cat.len()]; cat.len()];
    for (i, (_, a)) in cat.iter().enumerate() {
        for (j, (_, b)) in cat.iter().enumerate() {
            let out = leq_w(a, b, GameMode::Wadge).unwrap();
            verdicts[i][j] = out.reducible;
            if out.reducible {
                witnesses[i][j] = Some(out.witness);
            }
        }
    }
    for i in 0..cat.len() {
        for j in 0..cat.len() {
            for k in 0..cat.len() {
                if verdicts[i][j] && verdicts[j][k] {
                    assert!(
                        verdicts[i][k],
                        "transitivity broke: {} {} {}",
                        cat[i].0, cat[j].0, cat[k].0
                    );
                    // composed witnesses satisfy the implication pointwise
                    let th1 = witnesses[i][j].as_ref().unwrap();
                    let th2 = witnesses[j][k].as_ref().unwrap();
                    for x in &lassos {
                        let y = th1.replay_on_lasso(x).expect("total");
                        let z = th2.replay_on_lasso(&y).expect("total");
                        assert_eq!(
                            cat[i].1.accepts_lasso(x).unwrap(),
                            cat[k].1.accepts_lasso(&z).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn semi_linear_ordering_on_catalog_and_random_automata() {
    let mut all: Vec<OmegaAutomaton> = catalog_list().into_iter().map(|(_, a)| a).collect();
    let mut rng = sampling::rng(23);
    for _ in 0..50 {
        all.push(sampling::random_weak_automaton(&mut rng, ab(), 4));
    }
    for a in &all {
        for b in &all {
            let b_below_a = leq_w(b, a, GameMode::Wadge).unwrap().reducible;
            let na_below_b = leq_w(&complement(a), b, GameMode::Wadge).unwrap().reducible;
            assert!(b_below_a || na_below_b, "semi-linear ordering failed");
        }
    }
}

#[test]
fn self_duality_facts() {
    for n in 1..=4 {
        assert!(!is_self_dual(&sigma_complete(ab(), n)).unwrap(), "sigma{n}");
        assert!(!is_self_dual(&pi_complete(ab(), n)).unwrap(), "pi{n}");
    }
    for n in 1..=3 {
        assert!(
            is_self_dual(&delta_jr(ab(), n).unwrap()).unwrap(),
            "deltajr{n}"
        );
    }
    // joining a set with its complement always yields a self-dual set
    let a = sigma_complete(ab(), 2);
    let joined = match join(&[SetOrPair::Set(a.clone()), SetOrPair::Set(complement(&a))]).unwrap() {
        SetOrPair::Set(s) => s,
        SetOrPair::Pair(_) => unreachable!(),
    };
    assert!(is_self_dual(&joined).unwrap());
    // the full space does not even reduce to its complement's side
    let full = constant_automaton(ab(), true);
    assert!(!is_self_dual(&full).unwrap());
    assert!(
        !leq_w(&full, &constant_automaton(ab(), false), GameMode::Wadge)
            .unwrap()
            .reducible
    );
}

#[test]
fn join_and_shift_laws() {
    let a = sigma_complete(ab(), 1);
    // join of one component is the zero-shift
    let j = match join(&[SetOrPair::Set(a.clone())]).unwrap() {
        SetOrPair::Set(s) => s,
        SetOrPair::Pair(_) => unreachable!(),
    };
    let sh = shift(0, &a).unwrap();
    assert!(equivalent(&j, &sh).unwrap());

    // membership through the shift letter
    let lassos = sampling::random_lassos(31, ab(), 5, 200);
    for w in &lassos {
        let mut prefixed = vec![0];
        prefixed.extend_from_slice(w.prefix());
        let shifted = wadgelab::automata::LassoWord::new(prefixed, w.cycle().to_vec()).unwrap();
        assert_eq!(
            sh.accepts_lasso(&shifted).unwrap(),
            a.accepts_lasso(w).unwrap()
        );
    }

    // components embed below the join
    let b = pi_complete(ab(), 1);
    let jj = match join(&[SetOrPair::Set(a.clone()), SetOrPair::Set(b.clone())]).unwrap() {
        SetOrPair::Set(s) => s,
        SetOrPair::Pair(_) => unreachable!(),
    };
    assert!(leq_w(&a, &jj, GameMode::Wadge).unwrap().reducible);
    assert!(leq_w(&b, &jj, GameMode::Wadge).unwrap().reducible);
    assert!(is_self_dual(&jj).unwrap());

    // shifting keeps the degree for sets strictly between empty and full
    assert!(leq_w(&sh, &a, GameMode::Wadge).unwrap().reducible);
    assert!(leq_w(&a, &sh, GameMode::Wadge).unwrap().reducible);
}

#[test]
fn m_reducibility_on_families() {
    let jr2 = delta_jr(ab(), 2).unwrap();
    let ji2 = delta_ji(ab(), 2).unwrap();
    let fam_jr = decompose(&SetOrPair::Set(jr2.clone()));
    let fam_ji = decompose(&SetOrPair::Set(ji2.clone()));

    assert!(m_leq(&fam_jr, &fam_jr).unwrap().holds);
    assert!(!is_m_sigma_ji(&fam_jr).unwrap());
    assert!(is_m_sigma_ji(&fam_ji).unwrap());
    // the join-reducible family sits strictly below its shifted twin
    assert!(m_leq(&fam_jr, &fam_ji).unwrap().holds);
    assert!(!m_leq(&fam_ji, &fam_jr).unwrap().holds);

    // against a join-irreducible target, family reduction equals plain
    // reduction of the joins
    for source in [&fam_jr, &fam_ji] {
        let family_level = m_leq(source, &fam_ji).unwrap().holds;
        let joined = match join(&source.components).unwrap() {
            SetOrPair::Set(s) => s,
            SetOrPair::Pair(_) => unreachable!(),
        };
        let join_target = match join(&fam_ji.components).unwrap() {
            SetOrPair::Set(s) => s,
            SetOrPair::Pair(_) => unreachable!(),
        };
        let set_level = leq_w(&joined, &join_target, GameMode::Wadge)
            .unwrap()
            .reducible;
        assert_eq!(family_level, set_level);
    }
}

#[test]
fn m_leq_implies_reduction_of_the_joins() {
    let pairs = [
        (delta_jr(ab(), 1).unwrap(), delta_jr(ab(), 2).unwrap()),
        (delta_jr(ab(), 2).unwrap(), delta_ji(ab(), 2).unwrap()),
    ];
    for (x, y) in pairs {
        let fx = decompose(&SetOrPair::Set(x.clone()));
        let fy = decompose(&SetOrPair::Set(y.clone()));
        if m_leq(&fx, &fy).unwrap().holds {
            assert!(leq_w(&x, &y, GameMode::Wadge).unwrap().reducible);
        }
    }
}

#[test]
fn pair_reduction_basics() {
    let open = sigma_complete(ab(), 1);
    let closed = pi_complete(ab(), 1);
    let p_open = TwoBotPair::from_set(&open);
    let p_closed = TwoBotPair::from_set(&closed);
    assert!(pair_leq(&p_open, &p_open).unwrap().reducible);
    // vacuous source reduces anywhere
    let nothing = TwoBotPair::new(
        constant_automaton(ab(), false),
        complement(&constant_automaton(ab(), true)),
    )
    .unwrap();
    assert!(pair_leq(&nothing, &p_closed).unwrap().reducible);
    // open-complete against closed-complete fails as a pair
    assert!(!pair_leq(&p_open, &p_closed).unwrap().reducible);
    assert!(!pair_leq(&p_closed, &p_open).unwrap().reducible);
    // disjointness is validated
    assert!(TwoBotPair::new(open.clone(), open.clone()).is_err());
}

#[test]
fn binary_pass_encoding_keeps_binary_degrees() {
    for (name, a) in catalog_list() {
        if is_self_dual(&a).unwrap() {
            assert!(pass_encode(&a).is_err(), "{name}");
            continue;
        }
        let b = pass_encode(&a).unwrap();
        assert_eq!(b.alphabet().size(), 2);
        assert!(leq_w(&a, &b, GameMode::Wadge).unwrap().reducible, "{name}");
        assert!(leq_w(&b, &a, GameMode::Wadge).unwrap().reducible, "{name}");
    }
}

#[test]
fn separators_for_degenerate_inputs() {
    let ab = ab();
    let empty = complement(&constant_automaton(ab, true));
    let zero_tail = complement(&sigma_complete(ab, 1)); // {0^w}
                                                        // empty left side: the empty clopen set separates
    let (clopen, c) = separate_closed(&empty, &zero_tail).unwrap();
    assert!(clopen.cylinders().is_empty());
    assert!(wadgelab::automata::is_empty(&c));
    // empty right side: the full space separates
    let (clopen, c) = separate_closed(&zero_tail, &empty).unwrap();
    assert_eq!(clopen.cylinders(), &[Vec::<usize>::new()]);
    assert!(equivalent(&c, &constant_automaton(ab, true)).unwrap());
    // open inputs are rejected
    assert!(matches!(
        separate_closed(&sigma_complete(ab, 1), &empty),
        Err(wadgelab::Error::NotClosed)
    ));
    // overlapping closed inputs are rejected
    assert!(matches!(
        separate_closed(&zero_tail, &zero_tail),
        Err(wadgelab::Error::NotDisjoint)
    ));
}

#[test]
fn cross_alphabet_reduction_games_are_supported() {
    let three = Alphabet::new(3).unwrap();
    let a3 = sigma_complete(three, 1);
    let a2 = sigma_complete(ab(), 1);
    assert!(leq_w(&a3, &a2, GameMode::Wadge).unwrap().reducible);
    assert!(leq_w(&a2, &a3, GameMode::Wadge).unwrap().reducible);
}

#[test]
fn clopen_entries_sit_below_the_open_level() {
    let ji1 = delta_ji(ab(), 1).unwrap();
    assert!(
        leq_w(&ji1, &sigma_complete(ab(), 1), GameMode::Wadge)
            .unwrap()
            .reducible
    );
    assert!(
        leq_w(&ji1, &pi_complete(ab(), 1), GameMode::Wadge)
            .unwrap()
            .reducible
    );
}

#[test]
fn singleton_families_are_join_irreducible() {
    let fam =
        wadgelab::wadge::IndexedFamily::new(vec![SetOrPair::Set(sigma_complete(ab(), 1))]).unwrap();
    assert!(is_m_sigma_ji(&fam).unwrap());
    assert!(wadgelab::wadge::IndexedFamily::new(vec![]).is_err());
}

#[test]
fn passes_separate_wadge_from_lipschitz() {
    // "first two letters differ" needs one round of lookahead to reduce
    // into "first letter is 1": fine with passes, impossible without
    let differ = OmegaAutomaton::new(
        ab(),
        0,
        vec![vec![1, 2], vec![4, 3], vec![3, 4], vec![3, 3], vec![4, 4]],
        wadgelab::automata::Acceptance::Parity(vec![1, 1, 1, 0, 1]),
    )
    .unwrap();
    let cylinder = wadgelab::wadge::catalog::first_letter_cylinder(ab());
    assert!(
        leq_w(&differ, &cylinder, GameMode::Wadge)
            .unwrap()
            .reducible
    );
    assert!(
        !leq_w(&differ, &cylinder, GameMode::Lipschitz)
            .unwrap()
            .reducible
    );
    // without lookahead pressure the two modes agree
    assert!(
        leq_w(&cylinder, &cylinder, GameMode::Lipschitz)
            .unwrap()
            .reducible
    );
}
