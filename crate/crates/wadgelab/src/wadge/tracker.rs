use std::collections::HashMap;

use super::TwoBotPair;
use crate::automata::{Alphabet, LassoWord, OmegaAutomaton, StateId};
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::realfun::FunctionAutomaton;

/// Value of a 2-bottom function on one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Zero,
    One,
    Bot,
}

impl Outcome {
    /// The Plotkin order: bottom below both, 0 and 1 incomparable.
    pub fn leq(self, other: Outcome) -> bool {
        self == Outcome::Bot || self == other
    }
}

/// Deterministic run tracker with an outcome per state: the verdict of the
/// SCC in which a run settles. Built only from SCC-parity-homogeneous (weak)
/// acceptors, where that verdict is well defined.
pub struct Tracker {
    pub alphabet: Alphabet,
    pub initial: StateId,
    pub delta: Vec<Vec<StateId>>,
    pub outcome: Vec<Outcome>,
}

impl Tracker {
    pub fn states(&self) -> usize {
        self.delta.len()
    }

    fn from_set(a: &OmegaAutomaton) -> Result<Tracker> {
        let weak = a
            .weak_acceptance()
            .ok_or_else(|| Error::NotWeaklyRepresentable("set side of a reduction game".into()))?;
        Ok(Tracker {
            alphabet: a.alphabet(),
            initial: a.initial(),
            delta: a.delta().to_vec(),
            outcome: weak
                .into_iter()
                .map(|acc| if acc { Outcome::One } else { Outcome::Zero })
                .collect(),
        })
    }

    /// Product of the two parts; disjointness must have been validated, so a
    /// run settling with both parts accepting cannot happen.
    fn from_pair(p: &TwoBotPair) -> Result<Tracker> {
        let wz = p
            .zero_part()
            .weak_acceptance()
            .ok_or_else(|| Error::NotWeaklyRepresentable("zero part of a pair".into()))?;
        let wo = p
            .one_part()
            .weak_acceptance()
            .ok_or_else(|| Error::NotWeaklyRepresentable("one part of a pair".into()))?;
        let za = p.zero_part();
        let oa = p.one_part();
        let k = p.alphabet().size();

        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs: Vec<(StateId, StateId)> = Vec::new();
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        ids.insert((za.initial(), oa.initial()), 0);
        pairs.push((za.initial(), oa.initial()));
        queue.push_back(0usize);
        while let Some(id) = queue.pop_front() {
            let (s, t) = pairs[id];
            let row = (0..k)
                .map(|x| {
                    let key = (za.step(s, x), oa.step(t, x));
                    *ids.entry(key).or_insert_with(|| {
                        pairs.push(key);
                        queue.push_back(pairs.len() - 1);
                        pairs.len() - 1
                    })
                })
                .collect();
            debug_assert_eq!(delta.len(), id);
            delta.push(row);
        }
        let outcome = pairs
            .iter()
            .map(|&(s, t)| match (wz[s], wo[t]) {
                (true, false) => Outcome::Zero,
                (false, true) => Outcome::One,
                _ => Outcome::Bot,
            })
            .collect();
        Ok(Tracker {
            alphabet: p.alphabet(),
            initial: 0,
            delta,
            outcome,
        })
    }

    /// Level-pair tracker of a validated output automaton: the run's
    /// stabilized value against the two thresholds.
    fn from_level(f: &FunctionAutomaton, low: Rat, high: Rat) -> Tracker {
        let a = f.automaton();
        let outcome = a
            .outputs()
            .iter()
            .map(|&v| {
                if v <= low {
                    Outcome::Zero
                } else if v >= high {
                    Outcome::One
                } else {
                    Outcome::Bot
                }
            })
            .collect();
        Tracker {
            alphabet: a.alphabet(),
            initial: a.initial(),
            delta: a.delta().to_vec(),
            outcome,
        }
    }
}

/// One side of a reduction game: a set, a proper pair, or the level pair
/// `({f <= low}, {f >= high})` of an output automaton.
#[derive(Clone, Copy, Debug)]
pub enum SideSpec<'a> {
    Set(&'a OmegaAutomaton),
    Pair(&'a TwoBotPair),
    Level {
        fun: &'a FunctionAutomaton,
        low: Rat,
        high: Rat,
    },
}

impl<'a> SideSpec<'a> {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            SideSpec::Set(a) => a.alphabet(),
            SideSpec::Pair(p) => p.alphabet(),
            SideSpec::Level { fun, .. } => fun.automaton().alphabet(),
        }
    }

    pub fn tracker(&self) -> Result<Tracker> {
        match self {
            SideSpec::Set(a) => Tracker::from_set(a),
            SideSpec::Pair(p) => Tracker::from_pair(p),
            SideSpec::Level { fun, low, high } => Ok(Tracker::from_level(fun, *low, *high)),
        }
    }

    /// Direct semantic evaluation on a lasso, independent of the tracker.
    pub fn outcome_of(&self, w: &LassoWord) -> Result<Outcome> {
        match self {
            SideSpec::Set(a) => Ok(if a.accepts_lasso(w)? {
                Outcome::One
            } else {
                Outcome::Zero
            }),
            SideSpec::Pair(p) => {
                let z = p.zero_part().accepts_lasso(w)?;
                let o = p.one_part().accepts_lasso(w)?;
                match (z, o) {
                    (true, true) => Err(Error::DisjointnessViolated),
                    (true, false) => Ok(Outcome::Zero),
                    (false, true) => Ok(Outcome::One),
                    (false, false) => Ok(Outcome::Bot),
                }
            }
            SideSpec::Level { fun, low, high } => {
                let v = fun.eval(w)?;
                Ok(if v <= *low {
                    Outcome::Zero
                } else if v >= *high {
                    Outcome::One
                } else {
                    Outcome::Bot
                })
            }
        }
    }
}
