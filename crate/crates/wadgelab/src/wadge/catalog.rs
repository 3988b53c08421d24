use super::ops::{join, shift};
use super::SetOrPair;
use crate::automata::{complement, Acceptance, Alphabet, OmegaAutomaton, StateId};
use crate::error::{Error, Result};

/// Default cap on catalog levels; the CLI can override it through
/// `WADGE_LAB_CAP`.
pub const DEFAULT_LEVEL_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogFamily {
    SigmaComplete,
    PiComplete,
    DeltaJr,
    DeltaJi,
    E,
}

impl CatalogFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogFamily::SigmaComplete => "sigma",
            CatalogFamily::PiComplete => "pi",
            CatalogFamily::DeltaJr => "delta-jr",
            CatalogFamily::DeltaJi => "delta-ji",
            CatalogFamily::E => "e",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: CatalogFamily,
    pub level: usize,
    pub automaton: OmegaAutomaton,
}

/// Count of letter-1 occurrences, capped at `n`; the canonical open sets
/// "at least k ones" and their difference chains come from this one counter.
fn one_counter(alphabet: Alphabet, n: usize, accept: impl Fn(usize) -> bool) -> OmegaAutomaton {
    let k = alphabet.size();
    let delta: Vec<Vec<StateId>> = (0..=n)
        .map(|c| {
            (0..k)
                .map(|x| if x == 1 { (c + 1).min(n) } else { c })
                .collect()
        })
        .collect();
    let prios = (0..=n).map(|c| usize::from(!accept(c))).collect();
    OmegaAutomaton::new(alphabet, 0, delta, Acceptance::Parity(prios)).unwrap()
}

/// Difference-chain set of level `n` over the opens U_k = "at least k ones":
/// a word is in iff its capped one-count is odd. Level 1 is "at least one 1",
/// level 2 "exactly one 1", and so on.
pub fn sigma_complete(alphabet: Alphabet, n: usize) -> OmegaAutomaton {
    one_counter(alphabet, n, |c| c >= 1 && c % 2 == 1)
}

pub fn pi_complete(alphabet: Alphabet, n: usize) -> OmegaAutomaton {
    complement(&sigma_complete(alphabet, n))
}

/// The closed set "at most k ones".
pub fn at_most_ones(alphabet: Alphabet, k: usize) -> OmegaAutomaton {
    one_counter(alphabet, k + 1, |c| c <= k)
}

/// Self-dual join at level `n`: the two sides one level down, glued by the
/// first letter. Level 1 joins a proper clopen set with its complement.
pub fn delta_jr(alphabet: Alphabet, n: usize) -> Result<OmegaAutomaton> {
    let (left, right) = if n == 1 {
        let c = first_letter_cylinder(alphabet);
        let nc = complement(&c);
        (c, nc)
    } else {
        (
            sigma_complete(alphabet, n - 1),
            pi_complete(alphabet, n - 1),
        )
    };
    match join(&[SetOrPair::Set(left), SetOrPair::Set(right)])? {
        SetOrPair::Set(a) => Ok(a),
        SetOrPair::Pair(_) => unreachable!("join of sets is a set"),
    }
}

/// The join-irreducible twin of `delta_jr`: the same set pushed behind one
/// letter.
pub fn delta_ji(alphabet: Alphabet, n: usize) -> Result<OmegaAutomaton> {
    shift(0, &delta_jr(alphabet, n)?)
}

/// Words whose first letter is 1: a proper clopen set.
pub fn first_letter_cylinder(alphabet: Alphabet) -> OmegaAutomaton {
    let k = alphabet.size();
    let mut delta = vec![Vec::new(), vec![1; k], vec![2; k]];
    delta[0] = (0..k).map(|x| if x == 1 { 1 } else { 2 }).collect();
    OmegaAutomaton::new(alphabet, 0, delta, Acceptance::Parity(vec![1, 0, 1])).unwrap()
}

/// Deterministic generator for the canonical degree witnesses. Degree claims
/// are certified by games in the acceptance suite, not assumed here.
pub fn catalog(
    family: CatalogFamily,
    level: usize,
    alphabet: Alphabet,
    cap: usize,
) -> Result<CatalogEntry> {
    if level == 0 || level > cap {
        return Err(Error::LevelOutOfRange { level, cap });
    }
    let automaton = match family {
        CatalogFamily::SigmaComplete => sigma_complete(alphabet, level),
        CatalogFamily::PiComplete => pi_complete(alphabet, level),
        CatalogFamily::DeltaJr => delta_jr(alphabet, level)?,
        CatalogFamily::DeltaJi | CatalogFamily::E => delta_ji(alphabet, level)?,
    };
    Ok(CatalogEntry {
        family,
        level,
        automaton,
    })
}
