//! Reducibility games between omega-regular sets and 2-bottom-valued pairs:
//! Wadge and Lipschitz reductions, pair reductions, joins and shifts,
//! pass-encoding onto the binary alphabet, clopen separation and the
//! canonical degree catalog.

pub mod catalog;
mod game;
mod ops;
mod pass_encode;
mod separate;
mod tracker;

pub use catalog::{catalog, CatalogEntry, CatalogFamily, DEFAULT_LEVEL_CAP};
pub use game::{
    build_reduction_game, certify_witness, leq_w, pair_leq, side_leq, GameMode, ReductionGame,
    ReductionOutcome,
};
pub use ops::{decompose, is_m_sigma_ji, is_self_dual, join, m_leq, shift, MLeqOutcome};
pub use pass_encode::pass_encode;
pub use separate::{separate_closed, ClopenSet};
pub use tracker::{Outcome, SideSpec, Tracker};

use crate::automata::{is_empty, product_combine, Alphabet, BoolOp, OmegaAutomaton};
use crate::error::{Error, Result};

/// Pair of disjoint sets over one alphabet, read as the function that is
/// 0 on `zero_part`, 1 on `one_part` and bottom elsewhere.
#[derive(Clone, Debug)]
pub struct TwoBotPair {
    zero_part: OmegaAutomaton,
    one_part: OmegaAutomaton,
}

impl TwoBotPair {
    /// Build and check disjointness via product emptiness.
    pub fn new(zero_part: OmegaAutomaton, one_part: OmegaAutomaton) -> Result<Self> {
        if zero_part.alphabet() != one_part.alphabet() {
            return Err(Error::AlphabetMismatch(
                "pair parts over different alphabets".into(),
            ));
        }
        let both = product_combine(&zero_part, &one_part, BoolOp::And)?;
        if !is_empty(&both) {
            return Err(Error::DisjointnessViolated);
        }
        Ok(TwoBotPair {
            zero_part,
            one_part,
        })
    }

    /// A set seen as the never-bottom pair (complement, set).
    pub fn from_set(a: &OmegaAutomaton) -> Self {
        TwoBotPair {
            zero_part: crate::automata::complement(a),
            one_part: a.clone(),
        }
    }

    pub fn zero_part(&self) -> &OmegaAutomaton {
        &self.zero_part
    }

    pub fn one_part(&self) -> &OmegaAutomaton {
        &self.one_part
    }

    pub fn alphabet(&self) -> Alphabet {
        self.zero_part.alphabet()
    }

    /// Dual pair: swaps the 0 and 1 values.
    pub fn negated(&self) -> TwoBotPair {
        TwoBotPair {
            zero_part: self.one_part.clone(),
            one_part: self.zero_part.clone(),
        }
    }
}

/// Plain set or proper pair; what the join and the catalog traffic in.
#[derive(Clone, Debug)]
pub enum SetOrPair {
    Set(OmegaAutomaton),
    Pair(TwoBotPair),
}

impl SetOrPair {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            SetOrPair::Set(a) => a.alphabet(),
            SetOrPair::Pair(p) => p.alphabet(),
        }
    }

    pub fn spec(&self) -> SideSpec<'_> {
        match self {
            SetOrPair::Set(a) => SideSpec::Set(a),
            SetOrPair::Pair(p) => SideSpec::Pair(p),
        }
    }
}

/// Finite family indexed by the first letter.
#[derive(Clone, Debug)]
pub struct IndexedFamily {
    pub components: Vec<SetOrPair>,
}

impl IndexedFamily {
    pub fn new(components: Vec<SetOrPair>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyJoin);
        }
        let alphabet = components[0].alphabet();
        if components.iter().any(|c| c.alphabet() != alphabet) {
            return Err(Error::AlphabetMismatch(
                "family components over different alphabets".into(),
            ));
        }
        Ok(IndexedFamily { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}
