use crate::automata::{
    constant_automaton, is_empty, is_safety_language, minimize_safety, product_combine, BoolOp,
    LassoWord, OmegaAutomaton,
};
use crate::error::{Error, Result};
use crate::realfun::{critical_pairs, high_set, low_set, FunctionAutomaton, ThresholdPair};

/// Iterated derivative stages for one threshold pair. Every stage is a
/// closed set; the chain strictly decreases and ends at the first empty
/// stage, whose index is the rank.
#[derive(Clone, Debug)]
pub struct DerivativeChain {
    pub pair: ThresholdPair,
    pub stages: Vec<OmegaAutomaton>,
}

impl DerivativeChain {
    pub fn rank(&self) -> usize {
        self.stages.len() - 1
    }
}

const RANK_CAP: usize = 64;

/// One derivative: the points of `P` where both level sets of `f` cluster,
/// `P`, `cl(P and {f <= low})` and `cl(P and {f >= high})` intersected.
///
/// For finite-range functions this equals the envelope formulation: an
/// infimum over a neighborhood is attained among finitely many values.
pub fn derivative_step(
    f: &FunctionAutomaton,
    t: &ThresholdPair,
    stage: &OmegaAutomaton,
) -> Result<OmegaAutomaton> {
    if !is_safety_language(stage)? {
        return Err(Error::NotClosed);
    }
    derivative_step_unchecked(f, t, stage)
}

fn derivative_step_unchecked(
    f: &FunctionAutomaton,
    t: &ThresholdPair,
    stage: &OmegaAutomaton,
) -> Result<OmegaAutomaton> {
    let low_cluster = minimize_safety(&product_combine(stage, &low_set(f, t.low), BoolOp::And)?);
    let high_cluster = minimize_safety(&product_combine(stage, &high_set(f, t.high), BoolOp::And)?);
    let both = product_combine(&low_cluster, &high_cluster, BoolOp::And)?;
    Ok(minimize_safety(&product_combine(
        stage,
        &both,
        BoolOp::And,
    )?))
}

/// Iterate from the full space until empty; stages are re-minimized at each
/// step, so the cap only trips on corrupted representations.
pub fn rank_chain(f: &FunctionAutomaton, t: &ThresholdPair) -> Result<DerivativeChain> {
    let full = constant_automaton(f.automaton().alphabet(), true);
    let mut stages = vec![minimize_safety(&full)];
    loop {
        let last = stages.last().unwrap();
        if is_empty(last) {
            return Ok(DerivativeChain { pair: *t, stages });
        }
        if stages.len() > RANK_CAP {
            return Err(Error::RankOverflow(RANK_CAP));
        }
        let next = derivative_step_unchecked(f, t, last)?;
        stages.push(next);
    }
}

/// Largest per-pair rank over the representative threshold pairs.
pub fn bourgain_rank(f: &FunctionAutomaton) -> Result<usize> {
    let mut best = 0;
    for t in critical_pairs(f) {
        best = best.max(rank_chain(f, &t)?.rank());
    }
    Ok(best)
}

/// Least stage index excluding the point.
pub fn point_rank(f: &FunctionAutomaton, t: &ThresholdPair, w: &LassoWord) -> Result<usize> {
    let chain = rank_chain(f, t)?;
    for (i, stage) in chain.stages.iter().enumerate() {
        if !stage.accepts_lasso(w)? {
            return Ok(i);
        }
    }
    unreachable!("the final stage is empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::rational::Rat;
    use crate::realfun::{char_fun, constant_fn, first_letter_fn};
    use crate::wadge::catalog::sigma_complete;

    fn ab() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn mid_pair() -> ThresholdPair {
        ThresholdPair::new(Rat::new(1, 3), Rat::new(2, 3))
    }

    #[test]
    fn constant_function_dies_in_one_step() {
        let c = constant_fn(ab(), Rat::new(1, 2));
        for t in critical_pairs(&c) {
            assert_eq!(rank_chain(&c, &t).unwrap().rank(), 1);
        }
        assert_eq!(bourgain_rank(&c).unwrap(), 1);
    }

    #[test]
    fn open_indicator_peaks_at_the_zero_tail() {
        let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
        let chain = rank_chain(&f, &mid_pair()).unwrap();
        assert_eq!(chain.rank(), 2);
        // the surviving middle stage is exactly {0^w}
        let zero_tail = crate::automata::complement(&sigma_complete(ab(), 1));
        assert!(crate::automata::equivalent(&chain.stages[1], &zero_tail).unwrap());
        assert_eq!(bourgain_rank(&f).unwrap(), 2);
    }

    #[test]
    fn continuous_functions_have_rank_one() {
        assert_eq!(bourgain_rank(&first_letter_fn()).unwrap(), 1);
    }

    #[test]
    fn point_ranks_split_the_open_indicator() {
        let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
        let t = mid_pair();
        let zero_tail = LassoWord::new(vec![], vec![0]).unwrap();
        let one_then = LassoWord::new(vec![1], vec![0]).unwrap();
        assert_eq!(point_rank(&f, &t, &zero_tail).unwrap(), 2);
        assert_eq!(point_rank(&f, &t, &one_then).unwrap(), 1);
    }

    #[test]
    fn derivative_rejects_non_closed_stage() {
        let f = char_fun(&sigma_complete(ab(), 1)).unwrap();
        // "at least one 1" is open and not closed
        let stage = sigma_complete(ab(), 1);
        assert!(matches!(
            derivative_step(&f, &mid_pair(), &stage),
            Err(Error::NotClosed)
        ));
    }

    #[test]
    fn derivative_is_contracting() {
        let f = crate::realfun::staircase_fn();
        for t in critical_pairs(&f) {
            let chain = rank_chain(&f, &t).unwrap();
            for win in chain.stages.windows(2) {
                let diff = product_combine(&win[1], &win[0], BoolOp::Minus).unwrap();
                assert!(is_empty(&diff));
            }
        }
    }
}
