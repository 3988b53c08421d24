use serde::{Deserialize, Serialize};

use super::derivative::{rank_chain, DerivativeChain};
use super::SidedType;
use crate::automata::{is_empty, product_combine, BoolOp, OmegaAutomaton};
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::realfun::{
    critical_pairs, high_set, level_sets, low_set, sep_function, FunctionAutomaton, ThresholdPair,
};
use crate::wadge::{decompose, m_leq, IndexedFamily, SetOrPair};

/// Derivative chain of one representative pair together with its level and
/// strict test sets.
pub struct PairAnalysis {
    pub chain: DerivativeChain,
    pub zero: OmegaAutomaton,
    pub one: OmegaAutomaton,
    /// `{f < high}`: where the left-sided containment must land.
    pub strictly_below_high: OmegaAutomaton,
    /// `{f > low}`.
    pub strictly_above_low: OmegaAutomaton,
}

/// All per-pair chains plus the rank and the sided type they induce.
pub struct FunctionAnalysis {
    pub alpha: usize,
    pub sided: SidedType,
    pub pairs: Vec<PairAnalysis>,
}

/// Evaluate the sidedness quantifiers over the representative pairs that
/// attain the rank, each test an automaton emptiness check.
pub fn analyze(f: &FunctionAutomaton) -> Result<FunctionAnalysis> {
    let mut pairs = Vec::new();
    for t in critical_pairs(f) {
        let chain = rank_chain(f, &t)?;
        let lv = level_sets(f, &t)?;
        // thresholds sit strictly inside range gaps, so the strict sets
        // coincide with the non-strict level sets at the same thresholds
        pairs.push(PairAnalysis {
            strictly_below_high: low_set(f, t.high),
            strictly_above_low: high_set(f, t.low),
            zero: lv.zero_part().clone(),
            one: lv.one_part().clone(),
            chain,
        });
    }
    let alpha = pairs.iter().map(|p| p.chain.rank()).max().unwrap();

    let attaining: Vec<&PairAnalysis> = pairs.iter().filter(|p| p.chain.rank() == alpha).collect();
    debug_assert!(!attaining.is_empty());

    let meets = |stage: &OmegaAutomaton, set: &OmegaAutomaton| -> Result<bool> {
        Ok(!is_empty(&product_combine(stage, set, BoolOp::And)?))
    };
    let contained = |stage: &OmegaAutomaton, set: &OmegaAutomaton| -> Result<bool> {
        Ok(is_empty(&product_combine(stage, set, BoolOp::Minus)?))
    };

    let mut two_sided = false;
    for p in &attaining {
        let mut all = true;
        for nu in 0..alpha {
            let stage = &p.chain.stages[nu];
            if !(meets(stage, &p.zero)? && meets(stage, &p.one)?) {
                all = false;
                break;
            }
        }
        if all {
            two_sided = true;
            break;
        }
    }

    let mut left = true;
    let mut right = true;
    for p in &attaining {
        let mut has_left = false;
        let mut has_right = false;
        for nu in 0..alpha {
            let stage = &p.chain.stages[nu];
            if !has_left && contained(stage, &p.strictly_below_high)? {
                has_left = true;
            }
            if !has_right && contained(stage, &p.strictly_above_low)? {
                has_right = true;
            }
        }
        left &= has_left;
        right &= has_right;
    }

    let sided = if two_sided {
        SidedType::T
    } else if left && right {
        SidedType::F
    } else if left {
        SidedType::L
    } else if right {
        SidedType::R
    } else {
        SidedType::O
    };
    Ok(FunctionAnalysis {
        alpha,
        sided,
        pairs,
    })
}

/// Sided type of a function; shorthand for the full analysis.
pub fn sided_type(f: &FunctionAutomaton) -> Result<SidedType> {
    Ok(analyze(f)?.sided)
}

/// Ladder rank computed from the function's own rank and type.
pub fn m_rank_of(f: &FunctionAutomaton) -> Result<usize> {
    let a = analyze(f)?;
    m_rank(a.alpha, a.sided)
}

/// Position in the rank ladder: rank 1 holds one-sided-neither and two-sided
/// functions at 0 and 1, then each higher rank contributes the incomparable
/// left/right pair, the join layer and the two-sided layer.
pub fn m_rank(alpha: usize, sided: SidedType) -> Result<usize> {
    let bad = || Error::InconsistentRankType {
        alpha,
        sided: sided.name().into(),
    };
    if alpha == 0 {
        return Err(bad());
    }
    match sided {
        SidedType::O => Ok(3 * (alpha - 1)),
        SidedType::T => Ok(3 * (alpha - 1) + 1),
        SidedType::L | SidedType::R => {
            if alpha < 2 {
                Err(bad())
            } else {
                Ok(3 * (alpha - 2) + 2)
            }
        }
        SidedType::F => Err(bad()),
    }
}

/// The rank/type decision rule: strictly smaller rank, or equal rank and
/// comparable types.
pub fn decide_m_by_rank(f: &FunctionAutomaton, g: &FunctionAutomaton) -> Result<bool> {
    let fa = analyze(f)?;
    let ga = analyze(g)?;
    Ok(fa.alpha < ga.alpha || (fa.alpha == ga.alpha && fa.sided.leq(ga.sided)))
}

/// Least catalog level whose join-irreducible witness absorbs the level-pair
/// family of `f`; games only, no derivative.
pub fn sep_rank(f: &FunctionAutomaton, cap: usize) -> Result<usize> {
    let family = sep_family(f)?;
    let binary = crate::automata::Alphabet::new(2)?;
    for level in 1..=cap {
        let e = crate::wadge::catalog::delta_ji(binary, level)?;
        let target = decompose(&SetOrPair::Set(e));
        if m_leq(&family, &target)?.holds {
            return Ok(level);
        }
    }
    Err(Error::LevelOutOfRange {
        level: cap + 1,
        cap,
    })
}

/// The level-pair family of `f` as a first-class indexed family.
pub fn sep_family(f: &FunctionAutomaton) -> Result<IndexedFamily> {
    let sep = sep_function(f)?;
    IndexedFamily::new(
        sep.pairs
            .into_iter()
            .map(|(_, pair)| SetOrPair::Pair(pair))
            .collect(),
    )
}

/// Serialized summary of one function: rank, per-pair ranks, sided type,
/// ladder rank and the game-side separation rank.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RankReport {
    pub alpha: usize,
    pub per_pair: Vec<PairRank>,
    #[serde(rename = "type")]
    pub sided: String,
    pub m_rank: usize,
    pub sep_rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairRank {
    pub p: Rat,
    pub q: Rat,
    pub rank: usize,
}

pub fn rank_report(f: &FunctionAutomaton, cap: usize) -> Result<RankReport> {
    let analysis = analyze(f)?;
    let per_pair = analysis
        .pairs
        .iter()
        .map(|p| PairRank {
            p: p.chain.pair.low,
            q: p.chain.pair.high,
            rank: p.chain.rank(),
        })
        .collect();
    Ok(RankReport {
        alpha: analysis.alpha,
        per_pair,
        sided: analysis.sided.name().into(),
        m_rank: m_rank(analysis.alpha, analysis.sided)?,
        sep_rank: sep_rank(f, cap)?,
    })
}

/// Threshold pairs of `f` attaining the rank; used by the irreducibility
/// checks.
pub fn attaining_pairs(f: &FunctionAutomaton) -> Result<Vec<ThresholdPair>> {
    let analysis = analyze(f)?;
    Ok(analysis
        .pairs
        .iter()
        .filter(|p| p.chain.rank() == analysis.alpha)
        .map(|p| p.chain.pair)
        .collect())
}
