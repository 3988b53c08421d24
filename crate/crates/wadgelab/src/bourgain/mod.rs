//! Symbolic iterated derivative of finite-range functions, the rank and
//! sided-type classification it induces, and the rank-based reducibility
//! decision cross-checked against the game pipeline.

mod classify;
mod derivative;

pub use classify::{
    analyze, attaining_pairs, decide_m_by_rank, m_rank, m_rank_of, rank_report, sep_family,
    sep_rank, sided_type, FunctionAnalysis, PairAnalysis, PairRank, RankReport,
};
pub use derivative::{bourgain_rank, derivative_step, point_rank, rank_chain, DerivativeChain};

use serde::{Deserialize, Serialize};

/// Five-way classification refining the rank, ordered
/// `F < L, R < O < T` with `L` and `R` incomparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SidedType {
    F,
    L,
    R,
    O,
    T,
}

impl SidedType {
    pub fn leq(self, other: SidedType) -> bool {
        use SidedType::*;
        match (self, other) {
            (a, b) if a == b => true,
            (F, _) => true,
            (_, T) => true,
            (L, O) | (R, O) => true,
            _ => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SidedType::F => "f",
            SidedType::L => "l",
            SidedType::R => "r",
            SidedType::O => "o",
            SidedType::T => "t",
        }
    }
}
