use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("malformed arena: {0}")]
    MalformedArena(String),
    #[error("arena too large for brute-force solving ({nodes} nodes, cap {cap})")]
    ArenaTooLarge { nodes: usize, cap: usize },
    #[error("player does not win from the start node")]
    NotWinning,
    #[error("pair parts are not disjoint")]
    DisjointnessViolated,
    #[error("join of zero components")]
    EmptyJoin,
    #[error("input is self-dual; pass encoding needs a non-self-dual set")]
    SelfDualInput,
    #[error("automaton does not recognize a closed set")]
    NotClosed,
    #[error("sets are not disjoint")]
    NotDisjoint,
    #[error("prefix search exceeded depth cap {0}")]
    DepthExceeded(usize),
    #[error("catalog level {level} outside 1..={cap}")]
    LevelOutOfRange { level: usize, cap: usize },
    #[error("derivative iteration exceeded cap {0}; the input is not a stable weak automaton")]
    RankOverflow(usize),
    #[error("inconsistent rank/type combination: alpha={alpha}, type={sided}")]
    InconsistentRankType { alpha: usize, sided: String },
    #[error("acceptance is not terminal-SCC determined: {0}")]
    NotWeaklyRepresentable(String),
    #[error("function is not {{0,1}}-valued")]
    NotBooleanValued,
    #[error("interleave weights must be strictly decreasing and positive")]
    NotDecreasing,
    #[error("automaton validation failed: {0}")]
    InvalidAutomaton(String),
    #[error("output automaton is not stable: oscillation witness exists")]
    StableViolation,
}

pub type Result<T> = std::result::Result<T, Error>;
