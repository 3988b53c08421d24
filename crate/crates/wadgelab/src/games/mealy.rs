use serde::{Deserialize, Serialize};

use super::{GameArena, NodeId, Player};
use crate::automata::{LassoWord, Letter};
use crate::error::{Error, Result};

/// Finite-memory strategy for a letter game, serialized as the certificate
/// format `{player, memory, initial, update, output}`.
///
/// The duplicator (player II) reads one input letter per round and answers
/// with a letter or a pass. The challenger (player I) emits a letter each
/// round before seeing the response code (0 = pass, b+1 = letter b).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "player")]
pub enum MealyStrategy {
    #[serde(rename = "II")]
    Duplicator {
        memory: usize,
        initial: usize,
        /// `update[mem][input letter] -> memory`
        update: Vec<Vec<usize>>,
        /// `output[mem][input letter] -> emitted letter`, null = pass
        output: Vec<Vec<Option<Letter>>>,
    },
    #[serde(rename = "I")]
    Challenger {
        memory: usize,
        initial: usize,
        /// `update[mem][response code] -> memory`
        update: Vec<Vec<usize>>,
        /// `output[mem] -> letter played this round`
        output: Vec<Letter>,
    },
}

impl MealyStrategy {
    pub fn memory_count(&self) -> usize {
        match self {
            MealyStrategy::Duplicator { memory, .. } => *memory,
            MealyStrategy::Challenger { memory, .. } => *memory,
        }
    }

    /// Replay a duplicator strategy against an ultimately periodic input.
    ///
    /// The produced output is again ultimately periodic; `None` means the
    /// strategy starves (eventually passes forever), which no winning
    /// strategy does.
    pub fn replay_on_lasso(&self, input: &LassoWord) -> Option<LassoWord> {
        let MealyStrategy::Duplicator {
            initial,
            update,
            output,
            ..
        } = self
        else {
            return None;
        };
        let plen = input.prefix().len();
        let clen = input.cycle().len();
        let mut mem = *initial;
        let mut emitted: Vec<Letter> = Vec::new();
        // first emission index per in-cycle state (mem, cycle position)
        let mut seen: std::collections::HashMap<(usize, usize), usize> =
            std::collections::HashMap::new();
        let mut i = 0usize;
        loop {
            if i >= plen {
                let key = (mem, (i - plen) % clen);
                if let Some(&start) = seen.get(&key) {
                    let cycle: Vec<Letter> = emitted[start..].to_vec();
                    if cycle.is_empty() {
                        return None;
                    }
                    let prefix = emitted[..start].to_vec();
                    return Some(LassoWord::new(prefix, cycle).unwrap());
                }
                seen.insert(key, emitted.len());
            }
            let a = input.at(i);
            if let Some(b) = output[mem][a] {
                emitted.push(b);
            }
            mem = update[mem][a];
            i += 1;
        }
    }
}

/// Positional strategy on an arena, replayable against arbitrary opponent
/// choices.
#[derive(Clone, Debug)]
pub struct PositionalStrategy {
    pub player: Player,
    pub start: NodeId,
    pub choice: Vec<Option<NodeId>>,
    pub region: Vec<bool>,
}

impl PositionalStrategy {
    /// Walk `steps` moves, the opponent resolving its choices by the given
    /// picks (taken modulo the number of successors). Returns the visited
    /// nodes.
    pub fn replay(
        &self,
        arena: &GameArena,
        opponent_picks: impl IntoIterator<Item = usize>,
        steps: usize,
    ) -> Vec<NodeId> {
        let mut picks = opponent_picks.into_iter();
        let mut v = self.start;
        let mut visited = vec![v];
        for _ in 0..steps {
            let node = arena.node(v);
            v = if node.owner == self.player {
                self.choice[v].expect("strategy defined on own winning nodes")
            } else {
                let i = picks.next().unwrap_or(0) % node.successors.len();
                node.successors[i]
            };
            visited.push(v);
        }
        visited
    }
}

/// Positional strategy of `player` from `start`, or `NotWinning`.
pub fn extract_strategy(
    arena: &GameArena,
    start: NodeId,
    player: Player,
) -> Result<PositionalStrategy> {
    let sol = super::solve_parity(arena)?;
    if sol.winner[start] != player {
        return Err(Error::NotWinning);
    }
    let region: Vec<bool> = (0..arena.len()).map(|v| sol.winner[v] == player).collect();
    Ok(PositionalStrategy {
        player,
        start,
        choice: sol.strategy,
        region,
    })
}
