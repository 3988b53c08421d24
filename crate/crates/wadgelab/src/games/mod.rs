//! Finite two-player infinite-duration games with parity objectives.
//!
//! Player II wins a play iff the least priority visited infinitely often is
//! even. Arenas are immutable once built; solving is a pure function.

mod brute;
mod mealy;
mod zielonka;

pub use brute::brute_force_solve;
pub use mealy::{extract_strategy, MealyStrategy, PositionalStrategy};
pub use zielonka::solve_parity;

use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    I,
    II,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::I => Player::II,
            Player::II => Player::I,
        }
    }

    /// The player who likes this priority parity.
    pub fn of_priority(p: usize) -> Player {
        if p % 2 == 0 {
            Player::II
        } else {
            Player::I
        }
    }
}

#[derive(Clone, Debug)]
pub struct GameNode {
    pub owner: Player,
    pub priority: usize,
    pub successors: Vec<NodeId>,
}

/// Finite game graph. Every node must keep at least one successor.
#[derive(Clone, Debug, Default)]
pub struct GameArena {
    nodes: Vec<GameNode>,
}

impl GameArena {
    pub fn new(nodes: Vec<GameNode>) -> Result<Self> {
        for (v, n) in nodes.iter().enumerate() {
            if n.successors.is_empty() {
                return Err(Error::MalformedArena(format!("node {v} has no successor")));
            }
            if let Some(&t) = n.successors.iter().find(|&&t| t >= nodes.len()) {
                return Err(Error::MalformedArena(format!(
                    "edge {v} -> {t} out of range"
                )));
            }
        }
        Ok(GameArena { nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, v: NodeId) -> &GameNode {
        &self.nodes[v]
    }

    pub fn nodes(&self) -> &[GameNode] {
        &self.nodes
    }

    pub fn predecessor_lists(&self) -> Vec<Vec<NodeId>> {
        let mut preds = vec![Vec::new(); self.len()];
        for (v, n) in self.nodes.iter().enumerate() {
            for &t in &n.successors {
                preds[t].push(v);
            }
        }
        preds
    }

    /// Graphviz dump for debugging.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph arena {\n");
        for (v, n) in self.nodes.iter().enumerate() {
            let shape = match n.owner {
                Player::I => "box",
                Player::II => "ellipse",
            };
            out.push_str(&format!(
                "  n{v} [shape={shape}, label=\"{v}:{}\"];\n",
                n.priority
            ));
        }
        for (v, n) in self.nodes.iter().enumerate() {
            for &t in &n.successors {
                out.push_str(&format!("  n{v} -> n{t};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Winning regions with one positional strategy per player, each winning
/// from every node of its owner's region.
#[derive(Clone, Debug)]
pub struct Solution {
    pub winner: Vec<Player>,
    /// Chosen successor for nodes owned by the node's winner.
    pub strategy: Vec<Option<NodeId>>,
}

impl Solution {
    pub fn region(&self, player: Player) -> Vec<NodeId> {
        (0..self.winner.len())
            .filter(|&v| self.winner[v] == player)
            .collect()
    }
}

/// Restrict the winner's moves to the claimed strategy and re-solve: the
/// claimed region must survive unchanged for both players.
pub fn certify_solution(arena: &GameArena, sol: &Solution) -> bool {
    for player in [Player::I, Player::II] {
        let mut nodes = arena.nodes().to_vec();
        for (v, n) in nodes.iter_mut().enumerate() {
            if sol.winner[v] == player && n.owner == player {
                match sol.strategy[v] {
                    Some(t) => n.successors = vec![t],
                    None => return false,
                }
            }
        }
        let restricted = match GameArena::new(nodes) {
            Ok(a) => a,
            Err(_) => return false,
        };
        let re = solve_parity(&restricted).expect("restricted arena is well-formed");
        for v in 0..arena.len() {
            if sol.winner[v] == player && re.winner[v] != player {
                return false;
            }
        }
    }
    true
}
