use super::{GameArena, NodeId, Player, Solution};
use crate::error::Result;

/// Classical recursive attractor decomposition, with positional strategies
/// recovered on the way back up.
pub fn solve_parity(arena: &GameArena) -> Result<Solution> {
    let preds = arena.predecessor_lists();
    let mut ctx = Ctx {
        arena,
        preds,
        winner: vec![Player::I; arena.len()],
        strategy: vec![None; arena.len()],
    };
    let all: Vec<bool> = vec![true; arena.len()];
    ctx.solve(&all);
    Ok(Solution {
        winner: ctx.winner,
        strategy: ctx.strategy,
    })
}

struct Ctx<'a> {
    arena: &'a GameArena,
    preds: Vec<Vec<NodeId>>,
    winner: Vec<Player>,
    strategy: Vec<Option<NodeId>>,
}

impl Ctx<'_> {
    /// Solve the subgame induced by `alive`, writing winners and strategies
    /// for alive nodes. Every subgame reached here has no dead ends.
    fn solve(&mut self, alive: &[bool]) {
        let n = self.arena.len();
        let min_prio = (0..n)
            .filter(|&v| alive[v])
            .map(|v| self.arena.node(v).priority)
            .min();
        let Some(p) = min_prio else {
            return;
        };
        let favored = Player::of_priority(p);

        let targets: Vec<NodeId> = (0..n)
            .filter(|&v| alive[v] && self.arena.node(v).priority == p)
            .collect();
        let (attr, attr_strategy) = self.attractor(alive, favored, &targets);

        let mut rest = alive.to_vec();
        for (v, in_attr) in attr.iter().enumerate() {
            if *in_attr {
                rest[v] = false;
            }
        }
        self.solve(&rest);

        let opp = favored.opponent();
        let opp_region: Vec<NodeId> = (0..n)
            .filter(|&v| rest[v] && self.winner[v] == opp)
            .collect();

        if opp_region.is_empty() {
            // the favored player wins the whole subgame: attracted plays
            // revisit priority p forever or drift into the solved rest
            for v in 0..n {
                if !alive[v] || !attr[v] {
                    continue;
                }
                self.winner[v] = favored;
                if self.arena.node(v).owner == favored {
                    self.strategy[v] = attr_strategy[v].or_else(|| {
                        self.arena
                            .node(v)
                            .successors
                            .iter()
                            .copied()
                            .find(|&t| alive[t])
                    });
                }
            }
            return;
        }

        let mut in_opp_region = vec![false; n];
        for &v in &opp_region {
            in_opp_region[v] = true;
        }
        let (opp_attr, opp_attr_strategy) = self.attractor(alive, opp, &opp_region);
        let mut rest2 = alive.to_vec();
        for (v, in_attr) in opp_attr.iter().enumerate() {
            if *in_attr {
                rest2[v] = false;
            }
        }
        self.solve(&rest2);
        for v in 0..n {
            if !alive[v] || !opp_attr[v] {
                continue;
            }
            self.winner[v] = opp;
            // inside the established sub-region the recursive strategy
            // stands; elsewhere attract toward it
            if self.arena.node(v).owner == opp && !in_opp_region[v] {
                self.strategy[v] = opp_attr_strategy[v];
            }
        }
    }

    /// Player `p`-attractor of `targets` inside `alive`, with the attractor
    /// strategy for `p`-owned nodes pulled in along the way.
    fn attractor(
        &self,
        alive: &[bool],
        p: Player,
        targets: &[NodeId],
    ) -> (Vec<bool>, Vec<Option<NodeId>>) {
        let n = self.arena.len();
        let mut inside = vec![false; n];
        let mut strategy: Vec<Option<NodeId>> = vec![None; n];
        let mut out_degree: Vec<usize> = (0..n)
            .map(|v| {
                self.arena
                    .node(v)
                    .successors
                    .iter()
                    .filter(|&&t| alive[t])
                    .count()
            })
            .collect();
        let mut queue: std::collections::VecDeque<NodeId> = Default::default();
        for &v in targets {
            if alive[v] && !inside[v] {
                inside[v] = true;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &u in &self.preds[v] {
                if !alive[u] || inside[u] {
                    continue;
                }
                let node = self.arena.node(u);
                if node.owner == p {
                    inside[u] = true;
                    strategy[u] = Some(v);
                    queue.push_back(u);
                } else {
                    out_degree[u] -= 1;
                    if out_degree[u] == 0 {
                        inside[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        (inside, strategy)
    }
}
