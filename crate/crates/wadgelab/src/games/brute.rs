use super::{GameArena, NodeId, Player};
use crate::error::{Error, Result};

const NODE_CAP: usize = 12;

/// Independent oracle: enumerate all positional strategies of each player and
/// check the cycles of every induced one-player graph. Sound and complete by
/// positional determinacy of parity games.
pub fn brute_force_solve(arena: &GameArena) -> Result<Vec<Player>> {
    if arena.len() > NODE_CAP {
        return Err(Error::ArenaTooLarge {
            nodes: arena.len(),
            cap: NODE_CAP,
        });
    }
    let win_ii = winnable_by(arena, Player::II);
    let win_i = winnable_by(arena, Player::I);
    for v in 0..arena.len() {
        if win_ii[v] == win_i[v] {
            return Err(Error::MalformedArena(format!(
                "brute force: node {v} won by both or neither player"
            )));
        }
    }
    Ok((0..arena.len())
        .map(|v| if win_ii[v] { Player::II } else { Player::I })
        .collect())
}

/// Nodes from which `player` has some winning positional strategy.
fn winnable_by(arena: &GameArena, player: Player) -> Vec<bool> {
    let own: Vec<NodeId> = (0..arena.len())
        .filter(|&v| arena.node(v).owner == player)
        .collect();
    let mut choice = vec![0usize; own.len()];
    let mut winnable = vec![false; arena.len()];
    loop {
        let wins = strategy_wins_from(arena, player, &own, &choice);
        for v in 0..arena.len() {
            winnable[v] = winnable[v] || wins[v];
        }
        // odometer over successor choices
        let mut i = 0;
        loop {
            if i == own.len() {
                return winnable;
            }
            choice[i] += 1;
            if choice[i] < arena.node(own[i]).successors.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// With `player`'s moves fixed, the opponent controls everything: `player`
/// wins from v iff no reachable cycle in the induced graph has the opponent's
/// parity as its least priority.
fn strategy_wins_from(
    arena: &GameArena,
    player: Player,
    own: &[NodeId],
    choice: &[usize],
) -> Vec<bool> {
    let n = arena.len();
    let succ: Vec<Vec<NodeId>> = (0..n)
        .map(|v| {
            if let Some(i) = own.iter().position(|&u| u == v) {
                vec![arena.node(v).successors[choice[i]]]
            } else {
                arena.node(v).successors.clone()
            }
        })
        .collect();

    // nodes on a cycle whose least priority favors the opponent
    let bad_parity = match player {
        Player::II => 1,
        Player::I => 0,
    };
    let mut bad_seed = vec![false; n];
    for p in 0..=max_priority(arena) {
        if p % 2 != bad_parity {
            continue;
        }
        let keep: Vec<bool> = (0..n).map(|v| arena.node(v).priority >= p).collect();
        // mutual reachability inside the kept subgraph via simple DFS pairs
        for v in 0..n {
            if !keep[v] || arena.node(v).priority != p || bad_seed[v] {
                continue;
            }
            if on_cycle(v, &succ, &keep) {
                bad_seed[v] = true;
            }
        }
    }
    // opponent steers into any reachable bad cycle
    let mut bad_reaches = bad_seed.clone();
    loop {
        let mut changed = false;
        for v in 0..n {
            if bad_reaches[v] {
                continue;
            }
            if succ[v].iter().any(|&t| bad_reaches[t]) {
                bad_reaches[v] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n).map(|v| !bad_reaches[v]).collect()
}

fn max_priority(arena: &GameArena) -> usize {
    (0..arena.len())
        .map(|v| arena.node(v).priority)
        .max()
        .unwrap_or(0)
}

/// Cycle through `v` staying in `keep`, in the graph `succ`.
fn on_cycle(v: NodeId, succ: &[Vec<NodeId>], keep: &[bool]) -> bool {
    let mut seen = vec![false; succ.len()];
    let mut stack: Vec<NodeId> = succ[v].iter().copied().filter(|&t| keep[t]).collect();
    while let Some(u) = stack.pop() {
        if u == v {
            return true;
        }
        if seen[u] {
            continue;
        }
        seen[u] = true;
        for &t in &succ[u] {
            if keep[t] {
                stack.push(t);
            }
        }
    }
    false
}
