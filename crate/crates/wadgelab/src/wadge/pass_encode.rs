use super::game::{build_reduction_game, GameMode};
use super::tracker::SideSpec;
use crate::automata::{complement, Acceptance, Alphabet, OmegaAutomaton, StateId};
use crate::error::{Error, Result};
use crate::games::MealyStrategy;

/// Binary-alphabet set of the same Wadge degree as a non-self-dual input.
///
/// The challenger's winning strategy in the game for `not A <= A` spells, for
/// every response stream, a word whose `A`-membership tracks the stripped
/// response word's. Composing that strategy with the unary block decoding
/// `0^n 1 -> n passes, then letter min(n, k-1)` yields a binary set of the
/// same degree; both game directions are re-checked by the caller.
pub fn pass_encode(a: &OmegaAutomaton) -> Result<OmegaAutomaton> {
    if super::ops::is_self_dual(a)? {
        return Err(Error::SelfDualInput);
    }
    let k = a.alphabet().size();
    let not_a = complement(a);
    let f = SideSpec::Set(&not_a).tracker()?;
    let g = SideSpec::Set(a).tracker()?;
    let ng = g.states();
    let game = build_reduction_game(&f, &g, GameMode::Wadge);
    let out = game.solve()?;
    let MealyStrategy::Challenger {
        initial,
        update,
        memory,
        ..
    } = out.witness
    else {
        return Err(Error::SelfDualInput);
    };

    // the challenger memory carries the run of A over its own emissions in
    // its first component; each input bit is one game round
    let prios = a.priorities();
    let state = |m: usize, c: usize| m * k + c;
    let mut delta: Vec<Vec<StateId>> = Vec::with_capacity(memory * k);
    let mut out_prios: Vec<usize> = Vec::with_capacity(memory * k);
    for m in 0..memory {
        let a_state = m / ng;
        for c in 0..k {
            let on_zero = state(update[m][0], (c + 1).min(k - 1));
            let decoded = c.min(k - 1);
            let on_one = state(update[m][decoded + 1], 0);
            delta.push(vec![on_zero, on_one]);
            out_prios.push(prios[a_state]);
        }
    }
    OmegaAutomaton::new(
        Alphabet::new(2)?,
        state(initial, 0),
        delta,
        Acceptance::Parity(out_prios),
    )
}
