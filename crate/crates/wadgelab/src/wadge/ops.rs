use super::game::{side_leq, GameMode, ReductionOutcome};
use super::{IndexedFamily, SetOrPair, TwoBotPair};
use crate::automata::{complement, Acceptance, Alphabet, Letter, OmegaAutomaton, StateId};
use crate::error::{Error, Result};
use crate::games::MealyStrategy;

/// First-letter join of plain sets: a fresh initial state dispatches letter
/// `i` to component `i`; unused letters and letters beyond the component
/// count reject.
fn join_sets(parts: &[&OmegaAutomaton]) -> Result<OmegaAutomaton> {
    if parts.is_empty() {
        return Err(Error::EmptyJoin);
    }
    let k_in = parts[0].alphabet().size();
    if parts.iter().any(|p| p.alphabet().size() != k_in) {
        return Err(Error::AlphabetMismatch(
            "join components over different alphabets".into(),
        ));
    }
    let k = k_in.max(parts.len());
    let alphabet = Alphabet::new(k)?;

    // layout: 0 = dispatch, 1 = rejecting sink, then the components
    let mut delta: Vec<Vec<StateId>> = vec![Vec::new(), vec![1; k]];
    let mut prios: Vec<usize> = vec![1, 1];
    let mut offsets = Vec::with_capacity(parts.len());
    for part in parts {
        let off = delta.len();
        offsets.push(off);
        for s in 0..part.state_count() {
            let mut row: Vec<StateId> = (0..k_in).map(|a| part.step(s, a) + off).collect();
            row.resize(k, 1);
            delta.push(row);
            prios.push(part.priorities()[s]);
        }
    }
    let dispatch: Vec<StateId> = (0..k)
        .map(|a| {
            if a < parts.len() {
                offsets[a] + parts[a].initial()
            } else {
                1
            }
        })
        .collect();
    delta[0] = dispatch;
    OmegaAutomaton::new(alphabet, 0, delta, Acceptance::Parity(prios))
}

/// Join of sets or pairs; any pair among the parts promotes sets to their
/// never-bottom pair form.
pub fn join(parts: &[SetOrPair]) -> Result<SetOrPair> {
    if parts.is_empty() {
        return Err(Error::EmptyJoin);
    }
    if parts.iter().all(|p| matches!(p, SetOrPair::Set(_))) {
        let sets: Vec<&OmegaAutomaton> = parts
            .iter()
            .map(|p| match p {
                SetOrPair::Set(a) => a,
                SetOrPair::Pair(_) => unreachable!(),
            })
            .collect();
        return Ok(SetOrPair::Set(join_sets(&sets)?));
    }
    let pairs: Vec<TwoBotPair> = parts
        .iter()
        .map(|p| match p {
            SetOrPair::Set(a) => TwoBotPair::from_set(a),
            SetOrPair::Pair(q) => q.clone(),
        })
        .collect();
    let zeros: Vec<&OmegaAutomaton> = pairs.iter().map(|p| p.zero_part()).collect();
    let ones: Vec<&OmegaAutomaton> = pairs.iter().map(|p| p.one_part()).collect();
    Ok(SetOrPair::Pair(TwoBotPair::new(
        join_sets(&zeros)?,
        join_sets(&ones)?,
    )?))
}

/// `shift(a, A)`: membership of `a . X` iff `X` in `A`; other first letters
/// are out.
pub fn shift(letter: Letter, a: &OmegaAutomaton) -> Result<OmegaAutomaton> {
    let k = a.alphabet().size();
    if letter >= k {
        return Err(Error::AlphabetMismatch(format!(
            "shift letter {letter} outside alphabet {k}"
        )));
    }
    let mut delta: Vec<Vec<StateId>> = vec![Vec::new(), vec![1; k]];
    let mut prios = vec![1usize, 1];
    let off = 2;
    for s in 0..a.state_count() {
        delta.push((0..k).map(|x| a.step(s, x) + off).collect());
        prios.push(a.priorities()[s]);
    }
    delta[0] = (0..k)
        .map(|x| if x == letter { a.initial() + off } else { 1 })
        .collect();
    OmegaAutomaton::new(a.alphabet(), 0, delta, Acceptance::Parity(prios))
}

/// First-letter decomposition: component `a` is the input re-rooted past the
/// letter `a`.
pub fn decompose(obj: &SetOrPair) -> IndexedFamily {
    let k = obj.alphabet().size();
    let components = (0..k)
        .map(|a| match obj {
            SetOrPair::Set(x) => SetOrPair::Set(x.rerooted(x.step(x.initial(), a))),
            SetOrPair::Pair(p) => {
                let z = p.zero_part();
                let o = p.one_part();
                SetOrPair::Pair(TwoBotPair {
                    zero_part: z.rerooted(z.step(z.initial(), a)),
                    one_part: o.rerooted(o.step(o.initial(), a)),
                })
            }
        })
        .collect();
    IndexedFamily { components }
}

/// `A <=_w not A`, decided by the Wadge game.
pub fn is_self_dual(a: &OmegaAutomaton) -> Result<bool> {
    Ok(super::game::leq_w(a, &complement(a), GameMode::Wadge)?.reducible)
}

/// Outcome of the for-all-exists search of the m-Wadge reduction, with one
/// witness per component on success and the failing component index
/// otherwise.
#[derive(Clone, Debug)]
pub struct MLeqOutcome {
    pub holds: bool,
    /// (source component, chosen target component, duplicator witness)
    pub witnesses: Vec<(usize, usize, MealyStrategy)>,
    pub failing_component: Option<usize>,
}

/// Componentwise reducibility with per-component maps: for every component
/// of `f` some component of `g` absorbs it.
pub fn m_leq(f: &IndexedFamily, g: &IndexedFamily) -> Result<MLeqOutcome> {
    let mut witnesses = Vec::new();
    'outer: for (n, fc) in f.components.iter().enumerate() {
        for (m, gc) in g.components.iter().enumerate() {
            let out = side_leq(&fc.spec(), &gc.spec(), GameMode::Wadge)?;
            if out.reducible {
                witnesses.push((n, m, out.witness));
                continue 'outer;
            }
        }
        return Ok(MLeqOutcome {
            holds: false,
            witnesses,
            failing_component: Some(n),
        });
    }
    Ok(MLeqOutcome {
        holds: true,
        witnesses,
        failing_component: None,
    })
}

/// Some component already carries the whole join.
pub fn is_m_sigma_ji(f: &IndexedFamily) -> Result<bool> {
    let whole = join(&f.components)?;
    for fc in &f.components {
        let up: ReductionOutcome = side_leq(&whole.spec(), &fc.spec(), GameMode::Wadge)?;
        if !up.reducible {
            continue;
        }
        let down = side_leq(&fc.spec(), &whole.spec(), GameMode::Wadge)?;
        if down.reducible {
            return Ok(true);
        }
    }
    Ok(false)
}
