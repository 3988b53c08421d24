use super::FunctionAutomaton;
use crate::automata::{Acceptance, Alphabet, OmegaAutomaton, StateId};
use crate::error::{Error, Result};
use crate::rational::Rat;

pub fn constant_fn(alphabet: Alphabet, value: Rat) -> FunctionAutomaton {
    let a = OmegaAutomaton::new(
        alphabet,
        0,
        vec![vec![0; alphabet.size()]],
        Acceptance::WeakOutput(vec![value]),
    )
    .unwrap();
    FunctionAutomaton::new(a).unwrap()
}

/// Indicator of a terminal-SCC-determined set: 1 on accepting components,
/// 0 elsewhere. A genuinely Buechi condition has no such indicator.
pub fn char_fun(a: &OmegaAutomaton) -> Result<FunctionAutomaton> {
    let weak = a
        .weak_acceptance()
        .ok_or_else(|| Error::NotWeaklyRepresentable("char_fun".into()))?;
    let outputs = weak
        .into_iter()
        .map(|acc| if acc { Rat::one() } else { Rat::zero() })
        .collect();
    let out = OmegaAutomaton::new(
        a.alphabet(),
        a.initial(),
        a.delta().to_vec(),
        Acceptance::WeakOutput(outputs),
    )
    .expect("indicator automaton is well-formed");
    FunctionAutomaton::new(out)
}

/// `f(a . X) = a` over the binary alphabet: nonconstant and continuous.
pub fn first_letter_fn() -> FunctionAutomaton {
    let ab = Alphabet::new(2).unwrap();
    let a = OmegaAutomaton::new(
        ab,
        0,
        vec![vec![1, 2], vec![1, 1], vec![2, 2]],
        Acceptance::WeakOutput(vec![Rat::zero(), Rat::zero(), Rat::one()]),
    )
    .unwrap();
    FunctionAutomaton::new(a).unwrap()
}

/// Clopen three-valued function: 0 on `[00]`, 1/2 on `[01]`, 1 on `[1]`.
pub fn two_letter_three_values() -> FunctionAutomaton {
    let ab = Alphabet::new(2).unwrap();
    let a = OmegaAutomaton::new(
        ab,
        0,
        vec![vec![1, 4], vec![2, 3], vec![2, 2], vec![3, 3], vec![4, 4]],
        Acceptance::WeakOutput(vec![
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::new(1, 2),
            Rat::one(),
        ]),
    )
    .unwrap();
    FunctionAutomaton::new(a).unwrap()
}

/// Indicator of "the first two letters agree": clopen, hence continuous.
pub fn prefix_pair_indicator() -> FunctionAutomaton {
    let ab = Alphabet::new(2).unwrap();
    let a = OmegaAutomaton::new(
        ab,
        0,
        vec![vec![1, 2], vec![3, 4], vec![4, 3], vec![3, 3], vec![4, 4]],
        Acceptance::WeakOutput(vec![
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::one(),
            Rat::zero(),
        ]),
    )
    .unwrap();
    FunctionAutomaton::new(a).unwrap()
}

/// Lower staircase over the one-counter: 0 on no ones, 1/2 on exactly one,
/// 1 on two or more.
pub fn staircase_fn() -> FunctionAutomaton {
    counter_fn(&[Rat::zero(), Rat::new(1, 2), Rat::one()])
}

/// Upper staircase: the lower one flipped.
pub fn staircase_flipped() -> FunctionAutomaton {
    counter_fn(&[Rat::one(), Rat::new(1, 2), Rat::zero()])
}

fn counter_fn(values: &[Rat]) -> FunctionAutomaton {
    let ab = Alphabet::new(2).unwrap();
    let n = values.len();
    let delta: Vec<Vec<StateId>> = (0..n).map(|c| vec![c, (c + 1).min(n - 1)]).collect();
    let a = OmegaAutomaton::new(ab, 0, delta, Acceptance::WeakOutput(values.to_vec())).unwrap();
    FunctionAutomaton::new(a).unwrap()
}

/// Indicator scaled to range {0, 1/2}.
pub fn half_indicator(a: &OmegaAutomaton) -> Result<FunctionAutomaton> {
    let f = char_fun(a)?;
    let outputs = f
        .automaton()
        .outputs()
        .iter()
        .map(|&v| v * Rat::new(1, 2))
        .collect();
    let out = OmegaAutomaton::new(
        f.automaton().alphabet(),
        f.automaton().initial(),
        f.automaton().delta().to_vec(),
        Acceptance::WeakOutput(outputs),
    )
    .expect("scaled automaton is well-formed");
    FunctionAutomaton::new(out)
}

/// Value interleaving of {0,1}-valued blocks: on `0^n 1 X` the output is
/// `weights[2n + 1 - f_n(X)]`, and the residual cylinder `0^|fs|` together
/// with `0^w` goes to 0. Weights must be strictly decreasing, positive, and
/// exactly `2 |fs| + 2` long.
pub fn interleave(fs: &[&FunctionAutomaton], weights: &[Rat]) -> Result<FunctionAutomaton> {
    let count = fs.len();
    if weights.len() != 2 * count + 2 {
        return Err(Error::NotDecreasing);
    }
    if weights.windows(2).any(|w| w[0] <= w[1]) || weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::NotDecreasing);
    }
    let ab = Alphabet::new(2).unwrap();
    for f in fs {
        if f.automaton().alphabet() != ab {
            return Err(Error::AlphabetMismatch(
                "interleave blocks are binary".into(),
            ));
        }
        let boolean = f
            .automaton()
            .outputs()
            .iter()
            .all(|&v| v == Rat::zero() || v == Rat::one());
        if !boolean {
            return Err(Error::NotBooleanValued);
        }
    }

    // spine 0..count-1, terminal at `count`, then the block copies
    let mut delta: Vec<Vec<StateId>> = (0..count).map(|i| vec![i + 1, 0]).collect();
    delta.push(vec![count, count]);
    let mut outputs: Vec<Rat> = vec![Rat::zero(); count + 1];
    for (n, f) in fs.iter().enumerate() {
        let a = f.automaton();
        let off = delta.len();
        delta[n][1] = off + a.initial();
        for s in 0..a.state_count() {
            delta.push(vec![a.step(s, 0) + off, a.step(s, 1) + off]);
            let bit = usize::from(a.outputs()[s] == Rat::one());
            outputs.push(weights[2 * n + 1 - bit]);
        }
    }
    let out = OmegaAutomaton::new(ab, 0, delta, Acceptance::WeakOutput(outputs))
        .expect("interleave automaton is well-formed");
    FunctionAutomaton::new(out)
}
