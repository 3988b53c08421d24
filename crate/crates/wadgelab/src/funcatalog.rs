//! The function catalog: named output automata spanning ranks one through
//! four in every realizable sided type. Expected classifications are frozen
//! from hand derivations; the selfcheck suite re-derives them on both
//! pipelines.

use crate::automata::Alphabet;
use crate::bourgain::SidedType;
use crate::error::Result;
use crate::rational::Rat;
use crate::realfun::{
    char_fun, constant_fn, first_letter_fn, half_indicator, interleave, prefix_pair_indicator,
    staircase_flipped, staircase_fn, two_letter_three_values, FunctionAutomaton,
};
use crate::wadge::catalog::{delta_ji, delta_jr, pi_complete, sigma_complete};

pub struct CatalogFunction {
    pub name: &'static str,
    pub fun: FunctionAutomaton,
    pub alpha: usize,
    pub sided: SidedType,
    pub m_rank: usize,
}

fn entry(
    name: &'static str,
    fun: FunctionAutomaton,
    alpha: usize,
    sided: SidedType,
    m_rank: usize,
) -> CatalogFunction {
    CatalogFunction {
        name,
        fun,
        alpha,
        sided,
        m_rank,
    }
}

/// Interleaving of the level-`n` indicator blocks from both sides of the
/// hierarchy; its level pairs isolate one block each, so the family joins
/// without a dominating component.
fn jr_interleave(ab: Alphabet, n: usize) -> Result<FunctionAutomaton> {
    let s = char_fun(&sigma_complete(ab, n))?;
    let p = char_fun(&pi_complete(ab, n))?;
    let weights = [6, 5, 4, 3, 2, 1].map(Rat::int);
    interleave(&[&s, &p], &weights)
}

/// Twenty-two functions covering ranks 1..=4 and every type realizable at
/// each rank.
pub fn function_catalog() -> Result<Vec<CatalogFunction>> {
    use SidedType::*;
    let ab = Alphabet::new(2).unwrap();
    let mut out = Vec::new();

    out.push(entry("const-0", constant_fn(ab, Rat::zero()), 1, O, 0));
    out.push(entry("const-1", constant_fn(ab, Rat::one()), 1, O, 0));
    out.push(entry("const-3-5", constant_fn(ab, Rat::new(3, 5)), 1, O, 0));
    out.push(entry("first-letter", first_letter_fn(), 1, T, 1));
    out.push(entry("clopen-3val", two_letter_three_values(), 1, T, 1));
    out.push(entry("prefix-pair", prefix_pair_indicator(), 1, T, 1));

    out.push(entry(
        "chi-sigma-1",
        char_fun(&sigma_complete(ab, 1))?,
        2,
        L,
        2,
    ));
    out.push(entry("staircase", staircase_fn(), 2, L, 2));
    out.push(entry(
        "half-sigma-1",
        half_indicator(&sigma_complete(ab, 1))?,
        2,
        L,
        2,
    ));
    out.push(entry("chi-pi-1", char_fun(&pi_complete(ab, 1))?, 2, R, 2));
    out.push(entry("staircase-flip", staircase_flipped(), 2, R, 2));
    out.push(entry("interleave-2", jr_interleave(ab, 1)?, 2, O, 3));
    out.push(entry(
        "chi-delta-jr-2",
        char_fun(&delta_jr(ab, 2)?)?,
        2,
        T,
        4,
    ));
    out.push(entry(
        "chi-delta-ji-2",
        char_fun(&delta_ji(ab, 2)?)?,
        2,
        T,
        4,
    ));

    out.push(entry(
        "chi-sigma-2",
        char_fun(&sigma_complete(ab, 2))?,
        3,
        L,
        5,
    ));
    out.push(entry("chi-pi-2", char_fun(&pi_complete(ab, 2))?, 3, R, 5));
    out.push(entry("interleave-3", jr_interleave(ab, 2)?, 3, O, 6));
    out.push(entry(
        "chi-delta-jr-3",
        char_fun(&delta_jr(ab, 3)?)?,
        3,
        T,
        7,
    ));

    out.push(entry(
        "chi-sigma-3",
        char_fun(&sigma_complete(ab, 3))?,
        4,
        L,
        8,
    ));
    out.push(entry("chi-pi-3", char_fun(&pi_complete(ab, 3))?, 4, R, 8));
    out.push(entry("interleave-4", jr_interleave(ab, 3)?, 4, O, 9));
    out.push(entry(
        "chi-delta-jr-4",
        char_fun(&delta_jr(ab, 4)?)?,
        4,
        T,
        10,
    ));

    Ok(out)
}
