//! File loading and the certificate document format.

use std::path::Path;

use serde::{Deserialize, Serialize};

use wadgelab::automata::{automaton_from_json, OmegaAutomaton};
use wadgelab::games::MealyStrategy;
use wadgelab::realfun::{validate_stable, FunctionAutomaton, StabilityCheck};
use wadgelab::wadge::TwoBotPair;
use wadgelab::Rat;

pub fn load_parity(path: &Path) -> Result<OmegaAutomaton, String> {
    let a = load_automaton(path)?;
    if !a.is_parity() {
        return Err(format!("{}: expected parity acceptance", path.display()));
    }
    Ok(a)
}

fn load_automaton(path: &Path) -> Result<OmegaAutomaton, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    automaton_from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load_function(path: &Path) -> Result<FunctionAutomaton, String> {
    let a = load_automaton(path)?;
    if a.is_parity() {
        return Err(format!(
            "{}: expected weak-output acceptance",
            path.display()
        ));
    }
    if let StabilityCheck::Violation {
        state_a,
        state_b,
        witness,
    } = validate_stable(&a)
    {
        return Err(format!(
            "{}: outputs oscillate between states {state_a} and {state_b}; witness lasso {witness}",
            path.display()
        ));
    }
    FunctionAutomaton::new(a).map_err(|e| format!("{}: {e}", path.display()))
}

/// Pair file: `{"zero": <automaton>, "one": <automaton>}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    zero: serde_json::Value,
    one: serde_json::Value,
}

pub fn load_pair(path: &Path) -> Result<TwoBotPair, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc: PairDoc =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let zero = automaton_from_json(&doc.zero.to_string())
        .map_err(|e| format!("{}: zero part: {e}", path.display()))?;
    let one = automaton_from_json(&doc.one.to_string())
        .map_err(|e| format!("{}: one part: {e}", path.display()))?;
    TwoBotPair::new(zero, one).map_err(|e| format!("{}: {e}", path.display()))
}

/// Verdict document printed by `cmp` and replayed by `certify`.
#[derive(Serialize, Deserialize)]
pub struct CmpDocument {
    pub verdict: bool,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<MealyStrategy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentCert>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelCert>>,
}

#[derive(Serialize, Deserialize)]
pub struct ComponentCert {
    pub source: usize,
    pub target: usize,
    pub strategy: MealyStrategy,
}

#[derive(Serialize, Deserialize)]
pub struct LevelCert {
    pub f_low: Rat,
    pub f_high: Rat,
    pub g_low: Rat,
    pub g_high: Rat,
    pub strategy: MealyStrategy,
}
