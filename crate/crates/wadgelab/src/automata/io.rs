use serde::{Deserialize, Serialize};

use super::{Acceptance, Alphabet, OmegaAutomaton};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Wire form of an automaton. Field order is fixed; unknown fields are
/// rejected; emission is byte-stable for a given automaton.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonDoc {
    alphabet: usize,
    states: usize,
    initial: usize,
    delta: Vec<Vec<usize>>,
    acceptance: AcceptanceDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum AcceptanceDoc {
    #[serde(rename = "parity")]
    Parity { priorities: Vec<usize> },
    #[serde(rename = "weak-output")]
    WeakOutput { outputs: Vec<Rat> },
}

pub fn automaton_to_json(a: &OmegaAutomaton) -> String {
    let doc = AutomatonDoc {
        alphabet: a.alphabet().size(),
        states: a.state_count(),
        initial: a.initial(),
        delta: a.delta().to_vec(),
        acceptance: match a.acceptance() {
            Acceptance::Parity(p) => AcceptanceDoc::Parity {
                priorities: p.clone(),
            },
            Acceptance::WeakOutput(o) => AcceptanceDoc::WeakOutput { outputs: o.clone() },
        },
    };
    serde_json::to_string(&doc).expect("automaton serialization cannot fail")
}

/// Parse and validate; incomplete parity tables are completed with an
/// explicit rejecting sink.
pub fn automaton_from_json(text: &str) -> Result<OmegaAutomaton> {
    let doc: AutomatonDoc =
        serde_json::from_str(text).map_err(|e| Error::InvalidAutomaton(format!("{e}")))?;
    let alphabet = Alphabet::new(doc.alphabet)?;
    if doc.states != doc.delta.len() {
        return Err(Error::InvalidAutomaton(format!(
            "states field says {}, delta has {} rows",
            doc.states,
            doc.delta.len()
        )));
    }
    if doc.states == 0 {
        return Err(Error::InvalidAutomaton("no states".into()));
    }
    let k = alphabet.size();
    let incomplete = doc.delta.iter().any(|row| row.len() < k);
    let mut delta = doc.delta;
    let mut acceptance = match doc.acceptance {
        AcceptanceDoc::Parity { priorities } => Acceptance::Parity(priorities),
        AcceptanceDoc::WeakOutput { outputs } => Acceptance::WeakOutput(outputs),
    };
    if incomplete {
        match &mut acceptance {
            Acceptance::Parity(prios) => {
                let sink = delta.len();
                for row in &mut delta {
                    if row.len() > k {
                        return Err(Error::InvalidAutomaton(
                            "delta row longer than alphabet".into(),
                        ));
                    }
                    while row.len() < k {
                        row.push(sink);
                    }
                }
                delta.push(vec![sink; k]);
                prios.push(1);
            }
            Acceptance::WeakOutput(_) => {
                return Err(Error::InvalidAutomaton(
                    "weak-output automata must be complete; a rejecting sink has no output".into(),
                ));
            }
        }
    }
    OmegaAutomaton::new(alphabet, doc.initial, delta, acceptance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_identity_and_field_order_is_fixed() {
        let text = r#"{"alphabet":2,"states":2,"initial":0,"delta":[[0,1],[1,1]],"acceptance":{"kind":"parity","priorities":[1,0]}}"#;
        let a = automaton_from_json(text).unwrap();
        assert_eq!(automaton_to_json(&a), text);
    }

    #[test]
    fn weak_output_roundtrip() {
        let text = r#"{"alphabet":2,"states":1,"initial":0,"delta":[[0,0]],"acceptance":{"kind":"weak-output","outputs":["1/2"]}}"#;
        let a = automaton_from_json(text).unwrap();
        assert_eq!(automaton_to_json(&a), text);
    }

    #[test]
    fn short_parity_rows_get_a_sink() {
        let text = r#"{"alphabet":2,"states":1,"initial":0,"delta":[[0]],"acceptance":{"kind":"parity","priorities":[0]}}"#;
        let a = automaton_from_json(text).unwrap();
        assert_eq!(a.state_count(), 2);
        let w = crate::automata::LassoWord::new(vec![1], vec![0]).unwrap();
        assert!(!a.accepts_lasso(&w).unwrap());
        let stay = crate::automata::LassoWord::new(vec![], vec![0]).unwrap();
        assert!(a.accepts_lasso(&stay).unwrap());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"alphabet":2,"states":1,"initial":0,"delta":[[0,0]],"acceptance":{"kind":"parity","priorities":[0]},"extra":1}"#;
        assert!(automaton_from_json(text).is_err());
    }

    #[test]
    fn incomplete_weak_output_is_an_error() {
        let text = r#"{"alphabet":2,"states":1,"initial":0,"delta":[[0]],"acceptance":{"kind":"weak-output","outputs":["0/1"]}}"#;
        assert!(automaton_from_json(text).is_err());
    }
}
